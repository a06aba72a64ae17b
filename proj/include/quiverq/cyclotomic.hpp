#pragma once

// Scalar fields carrying a primitive n-th root of unity q.
//
// Two backends share one interface (the ScalarField concept below):
//   CyclotomicField  exact arithmetic in Q(zeta_n) = Q[x]/Phi_n
//   PrimeField       arithmetic in F_p with p = 1 (mod n) and a fixed
//                    primitive n-th root r standing in for q
//
// Elements are plain values; all arithmetic goes through the (immutable)
// field object, so a field may be shared freely between threads.

#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace quiverq {

using IntPoly = std::vector<long long>;  // coefficient k multiplies x^k

/// Phi_n, computed as (x^n - 1) / prod_{d | n, d < n} Phi_d.
IntPoly cyclotomic_polynomial(int n);

/// Exact division of integer polynomials; throws if the remainder is nonzero.
IntPoly divide_exact(const IntPoly& num, const IntPoly& den);

IntPoly multiply(const IntPoly& a, const IntPoly& b);

int euler_phi(int n);

/// e = n for odd n, n/2 for even n.
int nilpotency_order(int n);

template <class F>
concept ScalarField = requires(const F& f, const typename F::Elem& a, long long k) {
  { f.zero() } -> std::same_as<typename F::Elem>;
  { f.one() } -> std::same_as<typename F::Elem>;
  { f.from_int(k) } -> std::same_as<typename F::Elem>;
  { f.q_power(k) } -> std::same_as<typename F::Elem>;
  { f.add(a, a) } -> std::same_as<typename F::Elem>;
  { f.sub(a, a) } -> std::same_as<typename F::Elem>;
  { f.neg(a) } -> std::same_as<typename F::Elem>;
  { f.mul(a, a) } -> std::same_as<typename F::Elem>;
  { f.inv(a) } -> std::same_as<typename F::Elem>;
  { f.pow(a, k) } -> std::same_as<typename F::Elem>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.equal(a, a) } -> std::same_as<bool>;
  { f.to_string(a) } -> std::same_as<std::string>;
  { f.order() } -> std::same_as<int>;
};

struct Cyclotomic {
  std::vector<mpq_class> coeffs;  // basis 1, q, ..., q^{phi(n)-1}
};

class CyclotomicField {
 public:
  using Elem = Cyclotomic;
  static constexpr bool exact = true;

  explicit CyclotomicField(int n);

  int order() const { return n_; }
  int e() const { return nilpotency_order(n_); }
  int degree() const { return static_cast<int>(phi_.size()) - 1; }
  const IntPoly& modulus() const { return phi_; }

  Elem zero() const;
  Elem one() const;
  Elem from_int(long long v) const;
  Elem from_rational(const mpq_class& v) const;
  Elem from_coefficients(std::vector<mpq_class> coeffs) const;
  Elem q() const { return q_power(1); }
  Elem q_power(long long k) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem pow(const Elem& a, long long k) const;

  bool is_zero(const Elem& a) const;
  bool equal(const Elem& a, const Elem& b) const;
  std::string to_string(const Elem& a) const;

 private:
  void reduce(std::vector<mpq_class>& c) const;

  int n_;
  IntPoly phi_;
  std::vector<Elem> q_powers_;
};

class PrimeField {
 public:
  using Elem = std::uint64_t;
  static constexpr bool exact = false;
  static constexpr std::uint64_t kDefaultPrimeFloor = std::uint64_t{1} << 30;

  /// Smallest prime p = 1 (mod n) strictly above `prime_floor`, with the
  /// smallest primitive n-th root of unity in F_p.
  explicit PrimeField(int n, std::uint64_t prime_floor = kDefaultPrimeFloor);

  /// Explicit prime and root; both are validated.
  PrimeField(int n, std::uint64_t prime, std::uint64_t root);

  int order() const { return n_; }
  int e() const { return nilpotency_order(n_); }
  std::uint64_t prime() const { return p_; }
  std::uint64_t root() const { return r_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem from_int(long long v) const;
  Elem from_rational(const mpq_class& v) const;
  Elem q() const { return r_; }
  Elem q_power(long long k) const;

  Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p_ ? s - p_ : s; }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
  Elem inv(Elem a) const;
  Elem pow(Elem a, long long k) const;

  bool is_zero(Elem a) const { return a == 0; }
  bool equal(Elem a, Elem b) const { return a == b; }
  std::string to_string(Elem a) const { return std::to_string(a); }

 private:
  int n_;
  std::uint64_t p_;
  std::uint64_t r_;
  std::vector<Elem> q_powers_;
};

static_assert(ScalarField<CyclotomicField>);
static_assert(ScalarField<PrimeField>);

bool is_prime(std::uint64_t v);

/// The ring map Q(zeta_n) -> F_p sending q to the chosen root r.
/// Denominators must be invertible modulo p.
PrimeField::Elem specialize(const Cyclotomic& a, const PrimeField& target);

}  // namespace quiverq
