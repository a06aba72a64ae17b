#include "quiverq/cyclotomic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "quiverq/errors.hpp"

namespace quiverq {

namespace {

void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

using RatPoly = std::vector<mpq_class>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Division with remainder in Q[x]; divisor must be nonzero after trimming.
void divmod(const RatPoly& num, const RatPoly& den, RatPoly& quot, RatPoly& rem) {
  rem = num;
  trim(rem);
  const std::size_t dd = den.size() - 1;
  quot.assign(rem.size() >= den.size() ? rem.size() - dd : 0, mpq_class(0));
  while (!rem.empty() && rem.size() >= den.size()) {
    const std::size_t shift = rem.size() - den.size();
    mpq_class c = rem.back() / den.back();
    quot[shift] = c;
    for (std::size_t j = 0; j < den.size(); ++j) rem[shift + j] -= c * den[j];
    rem.pop_back();
    trim(rem);
  }
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

RatPoly poly_sub(const RatPoly& a, const RatPoly& b) {
  RatPoly out(std::max(a.size(), b.size()), mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 r = 1 % m, x = b % m;
  while (e) {
    if (e & 1) r = (r * x) % m;
    x = (x * x) % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool has_order_exactly(std::uint64_t r, int n, std::uint64_t p) {
  if (powmod(r, static_cast<std::uint64_t>(n), p) != 1) return false;
  for (int l : prime_factors(n)) {
    if (powmod(r, static_cast<std::uint64_t>(n / l), p) == 1) return false;
  }
  return true;
}

}  // namespace

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

IntPoly divide_exact(const IntPoly& num, const IntPoly& den) {
  IntPoly rem = num;
  trim(rem);
  IntPoly d = den;
  trim(d);
  if (d.size() == 1 && d[0] == 0) throw DivisionByZero();
  if (rem.size() < d.size()) {
    if (rem.size() == 1 && rem[0] == 0) return {0};
    throw Error("divide_exact: nonzero remainder");
  }
  IntPoly quot(rem.size() - d.size() + 1, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    long long top = rem[k + d.size() - 1];
    if (top % d.back() != 0) throw Error("divide_exact: non-integral quotient");
    long long c = top / d.back();
    quot[k] = c;
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= c * d[j];
  }
  if (std::any_of(rem.begin(), rem.end(), [](long long v) { return v != 0; }))
    throw Error("divide_exact: nonzero remainder");
  trim(quot);
  return quot;
}

IntPoly cyclotomic_polynomial(int n) {
  if (n < 1) throw Error("cyclotomic_polynomial: n must be positive");
  IntPoly num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[n] = 1;
  IntPoly den{1};
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) den = multiply(den, cyclotomic_polynomial(d));
  }
  return divide_exact(num, den);
}

int euler_phi(int n) {
  int result = n;
  for (int l : prime_factors(n)) result = result / l * (l - 1);
  return result;
}

int nilpotency_order(int n) { return n % 2 == 0 ? n / 2 : n; }

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (v % d == 0) return v == d;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = v - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, v);
    if (x == 1 || x == v - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * x) % v);
      if (x == v - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// ---------------------------------------------------------------- exact

CyclotomicField::CyclotomicField(int n) : n_(n), phi_(cyclotomic_polynomial(n)) {
  q_powers_.reserve(static_cast<std::size_t>(n));
  Elem x = one();
  Elem gen = zero();
  if (degree() == 1) {
    gen.coeffs[0] = mpq_class(static_cast<long>(-phi_[0]));  // linear Phi_n: q is rational
  } else {
    gen.coeffs[1] = 1;
  }
  for (int k = 0; k < n; ++k) {
    q_powers_.push_back(x);
    x = mul(x, gen);
  }
}

void CyclotomicField::reduce(std::vector<mpq_class>& c) const {
  const std::size_t deg = static_cast<std::size_t>(degree());
  for (std::size_t k = c.size(); k-- > deg;) {
    if (c[k] == 0) continue;
    mpq_class top = c[k];
    for (std::size_t j = 0; j <= deg; ++j) c[k - deg + j] -= top * static_cast<long>(phi_[j]);
  }
  c.resize(deg, mpq_class(0));
}

Cyclotomic CyclotomicField::zero() const {
  return Cyclotomic{std::vector<mpq_class>(static_cast<std::size_t>(degree()), mpq_class(0))};
}

Cyclotomic CyclotomicField::one() const { return from_int(1); }

Cyclotomic CyclotomicField::from_int(long long v) const { return from_rational(mpq_class(static_cast<long>(v))); }

Cyclotomic CyclotomicField::from_rational(const mpq_class& v) const {
  Elem out = zero();
  out.coeffs[0] = v;
  return out;
}

Cyclotomic CyclotomicField::from_coefficients(std::vector<mpq_class> coeffs) const {
  reduce(coeffs);
  return Cyclotomic{std::move(coeffs)};
}

Cyclotomic CyclotomicField::q_power(long long k) const {
  long long r = k % n_;
  if (r < 0) r += n_;
  return q_powers_[static_cast<std::size_t>(r)];
}

Cyclotomic CyclotomicField::add(const Elem& a, const Elem& b) const {
  Elem out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

Cyclotomic CyclotomicField::sub(const Elem& a, const Elem& b) const {
  Elem out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] -= b.coeffs[i];
  return out;
}

Cyclotomic CyclotomicField::neg(const Elem& a) const {
  Elem out = a;
  for (auto& c : out.coeffs) c = -c;
  return out;
}

Cyclotomic CyclotomicField::mul(const Elem& a, const Elem& b) const {
  const std::size_t deg = static_cast<std::size_t>(degree());
  std::vector<mpq_class> prod(2 * deg - 1, mpq_class(0));
  for (std::size_t i = 0; i < deg; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      if (b.coeffs[j] == 0) continue;
      prod[i + j] += a.coeffs[i] * b.coeffs[j];
    }
  }
  reduce(prod);
  return Cyclotomic{std::move(prod)};
}

Cyclotomic CyclotomicField::inv(const Elem& a) const {
  if (is_zero(a)) throw DivisionByZero();
  // Extended Euclid in Q[x]: s * a = g (mod Phi_n) with g a nonzero constant.
  RatPoly r0;
  for (long long c : phi_) r0.emplace_back(static_cast<long>(c));
  RatPoly r1(a.coeffs.begin(), a.coeffs.end());
  trim(r0);
  trim(r1);
  RatPoly s0, s1{mpq_class(1)};
  while (!r1.empty()) {
    RatPoly quot, rem;
    divmod(r0, r1, quot, rem);
    RatPoly s2 = poly_sub(s0, poly_mul(quot, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw Error("cyclotomic inverse: modulus is not irreducible");
  for (auto& c : s0) c /= r0[0];
  s0.resize(std::max<std::size_t>(s0.size(), static_cast<std::size_t>(degree())), mpq_class(0));
  return from_coefficients(std::move(s0));
}

Cyclotomic CyclotomicField::pow(const Elem& a, long long k) const {
  Elem base = k < 0 ? inv(a) : a;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  Elem result = one();
  while (e) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

bool CyclotomicField::is_zero(const Elem& a) const {
  return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](const mpq_class& c) { return c == 0; });
}

bool CyclotomicField::equal(const Elem& a, const Elem& b) const { return a.coeffs == b.coeffs; }

std::string CyclotomicField::to_string(const Elem& a) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < a.coeffs.size(); ++k) {
    const mpq_class& c = a.coeffs[k];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    mpq_class m = abs(c);
    if (k == 0) {
      os << m.get_str();
    } else {
      if (m != 1) os << m.get_str() << "*";
      os << "q";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------- modular

PrimeField::PrimeField(int n, std::uint64_t prime_floor) : n_(n), p_(0), r_(0) {
  if (n < 1) throw Error("PrimeField: n must be positive");
  const std::uint64_t step = static_cast<std::uint64_t>(n);
  std::uint64_t candidate = prime_floor + 1;
  candidate += (step - (candidate - 1) % step) % step;  // candidate = 1 (mod n)
  for (; candidate < (std::uint64_t{1} << 32); candidate += step) {
    if (is_prime(candidate)) break;
  }
  if (candidate >= (std::uint64_t{1} << 32) || !is_prime(candidate))
    throw PrimeUnavailable("no prime p = 1 (mod " + std::to_string(n) + ") below 2^32 above the floor");
  p_ = candidate;

  // x^((p-1)/n) is an n-th root of unity; once one of exact order n turns up,
  // every primitive root is a power of it coprime to n.
  std::uint64_t h = 0;
  for (std::uint64_t x = 2; x < p_; ++x) {
    std::uint64_t c = powmod(x, (p_ - 1) / step, p_);
    if (has_order_exactly(c, n, p_)) {
      h = c;
      break;
    }
  }
  if (n == 1) h = 1;
  if (h == 0) throw PrimeUnavailable("no primitive root of unity found");
  std::uint64_t best = p_;
  for (int k = 1; k <= n; ++k) {
    if (std::gcd(k, n) != 1) continue;
    best = std::min(best, powmod(h, static_cast<std::uint64_t>(k), p_));
  }
  r_ = best;
  q_powers_.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) q_powers_.push_back(powmod(r_, static_cast<std::uint64_t>(k), p_));
}

PrimeField::PrimeField(int n, std::uint64_t prime, std::uint64_t root) : n_(n), p_(prime), r_(root % prime) {
  if (prime >= (std::uint64_t{1} << 32) || !is_prime(prime)) throw PrimeUnavailable("modulus is not a prime below 2^32");
  if ((prime - 1) % static_cast<std::uint64_t>(n) != 0) throw PrimeUnavailable("prime is not 1 mod n");
  if (!has_order_exactly(r_, n, p_)) throw PrimeUnavailable("root is not a primitive n-th root of unity");
  for (int k = 0; k < n; ++k) q_powers_.push_back(powmod(r_, static_cast<std::uint64_t>(k), p_));
}

PrimeField::Elem PrimeField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += static_cast<long long>(p_);
  return static_cast<Elem>(r);
}

PrimeField::Elem PrimeField::from_rational(const mpq_class& v) const {
  mpz_class num = v.get_num() % mpz_class(static_cast<unsigned long>(p_));
  mpz_class den = v.get_den() % mpz_class(static_cast<unsigned long>(p_));
  if (num < 0) num += static_cast<unsigned long>(p_);
  if (den == 0) throw DivisionByZero();
  return mul(static_cast<Elem>(num.get_ui()), inv(static_cast<Elem>(den.get_ui())));
}

PrimeField::Elem PrimeField::q_power(long long k) const {
  long long r = k % n_;
  if (r < 0) r += n_;
  return q_powers_[static_cast<std::size_t>(r)];
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a % p_ == 0) throw DivisionByZero();
  return powmod(a, p_ - 2, p_);
}

PrimeField::Elem PrimeField::pow(Elem a, long long k) const {
  if (k < 0) return powmod(inv(a), static_cast<std::uint64_t>(-k), p_);
  return powmod(a, static_cast<std::uint64_t>(k), p_);
}

PrimeField::Elem specialize(const Cyclotomic& a, const PrimeField& target) {
  PrimeField::Elem acc = 0;
  PrimeField::Elem rk = 1;
  for (const auto& c : a.coeffs) {
    if (c != 0) acc = target.add(acc, target.mul(target.from_rational(c), rk));
    rk = target.mul(rk, target.root());
  }
  return acc;
}

}  // namespace quiverq
