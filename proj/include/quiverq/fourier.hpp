#pragma once

// Fourier transform between functions on G = (Z/nZ)^t (vertex masses) and the
// group algebra kG, and its extension to the presentation with generators
// K_i, E_i:
//
//   chi(d_c)       = |G|^-1 sum_x q^{-c.x} K^x
//   chi^-1(K^a)    = sum_x q^{a.x} d_x
//   chi_q(A(c, i)) = chi(d_c) E_i
//   Psi(K^m)       = chi^-1(K^m),   Psi(E_i) = sum_x A(x, i)
//
// Presentation elements are kept as K^m (E-word); K's are moved left with
// E_j K^m = q^{-sum_i m_i a_ij} K^m E_j. E-words are free.

#include <string>
#include <utility>
#include <vector>

#include "quiverq/ideal.hpp"
#include "quiverq/path_algebra.hpp"

namespace quiverq {

struct Monomial {
  std::vector<int> k;  // exponents of K_1 .. K_t, reduced mod n
  std::vector<int> e;  // E-word, left to right, letters 0 .. t-1
  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

template <ScalarField F>
using PresentationElement = Combination<Monomial, typename F::Elem>;

template <ScalarField F>
class Fourier {
 public:
  using Elem = typename F::Elem;
  using Element = AlgebraElement<F>;
  using Pres = PresentationElement<F>;

  /// Throws PrimeUnavailable when |G| is not invertible in the field.
  Fourier(const CayleyQuiver& cq, const F& field) : cq_(&cq), f_(&field), algebra_(cq.quiver(), field) {
    const Elem order = f_->from_int(static_cast<long long>(cq.group_order()));
    if (f_->is_zero(order)) throw PrimeUnavailable("|G| is not invertible in the scalar field");
    inverse_order_ = f_->inv(order);
  }

  const PathAlgebra<F>& algebra() const { return algebra_; }

  Monomial k_monomial(VertexId m) const { return Monomial{cq_->exponents(m), {}}; }

  Pres k_element(VertexId m) const {
    Pres out;
    accumulate(*f_, out, k_monomial(m), f_->one());
    return out;
  }

  Pres e_word(const std::vector<int>& word) const {
    Pres out;
    accumulate(*f_, out, Monomial{std::vector<int>(static_cast<std::size_t>(cq_->rank()), 0), word}, f_->one());
    return out;
  }

  Pres one() const { return k_element(cq_->identity()); }

  Pres multiply(const Pres& a, const Pres& b) const {
    Pres out;
    const int t = cq_->rank();
    for (const auto& [ma, ca] : a.terms) {
      for (const auto& [mb, cb] : b.terms) {
        // Move K^{mb.k} left past the E-word of ma.
        long long exponent = 0;
        for (int j : ma.e)
          for (int i = 0; i < t; ++i) exponent -= static_cast<long long>(mb.k[static_cast<std::size_t>(i)]) * cq_->cartan()(i, j);
        Monomial m;
        m.k.resize(static_cast<std::size_t>(t));
        for (std::size_t i = 0; i < m.k.size(); ++i) m.k[i] = (ma.k[i] + mb.k[i]) % cq_->n();
        m.e = ma.e;
        m.e.insert(m.e.end(), mb.e.begin(), mb.e.end());
        accumulate(*f_, out, m, f_->mul(f_->mul(ca, cb), f_->q_power(exponent)));
      }
    }
    return out;
  }

  Pres add(const Pres& a, const Pres& b) const { return combine(*f_, a, f_->one(), b, f_->one()); }
  Pres scale(const Pres& a, const Elem& c) const { return combine(*f_, a, c, Pres{}, f_->zero()); }
  bool equal(const Pres& a, const Pres& b) const { return quiverq::equal(*f_, a, b); }

  Pres chi(VertexId c) const {
    Pres out;
    for (VertexId x = 0; x < cq_->group_order(); ++x)
      accumulate(*f_, out, k_monomial(x), f_->mul(inverse_order_, f_->q_power(-cq_->pairing(c, x))));
    return out;
  }

  /// chi on a combination of vertex masses; throws on positive-length paths.
  Pres chi(const Element& a) const {
    Pres out;
    for (const auto& [p, c] : a.terms) {
      if (!p.trivial()) throw Error("chi expects vertex masses");
      out = add(out, scale(chi(p.target), c));
    }
    return out;
  }

  Element chi_inverse(VertexId m) const {
    Element out;
    for (VertexId x = 0; x < cq_->group_order(); ++x)
      accumulate(*f_, out, Path::vertex(x), f_->q_power(cq_->pairing(m, x)));
    return out;
  }

  /// chi^-1 on the K-part of a presentation element without E-letters.
  Element chi_inverse(const Pres& a) const {
    Element out;
    for (const auto& [m, c] : a.terms) {
      if (!m.e.empty()) throw Error("chi_inverse expects a group-algebra element");
      algebra_.add_to(out, chi_inverse(cq_->vertex(m.k)), c);
    }
    return out;
  }

  Pres chi_q(const Path& p) const {
    if (p.trivial()) return chi(p.target);
    Pres out;
    bool first = true;
    for (ArrowId a : p.arrows) {
      Pres factor = multiply(chi(cq_->quiver().target(a)), e_word({cq_->direction(a)}));
      out = first ? factor : multiply(out, factor);
      first = false;
    }
    return out;
  }

  Pres chi_q(const Element& a) const {
    Pres out;
    for (const auto& [p, c] : a.terms) out = add(out, scale(chi_q(p), c));
    return out;
  }

  Element psi_e(int i) const {
    Element out;
    for (VertexId x = 0; x < cq_->group_order(); ++x) algebra_.add_to(out, Path::arrow(cq_->quiver(), cq_->arrow(x, i)), f_->one());
    return out;
  }

  Element psi_k(int i) const {
    std::vector<int> m(static_cast<std::size_t>(cq_->rank()), 0);
    m[static_cast<std::size_t>(i)] = 1;
    return chi_inverse(cq_->vertex(m));
  }

  Element psi(const Monomial& m) const {
    Element out = chi_inverse(cq_->vertex(m.k));
    for (int l : m.e) out = algebra_.multiply(out, psi_e(l));
    return out;
  }

  Element psi(const Pres& a) const {
    Element out;
    for (const auto& [m, c] : a.terms) algebra_.add_to(out, psi(m), c);
    return out;
  }

  /// [chi_q]_0(d_c) [chi_q]_1(A(c, i)) [chi_q]_0(d_{c - a_i}) = [chi_q]_1(A(c, i)).
  bool bimodule_compatible(ArrowId a) const {
    const auto& q = cq_->quiver();
    const Pres mid = chi_q(Path::arrow(q, a));
    const Pres lhs = multiply(multiply(chi(q.target(a)), mid), chi(q.source(a)));
    return equal(lhs, mid);
  }

 private:
  const CayleyQuiver* cq_;
  const F* f_;
  PathAlgebra<F> algebra_;
  Elem inverse_order_;
};

/// The three type-II relation shapes as presentation elements.
template <ScalarField F>
PresentationElement<F> type_two_relation(const Fourier<F>& fourier, const F& f, RelationFamily family, int i, int j,
                                         int e) {
  switch (family) {
    case RelationFamily::directional_power:
      return fourier.e_word(std::vector<int>(static_cast<std::size_t>(e), i));
    case RelationFamily::commuting_square:
      return combine(f, fourier.e_word({i, j}), f.one(), fourier.e_word({j, i}), f.from_int(-1));
    case RelationFamily::quantum_serre: {
      auto out = fourier.e_word({i, i, j});
      out = combine(f, out, f.one(), fourier.e_word({i, j, i}), f.neg(f.add(f.q_power(1), f.q_power(-1))));
      return combine(f, out, f.one(), fourier.e_word({j, i, i}), f.one());
    }
    case RelationFamily::presentation:
      break;
  }
  throw Error("not a type-II family");
}

}  // namespace quiverq
