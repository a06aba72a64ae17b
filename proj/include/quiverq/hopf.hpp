#pragma once

// Coproduct and crossed tensor square on the path algebra of a Cayley
// quiver.
//
//   Delta d_c       = sum_x d_x (x) d_{c-x}
//   Delta A(c, i)   = sum_x q^{x_i} d_x (x) A(c-x, i) + A(x, i) (x) d_{c-x}
//
// extended multiplicatively to longer paths. The crossed product multiplies
// basis pairs legwise; moving a direction-j arrow of the left second leg past
// a direction-i arrow of the right first leg contributes q^{-a_ij}.

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "quiverq/path_algebra.hpp"
#include "quiverq/quotient.hpp"

namespace quiverq {

template <ScalarField F>
using TensorElement = Combination<std::pair<Path, Path>, typename F::Elem>;

template <ScalarField F>
using TripleTensor = Combination<std::tuple<Path, Path, Path>, typename F::Elem>;

enum class CoproductVariant {
  standard,
  drop_q_factor,  // coefficient 1 instead of q^{x_i}
  non_character,  // coefficient q^{x_i^2}
};

struct CheckResult {
  bool ok = true;
  std::string witness;  // first discrepancy, empty when ok
};

template <ScalarField F>
class Coproduct {
 public:
  using Elem = typename F::Elem;
  using Element = AlgebraElement<F>;
  using Tensor = TensorElement<F>;

  Coproduct(const CayleyQuiver& cq, const F& field, CoproductVariant variant = CoproductVariant::standard,
            std::size_t degree_cap = 0)
      : cq_(&cq), f_(&field), variant_(variant),
        degree_cap_(degree_cap ? degree_cap : 2 * static_cast<std::size_t>(nilpotency_order(cq.n()))) {}

  const CayleyQuiver& cayley() const { return *cq_; }
  const F& field() const { return *f_; }
  std::size_t degree_cap() const { return degree_cap_; }

  Tensor of_vertex(VertexId c) const {
    Tensor out;
    for (VertexId x = 0; x < cq_->group_order(); ++x)
      accumulate(*f_, out, {Path::vertex(x), Path::vertex(cq_->subtract(c, x))}, f_->one());
    return out;
  }

  Tensor of_arrow(ArrowId a) const {
    const VertexId c = cq_->quiver().target(a);
    const int i = cq_->direction(a);
    Tensor out;
    for (VertexId x = 0; x < cq_->group_order(); ++x) {
      const VertexId y = cq_->subtract(c, x);
      accumulate(*f_, out, {Path::vertex(x), Path::arrow(cq_->quiver(), cq_->arrow(y, i))}, coefficient(x, i));
      accumulate(*f_, out, {Path::arrow(cq_->quiver(), cq_->arrow(x, i)), Path::vertex(y)}, f_->one());
    }
    return out;
  }

  /// Throws DegreeCapExceeded for paths longer than the cap.
  Tensor of_path(const Path& p) const {
    if (p.length() > degree_cap_) throw DegreeCapExceeded("coproduct requested beyond the degree cap");
    if (p.trivial()) return of_vertex(p.target);
    Tensor out = of_arrow(p.arrows.front());
    for (std::size_t k = 1; k < p.arrows.size(); ++k) out = tensor_multiply(*f_, out, of_arrow(p.arrows[k]));
    return out;
  }

  Tensor operator()(const Element& a) const {
    Tensor out;
    for (const auto& [p, c] : a.terms) {
      for (const auto& [pp, v] : of_path(p).terms) accumulate(*f_, out, pp, f_->mul(c, v));
    }
    return out;
  }

  /// (Delta (x) id) Delta (a) against (id (x) Delta) Delta (a).
  CheckResult check_coassociativity(const Element& a) const {
    const Tensor d = (*this)(a);
    TripleTensor<F> left, right;
    std::map<Path, Tensor> cache;
    auto delta = [&](const Path& p) -> const Tensor& {
      auto it = cache.find(p);
      if (it == cache.end()) it = cache.emplace(p, of_path(p)).first;
      return it->second;
    };
    for (const auto& [pp, c] : d.terms) {
      for (const auto& [uv, w] : delta(pp.first).terms)
        accumulate(*f_, left, std::tuple{uv.first, uv.second, pp.second}, f_->mul(c, w));
      for (const auto& [uv, w] : delta(pp.second).terms)
        accumulate(*f_, right, std::tuple{pp.first, uv.first, uv.second}, f_->mul(c, w));
    }
    return compare(left, right);
  }

  Elem counit(const Element& a) const {
    Elem out = f_->zero();
    for (const auto& [p, c] : a.terms)
      if (p.trivial() && p.target == cq_->identity()) out = f_->add(out, c);
    return out;
  }

  /// (eps (x) id) Delta = id = (id (x) eps) Delta.
  CheckResult check_counit(const Element& a) const {
    const Tensor d = (*this)(a);
    Element left, right;
    for (const auto& [pp, c] : d.terms) {
      if (pp.first.trivial() && pp.first.target == cq_->identity()) accumulate(*f_, left, pp.second, c);
      if (pp.second.trivial() && pp.second.target == cq_->identity()) accumulate(*f_, right, pp.first, c);
    }
    if (!equal(*f_, left, a)) return {false, "(eps x id)Delta differs from id"};
    if (!equal(*f_, right, a)) return {false, "(id x eps)Delta differs from id"};
    return {};
  }

 private:
  Elem coefficient(VertexId x, int i) const {
    const long long xi = cq_->exponent(x, i);
    switch (variant_) {
      case CoproductVariant::standard:
        return f_->q_power(xi);
      case CoproductVariant::drop_q_factor:
        return f_->one();
      case CoproductVariant::non_character:
        return f_->q_power(xi * xi);
    }
    return f_->one();
  }

  CheckResult compare(const TripleTensor<F>& a, const TripleTensor<F>& b) const {
    TripleTensor<F> diff = combine(*f_, a, f_->one(), b, f_->from_int(-1));
    if (diff.empty()) return {};
    const auto& [key, c] = *diff.terms.begin();
    const auto& q = cq_->quiver();
    return {false, path_to_string(q, std::get<0>(key)) + " (x) " + path_to_string(q, std::get<1>(key)) + " (x) " +
                       path_to_string(q, std::get<2>(key)) + " has coefficient difference " + f_->to_string(c)};
  }

  const CayleyQuiver* cq_;
  const F* f_;
  CoproductVariant variant_;
  std::size_t degree_cap_;

 public:
  /// Legwise product in the plain tensor square of the path algebra.
  static Tensor tensor_multiply(const F& f, const Tensor& a, const Tensor& b) {
    Tensor out;
    std::map<std::pair<VertexId, VertexId>, std::vector<const std::pair<const std::pair<Path, Path>, Elem>*>> by_targets;
    for (const auto& term : b.terms) by_targets[{term.first.first.target, term.first.second.target}].push_back(&term);
    for (const auto& [pp, c] : a.terms) {
      auto it = by_targets.find({pp.first.source, pp.second.source});
      if (it == by_targets.end()) continue;
      for (const auto* term : it->second) {
        accumulate(f, out, {*compose(pp.first, term->first.first), *compose(pp.second, term->first.second)},
                   f.mul(c, term->second));
      }
    }
    return out;
  }
};

/// Leg swap.
template <ScalarField F>
TensorElement<F> opposite(const TensorElement<F>& a) {
  TensorElement<F> out;
  for (const auto& [pp, c] : a.terms) out.terms.emplace(std::pair{pp.second, pp.first}, c);
  return out;
}

/// Delta(g) reduced legwise in (k^Q/J) (x) (k^Q/J); true when it vanishes.
template <ScalarField F>
bool vanishes_in_quotient_square(const GradedQuotient<F>& quotient, const TensorElement<F>& a,
                                 std::map<Path, typename GradedQuotient<F>::Coordinates>& cache) {
  const F& f = quotient.field();
  auto coords = [&](const Path& p) -> const typename GradedQuotient<F>::Coordinates& {
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, quotient.path_coordinates(p)).first;
    return it->second;
  };
  Combination<std::pair<StandardId, StandardId>, typename F::Elem> acc;
  for (const auto& [pp, c] : a.terms) {
    const auto& left = coords(pp.first);
    if (left.empty()) continue;
    const auto& right = coords(pp.second);
    for (const auto& [s, u] : left)
      for (const auto& [s2, v] : right) accumulate(f, acc, std::pair{s, s2}, f.mul(c, f.mul(u, v)));
  }
  return acc.empty();
}

/// The crossed tensor square u (x)_q u on basis pairs of paths.
template <ScalarField F>
class CrossedProduct {
 public:
  using Elem = typename F::Elem;
  using Tensor = TensorElement<F>;

  CrossedProduct(const CayleyQuiver& cq, const F& field) : cq_(&cq), f_(&field) {}

  /// Exponent of q picked up when the second leg of the left factor passes
  /// the first leg of the right factor.
  long long exchange_exponent(const Path& left_second, const Path& right_first) const {
    long long s = 0;
    for (ArrowId b : left_second.arrows) {
      const int j = cq_->direction(b);
      for (ArrowId a : right_first.arrows) s -= cq_->cartan()(cq_->direction(a), j);
    }
    return s;
  }

  Tensor multiply(const Tensor& a, const Tensor& b) const {
    Tensor out;
    for (const auto& [p, c] : a.terms) {
      for (const auto& [r, d] : b.terms) {
        auto first = compose(p.first, r.first);
        if (!first) continue;
        auto second = compose(p.second, r.second);
        if (!second) continue;
        const Elem coeff = f_->mul(f_->mul(c, d), f_->q_power(exchange_exponent(p.second, r.first)));
        accumulate(*f_, out, {std::move(*first), std::move(*second)}, coeff);
      }
    }
    return out;
  }

  Tensor basis(const Path& p, const Path& p2, const Elem& c) const {
    Tensor out;
    accumulate(*f_, out, {p, p2}, c);
    return out;
  }
  Tensor basis(const Path& p, const Path& p2) const { return basis(p, p2, f_->one()); }

  /// phi on basis pairs. Degree 0 and 1 use the closed formulas
  ///   (K^x, K^y) -> (K^y, K^x)
  ///   (K^x, A(K^y, i)) -> q^{-x_i} (A(K^y, i), K^x)
  ///   (A(K^x, i), K^y) -> q^{y_i} (K^y, A(K^x, i));
  /// higher pairs are factored as prod_k (a_k, K^{t(p')}) * prod_l (K^{s(p)}, b_l)
  /// and mapped multiplicatively.
  Tensor phi(const Path& p, const Path& p2) const {
    const auto& q = cq_->quiver();
    if (p.trivial() && p2.trivial()) return basis(p2, p);
    if (p.trivial() && p2.length() == 1) {
      const int i = cq_->direction(p2.arrows[0]);
      return basis(p2, p, f_->q_power(-cq_->exponent(p.target, i)));
    }
    if (p.length() == 1 && p2.trivial()) {
      const int i = cq_->direction(p.arrows[0]);
      return basis(p2, p, f_->q_power(cq_->exponent(p2.target, i)));
    }
    std::optional<Tensor> acc;
    for (ArrowId a : p.arrows) {
      Tensor factor = phi(Path::arrow(q, a), Path::vertex(p2.target));
      acc = acc ? multiply(*acc, factor) : factor;
    }
    for (ArrowId b : p2.arrows) {
      Tensor factor = phi(Path::vertex(p.source), Path::arrow(q, b));
      acc = acc ? multiply(*acc, factor) : factor;
    }
    return *acc;
  }

  Tensor phi(const Tensor& a) const {
    Tensor out;
    for (const auto& [pp, c] : a.terms) {
      for (const auto& [rr, v] : phi(pp.first, pp.second).terms) accumulate(*f_, out, rr, f_->mul(c, v));
    }
    return out;
  }

  /// q^{a_ij} (K^c, A(K^d, j)) (A(K^c, i), K^{d - a_j})
  ///   = (A(K^c, i), K^d) (K^{c - a_i}, A(K^d, j))
  /// for every c, d, i, j.
  CheckResult check_mixed_square() const {
    const auto& q = cq_->quiver();
    const int t = cq_->rank();
    for (VertexId c = 0; c < cq_->group_order(); ++c) {
      for (VertexId d = 0; d < cq_->group_order(); ++d) {
        for (int i = 0; i < t; ++i) {
          for (int j = 0; j < t; ++j) {
            const Path ai = Path::arrow(q, cq_->arrow(c, i));
            const Path aj = Path::arrow(q, cq_->arrow(d, j));
            Tensor lhs = multiply(basis(Path::vertex(c), aj, f_->q_power(cq_->cartan()(i, j))),
                                  basis(ai, Path::vertex(cq_->subtract(d, cq_->column_element(j)))));
            Tensor rhs = multiply(basis(ai, Path::vertex(d)), basis(Path::vertex(cq_->subtract(c, cq_->column_element(i))), aj));
            if (!equal(*f_, lhs, rhs) || rhs.empty())
              return {false, "mixed square fails at c=" + q.vertex_name(c) + " d=" + q.vertex_name(d) +
                                 " i=" + std::to_string(i) + " j=" + std::to_string(j)};
          }
        }
      }
    }
    return {};
  }

 private:
  const CayleyQuiver* cq_;
  const F* f_;
};

/// All basis pairs (p, p') with |p| + |p'| <= 1.
template <ScalarField F>
std::vector<std::pair<Path, Path>> low_degree_pairs(const CayleyQuiver& cq) {
  const auto& q = cq.quiver();
  std::vector<std::pair<Path, Path>> out;
  for (VertexId x = 0; x < cq.group_order(); ++x)
    for (VertexId y = 0; y < cq.group_order(); ++y) out.push_back({Path::vertex(x), Path::vertex(y)});
  for (ArrowId a = 0; a < q.num_arrows(); ++a) {
    for (VertexId y = 0; y < cq.group_order(); ++y) {
      out.push_back({Path::arrow(q, a), Path::vertex(y)});
      out.push_back({Path::vertex(y), Path::arrow(q, a)});
    }
  }
  return out;
}

}  // namespace quiverq
