#pragma once

// Generators of the ideal J of a Cayley quiver, and small presentations on
// one-vertex quivers with loops (letters are loops, arrow id = letter index).

#include <string>
#include <vector>

#include "quiverq/path_algebra.hpp"

namespace quiverq {

enum class RelationFamily { directional_power, commuting_square, quantum_serre, presentation };

inline std::string to_string(RelationFamily f) {
  switch (f) {
    case RelationFamily::directional_power:
      return "directional_power";
    case RelationFamily::commuting_square:
      return "commuting_square";
    case RelationFamily::quantum_serre:
      return "quantum_serre";
    case RelationFamily::presentation:
      return "presentation";
  }
  return "?";
}

template <ScalarField F>
struct IdealGenerator {
  RelationFamily family;
  VertexId target;
  int i;
  int j;  // -1 for directional powers
  AlgebraElement<F> element;
};

/// Per target vertex K^c: A(c, i^e) for every i; A(c, ij) - A(c, ji) for
/// i < j with a_ij = 0; A(c, iij) - (q + q^-1) A(c, iji) + A(c, jii) for every
/// ordered pair with a_ij = -1.
template <ScalarField F>
std::vector<IdealGenerator<F>> ideal_generators(const CayleyQuiver& cq, const F& field) {
  if (field.order() != cq.n()) throw Error("scalar field order differs from the quiver's n");
  const int t = cq.rank();
  const int e = nilpotency_order(cq.n());
  const auto one = field.one();
  const auto minus_one = field.from_int(-1);
  const auto serre = field.neg(field.add(field.q_power(1), field.q_power(-1)));
  std::vector<IdealGenerator<F>> out;
  for (VertexId c = 0; c < cq.group_order(); ++c) {
    for (int i = 0; i < t; ++i) {
      AlgebraElement<F> g;
      accumulate(field, g, cayley_path(cq, c, std::vector<int>(static_cast<std::size_t>(e), i)), one);
      out.push_back({RelationFamily::directional_power, c, i, -1, std::move(g)});
    }
    for (int i = 0; i < t; ++i) {
      for (int j = 0; j < t; ++j) {
        if (i == j) continue;
        const int a = cq.cartan()(i, j);
        if (a == 0 && i < j) {
          AlgebraElement<F> g;
          accumulate(field, g, cayley_path(cq, c, {i, j}), one);
          accumulate(field, g, cayley_path(cq, c, {j, i}), minus_one);
          out.push_back({RelationFamily::commuting_square, c, i, j, std::move(g)});
        } else if (a == -1) {
          AlgebraElement<F> g;
          accumulate(field, g, cayley_path(cq, c, {i, i, j}), one);
          accumulate(field, g, cayley_path(cq, c, {i, j, i}), serre);
          accumulate(field, g, cayley_path(cq, c, {j, i, i}), one);
          out.push_back({RelationFamily::quantum_serre, c, i, j, std::move(g)});
        }
      }
    }
  }
  return out;
}

template <ScalarField F>
std::vector<AlgebraElement<F>> elements(const std::vector<IdealGenerator<F>>& gens) {
  std::vector<AlgebraElement<F>> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g.element);
  return out;
}

/// Psi((E_i E_j - q E_j E_i)^e) for every i < j with a_ij = -1: the e-th
/// powers of the height-two root vectors. Not part of J; used to compare J
/// with the PBW count. Throws when some positive root has height above two,
/// since then these elements do not cover all root vectors.
template <ScalarField F>
std::vector<AlgebraElement<F>> root_vector_power_elements(const CayleyQuiver& cq, const F& field) {
  for (const auto& root : positive_roots(cq.cartan()))
    if (root_height(root) > 2) throw Error("root vector powers are only provided when every root has height <= 2");
  const int t = cq.rank();
  const int e = nilpotency_order(cq.n());
  PathAlgebra<F> alg(cq.quiver(), field);
  std::vector<AlgebraElement<F>> out;
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j) {
      if (cq.cartan()(i, j) != -1) continue;
      AlgebraElement<F> x;
      for (VertexId c = 0; c < cq.group_order(); ++c) {
        accumulate(field, x, cayley_path(cq, c, {i, j}), field.one());
        accumulate(field, x, cayley_path(cq, c, {j, i}), field.neg(field.q_power(1)));
      }
      out.push_back(alg.power(x, e));
    }
  }
  return out;
}

/// Homogeneous relations on a one-vertex quiver with one loop per letter.
template <ScalarField F>
struct Presentation {
  std::string name;
  std::vector<std::string> letters;
  Quiver quiver;
  std::vector<AlgebraElement<F>> relations;

  Path word(const std::vector<int>& letters_left_to_right) const {
    Path p{0, 0, {}};
    for (int l : letters_left_to_right) p.arrows.push_back(static_cast<ArrowId>(l));
    return p;
  }
};

template <ScalarField F>
Presentation<F> free_presentation(std::string name, std::vector<std::string> letters) {
  Presentation<F> p;
  p.name = std::move(name);
  p.letters = std::move(letters);
  p.quiver = Quiver(1);
  p.quiver.set_vertex_name(0, "*");
  for (std::size_t k = 0; k < p.letters.size(); ++k) p.quiver.add_arrow(0, 0, static_cast<int>(k));
  return p;
}

namespace detail {

template <ScalarField F>
void add_binomial(Presentation<F>& p, const F& f, std::vector<int> w1, const typename F::Elem& c1, std::vector<int> w2,
                  const typename F::Elem& c2) {
  AlgebraElement<F> r;
  accumulate(f, r, p.word(w1), c1);
  accumulate(f, r, p.word(w2), c2);
  if (!r.empty()) p.relations.push_back(std::move(r));
}

template <ScalarField F>
void add_monomial(Presentation<F>& p, const F& f, std::vector<int> w) {
  AlgebraElement<F> r;
  accumulate(f, r, p.word(w), f.one());
  p.relations.push_back(std::move(r));
}

}  // namespace detail

/// u_q^{++}: letters E_1..E_t with E_i^e = 0, commuting and quantum Serre
/// relations.
template <ScalarField F>
Presentation<F> positive_part_presentation(const CartanMatrix& c, const F& f) {
  const int t = c.rank();
  const int e = nilpotency_order(f.order());
  std::vector<std::string> letters;
  for (int i = 0; i < t; ++i) letters.push_back("E" + std::to_string(i + 1));
  auto p = free_presentation<F>("u++", letters);
  const auto serre = f.neg(f.add(f.q_power(1), f.q_power(-1)));
  for (int i = 0; i < t; ++i) detail::add_monomial(p, f, std::vector<int>(static_cast<std::size_t>(e), i));
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < t; ++j) {
      if (i == j) continue;
      if (c(i, j) == 0 && i < j) {
        detail::add_binomial(p, f, {i, j}, f.one(), {j, i}, f.from_int(-1));
      } else if (c(i, j) == -1) {
        AlgebraElement<F> r;
        accumulate(f, r, p.word({i, i, j}), f.one());
        accumulate(f, r, p.word({i, j, i}), serre);
        accumulate(f, r, p.word({j, i, i}), f.one());
        p.relations.push_back(std::move(r));
      }
    }
  }
  return p;
}

/// B_i^e = 0; B_i B_j = B_j B_i if a_ij = 0; B_i B_j = q B_j B_i if a_ij = -1
/// and i > j.
template <ScalarField F>
Presentation<F> quasipolynomial_presentation(const CartanMatrix& c, const F& f) {
  const int t = c.rank();
  const int e = nilpotency_order(f.order());
  std::vector<std::string> letters;
  for (int i = 0; i < t; ++i) letters.push_back("B" + std::to_string(i + 1));
  auto p = free_presentation<F>("quasipolynomial", letters);
  for (int i = 0; i < t; ++i) detail::add_monomial(p, f, std::vector<int>(static_cast<std::size_t>(e), i));
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < i; ++j) {
      if (c(i, j) == 0) detail::add_binomial(p, f, {i, j}, f.one(), {j, i}, f.from_int(-1));
      if (c(i, j) == -1) detail::add_binomial(p, f, {i, j}, f.one(), {j, i}, f.neg(f.q_power(1)));
    }
  }
  return p;
}

/// C_1^3 = C_2^3 = 0 and C_2 C_1 = C_1 C_2 (a_12 = 0) or C_2 C_1 = q C_1 C_2
/// (a_12 = -1).
template <ScalarField F>
Presentation<F> cubic_pair_presentation(int a12, const F& f) {
  auto p = free_presentation<F>("cubic_pair", {"C1", "C2"});
  detail::add_monomial(p, f, {0, 0, 0});
  detail::add_monomial(p, f, {1, 1, 1});
  const auto coeff = a12 == -1 ? f.neg(f.q_power(1)) : f.from_int(-1);
  detail::add_binomial(p, f, {1, 0}, f.one(), {0, 1}, coeff);
  return p;
}

/// X^2 = 0, XY - alpha YX = 0, Y^2 X = Y^3 = 0. Letter 0 is X, letter 1 is Y.
template <ScalarField F>
Presentation<F> ringel_c_presentation(const typename F::Elem& alpha, const F& f) {
  if (f.is_zero(alpha)) throw Error("alpha must be nonzero");
  auto p = free_presentation<F>("ringel_c", {"X", "Y"});
  detail::add_monomial(p, f, {0, 0});
  detail::add_binomial(p, f, {0, 1}, f.one(), {1, 0}, f.neg(alpha));
  detail::add_monomial(p, f, {1, 1, 0});
  detail::add_monomial(p, f, {1, 1, 1});
  return p;
}

/// Image of a one-vertex element under the letter substitution
/// letter k -> images[k] (an element of another one-vertex path algebra).
template <ScalarField F>
AlgebraElement<F> substitute(const AlgebraElement<F>& a, const std::vector<AlgebraElement<F>>& images,
                             const PathAlgebra<F>& target) {
  AlgebraElement<F> out;
  for (const auto& [p, c] : a.terms) {
    AlgebraElement<F> term = target.unit();
    for (ArrowId l : p.arrows) term = target.multiply(term, images[l]);
    target.add_to(out, term, c);
  }
  return out;
}

}  // namespace quiverq
