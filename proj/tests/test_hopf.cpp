#include <doctest.h>

#include <random>

#include "quiverq/fourier.hpp"
#include "quiverq/hopf.hpp"
#include "quiverq/ideal.hpp"

using namespace quiverq;

namespace {

template <ScalarField F>
std::size_t coassociativity_failures(const CayleyQuiver& cq, const F& f, CoproductVariant v) {
  Coproduct<F> delta(cq, f, v);
  PathAlgebra<F> A(cq.quiver(), f);
  std::size_t bad = 0;
  for (VertexId c = 0; c < cq.group_order(); ++c) bad += !delta.check_coassociativity(A.vertex(c)).ok;
  for (ArrowId a = 0; a < cq.quiver().num_arrows(); ++a) bad += !delta.check_coassociativity(A.arrow(a)).ok;
  return bad;
}

template <ScalarField F>
std::size_t ideal_failures(const CayleyQuiver& cq, const F& f, CoproductVariant v) {
  const auto gens = ideal_generators(cq, f);
  QuotientOptions o;
  o.max_degree = static_cast<std::size_t>(nilpotency_order(cq.n())) + 1;
  GradedQuotient<F> gq(cq.quiver(), f, elements(gens), o);
  Coproduct<F> delta(cq, f, v);
  std::map<Path, typename GradedQuotient<F>::Coordinates> cache;
  std::size_t bad = 0;
  for (const auto& g : gens) bad += !vanishes_in_quotient_square(gq, delta(g.element), cache);
  return bad;
}

}  // namespace

TEST_CASE("coproduct on vertices and arrows") {
  CyclotomicField f(5);
  CayleyQuiver cq(cartan_from_type("A1"), 5);
  Coproduct<CyclotomicField> delta(cq, f);
  CHECK(delta.of_vertex(0).size() == 5);
  CHECK(delta.of_arrow(0).size() == 10);
  PathAlgebra<CyclotomicField> A(cq.quiver(), f);
  CHECK(f.equal(delta.counit(A.vertex(0)), f.one()));
  CHECK(f.is_zero(delta.counit(A.vertex(1))));
  CHECK(f.is_zero(delta.counit(A.arrow(0))));
  for (ArrowId a = 0; a < 5; ++a) CHECK(delta.check_counit(A.arrow(a)).ok);
}

TEST_CASE("coassociativity and its controls") {
  CyclotomicField f(5);
  for (const char* type : {"A1", "A2"}) {
    CayleyQuiver cq(cartan_from_type(type), 5);
    CHECK(coassociativity_failures(cq, f, CoproductVariant::standard) == 0);
    CHECK(coassociativity_failures(cq, f, CoproductVariant::drop_q_factor) == 0);
    CHECK(coassociativity_failures(cq, f, CoproductVariant::non_character) > 0);
  }
}

TEST_CASE("coproduct is multiplicative on composable arrows") {
  CyclotomicField f(6);
  CayleyQuiver cq(cartan_from_type("A2"), 6);
  Coproduct<CyclotomicField> delta(cq, f);
  PathAlgebra<CyclotomicField> A(cq.quiver(), f);
  for (ArrowId a = 0; a < cq.quiver().num_arrows(); a += 5) {
    for (ArrowId b : cq.quiver().arrows_into(cq.quiver().source(a))) {
      const auto lhs = delta(A.multiply(A.arrow(a), A.arrow(b)));
      const auto rhs = Coproduct<CyclotomicField>::tensor_multiply(f, delta(A.arrow(a)), delta(A.arrow(b)));
      CHECK(equal(f, lhs, rhs));
    }
  }
}

TEST_CASE("the ideal is a coideal") {
  CyclotomicField f(5);
  CayleyQuiver a2(cartan_from_type("A2"), 5);
  CHECK(ideal_failures(a2, f, CoproductVariant::standard) == 0);
  CHECK(ideal_failures(a2, f, CoproductVariant::drop_q_factor) == 100);
  CyclotomicField f6(6);
  CayleyQuiver a1(cartan_from_type("A1"), 6);
  CHECK(ideal_failures(a1, f6, CoproductVariant::standard) == 0);
}

TEST_CASE("crossed product") {
  CyclotomicField f(5);
  CayleyQuiver cq(cartan_from_type("A2"), 5);
  CrossedProduct<CyclotomicField> cp(cq, f);
  CHECK(cp.check_mixed_square().ok);
  const auto pairs = low_degree_pairs<CyclotomicField>(cq);
  CHECK(pairs.size() == 625 + 2 * 50 * 25);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
  for (int k = 0; k < 200; ++k) {
    const auto& u = pairs[pick(rng)];
    const auto& v = pairs[pick(rng)];
    const auto& w = pairs[pick(rng)];
    const auto x = cp.basis(u.first, u.second), y = cp.basis(v.first, v.second), z = cp.basis(w.first, w.second);
    CHECK(equal(f, cp.multiply(cp.multiply(x, y), z), cp.multiply(x, cp.multiply(y, z))));
    CHECK(equal(f, cp.phi(cp.multiply(x, y)), cp.multiply(cp.phi(x), cp.phi(y))));
    CHECK(equal(f, cp.phi(cp.phi(x)), x));
  }
}

TEST_CASE("phi against the coproduct") {
  // phi swaps legs of Delta(K_i) but fixes Delta(E_i).
  CyclotomicField f(5);
  CayleyQuiver cq(cartan_from_type("A2"), 5);
  CrossedProduct<CyclotomicField> cp(cq, f);
  Coproduct<CyclotomicField> delta(cq, f);
  Fourier<CyclotomicField> fo(cq, f);
  for (int i = 0; i < 2; ++i) {
    const auto dk = delta(fo.psi_k(i));
    CHECK(equal(f, cp.phi(dk), opposite<CyclotomicField>(dk)));
    const auto de = delta(fo.psi_e(i));
    CHECK(equal(f, cp.phi(de), de));
    CHECK(!equal(f, cp.phi(de), opposite<CyclotomicField>(de)));
  }
}
