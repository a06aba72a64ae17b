#include <doctest.h>

#include "oracles.hpp"
#include "quiverq/reptype.hpp"

using namespace quiverq;

TEST_CASE("rewriting oracle agrees with the witness chain") {
  CyclotomicField f(5);
  for (const char* type : {"A2", "A1xA1"}) {
    const auto c = cartan_from_type(type);
    const auto chain = build_witness_chain(c, f);
    REQUIRE(chain.steps.size() == 3);
    CHECK(chain.ok());
    const auto quasi = oracle::irreducible_words(f, oracle::quasipolynomial_rules(c, f), 2, 64);
    const auto cubic = oracle::irreducible_words(f, oracle::cubic_pair_rules(c(0, 1), f), 2, 64);
    const auto alpha = c(0, 1) == -1 ? f.q() : f.one();
    const auto ringel = oracle::irreducible_words(f, oracle::ringel_rules(alpha, f), 2, 64);
    for (const auto* w : {&quasi, &cubic, &ringel}) {
      CHECK(w->confluent);
      CHECK(w->finite);
    }
    CHECK(quasi.dimension == 25);
    CHECK(cubic.dimension == 9);
    CHECK(ringel.dimension == 5);
    CHECK(chain.steps[0].dimension == quasi.dimension);
    CHECK(chain.steps[1].dimension == cubic.dimension);
    CHECK(chain.steps[2].dimension == ringel.dimension);
    CHECK(chain.steps[1].graded == cubic.graded);
    CHECK(chain.steps[2].graded == ringel.graded);
  }
}

TEST_CASE("oracle detects a non-confluent system") {
  CyclotomicField f(5);
  // ab -> a, ba -> b: aba reduces to aa or to a
  std::vector<oracle::Rule<CyclotomicField>> rules{{{0, 1}, {0}, f.one()}, {{1, 0}, {1}, f.one()}};
  CHECK(!oracle::confluent(f, rules));
}

TEST_CASE("witness chain for rank 3") {
  CyclotomicField f(5);
  const auto chain = build_witness_chain(cartan_from_type("A3"), f);
  CHECK(chain.ok());
  CHECK(chain.steps[0].dimension == 125);
  CHECK_THROWS_AS(build_witness_chain(cartan_from_type("A3"), f, 100), BudgetExceeded);
  CHECK_THROWS(build_witness_chain(cartan_from_type("A1"), f));
}

TEST_CASE("classification") {
  CyclotomicField f5(5);
  for (int n : {5, 6, 7, 8}) {
    CyclotomicField f(n);
    CHECK(classify(cartan_from_type("A1"), n, f).verdict == Verdict::Finite);
  }
  const auto a3 = classify(cartan_from_type("A3"), 5, f5);
  CHECK(a3.verdict == Verdict::Wild);
  CHECK(a3.route == "separated quiver");
  REQUIRE(a3.separated.has_value());
  CHECK(a3.separated->min_level0_out_degree == 3);
  CHECK(a3.separated->wild > 0);

  const auto a2 = classify(cartan_from_type("A2"), 5, f5);
  CHECK(a2.verdict == Verdict::Wild);
  CHECK(a2.witnesses.has_value());
  CHECK(!a2.complement.has_value());

  const auto p = classify(cartan_from_type("A1xA1"), 5, f5);
  CHECK(p.verdict == Verdict::Wild);
  REQUIRE(p.complement.has_value());
  CHECK(p.complement->ok());

  CyclotomicField f4(4);
  CHECK(classify(cartan_from_type("A2"), 4, f4).verdict == Verdict::Unclassified);
  CHECK_THROWS_AS(classify(CartanMatrix(std::vector<std::vector<int>>{{2, -2}, {-2, 2}}), 5, f5), InvalidCartan);
}

TEST_CASE("separated quiver evidence for D4") {
  CayleyQuiver cq(cartan_from_type("D4"), 5);
  const auto ev = separated_quiver_evidence(cq);
  CHECK(ev.vertices == 2 * 625);
  CHECK(ev.arrows == 4 * 625);
  CHECK(ev.min_level0_out_degree == 4);
}

TEST_CASE("complement witness for sl2") {
  for (int n : {5, 6}) {
    CyclotomicField f(n);
    CayleyQuiver cq(cartan_from_type("A1"), n);
    GradedQuotient<CyclotomicField> gq(cq.quiver(), f, elements(ideal_generators(cq, f)));
    const auto rep = complement_witness(cq, f, gq);
    const auto e = static_cast<std::size_t>(nilpotency_order(n));
    CHECK(rep.subalgebra == e);
    CHECK(rep.complement == static_cast<std::size_t>(n) * e - e);
    CHECK(rep.ok());
  }
}
