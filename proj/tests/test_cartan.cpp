#include <doctest.h>

#include "oracles.hpp"
#include "quiverq/cartan.hpp"
#include "quiverq/errors.hpp"

using namespace quiverq;

TEST_CASE("named types") {
  const auto a2 = cartan_from_type("A2");
  CHECK(a2.rank() == 2);
  CHECK(a2(0, 1) == -1);
  CHECK(a2.column(0) == std::vector<int>{2, -1});
  const auto p = cartan_from_type("A1xA1");
  CHECK(p.rank() == 2);
  CHECK(p(0, 1) == 0);
  CHECK(cartan_from_type("D4")(1, 3) == -1);
  CHECK_THROWS_AS(cartan_from_type("Q3"), InvalidCartan);
  CHECK_THROWS_AS(cartan_from_type("A0"), InvalidCartan);
}

TEST_CASE("validation") {
  CHECK(validate(std::vector<std::vector<int>>{{2, -1}, {-1, 2}}).ade());
  CHECK(!validate(std::vector<std::vector<int>>{{2, -1}, {0, 2}}).symmetric);
  CHECK(!validate(std::vector<std::vector<int>>{{2, -2}, {-2, 2}}).ade());
  CHECK(!validate(std::vector<std::vector<int>>{{2, -2}, {-2, 2}}).off_diagonal);
  CHECK(!validate(std::vector<std::vector<int>>{{1, 0}, {0, 2}}).diagonal);
  CHECK(!validate(std::vector<std::vector<int>>{{2, 1}, {1, 2}}).off_diagonal);
}

TEST_CASE("determinants and Smith form") {
  CHECK(determinant(cartan_from_type("A1")) == 2);
  CHECK(determinant(cartan_from_type("A3")) == 4);
  CHECK(determinant(cartan_from_type("D4")) == 4);
  CHECK(determinant(cartan_from_type("E6")) == 3);
  CHECK(determinant(cartan_from_type("E8")) == 1);
  CHECK(smith_normal_form(cartan_from_type("A2")) == std::vector<long long>{1, 3});
  CHECK(smith_normal_form(cartan_from_type("D4")) == std::vector<long long>{1, 1, 2, 2});
  CHECK(smith_normal_form(cartan_from_type("A1xA1")) == std::vector<long long>{2, 2});
}

TEST_CASE("coker cardinality") {
  CHECK(coker_cardinality(cartan_from_type("A1"), 5) == 1);
  CHECK(coker_cardinality(cartan_from_type("A1"), 6) == 2);
  CHECK(coker_cardinality(cartan_from_type("A2"), 6) == 3);
  CHECK(coker_cardinality(cartan_from_type("A1xA1"), 6) == 4);
  CHECK(coker_cardinality(cartan_from_type("D4"), 8) == 4);
  CHECK(coker_cardinality(cartan_from_type("A3"), 8) == 4);
}

TEST_CASE("positive roots") {
  CHECK(root_system(cartan_from_type("A2")).count() == 3);
  CHECK(root_system(cartan_from_type("A1xA1")).count() == 2);
  CHECK(root_system(cartan_from_type("A3")).count() == 6);
  CHECK(root_system(cartan_from_type("D4")).count() == 12);
  CHECK(root_system(cartan_from_type("E6")).count() == 36);
  CHECK(root_system(cartan_from_type("E8")).count() == 120);
  int top = 0;
  for (const auto& r : positive_roots(cartan_from_type("D4"))) top = std::max(top, root_height(r));
  CHECK(top == 5);
}

TEST_CASE("PBW generating function") {
  CHECK(pbw_total_dimension(cartan_from_type("A1"), 5) == 25);
  CHECK(pbw_total_dimension(cartan_from_type("A1"), 6) == 18);
  CHECK(pbw_total_dimension(cartan_from_type("A1xA1"), 5) == 625);
  CHECK(pbw_total_dimension(cartan_from_type("A2"), 5) == 3125);
  CHECK(pbw_top_degree(cartan_from_type("A2"), 5) == 16);
  const auto g = pbw_graded_dimensions(cartan_from_type("A2"), 5);
  CHECK(g[2] == 100);
  CHECK(g[10] == 300);
  CHECK(g[16] == 25);
  for (const char* type : {"A2", "A3", "A1xA1", "D4"}) {
    const auto c = cartan_from_type(type);
    for (int n : {5, 6, 8}) {
      std::vector<int> heights;
      for (const auto& r : positive_roots(c)) heights.push_back(root_height(r));
      CHECK(pbw_graded_dimensions(c, n) == oracle::pbw_series(heights, c.rank(), n, nilpotency_order(n)));
    }
  }
}
