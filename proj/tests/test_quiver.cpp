#include <doctest.h>

#include "oracles.hpp"
#include "quiverq/errors.hpp"
#include "quiverq/quiver.hpp"

using namespace quiverq;

namespace {

Quiver graph(std::size_t vertices, std::vector<std::pair<VertexId, VertexId>> edges) {
  Quiver q(vertices);
  for (auto [s, t] : edges) q.add_arrow(s, t, 0);
  return q;
}

Quiver path_graph(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1)});
  return graph(n, e);
}

Quiver cycle_graph(std::size_t n) {
  auto q = path_graph(n);
  q.add_arrow(static_cast<VertexId>(n - 1), 0, 0);
  return q;
}

/// Star with arms of the given lengths around vertex 0.
Quiver star(std::vector<std::size_t> arms) {
  std::size_t n = 1;
  for (auto a : arms) n += a;
  std::vector<std::pair<VertexId, VertexId>> e;
  VertexId next = 1;
  for (auto a : arms) {
    VertexId prev = 0;
    for (std::size_t k = 0; k < a; ++k) {
      e.push_back({prev, next});
      prev = next++;
    }
  }
  return graph(n, e);
}

std::string name_of(const Quiver& q) {
  const auto cls = classify_underlying_graph(q);
  REQUIRE(cls.size() == 1);
  return cls[0].name;
}

}  // namespace

TEST_CASE("sl2 Cayley quiver") {
  CayleyQuiver cq(cartan_from_type("A1"), 5);
  CHECK(cq.group_order() == 5);
  CHECK(cq.quiver().num_arrows() == 5);
  for (ArrowId a = 0; a < 5; ++a) CHECK((cq.quiver().target(a) + 5 - cq.quiver().source(a)) % 5 == 2);
  CHECK(connected_components(cq.quiver()).count == 1);
  CayleyQuiver c6(cartan_from_type("A1"), 6);
  CHECK(connected_components(c6.quiver()).count == 2);
}

TEST_CASE("group arithmetic") {
  CayleyQuiver cq(cartan_from_type("A2"), 5);
  CHECK(cq.group_order() == 25);
  CHECK(cq.quiver().num_arrows() == 50);
  const std::vector<int> x{3, 4};
  const VertexId v = cq.vertex(x);
  CHECK(cq.exponents(v) == x);
  CHECK(cq.exponents(cq.column_element(1)) == std::vector<int>{4, 2});
  CHECK(cq.subtract(cq.add(v, cq.column_element(0)), cq.column_element(0)) == v);
  const ArrowId a = cq.arrow(v, 1);
  CHECK(cq.quiver().target(a) == v);
  CHECK(cq.quiver().source(a) == cq.subtract(v, cq.column_element(1)));
  CHECK(cq.direction(a) == 1);
  CHECK(cq.pairing(v, cq.vertex(std::vector<int>{1, 0})) == 3);
  CHECK_THROWS_AS(CayleyQuiver(cartan_from_type("A2"), 5, 10), BudgetExceeded);
}

TEST_CASE("component count equals coker, against BFS") {
  for (const char* type : {"A1", "A1xA1", "A2", "A3", "D4"}) {
    for (int n : {5, 6, 7, 8}) {
      const auto c = cartan_from_type(type);
      CayleyQuiver cq(c, n);
      const auto bfs = oracle::cayley_components(c, n);
      CHECK(connected_components(cq.quiver()).count == bfs);
      CHECK(static_cast<long long>(bfs) == coker_cardinality(c, n));
    }
  }
}

TEST_CASE("Dynkin reference shapes") {
  CHECK(name_of(graph(1, {})) == "A1");
  CHECK(name_of(path_graph(2)) == "A2");
  CHECK(name_of(path_graph(7)) == "A7");
  CHECK(name_of(star({1, 1, 1})) == "D4");
  CHECK(name_of(star({1, 1, 3})) == "D6");
  CHECK(name_of(star({1, 2, 2})) == "E6");
  CHECK(name_of(star({1, 2, 3})) == "E7");
  CHECK(name_of(star({1, 2, 4})) == "E8");
  CHECK(name_of(path_graph(3)) == "A3");
  for (const auto& cls : classify_underlying_graph(star({1, 2, 4}))) CHECK(cls.kind == GraphKind::Dynkin);
}

TEST_CASE("Euclidean reference shapes") {
  CHECK(name_of(graph(1, {{0, 0}})) == "A~0");
  CHECK(name_of(graph(2, {{0, 1}, {1, 0}})) == "A~1");
  CHECK(name_of(cycle_graph(3)) == "A~2");
  CHECK(name_of(cycle_graph(6)) == "A~5");
  CHECK(name_of(star({1, 1, 1, 1})) == "D~4");
  CHECK(name_of(graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}})) == "D~5");
  CHECK(name_of(star({2, 2, 2})) == "E~6");
  CHECK(name_of(star({1, 3, 3})) == "E~7");
  CHECK(name_of(star({1, 2, 5})) == "E~8");
  for (const auto& cls : classify_underlying_graph(star({1, 2, 5}))) CHECK(cls.kind == GraphKind::Euclidean);
}

TEST_CASE("wild shapes") {
  CHECK(classify_underlying_graph(graph(2, {{0, 1}, {0, 1}, {0, 1}}))[0].kind == GraphKind::Wild);
  CHECK(classify_underlying_graph(star({1, 1, 1, 1, 1}))[0].kind == GraphKind::Wild);
  CHECK(classify_underlying_graph(star({2, 2, 3}))[0].kind == GraphKind::Wild);
  CHECK(classify_underlying_graph(graph(1, {{0, 0}, {0, 0}}))[0].kind == GraphKind::Wild);
}

TEST_CASE("separated quiver") {
  CayleyQuiver cq(cartan_from_type("A1"), 5);
  const auto s = separated_quiver(cq.quiver());
  CHECK(s.num_vertices() == 10);
  CHECK(s.num_arrows() == 5);
  const auto cls = classify_underlying_graph(s);
  CHECK(cls.size() == 5);
  for (const auto& c : cls) CHECK(c.name == "A2");
}

TEST_CASE("dot output") {
  const auto dot = to_dot(path_graph(2), "G");
  CHECK(dot.find("digraph G") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);
}
