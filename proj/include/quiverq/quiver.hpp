#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "quiverq/cartan.hpp"

namespace quiverq {

using VertexId = std::uint32_t;
using ArrowId = std::uint32_t;

struct ArrowData {
  VertexId source;
  VertexId target;
  int label;  // direction for Cayley quivers, letter index for presentations
};

/// Finite quiver; loops and parallel arrows are allowed.
class Quiver {
 public:
  explicit Quiver(std::size_t num_vertices = 0);

  ArrowId add_arrow(VertexId source, VertexId target, int label);
  void set_vertex_name(VertexId v, std::string name);

  std::size_t num_vertices() const { return in_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }
  const ArrowData& arrow(ArrowId a) const { return arrows_[a]; }
  VertexId source(ArrowId a) const { return arrows_[a].source; }
  VertexId target(ArrowId a) const { return arrows_[a].target; }
  int label(ArrowId a) const { return arrows_[a].label; }

  /// Arrows ending at v, sorted by (label, id).
  std::span<const ArrowId> arrows_into(VertexId v) const { return in_[v]; }
  /// Arrows starting at v, sorted by (label, id).
  std::span<const ArrowId> arrows_from(VertexId v) const { return out_[v]; }

  std::string vertex_name(VertexId v) const;
  bool has_loops() const;

 private:
  std::vector<ArrowData> arrows_;
  std::vector<std::vector<ArrowId>> in_;
  std::vector<std::vector<ArrowId>> out_;
  std::vector<std::string> names_;
};

inline constexpr std::size_t kDefaultVertexBudget = 1'000'000;

/// The Cayley graph of G = (Z/nZ)^t with respect to the columns of C.
/// Vertex K^c is stored under the mixed-radix index of c; arrow A(K^c, i)
/// has id c * t + i and runs from K^{c - a_{.,i}} to K^c.
class CayleyQuiver {
 public:
  CayleyQuiver(CartanMatrix cartan, int n, std::size_t vertex_budget = kDefaultVertexBudget);

  const Quiver& quiver() const { return quiver_; }
  const CartanMatrix& cartan() const { return cartan_; }
  int n() const { return n_; }
  int rank() const { return cartan_.rank(); }
  std::size_t group_order() const { return quiver_.num_vertices(); }

  VertexId vertex(std::span<const int> exponents) const;
  std::vector<int> exponents(VertexId v) const;
  int exponent(VertexId v, int i) const;
  VertexId identity() const { return 0; }
  VertexId add(VertexId a, VertexId b) const;
  VertexId subtract(VertexId a, VertexId b) const;
  /// Exponent pairing x . y = sum_i x_i y_i (mod n).
  long long pairing(VertexId x, VertexId y) const;
  /// K^{a_{.,i}}: the group element given by column i of C.
  VertexId column_element(int i) const { return columns_[static_cast<std::size_t>(i)]; }

  ArrowId arrow(VertexId target, int direction) const {
    return target * static_cast<ArrowId>(rank()) + static_cast<ArrowId>(direction);
  }
  int direction(ArrowId a) const { return static_cast<int>(a % static_cast<ArrowId>(rank())); }

 private:
  CartanMatrix cartan_;
  int n_;
  Quiver quiver_;
  std::vector<std::size_t> radix_;
  std::vector<VertexId> columns_;
};

struct Components {
  std::size_t count = 0;
  std::vector<std::uint32_t> label;  // per vertex, labels numbered by first occurrence
};

/// Weakly connected components (orientation ignored).
Components connected_components(const Quiver& q);

/// Vertices Q_0 x {0, 1}: (v, 0) has index v, (v, 1) has index |Q_0| + v.
/// Each arrow a becomes (s(a), 0) -> (t(a), 1).
Quiver separated_quiver(const Quiver& q);

enum class GraphKind { Dynkin, Euclidean, Wild };

struct ComponentClass {
  GraphKind kind;
  std::string name;  // "A2", "D~4", "E~8", "wild"
  std::size_t vertices;
  std::size_t edges;
};

std::string to_string(GraphKind kind);

/// Classifies the underlying multigraph of each weak component against the
/// simply-laced Dynkin and extended Dynkin (Euclidean) diagrams; Euclidean
/// names carry a '~' (A~0 is a single loop, A~1 a double edge).
std::vector<ComponentClass> classify_underlying_graph(const Quiver& q);

/// Graphviz description: one node line per vertex, one edge line per arrow
/// labelled with the arrow label.
std::string to_dot(const Quiver& q, const std::string& graph_name = "Q");

}  // namespace quiverq
