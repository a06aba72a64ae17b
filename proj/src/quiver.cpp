#include "quiverq/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "quiverq/errors.hpp"

namespace quiverq {

Quiver::Quiver(std::size_t num_vertices) : in_(num_vertices), out_(num_vertices) {}

ArrowId Quiver::add_arrow(VertexId source, VertexId target, int label) {
  if (source >= num_vertices() || target >= num_vertices()) throw Error("arrow endpoint out of range");
  const ArrowId id = static_cast<ArrowId>(arrows_.size());
  arrows_.push_back({source, target, label});
  auto insert_sorted = [&](std::vector<ArrowId>& list) {
    auto pos = std::upper_bound(list.begin(), list.end(), id, [&](ArrowId a, ArrowId b) {
      return std::pair(arrows_[a].label, a) < std::pair(arrows_[b].label, b);
    });
    list.insert(pos, id);
  };
  insert_sorted(in_[target]);
  insert_sorted(out_[source]);
  return id;
}

void Quiver::set_vertex_name(VertexId v, std::string name) {
  if (names_.size() < num_vertices()) names_.resize(num_vertices());
  names_[v] = std::move(name);
}

std::string Quiver::vertex_name(VertexId v) const {
  if (v < names_.size() && !names_[v].empty()) return names_[v];
  return "v" + std::to_string(v);
}

bool Quiver::has_loops() const {
  return std::any_of(arrows_.begin(), arrows_.end(), [](const ArrowData& a) { return a.source == a.target; });
}

// ---------------------------------------------------------------- Cayley

CayleyQuiver::CayleyQuiver(CartanMatrix cartan, int n, std::size_t vertex_budget)
    : cartan_(std::move(cartan)), n_(n) {
  if (n < 1) throw Error("n must be positive");
  const int t = cartan_.rank();
  std::size_t size = 1;
  radix_.assign(static_cast<std::size_t>(t), 1);
  for (int i = 0; i < t; ++i) {
    radix_[static_cast<std::size_t>(i)] = size;
    if (size > vertex_budget / static_cast<std::size_t>(n))
      throw BudgetExceeded("Cayley quiver has more than " + std::to_string(vertex_budget) + " vertices");
    size *= static_cast<std::size_t>(n);
  }
  if (size > vertex_budget)
    throw BudgetExceeded("Cayley quiver has more than " + std::to_string(vertex_budget) + " vertices");

  quiver_ = Quiver(size);
  for (int i = 0; i < t; ++i) {
    auto col = cartan_.column(i);
    columns_.push_back(vertex(col));
  }
  for (VertexId c = 0; c < size; ++c) {
    std::ostringstream name;
    name << "K^(";
    auto ex = exponents(c);
    for (std::size_t i = 0; i < ex.size(); ++i) name << (i ? "," : "") << ex[i];
    name << ")";
    quiver_.set_vertex_name(c, name.str());
    for (int i = 0; i < t; ++i) quiver_.add_arrow(subtract(c, columns_[static_cast<std::size_t>(i)]), c, i);
  }
  if (n > 2 && quiver_.has_loops()) throw Error("Cayley quiver has a loop although a_ii = 2 and n > 2");
}

VertexId CayleyQuiver::vertex(std::span<const int> exponents) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < radix_.size(); ++i) {
    int r = exponents[i] % n_;
    if (r < 0) r += n_;
    idx += static_cast<std::size_t>(r) * radix_[i];
  }
  return static_cast<VertexId>(idx);
}

std::vector<int> CayleyQuiver::exponents(VertexId v) const {
  std::vector<int> out(radix_.size());
  for (std::size_t i = 0; i < radix_.size(); ++i) out[i] = static_cast<int>((v / radix_[i]) % static_cast<std::size_t>(n_));
  return out;
}

int CayleyQuiver::exponent(VertexId v, int i) const {
  return static_cast<int>((v / radix_[static_cast<std::size_t>(i)]) % static_cast<std::size_t>(n_));
}

VertexId CayleyQuiver::add(VertexId a, VertexId b) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < radix_.size(); ++i) {
    const std::size_t d = (exponent(a, static_cast<int>(i)) + exponent(b, static_cast<int>(i))) % n_;
    idx += d * radix_[i];
  }
  return static_cast<VertexId>(idx);
}

VertexId CayleyQuiver::subtract(VertexId a, VertexId b) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < radix_.size(); ++i) {
    const std::size_t d = (exponent(a, static_cast<int>(i)) + n_ - exponent(b, static_cast<int>(i))) % n_;
    idx += d * radix_[i];
  }
  return static_cast<VertexId>(idx);
}

long long CayleyQuiver::pairing(VertexId x, VertexId y) const {
  long long s = 0;
  for (int i = 0; i < rank(); ++i) s += static_cast<long long>(exponent(x, i)) * exponent(y, i);
  return s % n_;
}

// ---------------------------------------------------------------- graphs

Components connected_components(const Quiver& q) {
  const std::size_t nv = q.num_vertices();
  std::vector<std::uint32_t> parent(nv);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (ArrowId a = 0; a < q.num_arrows(); ++a) {
    auto r1 = find(q.source(a)), r2 = find(q.target(a));
    if (r1 != r2) parent[std::max(r1, r2)] = std::min(r1, r2);
  }
  Components out;
  out.label.assign(nv, 0);
  std::map<std::uint32_t, std::uint32_t> relabel;
  for (std::uint32_t v = 0; v < nv; ++v) {
    auto root = find(v);
    auto [it, inserted] = relabel.emplace(root, static_cast<std::uint32_t>(relabel.size()));
    out.label[v] = it->second;
  }
  out.count = relabel.size();
  return out;
}

Quiver separated_quiver(const Quiver& q) {
  const std::size_t nv = q.num_vertices();
  Quiver out(2 * nv);
  for (VertexId v = 0; v < nv; ++v) {
    out.set_vertex_name(v, "(" + q.vertex_name(v) + ",0)");
    out.set_vertex_name(static_cast<VertexId>(nv + v), "(" + q.vertex_name(v) + ",1)");
  }
  for (ArrowId a = 0; a < q.num_arrows(); ++a)
    out.add_arrow(q.source(a), static_cast<VertexId>(nv + q.target(a)), q.label(a));
  return out;
}

std::string to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::Dynkin:
      return "Dynkin";
    case GraphKind::Euclidean:
      return "Euclidean";
    case GraphKind::Wild:
      return "Wild";
  }
  return "?";
}

namespace {

// Undirected multigraph of one component: adjacency with repetition.
struct Multigraph {
  std::vector<std::vector<std::size_t>> adj;
  std::size_t edges = 0;
  bool loop = false;
  bool parallel = false;
};

ComponentClass classify_component(const Multigraph& g) {
  const std::size_t nv = g.adj.size(), ne = g.edges;
  auto wild = [&] { return ComponentClass{GraphKind::Wild, "wild", nv, ne}; };
  if (g.loop) {
    if (nv == 1 && ne == 1) return {GraphKind::Euclidean, "A~0", nv, ne};
    return wild();
  }
  if (g.parallel) {
    if (nv == 2 && ne == 2) return {GraphKind::Euclidean, "A~1", nv, ne};
    return wild();
  }
  if (ne > nv) return wild();
  std::vector<std::size_t> deg(nv);
  for (std::size_t v = 0; v < nv; ++v) deg[v] = g.adj[v].size();
  if (ne == nv) {
    if (std::all_of(deg.begin(), deg.end(), [](std::size_t d) { return d == 2; }))
      return {GraphKind::Euclidean, "A~" + std::to_string(nv - 1), nv, ne};
    return wild();
  }
  // Tree from here on.
  if (nv == 1) return {GraphKind::Dynkin, "A1", nv, ne};
  std::vector<std::size_t> branch;
  for (std::size_t v = 0; v < nv; ++v) {
    if (deg[v] >= 5) return wild();
    if (deg[v] == 4) {
      if (nv == 5) return {GraphKind::Euclidean, "D~4", nv, ne};
      return wild();
    }
    if (deg[v] == 3) branch.push_back(v);
  }
  if (branch.empty()) return {GraphKind::Dynkin, "A" + std::to_string(nv), nv, ne};
  if (branch.size() == 1) {
    const std::size_t center = branch.front();
    std::vector<std::size_t> arms;
    for (std::size_t start : g.adj[center]) {
      std::size_t prev = center, cur = start, len = 1;
      while (deg[cur] == 2) {
        std::size_t nxt = g.adj[cur][0] == prev ? g.adj[cur][1] : g.adj[cur][0];
        prev = cur;
        cur = nxt;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    const std::size_t p = arms[0], q = arms[1], r = arms[2];
    if (p == 1 && q == 1) return {GraphKind::Dynkin, "D" + std::to_string(nv), nv, ne};
    if (p == 1 && q == 2 && r <= 4) return {GraphKind::Dynkin, "E" + std::to_string(nv), nv, ne};
    if (p == 2 && q == 2 && r == 2) return {GraphKind::Euclidean, "E~6", nv, ne};
    if (p == 1 && q == 3 && r == 3) return {GraphKind::Euclidean, "E~7", nv, ne};
    if (p == 1 && q == 2 && r == 5) return {GraphKind::Euclidean, "E~8", nv, ne};
    return wild();
  }
  if (branch.size() == 2) {
    for (std::size_t b : branch) {
      std::size_t leaves = 0;
      for (std::size_t w : g.adj[b]) leaves += deg[w] == 1 ? 1 : 0;
      if (leaves != 2) return wild();
    }
    return {GraphKind::Euclidean, "D~" + std::to_string(nv - 1), nv, ne};
  }
  return wild();
}

}  // namespace

std::vector<ComponentClass> classify_underlying_graph(const Quiver& q) {
  const Components comp = connected_components(q);
  std::vector<std::vector<VertexId>> members(comp.count);
  std::vector<std::size_t> local(q.num_vertices());
  for (VertexId v = 0; v < q.num_vertices(); ++v) {
    local[v] = members[comp.label[v]].size();
    members[comp.label[v]].push_back(v);
  }
  std::vector<Multigraph> graphs(comp.count);
  for (std::size_t c = 0; c < comp.count; ++c) graphs[c].adj.resize(members[c].size());
  std::map<std::pair<VertexId, VertexId>, int> multiplicity;
  for (ArrowId a = 0; a < q.num_arrows(); ++a) {
    const VertexId s = q.source(a), t = q.target(a);
    Multigraph& g = graphs[comp.label[s]];
    ++g.edges;
    if (s == t) {
      g.loop = true;
      g.adj[local[s]].push_back(local[s]);
      continue;
    }
    if (++multiplicity[{std::min(s, t), std::max(s, t)}] > 1) g.parallel = true;
    g.adj[local[s]].push_back(local[t]);
    g.adj[local[t]].push_back(local[s]);
  }
  std::vector<ComponentClass> out;
  out.reserve(comp.count);
  for (const auto& g : graphs) out.push_back(classify_component(g));
  return out;
}

std::string to_dot(const Quiver& q, const std::string& graph_name) {
  std::ostringstream os;
  os << "digraph " << graph_name << " {\n";
  for (VertexId v = 0; v < q.num_vertices(); ++v) os << "  " << v << " [label=\"" << q.vertex_name(v) << "\"];\n";
  for (ArrowId a = 0; a < q.num_arrows(); ++a)
    os << "  " << q.source(a) << " -> " << q.target(a) << " [label=\"" << q.label(a) << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace quiverq
