#pragma once

// Serial reference computation of graded dimensions: for each block, the
// span of all p * g * p' with |p| + |g| + |p'| = d is echelonized directly
// against the full list of paths of length d. Exponential in d; intended
// for cross-checking the recursive engine on small instances.

#include <map>
#include <vector>

#include "quiverq/echelon.hpp"
#include "quiverq/path_algebra.hpp"

namespace quiverq {

namespace detail {

// All paths of length `len` ending at `target`.
inline void paths_ending_at(const Quiver& q, VertexId target, std::size_t len, std::vector<Path>& out) {
  std::vector<Path> frontier{Path::vertex(target)};
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<Path> next;
    for (const Path& p : frontier) {
      for (ArrowId a : q.arrows_into(p.source)) {
        Path ext = p;
        ext.arrows.push_back(a);
        ext.source = q.source(a);
        next.push_back(std::move(ext));
      }
    }
    frontier = std::move(next);
  }
  out.insert(out.end(), frontier.begin(), frontier.end());
}

// All paths of length `len` starting at `source`.
inline std::vector<Path> paths_starting_at(const Quiver& q, VertexId source, std::size_t len) {
  std::vector<Path> frontier{Path::vertex(source)};
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<Path> next;
    for (const Path& p : frontier) {
      for (ArrowId a : q.arrows_from(p.target)) {
        Path ext{q.target(a), p.source, {a}};
        ext.arrows.insert(ext.arrows.end(), p.arrows.begin(), p.arrows.end());
        next.push_back(std::move(ext));
      }
    }
    frontier = std::move(next);
  }
  return frontier;
}

}  // namespace detail

template <ScalarField F>
std::size_t naive_graded_dimension(const Quiver& q, const F& f, const std::vector<AlgebraElement<F>>& generators,
                                   std::size_t d) {
  using Row = SparseRow<typename F::Elem>;
  std::map<std::pair<VertexId, VertexId>, std::map<Path, std::uint32_t>> columns;
  for (VertexId v = 0; v < q.num_vertices(); ++v) {
    std::vector<Path> paths;
    detail::paths_ending_at(q, v, d, paths);
    for (Path& p : paths) {
      auto& block = columns[{p.target, p.source}];
      block.emplace(std::move(p), static_cast<std::uint32_t>(block.size()));
    }
  }
  std::map<std::pair<VertexId, VertexId>, Echelon<F>> echelons;
  for (const auto& [key, cols] : columns) echelons.emplace(key, Echelon<F>(static_cast<std::uint32_t>(cols.size())));

  for (const auto& g : generators) {
    if (g.terms.empty()) continue;
    const std::size_t k = g.terms.begin()->first.length();
    if (k > d) continue;
    std::map<std::pair<VertexId, VertexId>, AlgebraElement<F>> parts;
    for (const auto& [p, c] : g.terms) parts[{p.target, p.source}].terms.emplace(p, c);
    for (const auto& [ends, part] : parts) {
      for (std::size_t left = 0; left <= d - k; ++left) {
        const auto lefts = detail::paths_starting_at(q, ends.first, left);
        std::vector<Path> rights;
        detail::paths_ending_at(q, ends.second, d - k - left, rights);
        for (const Path& u : lefts) {
          for (const Path& v : rights) {
            auto& cols = columns.at({u.target, v.source});
            Row row;
            for (const auto& [p, c] : part.terms) row.emplace_back(cols.at(*compose(*compose(u, p), v)), c);
            echelons.at({u.target, v.source}).insert(f, normalize_row(f, std::move(row)));
          }
        }
      }
    }
  }
  std::size_t dim = 0;
  for (const auto& [key, cols] : columns) dim += cols.size() - echelons.at(key).rank();
  return dim;
}

}  // namespace quiverq
