#pragma once

// Graded quotients k^Q / J for ideals J generated by homogeneous elements.
//
// Work is split into blocks keyed by (degree, target, source). With
// V_d = (k^Q / J)_d and R_d the degree-d part of the right ideal generated by
// the generators, one has
//
//   V_d = (F_1 (x) V_{d-1}) / image(R_d),   R_d = R_{d-1} F_1 + G_d,
//
// so each degree only needs
//   * columns: pairs (arrow b, standard path of V_{d-1}) with b composable,
//   * relations: the relation rows of degree d-1 pushed through right
//     multiplication by an arrow, plus the degree-d generators.
// Each block is echelonized independently (lex-largest path as pivot); the
// non-pivot columns are the standard paths of V_d. Right multiplication
// tables V_{d-1} -> V_d are kept for the next degree.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "quiverq/echelon.hpp"
#include "quiverq/path_algebra.hpp"

namespace quiverq {

enum class Execution { serial, parallel };

struct QuotientOptions {
  std::size_t max_degree = 64;
  std::size_t block_column_budget = 1u << 20;
  Execution execution = Execution::parallel;
};

struct StandardId {
  std::uint32_t degree;
  std::uint32_t block;
  std::uint32_t index;
  auto operator<=>(const StandardId&) const = default;
};

template <ScalarField F>
class GradedQuotient {
 public:
  using Elem = typename F::Elem;
  using Row = SparseRow<Elem>;
  using Element = AlgebraElement<F>;
  using Coordinates = std::map<StandardId, Elem>;

  static constexpr ArrowId kNoArrow = ~ArrowId{0};

  struct Block {
    VertexId target = 0;
    VertexId source = 0;
    std::vector<std::pair<ArrowId, std::uint32_t>> columns;        // (leading arrow, standard index one degree down)
    std::vector<std::pair<ArrowId, std::uint32_t>> arrow_offsets;  // leading arrow -> first column
    Echelon<F> relations;
    std::vector<std::uint32_t> standard;       // column of the k-th standard path
    std::vector<std::int32_t> standard_index;  // column -> k, or -1 for pivots
    std::vector<std::pair<ArrowId, std::vector<Row>>> right_images;

    std::size_t dimension() const { return standard.size(); }
    std::optional<std::uint32_t> offset(ArrowId b) const {
      for (const auto& [a, off] : arrow_offsets)
        if (a == b) return off;
      return std::nullopt;
    }
    const std::vector<Row>* right_image(ArrowId a) const {
      for (const auto& [arrow, rows] : right_images)
        if (arrow == a) return &rows;
      return nullptr;
    }
  };

  struct Degree {
    std::vector<Block> blocks;  // sorted by (target, source)
    std::unordered_map<std::uint64_t, std::uint32_t> index;
    std::size_t dimension = 0;
    std::size_t relation_rank = 0;
  };

  /// Throws NonHomogeneous for non-homogeneous or degree-0 generators and
  /// BudgetExceeded when a block has more columns than allowed.
  GradedQuotient(const Quiver& quiver, const F& field, const std::vector<Element>& generators,
                 QuotientOptions options = {})
      : quiver_(&quiver), field_(&field), options_(options) {
    for (const auto& g : generators) register_generator(g);
    build();
  }

  const Quiver& quiver() const { return *quiver_; }
  const F& field() const { return *field_; }
  const QuotientOptions& options() const { return options_; }

  /// Highest degree for which blocks were built.
  std::size_t top_degree() const { return degrees_.size() - 1; }
  /// First degree with V_d = 0, if it was reached within max_degree.
  std::optional<std::size_t> nilpotency_degree() const { return nilpotency_degree_; }
  bool truncated() const { return !nilpotency_degree_.has_value(); }

  const Degree& degree(std::size_t d) const { return degrees_[d]; }
  std::size_t dimension(std::size_t d) const { return d < degrees_.size() ? degrees_[d].dimension : 0; }

  /// Dimensions for degrees 0 .. last nonzero degree.
  std::vector<std::size_t> graded_dimensions() const {
    std::vector<std::size_t> out;
    for (const auto& deg : degrees_) out.push_back(deg.dimension);
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
  }

  std::size_t total_dimension() const {
    std::size_t s = 0;
    for (const auto& deg : degrees_) s += deg.dimension;
    return s;
  }

  const Block* find_block(std::size_t d, VertexId target, VertexId source) const {
    if (d >= degrees_.size()) return nullptr;
    auto it = degrees_[d].index.find(key(target, source));
    return it == degrees_[d].index.end() ? nullptr : &degrees_[d].blocks[it->second];
  }

  std::optional<std::uint32_t> block_index(std::size_t d, VertexId target, VertexId source) const {
    if (d >= degrees_.size()) return std::nullopt;
    auto it = degrees_[d].index.find(key(target, source));
    if (it == degrees_[d].index.end()) return std::nullopt;
    return it->second;
  }

  std::size_t block_dimension(std::size_t d, VertexId target, VertexId source) const {
    const Block* b = find_block(d, target, source);
    return b ? b->dimension() : 0;
  }

  /// Coordinates of the class of a path in the standard basis.
  Coordinates path_coordinates(const Path& p) const {
    Coordinates out;
    auto located = locate(p);
    if (!located) return out;
    const auto& [blk, row] = *located;
    for (const auto& [k, v] : row)
      out.emplace(StandardId{static_cast<std::uint32_t>(p.length()), blk, k}, v);
    return out;
  }

  Coordinates coordinates(const Element& a) const {
    Coordinates out;
    for (const auto& [p, c] : a.terms) {
      auto located = locate(p);
      if (!located) continue;
      const auto& [blk, row] = *located;
      for (const auto& [k, v] : row) {
        const StandardId id{static_cast<std::uint32_t>(p.length()), blk, k};
        const Elem delta = field_->mul(c, v);
        auto [it, inserted] = out.emplace(id, delta);
        if (!inserted) {
          it->second = field_->add(it->second, delta);
          if (field_->is_zero(it->second)) out.erase(it);
        }
      }
    }
    return out;
  }

  Path standard_path(const StandardId& id) const {
    const Block& b = degrees_[id.degree].blocks[id.block];
    if (id.degree == 0) return Path::vertex(b.target);
    const auto [arrow, prev_index] = b.columns[b.standard[id.index]];
    const auto prev_block = block_index(id.degree - 1, quiver_->source(arrow), b.source);
    Path tail = standard_path(StandardId{id.degree - 1, *prev_block, prev_index});
    Path out{b.target, b.source, {arrow}};
    out.arrows.insert(out.arrows.end(), tail.arrows.begin(), tail.arrows.end());
    return out;
  }

  /// Canonical representative: a combination of standard paths.
  Element normal_form(const Element& a) const {
    Element out;
    for (const auto& [id, c] : coordinates(a)) out.terms.emplace(standard_path(id), c);
    return out;
  }

  bool reduces_to_zero(const Element& a) const { return coordinates(a).empty(); }

  /// Global position of a standard path inside V_d (blocks in key order).
  std::size_t flat_index(const StandardId& id) const {
    return block_offsets_[id.degree][id.block] + id.index;
  }

 private:
  static std::uint64_t key(VertexId target, VertexId source) {
    return (static_cast<std::uint64_t>(target) << 32) | source;
  }

  void register_generator(const Element& g) {
    if (g.terms.empty()) return;
    const std::size_t d = g.terms.begin()->first.length();
    for (const auto& [p, c] : g.terms) {
      if (p.length() != d) throw NonHomogeneous("ideal generators must be homogeneous");
    }
    if (d == 0) throw NonHomogeneous("ideal generators must have positive degree");
    if (generators_.size() <= d) generators_.resize(d + 1);
    // J(g) is spanned by the block components e_t g e_s, so each component
    // is registered as its own relation.
    std::map<std::uint64_t, std::vector<std::pair<Path, Elem>>> parts;
    for (const auto& [p, c] : g.terms) parts[key(p.target, p.source)].push_back({p, c});
    for (auto& [k, terms] : parts) generators_[d][k].push_back(std::move(terms));
  }

  // Coordinates of a path, as (block index at its degree, row over standard
  // indices). Empty optional when the class is zero.
  std::optional<std::pair<std::uint32_t, Row>> locate(const Path& p) const {
    const std::size_t len = p.length();
    if (len >= degrees_.size()) {
      if (nilpotency_degree_ && len >= *nilpotency_degree_) return std::nullopt;
      throw DegreeCapExceeded("normal form requested beyond the computed degree range");
    }
    auto blk = block_index(0, p.source, p.source);
    if (!blk) return std::nullopt;
    Row row{{0u, field_->one()}};
    for (std::size_t k = len; k-- > 0;) {
      const std::size_t d = len - k;
      const ArrowId b = p.arrows[k];
      auto next = block_index(d, quiver_->target(b), p.source);
      if (!next) return std::nullopt;
      const Block& target_block = degrees_[d].blocks[*next];
      auto off = target_block.offset(b);
      if (!off) return std::nullopt;
      Row shifted;
      shifted.reserve(row.size());
      for (auto& [c, v] : row) shifted.emplace_back(c + *off, std::move(v));
      row = to_standard(target_block, target_block.relations.reduce(*field_, shifted));
      if (row.empty()) return std::nullopt;
      blk = next;
    }
    return std::make_pair(*blk, std::move(row));
  }

  static Row to_standard(const Block& b, Row reduced) {
    for (auto& [c, v] : reduced) c = static_cast<std::uint32_t>(b.standard_index[c]);
    return reduced;
  }

  void build() {
    const std::size_t nv = quiver_->num_vertices();
    Degree zero;
    for (VertexId v = 0; v < nv; ++v) {
      Block b;
      b.target = b.source = v;
      b.columns.push_back({kNoArrow, 0});
      b.relations = Echelon<F>(1);
      b.standard = {0};
      b.standard_index = {0};
      zero.index.emplace(key(v, v), static_cast<std::uint32_t>(zero.blocks.size()));
      zero.blocks.push_back(std::move(b));
    }
    zero.dimension = nv;
    degrees_.push_back(std::move(zero));
    if (nv == 0) {
      nilpotency_degree_ = 0;
      finish_offsets();
      return;
    }

    for (std::size_t d = 1; d <= options_.max_degree; ++d) {
      Degree cur;
      std::vector<std::uint64_t> keys;
      for (const Block& b : degrees_[d - 1].blocks) {
        if (b.standard.empty()) continue;
        for (ArrowId a : quiver_->arrows_from(b.target)) keys.push_back(key(quiver_->target(a), b.source));
      }
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
      cur.blocks.resize(keys.size());
      for (std::size_t i = 0; i < keys.size(); ++i) {
        cur.blocks[i].target = static_cast<VertexId>(keys[i] >> 32);
        cur.blocks[i].source = static_cast<VertexId>(keys[i] & 0xffffffffu);
        cur.index.emplace(keys[i], static_cast<std::uint32_t>(i));
      }
      degrees_.push_back(std::move(cur));

      run_blocks(degrees_[d].blocks.size(), [&](std::size_t i) { build_block(d, degrees_[d].blocks[i]); });

      Degree& done = degrees_[d];
      for (const Block& b : done.blocks) {
        done.dimension += b.standard.size();
        done.relation_rank += b.relations.rank();
      }
      if (done.dimension == 0) {
        nilpotency_degree_ = d;
        break;
      }
      run_blocks(degrees_[d - 1].blocks.size(),
                 [&](std::size_t i) { build_right_images(d - 1, degrees_[d - 1].blocks[i]); });
    }
    finish_offsets();
  }

  template <class Body>
  void run_blocks(std::size_t count, Body&& body) {
    std::exception_ptr failure;
    const bool parallel = options_.execution == Execution::parallel;
    const long long total = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
    for (long long i = 0; i < total; ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical(quiverq_block_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  void build_block(std::size_t d, Block& blk) {
    for (ArrowId b : quiver_->arrows_into(blk.target)) {
      const Block* prev = find_block(d - 1, quiver_->source(b), blk.source);
      if (!prev || prev->standard.empty()) continue;
      blk.arrow_offsets.push_back({b, static_cast<std::uint32_t>(blk.columns.size())});
      for (std::uint32_t k = 0; k < prev->standard.size(); ++k) blk.columns.push_back({b, k});
    }
    if (blk.columns.size() > options_.block_column_budget)
      throw BudgetExceeded("quotient block with " + std::to_string(blk.columns.size()) + " columns exceeds the budget");
    blk.relations = Echelon<F>(static_cast<std::uint32_t>(blk.columns.size()));

    // Relations of degree d-1 pushed through right multiplication by a.
    if (d >= 2) {
      for (ArrowId a : quiver_->arrows_from(blk.source)) {
        if (blk.relations.full()) break;
        const Block* prev = find_block(d - 1, blk.target, quiver_->target(a));
        if (!prev) continue;
        for (const Row& rel : prev->relations.rows()) {
          Row image;
          for (const auto& [col, coeff] : rel) {
            const auto [b, k] = prev->columns[col];
            const Block* tail = find_block(d - 2, quiver_->source(b), quiver_->target(a));
            const auto* images = tail ? tail->right_image(a) : nullptr;
            if (!images) continue;
            const auto off = blk.offset(b);
            for (const auto& [std_k, v] : (*images)[k]) {
              image.emplace_back(*off + std_k, field_->mul(coeff, v));
            }
          }
          blk.relations.insert(*field_, normalize_row(*field_, std::move(image)));
          if (blk.relations.full()) break;
        }
      }
    }

    // Generators living in this block.
    if (d < generators_.size()) {
      auto it = generators_[d].find(key(blk.target, blk.source));
      if (it != generators_[d].end()) {
        for (const auto& group : it->second) {
          Row image;
          for (const auto& [p, c] : group) {
            const ArrowId b = p.arrows.front();
            Path tail{quiver_->source(b), p.source, std::vector<ArrowId>(p.arrows.begin() + 1, p.arrows.end())};
            auto located = locate(tail);
            if (!located) continue;
            const auto off = blk.offset(b);
            if (!off) continue;
            for (const auto& [k, v] : located->second) image.emplace_back(*off + k, field_->mul(c, v));
          }
          blk.relations.insert(*field_, normalize_row(*field_, std::move(image)));
        }
      }
    }

    blk.relations.finalize(*field_);
    blk.standard = blk.relations.non_pivots();
    blk.standard_index.assign(blk.columns.size(), -1);
    for (std::uint32_t k = 0; k < blk.standard.size(); ++k)
      blk.standard_index[blk.standard[k]] = static_cast<std::int32_t>(k);
  }

  // Right multiplication V_{d} -> V_{d+1} by every arrow a ending at the
  // block source.
  void build_right_images(std::size_t d, Block& blk) {
    if (blk.standard.empty()) return;
    for (ArrowId a : quiver_->arrows_into(blk.source)) {
      const VertexId s = quiver_->source(a);
      const Block* next = find_block(d + 1, blk.target, s);
      std::vector<Row> images(blk.standard.size());
      for (std::uint32_t k = 0; k < blk.standard.size(); ++k) {
        Row w;
        if (d == 0) {
          if (next) {
            if (auto off = next->offset(a)) w.emplace_back(*off, field_->one());
          }
        } else {
          const auto [b, prev_k] = blk.columns[blk.standard[k]];
          const Block* tail = find_block(d - 1, quiver_->source(b), blk.source);
          const auto* tail_images = tail ? tail->right_image(a) : nullptr;
          if (tail_images && next) {
            if (auto off = next->offset(b)) {
              for (const auto& [std_k, v] : (*tail_images)[prev_k]) w.emplace_back(*off + std_k, v);
            }
          }
        }
        if (!w.empty()) images[k] = to_standard(*next, next->relations.reduce(*field_, w));
      }
      blk.right_images.push_back({a, std::move(images)});
    }
  }

  void finish_offsets() {
    block_offsets_.resize(degrees_.size());
    for (std::size_t d = 0; d < degrees_.size(); ++d) {
      std::size_t acc = 0;
      for (const Block& b : degrees_[d].blocks) {
        block_offsets_[d].push_back(acc);
        acc += b.standard.size();
      }
    }
  }

  const Quiver* quiver_;
  const F* field_;
  QuotientOptions options_;
  std::vector<std::unordered_map<std::uint64_t, std::vector<std::vector<std::pair<Path, Elem>>>>> generators_;
  std::vector<Degree> degrees_;
  std::vector<std::vector<std::size_t>> block_offsets_;
  std::optional<std::size_t> nilpotency_degree_;
};

/// Dimension of e_v (rad / rad^2) e_u: classes of degree-one paths from u to v.
template <ScalarField F>
std::size_t radical_layer_dimension(const GradedQuotient<F>& quotient, VertexId u, VertexId v) {
  return quotient.block_dimension(1, v, u);
}

}  // namespace quiverq
