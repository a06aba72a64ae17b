#pragma once

// Sparse row echelon forms over a ScalarField.
//
// The pivot of a row is its largest column. Rows are inserted one at a time
// (each reduced against the current basis first); finalize() then
// back-substitutes so every stored row has exactly one pivot column.

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "quiverq/cyclotomic.hpp"

namespace quiverq {

template <class Elem>
using SparseRow = std::vector<std::pair<std::uint32_t, Elem>>;  // sorted by column

template <ScalarField F>
SparseRow<typename F::Elem> normalize_row(const F& f, SparseRow<typename F::Elem> row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow<typename F::Elem> out;
  out.reserve(row.size());
  for (auto& [c, v] : row) {
    if (!out.empty() && out.back().first == c) {
      out.back().second = f.add(out.back().second, v);
    } else {
      out.emplace_back(c, std::move(v));
    }
  }
  std::erase_if(out, [&](const auto& e) { return f.is_zero(e.second); });
  return out;
}

template <ScalarField F>
class Echelon {
 public:
  using Elem = typename F::Elem;
  using Row = SparseRow<Elem>;

  Echelon() = default;
  explicit Echelon(std::uint32_t columns) : pivot_row_(columns, -1) {}

  std::uint32_t columns() const { return static_cast<std::uint32_t>(pivot_row_.size()); }
  std::uint32_t rank() const { return static_cast<std::uint32_t>(rows_.size()); }
  bool full() const { return rank() == columns(); }
  bool is_pivot(std::uint32_t col) const { return pivot_row_[col] >= 0; }
  const std::vector<Row>& rows() const { return rows_; }

  /// Returns true when the row was independent of the current basis.
  bool insert(const F& f, Row row) {
    std::map<std::uint32_t, Elem> acc;
    for (auto& [c, v] : row)
      if (!f.is_zero(v)) acc.emplace(c, std::move(v));
    eliminate(f, acc);
    if (acc.empty()) return false;
    const Elem scale = f.inv(acc.rbegin()->second);
    Row stored;
    stored.reserve(acc.size());
    for (auto& [c, v] : acc) stored.emplace_back(c, f.mul(scale, v));
    stored.back().second = f.one();
    pivot_row_[stored.back().first] = static_cast<std::int32_t>(rows_.size());
    rows_.push_back(std::move(stored));
    finalized_ = false;
    return true;
  }

  /// Back-substitution to reduced form, in increasing pivot order.
  void finalize(const F& f) {
    if (finalized_) return;
    std::vector<std::uint32_t> order;
    order.reserve(rows_.size());
    for (std::uint32_t c = 0; c < columns(); ++c)
      if (pivot_row_[c] >= 0) order.push_back(c);
    for (std::uint32_t pivot : order) {
      Row& row = rows_[static_cast<std::size_t>(pivot_row_[pivot])];
      std::map<std::uint32_t, Elem> acc;
      for (std::size_t k = 0; k + 1 < row.size(); ++k) acc.emplace(row[k].first, row[k].second);
      eliminate(f, acc);
      Row reduced(acc.begin(), acc.end());
      reduced.emplace_back(pivot, f.one());
      row = std::move(reduced);
    }
    finalized_ = true;
  }

  /// Remainder of `v` modulo the row space; no pivot column survives.
  Row reduce(const F& f, const Row& v) const {
    std::map<std::uint32_t, Elem> acc;
    for (const auto& [c, x] : v) {
      if (f.is_zero(x)) continue;
      auto [it, inserted] = acc.emplace(c, x);
      if (!inserted) {
        it->second = f.add(it->second, x);
        if (f.is_zero(it->second)) acc.erase(it);
      }
    }
    eliminate(f, acc);
    return Row(acc.begin(), acc.end());
  }

  /// Columns that are not pivots, ascending.
  std::vector<std::uint32_t> non_pivots() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t c = 0; c < columns(); ++c)
      if (pivot_row_[c] < 0) out.push_back(c);
    return out;
  }

 private:
  // Clears pivot columns from the top down; subtracting a row only touches
  // columns below its pivot, so a single descending sweep suffices.
  void eliminate(const F& f, std::map<std::uint32_t, Elem>& acc) const {
    auto it = acc.end();
    while (it != acc.begin()) {
      --it;
      const std::int32_t r = pivot_row_[it->first];
      if (r < 0) continue;
      const Elem coeff = it->second;
      it = acc.erase(it);
      const Row& row = rows_[static_cast<std::size_t>(r)];
      for (std::size_t k = 0; k + 1 < row.size(); ++k) {
        const Elem delta = f.neg(f.mul(coeff, row[k].second));
        auto [pos, inserted] = acc.emplace(row[k].first, delta);
        if (!inserted) {
          pos->second = f.add(pos->second, delta);
          if (f.is_zero(pos->second)) acc.erase(pos);
        }
      }
    }
  }

  std::vector<Row> rows_;
  std::vector<std::int32_t> pivot_row_;
  bool finalized_ = true;
};

}  // namespace quiverq
