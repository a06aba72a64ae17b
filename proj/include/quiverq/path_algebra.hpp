#pragma once

// Path algebra k^Q with the Dirac-mass basis.
//
// A Path stores its arrows left to right as they appear in a product:
// arrows.front() ends at `target`, arrows.back() starts at `source`. The
// product p * q is the concatenation when p.source == q.target, else zero.

#include <compare>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "quiverq/cyclotomic.hpp"
#include "quiverq/errors.hpp"
#include "quiverq/quiver.hpp"

namespace quiverq {

struct Path {
  VertexId target = 0;
  VertexId source = 0;
  std::vector<ArrowId> arrows;

  std::size_t length() const { return arrows.size(); }
  bool trivial() const { return arrows.empty(); }

  static Path vertex(VertexId v) { return Path{v, v, {}}; }
  static Path arrow(const Quiver& q, ArrowId a) { return Path{q.target(a), q.source(a), {a}}; }

  auto operator<=>(const Path&) const = default;
  bool operator==(const Path&) const = default;
};

inline std::optional<Path> compose(const Path& p, const Path& q) {
  if (p.source != q.target) return std::nullopt;
  Path out{p.target, q.source, p.arrows};
  out.arrows.insert(out.arrows.end(), q.arrows.begin(), q.arrows.end());
  return out;
}

/// Path from a sequence of arrows (leftmost first); throws if not composable.
Path make_path(const Quiver& q, const std::vector<ArrowId>& arrows);

std::string path_to_string(const Quiver& q, const Path& p);

/// Finitely supported linear combination; zero coefficients are never stored.
template <class Key, class Elem>
struct Combination {
  std::map<Key, Elem> terms;

  bool empty() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }
};

template <ScalarField F, class Key>
void accumulate(const F& f, Combination<Key, typename F::Elem>& into, const Key& key, const typename F::Elem& c) {
  if (f.is_zero(c)) return;
  auto it = into.terms.find(key);
  if (it == into.terms.end()) {
    into.terms.emplace(key, c);
    return;
  }
  it->second = f.add(it->second, c);
  if (f.is_zero(it->second)) into.terms.erase(it);
}

template <ScalarField F, class Key>
Combination<Key, typename F::Elem> combine(const F& f, const Combination<Key, typename F::Elem>& a,
                                           const typename F::Elem& ca, const Combination<Key, typename F::Elem>& b,
                                           const typename F::Elem& cb) {
  Combination<Key, typename F::Elem> out;
  for (const auto& [k, v] : a.terms) accumulate(f, out, k, f.mul(ca, v));
  for (const auto& [k, v] : b.terms) accumulate(f, out, k, f.mul(cb, v));
  return out;
}

template <ScalarField F, class Key>
bool equal(const F& f, const Combination<Key, typename F::Elem>& a, const Combination<Key, typename F::Elem>& b) {
  if (a.terms.size() != b.terms.size()) return false;
  auto ia = a.terms.begin();
  for (auto ib = b.terms.begin(); ib != b.terms.end(); ++ia, ++ib) {
    if (!(ia->first == ib->first) || !f.equal(ia->second, ib->second)) return false;
  }
  return true;
}

template <ScalarField F>
using AlgebraElement = Combination<Path, typename F::Elem>;

template <ScalarField F>
class PathAlgebra {
 public:
  using Elem = typename F::Elem;
  using Element = AlgebraElement<F>;

  PathAlgebra(const Quiver& quiver, const F& field) : quiver_(&quiver), field_(&field) {}

  const Quiver& quiver() const { return *quiver_; }
  const F& field() const { return *field_; }

  Element zero() const { return {}; }
  Element unit() const {
    Element out;
    for (VertexId v = 0; v < quiver_->num_vertices(); ++v) out.terms.emplace(Path::vertex(v), field_->one());
    return out;
  }
  Element vertex(VertexId v) const { return path(Path::vertex(v)); }
  Element arrow(ArrowId a) const { return path(Path::arrow(*quiver_, a)); }
  Element path(const Path& p) const { return path(p, field_->one()); }
  Element path(const Path& p, const Elem& c) const {
    Element out;
    accumulate(*field_, out, p, c);
    return out;
  }

  Element add(const Element& a, const Element& b) const { return combine(*field_, a, field_->one(), b, field_->one()); }
  Element sub(const Element& a, const Element& b) const {
    return combine(*field_, a, field_->one(), b, field_->from_int(-1));
  }
  Element scale(const Element& a, const Elem& c) const { return combine(*field_, a, c, Element{}, field_->zero()); }
  void add_to(Element& into, const Path& p, const Elem& c) const { accumulate(*field_, into, p, c); }
  void add_to(Element& into, const Element& a, const Elem& c) const {
    for (const auto& [p, v] : a.terms) accumulate(*field_, into, p, field_->mul(c, v));
  }

  /// Bilinear extension of concatenation.
  Element multiply(const Element& a, const Element& b) const {
    Element out;
    // Group b by target so each term of a meets only composable partners.
    std::map<VertexId, std::vector<const std::pair<const Path, Elem>*>> by_target;
    for (const auto& term : b.terms) by_target[term.first.target].push_back(&term);
    for (const auto& [p, c] : a.terms) {
      auto it = by_target.find(p.source);
      if (it == by_target.end()) continue;
      for (const auto* term : it->second) {
        auto pq = compose(p, term->first);
        accumulate(*field_, out, *pq, field_->mul(c, term->second));
      }
    }
    return out;
  }

  Element power(const Element& a, int k) const {
    Element out = unit();
    for (int i = 0; i < k; ++i) out = multiply(out, a);
    return out;
  }

  bool equal(const Element& a, const Element& b) const { return quiverq::equal(*field_, a, b); }

  /// Homogeneous: all paths of one length.
  bool is_homogeneous(const Element& a) const {
    if (a.terms.empty()) return true;
    const std::size_t len = a.terms.begin()->first.length();
    for (const auto& [p, c] : a.terms)
      if (p.length() != len) return false;
    return true;
  }

  std::map<std::size_t, Element> homogeneous_parts(const Element& a) const {
    std::map<std::size_t, Element> parts;
    for (const auto& [p, c] : a.terms) parts[p.length()].terms.emplace(p, c);
    return parts;
  }

  std::string to_string(const Element& a) const {
    if (a.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : a.terms) {
      os << (first ? "" : " + ") << "(" << field_->to_string(c) << ")*" << path_to_string(*quiver_, p);
      first = false;
    }
    return os.str();
  }

 private:
  const Quiver* quiver_;
  const F* field_;
};

/// A(K^c, i_m ... i_1): the path ending at `target` whose arrows, read left
/// to right, have the given directions.
Path cayley_path(const CayleyQuiver& cq, VertexId target, const std::vector<int>& directions);

std::vector<int> directions(const CayleyQuiver& cq, const Path& p);

}  // namespace quiverq
