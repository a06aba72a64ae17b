#include "quiverq/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <set>

#include "quiverq/cyclotomic.hpp"
#include "quiverq/errors.hpp"

namespace quiverq {

namespace {

using Matrix = std::vector<std::vector<long long>>;

Matrix widen(const CartanMatrix& c) {
  Matrix m(static_cast<std::size_t>(c.rank()));
  for (int i = 0; i < c.rank(); ++i)
    for (int j = 0; j < c.rank(); ++j) m[static_cast<std::size_t>(i)].push_back(c(i, j));
  return m;
}

// Bareiss fraction-free determinant of the leading k x k block.
long long leading_minor(const std::vector<std::vector<int>>& rows, std::size_t k) {
  if (k == 0) return 1;
  Matrix m(k, std::vector<long long>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m[i][j] = rows[i][j];
  long long sign = 1, prev = 1;
  for (std::size_t p = 0; p + 1 < k; ++p) {
    if (m[p][p] == 0) {
      std::size_t swap = p + 1;
      while (swap < k && m[swap][p] == 0) ++swap;
      if (swap == k) return 0;
      std::swap(m[p], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < k; ++i) {
      for (std::size_t j = p + 1; j < k; ++j) m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]) / prev;
    }
    prev = m[p][p];
  }
  return sign * m[k - 1][k - 1];
}

CartanMatrix type_a(int t) {
  std::vector<std::vector<int>> r(static_cast<std::size_t>(t), std::vector<int>(static_cast<std::size_t>(t), 0));
  for (int i = 0; i < t; ++i) {
    r[i][i] = 2;
    if (i + 1 < t) r[i][i + 1] = r[i + 1][i] = -1;
  }
  return CartanMatrix(std::move(r));
}

// Chain 0 - 1 - ... - (t-2), with t-1 attached to t-3.
CartanMatrix type_d(int t) {
  std::vector<std::vector<int>> r(static_cast<std::size_t>(t), std::vector<int>(static_cast<std::size_t>(t), 0));
  for (int i = 0; i < t; ++i) r[i][i] = 2;
  for (int i = 0; i + 2 < t; ++i) r[i][i + 1] = r[i + 1][i] = -1;
  r[t - 1][t - 3] = r[t - 3][t - 1] = -1;
  return CartanMatrix(std::move(r));
}

// Chain 0 - 1 - ... - (t-2), with t-1 attached to node 2 (Bourbaki node 4).
CartanMatrix type_e(int t) {
  std::vector<std::vector<int>> r(static_cast<std::size_t>(t), std::vector<int>(static_cast<std::size_t>(t), 0));
  for (int i = 0; i < t; ++i) r[i][i] = 2;
  for (int i = 0; i + 2 < t; ++i) r[i][i + 1] = r[i + 1][i] = -1;
  r[t - 1][2] = r[2][t - 1] = -1;
  return CartanMatrix(std::move(r));
}

CartanMatrix single_type(std::string_view token) {
  if (token.size() < 2) throw InvalidCartan("unknown Cartan type '" + std::string(token) + "'");
  const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
  std::string digits(token.substr(1));
  if (!std::all_of(digits.begin(), digits.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
    throw InvalidCartan("unknown Cartan type '" + std::string(token) + "'");
  const int t = std::atoi(digits.c_str());
  switch (family) {
    case 'A':
      if (t >= 1 && t <= 64) return type_a(t);
      break;
    case 'D':
      if (t >= 4 && t <= 64) return type_d(t);
      break;
    case 'E':
      if (t >= 6 && t <= 8) return type_e(t);
      break;
    default:
      break;
  }
  throw InvalidCartan("unknown Cartan type '" + std::string(token) + "'");
}

}  // namespace

CartanMatrix::CartanMatrix(std::vector<std::vector<int>> rows, std::string name)
    : rows_(std::move(rows)), name_(std::move(name)) {
  if (rows_.empty()) throw InvalidCartan("Cartan matrix is empty");
  for (const auto& r : rows_) {
    if (r.size() != rows_.size()) throw InvalidCartan("Cartan matrix is not square");
  }
}

std::vector<int> CartanMatrix::column(int j) const {
  std::vector<int> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r[static_cast<std::size_t>(j)]);
  return out;
}

CartanMatrix cartan_from_type(std::string_view name) {
  std::vector<CartanMatrix> parts;
  std::size_t start = 0;
  while (start <= name.size()) {
    std::size_t end = name.find_first_of("xX", start);
    if (end == std::string_view::npos) end = name.size();
    parts.push_back(single_type(name.substr(start, end - start)));
    start = end + 1;
  }
  int t = 0;
  for (const auto& p : parts) t += p.rank();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(t), std::vector<int>(static_cast<std::size_t>(t), 0));
  int offset = 0;
  for (const auto& p : parts) {
    for (int i = 0; i < p.rank(); ++i)
      for (int j = 0; j < p.rank(); ++j) rows[offset + i][offset + j] = p(i, j);
    offset += p.rank();
  }
  return CartanMatrix(std::move(rows), std::string(name));
}

CartanValidity validate(const std::vector<std::vector<int>>& rows) {
  const std::size_t t = rows.size();
  if (t == 0) throw InvalidCartan("Cartan matrix is empty");
  for (const auto& r : rows)
    if (r.size() != t) throw InvalidCartan("Cartan matrix is not square");
  CartanValidity v;
  v.symmetric = v.diagonal = v.off_diagonal = true;
  for (std::size_t i = 0; i < t; ++i) {
    if (rows[i][i] != 2) v.diagonal = false;
    for (std::size_t j = 0; j < t; ++j) {
      if (rows[i][j] != rows[j][i]) v.symmetric = false;
      if (i != j && rows[i][j] != 0 && rows[i][j] != -1) v.off_diagonal = false;
    }
  }
  v.positive_definite = v.symmetric;
  for (std::size_t k = 1; k <= t; ++k) {
    v.leading_minors.push_back(leading_minor(rows, k));
    if (v.leading_minors.back() <= 0) v.positive_definite = false;
  }
  return v;
}

CartanValidity validate(const CartanMatrix& c) { return validate(c.rows()); }

long long determinant(const CartanMatrix& c) { return leading_minor(c.rows(), static_cast<std::size_t>(c.rank())); }

std::vector<std::vector<int>> positive_roots(const CartanMatrix& c) {
  if (!validate(c).ade()) throw InvalidCartan("positive roots need a positive definite symmetric Cartan matrix");
  const int t = c.rank();
  auto norm = [&](const std::vector<int>& v) {
    long long s = 0;
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j) s += static_cast<long long>(v[i]) * c(i, j) * v[j];
    return s;
  };
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < t; ++i) {
    std::vector<int> e(static_cast<std::size_t>(t), 0);
    e[i] = 1;
    roots.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : frontier) {
      for (int i = 0; i < t; ++i) {
        auto candidate = beta;
        ++candidate[i];
        if (norm(candidate) == 2 && roots.insert(candidate).second) next.push_back(candidate);
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<int>> out(roots.begin(), roots.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return root_height(a) < root_height(b); });
  return out;
}

std::vector<long long> smith_normal_form(const CartanMatrix& c) {
  Matrix a = widen(c);
  const std::size_t t = a.size();
  for (std::size_t k = 0; k < t; ++k) {
    while (true) {
      // Move the smallest nonzero entry of the trailing block to (k, k).
      std::size_t pi = t, pj = t;
      for (std::size_t i = k; i < t; ++i)
        for (std::size_t j = k; j < t; ++j)
          if (a[i][j] != 0 && (pi == t || std::llabs(a[i][j]) < std::llabs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == t) break;
      std::swap(a[k], a[pi]);
      for (auto& row : a) std::swap(row[k], row[pj]);

      bool clean = true;
      for (std::size_t i = k + 1; i < t; ++i) {
        long long f = a[i][k] / a[k][k];
        for (std::size_t j = k; j < t; ++j) a[i][j] -= f * a[k][j];
        if (a[i][k] != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < t; ++j) {
        long long f = a[k][j] / a[k][k];
        for (std::size_t i = k; i < t; ++i) a[i][j] -= f * a[i][k];
        if (a[k][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into row k and retry.
      bool divides = true;
      for (std::size_t i = k + 1; i < t && divides; ++i)
        for (std::size_t j = k + 1; j < t; ++j)
          if (a[i][j] % a[k][k] != 0) {
            for (std::size_t jj = k; jj < t; ++jj) a[k][jj] += a[i][jj];
            divides = false;
            break;
          }
      if (divides) break;
    }
  }
  std::vector<long long> d;
  for (std::size_t k = 0; k < t; ++k) d.push_back(std::llabs(a[k][k]));
  return d;
}

RootSystemData root_system(const CartanMatrix& c) { return {positive_roots(c), smith_normal_form(c)}; }

long long coker_cardinality(const CartanMatrix& c, int n) {
  if (n < 1) throw Error("coker_cardinality: n must be positive");
  long long card = 1;
  for (long long d : smith_normal_form(c)) card *= std::gcd(d, static_cast<long long>(n));
  return card;
}

int root_height(const std::vector<int>& root) { return std::accumulate(root.begin(), root.end(), 0); }

std::vector<long long> pbw_graded_dimensions(const CartanMatrix& c, int n) {
  const int e = nilpotency_order(n);
  long long group = 1;
  for (int i = 0; i < c.rank(); ++i) group *= n;
  std::vector<long long> series{group};
  for (const auto& beta : positive_roots(c)) {
    const std::size_t h = static_cast<std::size_t>(root_height(beta));
    std::vector<long long> next(series.size() + (static_cast<std::size_t>(e) - 1) * h, 0);
    for (std::size_t d = 0; d < series.size(); ++d)
      for (int k = 0; k < e; ++k) next[d + static_cast<std::size_t>(k) * h] += series[d];
    series = std::move(next);
  }
  return series;
}

long long pbw_total_dimension(const CartanMatrix& c, int n) {
  long long total = 1;
  for (int i = 0; i < c.rank(); ++i) total *= n;
  const long long e = nilpotency_order(n);
  for (std::size_t k = 0; k < positive_roots(c).size(); ++k) total *= e;
  return total;
}

int pbw_top_degree(const CartanMatrix& c, int n) {
  int heights = 0;
  for (const auto& beta : positive_roots(c)) heights += root_height(beta);
  return (nilpotency_order(n) - 1) * heights;
}

}  // namespace quiverq
