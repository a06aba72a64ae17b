#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace quiverq {

/// Square integer matrix. Cartan-ness is not enforced here; see validate().
class CartanMatrix {
 public:
  CartanMatrix() = default;
  /// Throws InvalidCartan when `rows` is empty or not square.
  explicit CartanMatrix(std::vector<std::vector<int>> rows, std::string name = {});

  int rank() const { return static_cast<int>(rows_.size()); }
  int operator()(int i, int j) const { return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  std::vector<int> column(int j) const;
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  const std::string& name() const { return name_; }

  bool operator==(const CartanMatrix& other) const { return rows_ == other.rows_; }

 private:
  std::vector<std::vector<int>> rows_;
  std::string name_;
};

/// Expands a catalogue name: A<t> (t >= 1), D<t> (t >= 4), E6, E7, E8, and
/// products joined by 'x' such as "A1xA1" or "A2xA1" (block diagonal).
CartanMatrix cartan_from_type(std::string_view name);

struct CartanValidity {
  bool symmetric = false;
  bool diagonal = false;      // a_ii = 2
  bool off_diagonal = false;  // a_ij in {0, -1}
  bool positive_definite = false;
  std::vector<long long> leading_minors;

  bool cartan() const { return symmetric && diagonal && off_diagonal; }
  /// Symmetric Cartan and positive definite, i.e. a simply-laced Dynkin type.
  bool ade() const { return cartan() && positive_definite; }
};

/// Throws InvalidCartan for non-square input.
CartanValidity validate(const std::vector<std::vector<int>>& rows);
CartanValidity validate(const CartanMatrix& c);

long long determinant(const CartanMatrix& c);

/// Positive roots by closure from the simple roots: beta + e_i is adjoined
/// whenever (beta + e_i)^T C (beta + e_i) = 2. Requires an ADE matrix.
std::vector<std::vector<int>> positive_roots(const CartanMatrix& c);

/// Invariant factors d_1 | d_2 | ... | d_t of C over the integers.
std::vector<long long> smith_normal_form(const CartanMatrix& c);

struct RootSystemData {
  std::vector<std::vector<int>> positive_roots;
  std::vector<long long> snf_diagonal;
  std::size_t count() const { return positive_roots.size(); }
};

RootSystemData root_system(const CartanMatrix& c);

/// |coker C| for C acting on (Z/nZ)^t: prod_i gcd(d_i, n).
long long coker_cardinality(const CartanMatrix& c, int n);

int root_height(const std::vector<int>& root);

/// Graded dimensions n^t * prod_beta (1 + x^ht + ... + x^{(e-1) ht}).
std::vector<long long> pbw_graded_dimensions(const CartanMatrix& c, int n);

/// n^t * e^N.
long long pbw_total_dimension(const CartanMatrix& c, int n);

/// (e - 1) * sum of root heights: the top nonzero degree of the PBW series.
int pbw_top_degree(const CartanMatrix& c, int n);

}  // namespace quiverq
