#pragma once

// Rank conditions for an equioriented type A quiver of length n, their lace
// arrays, lacing diagrams, and the Zelevinsky permutation with its block
// decomposition of the d x d grid.

#include <optional>
#include <string>
#include <vector>

#include "quiverlab/permcore.hpp"

namespace quiverlab {

class RankConditions {
 public:
  RankConditions() = default;
  // table[i][j - i] = r_ij for 0 <= i <= j <= n.
  RankConditions(int n, std::vector<std::vector<int>> table);

  int n() const { return n_; }
  // r_ij, 0 outside 0 <= i <= j <= n.
  int operator()(int i, int j) const;
  int dim(int i) const { return (*this)(i, i); }
  int total_dim() const;
  const std::vector<std::vector<int>>& table() const { return table_; }

  // {m + r_ij}.
  RankConditions shifted(int m) const;

  bool operator==(const RankConditions&) const = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> table_;
};

struct RankViolation {
  int i = 0;
  int j = 0;
  std::string message;
};

// First violated occurrence inequality, or nullopt.
std::optional<RankViolation> validate(const RankConditions& r);
// Throws InvalidInput with the violation message.
void require_valid(const RankConditions& r);

class LaceArray {
 public:
  LaceArray() = default;
  explicit LaceArray(int n) : n_(n), s_(n + 1, std::vector<int>(n + 1, 0)) {}
  int n() const { return n_; }
  int operator()(int i, int j) const { return s_[i][j]; }
  int& at(int i, int j) { return s_[i][j]; }
  bool operator==(const LaceArray&) const = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> s_;
};

// s_ij = r_ij - r_{i-1,j} - r_{i,j+1} + r_{i-1,j+1}.
LaceArray lace_array(const RankConditions& r);

// d(r) = sum_{i<j} (r_{i,j-1} - r_ij)(r_{i+1,j} - r_ij).
int expected_codim(const RankConditions& r);

// Columns 0..n of dims[k] vertices each; w[k-1] is the dims[k-1] x dims[k]
// partial permutation of edges between columns k-1 and k.
struct LacingDiagram {
  std::vector<int> dims;
  std::vector<PartialPermutation> w;

  int n() const { return static_cast<int>(dims.size()) - 1; }
  int length() const;
  // Number of (i,j)-laces: maximal paths from column i to column j.
  LaceArray lace_counts() const;
  auto operator<=>(const LacingDiagram&) const = default;
};

std::vector<LacingDiagram> enumerate_lacing(const RankConditions& r, bool minimal_only,
                                            const Limits& limits = {});

inline std::vector<LacingDiagram> wmin(const RankConditions& r, const Limits& limits = {}) {
  return enumerate_lacing(r, true, limits);
}

// Block layout of the d x d grid: row strip i has dim(i) rows, column strip
// j has dim(n - j) columns; M_ij is their intersection.
class BlockGrid {
 public:
  explicit BlockGrid(const RankConditions& r);
  int n() const { return n_; }
  int d() const { return d_; }
  int row_start(int i) const { return row_start_[i]; }  // first row of strip i (1-based)
  int row_height(int i) const { return row_start_[i + 1] - row_start_[i]; }
  int col_start(int j) const { return col_start_[j]; }
  int col_width(int j) const { return col_start_[j + 1] - col_start_[j]; }
  int row_strip(int row) const;
  int col_strip(int col) const;
  // Box lies in the union of M_ij with i + j <= n - 2.
  bool in_hom(int row, int col) const { return row_strip(row) + col_strip(col) <= n_ - 2; }
  int hom_area() const;
  // Number of points of w in each block, indexed [i][j].
  std::vector<std::vector<int>> block_counts(const Permutation& w) const;

 private:
  int n_;
  int d_;
  std::vector<int> row_start_;
  std::vector<int> col_start_;
  std::vector<int> row_of_;
  std::vector<int> col_of_;
};

Permutation zelevinsky(const RankConditions& r);

// l(v(r)) == |hom region| + d(r).
bool length_identity_check(const RankConditions& r);

// All permutations with the same number of points in every block M_ij as
// v(r).
std::vector<Permutation> enumerate_block_class(const RankConditions& r, const Limits& limits = {});

// All valid rank conditions for quivers of length n with min_dim <= r_ii <=
// max_dim and, when max_total >= 0, total dimension at most max_total.
std::vector<RankConditions> all_rank_conditions(int n, int max_dim, int min_dim = 0,
                                                int max_total = -1);

}  // namespace quiverlab
