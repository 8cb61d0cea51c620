#pragma once

// Permutations in one-line notation (1-based values), partial permutations
// with their minimal-length embeddings, and signed permutations for the
// hyperoctahedral groups B_n and D_n.

#include <compare>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "quiverlab/errors.hpp"

namespace quiverlab {

using ReducedWord = std::vector<int>;

struct Box {
  int row = 0;
  int col = 0;
  auto operator<=>(const Box&) const = default;
};

class Permutation {
 public:
  Permutation() = default;
  // Throws NotAPermutation unless one_line is a bijection on {1..d}.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int d);
  static Permutation longest(int d);
  // s_i in S_d, 1 <= i < d.
  static Permutation simple(int i, int d);
  // Product s_{a1} s_{a2} ... in S_d.
  static Permutation from_word(std::span<const int> word, int d);

  int size() const { return static_cast<int>(one_line_.size()); }
  int operator()(int i) const { return one_line_[i - 1]; }
  const std::vector<int>& one_line() const { return one_line_; }

  int length() const;
  Permutation inverse() const;
  bool is_identity() const;

  // w * s_i swaps positions i, i+1; s_i * w swaps values i, i+1.
  Permutation times_simple(int i) const;
  Permutation simple_times(int i) const;
  bool has_right_descent(int i) const { return one_line_[i - 1] > one_line_[i]; }
  std::vector<int> right_descents() const;

  // 1^m x w in S_{m+d}.
  Permutation shifted(int m) const;
  // Same permutation viewed in S_d (d >= largest moved point).
  Permutation resized(int d) const;
  // Largest i with w(i) != i, or 0 for the identity.
  int max_moved() const;
  // True when w lies in the parabolic copy of S_k fixing k+1, k+2, ...
  bool in_S(int k) const { return max_moved() <= k; }

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> one_line_;
};

// (u * v)(i) = u(v(i)); the shorter argument is padded with fixed points.
Permutation operator*(const Permutation& u, const Permutation& v);

inline int length(const Permutation& w) { return w.length(); }

// D(w) = {(i,j) : w(i) > j and w^{-1}(j) > i}, sorted row-major.
std::vector<Box> diagram(const Permutation& w);

// Number the boxes of each diagram row right to left starting from the row
// index, then read rows left to right, top to bottom.
ReducedWord canonical_reduced_word(const Permutation& w);

bool is_reduced_word(std::span<const int> word, const Permutation& w);

std::vector<ReducedWord> reduced_words(const Permutation& w, const Limits& limits = {});

class PartialPermutation {
 public:
  PartialPermutation() = default;
  // ones are 1-based (row, col); at most one per row and per column.
  PartialPermutation(int rows, int cols, const std::vector<Box>& ones);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  // Column of the 1 in row r, or 0.
  int col_of_row(int r) const { return row_to_col_[r - 1]; }
  bool at(int r, int c) const { return row_to_col_[r - 1] == c; }
  std::vector<Box> ones() const;
  int rank() const;

  // Minimal-length embedding in S_{rows+cols}: rho as the northwest block,
  // fill-in 1s placed northwest to southeast.
  Permutation embed() const;
  int length() const { return embed().length(); }

  auto operator<=>(const PartialPermutation&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> row_to_col_;
};

inline Permutation embed_partial(const PartialPermutation& rho) { return rho.embed(); }
inline int partial_length(const PartialPermutation& rho) { return rho.length(); }

enum class CoxeterType { A, B, D };

// Signed permutation of {1..n}. Generator 0 is s_0 (negate the first entry)
// in type B and s_0hat = s_0 s_1 s_0 in type D; generators 1..n-1 swap
// adjacent positions.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::vector<int> one_line);
  static SignedPermutation identity(int n);
  static SignedPermutation from_permutation(const Permutation& w);
  static SignedPermutation from_word(std::span<const int> word, int n, CoxeterType type);

  int size() const { return static_cast<int>(one_line_.size()); }
  int operator()(int i) const { return one_line_[i - 1]; }
  const std::vector<int>& one_line() const { return one_line_; }

  int sign_changes() const;
  bool in_D() const { return sign_changes() % 2 == 0; }
  bool is_unsigned() const { return sign_changes() == 0; }
  Permutation to_permutation() const;

  // Type B length: inv(w) + sum of |w(j)| over negative entries.
  int length_B() const;
  // Type D length: inv(w) + #{i<j : w(i) + w(j) < 0}.
  int length_D() const;
  int length(CoxeterType type) const;

  SignedPermutation inverse() const;
  bool is_identity() const;
  SignedPermutation times_generator(int g, CoxeterType type) const;

  auto operator<=>(const SignedPermutation&) const = default;

 private:
  std::vector<int> one_line_;
};

SignedPermutation operator*(const SignedPermutation& u, const SignedPermutation& v);

std::vector<ReducedWord> reduced_words(const SignedPermutation& w, CoxeterType type,
                                       const Limits& limits = {});

// Breadth-first search over generator words; test oracle for length_B/length_D.
int brute_force_length(const SignedPermutation& w, CoxeterType type);

// All tuples (u_1, ..., u_k) with u_1 ... u_k = w, lengths adding up to
// l(w), and u_i satisfying slot_ok[i]. Results are in lexicographic order.
std::vector<std::vector<Permutation>> factorizations(
    const Permutation& w, const std::vector<std::function<bool(const Permutation&)>>& slot_ok,
    const Limits& limits = {});

std::vector<std::vector<SignedPermutation>> factorizations(
    const SignedPermutation& w, CoxeterType type,
    const std::vector<std::function<bool(const SignedPermutation&)>>& slot_ok,
    const Limits& limits = {});

// True iff every descent w(i) > w(i+1), 1 <= i < size, lies in breaks.
bool compatible_with(const Permutation& w, std::span<const int> breaks);
// Only the simple transpositions s_1..s_{n-1} are tested; s_0 is not a
// transposition.
bool compatible_with(const SignedPermutation& w, std::span<const int> breaks);

}  // namespace quiverlab
