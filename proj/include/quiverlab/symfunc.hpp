#pragma once

// Schubert polynomials, Schur and super-Schur polynomials, Stanley
// symmetric functions with their Schur expansions, and Schur Q/P
// polynomials from circled shifted tableaux.

#include <map>
#include <vector>

#include "quiverlab/permcore.hpp"
#include "quiverlab/polyring.hpp"

namespace quiverlab {

// Weakly decreasing positive parts; the empty vector is the empty partition.
using Partition = std::vector<int>;

bool is_partition(const Partition& p);
bool is_strict(const Partition& p);
int size(const Partition& p);
Partition conjugate(const Partition& p);
// Removes trailing zeros; throws InvalidInput if not weakly decreasing.
Partition normalize_partition(std::vector<int> parts);
// All partitions of m, in decreasing lexicographic order.
std::vector<Partition> partitions_of(int m, int max_parts = -1);

// A list of variables.
using VarList = std::vector<VarId>;
VarList xs(int k);                 // x1..xk
VarList xs_block(int block, int k);  // x^block_1..x^block_k
VarList ys_block(int block, int k);

// Divided differences from the top of S_d. Guarded by limits.max_schubert_dim.
MVPoly schubert_single(const Permutation& w, int d = 0, const Limits& limits = {});
MVPoly schubert_double(const Permutation& w, int d = 0, const Limits& limits = {});

// Sum over semistandard tableaux of shape lambda with entries from vars.
MVPoly schur_s(const Partition& lambda, const VarList& vars);
MVPoly schur_s(const Partition& lambda, int k);
// Complete homogeneous and elementary symmetric polynomials.
MVPoly h_poly(int m, const VarList& vars);
MVPoly e_poly(int m, const VarList& vars);
// s_lambda(X - Y) = det(h_{lambda_i - i + j}(X - Y)),
// h_m(X - Y) = sum_{a+b=m} h_a(X) (-1)^b e_b(Y).
MVPoly super_schur(const Partition& lambda, const VarList& X, const VarList& Y);

// Number of semistandard tableaux of shape lambda and content mu.
long long kostka(const Partition& lambda, const std::vector<int>& mu);

using SchurExpansion = std::map<Partition, mpz_class>;

// Expansion of a polynomial symmetric in x1..xk (and free of other
// variables) in Schur polynomials with at most k rows. Throws NotSymmetric.
SchurExpansion schur_expand(const MVPoly& p, int k);
MVPoly schur_assemble(const SchurExpansion& e, int k);

// F_w(x1..xk, 0, ...) as the part of the Schubert polynomial of 1^m x w
// with every cross in rows <= k, m = k, checked against m = k + 1.
MVPoly stanley_single(const Permutation& w, int k, const Limits& limits = {});
// d_{w,alpha}: Schur expansion of F_w in max(l(w), 1) variables. Cached.
const SchurExpansion& stanley_coefficients(const Permutation& w);
// sum_alpha d_{w,alpha} s_alpha(X - Y).
MVPoly stanley_double(const Permutation& w, const VarList& X, const VarList& Y);

// Circled shifted tableau. Entry 2k-1 encodes the circled k, entry 2k the
// plain k, so the natural order of codes is 1° < 1 < 2° < 2 < ...
// rows[r] lists the entries of row r + 1, which starts in column r + 1.
struct ShiftedTableau {
  Partition shape;
  std::vector<std::vector<int>> rows;
};

inline int circled(int k) { return 2 * k - 1; }
inline int plain(int k) { return 2 * k; }

bool is_valid_circled_shifted(const ShiftedTableau& T);

// Sum over circled shifted tableaux with entries at most k of x^T.
// Throws NonStrictPartition.
MVPoly schur_Q(const Partition& mu, int k);
MVPoly schur_P(const Partition& mu, int k);
// Same over an explicit variable list.
MVPoly schur_Q(const Partition& mu, const VarList& vars);

}  // namespace quiverlab
