#pragma once

// Fulton's universal rank conditions and the bijection between their
// minimal lacing diagrams and constrained reduced factorizations; splitting
// of Schubert polynomials in types A, B, C and D.

#include <map>
#include <string>
#include <vector>

#include "quiverlab/permcore.hpp"
#include "quiverlab/polyring.hpp"
#include "quiverlab/quiver.hpp"
#include "quiverlab/ranks.hpp"
#include "quiverlab/symfunc.hpp"

namespace quiverlab {

// r_w(p, q) = #{a <= p : w(a) <= q}; 0 when p or q is not positive.
int rank_function(const Permutation& w, int p, int q);

// Rank conditions on a quiver with 2n vertices (n = 2n - 1 arrows), stored
// 0-based: the vertex numbered i in 1..2n is index i - 1.
RankConditions fulton_ranks(const Permutation& w, int n);

// Slot predicates u_i in S_{min(i, 2n-i) + 1}, i = 1..2n-1.
std::vector<std::function<bool(const Permutation&)>> fulton_slots(int n);
std::vector<std::vector<Permutation>> constrained_factorizations(const Permutation& w, int n,
                                                                 const Limits& limits = {});

// (u_1, ..., u_{2n-1}) with u_i the inverse of the embedding of w_i; the
// composite u_1 u_2 ... u_{2n-1} is w. Throws NotMinimal.
std::vector<Permutation> gamma(const LacingDiagram& W, const Permutation& w, int n);
// w_i is the northwest corner of the matrix of u_i^{-1}. Throws
// ConstraintViolated.
LacingDiagram gamma_inverse(const std::vector<Permutation>& us, const Permutation& w, int n);

struct Theorem2Report {
  bool ok = false;
  std::size_t wmin_count = 0;
  std::size_t factorization_count = 0;
  bool bijective = false;
  bool round_trip = false;
  bool component = false;
};

Theorem2Report theorem2_check(const Permutation& w, int n, const Limits& limits = {});

// Key: one partition per block X_1..X_k.
using SplitA = std::map<std::vector<Partition>, mpz_class>;

// Tableau count c_lambda(w) for breaks a_1 < ... < a_k. Throws NotCompatible.
SplitA split_A(const Permutation& w, const std::vector<int>& breaks, const Limits& limits = {});
// sum c_lambda prod s_{lambda^i}(x_{a_{i-1}+1}, ..., x_{a_i}).
MVPoly assemble_split_A(const SplitA& c, const std::vector<int>& breaks);

// f_{u,mu} (types B, C) or e_{u,mu} (type D). A u present with an empty
// inner map is a known zero.
using CoeffTable = std::map<SignedPermutation, std::map<Partition, mpz_class>>;

// Polynomial in x with one coefficient slot per Q_mu(Z) (or P_mu(Z)).
using QExpansion = std::map<Partition, MVPoly>;

struct SplitBCD {
  char letter = 'C';                  // 'B', 'C' or 'D'
  int denominator_log2 = 0;           // global factor 2^{-denominator_log2}
  std::map<std::pair<Partition, std::vector<Partition>>, mpz_class> terms;
};

// Assembles c_{mu;lambda}(w) = f_{u mu} c_lambda(v) over length-additive
// w = u v with v unsigned. letter is 'B', 'C' or 'D'. Throws NotCompatible
// and MissingTableEntry.
SplitBCD split_BCD(const SignedPermutation& w, const std::vector<int>& breaks,
                   const CoeffTable& table, char letter, const Limits& limits = {});

// Drops terms with some l(lambda^i) > |X_i|; their Schur product is zero.
SplitA nonvanishing(const SplitA& c, const std::vector<int>& breaks);
SplitBCD nonvanishing(const SplitBCD& s, const std::vector<int>& breaks);

// Sum over the terms as Q_mu(Z) slots (ignores the global power of two).
QExpansion assemble_split_BCD(const SplitBCD& s, const std::vector<int>& breaks);

// Length-additive w = u v, v in S_n (u in B_n, or D_n when letter is 'D').
std::vector<std::pair<SignedPermutation, Permutation>> bcd_factorizations(
    const SignedPermutation& w, char letter, const Limits& limits = {});

// Solves sum_{uv = w} F_u(Z) S_v(X) = printed for the f_{u,mu} of the
// occurring u. Throws InconsistentSystem unless the solution is unique, integral
// and nonnegative.
CoeffTable solve_coeff_table(const SignedPermutation& w, const QExpansion& printed, char letter,
                             const Limits& limits = {});

}  // namespace quiverlab
