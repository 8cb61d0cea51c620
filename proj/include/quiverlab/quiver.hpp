#pragma once

// Quiver polynomials from the ratio formula, quiver coefficients and the
// component formula check.

#include <map>
#include <string>
#include <vector>

#include "quiverlab/polyring.hpp"
#include "quiverlab/ranks.hpp"
#include "quiverlab/symfunc.hpp"

namespace quiverlab {

// Row p of the grid lies in strip i at offset a: x^i_a. Column c lies in
// column strip j at offset b from the left: y^{n-j}_b.
VarId quiver_row_var(const BlockGrid& g, int row);
VarId quiver_col_var(const BlockGrid& g, int col);

// Product over the hom region of (x - y) in the strip variables.
MVPoly schubert_hom(const RankConditions& r);

// Sum over RC(v(r)) of prod (x - y) over crosses outside the hom region.
MVPoly quiver_poly(const RankConditions& r, const Limits& limits = {});
// Relabelled double Schubert polynomial of v(r) divided by schubert_hom(r).
MVPoly quiver_poly_division(const RankConditions& r, const Limits& limits = {});

// y^j_b -> x^j_b.
MVPoly specialize_y_to_x(const MVPoly& p);

// Key: one partition per arrow.
using QuiverCoeffs = std::map<std::vector<Partition>, mpz_class>;

// c_mu(r) = sum over W_min(r) of prod_k d_{w_k, mu_k}.
QuiverCoeffs quiver_coeffs(const RankConditions& r, const Limits& limits = {});

// Sum over W_min(r) of prod_k F_{w_k}(x^{k-1} - x^k) in the truncated
// alphabets.
MVPoly component_sum(const RankConditions& r, const std::vector<LacingDiagram>& wmin);

struct ComponentReport {
  bool equal = false;
  std::size_t lhs_terms = 0;
  std::size_t rhs_terms = 0;
  std::size_t wmin_count = 0;
  int degree = 0;
  MVPoly difference;  // lhs - rhs
};

ComponentReport component_check(const RankConditions& r, const Limits& limits = {});

struct StabilityReport {
  bool stable = true;
  int degree_bound = 0;
  std::size_t compared = 0;  // monomial comparisons made
  std::vector<std::string> mismatches;
};

// Compares, for m = 0..m_max-1, the coefficients of Q_{m+r} and Q_{m+1+r}
// on every monomial of degree <= degree_bound in the variables both
// polynomials share. degree_bound < 0 means d(r).
StabilityReport stability_check(const RankConditions& r, int m_max = 1, int degree_bound = -1,
                                const Limits& limits = {});

}  // namespace quiverlab
