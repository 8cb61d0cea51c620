#include "quiverlab/quiver.hpp"

#include <set>

#include "quiverlab/rcgraph.hpp"

namespace quiverlab {

VarId quiver_row_var(const BlockGrid& g, int row) {
  const int i = g.row_strip(row);
  return VarId::xb(i, row - g.row_start(i) + 1);
}

VarId quiver_col_var(const BlockGrid& g, int col) {
  const int j = g.col_strip(col);
  return VarId::yb(g.n() - j, col - g.col_start(j) + 1);
}

namespace {

MVPoly box_factor(const BlockGrid& g, int row, int col) {
  return MVPoly::var(quiver_row_var(g, row)) - MVPoly::var(quiver_col_var(g, col));
}

}  // namespace

MVPoly schubert_hom(const RankConditions& r) {
  const BlockGrid g(r);
  MVPoly p(1L);
  for (int row = 1; row <= g.d(); ++row)
    for (int col = 1; col <= g.d(); ++col)
      if (g.in_hom(row, col)) p *= box_factor(g, row, col);
  return p;
}

MVPoly quiver_poly(const RankConditions& r, const Limits& limits) {
  const Permutation v = zelevinsky(r);
  const BlockGrid g(r);
  // Factors are shared between pipe dreams; build each once.
  std::map<Box, MVPoly> factor;
  MVPoly sum;
  for (const auto& D : enumerate_rc(v, limits)) {
    MVPoly term(1L);
    for (const Box& b : D.crosses()) {
      if (g.in_hom(b.row, b.col)) continue;
      auto it = factor.find(b);
      if (it == factor.end()) it = factor.emplace(b, box_factor(g, b.row, b.col)).first;
      term *= it->second;
    }
    sum += term;
  }
  return sum;
}

MVPoly quiver_poly_division(const RankConditions& r, const Limits& limits) {
  const Permutation v = zelevinsky(r);
  const BlockGrid g(r);
  const MVPoly full = schubert_double(v, g.d(), limits);
  const MVPoly relabelled = rename(full, [&](VarId u) {
    return u.alphabet == Alphabet::X ? quiver_row_var(g, u.pos) : quiver_col_var(g, u.pos);
  });
  return exact_div(relabelled, schubert_hom(r));
}

MVPoly specialize_y_to_x(const MVPoly& p) {
  return rename(p, [](VarId u) {
    if (u.alphabet == Alphabet::Y) u.alphabet = Alphabet::X;
    return u;
  });
}

QuiverCoeffs quiver_coeffs(const RankConditions& r, const Limits& limits) {
  QuiverCoeffs out;
  const int n = r.n();
  for (const auto& W : wmin(r, limits)) {
    // Distribute the product of the n Schur expansions.
    std::map<std::vector<Partition>, mpz_class> acc{{{}, mpz_class(1)}};
    for (int k = 1; k <= n; ++k) {
      const auto& d = stanley_coefficients(W.w[k - 1].embed());
      std::map<std::vector<Partition>, mpz_class> next;
      for (const auto& [key, c] : acc)
        for (const auto& [alpha, dc] : d) {
          auto k2 = key;
          k2.push_back(alpha);
          next[k2] += c * dc;
        }
      acc = std::move(next);
    }
    for (const auto& [key, c] : acc) out[key] += c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

MVPoly component_sum(const RankConditions& r, const std::vector<LacingDiagram>& wmin_list) {
  const int n = r.n();
  MVPoly sum;
  std::map<std::pair<int, Permutation>, MVPoly> cache;
  for (const auto& W : wmin_list) {
    MVPoly term(1L);
    for (int k = 1; k <= n; ++k) {
      const Permutation w = W.w[k - 1].embed();
      auto key = std::make_pair(k, w);
      auto it = cache.find(key);
      if (it == cache.end())
        it = cache
                 .emplace(key, stanley_double(w, xs_block(k - 1, r.dim(k - 1)),
                                              xs_block(k, r.dim(k))))
                 .first;
      term *= it->second;
    }
    sum += term;
  }
  return sum;
}

ComponentReport component_check(const RankConditions& r, const Limits& limits) {
  ComponentReport rep;
  const MVPoly lhs = specialize_y_to_x(quiver_poly(r, limits));
  const auto W = wmin(r, limits);
  const MVPoly rhs = component_sum(r, W);
  rep.wmin_count = W.size();
  rep.lhs_terms = lhs.size();
  rep.rhs_terms = rhs.size();
  rep.degree = expected_codim(r);
  rep.difference = lhs - rhs;
  rep.equal = rep.difference.is_zero();
  return rep;
}

StabilityReport stability_check(const RankConditions& r, int m_max, int degree_bound,
                                const Limits& limits) {
  StabilityReport rep;
  rep.degree_bound = degree_bound < 0 ? expected_codim(r) : degree_bound;
  auto common = [](const MVPoly& p, const std::set<VarId>& vars) {
    MVPoly out;
    for (const auto& [m, c] : p.terms()) {
      bool inside = true;
      for (const auto& [v, e] : m.factors()) inside = inside && vars.count(VarId::unpack(v)) > 0;
      if (inside) out.add_term(m, c);
    }
    return out;
  };
  auto alphabet_of = [](const RankConditions& rr) {
    std::set<VarId> vars;
    for (int i = 0; i <= rr.n(); ++i)
      for (int a = 1; a <= rr.dim(i); ++a) {
        vars.insert(VarId::xb(i, a));
        vars.insert(VarId::yb(i, a));
      }
    return vars;
  };
  MVPoly prev = quiver_poly(r, limits).truncate_degree(rep.degree_bound);
  for (int m = 0; m < m_max; ++m) {
    const RankConditions r0 = r.shifted(m);
    const RankConditions r1 = r.shifted(m + 1);
    const MVPoly next = quiver_poly(r1, limits).truncate_degree(rep.degree_bound);
    const auto shared = alphabet_of(r0);  // r0's alphabet is contained in r1's
    const MVPoly a = common(prev, shared);
    const MVPoly b = common(next, shared);
    std::set<Monomial, MonomialGreater> monos;
    for (const auto& [mono, c] : a.terms()) monos.insert(mono);
    for (const auto& [mono, c] : b.terms()) monos.insert(mono);
    rep.compared += monos.size();
    for (const auto& mono : monos)
      if (a.coeff(mono) != b.coeff(mono)) {
        rep.stable = false;
        rep.mismatches.push_back("m=" + std::to_string(m) + " " + mono.to_string() + ": " +
                                 a.coeff(mono).get_str() + " vs " + b.coeff(mono).get_str());
      }
    prev = next;
  }
  return rep;
}

}  // namespace quiverlab
