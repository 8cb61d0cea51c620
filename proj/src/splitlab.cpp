#include "quiverlab/splitlab.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace quiverlab {

// ------------------------------------------------------------------ Fulton

int rank_function(const Permutation& w, int p, int q) {
  int count = 0;
  for (int a = 1; a <= std::min(p, w.size()); ++a)
    if (w(a) <= q) ++count;
  return count;
}

RankConditions fulton_ranks(const Permutation& w, int n) {
  if (n < 1) throw InvalidInput("fulton_ranks: n must be positive");
  if (w.max_moved() > n + 1) throw InvalidInput("fulton_ranks: w must lie in S_{n+1}");
  const Permutation u = w.resized(n + 1);
  const int top = 2 * n;
  std::vector<std::vector<int>> t(top);
  for (int i = 1; i <= top; ++i)
    for (int j = i; j <= top; ++j) {
      int v;
      if (i <= n && n < j)
        v = rank_function(u, 2 * n + 1 - j, i);
      else if (j <= n)
        v = i;
      else
        v = 2 * n + 1 - j;
      t[i - 1].push_back(v);
    }
  return RankConditions(top - 1, std::move(t));
}

std::vector<std::function<bool(const Permutation&)>> fulton_slots(int n) {
  std::vector<std::function<bool(const Permutation&)>> slots;
  for (int i = 1; i <= 2 * n - 1; ++i) {
    const int k = std::min(i, 2 * n - i) + 1;
    slots.push_back([k](const Permutation& u) { return u.in_S(k); });
  }
  return slots;
}

std::vector<std::vector<Permutation>> constrained_factorizations(const Permutation& w, int n,
                                                                 const Limits& limits) {
  return factorizations(w.resized(n + 1), fulton_slots(n), limits);
}

std::vector<Permutation> gamma(const LacingDiagram& W, const Permutation& w, int n) {
  const RankConditions r = fulton_ranks(w, n);
  if (W.n() != r.n() || W.length() != expected_codim(r) || !(W.lace_counts() == lace_array(r)))
    throw NotMinimal("gamma: lacing diagram is not a minimal lacing diagram for the ranks of w");
  std::vector<Permutation> us;
  for (int i = 1; i <= 2 * n - 1; ++i) {
    const Permutation u = W.w[i - 1].embed().inverse();
    if (!u.in_S(std::min(i, 2 * n - i) + 1))
      throw std::logic_error("gamma: factor outside its parabolic subgroup");
    us.push_back(u.resized(n + 1));
  }
  return us;
}

LacingDiagram gamma_inverse(const std::vector<Permutation>& us, const Permutation& w, int n) {
  if (static_cast<int>(us.size()) != 2 * n - 1)
    throw ConstraintViolated("gamma_inverse: expected 2n-1 factors");
  const Permutation target = w.resized(n + 1);
  Permutation prod = Permutation::identity(n + 1);
  int len = 0;
  for (int i = 1; i <= 2 * n - 1; ++i) {
    const Permutation& u = us[i - 1];
    if (!u.in_S(std::min(i, 2 * n - i) + 1))
      throw ConstraintViolated("gamma_inverse: u_" + std::to_string(i) + " not in S_" +
                               std::to_string(std::min(i, 2 * n - i) + 1));
    prod = prod * u;
    len += u.length();
  }
  if (prod.resized(n + 1) != target || len != target.length())
    throw ConstraintViolated("gamma_inverse: not a reduced factorization of w");
  const RankConditions r = fulton_ranks(w, n);
  LacingDiagram W;
  for (int k = 0; k <= r.n(); ++k) W.dims.push_back(r.dim(k));
  for (int i = 1; i <= 2 * n - 1; ++i) {
    const int a = W.dims[i - 1];
    const int b = W.dims[i];
    const Permutation m = us[i - 1].inverse().resized(std::max(a + b, us[i - 1].max_moved()));
    std::vector<Box> ones;
    for (int row = 1; row <= a; ++row)
      if (m(row) <= b) ones.push_back({row, m(row)});
    PartialPermutation wi(a, b, ones);
    if (wi.embed() != m.resized(a + b))
      throw ConstraintViolated("gamma_inverse: u_" + std::to_string(i) +
                               " is not the embedding of its corner");
    W.w.push_back(wi);
  }
  return W;
}

Theorem2Report theorem2_check(const Permutation& w, int n, const Limits& limits) {
  Theorem2Report rep;
  const RankConditions r = fulton_ranks(w, n);
  const auto W = wmin(r, limits);
  const auto F = constrained_factorizations(w, n, limits);
  rep.wmin_count = W.size();
  rep.factorization_count = F.size();
  std::set<std::vector<Permutation>> images;
  rep.round_trip = true;
  for (const auto& lacing : W) {
    auto us = gamma(lacing, w, n);
    images.insert(us);
    if (!(gamma_inverse(us, w, n) == lacing)) rep.round_trip = false;
  }
  for (const auto& us : F)
    if (gamma(gamma_inverse(us, w, n), w, n) != us) rep.round_trip = false;
  rep.bijective =
      images.size() == W.size() && std::set<std::vector<Permutation>>(F.begin(), F.end()) == images;
  rep.component = component_check(r, limits).equal;
  rep.ok = rep.wmin_count == rep.factorization_count && rep.bijective && rep.round_trip &&
           rep.component;
  return rep;
}

// ----------------------------------------------------------------- type A

namespace {

void check_breaks(const std::vector<int>& breaks, int n) {
  for (std::size_t j = 0; j < breaks.size(); ++j) {
    if (breaks[j] < 1 || breaks[j] >= std::max(n, 2))
      throw InvalidInput("breaks must lie in 1..n-1");
    if (j > 0 && breaks[j] <= breaks[j - 1]) throw InvalidInput("breaks must increase");
  }
}

}  // namespace

SplitA split_A(const Permutation& w, const std::vector<int>& breaks, const Limits& limits) {
  check_breaks(breaks, w.size());
  if (!compatible_with(w, breaks))
    throw NotCompatible("split_A: w has a descent outside the breaks");
  const int k = static_cast<int>(breaks.size());
  SplitA out;
  std::vector<Partition> shapes(k);
  for (const auto& word : reduced_words(w, limits)) {
    const int len = static_cast<int>(word.size());
    // prev: previous column of the current block, top to bottom.
    std::function<void(int, int, const std::vector<int>&)> rec =
        [&](int pos, int block, const std::vector<int>& prev) {
          if (pos == len) {
            ++out[shapes];
            return;
          }
          for (int b = std::max(block, 0); b < k; ++b) {
            const int lower = b == 0 ? 0 : breaks[b - 1];
            const bool continuing = b == block && !prev.empty();
            std::vector<int> col;
            for (int L = 1; pos + L <= len; ++L) {
              const int letter = word[pos + L - 1];
              if (letter <= lower) break;
              if (L > 1 && letter >= word[pos + L - 2]) break;
              col.insert(col.begin(), letter);
              if (continuing) {
                if (L > static_cast<int>(prev.size())) break;
                // Rows weakly increase: compare top-aligned entries.
                bool ok = true;
                for (int r = 0; r < L && ok; ++r) ok = prev[r] <= col[r];
                if (!ok) continue;
              }
              shapes[b].push_back(L);
              rec(pos + L, b, col);
              shapes[b].pop_back();
            }
          }
        };
    rec(0, -1, {});
  }
  return out;
}

MVPoly assemble_split_A(const SplitA& c, const std::vector<int>& breaks) {
  MVPoly sum;
  for (const auto& [lambdas, coeff] : c) {
    MVPoly term(coeff);
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      VarList vars;
      for (int p = (i == 0 ? 0 : breaks[i - 1]) + 1; p <= breaks[i]; ++p)
        vars.push_back(VarId::x(p));
      term *= schur_s(lambdas[i], vars);
    }
    sum += term;
  }
  return sum;
}

namespace {

bool vanishes(const std::vector<Partition>& lambdas, const std::vector<int>& breaks) {
  for (std::size_t i = 0; i < lambdas.size() && i < breaks.size(); ++i) {
    const int width = breaks[i] - (i == 0 ? 0 : breaks[i - 1]);
    if (static_cast<int>(lambdas[i].size()) > width) return true;
  }
  return false;
}

}  // namespace

SplitA nonvanishing(const SplitA& c, const std::vector<int>& breaks) {
  SplitA out;
  for (const auto& [lambdas, coeff] : c)
    if (!vanishes(lambdas, breaks)) out.emplace(lambdas, coeff);
  return out;
}

SplitBCD nonvanishing(const SplitBCD& s, const std::vector<int>& breaks) {
  SplitBCD out = s;
  std::erase_if(out.terms, [&](const auto& kv) { return vanishes(kv.first.second, breaks); });
  return out;
}

// ------------------------------------------------------------ types B/C/D

namespace {

CoxeterType group_of(char letter) {
  switch (letter) {
    case 'B':
    case 'C':
      return CoxeterType::B;
    case 'D':
      return CoxeterType::D;
  }
  throw InvalidInput(std::string("unknown type letter ") + letter);
}

std::string signed_str(const SignedPermutation& u) {
  std::string s = "[";
  for (int i = 1; i <= u.size(); ++i) s += (i > 1 ? "," : "") + std::to_string(u(i));
  return s + "]";
}

}  // namespace

std::vector<std::pair<SignedPermutation, Permutation>> bcd_factorizations(
    const SignedPermutation& w, char letter, const Limits& limits) {
  const CoxeterType type = group_of(letter);
  if (type == CoxeterType::D && !w.in_D())
    throw InvalidInput("type D needs an even number of sign changes");
  std::vector<std::function<bool(const SignedPermutation&)>> slots{
      [](const SignedPermutation&) { return true; },
      [](const SignedPermutation& v) { return v.is_unsigned(); }};
  std::vector<std::pair<SignedPermutation, Permutation>> out;
  for (const auto& f : factorizations(w, type, slots, limits))
    out.emplace_back(f[0], f[1].to_permutation());
  return out;
}

SplitBCD split_BCD(const SignedPermutation& w, const std::vector<int>& breaks,
                   const CoeffTable& table, char letter, const Limits& limits) {
  check_breaks(breaks, w.size());
  if (!compatible_with(w, breaks))
    throw NotCompatible("split_BCD: w has a descent outside the breaks");
  SplitBCD res;
  res.letter = letter;
  res.denominator_log2 = letter == 'B' ? w.sign_changes() : 0;
  for (const auto& [u, v] : bcd_factorizations(w, letter, limits)) {
    if (!compatible_with(v, breaks))
      throw std::logic_error("split_BCD: factor v lost compatibility with the breaks");
    auto it = table.find(u);
    if (it == table.end())
      throw MissingTableEntry("split_BCD: no coefficients for u = " + signed_str(u));
    const SplitA cv = split_A(v, breaks, limits);
    for (const auto& [mu, f] : it->second)
      for (const auto& [lambdas, c] : cv) res.terms[{mu, lambdas}] += f * c;
  }
  std::erase_if(res.terms, [](const auto& kv) { return kv.second == 0; });
  return res;
}

QExpansion assemble_split_BCD(const SplitBCD& s, const std::vector<int>& breaks) {
  QExpansion out;
  for (const auto& [key, c] : s.terms) {
    SplitA single{{key.second, c}};
    out[key.first] += assemble_split_A(single, breaks);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

CoeffTable solve_coeff_table(const SignedPermutation& w, const QExpansion& printed, char letter,
                             const Limits& limits) {
  const auto facts = bcd_factorizations(w, letter, limits);
  const int m = static_cast<int>(facts.size());
  std::vector<MVPoly> schub;
  for (const auto& [u, v] : facts) schub.push_back(schubert_single(v, w.size(), limits));
  CoeffTable table;
  for (const auto& [u, v] : facts) table[u];
  for (const auto& [mu, rhs] : printed) {
    if (!is_strict(mu)) throw NonStrictPartition("solve_coeff_table: Q index must be strict");
    std::set<Monomial, MonomialGreater> monos;
    for (const auto& p : schub)
      for (const auto& [mono, c] : p.terms()) monos.insert(mono);
    for (const auto& [mono, c] : rhs.terms()) monos.insert(mono);
    // Augmented matrix, one row per monomial.
    std::vector<std::vector<mpq_class>> A;
    for (const auto& mono : monos) {
      std::vector<mpq_class> row(m + 1);
      for (int t = 0; t < m; ++t) row[t] = schub[t].coeff(mono);
      row[m] = rhs.coeff(mono);
      A.push_back(std::move(row));
    }
    const int rows = static_cast<int>(A.size());
    int rank = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < m && rank < rows; ++col) {
      int piv = -1;
      for (int i = rank; i < rows; ++i)
        if (A[i][col] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      std::swap(A[piv], A[rank]);
      const mpq_class p = A[rank][col];
      for (auto& x : A[rank]) x /= p;
      for (int i = 0; i < rows; ++i) {
        if (i == rank || A[i][col] == 0) continue;
        const mpq_class f = A[i][col];
        for (int c = col; c <= m; ++c) A[i][c] -= f * A[rank][c];
      }
      pivot_col.push_back(col);
      ++rank;
    }
    for (int i = rank; i < rows; ++i)
      if (A[i][m] != 0)
        throw InconsistentSystem("solve_coeff_table: no solution for the Q-index of size " +
                                 std::to_string(size(mu)));
    if (rank < m)
      throw InconsistentSystem("solve_coeff_table: coefficients are not uniquely determined");
    for (int i = 0; i < rank; ++i) {
      const mpq_class& val = A[i][m];
      if (val.get_den() != 1 || val < 0)
        throw InconsistentSystem("solve_coeff_table: coefficient " + val.get_str() +
                                 " is not a nonnegative integer");
      if (val != 0) table[facts[pivot_col[i]].first][mu] = val.get_num();
    }
  }
  return table;
}

}  // namespace quiverlab
