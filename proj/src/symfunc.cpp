#include "quiverlab/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>

#include "quiverlab/rcgraph.hpp"

namespace quiverlab {

// --------------------------------------------------------------- partitions

bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

bool is_strict(const Partition& p) {
  if (!is_partition(p)) return false;
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p[i] == p[i - 1]) return false;
  return true;
}

int size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

Partition conjugate(const Partition& p) {
  Partition c;
  if (p.empty()) return c;
  for (int j = 1; j <= p[0]; ++j) {
    int len = 0;
    for (int part : p)
      if (part >= j) ++len;
    c.push_back(len);
  }
  return c;
}

Partition normalize_partition(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  if (!is_partition(parts)) throw InvalidInput("not a partition");
  return parts;
}

std::vector<Partition> partitions_of(int m, int max_parts) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int largest) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    if (max_parts >= 0 && static_cast<int>(cur.size()) == max_parts) return;
    for (int part = std::min(left, largest); part >= 1; --part) {
      cur.push_back(part);
      rec(left - part, part);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

VarList xs(int k) {
  VarList v;
  for (int i = 1; i <= k; ++i) v.push_back(VarId::x(i));
  return v;
}

VarList xs_block(int block, int k) {
  VarList v;
  for (int i = 1; i <= k; ++i) v.push_back(VarId::xb(block, i));
  return v;
}

VarList ys_block(int block, int k) {
  VarList v;
  for (int i = 1; i <= k; ++i) v.push_back(VarId::yb(block, i));
  return v;
}

// -------------------------------------------------------- Schubert polynomials

namespace {

MVPoly descend(const Permutation& w, const MVPoly& top) {
  // Walk from w up to w0 by ascents, then apply the divided differences back.
  std::vector<int> path;
  Permutation u = w;
  const Permutation w0 = Permutation::longest(w.size());
  while (u != w0) {
    int i = 1;
    while (u.has_right_descent(i)) ++i;
    path.push_back(i);
    u = u.times_simple(i);
  }
  MVPoly p = top;
  for (auto it = path.rbegin(); it != path.rend(); ++it) p = divided_difference(p, *it);
  return p;
}

Permutation padded(const Permutation& w, int d, const Limits& limits, int cap) {
  if (d == 0) d = std::max(w.size(), 1);
  if (d < w.max_moved()) throw InvalidInput("schubert: d smaller than the permutation");
  require_guard(d <= cap, "schubert: d = " + std::to_string(d) + " exceeds guard " +
                              std::to_string(cap));
  (void)limits;
  return w.resized(d);
}

}  // namespace

MVPoly schubert_single(const Permutation& w, int d, const Limits& limits) {
  const Permutation u = padded(w, d, limits, limits.max_schubert_dim);
  const int n = u.size();
  Monomial top;
  for (int i = 1; i < n; ++i) top = top * Monomial::var(VarId::x(i), n - i);
  return descend(u, MVPoly::monomial(top, 1));
}

MVPoly schubert_double(const Permutation& w, int d, const Limits& limits) {
  // The staircase product has 2^(d(d-1)/2) terms before cancellation.
  const Permutation u = padded(w, d, limits, limits.max_schubert_dim - 1);
  const int n = u.size();
  MVPoly top(1L);
  for (int i = 1; i < n; ++i)
    for (int j = 1; i + j <= n; ++j)
      top *= MVPoly::var(VarId::x(i)) - MVPoly::var(VarId::y(j));
  return descend(u, top);
}

// ------------------------------------------------------------ Schur functions

MVPoly schur_s(const Partition& lambda, const VarList& vars) {
  if (!is_partition(lambda)) throw InvalidInput("schur_s: not a partition");
  const int k = static_cast<int>(vars.size());
  if (static_cast<int>(lambda.size()) > k) return MVPoly();
  if (lambda.empty()) return MVPoly(1L);
  std::vector<std::vector<int>> T(lambda.size());
  for (std::size_t r = 0; r < lambda.size(); ++r) T[r].assign(lambda[r], 0);
  std::vector<int> counts(k, 0);
  MVPoly out;
  const int rows = static_cast<int>(lambda.size());
  std::function<void(int, int)> fill = [&](int r, int c) {
    if (r == rows) {
      Monomial m;
      for (int v = 0; v < k; ++v)
        if (counts[v] > 0) m = m * Monomial::var(vars[v], counts[v]);
      out.add_term(m, 1);
      return;
    }
    if (c == lambda[r]) {
      fill(r + 1, 0);
      return;
    }
    int lo = c > 0 ? T[r][c - 1] : 1;
    if (r > 0) lo = std::max(lo, T[r - 1][c] + 1);
    // Leave room for the strictly increasing entries below in column c.
    int below = 0;
    for (int r2 = r + 1; r2 < rows && lambda[r2] > c; ++r2) ++below;
    const int hi = k - below;
    for (int v = lo; v <= hi; ++v) {
      T[r][c] = v;
      ++counts[v - 1];
      fill(r, c + 1);
      --counts[v - 1];
    }
  };
  fill(0, 0);
  return out;
}

MVPoly schur_s(const Partition& lambda, int k) { return schur_s(lambda, xs(k)); }

MVPoly h_poly(int m, const VarList& vars) {
  if (m < 0) return MVPoly();
  if (m == 0) return MVPoly(1L);
  MVPoly out;
  const int k = static_cast<int>(vars.size());
  std::function<void(int, int, Monomial)> rec = [&](int start, int left, Monomial mono) {
    if (left == 0) {
      out.add_term(mono, 1);
      return;
    }
    for (int v = start; v < k; ++v) rec(v, left - 1, mono * Monomial::var(vars[v]));
  };
  rec(0, m, Monomial{});
  return out;
}

MVPoly e_poly(int m, const VarList& vars) {
  if (m < 0) return MVPoly();
  if (m == 0) return MVPoly(1L);
  MVPoly out;
  const int k = static_cast<int>(vars.size());
  std::function<void(int, int, Monomial)> rec = [&](int start, int left, Monomial mono) {
    if (left == 0) {
      out.add_term(mono, 1);
      return;
    }
    for (int v = start; v <= k - left; ++v) rec(v + 1, left - 1, mono * Monomial::var(vars[v]));
  };
  rec(0, m, Monomial{});
  return out;
}

MVPoly super_schur(const Partition& lambda, const VarList& X, const VarList& Y) {
  if (!is_partition(lambda)) throw InvalidInput("super_schur: not a partition");
  const int l = static_cast<int>(lambda.size());
  if (l == 0) return MVPoly(1L);
  const int top = lambda[0] + l;
  std::vector<MVPoly> h(top + 1);
  for (int m = 0; m <= top; ++m)
    for (int a = 0; a <= m; ++a) {
      const int b = m - a;
      MVPoly t = h_poly(a, X) * e_poly(b, Y);
      h[m] += b % 2 == 0 ? t : -t;
    }
  auto entry = [&](int i, int j) -> const MVPoly* {
    const int m = lambda[i] - i + j;
    static const MVPoly zero;
    return m < 0 || m > top ? &zero : &h[m];
  };
  // Leibniz expansion; l is small here.
  std::vector<int> perm(l);
  std::iota(perm.begin(), perm.end(), 0);
  MVPoly det;
  do {
    int inversions = 0;
    for (int a = 0; a < l; ++a)
      for (int b = a + 1; b < l; ++b)
        if (perm[a] > perm[b]) ++inversions;
    MVPoly term(1L);
    bool zero = false;
    for (int i = 0; i < l && !zero; ++i) {
      const MVPoly* e = entry(i, perm[i]);
      if (e->is_zero()) zero = true;
      else term *= *e;
    }
    if (zero) continue;
    det += inversions % 2 == 0 ? term : -term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// ---------------------------------------------------------------- Kostka

namespace {

std::mutex kostka_mutex;
std::map<std::pair<Partition, std::vector<int>>, long long> kostka_cache;

long long kostka_rec(const Partition& lambda, const std::vector<int>& mu) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  {
    std::lock_guard<std::mutex> lock(kostka_mutex);
    auto it = kostka_cache.find({lambda, mu});
    if (it != kostka_cache.end()) return it->second;
  }
  const int strip = mu.back();
  std::vector<int> rest(mu.begin(), mu.end() - 1);
  // Remove a horizontal strip of size `strip`: nu_i in [lambda_{i+1}, lambda_i].
  long long total = 0;
  Partition nu(lambda.size());
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == lambda.size()) {
      if (left == 0) total += kostka_rec(normalize_partition(nu), rest);
      return;
    }
    const int floor = i + 1 < lambda.size() ? lambda[i + 1] : 0;
    for (int take = 0; take <= std::min(left, lambda[i] - floor); ++take) {
      nu[i] = lambda[i] - take;
      rec(i + 1, left - take);
    }
  };
  rec(0, strip);
  std::lock_guard<std::mutex> lock(kostka_mutex);
  kostka_cache.emplace(std::make_pair(lambda, mu), total);
  return total;
}

}  // namespace

long long kostka(const Partition& lambda, const std::vector<int>& mu) {
  if (!is_partition(lambda)) throw InvalidInput("kostka: not a partition");
  std::vector<int> m;
  for (int v : mu)
    if (v < 0) throw InvalidInput("kostka: negative content");
  m = mu;
  while (!m.empty() && m.back() == 0) m.pop_back();
  // Zero entries inside the content do not matter.
  std::erase(m, 0);
  if (size(lambda) != std::accumulate(m.begin(), m.end(), 0)) return 0;
  return kostka_rec(lambda, m);
}

// ------------------------------------------------------------- expansions

SchurExpansion schur_expand(const MVPoly& p, int k) {
  for (const VarId& v : p.variables())
    if (v.alphabet != Alphabet::X || v.block != -1 || v.pos > k)
      throw InvalidInput("schur_expand: polynomial involves " + v.name() + " outside x1..x" +
                         std::to_string(k));
  for (int i = 1; i < k; ++i)
    if (!(swap_variables(p, VarId::x(i), VarId::x(i + 1)) == p))
      throw NotSymmetric("schur_expand: not symmetric under x" + std::to_string(i) + " <-> x" +
                         std::to_string(i + 1));
  // Coefficients of the monomial symmetric functions.
  std::map<Partition, mpz_class, std::greater<>> m_coeff;
  for (const auto& [mono, c] : p.terms()) {
    std::vector<int> e(k);
    for (int i = 1; i <= k; ++i) e[i - 1] = mono.exponent(VarId::x(i));
    if (std::is_sorted(e.begin(), e.end(), std::greater<>())) {
      while (!e.empty() && e.back() == 0) e.pop_back();
      m_coeff[e] = c;
    }
  }
  SchurExpansion out;
  while (!m_coeff.empty()) {
    // Lexicographically largest remaining partition of the largest size.
    auto best = m_coeff.begin();
    for (auto it = m_coeff.begin(); it != m_coeff.end(); ++it)
      if (size(it->first) > size(best->first)) best = it;
    const Partition lambda = best->first;
    const mpz_class c = best->second;
    out[lambda] = c;
    for (const Partition& mu : partitions_of(size(lambda), k)) {
      if (mu > lambda) continue;
      const long long K = kostka(lambda, mu);
      if (K == 0) continue;
      auto& slot = m_coeff[mu];
      slot -= c * mpz_class(static_cast<long>(K));
      if (slot == 0) m_coeff.erase(mu);
    }
  }
  return out;
}

MVPoly schur_assemble(const SchurExpansion& e, int k) {
  MVPoly p;
  for (const auto& [lambda, c] : e) p += schur_s(lambda, k) * MVPoly(c);
  return p;
}

// ---------------------------------------------------------------- Stanley

namespace {

MVPoly truncated_schubert(const Permutation& w, int m, int k, const Limits& limits) {
  MVPoly sum;
  for (const auto& D : enumerate_rc(w.shifted(m), limits, k)) {
    Monomial mono;
    for (const Box& b : D.crosses()) mono = mono * Monomial::var(VarId::x(b.row));
    sum.add_term(mono, 1);
  }
  return sum;
}

std::mutex stanley_mutex;
std::map<Permutation, SchurExpansion> stanley_cache;

}  // namespace

MVPoly stanley_single(const Permutation& w, int k, const Limits& limits) {
  if (k < 1) throw InvalidInput("stanley_single: k must be positive");
  require_guard(w.length() <= limits.max_length * 2,
                "stanley_single: length exceeds guard");
  const MVPoly a = truncated_schubert(w, k, k, limits);
  const MVPoly b = truncated_schubert(w, k + 1, k, limits);
  if (!(a == b)) throw std::logic_error("stanley_single: truncation did not stabilize");
  return a;
}

const SchurExpansion& stanley_coefficients(const Permutation& w) {
  const Permutation key = w.resized(std::max(w.max_moved(), 1));
  {
    std::lock_guard<std::mutex> lock(stanley_mutex);
    auto it = stanley_cache.find(key);
    if (it != stanley_cache.end()) return it->second;
  }
  const int k = std::max(key.length(), 1);
  SchurExpansion e = schur_expand(stanley_single(key, k), k);
  std::lock_guard<std::mutex> lock(stanley_mutex);
  return stanley_cache.emplace(key, std::move(e)).first->second;
}

MVPoly stanley_double(const Permutation& w, const VarList& X, const VarList& Y) {
  MVPoly out;
  for (const auto& [alpha, c] : stanley_coefficients(w))
    out += super_schur(alpha, X, Y) * MVPoly(c);
  return out;
}

// ------------------------------------------------------------- Schur Q / P

bool is_valid_circled_shifted(const ShiftedTableau& T) {
  if (!is_strict(T.shape) || T.rows.size() != T.shape.size()) return false;
  for (std::size_t r = 0; r < T.rows.size(); ++r) {
    const auto& row = T.rows[r];
    if (static_cast<int>(row.size()) != T.shape[r]) return false;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] < 1) return false;
      if (c > 0) {
        if (row[c] < row[c - 1]) return false;
        if (row[c] == row[c - 1] && row[c] % 2 == 1) return false;  // circled repeated in row
      }
      if (r > 0) {
        // Box (r, r + c) sits under column offset c + 1 of the previous row.
        const auto& above = T.rows[r - 1];
        const std::size_t ac = c + 1;
        if (ac < above.size()) {
          if (row[c] < above[ac]) return false;
          if (row[c] == above[ac] && row[c] % 2 == 0) return false;  // plain repeated in column
        }
      }
    }
  }
  return true;
}

MVPoly schur_Q(const Partition& mu, const VarList& vars) {
  if (!is_strict(mu)) throw NonStrictPartition("schur_Q: parts must be distinct and positive");
  const int k = static_cast<int>(vars.size());
  if (mu.empty()) return MVPoly(1L);
  std::vector<std::vector<int>> T(mu.size());
  for (std::size_t r = 0; r < mu.size(); ++r) T[r].assign(mu[r], 0);
  std::vector<int> counts(k, 0);
  MVPoly out;
  const int rows = static_cast<int>(mu.size());
  std::function<void(int, int)> fill = [&](int r, int c) {
    if (r == rows) {
      Monomial m;
      for (int v = 0; v < k; ++v)
        if (counts[v] > 0) m = m * Monomial::var(vars[v], counts[v]);
      out.add_term(m, 1);
      return;
    }
    if (c == mu[r]) {
      fill(r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = T[r][c - 1] + (T[r][c - 1] % 2 == 1 ? 1 : 0);
    if (r > 0) {
      const int a = T[r - 1][c + 1];
      lo = std::max(lo, a + (a % 2 == 0 ? 1 : 0));
    }
    for (int v = lo; v <= 2 * k; ++v) {
      T[r][c] = v;
      ++counts[(v + 1) / 2 - 1];
      fill(r, c + 1);
      --counts[(v + 1) / 2 - 1];
    }
  };
  fill(0, 0);
  return out;
}

MVPoly schur_Q(const Partition& mu, int k) { return schur_Q(mu, xs(k)); }

MVPoly schur_P(const Partition& mu, int k) {
  const MVPoly q = schur_Q(mu, k);
  mpz_class two_l = 1;
  two_l <<= mu.size();
  return q.divide_coefficients(two_l);
}

}  // namespace quiverlab
