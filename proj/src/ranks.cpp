#include "quiverlab/ranks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace quiverlab {

// ----------------------------------------------------------- RankConditions

RankConditions::RankConditions(int n, std::vector<std::vector<int>> table)
    : n_(n), table_(std::move(table)) {
  if (n < 0) throw InvalidInput("RankConditions: n must be nonnegative");
  if (static_cast<int>(table_.size()) != n + 1)
    throw InvalidInput("RankConditions: expected n+1 rows");
  for (int i = 0; i <= n; ++i) {
    if (static_cast<int>(table_[i].size()) != n + 1 - i)
      throw InvalidInput("RankConditions: row " + std::to_string(i) + " must have " +
                         std::to_string(n + 1 - i) + " entries");
    for (int v : table_[i])
      if (v < 0) throw InvalidInput("RankConditions: negative rank");
  }
}

int RankConditions::operator()(int i, int j) const {
  if (i < 0 || j > n_ || i > j) return 0;
  return table_[i][j - i];
}

int RankConditions::total_dim() const {
  int d = 0;
  for (int i = 0; i <= n_; ++i) d += dim(i);
  return d;
}

RankConditions RankConditions::shifted(int m) const {
  auto t = table_;
  for (auto& row : t)
    for (int& v : row) v += m;
  return RankConditions(n_, std::move(t));
}

std::optional<RankViolation> validate(const RankConditions& r) {
  const int n = r.n();
  for (int len = 1; len <= n; ++len)
    for (int i = 0; i + len <= n; ++i) {
      const int j = i + len;
      const int bound = std::min(r(i, j - 1), r(i + 1, j));
      if (r(i, j) > bound)
        return RankViolation{i, j,
                             "r_" + std::to_string(i) + std::to_string(j) + " = " +
                                 std::to_string(r(i, j)) + " exceeds min(r_{i,j-1}, r_{i+1,j}) = " +
                                 std::to_string(bound)};
    }
  const LaceArray s = lace_array(r);
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      if (s(i, j) < 0)
        return RankViolation{i, j,
                             "lace array entry s_" + std::to_string(i) + std::to_string(j) +
                                 " = " + std::to_string(s(i, j)) + " is negative"};
  return std::nullopt;
}

void require_valid(const RankConditions& r) {
  if (auto v = validate(r)) throw InvalidInput("rank conditions do not occur: " + v->message);
}

LaceArray lace_array(const RankConditions& r) {
  LaceArray s(r.n());
  for (int i = 0; i <= r.n(); ++i)
    for (int j = i; j <= r.n(); ++j)
      s.at(i, j) = r(i, j) - r(i - 1, j) - r(i, j + 1) + r(i - 1, j + 1);
  return s;
}

int expected_codim(const RankConditions& r) {
  int d = 0;
  for (int i = 0; i <= r.n(); ++i)
    for (int j = i + 1; j <= r.n(); ++j)
      d += (r(i, j - 1) - r(i, j)) * (r(i + 1, j) - r(i, j));
  return d;
}

// ------------------------------------------------------------ LacingDiagram

int LacingDiagram::length() const {
  int len = 0;
  for (const auto& wk : w) len += wk.length();
  return len;
}

LaceArray LacingDiagram::lace_counts() const {
  const int nn = n();
  LaceArray s(nn);
  // origin[v] for the vertices of the current column.
  std::vector<int> origin(dims[0], 0);
  for (int k = 1; k <= nn + 1; ++k) {
    std::vector<int> next;
    if (k <= nn) next.assign(dims[k], k);
    for (int v = 1; v <= dims[k - 1]; ++v) {
      const int t = k <= nn ? w[k - 1].col_of_row(v) : 0;
      if (t == 0)
        ++s.at(origin[v - 1], k - 1);
      else
        next[t - 1] = origin[v - 1];
    }
    origin = std::move(next);
  }
  return s;
}

std::vector<LacingDiagram> enumerate_lacing(const RankConditions& r, bool minimal_only,
                                            const Limits& limits) {
  require_valid(r);
  const int n = r.n();
  const LaceArray s = lace_array(r);
  const int target = expected_codim(r);
  std::vector<int> dims(n + 1);
  for (int i = 0; i <= n; ++i) dims[i] = r.dim(i);
  require_guard(r.total_dim() <= limits.max_dim * 2,
                "enumerate_lacing: total dimension exceeds guard");

  std::vector<LacingDiagram> out;
  std::vector<PartialPermutation> chosen;

  // continuing[i] at step k: strands of origin i that reach column k.
  auto continuing = [&](int i, int k) {
    int c = 0;
    for (int j = k; j <= n; ++j) c += s(i, j);
    return c;
  };

  std::function<void(int, const std::vector<int>&, int)> step = [&](int k,
                                                                    const std::vector<int>& origin,
                                                                    int len_so_far) {
    if (k > n) {
      out.push_back(LacingDiagram{dims, chosen});
      require_guard(static_cast<long long>(out.size()) <= limits.max_results,
                    "enumerate_lacing: result count exceeds max_results");
      return;
    }
    const int a = dims[k - 1];
    const int b = dims[k];
    std::vector<int> need(k, 0);
    for (int i = 0; i < k; ++i) need[i] = continuing(i, k);
    // Choose continuing vertices of column k-1, then distinct targets in column k.
    std::vector<int> sources;
    std::vector<int> have(k, 0);
    std::vector<Box> ones;
    std::vector<bool> target_used(b + 1, false);

    std::function<void(std::size_t)> assign = [&](std::size_t idx) {
      if (idx == sources.size()) {
        PartialPermutation wk(a, b, ones);
        const int len = len_so_far + wk.length();
        if (minimal_only && len > target) return;
        std::vector<int> next(b, k);
        for (const Box& e : ones) next[e.col - 1] = origin[e.row - 1];
        chosen.push_back(wk);
        step(k + 1, next, len);
        chosen.pop_back();
        return;
      }
      for (int t = 1; t <= b; ++t) {
        if (target_used[t]) continue;
        target_used[t] = true;
        ones.push_back({sources[idx], t});
        assign(idx + 1);
        ones.pop_back();
        target_used[t] = false;
      }
    };

    std::function<void(int)> pick = [&](int v) {
      if (v > a) {
        if (have == need) assign(0);
        return;
      }
      const int o = origin[v - 1];
      // Remaining vertices of this origin must still be able to meet the need.
      int left = 0;
      for (int u = v; u <= a; ++u)
        if (origin[u - 1] == o) ++left;
      if (have[o] < need[o]) {
        ++have[o];
        sources.push_back(v);
        pick(v + 1);
        sources.pop_back();
        --have[o];
      }
      if (need[o] - have[o] <= left - 1) pick(v + 1);
    };
    pick(1);
  };

  step(1, std::vector<int>(dims[0], 0), 0);
  if (minimal_only) {
    std::erase_if(out, [&](const LacingDiagram& W) { return W.length() != target; });
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- BlockGrid

BlockGrid::BlockGrid(const RankConditions& r) : n_(r.n()), d_(r.total_dim()) {
  row_start_.assign(n_ + 2, 1);
  col_start_.assign(n_ + 2, 1);
  for (int i = 0; i <= n_; ++i) {
    row_start_[i + 1] = row_start_[i] + r.dim(i);
    col_start_[i + 1] = col_start_[i] + r.dim(n_ - i);
  }
  row_of_.assign(d_ + 1, 0);
  col_of_.assign(d_ + 1, 0);
  for (int i = 0; i <= n_; ++i) {
    for (int p = row_start_[i]; p < row_start_[i + 1]; ++p) row_of_[p] = i;
    for (int p = col_start_[i]; p < col_start_[i + 1]; ++p) col_of_[p] = i;
  }
}

int BlockGrid::row_strip(int row) const { return row_of_.at(row); }
int BlockGrid::col_strip(int col) const { return col_of_.at(col); }

int BlockGrid::hom_area() const {
  int area = 0;
  for (int i = 0; i <= n_; ++i)
    for (int j = 0; i + j <= n_ - 2; ++j) area += row_height(i) * col_width(j);
  return area;
}

std::vector<std::vector<int>> BlockGrid::block_counts(const Permutation& w) const {
  std::vector<std::vector<int>> c(n_ + 1, std::vector<int>(n_ + 1, 0));
  for (int row = 1; row <= d_; ++row) ++c[row_strip(row)][col_strip(w(row))];
  return c;
}

Permutation zelevinsky(const RankConditions& r) {
  require_valid(r);
  const int n = r.n();
  const BlockGrid g(r);
  const int d = g.d();
  const LaceArray s = lace_array(r);
  std::vector<int> image(d + 1, 0);
  std::vector<bool> col_used(d + 1, false);

  auto free_rows = [&](int i) {
    std::vector<int> v;
    for (int p = g.row_start(i); p < g.row_start(i + 1); ++p)
      if (image[p] == 0) v.push_back(p);
    return v;
  };
  auto free_cols = [&](int j) {
    std::vector<int> v;
    for (int p = g.col_start(j); p < g.col_start(j + 1); ++p)
      if (!col_used[p]) v.push_back(p);
    return v;
  };

  for (int i = n; i >= 0; --i)
    for (int j = n; j >= 0; --j) {
      if (i + j < n) continue;
      const int cnt = s(n - j, i);
      if (cnt == 0) continue;
      auto rows = free_rows(i);
      auto cols = free_cols(j);
      if (static_cast<int>(rows.size()) < cnt || static_cast<int>(cols.size()) < cnt)
        throw std::logic_error("zelevinsky: block M_" + std::to_string(i) + std::to_string(j) +
                               " has too few free rows or columns");
      rows.erase(rows.begin(), rows.end() - cnt);
      cols.erase(cols.begin(), cols.end() - cnt);
      for (int t = 0; t < cnt; ++t) {
        image[rows[t]] = cols[t];
        col_used[cols[t]] = true;
      }
    }
  for (int i = 0; i < n; ++i) {
    const int j = n - i - 1;
    auto rows = free_rows(i);
    auto cols = free_cols(j);
    const std::size_t cnt = std::min(rows.size(), cols.size());
    for (std::size_t t = 0; t < cnt; ++t) {
      image[rows[t]] = cols[t];
      col_used[cols[t]] = true;
    }
  }
  image.erase(image.begin());
  if (std::find(image.begin(), image.end(), 0) != image.end())
    throw std::logic_error("zelevinsky: construction left an empty row");
  return Permutation(std::move(image));
}

bool length_identity_check(const RankConditions& r) {
  const BlockGrid g(r);
  return zelevinsky(r).length() == g.hom_area() + expected_codim(r);
}

std::vector<Permutation> enumerate_block_class(const RankConditions& r, const Limits& limits) {
  const Permutation v = zelevinsky(r);
  const BlockGrid g(r);
  const int d = g.d();
  require_guard(d <= limits.max_dim, "enumerate_block_class: d exceeds max_dim");
  auto counts = g.block_counts(v);
  std::vector<Permutation> out;
  std::vector<int> image;
  std::vector<bool> used(d + 1, false);
  std::function<void(int)> rec = [&](int row) {
    if (row > d) {
      out.emplace_back(image);
      require_guard(static_cast<long long>(out.size()) <= limits.max_results,
                    "enumerate_block_class: result count exceeds max_results");
      return;
    }
    const int i = g.row_strip(row);
    for (int c = 1; c <= d; ++c) {
      const int j = g.col_strip(c);
      if (used[c] || counts[i][j] == 0) continue;
      used[c] = true;
      --counts[i][j];
      image.push_back(c);
      rec(row + 1);
      image.pop_back();
      ++counts[i][j];
      used[c] = false;
    }
  };
  rec(1);
  return out;
}

std::vector<RankConditions> all_rank_conditions(int n, int max_dim, int min_dim, int max_total) {
  std::vector<RankConditions> out;
  std::vector<std::vector<int>> t(n + 1);
  for (int i = 0; i <= n; ++i) t[i].assign(n + 1 - i, 0);
  // Fill entries by increasing j - i, each bounded by its two neighbours.
  std::vector<std::pair<int, int>> order;
  for (int len = 0; len <= n; ++len)
    for (int i = 0; i + len <= n; ++i) order.emplace_back(i, i + len);
  int total = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == order.size()) {
      RankConditions r(n, t);
      if (!validate(r)) out.push_back(std::move(r));
      return;
    }
    const auto [i, j] = order[k];
    int lo = 0, hi = max_dim;
    if (i == j) {
      lo = min_dim;
    } else {
      hi = std::min(t[i][j - 1 - i], t[i + 1][j - i - 1]);
    }
    // Diagonal entries come first, so the total is known before the rest.
    if (i == j && max_total >= 0) hi = std::min(hi, max_total - total);
    for (int v = lo; v <= hi; ++v) {
      t[i][j - i] = v;
      if (i == j) total += v;
      rec(k + 1);
      if (i == j) total -= v;
    }
    t[i][j - i] = 0;
  };
  rec(0);
  return out;
}

}  // namespace quiverlab
