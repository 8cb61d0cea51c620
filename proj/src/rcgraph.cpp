#include "quiverlab/rcgraph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace quiverlab {

PipeDream::PipeDream(int d, const std::vector<Box>& crosses) : d_(d) {
  if (d < 0) throw InvalidInput("PipeDream: negative size");
  for (const Box& b : crosses) {
    if (b.row < 1 || b.col < 1 || b.row + b.col > d)
      throw InvalidInput("PipeDream: cross (" + std::to_string(b.row) + "," +
                         std::to_string(b.col) + ") outside i+j <= d");
    crosses_.insert(b);
  }
}

ReducedWord PipeDream::word() const {
  ReducedWord w;
  // std::set orders by (row, col); reverse within each row.
  auto it = crosses_.begin();
  while (it != crosses_.end()) {
    auto end = it;
    while (end != crosses_.end() && end->row == it->row) ++end;
    for (auto r = std::make_reverse_iterator(end); r != std::make_reverse_iterator(it); ++r)
      w.push_back(r->row + r->col - 1);
    it = end;
  }
  return w;
}

Permutation trace(const PipeDream& D) {
  const int d = D.d();
  std::vector<int> out(d);
  for (int start = 1; start <= d; ++start) {
    int i = start, j = 1;
    bool from_west = true;
    while (i >= 1) {
      if (j > d) throw NotAPermutation("trace: pipe left the grid on the east side");
      const bool cross = D.is_cross(i, j);
      if (from_west) {
        if (cross)
          ++j;
        else {
          --i;
          from_west = false;
        }
      } else {
        if (cross)
          --i;
        else {
          ++j;
          from_west = true;
        }
      }
    }
    out[start - 1] = j;
  }
  return Permutation(std::move(out));
}

bool is_reduced(const PipeDream& D) { return trace(D).length() == D.cross_count(); }

bool is_compatible_sequence(std::span<const int> word, std::span<const int> seq) {
  if (word.size() != seq.size()) return false;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (seq[k] < 1 || seq[k] > word[k]) return false;
    if (k + 1 < word.size()) {
      if (seq[k] > seq[k + 1]) return false;
      if (word[k] < word[k + 1] && seq[k] >= seq[k + 1]) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> compatible_sequences(std::span<const int> word) {
  std::vector<std::vector<int>> out;
  std::vector<int> seq(word.size());
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == word.size()) {
      out.push_back(seq);
      return;
    }
    int lo = 1;
    if (k > 0) lo = word[k - 1] < word[k] ? seq[k - 1] + 1 : seq[k - 1];
    for (int m = lo; m <= word[k]; ++m) {
      seq[k] = m;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

PipeDream rc_from_compatible(std::span<const int> word, std::span<const int> seq, int d) {
  if (!is_compatible_sequence(word, seq))
    throw NotCompatible("rc_from_compatible: sequence is not compatible with the word");
  if (d == 0) {
    for (int a : word) d = std::max(d, a + 1);
  }
  std::vector<Box> crosses;
  for (std::size_t k = 0; k < word.size(); ++k)
    crosses.push_back({seq[k], word[k] - seq[k] + 1});
  PipeDream D(d, crosses);
  if (D.cross_count() != static_cast<int>(word.size()))
    throw NotCompatible("rc_from_compatible: repeated cross");
  return D;
}

std::vector<PipeDream> enumerate_rc(const Permutation& w, const Limits& limits, int max_row) {
  const int d = w.size();
  require_guard(d <= 4 * limits.max_dim, "enumerate_rc: permutation size exceeds guard");
  const int last_row = max_row > 0 ? std::min(max_row, d - 1) : d - 1;
  std::vector<int> inv(d + 2, 0);  // 1-based inverse of the unwritten part
  {
    const Permutation wi = w.inverse();
    for (int i = 1; i <= d; ++i) inv[i] = wi(i);
  }
  std::vector<PipeDream> out;
  std::vector<Box> crosses;

  std::function<void(int)> row_step;
  // Choose letters in row i below `bound`, strictly decreasing.
  std::function<void(int, int)> in_row = [&](int i, int bound) {
    // Close the row here.
    bool fixes = true;
    for (int p = 1; p <= i && fixes; ++p) fixes = inv[p] == p;
    if (fixes) row_step(i + 1);
    for (int a = bound - 1; a >= i; --a) {
      if (inv[a] <= inv[a + 1]) continue;
      std::swap(inv[a], inv[a + 1]);
      crosses.push_back({i, a - i + 1});
      in_row(i, a);
      crosses.pop_back();
      std::swap(inv[a], inv[a + 1]);
    }
  };
  row_step = [&](int i) {
    if (i > last_row) {
      for (int p = 1; p <= d; ++p)
        if (inv[p] != p) return;
      out.emplace_back(d, crosses);
      require_guard(static_cast<long long>(out.size()) <= limits.max_results,
                    "enumerate_rc: result count exceeds max_results");
      return;
    }
    in_row(i, d);
  };
  if (d <= 1)
    out.emplace_back(d, crosses);
  else
    row_step(1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PipeDream> enumerate_rc_words(const Permutation& w, const Limits& limits) {
  std::set<PipeDream> found;
  for (const auto& word : reduced_words(w, limits))
    for (const auto& seq : compatible_sequences(word))
      found.insert(rc_from_compatible(word, seq, w.size()));
  return {found.begin(), found.end()};
}

MVPoly schubert_double_pipe(const Permutation& w, const Limits& limits) {
  MVPoly sum;
  for (const auto& D : enumerate_rc(w, limits)) {
    MVPoly term(1L);
    for (const Box& b : D.crosses()) term *= MVPoly::var(VarId::x(b.row)) - MVPoly::var(VarId::y(b.col));
    sum += term;
  }
  return sum;
}

MVPoly schubert_single_pipe(const Permutation& w, const Limits& limits) {
  MVPoly sum;
  for (const auto& D : enumerate_rc(w, limits)) {
    Monomial m;
    for (const Box& b : D.crosses()) m = m * Monomial::var(VarId::x(b.row));
    sum.add_term(m, 1);
  }
  return sum;
}

bool maps_to(const PipeDream& D, const LacingDiagram& W, const RankConditions& r) {
  const int n = r.n();
  if (D.d() != r.total_dim() || W.n() != n)
    throw DimensionMismatch("maps_to: pipe dream, lacing diagram and ranks disagree in size");
  for (int k = 0; k <= n; ++k)
    if (W.dims[k] != r.dim(k)) throw DimensionMismatch("maps_to: column sizes differ from r_kk");
  const BlockGrid g(r);
  for (int k = 1; k <= n; ++k) {
    const int top = g.row_start(k - 1);
    const int bottom = g.row_start(k) - 1;
    // Sum of r_tt over t >= k-1 and over t >= k.
    int c_in = 0, c_out = 0;
    for (int t = k - 1; t <= n; ++t) c_in += r.dim(t);
    for (int t = k; t <= n; ++t) c_out += r.dim(t);
    for (int s = 1; s <= r.dim(k - 1); ++s) {
      // Walk the pipe backwards: it arrives from above.
      int i = top, j = c_in - s + 1;
      bool from_north = true;
      int exit_col = 0;
      if (top > bottom) return false;
      while (true) {
        if (j < 1) break;  // left the strip on the west side
        const bool cross = D.is_cross(i, j);
        if (from_north) {
          if (cross) {
            if (i == bottom) {
              exit_col = j;
              break;
            }
            ++i;
          } else {
            --j;
            from_north = false;
          }
        } else {
          if (cross) {
            --j;
          } else {
            if (i == bottom) {
              exit_col = j;
              break;
            }
            ++i;
            from_north = true;
          }
        }
      }
      for (int t = 1; t <= r.dim(k); ++t) {
        const bool through = exit_col == c_out - t + 1;
        if (through != W.w[k - 1].at(s, t)) return false;
      }
    }
  }
  return true;
}

PipeDream local_rc(const PartialPermutation& rho) {
  const Permutation full = rho.embed();
  const ReducedWord word = canonical_reduced_word(full);
  std::vector<int> seq(word.size());
  for (std::size_t k = 0; k < word.size(); ++k)
    seq[k] = k == 0 ? 1 : seq[k - 1] + (word[k - 1] < word[k] ? 1 : 0);
  PipeDream D = rc_from_compatible(word, seq, full.size());
  for (const Box& b : D.crosses())
    if (b.row > rho.rows() || b.col > rho.cols())
      throw std::logic_error("local_rc: cross outside the northwest rectangle");
  return D;
}

PipeDream theorem1_embed(const LacingDiagram& W, const RankConditions& r) {
  const int n = r.n();
  if (W.n() != n) throw DimensionMismatch("theorem1_embed: lacing diagram has wrong length");
  for (int k = 0; k <= n; ++k)
    if (W.dims[k] != r.dim(k))
      throw DimensionMismatch("theorem1_embed: column sizes differ from r_kk");
  if (W.length() != expected_codim(r))
    throw NotMinimal("theorem1_embed: l(W) = " + std::to_string(W.length()) + " but d(r) = " +
                     std::to_string(expected_codim(r)));
  const BlockGrid g(r);
  const int d = g.d();
  std::vector<Box> crosses;
  for (int row = 1; row <= d; ++row)
    for (int col = 1; col <= d; ++col)
      if (g.in_hom(row, col)) crosses.push_back({row, col});
  for (int k = 1; k <= n; ++k) {
    const int a = r.dim(k - 1);
    const int b = r.dim(k);
    const int row0 = g.row_start(k - 1);
    const int col0 = g.col_start(n - k);
    const PipeDream local = local_rc(W.w[k - 1]);
    for (const Box& c : local.crosses())
      crosses.push_back({row0 + a - c.row, col0 + b - c.col});
  }
  PipeDream D(d, crosses);
  const Permutation v = zelevinsky(r);
  if (trace(D) != v || D.cross_count() != v.length() || !maps_to(D, W, r))
    throw std::logic_error("theorem1_embed: construction is not an RC-graph mapping to W");
  return D;
}

std::string render_ascii(const PipeDream& D) {
  std::ostringstream os;
  for (int i = 1; i <= D.d(); ++i) {
    for (int j = 1; i + j <= D.d(); ++j) os << (D.is_cross(i, j) ? '+' : '%');
    os << '\n';
  }
  return os.str();
}

std::string render_ascii(const LacingDiagram& W) {
  // One line per partial permutation matrix row, matrices separated by blank lines.
  std::ostringstream os;
  for (std::size_t k = 0; k < W.w.size(); ++k) {
    const auto& wk = W.w[k];
    os << "w" << k + 1 << " (" << wk.rows() << "x" << wk.cols() << ")\n";
    for (int i = 1; i <= wk.rows(); ++i) {
      for (int j = 1; j <= wk.cols(); ++j) os << (wk.at(i, j) ? '1' : '0') << (j < wk.cols() ? " " : "");
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace quiverlab
