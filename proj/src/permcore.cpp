#include "quiverlab/permcore.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace quiverlab {

namespace {

void check_bijection(const std::vector<int>& values, const char* what) {
  const int d = static_cast<int>(values.size());
  std::vector<bool> seen(d + 1, false);
  for (int v : values) {
    const int a = std::abs(v);
    if (v == 0 || a > d || seen[a])
      throw NotAPermutation(std::string(what) + ": values must be a bijection on 1.." +
                            std::to_string(d));
    seen[a] = true;
  }
}

int inversions(const std::vector<int>& v) {
  int inv = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) ++inv;
  return inv;
}

// Group adaptors used by the generic enumerators below.
struct TypeA {
  using Elem = Permutation;
  int rank;
  std::vector<int> generators() const {
    std::vector<int> g(rank > 0 ? rank - 1 : 0);
    std::iota(g.begin(), g.end(), 1);
    return g;
  }
  int length(const Elem& e) const { return e.length(); }
  Elem times(const Elem& e, int g) const { return e.times_simple(g); }
  Elem identity() const { return Permutation::identity(rank); }
  Elem inverse(const Elem& e) const { return e.inverse(); }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
};

struct TypeBD {
  using Elem = SignedPermutation;
  int rank;
  CoxeterType type;
  std::vector<int> generators() const {
    std::vector<int> g;
    if (type == CoxeterType::D && rank < 2) {
      // D_1 is trivial.
    } else if (rank >= 1) {
      g.push_back(0);
    }
    for (int i = 1; i < rank; ++i) g.push_back(i);
    return g;
  }
  int length(const Elem& e) const { return e.length(type); }
  Elem times(const Elem& e, int g) const { return e.times_generator(g, type); }
  Elem identity() const { return SignedPermutation::identity(rank); }
  Elem inverse(const Elem& e) const { return e.inverse(); }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
};

template <class Group>
void collect_words(const Group& grp, const typename Group::Elem& w, ReducedWord& suffix,
                   std::vector<ReducedWord>& out, const Limits& limits) {
  const int len = grp.length(w);
  if (len == 0) {
    out.emplace_back(suffix.rbegin(), suffix.rend());
    require_guard(static_cast<long long>(out.size()) <= limits.max_results,
                  "reduced_words: result count exceeds max_results");
    return;
  }
  for (int g : grp.generators()) {
    auto shorter = grp.times(w, g);
    if (grp.length(shorter) < len) {
      suffix.push_back(g);
      collect_words(grp, shorter, suffix, out, limits);
      suffix.pop_back();
    }
  }
}

template <class Group>
std::vector<ReducedWord> reduced_words_impl(const Group& grp, const typename Group::Elem& w,
                                            const Limits& limits) {
  const int len = grp.length(w);
  require_guard(len <= limits.max_length,
                "reduced_words: length " + std::to_string(len) + " exceeds max_length " +
                    std::to_string(limits.max_length));
  std::vector<ReducedWord> out;
  ReducedWord suffix;
  collect_words(grp, w, suffix, out, limits);
  std::sort(out.begin(), out.end());
  return out;
}

// Left prefixes u of w: l(u) + l(u^{-1} w) = l(w).
template <class Group>
std::vector<typename Group::Elem> prefixes(const Group& grp, const typename Group::Elem& w) {
  using Elem = typename Group::Elem;
  const int len = grp.length(w);
  std::set<Elem> seen{grp.identity()};
  std::deque<Elem> queue{grp.identity()};
  while (!queue.empty()) {
    Elem u = queue.front();
    queue.pop_front();
    const int lu = grp.length(u);
    for (int g : grp.generators()) {
      Elem next = grp.times(u, g);
      if (grp.length(next) != lu + 1) continue;
      if (lu + 1 + grp.length(grp.mul(grp.inverse(next), w)) != len) continue;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

template <class Group>
void factor_rec(const Group& grp, const typename Group::Elem& rest, std::size_t slot,
                const std::vector<std::function<bool(const typename Group::Elem&)>>& slot_ok,
                std::vector<typename Group::Elem>& current,
                std::vector<std::vector<typename Group::Elem>>& out, const Limits& limits) {
  if (slot + 1 == slot_ok.size()) {
    if (slot_ok[slot](rest)) {
      current.push_back(rest);
      out.push_back(current);
      current.pop_back();
      require_guard(static_cast<long long>(out.size()) <= limits.max_results,
                    "factorizations: result count exceeds max_results");
    }
    return;
  }
  for (const auto& u : prefixes(grp, rest)) {
    if (!slot_ok[slot](u)) continue;
    current.push_back(u);
    factor_rec(grp, grp.mul(grp.inverse(u), rest), slot + 1, slot_ok, current, out, limits);
    current.pop_back();
  }
}

template <class Group>
std::vector<std::vector<typename Group::Elem>> factorizations_impl(
    const Group& grp, const typename Group::Elem& w,
    const std::vector<std::function<bool(const typename Group::Elem&)>>& slot_ok,
    const Limits& limits) {
  if (slot_ok.empty()) throw InvalidInput("factorizations: at least one slot required");
  const int len = grp.length(w);
  require_guard(len <= limits.max_length,
                "factorizations: length " + std::to_string(len) + " exceeds max_length " +
                    std::to_string(limits.max_length));
  std::vector<std::vector<typename Group::Elem>> out;
  std::vector<typename Group::Elem> current;
  factor_rec(grp, w, 0, slot_ok, current, out, limits);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  check_bijection(one_line_, "Permutation");
  for (int v : one_line_)
    if (v < 0) throw NotAPermutation("Permutation: negative entry");
}

Permutation Permutation::identity(int d) {
  std::vector<int> v(d);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::longest(int d) {
  std::vector<int> v(d);
  for (int i = 0; i < d; ++i) v[i] = d - i;
  return Permutation(std::move(v));
}

Permutation Permutation::simple(int i, int d) {
  if (i < 1 || i >= d) throw InvalidInput("simple: index out of range");
  return identity(d).times_simple(i);
}

Permutation Permutation::from_word(std::span<const int> word, int d) {
  Permutation w = identity(d);
  for (int a : word) {
    if (a < 1 || a >= d) throw InvalidInput("from_word: letter out of range");
    w = w.times_simple(a);
  }
  return w;
}

int Permutation::length() const { return inversions(one_line_); }

Permutation Permutation::inverse() const {
  std::vector<int> inv(one_line_.size());
  for (int i = 0; i < size(); ++i) inv[one_line_[i] - 1] = i + 1;
  Permutation p;
  p.one_line_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const { return max_moved() == 0; }

Permutation Permutation::times_simple(int i) const {
  Permutation p = *this;
  std::swap(p.one_line_[i - 1], p.one_line_[i]);
  return p;
}

Permutation Permutation::simple_times(int i) const {
  Permutation p = *this;
  for (int& v : p.one_line_) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
  return p;
}

std::vector<int> Permutation::right_descents() const {
  std::vector<int> out;
  for (int i = 1; i < size(); ++i)
    if (has_right_descent(i)) out.push_back(i);
  return out;
}

Permutation Permutation::shifted(int m) const {
  std::vector<int> v(m + size());
  for (int i = 0; i < m; ++i) v[i] = i + 1;
  for (int i = 0; i < size(); ++i) v[m + i] = one_line_[i] + m;
  Permutation p;
  p.one_line_ = std::move(v);
  return p;
}

Permutation Permutation::resized(int d) const {
  if (d < max_moved()) throw InvalidInput("resized: target size too small");
  std::vector<int> v(d);
  for (int i = 0; i < d; ++i) v[i] = i < size() ? one_line_[i] : i + 1;
  Permutation p;
  p.one_line_ = std::move(v);
  return p;
}

int Permutation::max_moved() const {
  for (int i = size(); i >= 1; --i)
    if (one_line_[i - 1] != i) return i;
  return 0;
}

Permutation operator*(const Permutation& u, const Permutation& v) {
  const int d = std::max(u.size(), v.size());
  const Permutation a = u.resized(d);
  const Permutation b = v.resized(d);
  std::vector<int> out(d);
  for (int i = 1; i <= d; ++i) out[i - 1] = a(b(i));
  return Permutation(std::move(out));
}

std::vector<Box> diagram(const Permutation& w) {
  const Permutation inv = w.inverse();
  std::vector<Box> boxes;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = 1; j < w(i); ++j)
      if (inv(j) > i) boxes.push_back({i, j});
  return boxes;
}

ReducedWord canonical_reduced_word(const Permutation& w) {
  ReducedWord word;
  const auto boxes = diagram(w);
  for (int row = 1; row <= w.size(); ++row) {
    int count = 0;
    for (const Box& b : boxes)
      if (b.row == row) ++count;
    for (int c = count - 1; c >= 0; --c) word.push_back(row + c);
  }
  return word;
}

bool is_reduced_word(std::span<const int> word, const Permutation& w) {
  for (int a : word)
    if (a < 1 || a >= w.size()) return false;
  const Permutation p = Permutation::from_word(word, w.size());
  return p == w && p.length() == static_cast<int>(word.size());
}

std::vector<ReducedWord> reduced_words(const Permutation& w, const Limits& limits) {
  return reduced_words_impl(TypeA{w.size()}, w, limits);
}

// --------------------------------------------------------- PartialPermutation

PartialPermutation::PartialPermutation(int rows, int cols, const std::vector<Box>& ones)
    : rows_(rows), cols_(cols), row_to_col_(rows, 0) {
  if (rows < 0 || cols < 0) throw InvalidInput("PartialPermutation: negative dimension");
  std::vector<bool> col_used(cols + 1, false);
  for (const Box& b : ones) {
    if (b.row < 1 || b.row > rows || b.col < 1 || b.col > cols)
      throw InvalidInput("PartialPermutation: entry outside the matrix");
    if (row_to_col_[b.row - 1] != 0 || col_used[b.col])
      throw InvalidInput("PartialPermutation: two 1s in a row or column");
    row_to_col_[b.row - 1] = b.col;
    col_used[b.col] = true;
  }
}

std::vector<Box> PartialPermutation::ones() const {
  std::vector<Box> out;
  for (int r = 1; r <= rows_; ++r)
    if (row_to_col_[r - 1] != 0) out.push_back({r, row_to_col_[r - 1]});
  return out;
}

int PartialPermutation::rank() const {
  return static_cast<int>(std::count_if(row_to_col_.begin(), row_to_col_.end(),
                                        [](int c) { return c != 0; }));
}

Permutation PartialPermutation::embed() const {
  const int d = rows_ + cols_;
  std::vector<int> image(d, 0);
  std::vector<bool> col_used(d + 1, false);
  int next_col = cols_ + 1;
  for (int r = 1; r <= rows_; ++r) {
    int c = row_to_col_[r - 1];
    if (c == 0) c = next_col++;
    image[r - 1] = c;
    col_used[c] = true;
  }
  int c = 1;
  for (int r = rows_ + 1; r <= d; ++r) {
    while (col_used[c]) ++c;
    image[r - 1] = c;
    col_used[c] = true;
  }
  return Permutation(std::move(image));
}

// ---------------------------------------------------------- SignedPermutation

SignedPermutation::SignedPermutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  check_bijection(one_line_, "SignedPermutation");
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return SignedPermutation(std::move(v));
}

SignedPermutation SignedPermutation::from_permutation(const Permutation& w) {
  return SignedPermutation(w.one_line());
}

SignedPermutation SignedPermutation::from_word(std::span<const int> word, int n,
                                               CoxeterType type) {
  SignedPermutation w = identity(n);
  for (int g : word) w = w.times_generator(g, type);
  return w;
}

int SignedPermutation::sign_changes() const {
  return static_cast<int>(
      std::count_if(one_line_.begin(), one_line_.end(), [](int v) { return v < 0; }));
}

Permutation SignedPermutation::to_permutation() const {
  if (!is_unsigned()) throw InvalidInput("to_permutation: signed permutation has sign changes");
  return Permutation(one_line_);
}

int SignedPermutation::length_B() const {
  int len = inversions(one_line_);
  for (int v : one_line_)
    if (v < 0) len -= v;
  return len;
}

int SignedPermutation::length_D() const {
  int len = inversions(one_line_);
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (one_line_[i] + one_line_[j] < 0) ++len;
  return len;
}

int SignedPermutation::length(CoxeterType type) const {
  switch (type) {
    case CoxeterType::B:
      return length_B();
    case CoxeterType::D:
      if (!in_D()) throw InvalidInput("length_D: odd number of sign changes");
      return length_D();
    case CoxeterType::A:
      return to_permutation().length();
  }
  return 0;
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> inv(one_line_.size());
  for (int i = 0; i < size(); ++i) {
    const int v = one_line_[i];
    inv[std::abs(v) - 1] = v > 0 ? i + 1 : -(i + 1);
  }
  SignedPermutation p;
  p.one_line_ = std::move(inv);
  return p;
}

bool SignedPermutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (one_line_[i] != i + 1) return false;
  return true;
}

SignedPermutation SignedPermutation::times_generator(int g, CoxeterType type) const {
  SignedPermutation p = *this;
  if (g >= 1) {
    if (g >= size()) throw InvalidInput("times_generator: index out of range");
    std::swap(p.one_line_[g - 1], p.one_line_[g]);
  } else if (g == 0 && type == CoxeterType::B) {
    if (size() < 1) throw InvalidInput("times_generator: s_0 needs n >= 1");
    p.one_line_[0] = -p.one_line_[0];
  } else if (g == 0 && type == CoxeterType::D) {
    // s_0 s_1 s_0 acting on positions: swap the first two entries and negate both.
    if (size() < 2) throw InvalidInput("times_generator: s_0hat needs n >= 2");
    const int a = p.one_line_[0];
    p.one_line_[0] = -p.one_line_[1];
    p.one_line_[1] = -a;
  } else {
    throw InvalidInput("times_generator: bad generator");
  }
  return p;
}

SignedPermutation operator*(const SignedPermutation& u, const SignedPermutation& v) {
  if (u.size() != v.size()) throw DimensionMismatch("signed permutation sizes differ");
  std::vector<int> out(u.size());
  for (int i = 1; i <= u.size(); ++i) {
    const int vi = v(i);
    out[i - 1] = vi > 0 ? u(vi) : -u(-vi);
  }
  return SignedPermutation(std::move(out));
}

std::vector<ReducedWord> reduced_words(const SignedPermutation& w, CoxeterType type,
                                       const Limits& limits) {
  if (type == CoxeterType::A) return reduced_words(w.to_permutation(), limits);
  return reduced_words_impl(TypeBD{w.size(), type}, w, limits);
}

int brute_force_length(const SignedPermutation& w, CoxeterType type) {
  const TypeBD grp{w.size(), type};
  std::map<SignedPermutation, int> dist{{grp.identity(), 0}};
  std::deque<SignedPermutation> queue{grp.identity()};
  while (!queue.empty()) {
    SignedPermutation u = queue.front();
    queue.pop_front();
    const int du = dist[u];
    if (u == w) return du;
    for (int g : grp.generators()) {
      SignedPermutation next = u.times_generator(g, type);
      if (dist.emplace(next, du + 1).second) queue.push_back(next);
    }
  }
  throw InvalidInput("brute_force_length: element not in the group");
}

std::vector<std::vector<Permutation>> factorizations(
    const Permutation& w, const std::vector<std::function<bool(const Permutation&)>>& slot_ok,
    const Limits& limits) {
  return factorizations_impl(TypeA{w.size()}, w, slot_ok, limits);
}

std::vector<std::vector<SignedPermutation>> factorizations(
    const SignedPermutation& w, CoxeterType type,
    const std::vector<std::function<bool(const SignedPermutation&)>>& slot_ok,
    const Limits& limits) {
  if (type == CoxeterType::A) throw InvalidInput("factorizations: use the Permutation overload");
  return factorizations_impl(TypeBD{w.size(), type}, w, slot_ok, limits);
}

bool compatible_with(const Permutation& w, std::span<const int> breaks) {
  for (int i : w.right_descents())
    if (std::find(breaks.begin(), breaks.end(), i) == breaks.end()) return false;
  return true;
}

bool compatible_with(const SignedPermutation& w, std::span<const int> breaks) {
  for (int i = 1; i < w.size(); ++i)
    if (w(i) > w(i + 1) && std::find(breaks.begin(), breaks.end(), i) == breaks.end())
      return false;
  return true;
}

}  // namespace quiverlab
