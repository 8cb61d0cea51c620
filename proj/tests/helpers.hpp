#pragma once

// Small oracles shared by the test suites. Everything here is written
// directly from definitions and avoids the library's algorithms.

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "quiverlab/json_io.hpp"

namespace qltest {

using namespace quiverlab;

inline std::vector<Permutation> all_perms(int d) {
  std::vector<int> v(d);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

inline int inversions(const std::vector<int>& v) {
  int c = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) c += v[i] > v[j];
  return c;
}

// One-line notation of s_{a1} s_{a2} ... : right multiplication by s_a
// swaps positions a and a+1.
inline std::vector<int> apply_word(const std::vector<int>& word, int d) {
  std::vector<int> v(d);
  std::iota(v.begin(), v.end(), 1);
  for (int a : word) std::swap(v[a - 1], v[a]);
  return v;
}

// All signed permutations of size n.
inline std::vector<SignedPermutation> all_signed(int n) {
  std::vector<SignedPermutation> out;
  for (const auto& p : all_perms(n))
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> v = p.one_line();
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) v[i] = -v[i];
      out.emplace_back(v);
    }
  return out;
}

inline MVPoly x(int i) { return MVPoly::var(VarId::x(i)); }
inline MVPoly y(int i) { return MVPoly::var(VarId::y(i)); }

// Evaluates p at integer values of the variables named in vals (others 0).
inline mpz_class evaluate(const MVPoly& p, const std::map<VarId, long>& vals) {
  mpz_class sum = 0;
  for (const auto& [m, c] : p.terms()) {
    mpz_class t = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = vals.find(VarId::unpack(v));
      const long val = it == vals.end() ? 0 : it->second;
      mpz_class pw;
      mpz_pow_ui(pw.get_mpz_t(), mpz_class(val).get_mpz_t(), e);
      t *= pw;
    }
    sum += t;
  }
  return sum;
}

inline MVPoly random_poly(std::mt19937& rng, int nvars, int max_terms, int max_exp) {
  std::uniform_int_distribution<int> coeff(-4, 4), nt(0, max_terms), ex(0, max_exp);
  MVPoly p;
  const int terms = nt(rng);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (int v = 1; v <= nvars; ++v) {
      const int e = ex(rng);
      if (e > 0) m = m * Monomial::var(VarId::x(v), e);
    }
    p.add_term(m, coeff(rng));
  }
  return p;
}

// Number of standard Young tableaux of shape lambda, by the hook length formula.
inline long long syt_count(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  long long num = 1, den = 1;
  int n = 0;
  for (std::size_t r = 0; r < lambda.size(); ++r)
    for (int c = 0; c < lambda[r]; ++c) {
      ++n;
      num *= n;
      den *= (lambda[r] - c - 1) + (conj[c] - static_cast<int>(r) - 1) + 1;
    }
  return num / den;
}

// s_lambda(1,...,1) with k ones: prod (k + c - r) / hook.
inline mpz_class schur_dimension(const Partition& lambda, int k) {
  const Partition conj = conjugate(lambda);
  mpq_class v = 1;
  for (std::size_t r = 0; r < lambda.size(); ++r)
    for (int c = 0; c < lambda[r]; ++c) {
      const int hook = (lambda[r] - c - 1) + (conj[c] - static_cast<int>(r) - 1) + 1;
      v *= mpq_class(k + c - static_cast<int>(r), hook);
    }
  v.canonicalize();
  return v.get_num();
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json::Json load(const std::string& name) {
  return json::parse(read_text(std::string(QL_TEST_DATA) + "/" + name));
}

// Three-arrow ranks used throughout as the worked golden instance.
inline RankConditions golden_ranks() {
  return RankConditions(3, {{2, 1, 0, 0}, {3, 2, 1}, {4, 1}, {2}});
}

inline LacingDiagram golden_lacing() {
  return LacingDiagram{{2, 3, 4, 2},
                       {PartialPermutation(2, 3, {{1, 1}}),
                        PartialPermutation(3, 4, {{2, 1}, {3, 2}}),
                        PartialPermutation(4, 2, {{1, 1}})}};
}

// Published RC-graph of the golden Zelevinsky permutation, row by row.
inline std::vector<Box> golden_rc_crosses() {
  std::vector<Box> out;
  const int row_len[] = {6, 8, 2, 2, 6, 0, 1, 1, 1, 0, 0};
  for (int i = 1; i <= 11; ++i)
    for (int j = 1; j <= row_len[i - 1]; ++j) out.push_back({i, j});
  return out;
}

}  // namespace qltest
