#pragma once

// Sparse multivariate polynomials with arbitrary-precision integer
// coefficients. Variables come from three alphabets (x, y, z); x and y may
// carry a block index so that x^i_a and x_a can coexist.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "quiverlab/errors.hpp"

namespace quiverlab {

enum class Alphabet : std::uint8_t { X = 0, Y = 1, Z = 2 };

// Variable order: alphabet x < y < z, then block (unblocked first), then
// position. The lexicographic monomial order treats smaller variables as
// more significant, so x1 > x2 > ... > y1 > ...
struct VarId {
  Alphabet alphabet = Alphabet::X;
  int block = -1;  // -1: no block
  int pos = 1;     // 1-based

  static VarId x(int pos) { return {Alphabet::X, -1, pos}; }
  static VarId y(int pos) { return {Alphabet::Y, -1, pos}; }
  static VarId z(int pos) { return {Alphabet::Z, -1, pos}; }
  static VarId xb(int block, int pos) { return {Alphabet::X, block, pos}; }
  static VarId yb(int block, int pos) { return {Alphabet::Y, block, pos}; }

  std::uint32_t packed() const {
    return (static_cast<std::uint32_t>(alphabet) << 28) |
           (static_cast<std::uint32_t>(block + 1) << 16) | static_cast<std::uint32_t>(pos);
  }
  static VarId unpack(std::uint32_t p) {
    return {static_cast<Alphabet>(p >> 28), static_cast<int>((p >> 16) & 0xfff) - 1,
            static_cast<int>(p & 0xffff)};
  }
  // "x3", "x0_2", "y1_4", "z2"
  std::string name() const;
  static VarId parse(const std::string& name);

  auto operator<=>(const VarId& o) const { return packed() <=> o.packed(); }
  bool operator==(const VarId& o) const { return packed() == o.packed(); }
};

// Sorted (packed variable, exponent > 0) pairs.
class Monomial {
 public:
  Monomial() = default;
  static Monomial var(VarId v, int exp = 1);

  const std::vector<std::pair<std::uint32_t, int>>& factors() const { return f_; }
  int degree() const;
  int exponent(VarId v) const;
  bool is_one() const { return f_.empty(); }
  bool divides(const Monomial& m) const;
  // Requires divides(m).
  Monomial quotient_of(const Monomial& m) const;
  Monomial with_exponent(VarId v, int exp) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  bool operator==(const Monomial&) const = default;
  std::string to_string() const;

 private:
  std::vector<std::pair<std::uint32_t, int>> f_;
};

// Lexicographic: true when a is strictly larger than b.
struct MonomialGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class MVPoly {
 public:
  using TermMap = std::map<Monomial, mpz_class, MonomialGreater>;

  MVPoly() = default;
  MVPoly(long c);  // NOLINT: constants convert implicitly
  MVPoly(const mpz_class& c);  // NOLINT
  static MVPoly var(VarId v) { return monomial(Monomial::var(v), 1); }
  static MVPoly monomial(const Monomial& m, const mpz_class& c);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  // Largest term under the lex order. Requires !is_zero().
  const std::pair<const Monomial, mpz_class>& leading() const { return *terms_.begin(); }
  mpz_class coeff(const Monomial& m) const;
  // Highest total degree, -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  std::vector<VarId> variables() const;

  MVPoly& operator+=(const MVPoly& q);
  MVPoly& operator-=(const MVPoly& q);
  MVPoly& operator*=(const MVPoly& q);
  // p += c * m * q without temporaries.
  void add_scaled(const MVPoly& q, const mpz_class& c, const Monomial& m);
  void add_term(const Monomial& m, const mpz_class& c);

  friend MVPoly operator+(MVPoly a, const MVPoly& b) { return a += b; }
  friend MVPoly operator-(MVPoly a, const MVPoly& b) { return a -= b; }
  friend MVPoly operator*(const MVPoly& a, const MVPoly& b);
  friend MVPoly operator-(const MVPoly& a);
  bool operator==(const MVPoly& o) const;

  MVPoly pow(int e) const;
  // Exact division of every coefficient; throws InvalidInput if inexact.
  MVPoly divide_coefficients(const mpz_class& c) const;
  // Terms whose total degree is at most deg.
  MVPoly truncate_degree(int deg) const;

  std::string to_string() const;

 private:
  TermMap terms_;
};

inline MVPoly add(const MVPoly& p, const MVPoly& q) { return p + q; }
inline MVPoly mul(const MVPoly& p, const MVPoly& q) { return p * q; }
inline MVPoly neg(const MVPoly& p) { return -p; }

// Simultaneous substitution; unmapped variables stay as they are.
MVPoly substitute(const MVPoly& p, const std::map<VarId, MVPoly>& map);
// Simultaneous renaming of variables (a substitution by single variables).
MVPoly rename(const MVPoly& p, const std::function<VarId(VarId)>& f);

// Exchanges the variables a and b.
MVPoly swap_variables(const MVPoly& p, VarId a, VarId b);

// (p - s_i p) / (v_i - v_{i+1}) where v_k = VarId{alphabet, block, k}.
MVPoly divided_difference(const MVPoly& p, int i, Alphabet alphabet = Alphabet::X,
                          int block = -1);

class NotDivisible : public QuiverError {
 public:
  NotDivisible(const std::string& what, MVPoly remainder)
      : QuiverError("not_divisible", what), remainder_(std::move(remainder)) {}
  const MVPoly& remainder() const { return remainder_; }

 private:
  MVPoly remainder_;
};

// h with p = q * h, by leading-term reduction. Throws NotDivisible with the
// unreduced part on failure.
MVPoly exact_div(const MVPoly& p, const MVPoly& q);

}  // namespace quiverlab
