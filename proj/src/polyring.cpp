#include "quiverlab/polyring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace quiverlab {

// -------------------------------------------------------------------- VarId

std::string VarId::name() const {
  std::string s;
  switch (alphabet) {
    case Alphabet::X: s = "x"; break;
    case Alphabet::Y: s = "y"; break;
    case Alphabet::Z: s = "z"; break;
  }
  if (block >= 0) s += std::to_string(block) + "_";
  return s + std::to_string(pos);
}

VarId VarId::parse(const std::string& name) {
  if (name.size() < 2) throw InvalidInput("bad variable name: " + name);
  VarId v;
  switch (name[0]) {
    case 'x': v.alphabet = Alphabet::X; break;
    case 'y': v.alphabet = Alphabet::Y; break;
    case 'z': v.alphabet = Alphabet::Z; break;
    default: throw InvalidInput("bad variable name: " + name);
  }
  const std::string rest = name.substr(1);
  auto number = [&](const std::string& t) {
    if (t.empty() || !std::all_of(t.begin(), t.end(), ::isdigit))
      throw InvalidInput("bad variable name: " + name);
    return std::stoi(t);
  };
  const auto us = rest.find('_');
  if (us == std::string::npos) {
    v.block = -1;
    v.pos = number(rest);
  } else {
    v.block = number(rest.substr(0, us));
    v.pos = number(rest.substr(us + 1));
  }
  if (v.pos < 1) throw InvalidInput("bad variable name: " + name);
  return v;
}

// ----------------------------------------------------------------- Monomial

Monomial Monomial::var(VarId v, int exp) {
  Monomial m;
  if (exp > 0) m.f_.emplace_back(v.packed(), exp);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : f_) d += e;
  return d;
}

int Monomial::exponent(VarId v) const {
  const auto key = v.packed();
  auto it = std::lower_bound(f_.begin(), f_.end(), key,
                             [](const auto& a, std::uint32_t k) { return a.first < k; });
  return it != f_.end() && it->first == key ? it->second : 0;
}

bool Monomial::divides(const Monomial& m) const {
  std::size_t j = 0;
  for (const auto& [v, e] : f_) {
    while (j < m.f_.size() && m.f_[j].first < v) ++j;
    if (j == m.f_.size() || m.f_[j].first != v || m.f_[j].second < e) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& m) const {
  Monomial q;
  std::size_t i = 0;
  for (const auto& [v, e] : m.f_) {
    int rest = e;
    if (i < f_.size() && f_[i].first == v) rest -= f_[i++].second;
    if (rest > 0) q.f_.emplace_back(v, rest);
  }
  return q;
}

Monomial Monomial::with_exponent(VarId v, int exp) const {
  Monomial m;
  const auto key = v.packed();
  bool placed = false;
  for (const auto& fe : f_) {
    if (!placed && fe.first >= key) {
      if (exp > 0) m.f_.emplace_back(key, exp);
      placed = true;
      if (fe.first == key) continue;
    }
    m.f_.push_back(fe);
  }
  if (!placed && exp > 0) m.f_.emplace_back(key, exp);
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.f_.reserve(a.f_.size() + b.f_.size());
  std::size_t i = 0, j = 0;
  while (i < a.f_.size() || j < b.f_.size()) {
    if (j == b.f_.size() || (i < a.f_.size() && a.f_[i].first < b.f_[j].first)) {
      m.f_.push_back(a.f_[i++]);
    } else if (i == a.f_.size() || b.f_[j].first < a.f_[i].first) {
      m.f_.push_back(b.f_[j++]);
    } else {
      m.f_.emplace_back(a.f_[i].first, a.f_[i].second + b.f_[j].second);
      ++i;
      ++j;
    }
  }
  return m;
}

std::string Monomial::to_string() const {
  if (f_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : f_) {
    if (!s.empty()) s += "*";
    s += VarId::unpack(v).name();
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

bool MonomialGreater::operator()(const Monomial& a, const Monomial& b) const {
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  const std::size_t n = std::min(fa.size(), fb.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (fa[k].first != fb[k].first) return fa[k].first < fb[k].first;
    if (fa[k].second != fb[k].second) return fa[k].second > fb[k].second;
  }
  return fa.size() > fb.size();
}

// ------------------------------------------------------------------- MVPoly

MVPoly::MVPoly(long c) {
  if (c != 0) terms_.emplace(Monomial{}, mpz_class(c));
}

MVPoly::MVPoly(const mpz_class& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

MVPoly MVPoly::monomial(const Monomial& m, const mpz_class& c) {
  MVPoly p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

mpz_class MVPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

int MVPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool MVPoly::is_homogeneous() const {
  const int d = degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

std::vector<VarId> MVPoly::variables() const {
  std::set<std::uint32_t> vs;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors()) vs.insert(v);
  std::vector<VarId> out;
  for (auto v : vs) out.push_back(VarId::unpack(v));
  return out;
}

void MVPoly::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MVPoly::add_scaled(const MVPoly& q, const mpz_class& c, const Monomial& m) {
  if (c == 0) return;
  for (const auto& [qm, qc] : q.terms_) add_term(qm * m, qc * c);
}

MVPoly& MVPoly::operator+=(const MVPoly& q) {
  for (const auto& [m, c] : q.terms_) add_term(m, c);
  return *this;
}

MVPoly& MVPoly::operator-=(const MVPoly& q) {
  for (const auto& [m, c] : q.terms_) add_term(m, -c);
  return *this;
}

MVPoly& MVPoly::operator*=(const MVPoly& q) {
  *this = *this * q;
  return *this;
}

MVPoly operator*(const MVPoly& a, const MVPoly& b) {
  MVPoly out;
  const MVPoly& small = a.size() <= b.size() ? a : b;
  const MVPoly& large = a.size() <= b.size() ? b : a;
  for (const auto& [m, c] : small.terms_) out.add_scaled(large, c, m);
  return out;
}

MVPoly operator-(const MVPoly& a) {
  MVPoly out = a;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

bool MVPoly::operator==(const MVPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (const auto& [m, c] : terms_) {
    if (!(m == it->first) || c != it->second) return false;
    ++it;
  }
  return true;
}

MVPoly MVPoly::pow(int e) const {
  if (e < 0) throw InvalidInput("MVPoly::pow: negative exponent");
  MVPoly result(1L);
  MVPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

MVPoly MVPoly::divide_coefficients(const mpz_class& c) const {
  if (c == 0) throw InvalidInput("divide_coefficients: division by zero");
  MVPoly out = *this;
  for (auto& [m, v] : out.terms_) {
    if (!mpz_divisible_p(v.get_mpz_t(), c.get_mpz_t()))
      throw InvalidInput("divide_coefficients: inexact division");
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
  }
  return out;
}

MVPoly MVPoly::truncate_degree(int deg) const {
  MVPoly out;
  for (const auto& [m, c] : terms_)
    if (m.degree() <= deg) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

std::string MVPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    mpz_class a = abs(c);
    if (!first)
      os << (c < 0 ? " - " : " + ");
    else if (c < 0)
      os << "-";
    first = false;
    if (m.is_one())
      os << a.get_str();
    else if (a == 1)
      os << m.to_string();
    else
      os << a.get_str() << "*" << m.to_string();
  }
  return os.str();
}

// ------------------------------------------------------------- operations

MVPoly substitute(const MVPoly& p, const std::map<VarId, MVPoly>& map) {
  // Cache powers of each substituted variable.
  std::map<std::pair<std::uint32_t, int>, MVPoly> powers;
  auto power_of = [&](std::uint32_t v, int e) -> const MVPoly& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    return powers.emplace(key, map.at(VarId::unpack(v)).pow(e)).first->second;
  };
  MVPoly out;
  for (const auto& [m, c] : p.terms()) {
    Monomial kept;
    MVPoly factor(1L);
    for (const auto& [v, e] : m.factors()) {
      if (map.count(VarId::unpack(v)))
        factor = factor * power_of(v, e);
      else
        kept = kept * Monomial::var(VarId::unpack(v), e);
    }
    out.add_scaled(factor, c, kept);
  }
  return out;
}

MVPoly rename(const MVPoly& p, const std::function<VarId(VarId)>& f) {
  MVPoly out;
  for (const auto& [m, c] : p.terms()) {
    Monomial r;
    for (const auto& [v, e] : m.factors()) r = r * Monomial::var(f(VarId::unpack(v)), e);
    out.add_term(r, c);
  }
  return out;
}

MVPoly swap_variables(const MVPoly& p, VarId a, VarId b) {
  return rename(p, [&](VarId v) { return v == a ? b : (v == b ? a : v); });
}

MVPoly divided_difference(const MVPoly& p, int i, Alphabet alphabet, int block) {
  if (i < 1) throw InvalidInput("divided_difference: index must be >= 1");
  const VarId vi{alphabet, block, i};
  const VarId vj{alphabet, block, i + 1};
  MVPoly out;
  for (const auto& [m, c] : p.terms()) {
    const int a = m.exponent(vi);
    const int b = m.exponent(vj);
    if (a == b) continue;
    const Monomial rest = m.with_exponent(vi, 0).with_exponent(vj, 0);
    // d(x^a y^b) = sum over the monomials strictly between the two exponents.
    const int lo = std::min(a, b);
    const int hi = std::max(a, b);
    const mpz_class sign = a > b ? c : mpz_class(-c);
    for (int k = 0; k < hi - lo; ++k) {
      const int ea = a > b ? a - 1 - k : a + k;
      const int eb = a > b ? b + k : b - 1 - k;
      out.add_term(rest * Monomial::var(vi, ea) * Monomial::var(vj, eb), sign);
    }
  }
  return out;
}

MVPoly exact_div(const MVPoly& p, const MVPoly& q) {
  if (q.is_zero()) throw InvalidInput("exact_div: division by zero");
  const auto& [qm, qc] = q.leading();
  MVPoly rem = p;
  MVPoly h;
  while (!rem.is_zero()) {
    const auto [rm, rc] = rem.leading();
    if (!qm.divides(rm) || !mpz_divisible_p(rc.get_mpz_t(), qc.get_mpz_t()))
      throw NotDivisible("exact_div: divisor does not divide the dividend", rem);
    const Monomial t = qm.quotient_of(rm);
    mpz_class tc;
    mpz_divexact(tc.get_mpz_t(), rc.get_mpz_t(), qc.get_mpz_t());
    h.add_term(t, tc);
    rem.add_scaled(q, -tc, t);
  }
  return h;
}

}  // namespace quiverlab
