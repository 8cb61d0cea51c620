#include "quiverlab/json_io.hpp"

namespace quiverlab::json {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InvalidInput("json: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<int> ints(const Json& j) {
  if (!j.is_array()) bad("expected an array of integers");
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) bad("expected an integer");
    out.push_back(e.get<int>());
  }
  return out;
}

// Integers that fit in 64 bits are plain numbers, larger ones decimal strings.
Json big(const mpz_class& c) {
  if (c.fits_slong_p()) return c.get_si();
  return c.get_str();
}

mpz_class big_from(const Json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) {
    mpz_class c;
    if (c.set_str(j.get<std::string>(), 10) != 0) bad("bad integer string");
    return c;
  }
  bad("expected an integer coefficient");
}

Json partitions(const std::vector<Partition>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(p);
  return a;
}

std::vector<Partition> partitions_from(const Json& j) {
  if (!j.is_array()) bad("expected a list of partitions");
  std::vector<Partition> out;
  for (const auto& e : j) out.push_back(partition_from(e));
  return out;
}

}  // namespace

Json to_json(const Permutation& w) { return w.one_line(); }
Json to_json(const SignedPermutation& w) { return w.one_line(); }

Json to_json(const PartialPermutation& rho) {
  Json ones = Json::array();
  for (const Box& b : rho.ones()) ones.push_back({b.row, b.col});
  return {{"rows", rho.rows()}, {"cols", rho.cols()}, {"ones", ones}};
}

Json to_json(const RankConditions& r) { return {{"n", r.n()}, {"r", r.table()}}; }

Json to_json(const LaceArray& s) {
  Json rows = Json::array();
  for (int i = 0; i <= s.n(); ++i) {
    Json row = Json::array();
    for (int j = i; j <= s.n(); ++j) row.push_back(s(i, j));
    rows.push_back(row);
  }
  return {{"n", s.n()}, {"s", rows}};
}

Json to_json(const LacingDiagram& W) {
  // A list of maps; the dims follow from their shapes unless there is no map.
  if (W.w.empty()) return {{"dims", W.dims}, {"w", Json::array()}};
  Json maps = Json::array();
  for (const auto& w : W.w) maps.push_back(to_json(w));
  return maps;
}

Json to_json(const PipeDream& D) {
  Json cr = Json::array();
  for (const Box& b : D.crosses()) cr.push_back({b.row, b.col});
  return {{"d", D.d()}, {"crosses", cr}};
}

Json to_json(const MVPoly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json mono = Json::object();
    for (const auto& [v, e] : m.factors()) mono[VarId::unpack(v).name()] = e;
    terms.push_back({{"mono", mono}, {"coeff", c.get_str()}});
  }
  return {{"terms", terms}};
}

Json to_json(const SchurExpansion& e) {
  Json terms = Json::array();
  for (const auto& [lambda, c] : e) terms.push_back({{"partition", lambda}, {"coeff", big(c)}});
  return {{"terms", terms}};
}

Json to_json(const QuiverCoeffs& c) {
  Json terms = Json::array();
  for (const auto& [mus, v] : c) terms.push_back({{"partitions", partitions(mus)}, {"coeff", big(v)}});
  return {{"terms", terms}};
}

Json to_json(const SplitBCD& s) {
  Json terms = Json::array();
  for (const auto& [key, c] : s.terms)
    terms.push_back({{"mu", key.first}, {"partitions", partitions(key.second)}, {"coeff", big(c)}});
  return {{"type", std::string(1, s.letter)},
          {"denominator_log2", s.denominator_log2},
          {"terms", terms}};
}

Json to_json(const CoeffTable& t) {
  Json entries = Json::array();
  for (const auto& [u, row] : t) {
    if (row.empty()) entries.push_back({{"u", u.one_line()}, {"mu", nullptr}, {"value", 0}});
    for (const auto& [mu, v] : row)
      entries.push_back({{"u", u.one_line()}, {"mu", mu}, {"value", big(v)}});
  }
  return {{"entries", entries}};
}

Json to_json(const QExpansion& q) {
  Json terms = Json::array();
  for (const auto& [mu, p] : q) terms.push_back({{"mu", mu}, {"poly", to_json(p)}});
  return {{"terms", terms}};
}

Json to_json(const ComponentReport& rep) {
  return {{"equal", rep.equal},         {"degree", rep.degree},
          {"wmin_count", rep.wmin_count}, {"lhs_terms", rep.lhs_terms},
          {"rhs_terms", rep.rhs_terms},   {"difference", to_json(rep.difference)}};
}

Json to_json(const StabilityReport& rep) {
  return {{"stable", rep.stable},
          {"degree_bound", rep.degree_bound},
          {"compared", rep.compared},
          {"mismatches", rep.mismatches}};
}

Json to_json(const Theorem2Report& rep) {
  return {{"ok", rep.ok},
          {"wmin_count", rep.wmin_count},
          {"factorization_count", rep.factorization_count},
          {"bijective", rep.bijective},
          {"round_trip", rep.round_trip},
          {"component", rep.component}};
}

Permutation permutation_from(const Json& j) { return Permutation(ints(j)); }
SignedPermutation signed_permutation_from(const Json& j) { return SignedPermutation(ints(j)); }

Partition partition_from(const Json& j) {
  Partition p = ints(j);
  if (!is_partition(p)) bad("not a partition");
  return p;
}

PartialPermutation partial_permutation_from(const Json& j) {
  std::vector<Box> ones;
  for (const auto& b : field(j, "ones")) {
    const auto rc = ints(b);
    if (rc.size() != 2) bad("a one is a [row, col] pair");
    ones.push_back({rc[0], rc[1]});
  }
  return PartialPermutation(field(j, "rows").get<int>(), field(j, "cols").get<int>(), ones);
}

RankConditions rank_conditions_from(const Json& j) {
  const Json& t = field(j, "r");
  if (!t.is_array()) bad("\"r\" must be a list of rows");
  std::vector<std::vector<int>> table;
  for (const auto& row : t) table.push_back(ints(row));
  const Json& n = field(j, "n");
  if (!n.is_number_integer()) bad("\"n\" must be an integer");
  return RankConditions(n.get<int>(), std::move(table));
}

LacingDiagram lacing_diagram_from(const Json& j) {
  LacingDiagram W;
  if (j.is_array()) {
    if (j.empty()) bad("a lacing diagram list needs at least one map");
    for (const auto& m : j) W.w.push_back(partial_permutation_from(m));
    for (const auto& m : W.w) W.dims.push_back(m.rows());
    W.dims.push_back(W.w.back().cols());
    for (std::size_t k = 0; k + 1 < W.w.size(); ++k)
      if (W.w[k].cols() != W.w[k + 1].rows())
        throw DimensionMismatch("lacing diagram maps " + std::to_string(k + 1) + " and " +
                                std::to_string(k + 2) + " do not compose");
    return W;
  }
  W.dims = ints(field(j, "dims"));
  for (const auto& m : field(j, "w")) W.w.push_back(partial_permutation_from(m));
  if (W.w.size() + 1 != W.dims.size()) bad("lacing diagram needs one map per arrow");
  for (std::size_t k = 0; k < W.w.size(); ++k)
    if (W.w[k].rows() != W.dims[k] || W.w[k].cols() != W.dims[k + 1])
      throw DimensionMismatch("lacing diagram map " + std::to_string(k + 1) +
                              " does not match dims");
  return W;
}

PipeDream pipe_dream_from(const Json& j) {
  std::vector<Box> crosses;
  for (const auto& b : field(j, "crosses")) {
    const auto rc = ints(b);
    if (rc.size() != 2) bad("a cross is a [row, col] pair");
    crosses.push_back({rc[0], rc[1]});
  }
  return PipeDream(field(j, "d").get<int>(), crosses);
}

MVPoly poly_from(const Json& j) {
  MVPoly p;
  for (const auto& t : field(j, "terms")) {
    Monomial m;
    const Json& mono = field(t, "mono");
    if (!mono.is_object()) bad("\"mono\" must be an object");
    for (const auto& [name, e] : mono.items()) {
      if (!e.is_number_integer() || e.get<int>() < 0) bad("exponents are nonnegative integers");
      if (e.get<int>() > 0) m = m * Monomial::var(VarId::parse(name), e.get<int>());
    }
    p.add_term(m, big_from(field(t, "coeff")));
  }
  return p;
}

SchurExpansion schur_expansion_from(const Json& j) {
  SchurExpansion e;
  for (const auto& t : field(j, "terms"))
    e[partition_from(field(t, "partition"))] += big_from(field(t, "coeff"));
  std::erase_if(e, [](const auto& kv) { return kv.second == 0; });
  return e;
}

QuiverCoeffs quiver_coeffs_from(const Json& j) {
  QuiverCoeffs c;
  for (const auto& t : field(j, "terms"))
    c[partitions_from(field(t, "partitions"))] += big_from(field(t, "coeff"));
  std::erase_if(c, [](const auto& kv) { return kv.second == 0; });
  return c;
}

SplitBCD split_bcd_from(const Json& j) {
  SplitBCD s;
  const auto letter = field(j, "type").get<std::string>();
  if (letter != "B" && letter != "C" && letter != "D") bad("type must be B, C or D");
  s.letter = letter[0];
  s.denominator_log2 = field(j, "denominator_log2").get<int>();
  for (const auto& t : field(j, "terms"))
    s.terms[{partition_from(field(t, "mu")), partitions_from(field(t, "partitions"))}] +=
        big_from(field(t, "coeff"));
  std::erase_if(s.terms, [](const auto& kv) { return kv.second == 0; });
  return s;
}

CoeffTable coeff_table_from(const Json& j) {
  CoeffTable t;
  for (const auto& e : field(j, "entries")) {
    auto& row = t[signed_permutation_from(field(e, "u"))];
    const Json& mu = field(e, "mu");
    if (mu.is_null()) continue;
    const mpz_class v = big_from(field(e, "value"));
    if (v != 0) row[partition_from(mu)] += v;
  }
  return t;
}

QExpansion q_expansion_from(const Json& j) {
  QExpansion q;
  for (const auto& t : field(j, "terms")) {
    const Partition mu = partition_from(field(t, "mu"));
    if (!is_strict(mu)) throw NonStrictPartition("Q index must be a strict partition");
    q[mu] += poly_from(field(t, "poly"));
  }
  std::erase_if(q, [](const auto& kv) { return kv.second.is_zero(); });
  return q;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedJson(e.what());
  }
}

Json error_json(const QuiverError& e) { return {{"error", e.kind()}, {"message", e.what()}}; }

}  // namespace quiverlab::json
