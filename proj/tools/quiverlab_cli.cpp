// quiverlab command-line front end.
//
// Exit codes: 0 success, 1 domain or input error, 2 guard exceeded,
// 3 internal error. Errors go to stderr as {"error": kind, "message": ...}.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "quiverlab/json_io.hpp"

namespace ql = quiverlab;
using ql::json::Json;

namespace {

struct Options {
  std::string input;
  std::string format = "json";
  bool pretty = false;
  std::optional<int> max_length;
  std::optional<int> max_dim;

  std::string ranks, w, breaks, lacing, type = "C";
  int n = 0;
  int max_row = 0;
  int m_max = 1;
  int degree_bound = -1;
  bool is_double = false;
  bool nonvanishing = false;
  std::string method;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw ql::InvalidInput("cannot open input file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ql::Limits limits_from(const Options& o) {
  ql::Limits lim;
  if (const char* env = std::getenv("QUIVERLAB_MAX_GUARD")) {
    char* end = nullptr;
    const long g = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || g <= 0)
      throw ql::InvalidInput("QUIVERLAB_MAX_GUARD must be a positive integer");
    lim.max_length = lim.max_dim = static_cast<int>(g);
  }
  if (o.max_length) lim.max_length = *o.max_length;
  if (o.max_dim) lim.max_dim = *o.max_dim;
  return lim;
}

// The -i document, or an empty object.
class Input {
 public:
  explicit Input(const Options& o) : o_(o) {
    doc_ = o.input.empty() ? Json::object() : ql::json::parse(read_file(o.input));
  }

  Json sub(const std::string& inline_text, const char* key) const {
    if (!inline_text.empty()) return ql::json::parse(inline_text);
    if (doc_.is_object() && doc_.contains(key)) return doc_.at(key);
    throw ql::InvalidInput(std::string("missing input \"") + key + "\"");
  }

  ql::RankConditions ranks() const {
    Json j;
    if (!o_.ranks.empty())
      j = ql::json::parse(o_.ranks);
    else if (doc_.is_object() && doc_.contains("r"))
      j = doc_;
    else
      j = sub("", "ranks");
    auto r = ql::json::rank_conditions_from(j);
    ql::require_valid(r);
    return r;
  }

  ql::Permutation perm() const { return ql::json::permutation_from(sub(o_.w, "w")); }
  ql::SignedPermutation signed_perm() const {
    return ql::json::signed_permutation_from(sub(o_.w, "w"));
  }
  std::vector<int> breaks() const {
    const Json j = sub(o_.breaks, "breaks");
    if (!j.is_array()) throw ql::InvalidInput("breaks must be an array");
    return j.get<std::vector<int>>();
  }
  int n() const {
    if (o_.n > 0) return o_.n;
    return sub("", "n").get<int>();
  }
  char type_letter() const {
    std::string t = o_.type;
    if (doc_.is_object() && doc_.contains("type") && t == "C") t = doc_.at("type").get<std::string>();
    if (t != "B" && t != "C" && t != "D") throw ql::InvalidInput("type must be B, C or D");
    return t[0];
  }
  const Json& doc() const { return doc_; }

 private:
  const Options& o_;
  Json doc_;
};

void emit(const Options& o, const Json& j) {
  std::cout << (o.pretty ? j.dump(2) : j.dump()) << '\n';
}

bool ascii(const Options& o) { return o.format == "ascii"; }

int run(const std::string& cmd, const Options& o) {
  const ql::Limits lim = limits_from(o);
  const Input in(o);

  if (cmd == "lace-array") {
    emit(o, ql::json::to_json(ql::lace_array(in.ranks())));
  } else if (cmd == "codim") {
    const auto r = in.ranks();
    emit(o, {{"codim", ql::expected_codim(r)}, {"hom_area", ql::BlockGrid(r).hom_area()}});
  } else if (cmd == "wmin") {
    const auto W = ql::wmin(in.ranks(), lim);
    if (ascii(o)) {
      for (std::size_t k = 0; k < W.size(); ++k)
        std::cout << (k ? "\n" : "") << ql::render_ascii(W[k]);
      return 0;
    }
    Json a = Json::array();
    for (const auto& x : W) a.push_back(ql::json::to_json(x));
    emit(o, a);
  } else if (cmd == "zelevinsky") {
    emit(o, ql::json::to_json(ql::zelevinsky(in.ranks())));
  } else if (cmd == "rc-enumerate") {
    const auto all = ql::enumerate_rc(in.perm(), lim, o.max_row);
    if (ascii(o)) {
      for (std::size_t k = 0; k < all.size(); ++k)
        std::cout << (k ? "\n" : "") << ql::render_ascii(all[k]);
      return 0;
    }
    Json a = Json::array();
    for (const auto& D : all) a.push_back(ql::json::to_json(D));
    emit(o, a);
  } else if (cmd == "embed") {
    const auto r = in.ranks();
    std::vector<ql::LacingDiagram> Ws;
    if (!o.lacing.empty() || (in.doc().is_object() && in.doc().contains("lacing")))
      Ws.push_back(ql::json::lacing_diagram_from(in.sub(o.lacing, "lacing")));
    else
      Ws = ql::wmin(r, lim);
    Json a = Json::array();
    for (std::size_t k = 0; k < Ws.size(); ++k) {
      const auto D = ql::theorem1_embed(Ws[k], r);
      if (ascii(o))
        std::cout << (k ? "\n" : "") << ql::render_ascii(D);
      else
        a.push_back(ql::json::to_json(D));
    }
    if (!ascii(o)) emit(o, a);
  } else if (cmd == "quiver-poly") {
    const auto r = in.ranks();
    const auto p = o.method == "division" ? ql::quiver_poly_division(r, lim) : ql::quiver_poly(r, lim);
    emit(o, ql::json::to_json(p));
  } else if (cmd == "coeffs") {
    emit(o, ql::json::to_json(ql::quiver_coeffs(in.ranks(), lim)));
  } else if (cmd == "component-check") {
    emit(o, ql::json::to_json(ql::component_check(in.ranks(), lim)));
  } else if (cmd == "stability-check") {
    emit(o, ql::json::to_json(ql::stability_check(in.ranks(), o.m_max, o.degree_bound, lim)));
  } else if (cmd == "schubert") {
    const auto w = in.perm();
    ql::MVPoly p;
    if (o.method == "pipe")
      p = o.is_double ? ql::schubert_double_pipe(w, lim) : ql::schubert_single_pipe(w, lim);
    else
      p = o.is_double ? ql::schubert_double(w, 0, lim) : ql::schubert_single(w, 0, lim);
    emit(o, ql::json::to_json(p));
  } else if (cmd == "stanley") {
    emit(o, ql::json::to_json(ql::stanley_coefficients(in.perm())));
  } else if (cmd == "fulton-gamma") {
    const auto w = in.perm();
    const int n = in.n();
    const auto r = ql::fulton_ranks(w, n);
    Json list = Json::array();
    for (const auto& W : ql::wmin(r, lim)) {
      Json us = Json::array();
      for (const auto& u : ql::gamma(W, w, n)) us.push_back(ql::json::to_json(u));
      list.push_back({{"lacing", ql::json::to_json(W)}, {"gamma", us}});
    }
    emit(o, {{"ranks", ql::json::to_json(r)}, {"wmin", list}});
  } else if (cmd == "theorem2-check") {
    emit(o, ql::json::to_json(ql::theorem2_check(in.perm(), in.n(), lim)));
  } else if (cmd == "split-a") {
    const auto br = in.breaks();
    auto c = ql::split_A(in.perm(), br, lim);
    if (o.nonvanishing) c = ql::nonvanishing(c, br);
    emit(o, ql::json::to_json(c));
  } else if (cmd == "split-bcd") {
    const auto w = in.signed_perm();
    const auto br = in.breaks();
    const char letter = in.type_letter();
    ql::CoeffTable table;
    if (in.doc().is_object() && in.doc().contains("table"))
      table = ql::json::coeff_table_from(in.doc().at("table"));
    else
      table = ql::solve_coeff_table(w, ql::json::q_expansion_from(in.sub("", "printed")), letter, lim);
    auto s = ql::split_BCD(w, br, table, letter, lim);
    if (o.nonvanishing) s = ql::nonvanishing(s, br);
    emit(o, {{"table", ql::json::to_json(table)}, {"split", ql::json::to_json(s)}});
  } else if (cmd == "render") {
    const Json& d = in.doc();
    if (d.is_object() && d.contains("crosses"))
      std::cout << ql::render_ascii(ql::json::pipe_dream_from(d));
    else if (d.is_array() || (d.is_object() && d.contains("dims")))
      std::cout << ql::render_ascii(ql::json::lacing_diagram_from(d));
    else
      throw ql::InvalidInput("render expects a pipe dream or a lacing diagram");
  }
  return 0;
}

int fail(const std::string& kind, const std::string& message, int code) {
  std::cerr << Json{{"error", kind}, {"message", message}}.dump() << '\n';
  return code;
}

const std::vector<std::string> kCommands = {
    "lace-array",   "codim",         "wmin",           "zelevinsky",  "rc-enumerate",
    "embed",        "quiver-poly",   "coeffs",         "component-check", "stability-check",
    "schubert",     "stanley",       "fulton-gamma",   "theorem2-check",  "split-a",
    "split-bcd",    "render"};

const std::map<std::string, std::string> kHelp = {
    {"lace-array", "Lace array s(r) of rank conditions"},
    {"codim", "Expected codimension d(r)"},
    {"wmin", "Minimal lacing diagrams W_min(r)"},
    {"zelevinsky", "Zelevinsky permutation v(r)"},
    {"rc-enumerate", "RC-graphs of a permutation"},
    {"embed", "RC-graph of v(r) attached to a minimal lacing diagram"},
    {"quiver-poly", "Quiver polynomial Q_r(x - y)"},
    {"coeffs", "Quiver coefficients c_mu(r)"},
    {"component-check", "Compare Q_r with the W_min Stanley sum"},
    {"stability-check", "Coefficient stability of Q_{m+r}"},
    {"schubert", "Single or double Schubert polynomial"},
    {"stanley", "Schur expansion of the Stanley symmetric function"},
    {"fulton-gamma", "Universal ranks of w and the factorization of each minimal diagram"},
    {"theorem2-check", "Minimal diagrams versus constrained factorizations"},
    {"split-a", "Type A splitting coefficients"},
    {"split-bcd", "Type B, C or D splitting from a coefficient table or printed expansion"},
    {"render", "ASCII rendering of a pipe dream or lacing diagram"}};

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1 && argv[1][0] != '-' &&
      std::find(kCommands.begin(), kCommands.end(), argv[1]) == kCommands.end())
    return fail("unknown_subcommand", std::string("unknown subcommand ") + argv[1], 1);

  CLI::App app{"Quiver polynomials, lacing diagrams and Schubert splitting"};
  app.require_subcommand(1);
  Options o;
  app.add_option("-i,--input", o.input, "JSON input file ('-' for stdin)");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "ascii"}));
  app.add_flag("--pretty", o.pretty, "Indent JSON output");
  app.add_option("--max-length", o.max_length, "Guard on word lengths");
  app.add_option("--max-dim", o.max_dim, "Guard on permutation sizes");

  std::string chosen;
  for (const auto& name : kCommands) {
    CLI::App* sub = app.add_subcommand(name, kHelp.at(name));
    sub->fallthrough();
    sub->callback([&chosen, name] { chosen = name; });
  }
  auto opt = [&](const char* cmd, const char* flag, auto& target, const char* help) {
    app.get_subcommand(cmd)->add_option(flag, target, help);
  };
  for (const char* c : {"lace-array", "codim", "wmin", "zelevinsky", "embed", "quiver-poly",
                        "coeffs", "component-check", "stability-check"})
    opt(c, "--ranks", o.ranks, "Rank conditions as inline JSON {\"n\",\"r\"}");
  for (const char* c : {"rc-enumerate", "schubert", "stanley", "fulton-gamma", "theorem2-check",
                        "split-a", "split-bcd"})
    opt(c, "--w", o.w, "Permutation as inline JSON array");
  for (const char* c : {"fulton-gamma", "theorem2-check"}) opt(c, "--n", o.n, "Half the vertex count");
  for (const char* c : {"split-a", "split-bcd"}) {
    opt(c, "--breaks", o.breaks, "Breaks as inline JSON array");
    app.get_subcommand(c)->add_flag("--nonvanishing", o.nonvanishing,
                                    "Drop terms whose Schur product is zero");
  }
  opt("split-bcd", "--type", o.type, "B, C or D");
  opt("embed", "--lacing", o.lacing, "Lacing diagram as inline JSON");
  opt("rc-enumerate", "--max-row", o.max_row, "Only use rows 1..max-row");
  opt("stability-check", "--m", o.m_max, "Number of shifts compared");
  opt("stability-check", "--degree-bound", o.degree_bound, "Truncation degree (default d(r))");
  opt("quiver-poly", "--method", o.method, "rc (default) or division");
  opt("schubert", "--method", o.method, "dd (default) or pipe");
  app.get_subcommand("schubert")->add_flag("--double", o.is_double, "Double Schubert polynomial");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what(), 1);
  }

  try {
    return run(chosen, o);
  } catch (const ql::GuardExceeded& e) {
    return fail(e.kind(), e.what(), 2);
  } catch (const ql::QuiverError& e) {
    return fail(e.kind(), e.what(), 1);
  } catch (const nlohmann::json::exception& e) {
    return fail("invalid_input", e.what(), 1);
  } catch (const std::exception& e) {
    return fail("internal_error", e.what(), 3);
  }
}
