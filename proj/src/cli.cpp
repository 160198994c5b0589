#include "qaff/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "qaff/drinfeld_poly.hpp"
#include "qaff/hopf.hpp"
#include "qaff/json_io.hpp"
#include "qaff/specialize.hpp"

namespace qaff::cli {

namespace {

constexpr int kMaxN = 12, kMaxK = 8, kMaxOrder = 16;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string type = "A1";
  int n = 0;
  std::string shift = "plain";
  int kmax = 4;
  int lmax = 4;
  int order = default_series_order();
  bool json = false;
  bool timing = false;
  int max_failures = 5;
  std::string suite = "all";
  std::string mutate;
  std::string a, b, c;  // pinned parameters; symbolic when empty
  std::string map = "s=r";
  int left = 1, right = 1;
  std::string aut = "gamma2";
  std::string sigma;
  std::string module_path;
  bool dump_module = false;
};

Shift parse_shift(const std::string& s) {
  if (s == "plain") return Shift::Plain;
  if (s == "rs_inverse" || s == "rs-inverse") return Shift::RsInverse;
  throw UsageError("--shift must be plain or rs_inverse");
}

RatFunc parameter(const std::string& text, const RatFunc& symbol, const char* flag) {
  if (text.empty()) return symbol;
  const RatFunc v = RatFunc::parse(text);
  if (v.is_zero()) throw UsageError(std::string(flag) + " must be nonzero");
  return v;
}

void check_bounds(const RunConfig& c) {
  if (c.n < 0 || c.n > kMaxN) throw UsageError("--n must lie in 0.." + std::to_string(kMaxN));
  if (c.kmax < 1 || c.kmax > kMaxK) throw UsageError("--kmax must lie in 1.." + std::to_string(kMaxK));
  if (c.lmax < 1 || c.lmax > c.kmax) throw UsageError("--lmax must lie in 1..kmax");
}

void require_a1(const RunConfig& c) {
  const AffineType t = AffineType::parse(c.type);
  if (!(t == AffineType::make(Family::A, 1)))
    throw UsageError("evaluation modules are available for A1 only (got " + t.name() + ")");
}

const char* mark(bool ok) { return ok ? "pass" : "FAIL"; }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void print_reports(std::ostream& out, const std::vector<RelationReport>& reports, const RunConfig& c) {
  for (const auto& r : reports) {
    out << std::left << std::setw(6) << r.relation_id << std::right << std::setw(6) << r.instances_checked
        << " instances  " << mark(r.passed());
    if (!r.passed()) out << " (" << r.failures.size() << " failing)";
    if (c.timing) out << "  " << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms";
    out << '\n';
    for (std::size_t k = 0; k < r.failures.size() && static_cast<int>(k) < c.max_failures; ++k)
      out << "    " << r.failures[k].instance << ": " << r.failures[k].lhs << " != " << r.failures[k].rhs << '\n';
  }
}

std::set<std::string> failure_set(const std::vector<RelationReport>& reports) {
  std::set<std::string> out;
  for (const auto& r : reports)
    for (const auto& f : r.failures) out.insert(r.relation_id + ":" + f.instance);
  return out;
}

std::vector<RelationReport> run_suites(const MatrixModule& m, const RunConfig& c) {
  std::vector<RelationReport> out;
  if (c.suite != "drinfeld") out = check_chevalley(m);
  if (c.suite != "chevalley") {
    auto d = check_drinfeld(m, c.kmax, c.lmax);
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

// --- verify --------------------------------------------------------------

int cmd_verify(const RunConfig& c, std::ostream& out) {
  if (c.suite != "all" && c.suite != "chevalley" && c.suite != "drinfeld")
    throw UsageError("--suite must be all, chevalley or drinfeld");
  MatrixModule m;
  std::string label;
  if (!c.module_path.empty()) {
    std::ifstream in(c.module_path);
    if (!in) throw UsageError("cannot read " + c.module_path);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(c.module_path + ": " + e.what());
    }
    m = module_from_json(j);
    label = c.module_path;
  } else {
    require_a1(c);
    const RatFunc a = parameter(c.a, RatFunc::a(), "--a");
    const Shift sh = parse_shift(c.shift);
    m = c.suite == "chevalley" ? build_chevalley_eval(c.n, sh, a) : build_current_eval(c.n, sh, c.kmax, a).base;
    label = "A1 n=" + std::to_string(c.n) + " shift=" + to_string(sh);
  }
  if (!c.mutate.empty()) m = mutate(m, c.mutate);
  if (c.dump_module) {
    emit(out, to_json(m));
    return 0;
  }
  const auto reports = run_suites(m, c);
  if (c.json)
    emit(out, to_json(reports, {c.timing, c.max_failures}));
  else {
    print_reports(out, reports, c);
    out << "verify " << label << ": " << mark(all_passed(reports)) << '\n';
  }
  return all_passed(reports) ? 0 : 1;
}

// --- drinfeld ------------------------------------------------------------

int cmd_drinfeld(const RunConfig& c, std::ostream& out) {
  require_a1(c);
  const Shift sh = parse_shift(c.shift);
  const RatFunc a = parameter(c.a, RatFunc::a(), "--a");
  if (c.order < 0 || c.order > kMaxOrder) throw UsageError("--order must lie in 0.." + std::to_string(kMaxOrder));
  if (c.order < c.n) throw UsageError("--order must be at least n to determine P");
  const EvalModule em = build_current_eval(c.n, sh, std::max(c.order, 1), a);
  const HwSeries h = extract_hw_series(em, c.order);
  const DrinfeldPoly closed = closed_form_P(c.n, sh, a);

  std::optional<DrinfeldPoly> found;
  std::string problem;
  try {
    found = reconstruct_P(h);
  } catch (const NoSolution& e) {
    problem = e.what();
  } catch (const MirrorMismatch& e) {
    problem = e.what();
  }
  const bool plus_ok = found && *found == closed && plus_series_of(closed, c.order) == h.plus;
  const bool minus_ok = minus_series_of(closed, c.order) == h.minus;
  const auto rq = verify_RQ_form(em, c.order);
  bool ok = plus_ok && minus_ok;
  for (const auto& x : rq) ok = ok && x.passed && x.prefactor_consistent;

  if (c.json) {
    Json j;
    j["n"] = c.n;
    j["shift"] = to_string(sh);
    j["order"] = c.order;
    j["P"] = found ? Json(found->str()) : Json(nullptr);
    j["Q"] = found ? Json(found->mirror_str()) : Json(nullptr);
    j["closed_form"] = closed.str();
    Json rqj = Json::array();
    for (const auto& x : rq) rqj.push_back(to_json(x));
    j["checks"] = {{"plus", plus_ok}, {"minus", minus_ok}, {"RQ", rqj}};
    if (!problem.empty()) j["error"] = problem;
    j["passed"] = ok;
    emit(out, j);
  } else {
    out << "P(z) = " << (found ? found->str() : "(none: " + problem + ")") << '\n';
    if (found) out << "Q(z) = " << found->mirror_str() << '\n';
    out << "closed form: " << closed.str() << '\n';
    out << "plus series:  " << mark(plus_ok) << '\n';
    out << "minus series: " << mark(minus_ok) << '\n';
    for (const auto& x : rq) {
      out << "weight " << x.i << ":     " << mark(x.passed && x.prefactor_consistent);
      if (!x.residual.empty()) out << "  first residual " << x.residual;
      if (!x.prefactor_consistent) out << "  prefactor differs from r^(n-i)*s^i";
      out << '\n';
    }
  }
  return ok ? 0 : 1;
}

// --- table ---------------------------------------------------------------

int cmd_table(const RunConfig& c, std::ostream& out, bool map_given) {
  PairingTable t = build_pairing(AffineType::parse(c.type));
  const auto laws = check_table_laws(t);
  if (map_given) t = specialize_table(t, SpecMap::parse(c.map));
  if (c.json) {
    Json j = to_json(t);
    if (map_given) j["map"] = SpecMap::parse(c.map).str();
    j["laws"] = laws;
    j["passed"] = laws.empty();
    emit(out, j);
  } else {
    out << render_table(t);
    for (const auto& l : laws) out << "law violated: " << l << '\n';
  }
  return laws.empty() ? 0 : 1;
}

// --- specialize ----------------------------------------------------------

int cmd_specialize(const RunConfig& c, std::ostream& out) {
  require_a1(c);
  const SpecMap sm = SpecMap::parse(c.map);
  const PairingTable t = specialize_table(build_pairing(AffineType::make(Family::A, 1)), sm);
  const MatrixModule v = specialize_module(build_Vn(c.n), sm);
  const auto rel = check_chevalley(v, t, {1});
  const bool rel_ok = all_passed(rel);
  const bool degenerate = sm.kind == SpecMap::Kind::SToR;
  std::vector<std::string> central;
  std::vector<int> dims;
  if (degenerate) {
    central = check_centrality(v);
    dims = closure_dimensions(v);
  }
  bool full = true;
  for (int d : dims) full = full && d == v.dim;
  const bool ok = rel_ok && central.empty() && full;

  if (c.json) {
    Json j;
    j["map"] = sm.str();
    j["n"] = c.n;
    j["table"] = to_json(t.entries);
    Json mats;
    for (const auto& g : {GenSymbol::E(1), GenSymbol::F(1), GenSymbol::W(1), GenSymbol::Wp(1)})
      mats[g.str()] = to_json(v.at(g));
    j["matrices"] = mats;
    j["checks"] = {{"relations", rel_ok},
                   {"centrality", degenerate ? Json(central.empty()) : Json(nullptr)},
                   {"closure_dimensions", degenerate ? Json(dims) : Json(nullptr)}};
    j["passed"] = ok;
    emit(out, j);
  } else {
    out << "map " << sm.str() << ", V_" << c.n << '\n';
    out << "table " << render_inline(t.entries) << '\n';
    out << "e = " << render_inline(v.at(GenSymbol::E(1))) << '\n';
    out << "w = " << render_inline(v.at(GenSymbol::W(1))) << '\n';
    out << "relations R1-R4: " << mark(rel_ok) << '\n';
    if (degenerate) {
      out << "centrality of w, w': " << mark(central.empty()) << '\n';
      for (const auto& x : central) out << "    " << x << '\n';
      out << "closure dimensions:";
      for (int d : dims) out << ' ' << d;
      out << "  " << mark(full) << '\n';
    }
  }
  return ok ? 0 : 1;
}

// --- tensor --------------------------------------------------------------

int cmd_tensor(const RunConfig& c, std::ostream& out) {
  require_a1(c);
  for (int x : {c.left, c.right})
    if (x < 0 || x > kMaxN) throw UsageError("--left/--right must lie in 0.." + std::to_string(kMaxN));
  const Shift sh = parse_shift(c.shift);
  const MatrixModule l = build_chevalley_eval(c.left, sh, parameter(c.a, RatFunc::a(), "--a"));
  const MatrixModule r = build_chevalley_eval(c.right, sh, parameter(c.b, RatFunc::b(), "--b"));
  const TensorModule t = tensor(l, r);
  const auto rel = check_chevalley(t.module);
  const auto anti = check_antipode(t.module);
  const Vector hw = tensor_vector(basis_vector(l.dim, 0), basis_vector(r.dim, 0));
  const auto closure = span_closure(t.module, hw);
  const bool killed = is_zero(Vector(t.module.at(GenSymbol::E(1)) * hw));
  const RatFunc eig = (t.module.at(GenSymbol::W(1)) * hw)(0);
  const bool eig_ok = eig == l.at(GenSymbol::W(1))(0, 0) * r.at(GenSymbol::W(1))(0, 0);
  const bool ok = all_passed(rel) && anti.empty() && killed && eig_ok;

  if (c.json) {
    Json j;
    j["left"] = c.left;
    j["right"] = c.right;
    j["dim"] = t.dim();
    j["closure_dim"] = closure.size();
    j["relations"] = to_json(rel, {c.timing, c.max_failures});
    j["checks"] = {{"relations", all_passed(rel)},
                   {"antipode", anti.empty()},
                   {"e1_kills_hw", killed},
                   {"w1_hw_eigenvalue", eig.str()},
                   {"w1_eigenvalue_multiplicative", eig_ok}};
    j["passed"] = ok;
    emit(out, j);
  } else {
    out << "V_" << c.left << " (x) V_" << c.right << ": dimension " << t.dim() << '\n';
    out << "closure of v0 (x) v0: dimension " << closure.size() << '\n';
    print_reports(out, rel, c);
    out << "antipode on generators: " << mark(anti.empty()) << '\n';
    out << "e1 kills v0 (x) v0: " << mark(killed) << '\n';
    out << "w1 eigenvalue " << eig.str() << ": " << mark(eig_ok) << '\n';
  }
  return ok ? 0 : 1;
}

// --- twist ---------------------------------------------------------------

int cmd_twist(const RunConfig& c, std::ostream& out) {
  require_a1(c);
  const Shift sh = parse_shift(c.shift);
  const RatFunc a = parameter(c.a, RatFunc::a(), "--a");
  Automorphism aut;
  std::optional<RatFunc> image;  // a -> image when the twist is an evaluation shift
  if (c.aut == "gamma1") {
    aut = Gamma1{};
    image = -a;
  } else if (c.aut == "gamma2") {
    const RatFunc cc = parameter(c.c, RatFunc::c(), "--c");
    aut = Gamma2{cc};
    image = cc * a;
  } else if (c.aut == "asigma") {
    ASigma s;
    std::stringstream ss(c.sigma.empty() ? "1,1" : c.sigma);
    for (std::string tok; std::getline(ss, tok, ',');) {
      try {
        s.sigma.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw UsageError("--sigma expects comma-separated signs");
      }
    }
    aut = s;
  } else {
    throw UsageError("--aut must be gamma1, gamma2 or asigma");
  }

  const bool chevalley_only = std::holds_alternative<ASigma>(aut);
  RunConfig suites = c;
  if (chevalley_only) suites.suite = "chevalley";
  const MatrixModule m = chevalley_only ? build_chevalley_eval(c.n, sh, a) : build_current_eval(c.n, sh, c.kmax, a).base;
  const MatrixModule tw = twist(m, aut);
  const auto before = run_suites(m, suites), after = run_suites(tw, suites);
  bool same_counts = before.size() == after.size();
  for (std::size_t k = 0; same_counts && k < before.size(); ++k)
    same_counts = before[k].instances_checked == after[k].instances_checked;
  const bool preserved = same_counts && failure_set(before) == failure_set(after);

  std::optional<bool> matches;
  std::vector<std::string> mismatched;
  if (image) {
    const MatrixModule ref = build_current_eval(c.n, sh, c.kmax, *image).base;
    for (const auto& [g, mat] : tw.assign) {
      // Γ1 fixes a(l) and the ω-series while a -> -a does not; compare currents only.
      if (c.aut == "gamma1" && g.kind != GenKind::Xp && g.kind != GenKind::Xm) continue;
      if (!equal(mat, ref.at(g))) mismatched.push_back(g.str());
    }
    matches = mismatched.empty();
  }
  const bool ok = preserved && matches.value_or(true);

  if (c.json) {
    Json j;
    j["automorphism"] = to_string(aut);
    j["n"] = c.n;
    j["shift"] = to_string(sh);
    j["checks"] = {{"suites_preserved", preserved},
                   {"baseline_failures", failure_set(before).size()},
                   {"matches_parameter_shift", matches ? Json(*matches) : Json(nullptr)}};
    if (!mismatched.empty()) j["mismatched"] = mismatched;
    j["passed"] = ok;
    emit(out, j);
  } else {
    out << to_string(aut) << " on A1 n=" << c.n << " shift=" << to_string(sh) << '\n';
    out << "relation suites preserved: " << mark(preserved) << " (" << failure_set(before).size()
        << " baseline failures)\n";
    if (matches) {
      out << "equals a -> " << image->str() << ": " << mark(*matches) << '\n';
      for (const auto& g : mismatched) out << "    differs at " << g << '\n';
    }
  }
  return ok ? 0 : 1;
}

// Configuration errors map to exit 2; everything else raised during a
// computation is a mathematical failure.
bool is_usage(const Error& e) {
  return dynamic_cast<const ParseError*>(&e) || dynamic_cast<const UnsupportedRank*>(&e) ||
         dynamic_cast<const IndexOutOfRange*>(&e) || dynamic_cast<const WindowTooSmall*>(&e) ||
         dynamic_cast<const LatticeOverflow*>(&e) || dynamic_cast<const Unsupported*>(&e) ||
         dynamic_cast<const TypeMismatch*>(&e) || dynamic_cast<const MissingGenerator*>(&e);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification for two-parameter quantum affine sl_2 and its Cartan data", "qaff"};
  app.require_subcommand(1);
  RunConfig c;

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", c.json, "Emit JSON");
    sub->add_option("--type", c.type, "Affine type, e.g. A1, B3, G2");
  };
  auto module_opts = [&](CLI::App* sub) {
    sub->add_option("--n", c.n, "Highest weight");
    sub->add_option("--shift", c.shift, "plain (V_n(a)) or rs_inverse (W_n(a))");
    sub->add_option("--a", c.a, "Pin the evaluation parameter (canonical text, e.g. 3/2)");
  };

  auto* verify = app.add_subcommand("verify", "Run the relation suites on an evaluation module");
  common(verify);
  module_opts(verify);
  verify->add_option("--kmax", c.kmax, "Current window |k| <= kmax");
  verify->add_option("--lmax", c.lmax, "Imaginary window 1 <= |l| <= lmax");
  verify->add_option("--suite", c.suite, "all, chevalley or drinfeld");
  verify->add_flag("--timing", c.timing, "Report elapsed time per relation");
  verify->add_option("--max-failures", c.max_failures, "Failures listed per relation");
  verify->add_option("--module", c.module_path, "Check a module read from JSON instead");
  verify->add_flag("--dump-module", c.dump_module, "Print the module as JSON and stop");
#ifdef QAFF_TEST_HOOKS
  verify->add_option("--mutate", c.mutate, "Corrupt one generator: xplus, e1 or omega");
#endif

  auto* drinfeld = app.add_subcommand("drinfeld", "Drinfeld polynomial of an evaluation module");
  common(drinfeld);
  module_opts(drinfeld);
  drinfeld->add_option("--order", c.order, "Series order (default from QAFF_SERIES_ORDER, else 8)");

  auto* table = app.add_subcommand("table", "Two-parameter quantum Cartan matrix");
  common(table);
  auto* table_map = table->add_option("--map", c.map, "Specialize: s=r, s=r^-1 or r=s^k");

  auto* spec = app.add_subcommand("specialize", "Specialize V_n and the A1 table");
  common(spec);
  spec->add_option("--n", c.n, "Highest weight");
  spec->add_option("--map", c.map, "s=r, s=r^-1 or r=s^k");

  auto* tens = app.add_subcommand("tensor", "Tensor product of two evaluation modules");
  common(tens);
  tens->add_option("--left", c.left, "Highest weight of the left factor (parameter a)");
  tens->add_option("--right", c.right, "Highest weight of the right factor (parameter b)");
  tens->add_option("--shift", c.shift, "plain or rs_inverse");
  tens->add_option("--a", c.a, "Pin a");
  tens->add_option("--b", c.b, "Pin b");
  tens->add_flag("--timing", c.timing, "Report elapsed time per relation");

  auto* tw = app.add_subcommand("twist", "Twist an evaluation module by an automorphism");
  common(tw);
  module_opts(tw);
  tw->add_option("--aut", c.aut, "gamma1, gamma2 or asigma");
  tw->add_option("--c", c.c, "Gamma2 scalar (symbolic c by default)");
  tw->add_option("--sigma", c.sigma, "a_sigma signs for nodes 0..n, e.g. -1,1");
  tw->add_option("--kmax", c.kmax, "Current window");
  tw->add_option("--lmax", c.lmax, "Imaginary window");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "qaff: " << e.what() << '\n';
    return 2;
  }

  try {
    check_bounds(c);
    if (verify->parsed()) return cmd_verify(c, out);
    if (drinfeld->parsed()) return cmd_drinfeld(c, out);
    if (table->parsed()) return cmd_table(c, out, table_map->count() > 0);
    if (spec->parsed()) return cmd_specialize(c, out);
    if (tens->parsed()) return cmd_tensor(c, out);
    return cmd_twist(c, out);
  } catch (const UsageError& e) {
    err << "qaff: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "qaff: " << e.what() << '\n';
    return is_usage(e) ? 2 : 1;
  }
}

}  // namespace qaff::cli
