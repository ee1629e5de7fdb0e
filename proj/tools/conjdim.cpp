// conjdim: command-line front end.  Every subcommand prints one RunReport
// (JSON by default) and exits 0 on a certified or stable result, 2 when the
// answer is unknown or only heuristic, and 1 on error.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "conjdim/error.hpp"
#include "conjdim/groups.hpp"
#include "conjdim/invariants.hpp"
#include "conjdim/properties.hpp"
#include "conjdim/regress.hpp"
#include "conjdim/serialize.hpp"

#ifndef CONJDIM_VERSION
#define CONJDIM_VERSION "0.0.0"
#endif

using namespace conjdim;

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kUnknown = 2;
constexpr std::uint64_t kSeed = 20240601;

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json outputs = Json::object();
  Json certificates = Json::array();
  int exit_code = kOk;
};

struct Common {
  std::string format = "json";
  std::string out;
};

Json finish(const Report& r, double ms) {
  Json j;
  j["command"] = r.command;
  j["inputs"] = r.inputs;
  j["outputs"] = r.outputs;
  j["certificates"] = r.certificates;
  j["seed"] = kSeed;
  j["exit_code"] = r.exit_code;
  j["wall_time_ms"] = static_cast<long long>(ms);
  j["version"] = CONJDIM_VERSION;
  return j;
}

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Polynomials print as "label: c0 + c1*x + ..." in text mode.
std::string poly_text(const Json& v) {
  const UniPoly f = poly_from_json(v);
  return to_string(f) + "  (over " + f.zero_element().field()->label() + ", degree " + std::to_string(f.degree()) + ")";
}

void print_text(std::ostream& os, const Json& j, const std::string& indent = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (v.is_object() && v.contains("coeffs")) {
      os << indent << it.key() << ": " << poly_text(v) << '\n';
    } else if (v.is_object()) {
      os << indent << it.key() << ":\n";
      print_text(os, v, indent + "  ");
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      os << indent << it.key() << ":\n";
      for (const auto& e : v) {
        os << indent << "  -\n";
        print_text(os, e, indent + "    ");
      }
    } else {
      os << indent << it.key() << ": " << scalar_text(v) << '\n';
    }
  }
}

void emit(const Json& j, const Common& common) {
  if (!common.out.empty()) {
    std::ofstream f(common.out);
    if (!f) throw Error("cannot write " + common.out);
    f << j.dump(2) << '\n';
  }
  if (common.format == "text") {
    std::cout << "command: " << j["command"].get<std::string>() << '\n';
    if (j.contains("error")) std::cout << "error: " << j["error"].get<std::string>() << '\n';
    print_text(std::cout, j["outputs"]);
    for (const auto& c : j["certificates"]) std::cout << "certificate: " << c.value("verdict", c.dump()) << '\n';
    std::cout << "exit_code: " << j["exit_code"].get<int>() << '\n';
  } else {
    std::cout << j.dump(2) << '\n';
  }
}

int digits_option(int given) {
  if (given > 0) return given;
  return ladder_start_digits(50);
}

// --- polynomial input -------------------------------------------------------

struct PolyInput {
  std::string file;
  std::string expr;
  std::string field = "Q";
  std::string var = "x";
};

void add_poly_options(CLI::App* app, PolyInput& in) {
  app->add_option("--poly", in.file, "JSON file holding a polynomial")->check(CLI::ExistingFile);
  app->add_option("--expr", in.expr, "polynomial expression, e.g. \"x^4 - 10*x^2 + 1\"");
  app->add_option("--field", in.field, "field of --expr: Q, Q(i), Q(w<l>)");
  app->add_option("--var", in.var, "variable of --expr");
}

std::pair<UniPoly, std::string> read_poly(const PolyInput& in, Json& inputs) {
  Json j;
  if (!in.file.empty()) {
    std::ifstream f(in.file);
    try {
      j = Json::parse(f);
    } catch (const Json::parse_error& e) {
      throw ParseError(in.file + ": " + e.what());
    }
  } else if (!in.expr.empty()) {
    j = {{"field", in.field}, {"var", in.var}, {"expr", in.expr}};
  } else {
    throw Error("give --poly or --expr");
  }
  const UniPoly f = poly_from_json(j);
  const std::string var = poly_var(j);
  inputs["poly"] = poly_to_json(f, var);
  return {f, var};
}

// --- subcommands ------------------------------------------------------------

struct ConstructArgs {
  std::string group;
  int n = 0, l = 0;
  std::string c, b;
  bool sqrt_family = false, mult_family = false, no_certify = false, no_verify = false;
  int digits = 0;
};

int construct_exit(const Construction& c) {
  if (c.bounds != BoundVerdict::OK) return kError;
  const auto& cert = c.certificate ? c.certificate : c.auxiliary_certificate;
  if (!cert || cert->verdict != Verdict::Irreducible) return kUnknown;
  if (c.numeric_assisted) return kUnknown;
  if (c.dim_report && !c.dim_report->certified && !c.dim_report->stable) return kUnknown;
  return kOk;
}

void run_construct(const ConstructArgs& a, Report& r) {
  ConstructOptions opt;
  opt.certify = !a.no_certify;
  opt.verify = !a.no_verify;
  opt.digits = a.digits > 0 ? a.digits : ladder_start_digits(opt.digits);
  Construction c;
  if (a.sqrt_family || a.mult_family) {
    if (a.sqrt_family && a.mult_family) throw Error("--sqrt-family and --mult-family are exclusive");
    if (a.n < 1) throw Error("--n is required");
    r.inputs["family"] = a.sqrt_family ? "sqrt" : "mult";
    r.inputs["n"] = a.n;
    c = a.sqrt_family ? build_nonexceptional(a.n, opt) : build_mult_example(a.n, opt);
  } else {
    if (a.group.empty()) throw Error("give --group, --sqrt-family or --mult-family");
    r.inputs["group"] = a.group;
    if (a.n) r.inputs["n"] = a.n;
    if (a.l) r.inputs["l"] = a.l;
    std::optional<std::vector<NFElem>> cv;
    std::optional<std::vector<Rational>> bv;
    if (!a.c.empty() || !a.b.empty()) {
      if (a.group == "F4") throw Error("F4 uses fixed constants and weights");
    }
    if (!a.c.empty()) {
      const FieldPtr k = builtin_group(a.group, a.n, a.l)->field();
      cv = parse_constants(a.c, k);
      Json cj = Json::array();
      for (const auto& x : *cv) cj.push_back(nfelem_to_string(x));
      r.inputs["c"] = cj;
    }
    if (!a.b.empty()) {
      bv = parse_rationals(a.b);
      Json bj = Json::array();
      for (const auto& x : *bv) bj.push_back(to_string(x));
      r.inputs["b"] = bj;
    }
    c = construct(a.group, a.n, a.l, cv, bv, opt);
  }
  r.inputs["certify"] = opt.certify;
  r.inputs["verify"] = opt.verify;
  r.inputs["digits"] = opt.digits;
  r.outputs = to_json(c);
  if (c.certificate) r.certificates.push_back(to_json(*c.certificate));
  if (c.auxiliary_certificate) r.certificates.push_back(to_json(*c.auxiliary_certificate));
  r.exit_code = construct_exit(c);
}

struct VerifyArgs {
  PolyInput poly;
  bool mult = false, assert_irreducible = false;
  int digits = 0;
};

void run_verify(const VerifyArgs& a, Report& r) {
  const auto [f, var] = read_poly(a.poly, r.inputs);
  if (!f.zero_element().field()->is_rationals()) throw Error("verify: the polynomial must have rational coefficients");
  if (f.degree() < 1) throw Error("verify: the polynomial must be nonconstant");
  LadderOptions lo;
  lo.start_digits = digits_option(a.digits);
  r.inputs["mode"] = a.mult ? "mult" : "qspan";
  r.inputs["digits"] = lo.start_digits;
  r.inputs["assert_irreducible"] = a.assert_irreducible;
  bool irreducible_known = a.assert_irreducible;
  if (!a.assert_irreducible) {
    const IrreducibilityCertificate cert = irreducibility_certificate(f);
    r.certificates.push_back(to_json(cert));
    if (cert.verdict == Verdict::Reducible) throw Error("verify: the polynomial is reducible over Q");
    irreducible_known = cert.verdict == Verdict::Irreducible;
  }
  const DimReport d = a.mult ? mult_rank_numeric(f, lo) : qspan_dimension(f, lo);
  r.outputs["dimension"] = to_json(d);
  if (!a.mult) {
    const int n = d.dimension_upper;
    r.outputs["bounds"] = to_string(check_bounds(n, f.degree()));
    r.outputs["min_dimension_for_degree"] = min_dimension_for_degree(f.degree());
  }
  r.exit_code = (irreducible_known && (d.certified || d.stable)) ? kOk : kUnknown;
}

void run_certify(const PolyInput& in, Report& r) {
  const auto [f, var] = read_poly(in, r.inputs);
  const IrreducibilityCertificate cert = irreducibility_certificate(f);
  r.outputs["verdict"] = to_string(cert.verdict);
  r.certificates.push_back(to_json(cert));
  r.exit_code = cert.verdict == Verdict::Unknown ? kUnknown : kOk;
}

void run_tables(const std::string& base_text, int n_max, Report& r) {
  if (n_max < 1) throw Error("--n-max must be positive");
  const Base base = parse_base(base_text);
  r.inputs["base"] = base.to_string();
  r.inputs["n_max"] = n_max;
  Json rows = Json::array();
  for (const auto& row : table_rows(base, n_max)) rows.push_back(to_json(row));
  switch (base.kind) {
    case Base::Kind::Q: r.outputs["source"] = "Feit"; break;
    case Base::Kind::Cyclotomic: r.outputs["source"] = "Shephard-Todd"; break;
    case Base::Kind::Finite: r.outputs["source"] = "q^n - 1"; break;
  }
  r.outputs["rows"] = rows;
}

void run_ff(std::uint64_t q, int n, int scan, Report& r) {
  r.inputs["q"] = q;
  r.inputs["n"] = n;
  if (scan > 0) {
    r.inputs["scan"] = scan;
    const ScanReport s = scan_upper_bound(q, n, scan);
    r.outputs = to_json(s);
    r.exit_code = s.passed ? kOk : kError;
  } else {
    const DqnReport d = verify_Dqn(q, n);
    r.outputs = to_json(d);
    r.exit_code = d.passed ? kOk : kError;
  }
}

void run_invariants(const std::string& group, int n, int l, bool check, Report& r) {
  r.inputs["group"] = group;
  if (n) r.inputs["n"] = n;
  if (l) r.inputs["l"] = l;
  r.inputs["check"] = check;
  const InvariantSystem sys = invariant_system(group, n, l);
  r.outputs = invariants_to_json(sys, check);
  if (check && !verify_system(sys)) r.exit_code = kError;
}

void run_group(const std::string& name, int n, int l, bool elements, const std::string& vec, Report& r) {
  r.inputs["name"] = name;
  if (n) r.inputs["n"] = n;
  if (l) r.inputs["l"] = l;
  const GroupPtr g = builtin_group(name, n, l);
  r.outputs = group_to_json(*g, elements);
  // Orbit sizes of the coordinate vectors under both actions.
  Json orbits = Json::array();
  for (int i = 0; i < g->dim(); ++i) {
    std::vector<Rational> v(g->dim(), Rational(0));
    v[i] = 1;
    const Vector e = rational_vector(g->field(), v);
    orbits.push_back({{"vector", "e" + std::to_string(i + 1)},
                      {"row", orbit(*g, e, Action::Row).elements.size()},
                      {"column", orbit(*g, e, Action::Column).elements.size()}});
  }
  r.outputs["unit_orbits"] = orbits;
  if (!vec.empty()) {
    const std::vector<NFElem> v = parse_constants(vec, g->field());
    if (static_cast<int>(v.size()) != g->dim()) throw Error("--vector needs " + std::to_string(g->dim()) + " entries");
    Json vj = Json::array();
    for (const auto& x : v) vj.push_back(nfelem_to_string(x));
    r.inputs["vector"] = vj;
    const Action opp = g->natural_action() == Action::Row ? Action::Column : Action::Row;
    r.outputs["vector_orbit"] = {{"orbit_size", orbit(*g, v, opp).elements.size()},
                                 {"stabilizer_order", stabilizer_order(*g, v, opp)},
                                 {"action", opp == Action::Row ? "row" : "column"}};
  }
}

void run_regress(bool list, const std::vector<std::string>& only, bool properties, Report& r) {
  Json ids = Json::array();
  for (const auto& c : criteria()) ids.push_back({{"id", c.id}, {"title", c.title}, {"limit_seconds", c.limit_seconds}});
  if (list) {
    r.outputs["criteria"] = ids;
    return;
  }
  if (!only.empty()) r.inputs["only"] = only;
  Json results = Json::array();
  int failed = 0;
  for (const auto& c : criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const CriterionResult res = run_criterion(c);
    std::cerr << summary_line(res) << '\n';
    Json checks = Json::array();
    for (const auto& s : res.checks) checks.push_back(s);
    results.push_back({{"id", res.id}, {"passed", res.passed}, {"checks", checks}, {"error", res.error}});
    if (!res.passed) ++failed;
  }
  if (!only.empty() && results.size() != only.size()) throw Error("unknown criterion id in --only");
  r.outputs["results"] = results;
  if (properties) {
    const PropertyReport p = run_property_suites(kSeed, 1);
    Json suites = Json::array();
    for (const auto& s : p.suites) suites.push_back({{"name", s.name}, {"cases", s.cases}, {"failures", s.failures}});
    r.outputs["property_suites"] = suites;
    if (!p.passed()) ++failed;
  }
  r.outputs["failed"] = failed;
  r.exit_code = failed ? kError : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conjdim: conjugate dimension of algebraic numbers"};
  app.set_version_flag("--version", std::string(CONJDIM_VERSION));
  app.require_subcommand(1);
  Common common;
  app.add_option("--format", common.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", common.out, "also write the JSON report to this file");

  ConstructArgs ca;
  auto* construct_cmd = app.add_subcommand("construct", "build alpha for a group or family and certify it");
  construct_cmd->add_option("--group", ca.group, "G2, ST8, Bn, Gl1n or F4");
  construct_cmd->add_option("--n", ca.n, "rank for Bn, Gl1n and the families");
  construct_cmd->add_option("--l", ca.l, "root-of-unity order for Gl1n");
  construct_cmd->add_option("--c", ca.c, "comma separated constants c_i");
  construct_cmd->add_option("--b", ca.b, "comma separated rational weights");
  construct_cmd->add_flag("--sqrt-family", ca.sqrt_family, "weighted square roots of the roots of f");
  construct_cmd->add_flag("--mult-family", ca.mult_family, "multiplicative example");
  construct_cmd->add_flag("--no-certify", ca.no_certify, "skip irreducibility certificates");
  construct_cmd->add_flag("--no-verify", ca.no_verify, "skip the numeric dimension verifier");
  construct_cmd->add_option("--digits", ca.digits, "working precision (default CONJDIM_DIGITS or 30)");

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "numeric conjugate dimension of a polynomial over Q");
  add_poly_options(verify_cmd, va.poly);
  verify_cmd->add_flag("--mult", va.mult, "multiplicative rank instead of the Q-span");
  verify_cmd->add_flag("--assert-irreducible", va.assert_irreducible, "skip the irreducibility check");
  verify_cmd->add_option("--digits", va.digits, "starting precision (default CONJDIM_DIGITS or 50)");

  PolyInput ci;
  auto* certify_cmd = app.add_subcommand("certify", "irreducibility certificate");
  add_poly_options(certify_cmd, ci);

  std::string base = "q";
  int n_max = 10;
  auto* tables_cmd = app.add_subcommand("tables", "largest finite subgroup orders");
  tables_cmd->add_option("--base", base, "q, cyc:<l> or fq:<q>");
  tables_cmd->add_option("--n-max", n_max, "largest n");

  std::uint64_t fq = 2;
  int fn = 2, scan = 0;
  auto* ff_cmd = app.add_subcommand("ff", "extremal element over a finite field");
  ff_cmd->add_option("--q", fq, "prime power q")->required();
  ff_cmd->add_option("--n", fn, "dimension n")->required();
  ff_cmd->add_option("--scan", scan, "exhaustive scan of F_{q^m} for m up to this");

  std::string ig;
  int in = 0, il = 0;
  bool icheck = false;
  auto* inv_cmd = app.add_subcommand("invariants", "fundamental invariants of a group");
  inv_cmd->add_option("--group", ig, "G2, ST8, Bn, Gl1n or F4")->required();
  inv_cmd->add_option("--n", in);
  inv_cmd->add_option("--l", il);
  inv_cmd->add_flag("--check", icheck, "verify invariance under the generators");

  std::string gname, gvec;
  int gn = 0, gl = 0;
  bool gelems = false;
  auto* group_cmd = app.add_subcommand("group", "order, generators and orbits of a built-in group");
  group_cmd->add_option("--name", gname, "G2, F4, WB4, ST8, Bn or Gl1n")->required();
  group_cmd->add_option("--n", gn);
  group_cmd->add_option("--l", gl);
  group_cmd->add_flag("--elements", gelems, "list every element");
  group_cmd->add_option("--vector", gvec, "orbit and stabilizer of this vector");

  bool rlist = false, rprops = false;
  std::vector<std::string> ronly;
  auto* regress_cmd = app.add_subcommand("regress", "run the regression criteria");
  regress_cmd->add_flag("--list", rlist, "list criterion ids");
  regress_cmd->add_option("--only", ronly, "run only these ids");
  regress_cmd->add_flag("--properties", rprops, "also run the randomized property suites");

  CLI11_PARSE(app, argc, argv);

  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.command = app.get_subcommands().front()->get_name();
  std::string error;
  try {
    if (*construct_cmd) run_construct(ca, r);
    else if (*verify_cmd) run_verify(va, r);
    else if (*certify_cmd) run_certify(ci, r);
    else if (*tables_cmd) run_tables(base, n_max, r);
    else if (*ff_cmd) run_ff(fq, fn, scan, r);
    else if (*inv_cmd) run_invariants(ig, in, il, icheck, r);
    else if (*group_cmd) run_group(gname, gn, gl, gelems, gvec, r);
    else if (*regress_cmd) run_regress(rlist, ronly, rprops, r);
  } catch (const DegenerateConstants& e) {
    error = e.what();
    r.outputs["achieved_degree"] = e.achieved_degree();
    r.exit_code = kError;
  } catch (const std::exception& e) {
    error = e.what();
    r.exit_code = kError;
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  Json j = finish(r, ms);
  if (!error.empty()) {
    j["error"] = error;
    std::cerr << "conjdim: " << error << '\n';
  }
  try {
    emit(j, common);
  } catch (const std::exception& e) {
    std::cerr << "conjdim: " << e.what() << '\n';
    return kError;
  }
  return r.exit_code;
}
