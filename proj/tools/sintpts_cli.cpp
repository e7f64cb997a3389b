#include <omp.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "sintpts/io.hpp"

using namespace sintpts;

namespace {

// Exit codes: 0 success, 1 validation failure, 2 runtime error.
constexpr int kOk = 0, kInvalid = 1, kRuntime = 2;

std::string set_string(const PrimeSet& S) {
  std::string s = "{";
  for (std::size_t i = 0; i < S.primes().size(); ++i) s += (i ? "," : "") + S.primes()[i].get_str();
  return s + "}";
}

std::vector<std::string> split(const std::string& s, const std::string& seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (seps.find(c) != std::string::npos) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

Triple parse_triple(const std::string& s, const std::string& what) {
  auto parts = split(s, ",");
  if (parts.size() != 3) throw ValidationError(what + ": expected three comma-separated integers");
  Triple t;
  for (int i = 0; i < 3; ++i)
    if (t[i].set_str(parts[i], 10) != 0) throw ValidationError(what + ": not an integer: " + parts[i]);
  return t;
}

/// Rows separated by ';', entries by ','.
std::vector<Triple> parse_rows(const std::string& s, const std::string& what) {
  std::vector<Triple> out;
  for (const auto& row : split(s, ";")) out.push_back(parse_triple(row, what));
  return out;
}

PrimeSet parse_primes(const std::string& s) {
  std::vector<Integer> ps;
  for (const auto& p : split(s, ",{}")) ps.emplace_back(p);
  return PrimeSet(ps);
}

long param_long(const std::map<std::string, std::string>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw ValidationError("preset parameter '" + key + "' is missing");
  try {
    std::size_t used = 0;
    long v = std::stol(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::logic_error&) {
    throw ValidationError("preset parameter '" + key + "' is not an integer");
  }
}

void apply_threads(int threads) {
  if (threads <= 0) {
    if (const char* env = std::getenv("SINTPTS_THREADS")) threads = std::atoi(env);
  }
  if (threads > 0) omp_set_num_threads(threads);
}

int cmd_check(const std::string& path, const std::string& out) {
  ProblemFile pf = problem_from_json(read_json_file(path));
  const Problem& pr = pf.problem;
  Json rep{{"kind", problem_kind(pr)}, {"problem_hash", fingerprint(pr)}, {"S", primes_to_json(problem_primes(pr))}};
  bool ok = true;
  PrimeSet bad;
  std::visit([&](const auto& p) { bad = bad_primes(p); }, pr);
  if (const auto* d = std::get_if<DivisibilityProblem>(&pr)) {
    auto gp = check_general_position_div(*d);
    rep["general_position"] = report_to_json(gp);
    ok = gp.all_verified();
  } else if (const auto* f = std::get_if<FormsProblem>(&pr)) {
    auto gp = check_general_position_forms(*f);
    rep["general_position"] = report_to_json(gp);
    ok = gp.all_verified();
  }
  rep["bad_primes"] = primes_to_json(bad);
  PrimeSet missing = bad.minus(problem_primes(pr));
  bool s_ok = missing.empty();
  rep["s_sufficient"] = s_ok;
  ok = ok && s_ok;
  if (!s_ok) rep["action"] = "enlarge S to ⊇ " + set_string(problem_primes(pr).united(bad));
  rep["valid"] = ok;
  write_json_file(out, rep);
  std::cerr << (ok ? "PASS" : "FAIL") << " bad primes " << set_string(bad);
  if (!s_ok) std::cerr << ": enlarge S to ⊇ " << set_string(problem_primes(pr).united(bad));
  std::cerr << "\n";
  return ok ? kOk : kInvalid;
}

int cmd_search(const std::string& path, const std::string& height, const std::string& denom,
               const std::string& mode, long unit_exp, bool override_validation, int threads,
               const std::string& out) {
  ProblemFile pf = problem_from_json(read_json_file(path));
  SearchDomain d = pf.domain;
  if (!height.empty()) d.height = Integer(height);
  if (!denom.empty()) d.denom_bound = Integer(denom);
  if (!mode.empty()) d.mode = search_mode_from_string(mode);
  if (unit_exp >= 0) d.unit_exponent = unit_exp;
  RunOptions opts;
  opts.override_validation = override_validation;
  opts.threads = threads;
  SolutionSet s = run(pf.problem, d, opts);
  write_json_file(out, solutions_to_json(s));
  std::cerr << s.records.size() << " solutions\n";
  return kOk;
}

int cmd_verify(const std::string& problem_path, const std::string& sol_path) {
  ProblemFile pf = problem_from_json(read_json_file(problem_path));
  SolutionSet s = solutions_from_json(read_json_file(sol_path));
  bool ok = verify(pf.problem, s);
  std::cout << Json{{"verified", ok}, {"count", s.records.size()}}.dump() << "\n";
  return ok ? kOk : kInvalid;
}

int cmd_geometry(const std::string& preset, const std::string& out) {
  auto tokens = split(preset, " :,");
  if (tokens.empty()) throw ValidationError("empty preset");
  std::string name = tokens[0];
  std::map<std::string, std::string> params;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    auto eq = tokens[i].find('=');
    if (eq == std::string::npos) throw ValidationError("preset parameter must look like key=value: " + tokens[i]);
    params[tokens[i].substr(0, eq)] = tokens[i].substr(eq + 1);
  }
  DivisorConfig cfg;
  Json extra = Json::object();
  if (name == "ngon") {
    long n = param_long(params, "n");
    cfg = preset_ngon(static_cast<int>(n));
    extra["reduction_polynomial"] = "7n^3-70n^2+207n-192";
    extra["reduction_value"] = integer_to_json(ngon_reduction_value(n));
  } else if (name == "thm2") {
    cfg = preset_thm2(param_long(params, "d1"), param_long(params, "d2"), param_long(params, "d3"));
  } else if (name == "prop2") {
    long c = param_long(params, "c"), h = param_long(params, "h");
    cfg = preset_prop2(c, h);
    Rational p = Rational(3 * c) / (4 * h);
    if (params.count("p")) p = Rational(params["p"]);
    p.canonicalize();
    auto ineq = prop2_inequalities(c, h, p);
    extra["p"] = rational_to_json(p);
    extra["xi_closed_form"] = quadratic_to_json(prop2_xi_closed_form(c, h, p));
    extra["di_inequality"] = {{"left", rational_to_json(ineq.di_left)},
                              {"right", rational_to_json(ineq.di_right)},
                              {"holds", ineq.di_holds}};
    extra["h_inequality"] = {{"left", quadratic_to_json(ineq.h_left)},
                             {"right", rational_to_json(ineq.h_right)},
                             {"holds", ineq.h_holds}};
  } else if (name == "delpezzo-conics") {
    cfg = preset_delpezzo_conics();
  } else if (name == "delpezzo2") {
    std::vector<long> cd;
    for (const auto& v : split(params.count("cdots") ? params["cdots"] : "", "/")) cd.push_back(std::stol(v));
    cfg = preset_delpezzo2(cd, params.count("cself") ? param_long(params, "cself") : 0);
  } else if (name == "hirzebruch") {
    cfg = preset_hirzebruch(param_long(params, "d"));
  } else {
    throw ValidationError("unknown preset '" + name + "'");
  }
  CzReport r = cz_check_all(cfg);
  Json rep = report_to_json(r, cfg);
  for (auto& [k, v] : extra.items()) rep[k] = v;
  write_json_file(out, rep);
  std::cerr << (r.overall ? "PASS" : "FAIL") << " " << preset;
  if (extra.contains("reduction_value")) std::cerr << " (7n^3-70n^2+207n-192 = " << extra["reduction_value"] << ")";
  std::cerr << "\n";
  return r.overall ? kOk : kInvalid;
}

int cmd_closure(const std::string& in, int dmax, const std::string& out) {
  SolutionSet s = solutions_from_json(read_json_file(in));
  std::vector<Point2> pts;
  for (const auto& r : s.records) {
    if (r.point.size() != 2) throw ValidationError("closure needs affine points with two coordinates");
    pts.emplace_back(r.point[0], r.point[1]);
  }
  ClosureReport rep = degeneracy_report(pts, dmax);
  Json j = report_to_json(rep, pts);
  j["problem_hash"] = s.fingerprint;
  write_json_file(out, j);
  std::cerr << rep.components.size() << " components, residual " << rep.residual.size() << "\n";
  return kOk;
}

ParametricUnitProblem unit_problem(const std::string& path) {
  ProblemFile pf = problem_from_json(read_json_file(path));
  const auto* u = std::get_if<ParametricUnitProblem>(&pf.problem);
  if (!u) throw ValidationError("family commands need a sunit-parametric problem");
  return *u;
}

int cmd_catalog(const std::string& path, const std::string& out) {
  auto pr = unit_problem(path);
  write_json_file(out, {{"families", catalog_to_json(sunit_catalog(pr))}, {"problem_hash", fingerprint(pr)}});
  return kOk;
}

int cmd_classify(const std::string& path, const std::string& sol_path, const std::string& out) {
  auto pr = unit_problem(path);
  SolutionSet s = solutions_from_json(read_json_file(sol_path));
  if (s.fingerprint != fingerprint(pr)) throw ValidationError("solution file belongs to a different problem");
  FamilyCatalog cat = sunit_catalog(pr);
  Json rows = Json::array();
  for (const auto& r : s.records) {
    if (r.point.size() != 3) throw ValidationError("solution points must be (u, v, t)");
    rows.push_back({{"point", Json::array({rational_to_json(r.point[0]), rational_to_json(r.point[1]),
                                           rational_to_json(r.point[2])})},
                    {"family", classify_solution(cat, pr, r.point[0], r.point[1], r.point[2])}});
  }
  write_json_file(out, {{"catalog", catalog_to_json(cat)}, {"classification", rows},
                        {"summary", report_to_json(phi_report(cat, pr, s))}});
  return kOk;
}

int cmd_orbit(const std::string& conic, const std::string& ell, const std::string& seed, std::size_t count,
              const std::string& primes, const std::string& out) {
  auto rows = parse_rows(conic, "--conic");
  if (rows.size() != 3) throw ValidationError("--conic: expected three rows");
  ConicWithMarks c{{rows[0], rows[1], rows[2]}, parse_triple(ell, "--ell")};
  c.validate();
  PrimeSet S = primes.empty() ? PrimeSet{} : parse_primes(primes);
  OrbitGenerator g = stabilizer_map(c, S);
  auto pts = generate_orbit(c, g, parse_triple(seed, "--seed"), count, S);
  Json jp = Json::array();
  for (const auto& p : pts) jp.push_back(triple_to_json(p));
  write_json_file(out, {{"Q", matrix_to_json(c.Q)},
                        {"ell", triple_to_json(c.ell)},
                        {"generator",
                         {{"M", matrix_to_json(g.M)},
                          {"scale", integer_to_json(g.scale)},
                          {"lambda", rational_to_json(g.lambda)},
                          {"kind", g.kind},
                          {"bad_primes_added", primes_to_json(g.bad_primes_added)}}},
                        {"points", jp}});
  return kOk;
}

int cmd_pencil(const std::string& lines, const std::string& primes, std::size_t members, std::size_t per,
               const std::string& out) {
  PencilReport r = thm8_pencil(parse_rows(lines, "--lines"), primes.empty() ? PrimeSet{} : parse_primes(primes),
                               members, per);
  write_json_file(out, report_to_json(r));
  std::cerr << r.total_points() << " certified points on " << r.members.size() << " conics\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integral points on S-integer varieties: search, checks and reports"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (default: SINTPTS_THREADS or OpenMP default)");
  std::string out = "-";

  std::string problem;
  auto* check = app.add_subcommand("check", "validate a problem file");
  check->add_option("problem", problem, "problem file")->required();
  check->add_option("--out", out, "report path");

  std::string height, denom, mode;
  long unit_exp = -1;
  bool override_validation = false;
  auto* search = app.add_subcommand("search", "bounded exhaustive search");
  search->add_option("problem", problem, "problem file")->required();
  search->add_option("--height", height, "numerator bound H");
  search->add_option("--denom-bound", denom, "S-smooth denominator bound B");
  search->add_option("--mode", mode, "affine-2 | affine-3 | projective | units");
  search->add_option("--unit-exponent", unit_exp, "exponent bound in units mode");
  search->add_flag("--override-validation", override_validation, "search even if validation fails");
  search->add_option("--out", out, "solution file");

  std::string solutions;
  auto* verify_cmd = app.add_subcommand("verify", "re-verify a solution file");
  verify_cmd->add_option("problem", problem, "problem file")->required();
  verify_cmd->add_option("solutions", solutions, "solution file")->required();

  std::string preset;
  auto* geometry = app.add_subcommand("geometry", "intersection-number hypothesis check");
  geometry->add_option("--preset", preset, "e.g. 'ngon n=6', 'prop2 c=4 h=1', 'thm2 d1=1 d2=1 d3=2'")->required();
  geometry->add_option("--out", out, "report path");

  int dmax = 2;
  auto* closure = app.add_subcommand("closure", "fit curves through a solution set");
  closure->add_option("--in", solutions, "solution file")->required();
  closure->add_option("--max-degree", dmax, "largest curve degree")->check(CLI::Range(1, 6));
  closure->add_option("--out", out, "report path");

  auto* family = app.add_subcommand("family", "families of integral points");
  family->require_subcommand(1);
  auto* catalog = family->add_subcommand("catalog", "known families of a parametric unit equation");
  catalog->add_option("--problem", problem, "problem file")->required();
  catalog->add_option("--out", out, "report path");
  auto* classify = family->add_subcommand("classify", "assign solutions to families");
  classify->add_option("--problem", problem, "problem file")->required();
  classify->add_option("--solutions", solutions, "solution file")->required();
  classify->add_option("--out", out, "report path");
  std::string conic, ell, seed, primes;
  std::size_t count = 10;
  auto* orbit = family->add_subcommand("orbit", "integral points on a marked conic");
  orbit->add_option("--conic", conic, "symmetric matrix rows, e.g. '1,0,0;0,-2,0;0,0,-1'")->required();
  orbit->add_option("--ell", ell, "marking line, e.g. '0,0,1'")->required();
  orbit->add_option("--seed", seed, "seed point, e.g. '1,0,1'")->required();
  orbit->add_option("--count", count, "number of points");
  orbit->add_option("--S", primes, "primes, e.g. '2,3'");
  orbit->add_option("--out", out, "report path");
  std::string lines;
  std::size_t members = 10, per = 5;
  auto* pencil = family->add_subcommand("pencil", "conic pencil through five lines");
  pencil->add_option("--lines", lines, "five lines, e.g. '1,0,0;0,1,0;0,0,1;1,1,1;1,-1,2'")->required();
  pencil->add_option("--S", primes, "primes, e.g. '2,3,5'");
  pencil->add_option("--members", members, "pencil members");
  pencil->add_option("--points", per, "points per member");
  pencil->add_option("--out", out, "report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }
  try {
    apply_threads(threads);
    if (*check) return cmd_check(problem, out);
    if (*search) return cmd_search(problem, height, denom, mode, unit_exp, override_validation, threads, out);
    if (*verify_cmd) return cmd_verify(problem, solutions);
    if (*geometry) return cmd_geometry(preset, out);
    if (*closure) return cmd_closure(solutions, dmax, out);
    if (*catalog) return cmd_catalog(problem, out);
    if (*classify) return cmd_classify(problem, solutions, out);
    if (*orbit) return cmd_orbit(conic, ell, seed, count, primes, out);
    if (*pencil) return cmd_pencil(lines, primes, members, per, out);
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kInvalid;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRuntime;
  }
  return kRuntime;
}
