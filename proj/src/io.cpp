#include "sintpts/io.hpp"

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

namespace sintpts {

namespace {

bool fits_int64(const Integer& x) {
  return x >= Integer(std::numeric_limits<long>::min()) && x <= Integer(std::numeric_limits<long>::max());
}

[[noreturn]] void bad(const std::string& where, const std::string& why) {
  throw ValidationError("field '" + where + "': " + why);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) bad(where.empty() ? key : where + "." + key, "missing");
  return j.at(key);
}

std::string sub(const std::string& where, const std::string& key) { return where.empty() ? key : where + "." + key; }
std::string idx(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

}  // namespace

Json integer_to_json(const Integer& x) {
  if (fits_int64(x)) return Json(x.get_si());
  return Json(x.get_str());
}

Integer integer_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long>()));
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) bad(where, "not an integer: " + j.get<std::string>());
    return x;
  }
  bad(where, "expected an integer");
}

Json rational_to_json(const Rational& x) {
  return Json::array({integer_to_json(x.get_num()), integer_to_json(x.get_den())});
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_array()) {
    if (j.size() != 2) bad(where, "expected [numerator, denominator]");
    Integer den = integer_from_json(j[1], where);
    if (den == 0) bad(where, "zero denominator");
    return make_rational(integer_from_json(j[0], where), den);
  }
  if (j.is_string()) {
    Rational r;
    if (r.set_str(j.get<std::string>(), 10) != 0 || r.get_den() == 0) bad(where, "not a rational");
    r.canonicalize();
    return r;
  }
  if (j.is_number_float()) bad(where, "floats are not exact; use [numerator, denominator]");
  return Rational(integer_from_json(j, where));
}

Json poly_to_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms())
    terms.push_back({{"exponents", m}, {"numerator", integer_to_json(c.get_num())},
                     {"denominator", integer_to_json(c.get_den())}});
  return terms;
}

MultiPoly poly_from_json(const Json& j, unsigned nvars, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_poly(j.get<std::string>(), nvars);
    } catch (const ValidationError& e) {
      bad(where, e.what());
    }
  }
  if (!j.is_array()) bad(where, "expected a term list or an expression string");
  MultiPoly p(nvars);
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string w = idx(where, i);
    const Json& t = j[i];
    const Json& e = field(t, "exponents", w);
    if (!e.is_array() || e.size() != nvars) bad(sub(w, "exponents"), "expected " + std::to_string(nvars) + " entries");
    Monomial m;
    for (const auto& x : e) {
      if (!x.is_number_integer() || x.get<long>() < 0) bad(sub(w, "exponents"), "exponents must be >= 0");
      m.push_back(x.get<unsigned>());
    }
    Integer num = integer_from_json(field(t, "numerator", w), sub(w, "numerator"));
    Integer den = t.contains("denominator") ? integer_from_json(t["denominator"], sub(w, "denominator")) : Integer(1);
    if (den == 0) bad(sub(w, "denominator"), "zero denominator");
    p.add_term(m, make_rational(num, den));
  }
  return p;
}

Json quadratic_to_json(const QuadraticNumber& q) {
  return {{"a", rational_to_json(q.a())}, {"b", rational_to_json(q.b())}, {"d", integer_to_json(q.d())},
          {"text", q.to_string()}};
}

Json primes_to_json(const PrimeSet& S) {
  Json out = Json::array();
  for (const auto& p : S.primes()) out.push_back(integer_to_json(p));
  return out;
}

PrimeSet primes_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected a list of primes");
  std::vector<Integer> ps;
  for (std::size_t i = 0; i < j.size(); ++i) ps.push_back(integer_from_json(j[i], idx(where, i)));
  try {
    return PrimeSet(ps);
  } catch (const ValidationError& e) {
    bad(where, e.what());
  }
}

SearchDomain default_domain(const Problem& problem) {
  SearchDomain d;
  d.height = 10;
  d.denom_bound = 1;
  switch (problem.index()) {
    case 0: d.mode = SearchMode::affine2; break;
    case 1:
    case 2: d.mode = SearchMode::projective; break;
    default:
      d.mode = SearchMode::units;
      d.unit_exponent = 6;
      d.denom_bound = 10;
  }
  return d;
}

Json domain_to_json(const SearchDomain& d) {
  return {{"height", integer_to_json(d.height)}, {"denom_bound", integer_to_json(d.denom_bound)},
          {"mode", to_string(d.mode)}, {"unit_exponent", d.unit_exponent}};
}

SearchDomain domain_from_json(const Json& j, SearchDomain base) {
  if (!j.is_object()) bad("domain", "expected an object");
  if (j.contains("height")) base.height = integer_from_json(j["height"], "domain.height");
  if (j.contains("denom_bound")) base.denom_bound = integer_from_json(j["denom_bound"], "domain.denom_bound");
  if (j.contains("mode")) {
    if (!j["mode"].is_string()) bad("domain.mode", "expected a string");
    base.mode = search_mode_from_string(j["mode"].get<std::string>());
  }
  if (j.contains("unit_exponent")) {
    if (!j["unit_exponent"].is_number_integer()) bad("domain.unit_exponent", "expected an integer");
    base.unit_exponent = j["unit_exponent"].get<long>();
  }
  base.validate();
  return base;
}

ProblemFile problem_from_json(const Json& j) {
  if (!j.is_object()) bad("<root>", "expected an object");
  const Json& k = field(j, "kind", "");
  if (!k.is_string()) bad("kind", "expected a string");
  std::string kind = k.get<std::string>();
  PrimeSet S = j.contains("S") ? primes_from_json(j["S"]) : PrimeSet{};
  ProblemFile out;
  if (kind == "divisibility") {
    DivisibilityProblem p;
    p.S = S;
    const Json& pairs = field(j, "pairs", "");
    if (!pairs.is_array()) bad("pairs", "expected a list");
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      std::string w = idx("pairs", i);
      const Json& e = pairs[i];
      if (e.is_array() && e.size() == 2)
        p.pairs.emplace_back(poly_from_json(e[0], 2, idx(w, 0)), poly_from_json(e[1], 2, idx(w, 1)));
      else
        p.pairs.emplace_back(poly_from_json(field(e, "f", w), 2, sub(w, "f")),
                             poly_from_json(field(e, "g", w), 2, sub(w, "g")));
    }
    p.validate();
    out.problem = p;
  } else if (kind == "forms") {
    FormsProblem p;
    p.S = S;
    const Json& F = field(j, "F", "");
    if (!F.is_array()) bad("F", "expected a list");
    for (std::size_t i = 0; i < F.size(); ++i) p.F.push_back(poly_from_json(F[i], 3, idx("F", i)));
    p.G = poly_from_json(field(j, "G", ""), 3, "G");
    p.validate();
    out.problem = p;
  } else if (kind == "ngon") {
    NGonProblem p;
    p.S = S;
    const Json& forms = field(j, "forms", "");
    if (!forms.is_array()) bad("forms", "expected a list");
    for (std::size_t i = 0; i < forms.size(); ++i) {
      std::string w = idx("forms", i);
      if (!forms[i].is_array() || forms[i].size() != 3) bad(w, "expected three integer coefficients");
      p.forms.push_back({integer_from_json(forms[i][0], w), integer_from_json(forms[i][1], w),
                         integer_from_json(forms[i][2], w)});
    }
    p.validate();
    out.problem = p;
  } else if (kind == "sunit-parametric") {
    ParametricUnitProblem p;
    p.S = S;
    p.f = poly_from_json(field(j, "f", ""), 1, "f");
    p.g = poly_from_json(field(j, "g", ""), 1, "g");
    p.h = poly_from_json(field(j, "h", ""), 1, "h");
    p.validate();
    out.problem = p;
  } else {
    bad("kind", "unknown problem kind '" + kind + "'");
  }
  out.domain = default_domain(out.problem);
  if (j.contains("domain")) {
    out.has_domain = true;
    out.domain = domain_from_json(j["domain"], out.domain);
  }
  return out;
}

Json problem_to_json(const Problem& problem) {
  Json j;
  j["kind"] = problem_kind(problem);
  j["S"] = primes_to_json(problem_primes(problem));
  if (const auto* d = std::get_if<DivisibilityProblem>(&problem)) {
    j["pairs"] = Json::array();
    for (const auto& [f, g] : d->pairs) j["pairs"].push_back({{"f", poly_to_json(f)}, {"g", poly_to_json(g)}});
  } else if (const auto* f = std::get_if<FormsProblem>(&problem)) {
    j["F"] = Json::array();
    for (const auto& F : f->F) j["F"].push_back(poly_to_json(F));
    j["G"] = poly_to_json(f->G);
  } else if (const auto* n = std::get_if<NGonProblem>(&problem)) {
    j["forms"] = Json::array();
    for (const auto& t : n->forms) j["forms"].push_back(triple_to_json(t));
  } else {
    const auto& u = std::get<ParametricUnitProblem>(problem);
    j["f"] = poly_to_json(u.f);
    j["g"] = poly_to_json(u.g);
    j["h"] = poly_to_json(u.h);
  }
  return j;
}

Json solutions_to_json(const SolutionSet& s) {
  Json recs = Json::array();
  for (const auto& r : s.records) {
    Json pt = Json::array();
    for (const auto& x : r.point) pt.push_back(rational_to_json(x));
    Json w = Json::array();
    for (const auto& x : r.witnesses) w.push_back({{"name", x.name}, {"value", rational_to_json(x.value)}});
    recs.push_back({{"point", pt}, {"witnesses", w}});
  }
  return {{"format", "sintpts-solutions"},
          {"tool_version", kToolVersion},
          {"problem_hash", s.fingerprint},
          {"kind", s.kind},
          {"domain", domain_to_json(s.domain)},
          {"override_used", s.override_used},
          {"notes", s.notes},
          {"count", s.records.size()},
          {"solutions", recs}};
}

SolutionSet solutions_from_json(const Json& j) {
  SolutionSet s;
  if (!j.is_object()) bad("<root>", "expected an object");
  const Json& ph = field(j, "problem_hash", "");
  const Json& kind = field(j, "kind", "");
  if (!ph.is_string() || !kind.is_string()) bad("problem_hash", "expected strings for problem_hash and kind");
  s.fingerprint = ph.get<std::string>();
  s.kind = kind.get<std::string>();
  s.domain = domain_from_json(field(j, "domain", ""), SearchDomain{});
  if (j.contains("override_used")) s.override_used = j["override_used"].get<bool>();
  if (j.contains("notes")) s.notes = j["notes"].get<std::vector<std::string>>();
  const Json& sols = field(j, "solutions", "");
  if (!sols.is_array()) bad("solutions", "expected a list");
  for (std::size_t i = 0; i < sols.size(); ++i) {
    std::string w = idx("solutions", i);
    PointRecord r;
    const Json& pt = field(sols[i], "point", w);
    if (!pt.is_array()) bad(sub(w, "point"), "expected a list");
    for (std::size_t k = 0; k < pt.size(); ++k) r.point.push_back(rational_from_json(pt[k], idx(sub(w, "point"), k)));
    if (sols[i].contains("witnesses")) {
      const Json& ws = sols[i]["witnesses"];
      for (std::size_t k = 0; k < ws.size(); ++k) {
        std::string ww = idx(sub(w, "witnesses"), k);
        const Json& name = field(ws[k], "name", ww);
        if (!name.is_string()) bad(sub(ww, "name"), "expected a string");
        r.witnesses.push_back({name.get<std::string>(), rational_from_json(field(ws[k], "value", ww), sub(ww, "value"))});
      }
    }
    s.records.push_back(std::move(r));
  }
  return s;
}

Json report_to_json(const GeneralPositionReport& r) {
  Json res = Json::array();
  for (const auto& c : r.results) {
    Json certs = Json::array();
    for (const auto& x : c.certificates) certs.push_back(rational_to_json(x));
    res.push_back({{"condition", c.condition}, {"subject", c.subject}, {"verdict", to_string(c.verdict)},
                   {"detail", c.detail}, {"certificates", certs}});
  }
  return {{"results", res}, {"notes", r.notes}, {"all_verified", r.all_verified()},
          {"any_violated", r.any_violated()}};
}

Json report_to_json(const CzReport& r, const DivisorConfig& config) {
  Json comps = Json::array();
  for (const auto& c : r.components) {
    Json e{{"label", c.label}, {"d_dot", rational_to_json(c.d_dot)}, {"solved", c.solved}, {"pass", c.pass}};
    if (c.solved) {
      e["xi"] = quadratic_to_json(c.xi);
      e["margin"] = quadratic_to_json(c.margin);
    }
    if (!c.error.empty()) e["error"] = c.error;
    comps.push_back(e);
  }
  Json p = Json::array();
  for (const auto& x : config.p) p.push_back(rational_to_json(x));
  return {{"preset", config.name}, {"multiplicities", p}, {"scale", integer_to_json(config.scale)},
          {"d_squared", rational_to_json(r.d_squared)}, {"components", comps}, {"overall", r.overall},
          {"notes", config.notes}};
}

Json report_to_json(const ClosureReport& r, const std::vector<Point2>& points) {
  Json comps = Json::array();
  for (const auto& c : r.components)
    comps.push_back({{"degree", c.degree}, {"polynomial", poly_to_json(c.poly)}, {"text", c.poly.to_string()},
                     {"support", c.support.size()}});
  Json resid = Json::array();
  for (std::size_t i : r.residual)
    resid.push_back(Json::array({rational_to_json(points[i].first), rational_to_json(points[i].second)}));
  return {{"max_degree", r.max_degree}, {"min_support", r.min_support}, {"points", points.size()},
          {"components", comps}, {"residual_count", r.residual.size()}, {"residual", resid},
          {"coverage", rational_to_json(r.coverage)}, {"notes", r.notes}};
}

Json catalog_to_json(const FamilyCatalog& c) {
  Json out = Json::array();
  for (const auto& f : c.families) {
    Json e{{"id", f.id}, {"kind", to_string(f.kind)}, {"nonempty", f.nonempty}};
    if (f.t0) e["t0"] = rational_to_json(*f.t0);
    if (!f.fixed.empty()) {
      e["fixed"] = f.fixed;
      e["fixed_value"] = rational_to_json(f.fixed_value);
      if (f.kind == FamilyKind::fixed_pair) e["second_value"] = rational_to_json(f.second_value);
    }
    out.push_back(e);
  }
  return out;
}

Json report_to_json(const PhiReport& r) {
  Json phi = Json::array();
  for (const auto& x : r.phi) phi.push_back(rational_to_json(x));
  return {{"counts", r.counts}, {"total", r.total}, {"sporadic", r.sporadic}, {"phi_size", r.phi.size()}, {"phi", phi}};
}

Json matrix_to_json(const IMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(triple_to_json(row));
  return out;
}

Json triple_to_json(const Triple& t) {
  return Json::array({integer_to_json(t[0]), integer_to_json(t[1]), integer_to_json(t[2])});
}

Json report_to_json(const PencilReport& r) {
  Json lines = Json::array(), base = Json::array(), members = Json::array();
  for (const auto& l : r.lines) lines.push_back(triple_to_json(l));
  for (const auto& p : r.base_points) base.push_back(triple_to_json(p));
  for (const auto& m : r.members) {
    Json pts = Json::array();
    for (const auto& p : m.points) pts.push_back(triple_to_json(p));
    members.push_back({{"r", rational_to_json(m.r)},
                       {"Q", matrix_to_json(m.Q)},
                       {"mark_a", triple_to_json(m.mark_a)},
                       {"mark_b", triple_to_json(m.mark_b)},
                       {"ell", triple_to_json(m.ell)},
                       {"generator",
                        {{"M", matrix_to_json(m.gen.M)},
                         {"scale", integer_to_json(m.gen.scale)},
                         {"lambda", rational_to_json(m.gen.lambda)},
                         {"kind", m.gen.kind}}},
                       {"seed", triple_to_json(m.seed)},
                       {"points", pts},
                       {"rejected", m.rejected}});
  }
  return {{"lines", lines}, {"base_points", base}, {"W", primes_to_json(r.W)}, {"members", members},
          {"total_points", r.total_points()}, {"log", r.log}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  if (path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace sintpts
