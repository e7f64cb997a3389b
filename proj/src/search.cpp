#include "sintpts/search.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "sintpts/upoly.hpp"

namespace sintpts {

const PrimeSet& problem_primes(const Problem& problem) {
  return std::visit([](const auto& p) -> const PrimeSet& { return p.S; }, problem);
}

std::string problem_kind(const Problem& problem) {
  switch (problem.index()) {
    case 0: return "divisibility";
    case 1: return "forms";
    case 2: return "ngon";
    default: return "sunit-parametric";
  }
}

namespace {

std::string primes_string(const PrimeSet& S) {
  std::string s;
  for (const auto& p : S.primes()) s += (s.empty() ? "" : ",") + p.get_str();
  return s;
}

}  // namespace

std::string canonical_string(const Problem& problem) {
  std::ostringstream os;
  os << problem_kind(problem) << ";S=" << primes_string(problem_primes(problem));
  if (const auto* d = std::get_if<DivisibilityProblem>(&problem)) {
    for (std::size_t i = 0; i < d->pairs.size(); ++i)
      os << ";f" << i + 1 << "=" << d->pairs[i].first.to_string() << ";g" << i + 1 << "="
         << d->pairs[i].second.to_string();
  } else if (const auto* f = std::get_if<FormsProblem>(&problem)) {
    for (std::size_t i = 0; i < f->F.size(); ++i) os << ";F" << i + 1 << "=" << f->F[i].to_string();
    os << ";G=" << f->G.to_string();
  } else if (const auto* n = std::get_if<NGonProblem>(&problem)) {
    for (const auto& t : n->forms) os << ";[" << t[0] << "," << t[1] << "," << t[2] << "]";
  } else {
    const auto& u = std::get<ParametricUnitProblem>(problem);
    os << ";f=" << u.f.to_string() << ";g=" << u.g.to_string() << ";h=" << u.h.to_string();
  }
  return os.str();
}

std::string fingerprint(const Problem& problem) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : canonical_string(problem)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

const char* to_string(SearchMode m) {
  switch (m) {
    case SearchMode::affine2: return "affine-2";
    case SearchMode::affine3: return "affine-3";
    case SearchMode::projective: return "projective";
    default: return "units";
  }
}

SearchMode search_mode_from_string(const std::string& s) {
  if (s == "affine-2") return SearchMode::affine2;
  if (s == "affine-3") return SearchMode::affine3;
  if (s == "projective") return SearchMode::projective;
  if (s == "units") return SearchMode::units;
  throw ValidationError("unknown search mode: " + s);
}

void SearchDomain::validate() const {
  if (height < 0) throw ValidationError("domain height must be >= 0");
  if (denom_bound < 1) throw ValidationError("domain denominator bound must be >= 1");
  if (mode == SearchMode::units && unit_exponent < 0)
    throw ValidationError("unit exponent bound must be >= 0");
}

std::vector<Rational> axis_values(const PrimeSet& S, const Integer& height, const Integer& denom_bound) {
  std::vector<Rational> out;
  for (const Integer& s : enumerate_smooth(S, denom_bound)) {
    for (Integer a = -height; a <= height; ++a) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), s.get_mpz_t());
      if (g != 1) continue;
      out.push_back(make_rational(a, s));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Rational>> enumerate_affine(const PrimeSet& S, const SearchDomain& domain) {
  domain.validate();
  std::vector<Rational> ax = axis_values(S, domain.height, domain.denom_bound);
  std::vector<std::vector<Rational>> out;
  if (domain.mode == SearchMode::affine3) {
    for (const auto& x : ax)
      for (const auto& y : ax)
        for (const auto& z : ax) out.push_back({x, y, z});
  } else {
    for (const auto& x : ax)
      for (const auto& y : ax) out.push_back({x, y});
  }
  return out;
}

namespace {

void projective_slice(const Integer& H, const Integer& a, std::vector<Triple>& out) {
  for (Integer b = -H; b <= H; ++b) {
    if (a == 0 && b < 0) continue;
    for (Integer c = -H; c <= H; ++c) {
      if (a == 0 && b == 0 && c <= 0) continue;
      Integer g;
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) out.push_back({a, b, c});
    }
  }
}

}  // namespace

std::vector<Triple> enumerate_projective(const Integer& height) {
  if (height < 1) throw ValidationError("projective height must be >= 1");
  std::vector<Triple> out;
  for (Integer a = 0; a <= height; ++a) projective_slice(height, a, out);
  return out;
}

std::vector<Rational> enumerate_units(const PrimeSet& S, long exponent_bound) {
  std::vector<Rational> mags{Rational(1)};
  for (const Integer& p : S.primes()) {
    std::vector<Rational> next;
    for (const Rational& m : mags) {
      Rational up = m, down = m;
      next.push_back(m);
      for (long e = 1; e <= exponent_bound; ++e) {
        up *= p;
        down /= p;
        next.push_back(up);
        next.push_back(down);
      }
    }
    mags = std::move(next);
  }
  std::vector<Rational> out;
  for (const Rational& m : mags) {
    out.push_back(m);
    out.push_back(-m);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void check_mode(const Problem& problem, const SearchDomain& domain) {
  SearchMode m = domain.mode;
  bool ok = false;
  switch (problem.index()) {
    case 0: ok = m == SearchMode::affine2; break;
    case 1: ok = m == SearchMode::projective || m == SearchMode::affine3; break;
    case 2: ok = m == SearchMode::projective; break;
    default: ok = m == SearchMode::units; break;
  }
  if (!ok)
    throw ValidationError(std::string("search mode ") + to_string(m) + " does not fit a " +
                          problem_kind(problem) + " problem");
}

std::vector<Rational> triple_point(const Triple& t) {
  return {Rational(t[0]), Rational(t[1]), Rational(t[2])};
}

// Rational t with P(t) = 0 inside the axis box.
std::vector<Rational> unit_equation_roots(const ParametricUnitProblem& pr, const Rational& u,
                                          const Rational& v, const SearchDomain& dom,
                                          const std::vector<Rational>& axis) {
  MultiPoly P = pr.f * u + pr.g * v - pr.h;
  if (P.is_zero()) return axis;
  UPoly up = UPoly::from_multi(P, 0);
  std::vector<Rational> roots;
  if (up.degree() <= 0) return roots;
  if (up.degree() == 1) roots.push_back(-up.coeffs()[0] / up.coeffs()[1]);
  else roots = rational_roots(up);
  std::vector<Rational> out;
  for (const Rational& t : roots) {
    if (!is_s_integral(t, pr.S)) continue;
    if (abs(t.get_num()) > dom.height || t.get_den() > dom.denom_bound) continue;
    out.push_back(t);
  }
  return out;
}

}  // namespace

std::size_t chunk_count(const Problem& problem, const SearchDomain& domain) {
  domain.validate();
  check_mode(problem, domain);
  const PrimeSet& S = problem_primes(problem);
  switch (domain.mode) {
    case SearchMode::projective:
      return domain.height < 1 ? 0 : domain.height.get_ui() + 1;
    case SearchMode::units: return enumerate_units(S, domain.unit_exponent).size();
    default: return axis_values(S, domain.height, domain.denom_bound).size();
  }
}

PointRecord make_record(const Problem& problem, const std::vector<Rational>& point) {
  PointRecord r;
  r.point = point;
  auto add = [&](const std::string& n, const Rational& v) { r.witnesses.push_back({n, v}); };
  if (const auto* d = std::get_if<DivisibilityProblem>(&problem)) {
    for (std::size_t i = 0; i < d->pairs.size(); ++i) {
      add("f" + std::to_string(i + 1), d->pairs[i].first.eval(point));
      add("g" + std::to_string(i + 1), d->pairs[i].second.eval(point));
    }
  } else if (const auto* f = std::get_if<FormsProblem>(&problem)) {
    for (std::size_t i = 0; i < f->F.size(); ++i) add("F" + std::to_string(i + 1), f->F[i].eval(point));
    add("G", f->G.eval(point));
  } else if (const auto* n = std::get_if<NGonProblem>(&problem)) {
    Triple t{point[0].get_num(), point[1].get_num(), point[2].get_num()};
    BetaDecomposition b = beta_decompose(*n, t);
    for (std::size_t i = 0; i < b.values.size(); ++i) add("F" + std::to_string(i + 1), Rational(b.values[i]));
    for (std::size_t i = 0; i < b.beta.size(); ++i) add("beta" + std::to_string(i + 1), Rational(b.beta[i]));
    for (std::size_t i = 0; i < b.alpha.size(); ++i) add("alpha" + std::to_string(i + 1), b.alpha[i]);
  } else {
    const auto& u = std::get<ParametricUnitProblem>(problem);
    add("f(t)", u.f.eval({point[2]}));
    add("g(t)", u.g.eval({point[2]}));
    add("h(t)", u.h.eval({point[2]}));
  }
  return r;
}

std::vector<PointRecord> run_chunk(const Problem& problem, const SearchDomain& domain, std::size_t chunk) {
  check_mode(problem, domain);
  const PrimeSet& S = problem_primes(problem);
  std::vector<PointRecord> out;
  if (const auto* d = std::get_if<DivisibilityProblem>(&problem)) {
    std::vector<Rational> ax = axis_values(S, domain.height, domain.denom_bound);
    const Rational& x = ax.at(chunk);
    for (const Rational& y : ax)
      if (holds_div(*d, x, y)) out.push_back(make_record(problem, {x, y}));
  } else if (const auto* f = std::get_if<FormsProblem>(&problem)) {
    if (domain.mode == SearchMode::projective) {
      std::vector<Triple> ts;
      projective_slice(domain.height, Integer(chunk), ts);
      for (const Triple& t : ts) {
        auto pt = triple_point(t);
        if (holds_forms(*f, {pt[0], pt[1], pt[2]})) out.push_back(make_record(problem, pt));
      }
    } else {
      std::vector<Rational> ax = axis_values(S, domain.height, domain.denom_bound);
      const Rational& x = ax.at(chunk);
      for (const Rational& y : ax)
        for (const Rational& z : ax) {
          if (x == 0 && y == 0 && z == 0) continue;
          if (!holds_forms(*f, {x, y, z})) continue;
          out.push_back(make_record(problem, triple_point(normalize_projective({x, y, z}))));
        }
    }
  } else if (const auto* n = std::get_if<NGonProblem>(&problem)) {
    std::vector<Triple> ts;
    projective_slice(domain.height, Integer(chunk), ts);
    for (const Triple& t : ts) {
      try {
        if (holds_ngon(*n, t)) out.push_back(make_record(problem, triple_point(t)));
      } catch (const DomainError&) {
        // Coprimality failure with S too small: only reachable under override.
      }
    }
  } else {
    const auto& pr = std::get<ParametricUnitProblem>(problem);
    std::vector<Rational> units = enumerate_units(S, domain.unit_exponent);
    std::vector<Rational> ax = axis_values(S, domain.height, domain.denom_bound);
    const Rational& u = units.at(chunk);
    for (const Rational& v : units)
      for (const Rational& t : unit_equation_roots(pr, u, v, domain, ax))
        if (holds_sunit(pr, u, v, t)) out.push_back(make_record(problem, {u, v, t}));
  }
  return out;
}

void merge_records(std::vector<PointRecord>& records) {
  std::sort(records.begin(), records.end(),
            [](const PointRecord& a, const PointRecord& b) { return a.point < b.point; });
  records.erase(std::unique(records.begin(), records.end(),
                            [](const PointRecord& a, const PointRecord& b) { return a.point == b.point; }),
                records.end());
}

SolutionSet prepare_run(const Problem& problem, const SearchDomain& domain, const RunOptions& opts) {
  domain.validate();
  check_mode(problem, domain);
  SolutionSet out;
  out.fingerprint = fingerprint(problem);
  out.kind = problem_kind(problem);
  out.domain = domain;
  auto fail = [&](const std::string& why) {
    if (!opts.override_validation) throw ValidationError(why);
    out.override_used = true;
    out.notes.push_back("validation overridden: " + why);
  };
  if (const auto* d = std::get_if<DivisibilityProblem>(&problem)) {
    auto rep = check_general_position_div(*d);
    if (!rep.all_verified()) fail("general position not verified");
  } else if (const auto* f = std::get_if<FormsProblem>(&problem)) {
    auto rep = check_general_position_forms(*f);
    if (!rep.all_verified()) fail("general position not verified");
  } else if (const auto* n = std::get_if<NGonProblem>(&problem)) {
    n->validate();
    PrimeSet missing = bad_primes(*n).minus(n->S);
    if (!missing.empty()) fail("S lacks bad primes of the configuration");
  } else {
    std::get<ParametricUnitProblem>(problem).validate();
  }
  out.notes.push_back("height model: numerator bound H and S-smooth denominator bound B");
  return out;
}

SolutionSet run_serial(const Problem& problem, const SearchDomain& domain, const RunOptions& opts) {
  SolutionSet out = prepare_run(problem, domain, opts);
  std::size_t n = chunk_count(problem, domain);
  for (std::size_t c = 0; c < n; ++c) {
    auto part = run_chunk(problem, domain, c);
    out.records.insert(out.records.end(), part.begin(), part.end());
  }
  merge_records(out.records);
  return out;
}

SolutionSet run(const Problem& problem, const SearchDomain& domain, const RunOptions& opts) {
  SolutionSet out = prepare_run(problem, domain, opts);
  std::size_t n = chunk_count(problem, domain);
  std::vector<std::vector<PointRecord>> parts(n);
  int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();
  bool failed = false;
  std::string error;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::size_t c = 0; c < n; ++c) {
    try {
      parts[c] = run_chunk(problem, domain, c);
    } catch (const std::exception& e) {
#pragma omp critical
      {
        failed = true;
        error = e.what();
      }
    }
  }
  if (failed) throw std::runtime_error(error);
  for (auto& p : parts) out.records.insert(out.records.end(), p.begin(), p.end());
  merge_records(out.records);
  return out;
}

bool verify(const Problem& problem, const SolutionSet& solutions) {
  const PrimeSet& S = problem_primes(problem);
  std::vector<std::vector<Rational>> pts;
  for (const auto& r : solutions.records) pts.push_back(r.point);
  std::sort(pts.begin(), pts.end());
  if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) return false;
  try {
    for (const PointRecord& r : solutions.records) {
      if (!(make_record(problem, r.point) == r)) return false;
      const auto& pt = r.point;
      if (const auto* d = std::get_if<DivisibilityProblem>(&problem)) {
        if (pt.size() != 2 || !is_s_integral(pt[0], S) || !is_s_integral(pt[1], S)) return false;
        for (const auto& [f, g] : d->pairs) {
          Rational fv = f.eval(pt);
          if (fv == 0 || !is_s_integral(g.eval(pt) / fv, S)) return false;
        }
      } else if (const auto* f = std::get_if<FormsProblem>(&problem)) {
        if (pt.size() != 3) return false;
        if (triple_point(normalize_projective({pt[0], pt[1], pt[2]})) != pt) return false;
        Rational gv = f->G.eval(pt);
        for (const auto& F : f->F) {
          Rational fv = F.eval(pt);
          if (fv == 0 || !is_s_integral(gv / fv, S)) return false;
        }
      } else if (const auto* n = std::get_if<NGonProblem>(&problem)) {
        if (pt.size() != 3) return false;
        Triple t{pt[0].get_num(), pt[1].get_num(), pt[2].get_num()};
        if (triple_point(normalize_projective({pt[0], pt[1], pt[2]})) != pt) return false;
        if (!holds_ngon_ideal(*n, t)) return false;
      } else {
        if (pt.size() != 3) return false;
        if (!holds_sunit(std::get<ParametricUnitProblem>(problem), pt[0], pt[1], pt[2])) return false;
      }
    }
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

}  // namespace sintpts
