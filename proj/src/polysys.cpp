#include "sintpts/polysys.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "sintpts/upoly.hpp"

namespace sintpts {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::verified: return "verified";
    case Verdict::violated: return "violated";
    default: return "inconclusive";
  }
}

bool GeneralPositionReport::all_verified() const {
  return std::all_of(results.begin(), results.end(),
                     [](const ConditionResult& r) { return r.verdict == Verdict::verified; });
}

bool GeneralPositionReport::any_violated() const {
  return std::any_of(results.begin(), results.end(),
                     [](const ConditionResult& r) { return r.verdict == Verdict::violated; });
}

Rational eval(const MultiPoly& p, const std::vector<Rational>& point) { return p.eval(point); }

MultiPoly leading_form(const MultiPoly& p) { return p.leading_form(); }

PrimeSet primes_of(const std::vector<Rational>& values) {
  std::set<Integer> ps;
  for (const Rational& v : values) {
    if (v == 0) continue;
    for (const Integer& p : prime_factors(v.get_num())) ps.insert(p);
    for (const Integer& p : prime_factors(v.get_den())) ps.insert(p);
  }
  return PrimeSet(std::vector<Integer>(ps.begin(), ps.end()));
}

namespace {

std::vector<Rational> coefficient_denominators(const MultiPoly& p) {
  std::vector<Rational> out;
  for (const auto& [m, c] : p.terms())
    if (c.get_den() != 1) out.emplace_back(c.get_den());
  return out;
}

bool has_common_factor(const MultiPoly& p, const MultiPoly& q) {
  for (unsigned var = 0; var < 2; ++var) {
    if (p.degree_in(var) > 0 || q.degree_in(var) > 0) {
      if (resultant(p, q, var).is_zero()) return true;
    }
  }
  // Both constant in every variable that occurs in either: univariate or constant.
  return false;
}

// Change of variables (x, y) -> (x + k y, y) when eliminating y, or
// (x, y) -> (x, y + k x) when eliminating x. Common zeros correspond bijectively.
MultiPoly shear(const MultiPoly& p, unsigned var, long k) {
  if (k == 0) return p;
  unsigned other = 1 - var;
  MultiPoly repl = MultiPoly::variable(2, other) + MultiPoly::variable(2, var) * Rational(k);
  return p.substitute(other, repl);
}

struct Attempt {
  bool verified = false;
  bool zero_resultant = false;
  std::vector<Rational> certificates;
};

// Elimination of var from {a, b_1, ...}: projections of common zeros lie in
// the zero set of gcd_k Res_var(a, b_k). A constant gcd proves emptiness.
Attempt eliminate(const MultiPoly& a, const std::vector<MultiPoly>& rest, unsigned var) {
  Attempt at;
  unsigned other = 1 - var;
  std::vector<UPoly> rs;
  for (const MultiPoly& b : rest) {
    MultiPoly r = resultant(a, b, var);
    if (r.is_zero()) {
      at.zero_resultant = true;
      return at;
    }
    rs.push_back(UPoly::from_multi(r, other));
  }
  UPoly g = rs.front();
  for (std::size_t i = 1; i < rs.size(); ++i) g = gcd(g, rs[i]);
  if (g.degree() > 0) return at;
  at.verified = true;
  auto lc_const = [&](const MultiPoly& p) {
    auto cs = p.coeffs_in(var);
    return cs.back().leading_term().second;
  };
  at.certificates.push_back(lc_const(a));
  for (const MultiPoly& b : rest) at.certificates.push_back(lc_const(b));
  for (const UPoly& r : rs) at.certificates.push_back(r.lead());
  for (std::size_t i = 1; i < rs.size(); ++i) {
    MultiPoly r0(2), ri(2);
    for (std::size_t k = 0; k < rs[0].coeffs().size(); ++k) {
      Monomial m(2, 0);
      m[other] = static_cast<unsigned>(k);
      r0.add_term(m, rs[0].coeffs()[k]);
    }
    for (std::size_t k = 0; k < rs[i].coeffs().size(); ++k) {
      Monomial m(2, 0);
      m[other] = static_cast<unsigned>(k);
      ri.add_term(m, rs[i].coeffs()[k]);
    }
    MultiPoly c = resultant(r0, ri, other);
    at.certificates.push_back(c.coefficient(Monomial(2, 0)));
  }
  if (rs.size() == 1) at.certificates.push_back(rs[0].coeffs().front());
  return at;
}

struct NoCommonZero {
  Verdict verdict = Verdict::inconclusive;
  std::vector<Rational> certificates;
  std::string detail;
};

// Decides whether the bivariate polynomials have a common zero over the
// algebraic closure of Q. Zero polynomials impose nothing and are dropped.
NoCommonZero no_common_zero(std::vector<MultiPoly> polys, bool projective_chart) {
  NoCommonZero out;
  polys.erase(std::remove_if(polys.begin(), polys.end(),
                             [](const MultiPoly& p) { return p.is_zero(); }),
              polys.end());
  for (const MultiPoly& p : polys) {
    if (p.is_constant()) {
      out.verdict = Verdict::verified;
      out.certificates = {p.coefficient(Monomial(2, 0))};
      out.detail = "a nonzero constant is among the equations";
      return out;
    }
  }
  if (polys.size() < 2) {
    out.verdict = Verdict::violated;
    out.detail = "fewer than two nontrivial equations: a curve has points";
    return out;
  }
  bool best_found = false;
  std::size_t best_primes = 0;
  bool saw_zero = false;
  for (std::size_t role = 0; role < polys.size(); ++role) {
    for (unsigned var : {1u, 0u}) {
      for (long k : {0L, 1L, -1L, 2L}) {
        MultiPoly a = shear(polys[role], var, k);
        if (a.degree_in(var) <= 0) continue;
        std::vector<MultiPoly> rest;
        for (std::size_t j = 0; j < polys.size(); ++j)
          if (j != role) rest.push_back(shear(polys[j], var, k));
        Attempt at = eliminate(a, rest, var);
        if (at.zero_resultant) saw_zero = true;
        if (!at.verified) continue;
        std::size_t np = primes_of(at.certificates).size();
        if (!best_found || np < best_primes) {
          best_found = true;
          best_primes = np;
          out.certificates = at.certificates;
        }
      }
    }
  }
  if (best_found) {
    out.verdict = Verdict::verified;
    out.detail = "resultant chain has constant gcd";
    return out;
  }
  // Look for a rational witness.
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (std::size_t j = i + 1; j < polys.size(); ++j) {
      if (has_common_factor(polys[i], polys[j])) {
        if (projective_chart || polys.size() == 2) {
          out.verdict = Verdict::violated;
          out.detail = "two equations share a common component";
          return out;
        }
        continue;
      }
      AffineZeros z = common_affine_zeros(polys[i], polys[j]);
      for (const auto& [x, y] : z.points) {
        bool all = true;
        for (const MultiPoly& p : polys) all = all && p.eval({x, y}) == 0;
        if (all) {
          out.verdict = Verdict::violated;
          out.detail = "common rational zero (" + x.get_str() + ", " + y.get_str() + ")";
          return out;
        }
      }
    }
  }
  out.detail = saw_zero ? "identically vanishing resultant; no rational witness"
                        : "no elimination certificate and no rational witness";
  return out;
}

MultiPoly jacobian(const MultiPoly& f, const MultiPoly& g) {
  return f.derivative(0) * g.derivative(1) - f.derivative(1) * g.derivative(0);
}

// Transversality of f and g: no common zero of {f, g, J(f, g)}.
NoCommonZero transversal(const MultiPoly& f, const MultiPoly& g, bool projective_chart) {
  if (f.is_constant() || g.is_constant()) {
    NoCommonZero out;
    MultiPoly c = f.is_constant() ? f : g;
    if (c.is_zero()) {
      out.verdict = Verdict::inconclusive;
      out.detail = "zero polynomial";
    } else {
      out.verdict = Verdict::verified;
      out.detail = "constant polynomial: no intersection";
      out.certificates = {c.coefficient(Monomial(2, 0))};
    }
    return out;
  }
  if (has_common_factor(f, g)) {
    NoCommonZero out;
    out.verdict = Verdict::violated;
    out.detail = "curves share a common component";
    return out;
  }
  NoCommonZero out = no_common_zero({f, g, jacobian(f, g)}, projective_chart);
  if (out.verdict == Verdict::inconclusive) {
    AffineZeros z = common_affine_zeros(f, g);
    MultiPoly J = jacobian(f, g);
    for (const auto& [x, y] : z.points) {
      if (J.eval({x, y}) == 0) {
        out.verdict = Verdict::violated;
        out.detail = "tangency at (" + x.get_str() + ", " + y.get_str() + ")";
        return out;
      }
    }
  }
  return out;
}

std::string name(const char* base, std::size_t i) { return base + std::to_string(i + 1); }

bool repeated_factor(const MultiPoly& form) {
  if (form.degree() <= 1) return false;
  // x^2 | form
  bool x2 = true;
  for (const auto& [m, c] : form.terms()) x2 = x2 && m[0] >= 2;
  if (x2) return true;
  UPoly u = UPoly::from_multi(form.eval_var(0, 1), 1);
  return gcd(u, u.derivative()).degree() > 0;
}

}  // namespace

Rational binary_form_resultant(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  int da = a.degree(), db = b.degree();
  auto coeffs = [](const MultiPoly& p, int d) {
    // Coefficient of x^(d-k) y^k stored at index k.
    std::vector<Rational> c(d + 1);
    for (const auto& [m, v] : p.terms()) c[m[1]] = v;
    return c;
  };
  auto ca = coeffs(a, da), cb = coeffs(b, db);
  std::size_t n = da + db;
  if (n == 0) return 1;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (int r = 0; r < db; ++r)
    for (int k = 0; k <= da; ++k) m[r][r + k] = ca[da - k];
  for (int r = 0; r < da; ++r)
    for (int k = 0; k <= db; ++k) m[db + r][r + k] = cb[db - k];
  return determinant(m);
}

AffineZeros common_affine_zeros(const MultiPoly& p, const MultiPoly& q) {
  if (p.nvars() != 2 || q.nvars() != 2) throw ValidationError("common_affine_zeros needs 2 variables");
  if (p.is_zero() || q.is_zero() || has_common_factor(p, q))
    throw DomainError("positive-dimensional intersection: common factor");
  // Univariate-in-x on both sides without common factor and no y: still
  // decided by the x-resultant below.
  AffineZeros out;
  MultiPoly r = resultant(p, q, 1);
  if (p.degree_in(1) <= 0 && q.degree_in(1) <= 0) {
    // Neither involves y: any common zero would give a whole vertical line.
    UPoly a = UPoly::from_multi(p, 0), b = UPoly::from_multi(q, 0);
    if (gcd(a, b).degree() > 0) throw DomainError("positive-dimensional intersection: common factor");
    out.bound = 0;
    return out;
  }
  UPoly ru = UPoly::from_multi(r, 0);
  out.bound = ru.degree() <= 0 ? 0 : squarefree(ru).degree();
  if (ru.degree() <= 0) return out;
  for (const Rational& x0 : rational_roots(ru)) {
    UPoly a = UPoly::from_multi(p.eval_var(0, x0), 1);
    UPoly b = UPoly::from_multi(q.eval_var(0, x0), 1);
    UPoly g = a.is_zero() ? b.monic() : b.is_zero() ? a.monic() : gcd(a, b);
    if (g.is_zero() || g.degree() <= 0) continue;
    for (const Rational& y0 : rational_roots(g)) out.points.emplace_back(x0, y0);
  }
  std::sort(out.points.begin(), out.points.end());
  return out;
}

void DivisibilityProblem::validate() const {
  if (pairs.empty()) throw ValidationError("divisibility problem needs at least one pair");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [f, g] = pairs[i];
    if (f.nvars() != 2 || g.nvars() != 2)
      throw ValidationError("pair " + std::to_string(i + 1) + ": polynomials must be in 2 variables");
    if (f.is_zero()) throw ValidationError("pair " + std::to_string(i + 1) + ": f is zero");
    if (f.degree() < std::max(1, g.degree()))
      throw ValidationError("pair " + std::to_string(i + 1) + ": deg f < max(1, deg g)");
  }
}

void FormsProblem::validate() const {
  if (F.empty()) throw ValidationError("forms problem needs at least one form");
  if (G.nvars() != 3 || G.is_zero() || !G.is_homogeneous())
    throw ValidationError("G must be a nonzero form in 3 variables");
  int d = -2;
  for (std::size_t i = 0; i < F.size(); ++i) {
    const MultiPoly& f = F[i];
    if (f.nvars() != 3 || f.is_zero() || !f.is_homogeneous())
      throw ValidationError("F" + std::to_string(i + 1) + " must be a nonzero form in 3 variables");
    if (d != -2 && f.degree() != d) throw ValidationError("forms F_i must share one degree");
    d = f.degree();
  }
  if (d < G.degree()) throw ValidationError("deg F_i < deg G");
}

void NGonProblem::validate() const {
  if (forms.size() < 3) throw ValidationError("n-gon needs at least 3 forms");
  for (std::size_t a = 0; a < forms.size(); ++a)
    for (std::size_t b = a + 1; b < forms.size(); ++b)
      for (std::size_t c = b + 1; c < forms.size(); ++c) {
        std::vector<std::vector<Rational>> m;
        for (std::size_t k : {a, b, c})
          m.push_back({Rational(forms[k][0]), Rational(forms[k][1]), Rational(forms[k][2])});
        if (determinant(m) == 0)
          throw ValidationError("forms " + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                                "," + std::to_string(c + 1) + " are linearly dependent");
      }
}

Integer NGonProblem::value(std::size_t i, const Triple& p) const {
  const Triple& f = forms[i];
  return f[0] * p[0] + f[1] * p[1] + f[2] * p[2];
}

void ParametricUnitProblem::validate() const {
  for (const MultiPoly* p : {&f, &g, &h})
    if (p->nvars() != 1 || p->is_zero()) throw ValidationError("f, g, h must be nonzero in one variable");
  if (f.degree() != g.degree() || g.degree() != h.degree())
    throw ValidationError("f, g, h must share one degree");
  UPoly uf = UPoly::from_multi(f, 0), ug = UPoly::from_multi(g, 0), uh = UPoly::from_multi(h, 0);
  if (gcd(uf, ug).degree() > 0 || gcd(uf, uh).degree() > 0 || gcd(ug, uh).degree() > 0)
    throw ValidationError("f, g, h must be pairwise coprime");
}

GeneralPositionReport check_general_position_div(const DivisibilityProblem& problem) {
  problem.validate();
  GeneralPositionReport rep;
  const auto& P = problem.pairs;
  std::size_t m = P.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (repeated_factor(P[i].first.leading_form()))
      rep.notes.push_back(name("f", i) + " has a repeated factor in its leading form");
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      ConditionResult c;
    c.condition = "infinity";
    c.subject = name("f", i) + "," + name("f", j);
      Rational r = binary_form_resultant(P[i].first.leading_form(), P[j].first.leading_form());
      if (r == 0) {
        c.verdict = Verdict::violated;
        c.detail = "leading forms share a zero at infinity";
      } else {
        c.verdict = Verdict::verified;
        c.detail = "leading-form resultant " + r.get_str();
        c.certificates = {r};
      }
      rep.results.push_back(std::move(c));
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t h = j + 1; h < m; ++h) {
        ConditionResult c;
    c.condition = "triple";
    c.subject = name("f", i) + "," + name("f", j) + "," + name("f", h);
        NoCommonZero z = no_common_zero({P[i].first, P[j].first, P[h].first}, false);
        c.verdict = z.verdict;
        c.detail = z.detail;
        c.certificates = z.certificates;
        rep.results.push_back(std::move(c));
      }
  for (std::size_t i = 0; i < m; ++i) {
    ConditionResult c;
    c.condition = "transversal";
    c.subject = name("f", i) + "," + name("g", i);
    NoCommonZero z = transversal(P[i].first, P[i].second, false);
    c.verdict = z.verdict;
    c.detail = z.detail;
    c.certificates = z.certificates;
    rep.results.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t h : {i, j}) {
        ConditionResult c;
    c.condition = "mixed-triple";
    c.subject = name("f", i) + "," + name("f", j) + "," + name("g", h);
        const MultiPoly& g = P[h].second;
        if (g.is_constant() && !g.is_zero()) {
          c.verdict = Verdict::verified;
          c.detail = "g is a nonzero constant";
        } else {
          NoCommonZero z = no_common_zero({P[i].first, P[j].first, g}, false);
          c.verdict = z.verdict;
          c.detail = z.detail;
          c.certificates = z.certificates;
        }
        rep.results.push_back(std::move(c));
      }
  return rep;
}

namespace {

// Affine charts of P^2: z = 1 in (x, y); y = 1 in (x, z) mapped to (x, y).
MultiPoly chart_z(const MultiPoly& F) {
  return F.eval_var(2, 1).with_nvars(2);
}

MultiPoly chart_y(const MultiPoly& F) {
  MultiPoly r(2);
  for (const auto& [m, c] : F.terms()) r.add_term({m[0], m[2]}, c);
  return r;
}

MultiPoly chart_x(const MultiPoly& F) {
  MultiPoly r(2);
  for (const auto& [m, c] : F.terms()) r.add_term({m[1], m[2]}, c);
  return r;
}

void merge(NoCommonZero& acc, const NoCommonZero& part, const std::string& chart) {
  for (const Rational& c : part.certificates) acc.certificates.push_back(c);
  if (part.verdict == Verdict::violated) {
    acc.verdict = Verdict::violated;
    acc.detail = chart + ": " + part.detail;
  } else if (part.verdict == Verdict::inconclusive && acc.verdict != Verdict::violated) {
    acc.verdict = Verdict::inconclusive;
    acc.detail = chart + ": " + part.detail;
  }
}

}  // namespace

GeneralPositionReport check_general_position_forms(const FormsProblem& problem) {
  problem.validate();
  GeneralPositionReport rep;
  const auto& F = problem.F;
  const MultiPoly& G = problem.G;
  for (std::size_t i = 0; i < F.size(); ++i) {
    ConditionResult c;
    c.condition = "transversal";
    c.subject = name("F", i) + ",G";
    NoCommonZero acc;
    acc.verdict = Verdict::verified;
    acc.detail = "transversal in both charts and at (1:0:0)";
    merge(acc, transversal(chart_z(F[i]), chart_z(G), true), "chart z=1");
    merge(acc, transversal(chart_y(F[i]), chart_y(G), true), "chart y=1");
    MultiPoly fx = chart_x(F[i]), gx = chart_x(G);
    if (fx.eval({0, 0}) == 0 && gx.eval({0, 0}) == 0 && jacobian(fx, gx).eval({0, 0}) == 0) {
      acc.verdict = Verdict::violated;
      acc.detail = "non-transversal intersection at (1:0:0)";
    }
    c.verdict = acc.verdict;
    c.detail = acc.detail;
    c.certificates = acc.certificates;
    rep.results.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < F.size(); ++i)
    for (std::size_t j = i + 1; j < F.size(); ++j)
      for (std::size_t k = j + 1; k < F.size(); ++k) {
        ConditionResult c;
    c.condition = "triple";
    c.subject = name("F", i) + "," + name("F", j) + "," + name("F", k);
        NoCommonZero acc;
        acc.verdict = Verdict::verified;
        acc.detail = "no common zero in P^2";
        merge(acc, no_common_zero({chart_z(F[i]), chart_z(F[j]), chart_z(F[k])}, true), "chart z=1");
        merge(acc, no_common_zero({chart_y(F[i]), chart_y(F[j]), chart_y(F[k])}, true), "chart y=1");
        RTriple e{1, 0, 0};
        std::vector<Rational> pt(e.begin(), e.end());
        if (F[i].eval(pt) == 0 && F[j].eval(pt) == 0 && F[k].eval(pt) == 0) {
          acc.verdict = Verdict::violated;
          acc.detail = "common zero (1:0:0)";
        }
        c.verdict = acc.verdict;
        c.detail = acc.detail;
        c.certificates = acc.certificates;
        rep.results.push_back(std::move(c));
      }
  return rep;
}

namespace {

PrimeSet primes_from_report(const GeneralPositionReport& rep, std::vector<Rational> extra) {
  if (rep.any_violated()) throw DomainError("general position fails over Q");
  for (const auto& r : rep.results)
    for (const auto& c : r.certificates) extra.push_back(c);
  return primes_of(extra);
}

}  // namespace

PrimeSet bad_primes(const DivisibilityProblem& problem) {
  std::vector<Rational> extra;
  for (const auto& [f, g] : problem.pairs) {
    for (auto& d : coefficient_denominators(f)) extra.push_back(d);
    for (auto& d : coefficient_denominators(g)) extra.push_back(d);
  }
  return primes_from_report(check_general_position_div(problem), extra);
}

PrimeSet bad_primes(const FormsProblem& problem) {
  std::vector<Rational> extra = coefficient_denominators(problem.G);
  for (const auto& f : problem.F)
    for (auto& d : coefficient_denominators(f)) extra.push_back(d);
  return primes_from_report(check_general_position_forms(problem), extra);
}

PrimeSet bad_primes(const NGonProblem& problem) {
  problem.validate();
  std::vector<Rational> dets;
  const auto& F = problem.forms;
  for (std::size_t a = 0; a < F.size(); ++a)
    for (std::size_t b = a + 1; b < F.size(); ++b)
      for (std::size_t c = b + 1; c < F.size(); ++c) {
        std::vector<std::vector<Rational>> m;
        for (std::size_t k : {a, b, c}) m.push_back({Rational(F[k][0]), Rational(F[k][1]), Rational(F[k][2])});
        dets.push_back(determinant(m));
      }
  return primes_of(dets);
}

PrimeSet bad_primes(const ParametricUnitProblem& problem) {
  problem.validate();
  std::vector<Rational> vals;
  const MultiPoly* ps[3] = {&problem.f, &problem.g, &problem.h};
  for (int i = 0; i < 3; ++i) {
    vals.push_back(ps[i]->leading_term().second);
    for (auto& d : coefficient_denominators(*ps[i])) vals.push_back(d);
    for (int j = i + 1; j < 3; ++j) {
      MultiPoly r = resultant(*ps[i], *ps[j], 0);
      vals.push_back(r.coefficient(Monomial(1, 0)));
    }
  }
  return primes_of(vals);
}

bool holds_div(const DivisibilityProblem& problem, const Rational& x, const Rational& y) {
  if (!is_s_integral(x, problem.S) || !is_s_integral(y, problem.S))
    throw DomainError("holds_div: point is not S-integral");
  for (const auto& [f, g] : problem.pairs) {
    Rational fv = f.eval({x, y});
    if (fv == 0) return false;
    if (!divides(fv, g.eval({x, y}), problem.S)) return false;
  }
  return true;
}

Triple normalize_projective(const RTriple& t) {
  if (t[0] == 0 && t[1] == 0 && t[2] == 0) throw DomainError("zero projective triple");
  Integer den = 1, g = 0;
  for (const auto& v : t) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  Triple out;
  for (int i = 0; i < 3; ++i) {
    out[i] = t[i].get_num() * (den / t[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  int sign = 0;
  for (int i = 0; i < 3 && sign == 0; ++i) sign = sgn(out[i]);
  for (auto& v : out) v = v / g * sign;
  return out;
}

bool holds_forms(const FormsProblem& problem, const RTriple& t) {
  Triple n = normalize_projective(t);
  std::vector<Rational> pt{Rational(n[0]), Rational(n[1]), Rational(n[2])};
  Rational gv = problem.G.eval(pt);
  for (const auto& F : problem.F) {
    Rational fv = F.eval(pt);
    if (fv == 0) return false;
    if (!divides(fv, gv, problem.S)) return false;
  }
  return true;
}

namespace {

// Throws if a prime outside S divides three of the values.
void check_coprimality(const NGonProblem& problem, const std::vector<Integer>& vals) {
  std::size_t n = vals.size();
  std::optional<Integer> worst;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Integer gab;
      mpz_gcd(gab.get_mpz_t(), vals[a].get_mpz_t(), vals[b].get_mpz_t());
      gab = strip_s(gab, problem.S);
      if (gab == 1) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), gab.get_mpz_t(), vals[c].get_mpz_t());
        if (g == 1) continue;
        Integer p = prime_factors(g).front();
        if (!worst || p < *worst) worst = p;
      }
    }
  if (worst)
    throw DomainError("prime " + worst->get_str() +
                      " outside S divides three form values; enlarge S");
}

std::vector<Integer> ngon_values(const NGonProblem& problem, const Triple& t) {
  std::vector<Integer> vals;
  for (std::size_t i = 0; i < problem.forms.size(); ++i) vals.push_back(problem.value(i, t));
  return vals;
}

}  // namespace

BetaDecomposition beta_decompose(const NGonProblem& problem, const Triple& t) {
  Triple p = normalize_projective({Rational(t[0]), Rational(t[1]), Rational(t[2])});
  BetaDecomposition out;
  out.values = ngon_values(problem, p);
  std::size_t n = out.values.size();
  for (std::size_t i = 0; i < n; ++i)
    if (out.values[i] == 0) throw DomainError("form F" + std::to_string(i + 1) + " vanishes at the point");
  check_coprimality(problem, out.values);
  for (std::size_t i = 0; i < n; ++i)
    out.beta.push_back(s_gcd(Rational(out.values[i]), Rational(out.values[(i + n - 1) % n]), problem.S));
  for (std::size_t i = 0; i < n; ++i)
    out.alpha.push_back(Rational(out.values[i]) / Rational(out.beta[i] * out.beta[(i + 1) % n]));
  return out;
}

bool holds_ngon(const NGonProblem& problem, const Triple& t) {
  Triple p = normalize_projective({Rational(t[0]), Rational(t[1]), Rational(t[2])});
  for (std::size_t i = 0; i < problem.forms.size(); ++i)
    if (problem.value(i, p) == 0) return false;
  BetaDecomposition b = beta_decompose(problem, p);
  for (const Rational& a : b.alpha)
    if (!is_s_unit(a, problem.S)) return false;
  return true;
}

bool holds_ngon_ideal(const NGonProblem& problem, const Triple& t) {
  Triple p = normalize_projective({Rational(t[0]), Rational(t[1]), Rational(t[2])});
  std::vector<Integer> vals = ngon_values(problem, p);
  for (const Integer& v : vals)
    if (v == 0) return false;
  check_coprimality(problem, vals);
  std::size_t n = vals.size();
  // F_i (x,y,z) = (F_{i-1}, F_i)(F_i, F_{i+1}) with (x,y,z) = (1): compare generators.
  for (std::size_t i = 0; i < n; ++i) {
    Integer left, right;
    const Integer& prev = vals[(i + n - 1) % n];
    const Integer& next = vals[(i + 1) % n];
    mpz_gcd(left.get_mpz_t(), prev.get_mpz_t(), vals[i].get_mpz_t());
    mpz_gcd(right.get_mpz_t(), vals[i].get_mpz_t(), next.get_mpz_t());
    if (strip_s(vals[i], problem.S) != strip_s(left, problem.S) * strip_s(right, problem.S))
      return false;
  }
  return true;
}

bool holds_sunit(const ParametricUnitProblem& problem, const Rational& u, const Rational& v,
                 const Rational& t) {
  const PrimeSet& S = problem.S;
  if (!is_s_integral(t, S) || !is_s_unit(u, S) || !is_s_unit(v, S)) return false;
  return problem.f.eval({t}) * u + problem.g.eval({t}) * v == problem.h.eval({t});
}

bool blowup_integral(const MultiPoly& phi, const MultiPoly& psi, const std::vector<Rational>& point,
                     const PrimeSet& S) {
  Rational a = phi.eval(point);
  if (a == 0) throw DomainError("blowup_integral: phi vanishes at the point");
  return divides(a, psi.eval(point), S);
}

}  // namespace sintpts
