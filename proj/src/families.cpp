#include "sintpts/families.hpp"

#include <algorithm>

#include "sintpts/upoly.hpp"

namespace sintpts {

std::pair<Integer, Integer> pell_fundamental(const Integer& D) {
  if (D < 2 || is_square(D)) throw DomainError("pell_fundamental needs a non-square D >= 2");
  Integer a0 = isqrt(D);
  Integer m = 0, d = 1, a = a0;
  Integer h1 = 1, h2 = 0, k1 = 0, k2 = 1;  // convergent recurrences
  for (;;) {
    Integer h = a * h1 + h2, k = a * k1 + k2;
    if (h * h - D * k * k == 1) return {h, k};
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
    m = d * a - m;
    d = (D - m * m) / d;
    a = (a0 + m) / d;
  }
}

Integer det3(const IMatrix& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

IMatrix adj3(const IMatrix& m) {
  IMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int a = (j + 1) % 3, b = (j + 2) % 3, c = (i + 1) % 3, d = (i + 2) % 3;
      r[i][j] = m[a][c] * m[b][d] - m[a][d] * m[b][c];
    }
  return r;
}

IMatrix mul3(const IMatrix& a, const IMatrix& b) {
  IMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      r[i][j] = 0;
      for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

IMatrix transpose3(const IMatrix& m) {
  IMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = m[j][i];
  return r;
}

Triple apply3(const IMatrix& m, const Triple& v) {
  Triple r;
  for (int i = 0; i < 3; ++i) r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
  return r;
}

Triple cross3(const Triple& a, const Triple& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Integer dot3(const Triple& a, const Triple& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Integer quad_form(const IMatrix& Q, const Triple& a, const Triple& b) { return dot3(a, apply3(Q, b)); }

Triple primitive3(const Triple& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) return v;
  int sign = 0;
  for (int i = 0; i < 3 && sign == 0; ++i) sign = sgn(v[i]);
  Triple r;
  for (int i = 0; i < 3; ++i) r[i] = v[i] / g * sign;
  return r;
}

IMatrix primitive_matrix(const IMatrix& m, Integer* content) {
  Integer g = 0;
  int sign = 0;
  for (const auto& row : m)
    for (const auto& x : row) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (sign == 0) sign = sgn(x);
    }
  if (content) *content = g;
  if (g == 0) return m;
  IMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = m[i][j] / g * sign;
  return r;
}

Integer height3(const Triple& v) {
  Integer h = 0;
  for (const auto& x : v)
    if (abs(x) > h) h = abs(x);
  return h;
}

void ConicWithMarks::validate() const {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (Q[i][j] != Q[j][i]) throw ValidationError("conic matrix must be symmetric");
  if (det3(Q) == 0) throw DomainError("degenerate conic");
  if (ell[0] == 0 && ell[1] == 0 && ell[2] == 0) throw ValidationError("marking line is zero");
}

namespace {

bool lex_greater(const IMatrix& a, const IMatrix& b) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (a[i][j] != b[i][j]) return a[i][j] > b[i][j];
  return false;
}

IMatrix from_columns(const Triple& a, const Triple& b, const Triple& c) {
  IMatrix m;
  for (int i = 0; i < 3; ++i) {
    m[i][0] = a[i];
    m[i][1] = b[i];
    m[i][2] = c[i];
  }
  return m;
}

bool is_zero3(const Triple& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

}  // namespace

OrbitGenerator stabilizer_map(const ConicWithMarks& conic, const PrimeSet& S) {
  conic.validate();
  const IMatrix& Q = conic.Q;
  Triple O = apply3(adj3(Q), conic.ell);
  if (dot3(conic.ell, O) == 0) throw UnsupportedError("marking line is tangent: A = B");
  std::vector<Triple> basis;
  for (int k = 0; k < 3 && basis.size() < 2; ++k) {
    Triple e{0, 0, 0};
    e[k] = 1;
    Triple v = primitive3(cross3(conic.ell, e));
    if (is_zero3(v)) continue;
    if (!basis.empty() && is_zero3(cross3(basis[0], v))) continue;
    basis.push_back(v);
  }
  const Triple &e1 = basis[0], &e2 = basis[1];
  Integer alpha = quad_form(Q, e1, e1), beta = 2 * quad_form(Q, e1, e2), gamma = quad_form(Q, e2, e2);
  Integer disc = beta * beta - 4 * alpha * gamma;
  if (disc < 0) throw UnsupportedError("marks form a complex conjugate pair: finite stabilizer over Q");
  if (disc == 0) throw UnsupportedError("marking line is tangent: A = B");

  OrbitGenerator gen;
  IMatrix P, D;
  for (auto& row : D) row = {0, 0, 0};
  Integer mu = 0;
  if (!is_square(disc)) {
    Integer t, u;
    if (disc % 4 == 0) {
      auto [x, y] = pell_fundamental(disc / 4);
      t = 2 * x;
      u = y;
    } else {
      auto [x, y] = pell_fundamental(disc);
      t = 2 * x;
      u = 2 * y;
    }
    P = from_columns(O, e1, e2);
    D[0][0] = 1;
    D[1][1] = (t - beta * u) / 2;
    D[1][2] = -gamma * u;
    D[2][1] = alpha * u;
    D[2][2] = (t + beta * u) / 2;
    gen.kind = "pell";
  } else {
    Integer r = isqrt(disc);
    Triple A, B;
    auto combo = [&](const Integer& s, const Integer& tt) {
      return primitive3({s * e1[0] + tt * e2[0], s * e1[1] + tt * e2[1], s * e1[2] + tt * e2[2]});
    };
    if (alpha != 0) {
      A = combo(-beta + r, 2 * alpha);
      B = combo(-beta - r, 2 * alpha);
    } else {
      A = combo(1, 0);
      B = combo(-gamma, beta);
    }
    mu = S.empty() ? Integer(2) : S.primes().front();
    P = from_columns(O, A, B);
    D[0][0] = mu;
    D[1][1] = mu * mu;
    D[2][2] = 1;
    gen.kind = "split";
  }
  Integer detP = det3(P), content;
  IMatrix M = primitive_matrix(mul3(mul3(P, D), adj3(P)), &content);
  Integer g;
  Integer ad = abs(detP);
  mpz_gcd(g.get_mpz_t(), ad.get_mpz_t(), content.get_mpz_t());
  gen.scale = ad / g;
  IMatrix Minv = primitive_matrix(adj3(M));
  gen.M = lex_greater(Minv, M) ? Minv : M;

  IMatrix T = mul3(mul3(transpose3(gen.M), Q), gen.M);
  bool have = false;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (Q[i][j] == 0) {
        if (T[i][j] != 0) throw std::logic_error("stabilizer does not preserve the conic");
        continue;
      }
      Rational l = make_rational(T[i][j], Q[i][j]);
      if (!have) gen.lambda = l, have = true;
      else if (l != gen.lambda) throw std::logic_error("stabilizer does not preserve the conic");
    }
  std::vector<Integer> added = prime_factors(gen.scale);
  if (mu != 0) added.push_back(mu);
  std::sort(added.begin(), added.end());
  added.erase(std::unique(added.begin(), added.end()), added.end());
  gen.bad_primes_added = PrimeSet(added);
  return gen;
}

bool integral_wrt_marks(const Triple& point, const ConicWithMarks& conic, const PrimeSet& S) {
  if (is_zero3(point)) throw DomainError("zero projective point");
  Triple p = primitive3(point);
  if (quad_form(conic.Q, p, p) != 0) throw DomainError("point is not on the conic");
  Integer l = dot3(conic.ell, p);
  if (l == 0) throw DomainError("point lies on the marking line");
  return strip_s(l, S) == 1;
}

std::vector<Triple> generate_orbit(const ConicWithMarks& conic, const OrbitGenerator& gen,
                                   const Triple& seed, std::size_t count, const PrimeSet& S) {
  PrimeSet W = S.united(gen.bad_primes_added);
  if (!integral_wrt_marks(seed, conic, W)) throw DomainError("seed is not integral with respect to the marks");
  std::vector<Triple> out;
  if (count == 0) return out;
  IMatrix Minv = primitive_matrix(adj3(gen.M));
  Triple cur = primitive3(seed);
  const IMatrix& step =
      height3(primitive3(apply3(Minv, cur))) > height3(primitive3(apply3(gen.M, cur))) ? Minv : gen.M;
  Integer last = height3(cur);
  std::size_t cap = 50 * count + 100;
  for (std::size_t it = 0; it < cap && out.size() < count; ++it) {
    cur = primitive3(apply3(step, cur));
    Integer h = height3(cur);
    if (h <= last) continue;
    if (!integral_wrt_marks(cur, conic, W)) throw std::logic_error("orbit point lost integrality");
    out.push_back(cur);
    last = h;
  }
  if (out.size() < count) throw DomainError("orbit heights stopped increasing");
  return out;
}

const char* to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::fiber: return "fiber";
    case FamilyKind::fixed_u: return "fixed-u";
    case FamilyKind::fixed_v: return "fixed-v";
    case FamilyKind::fixed_ratio: return "fixed-ratio";
    default: return "fixed-pair";
  }
}

bool FamilyDescriptor::member(const Rational& u, const Rational& v, const Rational& t) const {
  switch (kind) {
    case FamilyKind::fiber: return t == *t0;
    case FamilyKind::fixed_u: return u == fixed_value;
    case FamilyKind::fixed_v: return v == fixed_value;
    case FamilyKind::fixed_ratio: return v != 0 && u / v == fixed_value;
    default: return u == fixed_value && v == second_value;
  }
}

namespace {

// True when num/den, after cancellation, is c (t - a)^k for a single a.
bool single_point_function(const UPoly& num, const UPoly& den) {
  if (num.is_zero()) return false;
  UPoly g = gcd(num, den);
  UPoly n = num.divmod(g, nullptr), d = den.divmod(g, nullptr);
  UPoly prod = n * d;
  if (prod.degree() <= 0) return false;
  return squarefree(prod).degree() == 1;
}

bool is_constant_multiple(const UPoly& a, const UPoly& b, Rational* c) {
  if (a.is_zero() || b.is_zero()) return false;
  UPoly r;
  UPoly q = a.divmod(b, &r);
  if (!r.is_zero() || q.degree() != 0) return false;
  *c = q.coeffs()[0];
  return true;
}

UPoly scaled(const UPoly& p, const Rational& c) {
  std::vector<Rational> v = p.coeffs();
  for (auto& x : v) x *= c;
  return UPoly(v);
}

// Constants a, b with h = a f + b g, if they exist.
bool solve_pair(const UPoly& f, const UPoly& g, const UPoly& h, Rational* a, Rational* b) {
  std::size_t n = std::max({f.coeffs().size(), g.coeffs().size(), h.coeffs().size()});
  auto at = [](const UPoly& p, std::size_t k) {
    return k < p.coeffs().size() ? p.coeffs()[k] : Rational(0);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational det = at(f, i) * at(g, j) - at(f, j) * at(g, i);
      if (det == 0) continue;
      *a = (at(h, i) * at(g, j) - at(h, j) * at(g, i)) / det;
      *b = (at(f, i) * at(h, j) - at(f, j) * at(h, i)) / det;
      for (std::size_t k = 0; k < n; ++k)
        if (*a * at(f, k) + *b * at(g, k) != at(h, k)) return false;
      return true;
    }
  return false;
}

}  // namespace

FamilyCatalog sunit_catalog(const ParametricUnitProblem& problem) {
  problem.validate();
  const PrimeSet& S = problem.S;
  UPoly f = UPoly::from_multi(problem.f, 0), g = UPoly::from_multi(problem.g, 0),
        h = UPoly::from_multi(problem.h, 0);
  FamilyCatalog cat;
  auto push = [&](FamilyDescriptor d, const std::string& id) {
    d.id = id;
    cat.families.push_back(std::move(d));
  };
  if (f.degree() >= 1) {
    for (const Rational& t0 : rational_roots(f)) {
      FamilyDescriptor d;
      d.t0 = t0;
      d.fixed = "v";
      d.fixed_value = h.eval(t0) / g.eval(t0);
      d.nonempty = is_s_unit(d.fixed_value, S);
      push(d, "fiber[t0=" + t0.get_str() + ",v=" + d.fixed_value.get_str() + "]");
    }
    for (const Rational& t0 : rational_roots(g)) {
      FamilyDescriptor d;
      d.t0 = t0;
      d.fixed = "u";
      d.fixed_value = h.eval(t0) / f.eval(t0);
      d.nonempty = is_s_unit(d.fixed_value, S);
      push(d, "fiber[t0=" + t0.get_str() + ",u=" + d.fixed_value.get_str() + "]");
    }
    for (const Rational& t0 : rational_roots(h)) {
      FamilyDescriptor d;
      d.t0 = t0;
      d.fixed = "ratio";
      d.fixed_value = -g.eval(t0) / f.eval(t0);
      d.nonempty = is_s_unit(d.fixed_value, S);
      push(d, "fiber[t0=" + t0.get_str() + ",u/v=" + d.fixed_value.get_str() + "]");
    }
    Rational u0 = h.lead() / f.lead(), v0 = h.lead() / g.lead(), lam = -g.lead() / f.lead();
    Rational pa, pb;
    if (solve_pair(f, g, h, &pa, &pb)) {
      FamilyDescriptor d;
      d.kind = FamilyKind::fixed_pair;
      d.fixed = "pair";
      d.fixed_value = pa;
      d.second_value = pb;
      d.nonempty = is_s_unit(pa, S) && is_s_unit(pb, S);
      push(d, "fixed-pair[u=" + pa.get_str() + ",v=" + pb.get_str() + "]");
    }
    UPoly hu = h - scaled(f, u0);
    Rational dummy;
    if (!is_constant_multiple(hu, g, &dummy) && single_point_function(hu, g)) {
      FamilyDescriptor d;
      d.kind = FamilyKind::fixed_u;
      d.fixed = "u";
      d.fixed_value = u0;
      d.nonempty = is_s_unit(u0, S);
      push(d, "fixed-u[" + u0.get_str() + "]");
    }
    UPoly hv = h - scaled(g, v0);
    if (!is_constant_multiple(hv, f, &dummy) && single_point_function(hv, f)) {
      FamilyDescriptor d;
      d.kind = FamilyKind::fixed_v;
      d.fixed = "v";
      d.fixed_value = v0;
      d.nonempty = is_s_unit(v0, S);
      push(d, "fixed-v[" + v0.get_str() + "]");
    }
    UPoly lf = scaled(f, lam) - scaled(g, Rational(-1));
    if (!lf.is_zero() && single_point_function(h, lf)) {
      FamilyDescriptor d;
      d.kind = FamilyKind::fixed_ratio;
      d.fixed = "ratio";
      d.fixed_value = lam;
      d.nonempty = is_s_unit(lam, S);
      push(d, "fixed-ratio[" + lam.get_str() + "]");
    }
  }
  return cat;
}

std::string classify_solution(const FamilyCatalog& catalog, const ParametricUnitProblem& problem,
                              const Rational& u, const Rational& v, const Rational& t) {
  if (!holds_sunit(problem, u, v, t)) throw DomainError("classify_solution: not a solution");
  for (const auto& fam : catalog.families)
    if (fam.member(u, v, t)) return fam.id;
  return "sporadic";
}

PhiReport phi_report(const FamilyCatalog& catalog, const ParametricUnitProblem& problem,
                     const SolutionSet& solutions) {
  PhiReport rep;
  for (const auto& rec : solutions.records) {
    const auto& p = rec.point;
    std::string id = classify_solution(catalog, problem, p[0], p[1], p[2]);
    ++rep.counts[id];
    ++rep.total;
    if (id == "sporadic") {
      ++rep.sporadic;
      rep.phi.insert(p[0]);
      rep.phi.insert(p[1]);
      rep.phi.insert(p[0] / p[1]);
    }
  }
  return rep;
}

}  // namespace sintpts
