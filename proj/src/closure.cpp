#include "sintpts/closure.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>

namespace sintpts {

std::vector<Monomial> monomials_upto(int d) {
  std::vector<Monomial> out;
  for (int k = 0; k <= d; ++k)
    for (int i = k; i >= 0; --i) out.push_back({static_cast<unsigned>(i), static_cast<unsigned>(k - i)});
  return out;
}

namespace {

Rational power(const Rational& x, unsigned e) {
  Rational r = 1;
  for (unsigned i = 0; i < e; ++i) r *= x;
  return r;
}

// Nullspace of a rational matrix via reduced row echelon form.
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][c];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  std::vector<std::vector<Rational>> basis;
  std::set<std::size_t> piv(pivots.begin(), pivots.end());
  for (std::size_t free = 0; free < cols; ++free) {
    if (piv.count(free)) continue;
    std::vector<Rational> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool on_curve(const MultiPoly& p, const Point2& pt) { return p.eval({pt.first, pt.second}) == 0; }

// Conics must be nondegenerate; higher degrees are screened for rational line factors.
bool acceptable(const MultiPoly& p, int d, const std::vector<Point2>& pts, const std::vector<std::size_t>& support) {
  if (p.degree() != d) return false;
  if (d == 1) return true;
  if (d == 2) {
    Rational a = p.coefficient({2, 0}), b = p.coefficient({1, 1}), c = p.coefficient({0, 2});
    Rational dd = p.coefficient({1, 0}), e = p.coefficient({0, 1}), f = p.coefficient({0, 0});
    std::vector<std::vector<Rational>> m = {{2 * a, b, dd}, {b, 2 * c, e}, {dd, e, 2 * f}};
    return determinant(m) != 0;
  }
  std::size_t cap = std::min<std::size_t>(support.size(), 40);
  for (std::size_t i = 0; i < cap; ++i)
    for (std::size_t j = i + 1; j < cap; ++j) {
      const Point2 &P = pts[support[i]], &Q = pts[support[j]];
      // Parametrize the line P + s (Q - P) and test identical vanishing.
      MultiPoly s = MultiPoly::variable(2, 0);
      MultiPoly x = MultiPoly::constant(2, P.first) + s * (Q.first - P.first);
      MultiPoly y = MultiPoly::constant(2, P.second) + s * (Q.second - P.second);
      MultiPoly r = p.substitute(1, MultiPoly::variable(2, 1));
      MultiPoly sub(2);
      for (const auto& [m, c] : p.terms()) sub += c * x.pow(m[0]) * y.pow(m[1]);
      if (sub.is_zero()) return false;
    }
  return true;
}

struct Candidate {
  MultiPoly poly{2};
  int degree = 0;
  std::vector<std::size_t> support;
};

bool better(const Candidate& a, const Candidate& b) {
  if (a.support.size() != b.support.size()) return a.support.size() > b.support.size();
  if (a.degree != b.degree) return a.degree < b.degree;
  return a.poly < b.poly;
}

std::vector<std::size_t> support_of(const MultiPoly& p, const std::vector<Point2>& pts,
                                    const std::vector<std::size_t>& remaining) {
  std::vector<std::size_t> s;
  for (std::size_t i : remaining)
    if (on_curve(p, pts[i])) s.push_back(i);
  return s;
}

std::optional<Candidate> best_line(const std::vector<Point2>& pts, const std::vector<std::size_t>& rem,
                                   std::size_t min_support) {
  // Group points by direction from each anchor; lines with enough hits survive.
  std::set<MultiPoly> lines;
  for (std::size_t a = 0; a < rem.size(); ++a) {
    std::map<std::pair<Integer, Integer>, std::size_t> dirs;
    const Point2& P = pts[rem[a]];
    for (std::size_t b = a + 1; b < rem.size(); ++b) {
      const Point2& Q = pts[rem[b]];
      Rational dx = Q.first - P.first, dy = Q.second - P.second;
      if (dx == 0 && dy == 0) continue;
      Integer den;
      mpz_lcm(den.get_mpz_t(), dx.get_den_mpz_t(), dy.get_den_mpz_t());
      Integer ix = dx.get_num() * (den / dx.get_den()), iy = dy.get_num() * (den / dy.get_den()), g;
      mpz_gcd(g.get_mpz_t(), ix.get_mpz_t(), iy.get_mpz_t());
      ix /= g;
      iy /= g;
      if (ix < 0 || (ix == 0 && iy < 0)) {
        ix = -ix;
        iy = -iy;
      }
      ++dirs[{ix, iy}];
    }
    for (const auto& [d, cnt] : dirs) {
      if (cnt + 1 < min_support) continue;
      // Line through P with direction d: dy*x - dx*y + (dx*Py - dy*Px).
      MultiPoly l(2);
      l.add_term({1, 0}, Rational(d.second));
      l.add_term({0, 1}, Rational(-d.first));
      l.add_term({0, 0}, Rational(d.first) * P.second - Rational(d.second) * P.first);
      lines.insert(l.primitive());
    }
  }
  std::optional<Candidate> best;
  for (const MultiPoly& l : lines) {
    Candidate c{l, 1, support_of(l, pts, rem)};
    if (c.support.size() < min_support) continue;
    if (!best || better(c, *best)) best = c;
  }
  return best;
}

unsigned long long binomial_capped(std::size_t n, std::size_t k, unsigned long long cap) {
  if (k > n) return 0;
  unsigned long long r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return r;
}

std::optional<Candidate> best_curve(const std::vector<Point2>& pts, const std::vector<std::size_t>& rem, int d,
                                    std::size_t min_support, const FitOptions& opts) {
  std::size_t k = monomials_upto(d).size() - 1;  // points fixing a unique curve
  if (rem.size() < std::max(k, min_support)) return std::nullopt;
  std::vector<std::vector<std::size_t>> seeds;
  if (binomial_capped(rem.size(), k, opts.seed_budget) <= opts.seed_budget) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      std::vector<std::size_t> s;
      for (std::size_t i : idx) s.push_back(rem[i]);
      seeds.push_back(std::move(s));
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == rem.size() - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  } else {
    std::mt19937_64 rng(opts.rng_seed + static_cast<std::uint64_t>(d) * 1000003ULL + rem.size());
    for (std::size_t t = 0; t < opts.seed_budget; ++t) {
      std::set<std::size_t> chosen;
      while (chosen.size() < k) chosen.insert(rem[rng() % rem.size()]);
      seeds.emplace_back(chosen.begin(), chosen.end());
    }
  }
  std::vector<std::optional<Candidate>> found(seeds.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::size_t s = 0; s < seeds.size(); ++s) {
    std::vector<Point2> sub;
    for (std::size_t i : seeds[s]) sub.push_back(pts[i]);
    auto basis = vanishing_space(sub, d);
    if (basis.size() != 1) continue;
    const MultiPoly& p = basis[0];
    if (p.degree() != d) continue;
    if (d == 2 && !acceptable(p, d, pts, {})) continue;
    auto sup = support_of(p, pts, rem);
    if (sup.size() < min_support) continue;
    if (d > 2 && !acceptable(p, d, pts, sup)) continue;
    found[s] = Candidate{p, d, std::move(sup)};
  }
  std::optional<Candidate> best;
  for (auto& c : found)
    if (c && (!best || better(*c, *best))) best = std::move(c);
  return best;
}

}  // namespace

std::vector<MultiPoly> vanishing_space(const std::vector<Point2>& points, int d) {
  if (d < 1) throw DomainError("vanishing_space needs d >= 1");
  auto mons = monomials_upto(d);
  std::vector<std::vector<Rational>> m;
  for (const auto& [x, y] : points) {
    std::vector<Rational> row;
    for (const auto& mo : mons) row.push_back(power(x, mo[0]) * power(y, mo[1]));
    m.push_back(std::move(row));
  }
  std::vector<MultiPoly> out;
  for (const auto& v : nullspace(m, mons.size())) {
    MultiPoly p(2);
    for (std::size_t i = 0; i < mons.size(); ++i) p.add_term(mons[i], v[i]);
    out.push_back(p.primitive());
  }
  return out;
}

std::vector<CurveComponent> fit_components(const std::vector<Point2>& points, int dmax, std::size_t min_support,
                                           const FitOptions& opts) {
  if (dmax < 1) throw DomainError("fit_components needs dmax >= 1");
  std::vector<std::size_t> rem(points.size());
  for (std::size_t i = 0; i < rem.size(); ++i) rem[i] = i;
  // Duplicate points would inflate supports; keep the first copy only.
  {
    std::map<Point2, std::size_t> seen;
    std::vector<std::size_t> uniq;
    for (std::size_t i : rem)
      if (seen.emplace(points[i], i).second) uniq.push_back(i);
    rem = std::move(uniq);
  }
  std::vector<CurveComponent> out;
  for (;;) {
    std::optional<Candidate> best;
    for (int d = 1; d <= dmax; ++d) {
      auto c = d == 1 ? best_line(points, rem, min_support) : best_curve(points, rem, d, min_support, opts);
      if (c && (!best || better(*c, *best))) best = std::move(c);
    }
    if (!best) break;
    std::set<std::size_t> used(best->support.begin(), best->support.end());
    std::vector<std::size_t> next;
    for (std::size_t i : rem)
      if (!used.count(i)) next.push_back(i);
    rem = std::move(next);
    out.push_back({best->poly, best->degree, best->support});
  }
  return out;
}

std::size_t default_min_support(int dmax) { return static_cast<std::size_t>(dmax * (dmax + 3) / 2 + 3); }

ClosureReport degeneracy_report(const std::vector<Point2>& points, int dmax, const FitOptions& opts) {
  ClosureReport rep;
  rep.max_degree = dmax;
  rep.min_support = default_min_support(dmax);
  rep.components = fit_components(points, dmax, rep.min_support, opts);
  std::vector<bool> covered(points.size(), false);
  std::size_t n = 0;
  for (const auto& c : rep.components)
    for (std::size_t i : c.support) covered[i] = true;
  for (std::size_t i = 0; i < points.size(); ++i) {
    // Copies of a covered point are covered too.
    if (!covered[i])
      for (const auto& c : rep.components)
        if (on_curve(c.poly, points[i])) covered[i] = true;
    if (covered[i]) ++n;
    else rep.residual.push_back(i);
  }
  rep.coverage = points.empty() ? Rational(1) : make_rational(n, points.size());
  rep.notes.push_back("component discovery is heuristic beyond exhaustive seed budgets; completeness is not guaranteed");
  return rep;
}

ClosureReport degeneracy_report(const SolutionSet& solutions, int dmax, const FitOptions& opts) {
  std::vector<Point2> pts;
  for (const auto& r : solutions.records) {
    if (r.point.size() != 2) throw ValidationError("closure needs affine points with two coordinates");
    pts.emplace_back(r.point[0], r.point[1]);
  }
  return degeneracy_report(pts, dmax, opts);
}

}  // namespace sintpts
