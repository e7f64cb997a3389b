#include <doctest.h>

#include "sintpts/closure.hpp"
#include "sintpts/io.hpp"

using namespace sintpts;

namespace {
Rational q(long a, long b = 1) { return make_rational(a, b); }

// Rational points on the unit circle from the slope parametrization.
std::vector<Point2> circle_points(std::size_t n) {
  std::vector<Point2> pts;
  for (long m = 0; pts.size() < n; ++m) {
    Rational s = q(m, 3);
    pts.emplace_back((1 - s * s) / (1 + s * s), 2 * s / (1 + s * s));
  }
  return pts;
}
}  // namespace

TEST_CASE("vanishing spaces") {
  auto v = vanishing_space({{0, 0}, {1, 1}, {2, 2}}, 1);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == parse_poly("x-y", 2));
  CHECK(vanishing_space({{0, 0}, {1, 0}, {0, 1}, {2, 3}, {5, 7}}, 1).empty());
  CHECK(vanishing_space({}, 1).size() == 3);
  CHECK(monomials_upto(2).size() == 6);
}

TEST_CASE("conic plus noise") {
  auto pts = circle_points(8);
  pts.emplace_back(5, 7);
  pts.emplace_back(-3, 11);
  pts.emplace_back(q(1, 2), 9);
  auto comps = fit_components(pts, 2, 6);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].degree == 2);
  CHECK(comps[0].poly == parse_poly("x^2+y^2-1", 2));
  CHECK(comps[0].support.size() == 8);
  auto rep = degeneracy_report(pts, 2);
  CHECK(rep.min_support == 8);
  CHECK(rep.residual.size() == 3);
}

TEST_CASE("below threshold and two lines") {
  CHECK(fit_components({{0, 0}, {1, 1}, {2, 2}}, 2, 6).empty());
  std::vector<Point2> pts;
  for (long i = 0; i < 10; ++i) pts.emplace_back(i, 2 * i + 1);
  for (long i = 0; i < 10; ++i) pts.emplace_back(i + 20, -i);
  auto comps = fit_components(pts, 2, 6);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].poly == parse_poly("x+y-20", 2));
  CHECK(comps[1].poly == parse_poly("2x-y+1", 2));
  auto again = fit_components(pts, 2, 6);
  CHECK(again[0].poly == comps[0].poly);
  CHECK(again[1].poly == comps[1].poly);
}

TEST_CASE("reports") {
  auto e = degeneracy_report(std::vector<Point2>{}, 2);
  CHECK(e.components.empty());
  CHECK(e.coverage == 1);
  std::vector<Point2> line;
  for (long i = -6; i <= 6; ++i) line.emplace_back(i, 3 - i);
  auto r = degeneracy_report(line, 2);
  CHECK(r.components.size() == 1);
  CHECK(r.coverage == 1);
}

TEST_CASE("unit-pair solutions lie on the expected lines") {
  DivisibilityProblem p;
  for (const char* f : {"x", "y", "1-x-y"}) p.pairs.emplace_back(parse_poly(f, 2), parse_poly("1", 2));
  p.S = PrimeSet{2};
  SearchDomain d;
  d.height = 40;
  d.denom_bound = 8;
  auto s = run(p, d);
  auto rep = degeneracy_report(s, 1);
  for (const auto& c : rep.components) {
    // Every component must be one of the lines where a coordinate is constant, or x + y = const.
    auto lf = c.poly.leading_form();
    bool ok = lf == parse_poly("x", 2) || lf == parse_poly("y", 2) || lf == parse_poly("x+y", 2);
    CHECK(ok);
  }
  CHECK(rep.coverage <= 1);
}

TEST_CASE("property: points generated on a random line are recovered") {
  for (long a = 1; a <= 4; ++a)
    for (long b = -3; b <= 3; ++b) {
      std::vector<Point2> pts;
      for (long i = 0; i < 9; ++i) pts.emplace_back(q(i), q(a * i + b, 2));
      pts.emplace_back(100, q(1, 3));
      auto comps = fit_components(pts, 2, 8);
      REQUIRE(comps.size() == 1);
      CHECK(comps[0].support.size() == 9);
      for (const auto& p : pts)
        if (p.first != 100) CHECK(comps[0].poly.eval({p.first, p.second}) == 0);
    }
}
