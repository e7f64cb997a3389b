#include <doctest.h>

#include "sintpts/io.hpp"
#include "sintpts/pencil.hpp"

using namespace sintpts;

namespace {
ConicWithMarks pell_conic() { return {{Triple{1, 0, 0}, Triple{0, -2, 0}, Triple{0, 0, -1}}, Triple{0, 0, 1}}; }

ParametricUnitProblem param(PrimeSet S) {
  ParametricUnitProblem p;
  p.f = parse_poly("t", 1);
  p.g = parse_poly("1-t", 1);
  p.h = parse_poly("t+1", 1);
  p.S = S;
  return p;
}

const std::vector<Triple> kLines = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, -1, 2}};
}  // namespace

TEST_CASE("Pell fundamental solutions") {
  CHECK(pell_fundamental(2) == std::pair<Integer, Integer>{3, 2});
  CHECK(pell_fundamental(3) == std::pair<Integer, Integer>{2, 1});
  CHECK(pell_fundamental(5) == std::pair<Integer, Integer>{9, 4});
  CHECK(pell_fundamental(61) == std::pair<Integer, Integer>{Integer("1766319049"), Integer("226153980")});
  CHECK_THROWS_AS(pell_fundamental(4), DomainError);
}

TEST_CASE("stabilizers") {
  auto g = stabilizer_map(pell_conic(), PrimeSet{});
  CHECK(g.M == IMatrix{Triple{3, 4, 0}, Triple{2, 3, 0}, Triple{0, 0, 1}});
  CHECK(g.scale == 1);
  CHECK(g.kind == "pell");

  ConicWithMarks split{{Triple{0, 1, 0}, Triple{1, 0, 0}, Triple{0, 0, -2}}, Triple{0, 0, 1}};
  auto s = stabilizer_map(split, PrimeSet{2});
  CHECK(s.M == IMatrix{Triple{4, 0, 0}, Triple{0, 1, 0}, Triple{0, 0, 2}});
  CHECK(s.kind == "split");
  CHECK(s.lambda == 4);

  ConicWithMarks circle{{Triple{1, 0, 0}, Triple{0, 1, 0}, Triple{0, 0, -1}}, Triple{0, 0, 1}};
  CHECK_THROWS_AS(stabilizer_map(circle, PrimeSet{}), UnsupportedError);
}

TEST_CASE("integrality with respect to marks") {
  auto c = pell_conic();
  CHECK(integral_wrt_marks({3, 2, 1}, c, PrimeSet{}));
  CHECK(integral_wrt_marks({17, 12, 1}, c, PrimeSet{}));
  CHECK(integral_wrt_marks({6, 4, 2}, c, PrimeSet{}));
}

TEST_CASE("Pell orbits") {
  auto c = pell_conic();
  auto g = stabilizer_map(c, PrimeSet{});
  auto o = generate_orbit(c, g, {1, 0, 1}, 3, PrimeSet{});
  CHECK(o == std::vector<Triple>{{3, 2, 1}, {17, 12, 1}, {99, 70, 1}});
  auto o2 = generate_orbit(c, g, {3, 2, 1}, 2, PrimeSet{});
  CHECK(o2 == std::vector<Triple>{{17, 12, 1}, {99, 70, 1}});
  CHECK(generate_orbit(c, g, {1, 0, 1}, 0, PrimeSet{}).empty());
}

TEST_CASE("property: orbit points stay on the conic with growing heights") {
  for (long D : {2L, 3L, 5L, 6L, 7L}) {
    ConicWithMarks c{{Triple{1, 0, 0}, Triple{0, -D, 0}, Triple{0, 0, -1}}, Triple{0, 0, 1}};
    auto g = stabilizer_map(c, PrimeSet{});
    auto o = generate_orbit(c, g, {1, 0, 1}, 6, PrimeSet{});
    REQUIRE(o.size() == 6);
    for (std::size_t i = 0; i < o.size(); ++i) {
      CHECK(quad_form(c.Q, o[i], o[i]) == 0);
      CHECK(integral_wrt_marks(o[i], c, PrimeSet{}));
      if (i) CHECK(height3(o[i]) > height3(o[i - 1]));
    }
  }
}

TEST_CASE("family catalog") {
  auto p = param(PrimeSet{2, 3});
  auto cat = sunit_catalog(p);
  bool v1 = false, u2 = false, r2 = false;
  for (const auto& f : cat.families) {
    if (f.kind != FamilyKind::fiber) continue;
    if (*f.t0 == 0) v1 = f.fixed == "v" && f.fixed_value == 1;
    if (*f.t0 == 1) u2 = f.fixed == "u" && f.fixed_value == 2;
    if (*f.t0 == -1) r2 = f.fixed == "ratio" && f.fixed_value == 2;
  }
  CHECK(v1);
  CHECK(u2);
  CHECK(r2);

  ParametricUnitProblem none;
  none.f = parse_poly("t^2+1", 1);
  none.g = parse_poly("t^2+2", 1);
  none.h = parse_poly("t^2+3", 1);
  for (const auto& f : sunit_catalog(none).families) CHECK(f.kind != FamilyKind::fiber);
}

TEST_CASE("classification") {
  auto p = param(PrimeSet{2});
  CHECK(classify_solution(sunit_catalog(p), p, 8, 1, 0) == "fiber[t0=0,v=1]");
  auto p5 = param(PrimeSet{5});
  CHECK(classify_solution(sunit_catalog(p5), p5, 5, 5, 4) == "fixed-ratio[1]");
  CHECK_THROWS_AS(classify_solution(sunit_catalog(p5), p5, 5, 1, 4), DomainError);
}

TEST_CASE("pencil construction") {
  auto r = thm8_pencil(kLines, PrimeSet{2, 3, 5}, 3, 2);
  CHECK(r.members.size() == 3);
  for (const auto& m : r.members) {
    // Seeds are base points P2 on two lines; the certified points are their orbit images.
    CHECK(m.seed == r.base_points[1]);
    CHECK_FALSE(m.points.empty());
    for (const auto& pt : m.points) {
      CHECK(quad_form(m.Q, pt, pt) == 0);
      CHECK(pencil_certified(kLines, pt, r.W));
    }
  }
  auto seeds = thm8_pencil(kLines, PrimeSet{2, 3, 5}, 2, 0);
  CHECK(seeds.total_points() == 0);
  CHECK(seeds.members.size() == 2);
  bool skipped = false;
  for (const auto& l : r.log) skipped |= l.find("skipped") != std::string::npos;
  CHECK(skipped);
  std::vector<Triple> concurrent = {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, 1, 1}, {1, -1, 2}};
  CHECK_THROWS_AS(thm8_pencil(concurrent, PrimeSet{}, 1, 1), ValidationError);
}
