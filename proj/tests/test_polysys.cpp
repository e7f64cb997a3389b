#include <doctest.h>

#include <random>

#include "sintpts/io.hpp"
#include "sintpts/polysys.hpp"

using namespace sintpts;

namespace {
Rational q(long a, long b = 1) { return make_rational(a, b); }
MultiPoly P(const char* s, unsigned n = 2) { return parse_poly(s, n); }

DivisibilityProblem unit_pairs() {
  DivisibilityProblem p;
  for (const char* f : {"x", "y", "1-x-y"}) p.pairs.emplace_back(P(f), P("1"));
  return p;
}

NGonProblem hexagon(PrimeSet S = PrimeSet{2, 3, 5}) {
  NGonProblem p;
  for (long t = 0; t < 6; ++t) p.forms.push_back({1, t, t * t});
  p.S = S;
  return p;
}

bool has(const GeneralPositionReport& r, const std::string& cond, Verdict v) {
  for (const auto& c : r.results)
    if (c.condition == cond && c.verdict == v) return true;
  return false;
}
}  // namespace

TEST_CASE("evaluation and leading forms") {
  CHECK(eval(P("x+y+2"), {0, 0}) == 2);
  CHECK(eval(P("x*y*(1-x-y)"), {1, -1}) == -1);
  CHECK(eval(P("x^2-2y^2"), {3, 2}) == 1);
  CHECK(leading_form(P("x+y+2")) == P("x+y"));
  CHECK(leading_form(P("x*y-x")) == P("x*y"));
  CHECK(leading_form(P("5")) == P("5"));
}

TEST_CASE("resultants") {
  CHECK(resultant(P("y-1"), P("y+1"), 1) == P("2"));
  CHECK(resultant(P("y-x"), P("y+x"), 1) == P("2x"));
  // Sign convention: p-rows above q-rows of the Sylvester matrix.
  CHECK(resultant(P("y-x^2"), P("y"), 1) == P("x^2"));
}

TEST_CASE("common affine zeros") {
  auto z = common_affine_zeros(P("x"), P("y"));
  CHECK(z.points == std::vector<std::pair<Rational, Rational>>{{0, 0}});
  CHECK(z.bound == 1);
  z = common_affine_zeros(P("x-1"), P("y-2"));
  CHECK(z.points == std::vector<std::pair<Rational, Rational>>{{1, 2}});
  CHECK_THROWS_AS(common_affine_zeros(P("x^2"), P("x")), DomainError);
}

TEST_CASE("general position for divisibility problems") {
  auto rep = check_general_position_div(unit_pairs());
  CHECK(rep.all_verified());

  DivisibilityProblem inf;
  inf.pairs = {{P("x"), P("1")}, {P("x+1"), P("1")}, {P("y"), P("1")}};
  auto r1 = check_general_position_div(inf);
  CHECK(has(r1, "infinity", Verdict::violated));

  DivisibilityProblem tang;
  tang.pairs = {{P("y-x^2"), P("y")}, {P("x+3"), P("1")}, {P("y+5"), P("1")}};
  auto r3 = check_general_position_div(tang);
  CHECK(has(r3, "transversal", Verdict::violated));
}

TEST_CASE("general position for forms") {
  FormsProblem same;
  same.F = {P("x^2+y^2-z^2", 3), P("x^2+y^2-z^2", 3), P("x*y", 3)};
  same.G = P("z^2", 3);
  CHECK(has(check_general_position_forms(same), "triple", Verdict::violated));

  FormsProblem sing;
  sing.F = {P("y^2+x*z", 3), P("x^2+y^2-z^2", 3), P("x^2-2y^2+3y*z", 3)};
  sing.G = P("x^2", 3);
  CHECK(check_general_position_forms(sing).any_violated());
}

TEST_CASE("bad primes") {
  CHECK(bad_primes(hexagon()) == PrimeSet{2, 3, 5});
  NGonProblem tri;
  tri.forms = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(bad_primes(tri).empty());
  CHECK(bad_primes(unit_pairs()).empty());
}

TEST_CASE("divisibility predicate") {
  auto p = unit_pairs();
  CHECK(holds_div(p, 1, -1));
  CHECK_FALSE(holds_div(p, 2, 3));
  CHECK_FALSE(holds_div(p, 0, 5));
}

TEST_CASE("projective normalization and forms predicate") {
  CHECK(normalize_projective({2, 4, 6}) == Triple{1, 2, 3});
  CHECK(normalize_projective({q(-1, 2), 1, 0}) == Triple{1, -2, 0});
  CHECK_THROWS_AS(normalize_projective({0, 0, 0}), DomainError);
  FormsProblem f;
  f.F = {P("x^2", 3)};
  f.G = P("z^2", 3);
  CHECK_FALSE(holds_forms(f, {2, 1, 1}));
  CHECK(holds_forms(f, {2, 1, 2}));
}

TEST_CASE("beta decomposition on the frozen hexagon triples") {
  auto h = hexagon();
  auto b = beta_decompose(h, {7, 6, -4});
  CHECK(b.values == std::vector<Integer>{7, 9, 3, -11, -33, -63});
  CHECK(b.beta == std::vector<Integer>{7, 1, 1, 1, 11, 1});
  CHECK(b.alpha == std::vector<Rational>{1, 9, 3, -1, -3, -9});
  CHECK(holds_ngon(h, {7, 6, -4}));
  CHECK(holds_ngon_ideal(h, {7, 6, -4}));

  auto c = beta_decompose(h, {5, -4, -5});
  CHECK(c.values == std::vector<Integer>{5, -4, -23, -52, -91, -140});
  CHECK(c.beta == std::vector<Integer>{1, 1, 1, 1, 13, 7});
  CHECK(c.alpha[2] == -23);
  CHECK_FALSE(holds_ngon(h, {5, -4, -5}));
  CHECK_FALSE(holds_ngon_ideal(h, {5, -4, -5}));

  // Units everywhere: all betas 1.
  NGonProblem tri;
  tri.forms = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  auto u = beta_decompose(tri, {1, -1, 1});
  CHECK(u.beta == std::vector<Integer>{1, 1, 1});
  CHECK(holds_ngon(tri, {1, -1, 1}));
}

TEST_CASE("coprimality failure is an error") {
  // With S empty some small triple has a prime dividing three of the values.
  auto h = hexagon(PrimeSet{});
  bool threw = false;
  for (long a = -6; a <= 6 && !threw; ++a)
    for (long b = -6; b <= 6 && !threw; ++b)
      for (long c = -6; c <= 6 && !threw; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        try {
          beta_decompose(h, {a, b, c});
        } catch (const DomainError&) {
          threw = true;
        }
      }
  CHECK(threw);
}

TEST_CASE("parametric unit predicate") {
  ParametricUnitProblem p;
  p.f = P("t", 1);
  p.g = P("1-t", 1);
  p.h = P("t+1", 1);
  p.S = PrimeSet{5};
  CHECK(holds_sunit(p, 5, 5, 4));
  p.S = PrimeSet{};
  CHECK_FALSE(holds_sunit(p, 5, 5, 4));
  p.S = PrimeSet{5};
  CHECK_FALSE(holds_sunit(p, 5, 1, 4));
  p.S = PrimeSet{2, 3};
  CHECK(bad_primes(p) == PrimeSet{2});
}

TEST_CASE("blow-up integrality") {
  CHECK(blowup_integral(P("x"), P("y"), {2, 4}, PrimeSet{}));
  CHECK_FALSE(blowup_integral(P("x"), P("y"), {4, 2}, PrimeSet{}));
  CHECK(blowup_integral(P("x"), P("y"), {4, 2}, PrimeSet{2}));
}

TEST_CASE("property: twin n-gon predicates agree on random triples") {
  auto h = hexagon();
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    Triple t{static_cast<long>(rng() % 61) - 30, static_cast<long>(rng() % 61) - 30,
             static_cast<long>(rng() % 61) - 30};
    if (t[0] == 0 && t[1] == 0 && t[2] == 0) continue;
    t = normalize_projective({Rational(t[0]), Rational(t[1]), Rational(t[2])});
    CHECK(holds_ngon(h, t) == holds_ngon_ideal(h, t));
    ++checked;
  }
  CHECK(checked > 900);
}

TEST_CASE("property: beta decomposition reconstructs the values") {
  auto h = hexagon();
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    Triple t{static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 41) - 20,
             static_cast<long>(rng() % 41) - 20};
    if (t[0] == 0 && t[1] == 0 && t[2] == 0) continue;
    t = normalize_projective({Rational(t[0]), Rational(t[1]), Rational(t[2])});
    bool zero = false;
    for (std::size_t k = 0; k < 6; ++k) zero |= h.value(k, t) == 0;
    if (zero) continue;
    auto b = beta_decompose(h, t);
    for (std::size_t k = 0; k < 6; ++k) {
      if (b.values[k] == 0) continue;
      CHECK(Rational(b.values[k]) == Rational(b.beta[k] * b.beta[(k + 1) % 6]) * b.alpha[k]);
    }
  }
}

TEST_CASE("property: resultant vanishes exactly at common roots") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    long a = static_cast<long>(rng() % 9) - 4, b = static_cast<long>(rng() % 9) - 4;
    // p = (y - a)(y - x), q = y - b x: common zero exists for every x with a = b x or b = 1.
    MultiPoly p = (P("y") - MultiPoly::constant(2, a)) * P("y-x");
    MultiPoly qq = P("y") - MultiPoly::constant(2, b) * P("x");
    MultiPoly r = resultant(p, qq, 1);
    for (long x = -3; x <= 3; ++x) {
      bool common = Rational(a) == Rational(b * x) || b == 1 || x == 0;
      CHECK((r.eval({x, 0}) == 0) == common);
    }
  }
}
