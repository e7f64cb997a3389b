#include <doctest.h>

#include <random>

#include "sintpts/sring.hpp"

using namespace sintpts;

namespace {
Rational q(long a, long b = 1) { return make_rational(a, b); }
}  // namespace

TEST_CASE("valuations") {
  CHECK(val(2, q(12)) == 2);
  CHECK(val(3, q(4, 9)) == -2);
  CHECK_FALSE(val(5, q(0)).has_value());
  CHECK_THROWS_AS(val(4, q(8)), DomainError);
}

TEST_CASE("integrality and units") {
  CHECK(is_s_integral(q(3, 2), PrimeSet{2}));
  CHECK_FALSE(is_s_integral(q(3, 2), PrimeSet{3}));
  CHECK(is_s_integral(q(7), PrimeSet{}));
  CHECK(is_s_unit(q(-1), PrimeSet{}));
  CHECK(is_s_unit(q(6), PrimeSet{2, 3}));
  CHECK_FALSE(is_s_unit(q(6), PrimeSet{2}));
  CHECK_FALSE(is_s_unit(q(0), PrimeSet{2}));
}

TEST_CASE("S-free parts, divisibility, gcd") {
  CHECK(s_free_part(q(24), PrimeSet{2}) == 3);
  CHECK(s_free_part(q(-45), PrimeSet{3}) == 5);
  CHECK(s_free_part(q(7), PrimeSet{7}) == 1);
  CHECK(divides(q(6), q(18), PrimeSet{}));
  CHECK(divides(q(4), q(6), PrimeSet{2}));
  CHECK_FALSE(divides(q(4), q(6), PrimeSet{}));
  CHECK(s_gcd(q(12), q(18), PrimeSet{}) == 6);
  CHECK(s_gcd(q(12), q(18), PrimeSet{2, 3}) == 1);
  CHECK(s_gcd(q(0), q(5), PrimeSet{}) == 5);
}

TEST_CASE("smooth enumeration") {
  auto v = enumerate_smooth(PrimeSet{2, 3}, 10);
  CHECK(v == std::vector<Integer>{1, 2, 3, 4, 6, 8, 9});
  CHECK(enumerate_smooth(PrimeSet{}, 100) == std::vector<Integer>{1});
  CHECK(enumerate_smooth(PrimeSet{2}, 9) == std::vector<Integer>{1, 2, 4, 8});
}

TEST_CASE("prime sets reject composites and duplicates") {
  CHECK_THROWS_AS(PrimeSet({4}), ValidationError);
  CHECK_THROWS_AS(PrimeSet({2, 2}), ValidationError);
  PrimeSet a{5, 2}, b{3, 2};
  CHECK(a.united(b) == PrimeSet{2, 3, 5});
  CHECK(a.minus(b) == PrimeSet{5});
  CHECK(PrimeSet{2}.subset_of(a));
}

TEST_CASE("property: gcd generates the ideal and divides both") {
  std::mt19937_64 rng(7);
  PrimeSet S{2, 5};
  for (int i = 0; i < 300; ++i) {
    Rational a = q(static_cast<long>(rng() % 2001) - 1000, 1 + static_cast<long>(rng() % 3) * 2);
    Rational b = q(static_cast<long>(rng() % 2001) - 1000, 1 + static_cast<long>(rng() % 4));
    if (a == 0 && b == 0) continue;
    if (!is_s_integral(a, S) || !is_s_integral(b, S)) continue;
    Integer g = s_gcd(a, b, S);
    CHECK(divides(Rational(g), a, S));
    CHECK(divides(Rational(g), b, S));
    CHECK(strip_s(g, S) == g);
  }
}

TEST_CASE("property: valuation is additive") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    Rational a = q(1 + static_cast<long>(rng() % 5000), 1 + static_cast<long>(rng() % 500));
    Rational b = q(-1 - static_cast<long>(rng() % 5000), 1 + static_cast<long>(rng() % 500));
    for (long p : {2L, 3L, 7L}) CHECK(*val(p, a * b) == *val(p, a) + *val(p, b));
  }
}
