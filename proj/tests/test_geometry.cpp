#include <doctest.h>

#include "sintpts/geometry.hpp"

using namespace sintpts;

namespace {
QuadraticNumber qn(long a, long b, long d) { return QuadraticNumber(a, b, d); }
}  // namespace

TEST_CASE("quadratic signs") {
  CHECK(quad_sign(qn(15, -4, 3)) == 1);
  CHECK(quad_sign(qn(-1, 1, 6)) == 1);
  CHECK(quad_sign(qn(0, 0, 2)) == 0);
  CHECK(quad_sign(qn(-378, 384, 3)) == 1);
  CHECK(quad_sign(qn(5, -3, 3)) == -1);
  CHECK(qn(1, 1, 2) * qn(1, -1, 2) == QuadraticNumber(-1));
  CHECK_THROWS_AS(qn(1, 1, 4), DomainError);
}

TEST_CASE("n-gon intersection numbers") {
  auto c6 = preset_ngon(6);
  CHECK(c6.Q[0][0] == -1);
  CHECK(c6.Q[0][1] == 0);
  CHECK(c6.Q[0][5] == 0);
  CHECK(c6.Q[0][2] == 1);
  for (std::size_t i = 0; i < 6; ++i) CHECK(d_dot(c6, i) == 2);
  CHECK(d_squared(c6) == 12);
  CHECK(d_dot(preset_ngon(5), 0) == 1);
  CHECK(d_squared(preset_ngon(5)) == 5);
  CHECK(d_dot(preset_ngon(3), 0) == -1);
}

TEST_CASE("xi roots") {
  CHECK(xi_solve(preset_ngon(6), 0) == QuadraticNumber(2));
  CHECK(xi_solve(preset_ngon(5), 0) == qn(-1, 1, 6));
  auto p2 = preset_prop2(4, 1);
  std::size_t H = p2.labels.size() - 1;
  CHECK(p2.labels[H] == "H");
  CHECK(xi_solve(p2, H) == qn(15, -4, 3));
  CHECK(prop2_xi_closed_form(4, 1, 3) == qn(15, -4, 3));
}

TEST_CASE("cz checks") {
  CHECK(cz_check(preset_ngon(6), 0));
  CHECK_FALSE(cz_check(preset_ngon(5), 0));
  CHECK(cz_check_all(preset_ngon(6)).overall);
  CHECK_FALSE(cz_check_all(preset_ngon(5)).overall);
  auto p2 = preset_prop2(4, 1);
  CHECK(cz_check(p2, p2.labels.size() - 1));
  CHECK(cz_check_all(preset_delpezzo_conics()).overall);
}

TEST_CASE("reduction polynomial") {
  CHECK(ngon_reduction_value(5) == -32);
  CHECK(ngon_reduction_value(6) == 42);
  for (int n = 3; n <= 20; ++n) CHECK(cz_check_all(preset_ngon(n)).overall == (n >= 6));
}

TEST_CASE("prop2 presets") {
  auto p = preset_prop2(4, 1);
  CHECK(p.p.back() * p.scale == 3 * p.scale);
  CHECK(d_squared(p) / (p.scale * p.scale) == 177);
  auto ineq = prop2_inequalities(4, 1, 3);
  CHECK(ineq.di_left == 33);
  CHECK(ineq.di_right == 32);
  CHECK(ineq.di_holds);
  CHECK(ineq.h_holds);
  auto p82 = preset_prop2(8, 2);
  CHECK(p82.p.back() / p82.p.front() == 3);
  auto p11 = preset_prop2(1, 1);
  CHECK(p11.scale == 4);
}

TEST_CASE("thm2 presets") {
  auto t = preset_thm2(1, 1, 1);
  CHECK(t.scale == 4);
  CHECK(t.p == std::vector<Rational>{4, 4, 4, 3});
  CHECK(cz_check_all(t).overall);
  CHECK(preset_thm2(2, 1, 1).scale == 2);
  CHECK_THROWS_AS(preset_thm2(0, 1, 1), DomainError);
}

TEST_CASE("del Pezzo presets") {
  auto c = preset_delpezzo_conics();
  CHECK(d_squared(c) == 20);
  CHECK(d_dot(c, 0) == 4);
  CHECK(xi_solve(c, 0) == QuadraticNumber(make_rational(5, 2)));
  CHECK_NOTHROW(preset_delpezzo2({2, 2, 2}, 0).validate());
  CHECK_NOTHROW(preset_delpezzo2({1, 1, 1}).validate());
  CHECK_THROWS(preset_delpezzo2({0, 1, 1}));
}

TEST_CASE("Hirzebruch presets") {
  CHECK(d_squared(preset_hirzebruch(1)) == 15);
  auto h2 = preset_hirzebruch(2);
  CHECK(h2.Q[0][0] == 2);
  CHECK(h2.Q[0][1] == 2);
  CHECK_THROWS_AS(preset_hirzebruch(0), DomainError);
}

TEST_CASE("property: margin sign matches the closed-form ngon polynomial") {
  for (int n = 5; n <= 30; ++n) {
    bool pass = cz_check(preset_ngon(n), 0);
    CHECK(pass == (ngon_reduction_value(n) > 0));
  }
}

TEST_CASE("property: xi is a root of its defining quadratic") {
  for (long c = 1; c <= 12; ++c)
    for (long h = 1; h <= 3; ++h) {
      auto cfg = preset_prop2(c, h);
      for (std::size_t i = 0; i < cfg.labels.size(); ++i) {
        QuadraticNumber xi;
        try {
          xi = xi_solve(cfg, i);
        } catch (const DomainError&) {
          continue;
        }
        // (D - xi D_i)^2 = D^2 - 2 xi D.D_i + xi^2 D_i^2 must vanish.
        QuadraticNumber r = QuadraticNumber(d_squared(cfg)) - QuadraticNumber(2 * d_dot(cfg, i)) * xi +
                            xi * xi * QuadraticNumber(cfg.Q[i][i]);
        CHECK(quad_sign(r) == 0);
      }
    }
}
