#pragma once

#include <string>
#include <vector>

#include "sintpts/arith.hpp"

namespace sintpts {

/// a + b*sqrt(d) with d squarefree. Rationals use d = 1 and b = 0.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(const Rational& a);  // NOLINT: implicit lift of rationals
  QuadraticNumber(const Rational& a, const Rational& b, const Integer& d);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& d() const { return d_; }
  bool is_rational() const { return b_ == 0; }

  QuadraticNumber conjugate() const { return {a_, -b_, d_}; }
  /// (a + b√d)(a − b√d), a rational.
  Rational norm() const { return a_ * a_ - b_ * b_ * d_; }

  friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y);
  QuadraticNumber operator-() const { return {-a_, -b_, d_}; }
  bool operator==(const QuadraticNumber& o) const;

  std::string to_string() const;

 private:
  Rational a_ = 0, b_ = 0;
  Integer d_ = 1;
};

/// -1, 0 or 1, decided by rational comparisons only.
int quad_sign(const QuadraticNumber& q);
bool operator<(const QuadraticNumber& x, const QuadraticNumber& y);
bool operator>(const QuadraticNumber& x, const QuadraticNumber& y);

struct DivisorConfig {
  std::string name;
  std::vector<std::string> labels;
  std::vector<std::vector<Rational>> Q;
  std::vector<Rational> p;
  /// Common factor applied to the multiplicities to make them integral.
  Integer scale = 1;
  std::vector<std::string> notes;
  void validate() const;
};

Rational d_dot(const DivisorConfig& config, std::size_t i);
Rational d_squared(const DivisorConfig& config);
QuadraticNumber xi_solve(const DivisorConfig& config, std::size_t i);
/// 2 ξ D² − (D.D_i) ξ² − 3 p_i D²; the hypothesis holds iff positive.
QuadraticNumber cz_margin(const DivisorConfig& config, std::size_t i);
bool cz_check(const DivisorConfig& config, std::size_t i);

struct ComponentVerdict {
  std::string label;
  Rational d_dot;
  bool solved = false;
  QuadraticNumber xi;
  QuadraticNumber margin;
  bool pass = false;
  std::string error;
};

struct CzReport {
  Rational d_squared;
  std::vector<ComponentVerdict> components;
  bool overall = false;
};

CzReport cz_check_all(const DivisorConfig& config);

DivisorConfig preset_ngon(int n);
DivisorConfig preset_thm2(long d1, long d2, long d3);
DivisorConfig preset_prop2(long c, long h);
DivisorConfig preset_delpezzo_conics();
DivisorConfig preset_delpezzo2(const std::vector<long>& cdots, long c_self = 0);
DivisorConfig preset_hirzebruch(long d);

/// 7n³ − 70n² + 207n − 192.
Integer ngon_reduction_value(long n);

/// Closed form (3 − √3)c/h + p for the H-component root.
QuadraticNumber prop2_xi_closed_form(const Rational& c, const Rational& h, const Rational& p);

struct Prop2Inequalities {
  Rational di_left, di_right;        // p²h² + 2pch  >  2c²
  QuadraticNumber h_left;            // 6c²h((3 − √3)c + ph)
  Rational h_right;                  // (3ch − 2ph²)(6c² + 6pch + p²h²)
  bool di_holds = false;
  bool h_holds = false;
};

Prop2Inequalities prop2_inequalities(const Rational& c, const Rational& h, const Rational& p);

}  // namespace sintpts
