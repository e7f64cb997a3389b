#pragma once

#include <vector>

#include "sintpts/arith.hpp"
#include "sintpts/multipoly.hpp"

namespace sintpts {

/// Dense univariate polynomial over Q, coefficients low degree first.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  /// Extracts a polynomial that depends on var only.
  static UPoly from_multi(const MultiPoly& p, unsigned var);

  const std::vector<Rational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }
  Rational eval(const Rational& x) const;

  UPoly monic() const;
  UPoly derivative() const;
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  /// Euclidean division; returns quotient, remainder in r.
  UPoly divmod(const UPoly& d, UPoly* r) const;
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd; gcd(0,0) = 0.
UPoly gcd(UPoly a, UPoly b);

/// p / gcd(p, p'), monic.
UPoly squarefree(const UPoly& p);

/// Distinct rational roots, ascending. Zero polynomial is rejected.
std::vector<Rational> rational_roots(const UPoly& p);

}  // namespace sintpts
