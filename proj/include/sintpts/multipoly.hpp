#pragma once

#include <map>
#include <string>
#include <vector>

#include "sintpts/arith.hpp"

namespace sintpts {

using Monomial = std::vector<unsigned>;

/// Sparse polynomial over Q in 1 to 3 variables.
class MultiPoly {
 public:
  explicit MultiPoly(unsigned nvars = 2);
  static MultiPoly constant(unsigned nvars, const Rational& c);
  static MultiPoly variable(unsigned nvars, unsigned index);
  static MultiPoly term(const Monomial& exps, const Rational& c);

  unsigned nvars() const { return nvars_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  void add_term(const Monomial& exps, const Rational& c);
  Rational coefficient(const Monomial& exps) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  int degree_in(unsigned var) const;
  bool is_homogeneous() const;

  Rational eval(const std::vector<Rational>& point) const;
  /// Partial evaluation: substitutes value for var, keeping nvars.
  MultiPoly eval_var(unsigned var, const Rational& value) const;
  /// Replaces var by the polynomial repl (same arity).
  MultiPoly substitute(unsigned var, const MultiPoly& repl) const;
  MultiPoly derivative(unsigned var) const;
  MultiPoly leading_form() const;
  /// Coefficients c_k with p = sum c_k var^k; c_k free of var.
  std::vector<MultiPoly> coeffs_in(unsigned var) const;

  /// Integer coefficients with content 1, leading term positive.
  MultiPoly primitive() const;
  /// Leading term under graded-lex order.
  std::pair<Monomial, Rational> leading_term() const;
  /// Changes arity by dropping (must be absent) or appending variables.
  MultiPoly with_nvars(unsigned n) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }
  /// Graded-lex comparison of term lists, used for deterministic tie-breaks.
  bool operator<(const MultiPoly& o) const;

  MultiPoly pow(unsigned e) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  unsigned nvars_;
  std::map<Monomial, Rational> terms_;
};

std::vector<std::string> default_var_names(unsigned nvars);

/// Graded-lex order on exponent vectors (total degree first).
bool grlex_less(const Monomial& a, const Monomial& b);

/// Sylvester resultant in var; rows of p above rows of q.
/// A constant argument yields the other's power convention, both constant yields 1.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, unsigned var);

/// Determinant of a square matrix of polynomials.
MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m, unsigned nvars);

/// Determinant over Q by exact elimination.
Rational determinant(std::vector<std::vector<Rational>> m);

}  // namespace sintpts
