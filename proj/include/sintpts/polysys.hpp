#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "sintpts/multipoly.hpp"
#include "sintpts/sring.hpp"

namespace sintpts {

using Triple = std::array<Integer, 3>;
using RTriple = std::array<Rational, 3>;

struct DivisibilityProblem {
  std::vector<std::pair<MultiPoly, MultiPoly>> pairs;
  PrimeSet S;
  void validate() const;
};

struct FormsProblem {
  std::vector<MultiPoly> F;
  MultiPoly G{3};
  PrimeSet S;
  void validate() const;
};

struct NGonProblem {
  std::vector<Triple> forms;
  PrimeSet S;
  void validate() const;
  Integer value(std::size_t i, const Triple& p) const;
};

struct ParametricUnitProblem {
  MultiPoly f{1}, g{1}, h{1};
  PrimeSet S;
  void validate() const;
};

struct BetaDecomposition {
  std::vector<Integer> values;
  std::vector<Integer> beta;
  std::vector<Rational> alpha;
};

enum class Verdict { verified, violated, inconclusive };
const char* to_string(Verdict v);

struct ConditionResult {
  std::string condition;  // e.g. "infinity", "triple", "transversal", "mixed-triple"
  std::string subject;    // which polynomials, e.g. "f1,f2"
  Verdict verdict = Verdict::inconclusive;
  std::string detail;
  std::vector<Rational> certificates;
};

struct GeneralPositionReport {
  std::vector<ConditionResult> results;
  std::vector<std::string> notes;
  bool all_verified() const;
  bool any_violated() const;
};

struct AffineZeros {
  std::vector<std::pair<Rational, Rational>> points;
  Integer bound;
};

Rational eval(const MultiPoly& p, const std::vector<Rational>& point);
MultiPoly leading_form(const MultiPoly& p);

/// Rational common zeros of two coprime bivariate polynomials plus a count bound.
AffineZeros common_affine_zeros(const MultiPoly& p, const MultiPoly& q);

/// Resultant of two binary forms in (x, y) with their formal degrees.
Rational binary_form_resultant(const MultiPoly& a, const MultiPoly& b);

GeneralPositionReport check_general_position_div(const DivisibilityProblem& problem);
GeneralPositionReport check_general_position_forms(const FormsProblem& problem);

PrimeSet bad_primes(const DivisibilityProblem& problem);
PrimeSet bad_primes(const FormsProblem& problem);
PrimeSet bad_primes(const NGonProblem& problem);
PrimeSet bad_primes(const ParametricUnitProblem& problem);

bool holds_div(const DivisibilityProblem& problem, const Rational& x, const Rational& y);
Triple normalize_projective(const RTriple& t);
bool holds_forms(const FormsProblem& problem, const RTriple& t);
BetaDecomposition beta_decompose(const NGonProblem& problem, const Triple& t);
bool holds_ngon(const NGonProblem& problem, const Triple& t);
bool holds_ngon_ideal(const NGonProblem& problem, const Triple& t);
bool holds_sunit(const ParametricUnitProblem& problem, const Rational& u, const Rational& v,
                 const Rational& t);
bool blowup_integral(const MultiPoly& phi, const MultiPoly& psi,
                     const std::vector<Rational>& point, const PrimeSet& S);

/// Primes dividing numerator or denominator of any of the values.
PrimeSet primes_of(const std::vector<Rational>& values);

}  // namespace sintpts
