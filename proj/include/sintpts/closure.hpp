#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sintpts/multipoly.hpp"
#include "sintpts/search.hpp"

namespace sintpts {

using Point2 = std::pair<Rational, Rational>;

struct CurveComponent {
  MultiPoly poly{2};
  int degree = 0;
  std::vector<std::size_t> support;  // indices into the input points
};

struct ClosureReport {
  std::vector<CurveComponent> components;
  std::vector<std::size_t> residual;
  Rational coverage = 1;
  std::size_t min_support = 0;
  int max_degree = 0;
  std::vector<std::string> notes;
};

struct FitOptions {
  std::size_t seed_budget = 20000;  // tuples tried per degree >= 2 before sampling
  std::uint64_t rng_seed = 0x5eedULL;
};

/// Monomials of total degree <= d in (x, y): by degree, then descending power of x.
std::vector<Monomial> monomials_upto(int d);

/// Basis of the degree <= d polynomials vanishing at all points.
std::vector<MultiPoly> vanishing_space(const std::vector<Point2>& points, int d);

std::vector<CurveComponent> fit_components(const std::vector<Point2>& points, int dmax,
                                           std::size_t min_support, const FitOptions& opts = {});

std::size_t default_min_support(int dmax);

ClosureReport degeneracy_report(const std::vector<Point2>& points, int dmax, const FitOptions& opts = {});
ClosureReport degeneracy_report(const SolutionSet& solutions, int dmax, const FitOptions& opts = {});

}  // namespace sintpts
