#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sintpts/polysys.hpp"
#include "sintpts/search.hpp"

namespace sintpts {

using IMatrix = std::array<std::array<Integer, 3>, 3>;

/// Minimal positive solution of u² − D v² = 1.
std::pair<Integer, Integer> pell_fundamental(const Integer& D);

struct ConicWithMarks {
  IMatrix Q;   // conic x^T Q x = 0
  Triple ell;  // marked pair = conic ∩ {ell = 0}
  void validate() const;
};

struct OrbitGenerator {
  IMatrix M;
  Integer scale = 1;
  PrimeSet bad_primes_added;
  Rational lambda;  // M^T Q M = lambda Q
  std::string kind;  // "pell" or "split"
};

OrbitGenerator stabilizer_map(const ConicWithMarks& conic, const PrimeSet& S);
bool integral_wrt_marks(const Triple& point, const ConicWithMarks& conic, const PrimeSet& S);
std::vector<Triple> generate_orbit(const ConicWithMarks& conic, const OrbitGenerator& gen,
                                   const Triple& seed, std::size_t count, const PrimeSet& S);

// Small exact 3x3 helpers shared with the pencil construction.
Integer det3(const IMatrix& m);
IMatrix adj3(const IMatrix& m);
IMatrix mul3(const IMatrix& a, const IMatrix& b);
IMatrix transpose3(const IMatrix& m);
Triple apply3(const IMatrix& m, const Triple& v);
Triple cross3(const Triple& a, const Triple& b);
Integer dot3(const Triple& a, const Triple& b);
Integer quad_form(const IMatrix& Q, const Triple& a, const Triple& b);
/// Divides by the content; first nonzero entry positive.
Triple primitive3(const Triple& v);
IMatrix primitive_matrix(const IMatrix& m, Integer* content = nullptr);
Integer height3(const Triple& v);

enum class FamilyKind { fiber, fixed_u, fixed_v, fixed_ratio, fixed_pair };
const char* to_string(FamilyKind k);

struct FamilyDescriptor {
  std::string id;
  FamilyKind kind = FamilyKind::fiber;
  std::optional<Rational> t0;  // fibers
  std::string fixed;           // "u", "v", "ratio" or "pair"
  Rational fixed_value;        // u, v or u/v; u for pairs
  Rational second_value;       // v for pairs
  bool nonempty = true;        // fixed values are S-units
  bool member(const Rational& u, const Rational& v, const Rational& t) const;
};

struct FamilyCatalog {
  std::vector<FamilyDescriptor> families;
};

FamilyCatalog sunit_catalog(const ParametricUnitProblem& problem);

/// Family id of the first matching family, or "sporadic".
std::string classify_solution(const FamilyCatalog& catalog, const ParametricUnitProblem& problem,
                              const Rational& u, const Rational& v, const Rational& t);

struct PhiReport {
  std::map<std::string, std::size_t> counts;  // per family id and "sporadic"
  std::size_t total = 0;
  std::size_t sporadic = 0;
  /// Values u, v, u/v of the sporadic solutions.
  std::set<Rational> phi;
};

PhiReport phi_report(const FamilyCatalog& catalog, const ParametricUnitProblem& problem,
                     const SolutionSet& solutions);

}  // namespace sintpts
