#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "sintpts/polysys.hpp"

namespace sintpts {

using Problem = std::variant<DivisibilityProblem, FormsProblem, NGonProblem, ParametricUnitProblem>;

const PrimeSet& problem_primes(const Problem& problem);
std::string problem_kind(const Problem& problem);
/// Deterministic text form used for fingerprints.
std::string canonical_string(const Problem& problem);
/// FNV-1a 64-bit hash of canonical_string, as 16 hex digits.
std::string fingerprint(const Problem& problem);

enum class SearchMode { affine2, affine3, projective, units };
const char* to_string(SearchMode m);
SearchMode search_mode_from_string(const std::string& s);

struct SearchDomain {
  Integer height = 0;       // numerator bound H
  Integer denom_bound = 1;  // S-smooth denominator bound B
  SearchMode mode = SearchMode::affine2;
  long unit_exponent = 0;   // |e| bound for units mode
  void validate() const;
};

struct Witness {
  std::string name;
  Rational value;
  bool operator==(const Witness& o) const { return name == o.name && value == o.value; }
};

struct PointRecord {
  std::vector<Rational> point;
  std::vector<Witness> witnesses;
  bool operator==(const PointRecord& o) const { return point == o.point && witnesses == o.witnesses; }
};

struct SolutionSet {
  std::string fingerprint;
  std::string kind;
  SearchDomain domain;
  bool override_used = false;
  std::vector<PointRecord> records;
  std::vector<std::string> notes;
};

struct RunOptions {
  bool override_validation = false;
  int threads = 0;  // 0 keeps the OpenMP default
};

/// Sorted values a/s with gcd(a,s) = 1, |a| <= H, s S-smooth and <= B.
std::vector<Rational> axis_values(const PrimeSet& S, const Integer& height, const Integer& denom_bound);

std::vector<std::vector<Rational>> enumerate_affine(const PrimeSet& S, const SearchDomain& domain);
std::vector<Triple> enumerate_projective(const Integer& height);
/// ±∏ p^e with |e| <= E, ascending.
std::vector<Rational> enumerate_units(const PrimeSet& S, long exponent_bound);

/// Number of independent chunks the domain splits into.
std::size_t chunk_count(const Problem& problem, const SearchDomain& domain);
/// Unmerged records of one chunk.
std::vector<PointRecord> run_chunk(const Problem& problem, const SearchDomain& domain, std::size_t chunk);
/// Sorts by point and removes duplicates.
void merge_records(std::vector<PointRecord>& records);

/// Checks the validator precondition and fills the metadata of an empty set.
SolutionSet prepare_run(const Problem& problem, const SearchDomain& domain, const RunOptions& opts);

SolutionSet run(const Problem& problem, const SearchDomain& domain, const RunOptions& opts = {});
SolutionSet run_serial(const Problem& problem, const SearchDomain& domain, const RunOptions& opts = {});

/// Witness record for a point already known to satisfy the predicate.
PointRecord make_record(const Problem& problem, const std::vector<Rational>& point);

bool verify(const Problem& problem, const SolutionSet& solutions);

}  // namespace sintpts
