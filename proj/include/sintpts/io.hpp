#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sintpts/closure.hpp"
#include "sintpts/families.hpp"
#include "sintpts/geometry.hpp"
#include "sintpts/pencil.hpp"
#include "sintpts/search.hpp"

namespace sintpts {

using Json = nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";

/// Parses +, -, *, ^, parentheses, integer and a/b literals over the given variable names.
MultiPoly parse_poly(const std::string& text, unsigned nvars, const std::vector<std::string>& names = {});

/// [num, den]; entries become strings once they leave the int64 range.
Json rational_to_json(const Rational& x);
/// Accepts [num, den], an integer, or a string such as "-3/4".
Rational rational_from_json(const Json& j, const std::string& where = "value");
Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j, const std::string& where = "value");

Json poly_to_json(const MultiPoly& p);
/// Sparse term list of {exponents, numerator, denominator} or an expression string.
MultiPoly poly_from_json(const Json& j, unsigned nvars, const std::string& where = "polynomial");

Json quadratic_to_json(const QuadraticNumber& q);

Json primes_to_json(const PrimeSet& S);
PrimeSet primes_from_json(const Json& j, const std::string& where = "S");

struct ProblemFile {
  Problem problem;
  bool has_domain = false;
  SearchDomain domain;
};

/// Default search domain for a problem kind.
SearchDomain default_domain(const Problem& problem);

ProblemFile problem_from_json(const Json& j);
Json problem_to_json(const Problem& problem);

Json domain_to_json(const SearchDomain& d);
SearchDomain domain_from_json(const Json& j, SearchDomain base);

Json solutions_to_json(const SolutionSet& s);
SolutionSet solutions_from_json(const Json& j);

Json report_to_json(const GeneralPositionReport& r);
Json report_to_json(const CzReport& r, const DivisorConfig& config);
Json report_to_json(const ClosureReport& r, const std::vector<Point2>& points);
Json catalog_to_json(const FamilyCatalog& c);
Json report_to_json(const PhiReport& r);
Json report_to_json(const PencilReport& r);
Json matrix_to_json(const IMatrix& m);
Json triple_to_json(const Triple& t);

Json read_json_file(const std::string& path);
/// Pretty-printed with a trailing newline; "-" writes to stdout.
void write_json_file(const std::string& path, const Json& j);

}  // namespace sintpts
