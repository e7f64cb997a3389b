#pragma once

#include <string>
#include <vector>

#include "sintpts/families.hpp"

namespace sintpts {

struct PencilMember {
  Rational r;           // member r*A + B of the pencil
  IMatrix Q;            // primitive integer matrix of the member
  Triple mark_a, mark_b;
  Triple ell;
  OrbitGenerator gen;
  Triple seed;
  std::vector<Triple> points;  // certified orbit points
  std::size_t rejected = 0;    // orbit points failing a certificate
};

struct PencilReport {
  std::vector<Triple> lines;
  std::vector<Triple> base_points;  // P_i = L_i ∩ L_{i+1}, i = 1..4
  PrimeSet W;                       // working primes: S and the configuration's bad primes
  std::vector<PencilMember> members;
  std::vector<std::string> log;
  std::size_t total_points() const;
};

/// Valuation certificates at the five blown-up nodes.
bool pencil_certified(const std::vector<Triple>& lines, const Triple& point, const PrimeSet& W);

PencilReport thm8_pencil(const std::vector<Triple>& lines, const PrimeSet& S, std::size_t member_count,
                         std::size_t points_per_member, long unit_exponent = 4);

}  // namespace sintpts
