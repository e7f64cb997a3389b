#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "sintpts/arith.hpp"

namespace sintpts {

/// Finite set of rational primes; the ring of S-integers is Z localized at S.
class PrimeSet {
 public:
  PrimeSet() = default;
  PrimeSet(std::initializer_list<long> primes);
  explicit PrimeSet(const std::vector<Integer>& primes);

  const std::vector<Integer>& primes() const { return primes_; }
  bool contains(const Integer& p) const;
  bool empty() const { return primes_.empty(); }
  std::size_t size() const { return primes_.size(); }
  PrimeSet united(const PrimeSet& other) const;
  /// Primes of this set missing from other.
  PrimeSet minus(const PrimeSet& other) const;
  bool subset_of(const PrimeSet& other) const;
  bool operator==(const PrimeSet& o) const { return primes_ == o.primes_; }

 private:
  std::vector<Integer> primes_;
};

/// p-adic valuation; nullopt encodes +infinity (x = 0).
using Valuation = std::optional<long>;

Valuation val(const Integer& p, const Rational& x);

/// Strips every prime of S from |n|.
Integer strip_s(const Integer& n, const PrimeSet& S);

bool is_s_integral(const Rational& x, const PrimeSet& S);
bool is_s_unit(const Rational& x, const PrimeSet& S);

/// Positive generator of (x) in Z_S with no S-prime factors.
Integer s_free_part(const Rational& x, const PrimeSet& S);

/// a | b in Z_S.
bool divides(const Rational& a, const Rational& b, const PrimeSet& S);

/// Positive generator of the ideal (a, b) in Z_S, prime to S.
Integer s_gcd(const Rational& a, const Rational& b, const PrimeSet& S);

/// All S-smooth positive integers up to bound, ascending.
std::vector<Integer> enumerate_smooth(const PrimeSet& S, const Integer& bound);

}  // namespace sintpts
