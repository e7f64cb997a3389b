#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sintpts {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an operation is applied outside its mathematical domain
/// (zero divisor, non-integral input, failed precondition on values).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a problem description or configuration is malformed.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised for inputs the algorithms deliberately do not handle.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_prime(const Integer& n);

/// Distinct prime factors of |n| in ascending order; n = 0 yields {}.
std::vector<Integer> prime_factors(const Integer& n);

/// Floor of the square root of n >= 0.
Integer isqrt(const Integer& n);

bool is_square(const Integer& n);

/// Writes |n| = f^2 * d with d squarefree; returns d (sign of n discarded).
Integer squarefree_part(const Integer& n, Integer* square_root_of_rest = nullptr);

Rational make_rational(const Integer& num, const Integer& den);

/// max(|num|, den), the naive height of a rational.
Integer height(const Rational& x);

std::string to_string(const Rational& x);

}  // namespace sintpts
