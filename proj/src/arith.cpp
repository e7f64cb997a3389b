#include "sintpts/arith.hpp"

#include <algorithm>

namespace sintpts {

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

namespace {

// Pollard-Brent; n composite and odd.
Integer pollard_factor(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1, q = 1, ys;
    auto f = [&](const Integer& v) {
      Integer r = v * v + c;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
      return r;
    };
    unsigned long r = 1;
    const unsigned long m = 64;
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Integer diff = abs(x - y);
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && d == 1);
      r *= 2;
    } while (d == 1);
    if (d == n) {
      do {
        ys = f(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (d == 1);
    }
    if (d != n) return d;
  }
}

void factor_into(Integer n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Integer d = pollard_factor(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<Integer> prime_factors(const Integer& n) {
  std::vector<Integer> out;
  Integer m = abs(n);
  if (m <= 1) return out;
  for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL}) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      out.emplace_back(p);
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) m /= p;
    }
  }
  for (unsigned long p = 17; p < 10000 && m > 1; p += 2) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      out.emplace_back(p);
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) m /= p;
    }
  }
  std::vector<Integer> big;
  factor_into(m, big);
  out.insert(out.end(), big.begin(), big.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw DomainError("isqrt of negative number");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Integer squarefree_part(const Integer& n, Integer* square_root_of_rest) {
  Integer m = abs(n);
  Integer d = 1, f = 1;
  if (m == 0) {
    if (square_root_of_rest) *square_root_of_rest = 0;
    return 0;
  }
  for (const Integer& p : prime_factors(m)) {
    unsigned long e = mpz_remove(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    if (e % 2 == 1) d *= p;
    Integer pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), e / 2);
    f *= pk;
  }
  if (square_root_of_rest) *square_root_of_rest = f;
  return d;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer height(const Rational& x) {
  Integer a = abs(x.get_num());
  return a > x.get_den() ? a : Integer(x.get_den());
}

std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace sintpts
