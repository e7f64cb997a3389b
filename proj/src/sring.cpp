#include "sintpts/sring.hpp"

#include <algorithm>

namespace sintpts {

namespace {

void canonicalize(std::vector<Integer>& ps) {
  for (const Integer& p : ps)
    if (!is_prime(p)) throw ValidationError("not a prime: " + p.get_str());
  std::sort(ps.begin(), ps.end());
  if (std::adjacent_find(ps.begin(), ps.end()) != ps.end())
    throw ValidationError("duplicate prime in S");
}

}  // namespace

PrimeSet::PrimeSet(std::initializer_list<long> primes) {
  for (long p : primes) primes_.emplace_back(p);
  canonicalize(primes_);
}

PrimeSet::PrimeSet(const std::vector<Integer>& primes) : primes_(primes) {
  canonicalize(primes_);
}

bool PrimeSet::contains(const Integer& p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

PrimeSet PrimeSet::united(const PrimeSet& other) const {
  std::vector<Integer> out;
  std::set_union(primes_.begin(), primes_.end(), other.primes_.begin(),
                 other.primes_.end(), std::back_inserter(out));
  PrimeSet r;
  r.primes_ = std::move(out);
  return r;
}

PrimeSet PrimeSet::minus(const PrimeSet& other) const {
  PrimeSet r;
  std::set_difference(primes_.begin(), primes_.end(), other.primes_.begin(),
                      other.primes_.end(), std::back_inserter(r.primes_));
  return r;
}

bool PrimeSet::subset_of(const PrimeSet& other) const {
  return std::includes(other.primes_.begin(), other.primes_.end(),
                       primes_.begin(), primes_.end());
}

Valuation val(const Integer& p, const Rational& x) {
  if (!is_prime(p)) throw DomainError("val: not a prime: " + p.get_str());
  if (x == 0) return std::nullopt;
  Integer n = x.get_num(), d = x.get_den();
  long vn = static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
  long vd = static_cast<long>(mpz_remove(d.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t()));
  return vn - vd;
}

Integer strip_s(const Integer& n, const PrimeSet& S) {
  Integer m = abs(n);
  if (m == 0) return m;
  for (const Integer& p : S.primes())
    mpz_remove(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
  return m;
}

bool is_s_integral(const Rational& x, const PrimeSet& S) {
  return strip_s(x.get_den(), S) == 1;
}

bool is_s_unit(const Rational& x, const PrimeSet& S) {
  return x != 0 && strip_s(x.get_num(), S) == 1 && strip_s(x.get_den(), S) == 1;
}

Integer s_free_part(const Rational& x, const PrimeSet& S) {
  if (x == 0) throw DomainError("s_free_part of zero");
  if (!is_s_integral(x, S)) throw DomainError("s_free_part: not S-integral: " + x.get_str());
  return strip_s(x.get_num(), S);
}

bool divides(const Rational& a, const Rational& b, const PrimeSet& S) {
  if (a == 0) throw DomainError("divides: zero divisor");
  Rational q = b / a;
  return is_s_integral(q, S);
}

Integer s_gcd(const Rational& a, const Rational& b, const PrimeSet& S) {
  if (a == 0 && b == 0) throw DomainError("s_gcd of two zeros");
  if (a == 0) return s_free_part(b, S);
  if (b == 0) return s_free_part(a, S);
  Integer g;
  Integer fa = s_free_part(a, S), fb = s_free_part(b, S);
  mpz_gcd(g.get_mpz_t(), fa.get_mpz_t(), fb.get_mpz_t());
  return g;
}

std::vector<Integer> enumerate_smooth(const PrimeSet& S, const Integer& bound) {
  if (bound < 1) throw DomainError("enumerate_smooth: bound must be positive");
  std::vector<Integer> out{1};
  for (const Integer& p : S.primes()) {
    std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) {
      Integer v = out[i] * p;
      while (v <= bound) {
        out.push_back(v);
        v *= p;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sintpts
