#include "sintpts/upoly.hpp"

#include <algorithm>

namespace sintpts {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::from_multi(const MultiPoly& p, unsigned var) {
  std::vector<Rational> c(std::max(0, p.degree_in(var)) + 1);
  for (const auto& [m, v] : p.terms()) {
    for (unsigned i = 0; i < m.size(); ++i)
      if (i != var && m[i] != 0) throw DomainError("polynomial is not univariate");
    c[m[var]] += v;
  }
  return UPoly(std::move(c));
}

Rational UPoly::eval(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  std::vector<Rational> c = c_;
  Rational l = c.back();
  for (auto& v : c) v /= l;
  return UPoly(std::move(c));
}

UPoly UPoly::derivative() const {
  std::vector<Rational> c;
  for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * static_cast<unsigned long>(i));
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

UPoly UPoly::divmod(const UPoly& d, UPoly* rem) const {
  if (d.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> r = c_;
  int dd = d.degree();
  std::vector<Rational> q(std::max(0, degree() - dd + 1));
  for (int k = degree(); k >= dd; --k) {
    Rational f = r[k] / d.c_.back();
    if (f == 0) continue;
    q[k - dd] = f;
    for (int i = 0; i <= dd; ++i) r[k - dd + i] -= f * d.c_[i];
  }
  if (rem) *rem = UPoly(std::move(r));
  return UPoly(std::move(q));
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r;
    a.divmod(b, &r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPoly squarefree(const UPoly& p) {
  if (p.degree() <= 0) return p.monic();
  UPoly g = gcd(p, p.derivative());
  return p.divmod(g, nullptr).monic();
}

namespace {

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> out{1};
  Integer m = abs(n);
  for (const Integer& p : prime_factors(m)) {
    unsigned long e = mpz_remove(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    std::size_t sz = out.size();
    for (std::size_t i = 0; i < sz; ++i) {
      Integer v = out[i];
      for (unsigned long k = 0; k < e; ++k) {
        v *= p;
        out.push_back(v);
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly& p) {
  if (p.is_zero()) throw DomainError("rational_roots of zero polynomial");
  std::vector<Rational> out;
  // Strip the root at zero, then clear denominators.
  std::vector<Rational> c = p.coeffs();
  std::size_t low = 0;
  while (c[low] == 0) ++low;
  if (low > 0) out.emplace_back(0);
  c.erase(c.begin(), c.begin() + low);
  if (c.size() > 1) {
    Integer den = 1;
    for (const auto& v : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Integer> ic;
    for (const auto& v : c) ic.push_back(v.get_num() * (den / v.get_den()));
    UPoly q(c);
    for (const Integer& a : divisors(ic.front())) {
      for (const Integer& b : divisors(ic.back())) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        if (g != 1) continue;
        for (int s : {1, -1}) {
          Rational r = make_rational(a * s, b);
          if (q.eval(r) == 0) out.push_back(r);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace sintpts
