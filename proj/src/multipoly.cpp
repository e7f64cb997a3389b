#include "sintpts/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sintpts {

namespace {

unsigned total(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

void check_arity(unsigned n) {
  if (n < 1 || n > 3) throw ValidationError("polynomial arity must be 1, 2 or 3");
}

}  // namespace

bool grlex_less(const Monomial& a, const Monomial& b) {
  unsigned ta = total(a), tb = total(b);
  if (ta != tb) return ta < tb;
  return a < b;
}

std::vector<std::string> default_var_names(unsigned nvars) {
  if (nvars == 1) return {"t"};
  if (nvars == 2) return {"x", "y"};
  return {"x", "y", "z"};
}

MultiPoly::MultiPoly(unsigned nvars) : nvars_(nvars) { check_arity(nvars); }

MultiPoly MultiPoly::constant(unsigned nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(unsigned nvars, unsigned index) {
  if (index >= nvars) throw ValidationError("variable index out of range");
  MultiPoly p(nvars);
  Monomial m(nvars, 0);
  m[index] = 1;
  p.add_term(m, 1);
  return p;
}

MultiPoly MultiPoly::term(const Monomial& exps, const Rational& c) {
  MultiPoly p(static_cast<unsigned>(exps.size()));
  p.add_term(exps, c);
  return p;
}

void MultiPoly::add_term(const Monomial& exps, const Rational& c) {
  if (exps.size() != nvars_) throw ValidationError("exponent vector arity mismatch");
  if (c == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational MultiPoly::coefficient(const Monomial& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total(terms_.begin()->first) == 0);
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(total(m)));
  return d;
}

int MultiPoly::degree_in(unsigned var) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[var]));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  int d = degree();
  for (const auto& [m, c] : terms_)
    if (static_cast<int>(total(m)) != d) return false;
  return true;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
  if (point.size() != nvars_) throw ValidationError("eval: arity mismatch");
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (unsigned i = 0; i < nvars_; ++i) {
      for (unsigned e = 0; e < m[i]; ++e) t *= point[i];
    }
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::eval_var(unsigned var, const Rational& value) const {
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (unsigned e = 0; e < m[var]; ++e) t *= value;
    Monomial mm = m;
    mm[var] = 0;
    r.add_term(mm, t);
  }
  return r;
}

MultiPoly MultiPoly::substitute(unsigned var, const MultiPoly& repl) const {
  std::vector<MultiPoly> cs = coeffs_in(var);
  MultiPoly r(nvars_);
  MultiPoly power = constant(nvars_, 1);
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (k > 0) power = power * repl;
    if (!cs[k].is_zero()) r += cs[k] * power;
  }
  return r;
}

MultiPoly MultiPoly::derivative(unsigned var) const {
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial mm = m;
    mm[var] -= 1;
    r.add_term(mm, c * m[var]);
  }
  return r;
}

MultiPoly MultiPoly::leading_form() const {
  if (is_zero()) throw DomainError("leading_form of zero polynomial");
  int d = degree();
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_)
    if (static_cast<int>(total(m)) == d) r.add_term(m, c);
  return r;
}

std::vector<MultiPoly> MultiPoly::coeffs_in(unsigned var) const {
  int d = degree_in(var);
  std::vector<MultiPoly> out(d < 0 ? 0 : d + 1, MultiPoly(nvars_));
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    mm[var] = 0;
    out[m[var]].add_term(mm, c);
  }
  return out;
}

std::pair<Monomial, Rational> MultiPoly::leading_term() const {
  if (is_zero()) throw DomainError("leading_term of zero polynomial");
  auto best = terms_.begin();
  for (auto it = terms_.begin(); it != terms_.end(); ++it)
    if (grlex_less(best->first, it->first)) best = it;
  return *best;
}

MultiPoly MultiPoly::primitive() const {
  if (is_zero()) return *this;
  Integer den = 1, num = 0;
  for (const auto& [m, c] : terms_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& [m, c] : terms_) {
    Integer v = c.get_num() * (den / c.get_den());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
  }
  Rational scale(den, num);
  scale.canonicalize();
  if (leading_term().second < 0) scale = -scale;
  return *this * scale;
}

MultiPoly MultiPoly::with_nvars(unsigned n) const {
  MultiPoly r(n);
  for (const auto& [m, c] : terms_) {
    Monomial mm(n, 0);
    for (unsigned i = 0; i < m.size(); ++i) {
      if (i < n) {
        mm[i] = m[i];
      } else if (m[i] != 0) {
        throw ValidationError("with_nvars: dropping a variable that occurs");
      }
    }
    r.add_term(mm, c);
  }
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.nvars_ != nvars_) throw ValidationError("arity mismatch in +");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.nvars_ != nvars_) throw ValidationError("arity mismatch in -");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw ValidationError("arity mismatch in *");
  MultiPoly r(a.nvars_);
  Monomial m(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (unsigned i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

bool MultiPoly::operator<(const MultiPoly& o) const {
  auto sorted = [](const MultiPoly& p) {
    std::vector<std::pair<Monomial, Rational>> v(p.terms_.begin(), p.terms_.end());
    std::sort(v.begin(), v.end(),
              [](const auto& x, const auto& y) { return grlex_less(y.first, x.first); });
    return v;
  };
  auto a = sorted(*this), b = sorted(o);
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i].first != b[i].first) return grlex_less(b[i].first, a[i].first);
    if (a[i].second != b[i].second) return a[i].second < b[i].second;
  }
  return a.size() < b.size();
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(nvars_, 1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names_in) const {
  if (is_zero()) return "0";
  std::vector<std::string> names = names_in.empty() ? default_var_names(nvars_) : names_in;
  std::vector<std::pair<Monomial, Rational>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(),
            [](const auto& x, const auto& y) { return grlex_less(y.first, x.first); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : v) {
    Rational a = abs(c);
    if (c < 0) os << (first ? "-" : " - ");
    else if (!first) os << " + ";
    first = false;
    bool unit = total(m) > 0 && a == 1;
    if (!unit) os << a.get_str();
    bool need_star = !unit;
    for (unsigned i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (need_star) os << "*";
      os << names[i];
      if (m[i] > 1) os << "^" << m[i];
      need_star = true;
    }
  }
  return os.str();
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m, unsigned nvars) {
  std::size_t n = m.size();
  if (n == 0) return MultiPoly::constant(nvars, 1);
  bool numeric = true;
  for (const auto& row : m)
    for (const auto& e : row) numeric = numeric && e.is_constant();
  if (numeric) {
    std::vector<std::vector<Rational>> r(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) r[i][j] = m[i][j].coefficient(Monomial(nvars, 0));
    return MultiPoly::constant(nvars, determinant(r));
  }
  if (n > 24) throw UnsupportedError("polynomial determinant too large");
  // Laplace expansion over column subsets: dp[mask] sums signed products of
  // the first popcount(mask) rows placed into the columns of mask.
  std::map<unsigned long, MultiPoly> dp;
  dp.emplace(0UL, MultiPoly::constant(nvars, 1));
  for (std::size_t row = 0; row < n; ++row) {
    std::map<unsigned long, MultiPoly> next;
    for (const auto& [mask, val] : dp) {
      for (std::size_t col = 0; col < n; ++col) {
        if (mask & (1UL << col) || m[row][col].is_zero()) continue;
        int above = __builtin_popcountl(mask >> col);
        MultiPoly t = val * m[row][col];
        if (above % 2) t = -t;
        auto [it, fresh] = next.emplace(mask | (1UL << col), t);
        if (!fresh) it->second += t;
      }
    }
    dp = std::move(next);
  }
  auto it = dp.find((1UL << n) - 1);
  return it == dp.end() ? MultiPoly(nvars) : it->second;
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, unsigned var) {
  if (p.nvars() != q.nvars()) throw ValidationError("resultant: arity mismatch");
  unsigned nv = p.nvars();
  if (var >= nv) throw ValidationError("resultant: variable out of range");
  int m = p.degree_in(var), n = q.degree_in(var);
  if (p.is_zero() || q.is_zero()) return MultiPoly(nv);
  if (m <= 0 && n <= 0) return MultiPoly::constant(nv, 1);
  if (m <= 0) return p.pow(n);
  if (n <= 0) return q.pow(m);
  auto pc = p.coeffs_in(var), qc = q.coeffs_in(var);
  std::size_t size = m + n;
  std::vector<std::vector<MultiPoly>> mat(size, std::vector<MultiPoly>(size, MultiPoly(nv)));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) mat[r][r + k] = pc[m - k];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) mat[n + r][r + k] = qc[n - k];
  return determinant(mat, nv);
}

}  // namespace sintpts
