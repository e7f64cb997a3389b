#include "sintpts/geometry.hpp"

#include <sstream>

#include "sintpts/sring.hpp"

namespace sintpts {

QuadraticNumber::QuadraticNumber(const Rational& a) : a_(a) {}

QuadraticNumber::QuadraticNumber(const Rational& a, const Rational& b, const Integer& d)
    : a_(a), b_(b), d_(d) {
  if (d_ < 1) throw DomainError("quadratic field radicand must be positive");
  if (squarefree_part(d_) != d_) throw DomainError("radicand must be squarefree");
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
  }
  if (b_ == 0) d_ = 1;
}

namespace {

Integer common_d(const QuadraticNumber& x, const QuadraticNumber& y) {
  if (x.is_rational()) return y.d();
  if (y.is_rational()) return x.d();
  if (x.d() != y.d()) throw DomainError("quadratic numbers from different fields");
  return x.d();
}

}  // namespace

QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
  return {x.a_ + y.a_, x.b_ + y.b_, common_d(x, y)};
}

QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) {
  return {x.a_ - y.a_, x.b_ - y.b_, common_d(x, y)};
}

QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
  Integer d = common_d(x, y);
  return {x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d};
}

QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y) {
  Rational n = y.norm();
  if (n == 0) throw DomainError("division by zero quadratic number");
  QuadraticNumber t = x * y.conjugate();
  return {t.a_ / n, t.b_ / n, t.d_};
}

bool QuadraticNumber::operator==(const QuadraticNumber& o) const {
  return a_ == o.a_ && b_ == o.b_ && (b_ == 0 || d_ == o.d_);
}

std::string QuadraticNumber::to_string() const {
  if (b_ == 0) return a_.get_str();
  std::ostringstream os;
  if (a_ != 0) os << a_.get_str() << (b_ < 0 ? " - " : " + ");
  else if (b_ < 0) os << "-";
  Rational ab = abs(b_);
  if (ab != 1) os << ab.get_str() << "*";
  os << "sqrt(" << d_.get_str() << ")";
  return os.str();
}

int quad_sign(const QuadraticNumber& q) {
  int sa = sgn(q.a()), sb = sgn(q.b());
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: the larger magnitude wins, compared via squares.
  Rational a2 = q.a() * q.a(), b2d = q.b() * q.b() * q.d();
  if (a2 == b2d) return 0;
  return a2 > b2d ? sa : sb;
}

bool operator<(const QuadraticNumber& x, const QuadraticNumber& y) { return quad_sign(x - y) < 0; }
bool operator>(const QuadraticNumber& x, const QuadraticNumber& y) { return quad_sign(x - y) > 0; }

void DivisorConfig::validate() const {
  std::size_t n = labels.size();
  if (Q.size() != n || p.size() != n) throw ValidationError("divisor config: size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (Q[i].size() != n) throw ValidationError("divisor config: matrix not square");
    if (p[i] <= 0) throw ValidationError("divisor config: multiplicities must be positive");
    for (std::size_t j = 0; j < n; ++j)
      if (Q[i][j] != Q[j][i]) throw ValidationError("divisor config: matrix not symmetric");
  }
}

Rational d_dot(const DivisorConfig& config, std::size_t i) {
  if (i >= config.labels.size()) throw ValidationError("component index out of range");
  Rational s = 0;
  for (std::size_t j = 0; j < config.p.size(); ++j) s += config.p[j] * config.Q[i][j];
  return s;
}

Rational d_squared(const DivisorConfig& config) {
  Rational s = 0;
  for (std::size_t i = 0; i < config.p.size(); ++i) s += config.p[i] * d_dot(config, i);
  return s;
}

namespace {

// sqrt of a nonnegative rational as b*sqrt(d).
QuadraticNumber rational_sqrt(const Rational& r) {
  Integer nd = r.get_num() * r.get_den(), f;
  Integer d = squarefree_part(nd, &f);
  if (nd == 0) return QuadraticNumber(0);
  return QuadraticNumber(0, Rational(f, r.get_den()), d);
}

}  // namespace

QuadraticNumber xi_solve(const DivisorConfig& config, std::size_t i) {
  Rational a = config.Q[i][i], dd = d_dot(config, i), d2 = d_squared(config);
  if (a == 0) {
    if (dd == 0) throw DomainError("xi equation degenerate: D.D_i = 0 and D_i^2 = 0");
    Rational xi = d2 / (2 * dd);
    if (xi <= 0) throw DomainError("xi equation has no positive root");
    return QuadraticNumber(xi);
  }
  // a ξ² − 2 dd ξ + d2 = 0  ⇒  ξ = (dd ± sqrt(dd² − a d2)) / a
  Rational disc = dd * dd - a * d2;
  if (disc < 0) throw DomainError("xi equation has no real root");
  QuadraticNumber s = rational_sqrt(disc);
  QuadraticNumber r1 = (QuadraticNumber(dd) + s) / QuadraticNumber(a);
  QuadraticNumber r2 = (QuadraticNumber(dd) - s) / QuadraticNumber(a);
  bool p1 = quad_sign(r1) > 0, p2 = quad_sign(r2) > 0;
  if (!p1 && !p2) throw DomainError("xi equation has no positive root");
  if (p1 && p2) return r1 < r2 ? r1 : r2;
  return p1 ? r1 : r2;
}

QuadraticNumber cz_margin(const DivisorConfig& config, std::size_t i) {
  QuadraticNumber xi = xi_solve(config, i);
  Rational d2 = d_squared(config), dd = d_dot(config, i);
  return QuadraticNumber(2 * d2) * xi - QuadraticNumber(dd) * xi * xi -
         QuadraticNumber(3 * config.p[i] * d2);
}

bool cz_check(const DivisorConfig& config, std::size_t i) { return quad_sign(cz_margin(config, i)) > 0; }

CzReport cz_check_all(const DivisorConfig& config) {
  config.validate();
  CzReport rep;
  rep.d_squared = d_squared(config);
  rep.overall = rep.d_squared > 0;
  for (std::size_t i = 0; i < config.labels.size(); ++i) {
    ComponentVerdict v;
    v.label = config.labels[i];
    v.d_dot = d_dot(config, i);
    try {
      v.xi = xi_solve(config, i);
      v.solved = true;
      v.margin = cz_margin(config, i);
      v.pass = quad_sign(v.margin) > 0;
    } catch (const DomainError& e) {
      v.error = e.what();
    }
    rep.overall = rep.overall && v.pass;
    rep.components.push_back(std::move(v));
  }
  return rep;
}

namespace {

DivisorConfig blank(const std::string& name, const std::vector<std::string>& labels) {
  DivisorConfig c;
  c.name = name;
  c.labels = labels;
  c.Q.assign(labels.size(), std::vector<Rational>(labels.size(), 0));
  c.p.assign(labels.size(), 1);
  return c;
}

void scale_to_integers(DivisorConfig& c) {
  Integer l = 1;
  for (const auto& v : c.p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  for (auto& v : c.p) v *= l;
  c.scale = l;
  if (l != 1) c.notes.push_back("multiplicities scaled by " + l.get_str());
}

}  // namespace

DivisorConfig preset_ngon(int n) {
  if (n < 3) throw DomainError("ngon preset needs n >= 3");
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("D" + std::to_string(i));
  DivisorConfig c = blank("ngon(" + std::to_string(n) + ")", labels);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) c.Q[i][j] = -1;
      else if ((i + 1) % n == j || (j + 1) % n == i) c.Q[i][j] = 0;
      else c.Q[i][j] = 1;
    }
  return c;
}

DivisorConfig preset_thm2(long d1, long d2, long d3) {
  if (d1 < 1 || d2 < 1 || d3 < 1) throw DomainError("thm2 preset needs degrees >= 1");
  DivisorConfig c = blank("thm2(" + std::to_string(d1) + "," + std::to_string(d2) + "," +
                              std::to_string(d3) + ")",
                          {"D1", "D2", "D3", "H"});
  long d[3] = {d1, d2, d3};
  Rational cc = Rational(d1) * d2 * d3;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) c.Q[i][j] = i == j ? Rational(0) : Rational(d[i] * d[j]);
    c.Q[i][3] = c.Q[3][i] = d[i];
    c.p[i] = cc / d[i];
  }
  c.Q[3][3] = 1;
  c.p[3] = cc * 3 / 4;
  scale_to_integers(c);
  return c;
}

DivisorConfig preset_prop2(long cc, long h) {
  if (cc < 1 || h < 1) throw DomainError("prop2 preset needs c, h >= 1");
  DivisorConfig c = blank("prop2(" + std::to_string(cc) + "," + std::to_string(h) + ")",
                          {"D1", "D2", "D3", "H"});
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) c.Q[i][j] = i == j ? Rational(0) : Rational(cc * cc);
    c.Q[i][3] = c.Q[3][i] = cc * h;
  }
  c.Q[3][3] = h * h;
  c.p[3] = Rational(3 * cc, 4 * h);
  c.p[3].canonicalize();
  scale_to_integers(c);
  return c;
}

DivisorConfig preset_delpezzo_conics() {
  DivisorConfig c = blank("delpezzo_conics", {"C1", "C2", "C3", "C4", "C5"});
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) c.Q[i][j] = i == j ? 0 : 1;
  return c;
}

DivisorConfig preset_delpezzo2(const std::vector<long>& cdots, long c_self) {
  if (cdots.size() != 3) throw ValidationError("delpezzo2 preset needs three values H_i.C");
  for (long v : cdots)
    if (v < 1) throw DomainError("delpezzo2 preset needs H_i.C >= 1");
  DivisorConfig c = blank("delpezzo2", {"H1", "H2", "H3", "C"});
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) c.Q[i][j] = 4;
    c.Q[i][3] = c.Q[3][i] = cdots[i];
  }
  c.Q[3][3] = c_self;
  return c;
}

DivisorConfig preset_hirzebruch(long d) {
  if (d < 1) throw DomainError("hirzebruch preset needs d >= 1");
  DivisorConfig c = blank("hirzebruch(" + std::to_string(d) + ")", {"D1", "D2", "D3", "D4"});
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) c.Q[i][j] = d;
    c.Q[i][3] = c.Q[3][i] = 1;
  }
  c.Q[3][3] = 0;
  c.notes.push_back("fiber-section intersection D_i.D4 set to 1");
  return c;
}

Integer ngon_reduction_value(long n) {
  Integer N = n;
  return 7 * N * N * N - 70 * N * N + 207 * N - 192;
}

QuadraticNumber prop2_xi_closed_form(const Rational& c, const Rational& h, const Rational& p) {
  return QuadraticNumber(3 * c / h + p, -c / h, 3);
}

Prop2Inequalities prop2_inequalities(const Rational& c, const Rational& h, const Rational& p) {
  Prop2Inequalities r;
  r.di_left = p * p * h * h + 2 * p * c * h;
  r.di_right = 2 * c * c;
  r.di_holds = r.di_left > r.di_right;
  r.h_left = QuadraticNumber(6 * c * c * h) * QuadraticNumber(3 * c + p * h, -c, 3);
  r.h_right = (3 * c * h - 2 * p * h * h) * (6 * c * c + 6 * p * c * h + p * p * h * h);
  r.h_holds = r.h_left < QuadraticNumber(r.h_right);
  return r;
}

}  // namespace sintpts
