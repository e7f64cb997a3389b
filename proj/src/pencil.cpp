#include "sintpts/pencil.hpp"

#include <algorithm>

#include "sintpts/search.hpp"

namespace sintpts {

std::size_t PencilReport::total_points() const {
  std::size_t n = 0;
  for (const auto& m : members) n += m.points.size();
  return n;
}

namespace {

MultiPoly linear(const Triple& l) {
  MultiPoly p(3);
  for (unsigned i = 0; i < 3; ++i) {
    Monomial m(3, 0);
    m[i] = 1;
    p.add_term(m, Rational(l[i]));
  }
  return p;
}

// Symmetric matrix of the product form l1 * l2, doubled to stay integral.
IMatrix product_form(const Triple& a, const Triple& b) {
  IMatrix m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = a[i] * b[j] + a[j] * b[i];
  return m;
}

bool proportional(const Triple& a, const Triple& b) {
  Triple c = cross3(a, b);
  return c[0] == 0 && c[1] == 0 && c[2] == 0;
}

// Second intersection of the conic with the line through p0 on it.
Triple second_point(const IMatrix& Q, const Triple& line, const Triple& p0) {
  Triple q{0, 0, 0};
  for (int k = 0; k < 3; ++k) {
    Triple e{0, 0, 0};
    e[k] = 1;
    Triple c = primitive3(cross3(line, e));
    if (c == Triple{0, 0, 0} || proportional(c, p0)) continue;
    q = c;
    break;
  }
  Integer pq = quad_form(Q, p0, q), qq = quad_form(Q, q, q);
  Triple r;
  for (int i = 0; i < 3; ++i) r[i] = p0[i] * qq - 2 * pq * q[i];
  return primitive3(r);
}

}  // namespace

bool pencil_certified(const std::vector<Triple>& L, const Triple& point, const PrimeSet& W) {
  std::vector<Rational> pt{Rational(point[0]), Rational(point[1]), Rational(point[2])};
  std::vector<MultiPoly> F;
  for (const auto& l : L) F.push_back(linear(l));
  struct Node {
    MultiPoly phi, psi;
  };
  const std::vector<Node> nodes = {
      {F[0], F[1]}, {F[4], F[3]}, {F[1], F[0] * F[2]}, {F[2], F[1] * F[3]}, {F[3], F[2] * F[4]}};
  for (const auto& n : nodes) {
    if (n.phi.eval(pt) == 0) return false;
    if (!blowup_integral(n.phi, n.psi, pt, W)) return false;
  }
  return true;
}

PencilReport thm8_pencil(const std::vector<Triple>& lines, const PrimeSet& S, std::size_t member_count,
                         std::size_t points_per_member, long unit_exponent) {
  if (lines.size() != 5) throw ValidationError("the pencil construction needs exactly five lines");
  PencilReport rep;
  rep.lines = lines;
  for (const auto& l : lines)
    if (l == Triple{0, 0, 0}) throw ValidationError("zero line");
  std::vector<Rational> dets;
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = a + 1; b < 5; ++b) {
      if (proportional(lines[a], lines[b])) throw ValidationError("two lines are proportional");
      for (std::size_t c = b + 1; c < 5; ++c) {
        IMatrix m{lines[a], lines[b], lines[c]};
        Integer d = det3(m);
        if (d == 0) throw ValidationError("three lines are concurrent");
        dets.emplace_back(d);
      }
    }
  rep.W = S.united(primes_of(dets));
  const PrimeSet& W = rep.W;
  for (int i = 0; i < 4; ++i) rep.base_points.push_back(primitive3(cross3(lines[i], lines[i + 1])));
  const auto& P = rep.base_points;
  Triple M = primitive3(cross3(P[0], P[3]));
  IMatrix A = product_form(lines[1], lines[3]);
  IMatrix B = product_form(lines[2], M);
  const Triple seed = P[1];

  std::vector<Rational> params = enumerate_units(W, unit_exponent);
  std::stable_sort(params.begin(), params.end(), [](const Rational& x, const Rational& y) {
    Integer hx = height(x), hy = height(y);
    return hx != hy ? hx < hy : x < y;
  });

  for (const Rational& r : params) {
    if (rep.members.size() >= member_count) break;
    IMatrix Qi;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) Qi[i][j] = r.get_num() * A[i][j] + r.get_den() * B[i][j];
    Qi = primitive_matrix(Qi);
    std::string tag = "member r=" + r.get_str() + ": ";
    Integer det = det3(Qi);
    if (det == 0) {
      rep.log.push_back(tag + "skipped, degenerate conic");
      continue;
    }
    if (!is_square(strip_s(det, W))) {
      rep.log.push_back(tag + "skipped, discriminant is not a unit times a square");
      continue;
    }
    PencilMember mem;
    mem.r = r;
    mem.Q = Qi;
    mem.mark_a = second_point(Qi, lines[0], P[0]);
    mem.mark_b = second_point(Qi, lines[4], P[3]);
    if (proportional(mem.mark_a, mem.mark_b)) {
      rep.log.push_back(tag + "skipped, marks coincide");
      continue;
    }
    mem.ell = primitive3(cross3(mem.mark_a, mem.mark_b));
    Integer ls = dot3(mem.ell, seed);
    if (ls == 0 || strip_s(ls, W) != 1) {
      rep.log.push_back(tag + "skipped, seed P2 is not integral with respect to the marks");
      continue;
    }
    ConicWithMarks conic{Qi, mem.ell};
    try {
      mem.gen = stabilizer_map(conic, W);
    } catch (const UnsupportedError& e) {
      rep.log.push_back(tag + "skipped, " + e.what());
      continue;
    }
    mem.seed = seed;
    rep.members.push_back(std::move(mem));
  }

  std::vector<std::string> errors(rep.members.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < rep.members.size(); ++k) {
    PencilMember& mem = rep.members[k];
    try {
      ConicWithMarks conic{mem.Q, mem.ell};
      PrimeSet Wm = W.united(mem.gen.bad_primes_added);
      for (const Triple& pt : generate_orbit(conic, mem.gen, mem.seed, points_per_member, W)) {
        if (pencil_certified(lines, pt, Wm)) mem.points.push_back(pt);
        else ++mem.rejected;
      }
    } catch (const std::exception& e) {
      errors[k] = e.what();
    }
  }
  for (std::size_t k = 0; k < rep.members.size(); ++k) {
    const auto& mem = rep.members[k];
    std::string tag = "member r=" + mem.r.get_str() + ": ";
    if (!errors[k].empty()) rep.log.push_back(tag + "orbit failed, " + errors[k]);
    else
      rep.log.push_back(tag + std::to_string(mem.points.size()) + " certified, " +
                        std::to_string(mem.rejected) + " rejected");
  }
  return rep;
}

}  // namespace sintpts
