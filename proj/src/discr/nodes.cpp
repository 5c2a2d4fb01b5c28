#include "qda/discr/nodes.hpp"

#include <algorithm>
#include <stdexcept>

namespace qda {

namespace {

// With s = t1 + t2 and p = t1 t2, equal slice points at t1 != t2 mean
//   A(s) - p B(s) = 0  and  D(s, p) = 0,
// where A = 5s^3 + 4s^2 + 3as + 2b and B = 10s + 4 come from the divided
// difference of c(t), and D from that of d(t). Substituting p = A/B into D
// and clearing B^2 gives the univariate N(s).
struct NodeSystem {
  Polynomial A;
  Polynomial B;
  Polynomial N;
  Polynomial disc;  // sign(s^2 - 4p) = sign(disc(s)) * sign(B(s))
  Polynomial c_num;  // c at the node = c_num / B^2
  Polynomial d_num;
  Polynomial den;
};

Polynomial lin(const Rational& c0, const Rational& c1) { return Polynomial{c0, c1}; }

NodeSystem make_system(const Rational& a, const Rational& b) {
  NodeSystem sys;
  const Polynomial s = Polynomial::x();
  const Polynomial s2 = s * s;
  const Polynomial s3 = s2 * s;
  const Polynomial s4 = s3 * s;
  const Polynomial s5 = s4 * s;
  sys.A = Polynomial{2 * b, 3 * a, Rational(4), Rational(5)};
  sys.B = lin(4, 10);
  const Polynomial AB = sys.A * sys.B;
  const Polynomial A2 = sys.A * sys.A;
  const Polynomial B2 = sys.B * sys.B;
  sys.N = Polynomial{Rational(0), b, 2 * a, Rational(3), Rational(4)} * B2 -
          Polynomial{2 * a, Rational(6), Rational(12)} * AB + Rational(4) * A2;
  sys.disc = -Polynomial{4 * b, 6 * a, Rational(6), Rational(5)};
  // Power sums t1^k + t2^k times B^2.
  const Polynomial p1 = s * B2;
  const Polynomial p2 = s2 * B2 - Rational(2) * AB;
  const Polynomial p3 = s3 * B2 - Rational(3) * s * AB;
  const Polynomial p4 = s4 * B2 - Rational(4) * s2 * AB + Rational(2) * A2;
  const Polynomial p5 = s5 * B2 - Rational(5) * s3 * AB + Rational(5) * s * A2;
  const Rational half(1, 2);
  sys.c_num = -(Rational(5) * p4 + Rational(4) * p3 + 3 * a * p2 + 2 * b * p1) * half;
  sys.d_num = (Rational(4) * p5 + Rational(3) * p4 + 2 * a * p3 + b * p2) * half;
  sys.den = B2;
  return sys;
}

struct Candidate {
  Node node;
  int disc_sign;
};

// Enclosures for a root s of N with B(s) != 0.
Node enclose_generic(const NodeSystem& sys, const RealRoot& root, bool real, bool at_origin, const Rational& width) {
  RealRoot r = root;
  for (int iter = 0; iter < 4000; ++iter, r = r.bisected()) {
    Range sr = r.range();
    Range br = eval(sys.B, sr);
    if (br.contains_zero()) continue;
    Range p = eval(sys.A, sr) / br;
    Range den = eval(sys.den, sr);
    if (den.contains_zero()) continue;
    Range c = eval(sys.c_num, sr) / den;
    Range d = eval(sys.d_num, sr) / den;
    Range disc = sr * sr - Rational(4) * p;
    if (real && disc.lo <= 0) continue;
    Node n{r, p, {}, {}, c, d, at_origin};
    const Rational half(1, 2);
    if (real) {
      Range root_disc = sqrt_enclosure(disc);
      n.t1 = half * (sr - root_disc);
      n.t2 = half * (sr + root_disc);
    } else {
      n.t1 = half * sr;
      n.t2 = n.t1;
    }
    if (at_origin) n.c = n.d = Range::exact(Rational(0));
    if (n.c.width() < width && n.d.width() < width && n.t1.width() < width && n.t2.width() < width) return n;
  }
  throw std::logic_error("node enclosure did not converge");
}

// s = -2/5 with A(-2/5) = 0: every p solves the first equation and D(s, p) is
// a quadratic in p.
std::vector<Candidate> special_candidates(const Rational& a, const Rational& b, const Rational& width) {
  std::vector<Candidate> out;
  const Rational s(-2, 5);
  const Polynomial p = Polynomial::x();
  const Polynomial quadratic{4 * s * s * s * s + 3 * s * s * s + 2 * a * s * s + b * s,
                             -(12 * s * s + 6 * s + 2 * a), Rational(4)};
  const Polynomial pw2 = Polynomial::constant(s * s) - Rational(2) * p;
  const Polynomial pw3 = Polynomial::constant(s * s * s) - Rational(3) * s * p;
  const Polynomial pw4 = Polynomial::constant(s * s * s * s) - Rational(4) * s * s * p + Rational(2) * p * p;
  const Polynomial pw5 = Polynomial::constant(s * s * s * s * s) - Rational(5) * s * s * s * p + Rational(5) * s * p * p;
  const Rational half(1, 2);
  const Polynomial c_of_p = -(Rational(5) * pw4 + Rational(4) * pw3 + 3 * a * pw2 + Polynomial::constant(2 * b * s)) * half;
  const Polynomial d_of_p = (Rational(4) * pw5 + Rational(3) * pw4 + 2 * a * pw3 + b * pw2) * half;
  for (const auto& entry : isolate_roots(quadratic)) {
    const RealRoot& pr = entry.root;
    int disc_sign = -pr.compare(s * s / 4);
    if (disc_sign == 0) continue;
    RealRoot r = pr;
    for (;;) {
      Range prange = r.range();
      Range disc = Range::exact(s * s) - Rational(4) * prange;
      Range c = enclose(c_of_p, r, width);
      Range d = enclose(d_of_p, r, width);
      if (disc_sign > 0 && disc.lo <= 0) {
        r = r.bisected();
        continue;
      }
      Node n{RealRoot::rational(s), prange, {}, {}, c, d, pr.compare(Rational(0)) == 0};
      if (disc_sign > 0) {
        Range root_disc = sqrt_enclosure(disc);
        n.t1 = half * (Range::exact(s) - root_disc);
        n.t2 = half * (Range::exact(s) + root_disc);
      } else {
        n.t1 = n.t2 = Range::exact(s / 2);
      }
      if (n.at_origin) n.c = n.d = Range::exact(Rational(0));
      if (n.t1.width() < width && n.t2.width() < width) {
        out.push_back({n, disc_sign});
        break;
      }
      r = r.bisected();
    }
  }
  return out;
}

std::vector<Candidate> candidates(const Rational& a, const Rational& b, const Rational& width) {
  const NodeSystem sys = make_system(a, b);
  const Rational s_special(-2, 5);
  std::vector<Candidate> out;
  for (const auto& entry : isolate_roots(sys.N)) {
    const RealRoot& r = entry.root;
    if (r.compare(s_special) == 0) continue;
    const int disc_sign = r.sign_of(sys.disc) * r.sign_of(sys.B);
    if (disc_sign == 0) continue;  // t1 = t2: a cusp, not a node
    const bool at_origin = r.sign_of(sys.A) == 0;
    out.push_back({enclose_generic(sys, r, disc_sign > 0, at_origin, width), disc_sign});
  }
  if (sys.A(s_special) == 0)
    for (auto& c : special_candidates(a, b, width)) out.push_back(std::move(c));
  return out;
}

std::vector<Node> select(std::vector<Candidate> all, int disc_sign) {
  std::vector<Node> out;
  for (auto& c : all)
    if (c.disc_sign == disc_sign) out.push_back(std::move(c.node));
  std::sort(out.begin(), out.end(), [](const Node& x, const Node& y) {
    if (x.t1.mid() != y.t1.mid()) return x.t1.mid() < y.t1.mid();
    return x.t2.mid() < y.t2.mid();
  });
  return out;
}

}  // namespace

Rational default_node_width() { return pow2(-64); }

std::vector<Node> self_intersections(const Rational& a, const Rational& b, const Rational& width) {
  return select(candidates(a, b, width), 1);
}

std::vector<Node> complex_double_points(const Rational& a, const Rational& b, const Rational& width) {
  return select(candidates(a, b, width), -1);
}

}  // namespace qda
