#include "qda/discr/slice.hpp"

#include <algorithm>
#include <cmath>

namespace qda {

SlicePoint slice_point(const Rational& t, const Rational& a, const Rational& b) {
  const Rational t2 = t * t;
  const Rational t3 = t2 * t;
  const Rational t4 = t3 * t;
  return {-(5 * t4 + 4 * t3 + 3 * a * t2 + 2 * b * t), 4 * t4 * t + 3 * t4 + 2 * a * t3 + b * t2};
}

Polynomial slice_c(const Rational& a, const Rational& b) {
  return Polynomial{Rational(0), -2 * b, -3 * a, Rational(-4), Rational(-5)};
}

Polynomial slice_d(const Rational& a, const Rational& b) {
  return Polynomial{Rational(0), Rational(0), b, 2 * a, Rational(3), Rational(4)};
}

Polynomial cusp_polynomial(const Rational& a, const Rational& b) {
  return Polynomial{b, 3 * a, Rational(6), Rational(10)};
}

MultiplicityVector cusp_parameters(const Rational& a, const Rational& b) {
  return isolate_roots(cusp_polynomial(a, b));
}

Rational cusp_vertex(const RealRoot& root) {
  const RealRoot r = root.refined(pow2(-40));
  if (r.is_rational()) return r.lower();
  const Rational guess = smallest_denominator_between(r.lower(), r.upper());
  return r.polynomial()(guess) == 0 ? guess : r.midpoint();
}

namespace {

void widen(Rational& lo, Rational& hi, const Rational& x) {
  lo = std::min(lo, x);
  hi = std::max(hi, x);
}

double turning(const Rational& t0, const Rational& t1) {
  // The tangent direction at t is (1, -t).
  return std::abs(std::atan(to_double(t1)) - std::atan(to_double(t0)));
}

// Appends the right ends of a subdivision of [left, right] in which each piece
// turns by at most 0.05 rad.
void subdivide(const Rational& left, const Rational& right, int depth, std::vector<Rational>& out) {
  constexpr double kMaxTurn = 0.05;
  constexpr int kMaxDepth = 10;
  if (depth < kMaxDepth && turning(left, right) > kMaxTurn) {
    Rational mid = (left + right) / 2;
    subdivide(left, mid, depth + 1, out);
    subdivide(mid, right, depth + 1, out);
    return;
  }
  out.push_back(right);
}

}  // namespace

SliceCurve build_slice(const Rational& a, const Rational& b, std::optional<Interval> window, int n_samples) {
  if (n_samples < 2) throw std::invalid_argument("build_slice needs at least two samples");
  SliceCurve sc;
  sc.a = a;
  sc.b = b;
  sc.cusps = cusp_parameters(a, b);
  sc.nodes = self_intersections(a, b);
  sc.c_crossings = isolate_roots(slice_c(a, b));
  sc.d_crossings = isolate_roots(slice_d(a, b));

  Rational lo = 0, hi = 0;
  for (const auto* mv : {&sc.cusps, &sc.c_crossings, &sc.d_crossings})
    for (const auto& e : *mv) {
      widen(lo, hi, e.root.lower());
      widen(lo, hi, e.root.upper());
    }
  for (const auto& n : sc.nodes) {
    widen(lo, hi, n.t1.lo);
    widen(lo, hi, n.t2.hi);
  }
  lo -= Rational(1, 2);
  hi += Rational(1, 2);
  if (window) {
    window->validate();
    if (window->lower) lo = std::min(lo, *window->lower);
    if (window->upper) hi = std::max(hi, *window->upper);
  }
  sc.t_lo = lo;
  sc.t_hi = hi;

  std::vector<Rational> ts;
  for (int k = 0; k < n_samples; ++k) ts.push_back(lo + (hi - lo) * k / (n_samples - 1));
  for (const auto& e : sc.cusps) ts.push_back(cusp_vertex(e.root));
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  std::vector<Rational> refined{ts.front()};
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) subdivide(ts[i], ts[i + 1], 0, refined);
  for (const auto& t : refined) {
    SlicePoint pt = slice_point(t, a, b);
    sc.samples.push_back({t, pt.c, pt.d});
  }
  return sc;
}

}  // namespace qda
