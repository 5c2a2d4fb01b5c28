#pragma once

#include <optional>
#include <vector>

#include "qda/discr/nodes.hpp"
#include "qda/ratpoly/interval.hpp"
#include "qda/ratpoly/roots.hpp"

namespace qda {

struct SlicePoint {
  Rational c;
  Rational d;
  friend bool operator==(const SlicePoint&, const SlicePoint&) = default;
};

/// The (c, d) for which t is a double root of P at fixed (a, b).
SlicePoint slice_point(const Rational& t, const Rational& a, const Rational& b);

/// c(t) and d(t) as polynomials in t.
Polynomial slice_c(const Rational& a, const Rational& b);
Polynomial slice_d(const Rational& a, const Rational& b);

/// 10t^3 + 6t^2 + 3at + b, whose roots are the cusp parameters.
Polynomial cusp_polynomial(const Rational& a, const Rational& b);

/// Real cusp parameters with multiplicities, ordered by t.
MultiplicityVector cusp_parameters(const Rational& a, const Rational& b);

/// A rational stand-in for a cusp parameter: the root itself when it is
/// rational, otherwise a point within 2^-40 of it.
Rational cusp_vertex(const RealRoot& root);

struct SliceSample {
  Rational t;
  Rational c;
  Rational d;
};

struct SliceCurve {
  Rational a;
  Rational b;
  Rational t_lo;
  Rational t_hi;
  std::vector<SliceSample> samples;  // increasing t
  MultiplicityVector cusps;
  std::vector<Node> nodes;
  MultiplicityVector c_crossings;  // parameters with c(t) = 0
  MultiplicityVector d_crossings;  // parameters with d(t) = 0
};

/// Samples the slice over `window` (default: every singular parameter and
/// axis crossing plus a margin of 1/2). The window is always extended to
/// contain those features. Cusp parameters are inserted as sample vertices
/// (rational approximations within 2^-40) and segments where the tangent
/// turns quickly are subdivided.
SliceCurve build_slice(const Rational& a, const Rational& b, std::optional<Interval> window = std::nullopt,
                       int n_samples = 512);

}  // namespace qda
