#pragma once

#include <string>

#include "qda/ratpoly/polynomial.hpp"
#include "qda/ratpoly/roots.hpp"

namespace qda {

/// A point of the family x^5 + x^4 + a x^3 + b x^2 + c x + d.
struct QuinticParams {
  Rational a;
  Rational b;
  Rational c;
  Rational d;

  Polynomial polynomial() const { return Polynomial{d, c, b, a, Rational(1), Rational(1)}; }
  friend bool operator==(const QuinticParams&, const QuinticParams&) = default;
};

/// Res(P, P') as the 9x9 Sylvester determinant.
Rational resultant(const QuinticParams& q);

enum class Domain { h, t, s, boundary };

/// Number of distinct real roots off the discriminant: h = 5, t = 3, s = 1.
struct DomainLabel {
  Domain kind = Domain::boundary;
  /// Real roots with multiplicities; filled for boundary points only.
  MultiplicityVector roots;
  /// False when the point lies on the discriminant only through a repeated
  /// pair of complex conjugate roots.
  bool real_multiple_root = false;
};

DomainLabel domain_of(const QuinticParams& q);

char letter(Domain d);  // 'h', 't', 's' or 'b'

}  // namespace qda
