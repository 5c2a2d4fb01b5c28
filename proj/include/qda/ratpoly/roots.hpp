#pragma once

#include <vector>

#include "qda/ratpoly/interval.hpp"
#include "qda/ratpoly/polynomial.hpp"
#include "qda/ratpoly/sturm.hpp"

namespace qda {

/// A real algebraic number: the unique root of a square-free polynomial in
/// an isolating interval. Either lo == hi (a rational root, stored exactly) or
/// the interval (lo, hi) is open, its endpoints are not roots and it holds
/// exactly one root.
class RealRoot {
 public:
  RealRoot(Polynomial squarefree, Rational lo, Rational hi);
  static RealRoot rational(const Rational& x);

  const Polynomial& polynomial() const { return poly_; }
  const Rational& lower() const { return lo_; }
  const Rational& upper() const { return hi_; }
  bool is_rational() const { return lo_ == hi_; }
  Interval interval() const;
  Range range() const { return {lo_, hi_}; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }
  double approx() const;

  /// Copy with the isolating interval shrunk below `width` by bisection.
  RealRoot refined(const Rational& width) const;
  /// One bisection step (keeps rational roots exact when hit).
  RealRoot bisected() const;

  /// Exact sign of g at this root.
  int sign_of(const Polynomial& g) const;

  /// Exact comparison with a rational: -1, 0 or 1 as root <, ==, > x.
  int compare(const Rational& x) const;

 private:
  Polynomial poly_;
  Rational lo_;
  Rational hi_;
};

/// Exact order of two real algebraic numbers.
int compare(const RealRoot& x, const RealRoot& y);

/// Certified range of g over the root's interval, refining until its width is
/// below `width`.
Range enclose(const Polynomial& g, const RealRoot& root, const Rational& width);

struct RootEntry {
  RealRoot root;
  unsigned multiplicity;
  Interval interval() const { return root.interval(); }
};

/// Distinct real roots ordered on the line, each with an isolating interval
/// and its multiplicity. Intervals are pairwise disjoint.
using MultiplicityVector = std::vector<RootEntry>;

/// Isolates every distinct real root of p (nonzero) with multiplicities taken
/// from its square-free decomposition.
MultiplicityVector isolate_roots(const Polynomial& p);

/// Real roots of a square-free polynomial, ordered.
std::vector<RealRoot> isolate_squarefree(const Polynomial& squarefree);

/// Upper bound on the absolute value of every complex root (Cauchy), rounded
/// up to a power of two.
Rational root_bound(const Polynomial& p);

}  // namespace qda
