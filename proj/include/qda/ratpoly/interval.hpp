#pragma once

#include <optional>
#include <string>

#include "qda/ratpoly/polynomial.hpp"
#include "qda/ratpoly/rational.hpp"

namespace qda {

/// Real interval with rational or infinite endpoints. An absent bound means
/// -inf (lower) or +inf (upper); infinite ends are always open.
struct Interval {
  std::optional<Rational> lower;
  std::optional<Rational> upper;
  bool lower_closed = false;
  bool upper_closed = false;

  static Interval open(const Rational& lo, const Rational& hi);
  static Interval closed(const Rational& lo, const Rational& hi);
  static Interval point(const Rational& x);
  static Interval whole() { return {}; }
  static Interval positive();  // (0, +inf)
  static Interval negative();  // (-inf, 0)

  /// Throws std::invalid_argument unless lower < upper, or lower == upper
  /// with both ends closed.
  void validate() const;

  bool is_point() const;
  bool contains(const Rational& x) const;
  std::optional<Rational> width() const;

  friend bool operator==(const Interval&, const Interval&) = default;
};

std::string to_string(const Interval& iv);

/// Closed rational range [lo, hi] used for certified enclosures of algebraic
/// quantities.
struct Range {
  Rational lo;
  Rational hi;

  static Range exact(const Rational& x) { return {x, x}; }
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  bool overlaps(const Range& o) const { return !(hi < o.lo || o.hi < lo); }
  int sign() const { return lo > 0 ? 1 : (hi < 0 ? -1 : 0); }

  friend Range operator+(const Range& a, const Range& b) { return {a.lo + b.lo, a.hi + b.hi}; }
  friend Range operator-(const Range& a, const Range& b) { return {a.lo - b.hi, a.hi - b.lo}; }
  friend Range operator*(const Range& a, const Range& b);
  /// Throws std::domain_error if b contains zero.
  friend Range operator/(const Range& a, const Range& b);
  friend Range operator*(const Rational& k, const Range& a);
  friend bool operator==(const Range&, const Range&) = default;
};

/// Interval Horner evaluation: a range certainly containing p(x) for all x in r.
Range eval(const Polynomial& p, const Range& r);

/// Certified enclosure of sqrt over a nonnegative range, with about `bits`
/// bits of relative accuracy.
Range sqrt_enclosure(const Range& r, unsigned bits = 128);

}  // namespace qda
