#include "qda/ratpoly/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace qda {

Interval Interval::open(const Rational& lo, const Rational& hi) {
  Interval iv{lo, hi, false, false};
  iv.validate();
  return iv;
}

Interval Interval::closed(const Rational& lo, const Rational& hi) {
  Interval iv{lo, hi, true, true};
  iv.validate();
  return iv;
}

Interval Interval::point(const Rational& x) { return {x, x, true, true}; }

Interval Interval::positive() { return {Rational(0), std::nullopt, false, false}; }

Interval Interval::negative() { return {std::nullopt, Rational(0), false, false}; }

void Interval::validate() const {
  if ((!lower && lower_closed) || (!upper && upper_closed))
    throw std::invalid_argument("infinite interval ends must be open");
  if (lower && upper) {
    if (*lower > *upper) throw std::invalid_argument("interval lower bound exceeds upper bound");
    if (*lower == *upper && !(lower_closed && upper_closed))
      throw std::invalid_argument("degenerate interval must be closed at both ends");
  }
}

bool Interval::is_point() const { return lower && upper && *lower == *upper; }

bool Interval::contains(const Rational& x) const {
  if (lower && (lower_closed ? x < *lower : x <= *lower)) return false;
  if (upper && (upper_closed ? x > *upper : x >= *upper)) return false;
  return true;
}

std::optional<Rational> Interval::width() const {
  if (!lower || !upper) return std::nullopt;
  return *upper - *lower;
}

std::string to_string(const Interval& iv) {
  std::string s = iv.lower_closed ? "[" : "(";
  s += iv.lower ? to_string(*iv.lower) : "-inf";
  s += ", ";
  s += iv.upper ? to_string(*iv.upper) : "+inf";
  s += iv.upper_closed ? "]" : ")";
  return s;
}

Range operator*(const Range& a, const Range& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Range operator/(const Range& a, const Range& b) {
  if (b.contains_zero()) throw std::domain_error("range division by a range containing zero");
  Range inv{1 / b.hi, 1 / b.lo};
  return a * inv;
}

Range operator*(const Rational& k, const Range& a) {
  if (k >= 0) return {k * a.lo, k * a.hi};
  return {k * a.hi, k * a.lo};
}

Range eval(const Polynomial& p, const Range& r) {
  if (r.lo == r.hi) return Range::exact(p(r.lo));
  Range acc = Range::exact(Rational(0));
  for (int k = p.degree(); k >= 0; --k) acc = acc * r + Range::exact(p[k]);
  return acc;
}

namespace {

// floor(sqrt(q * 4^bits)) / 2^bits <= sqrt(q), computed exactly.
Rational sqrt_below(const Rational& q, unsigned bits) {
  if (q <= 0) return Rational(0);
  Integer scaled_num = q.get_num() * q.get_den();
  mpz_mul_2exp(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(), 2 * bits);
  Integer root;
  mpz_sqrt(root.get_mpz_t(), scaled_num.get_mpz_t());
  // sqrt(n/d) = sqrt(n*d)/d
  Integer den = q.get_den();
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
  Rational r(root, den);
  r.canonicalize();
  return r;
}

Rational sqrt_above(const Rational& q, unsigned bits) {
  if (q <= 0) return Rational(0);
  Integer scaled_num = q.get_num() * q.get_den();
  mpz_mul_2exp(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(), 2 * bits);
  Integer root;
  mpz_sqrt(root.get_mpz_t(), scaled_num.get_mpz_t());
  if (root * root != scaled_num) root += 1;
  Integer den = q.get_den();
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
  Rational r(root, den);
  r.canonicalize();
  return r;
}

}  // namespace

Range sqrt_enclosure(const Range& r, unsigned bits) {
  if (r.hi < 0) throw std::domain_error("sqrt of a negative range");
  return {sqrt_below(r.lo, bits), sqrt_above(r.hi, bits)};
}

}  // namespace qda
