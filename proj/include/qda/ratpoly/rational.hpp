#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qda {

using Integer = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
///
/// GMP's mpq_class keeps both invariants after every arithmetic operation;
/// values built by hand must go through canonicalize(), which the helpers
/// below do.
using Rational = mpq_class;

/// Parses "p/q", an integer, or a decimal such as "-0.014" or "2.5e-3".
/// Decimals are converted exactly (denominator a power of ten); no binary
/// floating-point value is ever involved. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Exact "num/den" form. The denominator is always written, so 3 prints as
/// "3/1".
std::string to_string(const Rational& value);

/// Decimal shadow with `significant` significant digits (printf "%.*g").
std::string to_decimal(const Rational& value, int significant = 9);

double to_double(const Rational& value);

int sign(const Rational& value);

Rational abs(const Rational& value);

/// Dyadic rational with the smallest power-of-two denominator strictly inside
/// the open interval (lo, hi). Requires lo < hi. Returns 0 when 0 is inside.
Rational simplest_between(const Rational& lo, const Rational& hi);

/// The rational of least denominator in the open interval (lo, hi).
Rational smallest_denominator_between(const Rational& lo, const Rational& hi);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);

/// 2^k for any integer k.
Rational pow2(long k);

}  // namespace qda
