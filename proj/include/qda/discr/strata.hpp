#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qda/ratpoly/interval.hpp"
#include "qda/ratpoly/roots.hpp"

namespace qda {

/// (a, b) of (x - x1)^m (x - x2)^(5 - m) with m x1 + (5 - m) x2 = -1.
struct StratumCurvePoint {
  int m;
  Rational x1;
  Rational a;
  Rational b;
};

/// Throws std::invalid_argument unless 1 <= m <= 4.
StratumCurvePoint stratum_projection(int m, const Rational& x1);

/// a and b of the stratum curve as polynomials in x1.
Polynomial stratum_a(int m);
Polynomial stratum_b(int m);

/// Full polynomial (x - x1)^m (x - x2)^(5 - m).
Polynomial stratum_polynomial(int m, const Rational& x1);

/// Discriminant of x^3 + x^2 + a x + b; zero exactly on the M curve.
Rational m_value(const Rational& a, const Rational& b);

enum class Zone { A, B, C, D, E, F, G, H, I, J, K, L, M, N, P };

std::string to_string(Zone z);
/// Throws std::invalid_argument for unknown labels.
Zone zone_from_string(const std::string& label);

class OnBoundary : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Branch { T41, T32, T23, T14 };

std::string to_string(Branch br);

/// Branch of a stratum curve through a point above abscissa a, with the exact
/// parameter and an enclosure of its ordinate.
struct BranchCrossing {
  Branch branch;
  RealRoot x1;
  Range b;
};

/// Stratum-curve points above abscissa a, ordered from below. Empty for
/// a >= 2/5 (the curves only reach a = 2/5 at their common cusp).
std::vector<BranchCrossing> branches_at(const Rational& a);

/// Zone of (a, b); throws OnBoundary on an axis or a stratum curve.
Zone zone_of(const Rational& a, const Rational& b);

/// A real intersection of the M curve with the stratum curve of index m.
struct MCrossing {
  int m;
  RealRoot x1;
  Range a;
  Range b;
};

/// Real parameters x1 where the stratum curve of index m meets the M curve,
/// each reported once, ordered by x1.
std::vector<MCrossing> m_curve_crossings(int m, const Rational& width);

/// m_value along the stratum curve of index m, as a polynomial in x1.
Polynomial m_value_on_stratum(int m);

}  // namespace qda
