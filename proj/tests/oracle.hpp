#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library's polynomial arithmetic.

#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "qda/ratpoly/rational.hpp"

namespace oracle {

using qda::Rational;
using Coeffs = std::vector<Rational>;  // low-to-high

/// Coefficients of prod (x - r) by repeated multiplication.
inline Coeffs expand_roots(const std::vector<Rational>& roots) {
  Coeffs c{Rational(1)};
  for (const auto& r : roots) {
    Coeffs next(c.size() + 1, Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return c;
}

inline Coeffs multiply(const Coeffs& p, const Coeffs& q) {
  Coeffs out(p.size() + q.size() - 1, Rational(0));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  return out;
}

/// sum c_k x^k with explicit powers.
inline Rational eval_powers(const Coeffs& c, const Rational& x) {
  Rational acc = 0;
  Rational xk = 1;
  for (const auto& ck : c) {
    acc += ck * xk;
    xk *= x;
  }
  return acc;
}

/// Elementary symmetric polynomial e_k of the given values by subset
/// enumeration.
inline Rational elementary_symmetric(const std::vector<Rational>& v, int k) {
  Rational total = 0;
  const std::size_t n = v.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    Rational prod = 1;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) prod *= v[i];
    total += prod;
  }
  return total;
}

/// Discriminant of x^3 + p x^2 + q x + r by the textbook formula.
inline Rational cubic_discriminant(const Rational& p, const Rational& q, const Rational& r) {
  return 18 * p * q * r - 4 * p * p * p * r + p * p * q * q - 4 * q * q * q - 27 * r * r;
}

/// Random nonzero rational num/den with |num| <= max_num, 1 <= den <= max_den.
inline Rational random_rational(std::mt19937_64& rng, int max_num, int max_den, bool nonzero = true) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  for (;;) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    if (!nonzero || q != 0) return q;
  }
}

}  // namespace oracle
