#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qda/ratpoly/interval.hpp"
#include "qda/ratpoly/polynomial.hpp"

namespace qda {

/// Sturm chain of the square-free part of a polynomial, kept as primitive
/// integer polynomials. Counts are of distinct real roots.
///
/// The chain is first built on the input itself; when the last element is not
/// constant the input had a multiple root and the chain is rebuilt on the
/// square-free part. had_multiple_roots() reports which case applied, which
/// gives a cheap exact test for a vanishing discriminant.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& p);

  bool had_multiple_roots() const { return had_multiple_roots_; }
  /// Degree of the square-free part, i.e. the number of distinct complex roots.
  int squarefree_degree() const;

  /// Sign variations at x; zeros in the sign sequence are skipped.
  int variations_at(const Rational& x) const;
  int variations_at_minus_infinity() const;
  int variations_at_plus_infinity() const;

  /// Distinct roots in the open interval (lo, hi); nullopt means infinite.
  std::size_t count_open(const std::optional<Rational>& lo, const std::optional<Rational>& hi) const;

  /// Sign of the square-free part at x.
  int sign_at(const Rational& x) const;

 private:
  using IntPoly = std::vector<Integer>;
  static int sign_of(const IntPoly& p, const Rational& x);
  void build(const Polynomial& p);

  std::vector<IntPoly> chain_;
  bool had_multiple_roots_ = false;
};

/// Number of distinct real roots of p inside iv. Finite endpoints are tested
/// by direct evaluation and counted only when the interval is closed there.
/// Requires p nonzero.
std::size_t count_real_roots(const Polynomial& p, const Interval& iv);

struct RootCounts {
  unsigned pos = 0;        // positive roots, with multiplicity
  unsigned neg = 0;        // negative roots, with multiplicity
  unsigned zero_mult = 0;  // multiplicity of the root 0
  friend bool operator==(const RootCounts&, const RootCounts&) = default;
};

/// Signed real-root counts with multiplicity. Requires p nonzero.
RootCounts pos_neg_counts(const Polynomial& p);

}  // namespace qda
