#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qda/discr/quintic.hpp"
#include "qda/ratpoly/sturm.hpp"
#include "qda/signs/signs.hpp"

namespace qda {

/// A monic polynomial with nonzero coefficients and simple real roots that
/// realizes `couple`, with the counts it was verified against.
struct Certificate {
  Couple couple;
  Polynomial polynomial;
  RootCounts counts;
  bool simple = false;
};

/// Builds and verifies a certificate for p. Throws std::invalid_argument when p
/// is not monic, has a zero coefficient or a multiple real root.
Certificate certify(const Polynomial& p);

/// Recomputes everything from the stored polynomial and compares.
bool verify(const Certificate& cert);

struct RealizeBudget {
  std::size_t attempts = 20000;
  std::uint64_t seed = 0x5eed;
  /// Degree 5 points tried before any search.
  std::vector<QuinticParams> witnesses;
};

class NotFound : public std::runtime_error {
 public:
  NotFound(const Couple& couple, std::size_t attempts);
  std::size_t attempts() const { return attempts_; }

 private:
  std::size_t attempts_;
};

/// Searches for a certificate: witnesses first, then root placement (chosen
/// positive, negative and complex roots, expanded and rescaled so the second
/// coefficient is 1), then random coefficients with the required signs, then
/// (degree 5 only) exact cell scans of random slices.
/// Couples whose pattern starts (+,-) are handled through their g1-image.
/// NotFound makes no claim about realizability.
Certificate realize(const Couple& couple, const RealizeBudget& budget = {});

}  // namespace qda
