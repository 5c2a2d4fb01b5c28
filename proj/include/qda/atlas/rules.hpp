#pragma once

#include <array>
#include <string>
#include <vector>

#include "qda/atlas/scan.hpp"

namespace qda {

struct RuleResult {
  int number;  // 1..6
  std::string description;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// Results for rules 1..6 in order:
///  1. crossing the c-axis off the slice, one root changes sign;
///  2. one-real-root regions with d > 0 have a negative root;
///  3. next to a cusp, the root of an adjacent s-region has the sign of the triple root;
///  4. along the arc through the origin the double root changes sign between
///     the two quadrants with sign(d) = sign(b);
///  5. in h-regions the AP is the Descartes pair;
///  6. around a node, one pair of opposite sectors is {s, h} and the other {t, t}.
struct RuleReport {
  Rational a;
  Rational b;
  std::array<RuleResult, 6> rules;
  bool passed() const;
};

RuleReport check_rules(const Rational& a, const Rational& b, const GridSpec& grid = {});

}  // namespace qda
