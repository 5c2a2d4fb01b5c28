#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qda/atlas/realize.hpp"
#include "qda/atlas/tables.hpp"

namespace qda {

struct EvidenceBudget {
  std::size_t samples = 1'000'000;
  std::uint64_t seed = 0xe71d;
  /// The deterministic grid uses magnitudes 2^k for k in this range in each
  /// of a, b, c, d; random samples fill the rest of the budget.
  int grid_min_exponent = -6;
  int grid_max_exponent = 6;
};

/// Sampling summary over the orthant of (a, b, c, d) fixed by a degree 5 sign
/// pattern beginning (+, +).
struct EvidenceReport {
  Couple target;
  std::size_t samples = 0;      // points drawn
  std::size_t on_boundary = 0;  // points on the discriminant, skipped
  std::size_t hits = 0;
  std::optional<QuinticParams> first_hit;
  std::map<AdmissiblePair, std::size_t> realized;  // AP counts seen for the target pattern
  std::vector<AdmissiblePair> nearest_misses;      // realized APs one step (+-2) from the target
};

EvidenceReport evidence_scan(const Couple& target, const EvidenceBudget& budget = {});

/// Atlas case of a degree 5 certificate whose pattern begins (+, +).
CaseKey case_key(const Certificate& cert);

struct OrbitRollup {
  int realizable_4 = 0;
  int unresolved_4 = 0;
  int realizable_2 = 0;
  int unresolved_2 = 0;
};

struct SurveyOptions {
  GridSpec grid;
  RealizeBudget realize;
  EvidenceBudget evidence{100'000};
};

struct RealizabilityReport {
  std::vector<CaseTable> tables;
  std::vector<Certificate> realizable;     // ordered by case number
  std::vector<EvidenceReport> unresolved;  // ordered by couple
  OrbitRollup rollup;
};

/// Figure tables at the 16 sample points, then realize() on every degree 5
/// couple whose pattern begins (+, +), with the table witnesses tried first.
/// Couples without a certificate get an evidence scan.
RealizabilityReport survey(const SurveyOptions& options = {});

}  // namespace qda
