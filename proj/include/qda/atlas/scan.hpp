#pragma once

#include <optional>
#include <vector>

#include "qda/atlas/classify.hpp"

namespace qda {

/// How scan_slice picks sample points in the (c, d)-plane.
struct GridSpec {
  enum class Strategy {
    /// One exact sample per cell of the arrangement of the slice and the axes.
    cells,
    /// Geometric grid per quadrant, bisection where neighbors disagree, and
    /// extra seeds around cusps, nodes and axis crossings.
    geometric,
  };
  Strategy strategy = Strategy::cells;
  int min_exponent = -12;
  int max_exponent = 4;
  int refine_depth = 8;
  Rational epsilon = pow2(-20);
  /// Critical c-values whose enclosures come closer than this are merged.
  Rational merge_width = pow2(-64);
};

struct CaseRecord {
  CaseKey key;
  std::optional<int> case_number;
  QuinticParams witness;
};

/// Order used in printed tables: s before t before h, then sigma, then the
/// AP order of admissible_pairs (neg descending, then pos descending).
bool layout_less(const CaseKey& x, const CaseKey& y);

/// Samples of one vertical line c = const, by increasing d. Consecutive samples
/// are separated by exactly one point of the slice or by the c-axis.
struct CellColumn {
  Rational c;
  std::vector<Classification> cells;
};

/// Columns ordered by c. Each open strip between consecutive critical c-values
/// (0, cusps, nodes, complex double points and crossings of the slice with the
/// c-axis) gets one column, so every region of the complement meets some column.
struct SliceCells {
  Rational a;
  Rational b;
  std::vector<CellColumn> columns;
};

SliceCells slice_cells(const Rational& a, const Rational& b, const Rational& merge_width = pow2(-64));

/// Classified samples of the geometric strategy.
std::vector<Classification> geometric_samples(const Rational& a, const Rational& b, const GridSpec& grid);

/// One record per distinct case, first witness kept, in layout order, with
/// case numbers from the reference catalogue. Throws OnBoundary when (a, b)
/// lies on an axis or a stratum projection.
std::vector<CaseRecord> scan_slice(const Rational& a, const Rational& b, const GridSpec& grid = {});

std::vector<CaseRecord> distinct_cases(const std::vector<Classification>& samples);

}  // namespace qda
