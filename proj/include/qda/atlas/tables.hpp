#pragma once

#include <string>
#include <vector>

#include "qda/atlas/scan.hpp"

namespace qda {

struct TablePoint {
  std::string label;
  Rational a;
  Rational b;
};

/// The 16 sample points of the reference tables, in scan order.
std::vector<TablePoint> default_table_points();

struct CaseTable {
  std::string label;
  Rational a;
  Rational b;
  std::vector<CaseRecord> records;  // layout order
};

std::vector<CaseTable> figure_tables(const std::vector<TablePoint>& points = default_table_points(),
                                     const GridSpec& grid = {});

/// Rows sigma, columns s / t / h, entries "number sigma (pos,neg)".
std::string format_table(const CaseTable& table);

struct TableDiff {
  std::vector<CaseKey> missing;  // in the reference table, not found
  std::vector<CaseKey> extra;    // found, not in the reference table
  bool empty() const { return missing.empty() && extra.empty(); }
};

/// Difference against the reference table with the same label. Throws
/// std::invalid_argument for unknown labels.
TableDiff compare_with_reference(const CaseTable& table);

}  // namespace qda
