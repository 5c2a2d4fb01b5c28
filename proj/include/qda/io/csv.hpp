#pragma once

#include <string>
#include <vector>

#include "qda/atlas/tables.hpp"
#include "qda/discr/slice.hpp"

namespace qda::io {

/// One row per record: zone, sigma, domain, pos, neg, case_number, a, b, c, d.
/// Witness coordinates are exact "num/den" strings.
std::string tables_csv(const std::vector<CaseTable>& tables);

/// Polyline dump: t, c, d as decimals with 9 significant digits.
std::string slice_csv(const SliceCurve& sc);

}  // namespace qda::io
