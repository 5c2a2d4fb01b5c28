#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qda/atlas/classify.hpp"

namespace qda {

struct ReferenceCase {
  int number;
  CaseKey key;
};

/// Published case table of one sample point of the (a, b)-plane.
struct ReferenceTable {
  std::string label;  // zone letter; "E'" is the second sample point of zone E
  Rational a;
  Rational b;
  std::vector<ReferenceCase> cases;  // layout order
};

/// The 16 tables in scan order A, B, C, D, E, E', F, ..., N, P.
const std::vector<ReferenceTable>& reference_tables();

/// Case number 1..57 for every case of the reference tables.
const std::map<CaseKey, int>& case_catalogue();

std::optional<int> case_number_of(const CaseKey& key);

/// Numbers cases 1, 2, ... in order of first appearance, taking the tables in
/// the given order and each table in layout order.
std::map<CaseKey, int> number_by_first_appearance(const std::vector<std::vector<CaseKey>>& tables);

}  // namespace qda
