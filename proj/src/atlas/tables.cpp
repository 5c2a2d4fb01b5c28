#include "qda/atlas/tables.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <array>

#include "qda/atlas/reference_tables.hpp"

namespace qda {

std::vector<TablePoint> default_table_points() {
  std::vector<TablePoint> out;
  for (const auto& t : reference_tables()) out.push_back({t.label, t.a, t.b});
  return out;
}

std::vector<CaseTable> figure_tables(const std::vector<TablePoint>& points, const GridSpec& grid) {
  std::vector<CaseTable> out;
  for (const auto& p : points) out.push_back({p.label, p.a, p.b, scan_slice(p.a, p.b, grid)});
  return out;
}

std::string format_table(const CaseTable& table) {
  // cell text per (sigma, column)
  std::map<SigmaLabel, std::array<std::string, 3>> cells;
  for (const auto& r : table.records) {
    const int col = r.key.domain == Domain::s ? 0 : (r.key.domain == Domain::t ? 1 : 2);
    std::string& cell = cells[r.key.sigma][col];
    if (!cell.empty()) cell += ", ";
    cell += (r.case_number ? std::to_string(*r.case_number) : std::string("?")) + " (" + std::to_string(r.key.ap.pos) +
            "," + std::to_string(r.key.ap.neg) + ")";
  }
  std::size_t width = 10;
  for (const auto& [sigma, row] : cells)
    for (const auto& c : row) width = std::max(width, c.size() + 2);
  auto pad = [&](const std::string& s) { return s + std::string(width - s.size(), ' '); };
  auto trimmed = [](std::string line) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    return line + "\n";
  };
  std::string out = "zone " + table.label + " (a, b) = (" + to_decimal(table.a, 6) + ", " + to_decimal(table.b, 6) + ")\n";
  out += trimmed("        " + pad("domain s") + pad("domain t") + "domain h");
  for (const auto& [sigma, row] : cells) {
    std::string name = to_string(sigma);
    out += trimmed(name + std::string(8 - name.size(), ' ') + pad(row[0]) + pad(row[1]) + row[2]);
  }
  return out;
}

TableDiff compare_with_reference(const CaseTable& table) {
  const auto& refs = reference_tables();
  auto it = std::find_if(refs.begin(), refs.end(), [&](const ReferenceTable& r) { return r.label == table.label; });
  if (it == refs.end()) throw std::invalid_argument("no reference table for " + table.label);
  std::set<CaseKey> expected, found;
  for (const auto& c : it->cases) expected.insert(c.key);
  for (const auto& r : table.records) found.insert(r.key);
  TableDiff diff;
  std::set_difference(expected.begin(), expected.end(), found.begin(), found.end(), std::back_inserter(diff.missing));
  std::set_difference(found.begin(), found.end(), expected.begin(), expected.end(), std::back_inserter(diff.extra));
  auto by_layout = [](std::vector<CaseKey>& v) { std::sort(v.begin(), v.end(), layout_less); };
  by_layout(diff.missing);
  by_layout(diff.extra);
  return diff;
}

}  // namespace qda
