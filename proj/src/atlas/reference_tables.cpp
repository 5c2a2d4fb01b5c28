#include "qda/atlas/reference_tables.hpp"

#include <algorithm>

#include "qda/atlas/scan.hpp"

namespace qda {

namespace {

struct Row {
  int number;
  int i;
  int j;
  char domain;
  int pos;
  int neg;
};

Domain domain_from(char c) {
  switch (c) {
    case 'h': return Domain::h;
    case 't': return Domain::t;
    case 's': return Domain::s;
    default: throw std::invalid_argument("bad domain letter");
  }
}

std::vector<ReferenceTable> build() {
  std::vector<ReferenceTable> out;
  // Quadrant II of (a, b).
  const std::vector<Row> a_s = {{1, 2, 1, 's', 0, 1}, {2, 2, 2, 's', 0, 1}, {3, 2, 3, 's', 1, 0}, {4, 2, 4, 's', 1, 0}};
  const std::vector<Row> a_t = {{5, 2, 1, 't', 0, 3}, {6, 2, 2, 't', 2, 1}, {7, 2, 3, 't', 1, 2}, {8, 2, 4, 't', 1, 2}};
  const Row b_t9 = {9, 2, 1, 't', 2, 1};
  const std::vector<Row> b_h = {{10, 2, 1, 'h', 2, 3}, {11, 2, 2, 'h', 4, 1}, {12, 2, 3, 'h', 3, 2}, {13, 2, 4, 'h', 3, 2}};
  const Row c_t14 = {14, 2, 4, 't', 3, 0};
  // Quadrant III.
  const std::vector<Row> d_s = {{15, 3, 1, 's', 0, 1}, {16, 3, 2, 's', 0, 1}, {17, 3, 3, 's', 1, 0}, {18, 3, 4, 's', 1, 0}};
  const std::vector<Row> d_t = {{19, 3, 1, 't', 0, 3}, {20, 3, 1, 't', 2, 1}, {21, 3, 2, 't', 2, 1}, {22, 3, 3, 't', 1, 2},
                                {23, 3, 4, 't', 1, 2}};
  const std::vector<Row> d_h = {{24, 3, 1, 'h', 2, 3}, {25, 3, 2, 'h', 2, 3}, {26, 3, 3, 'h', 1, 4}, {27, 3, 4, 'h', 3, 2}};
  const Row e_t28 = {28, 3, 4, 't', 3, 0};
  const Row e2_t29 = {29, 3, 2, 't', 0, 3};
  // Quadrant IV.
  const std::vector<Row> h_s = {{30, 4, 1, 's', 0, 1}, {31, 4, 2, 's', 0, 1}, {32, 4, 3, 's', 1, 0}, {33, 4, 4, 's', 1, 0}};
  const std::vector<Row> h_t = {{34, 4, 1, 't', 2, 1}, {35, 4, 2, 't', 2, 1}, {36, 4, 3, 't', 1, 2}, {37, 4, 4, 't', 3, 0}};
  const Row i_h38 = {38, 4, 3, 'h', 1, 4};
  const Row j_t39 = {39, 4, 1, 't', 0, 3};
  const Row j_t40 = {40, 4, 2, 't', 0, 3};
  const Row j_h41 = {41, 4, 1, 'h', 2, 3};
  const Row j_h42 = {42, 4, 2, 'h', 2, 3};
  const Row k_t43 = {43, 4, 4, 't', 1, 2};
  const Row k_h44 = {44, 4, 4, 'h', 3, 2};
  // Quadrant I.
  const std::vector<Row> l_s = {{45, 1, 1, 's', 0, 1}, {46, 1, 2, 's', 0, 1}, {47, 1, 3, 's', 1, 0}, {48, 1, 4, 's', 1, 0}};
  const std::vector<Row> l_t = {{49, 1, 1, 't', 0, 3}, {50, 1, 2, 't', 0, 3}, {51, 1, 2, 't', 2, 1}, {52, 1, 3, 't', 1, 2},
                                {53, 1, 4, 't', 1, 2}};
  const std::vector<Row> l_h = {{54, 1, 1, 'h', 0, 5}, {55, 1, 2, 'h', 2, 3}, {56, 1, 3, 'h', 1, 4}, {57, 1, 4, 'h', 1, 4}};

  auto rows = [](std::initializer_list<std::vector<Row>> parts) {
    std::vector<Row> v;
    for (const auto& p : parts) v.insert(v.end(), p.begin(), p.end());
    return v;
  };
  auto table = [&](const char* label, const char* a, const char* b, const std::vector<Row>& v) {
    ReferenceTable t{label, parse_rational(a), parse_rational(b), {}};
    for (const auto& r : v) t.cases.push_back({r.number, CaseKey{{r.i, r.j}, domain_from(r.domain), {r.pos, r.neg}}});
    std::sort(t.cases.begin(), t.cases.end(),
              [](const ReferenceCase& x, const ReferenceCase& y) { return layout_less(x.key, y.key); });
    out.push_back(std::move(t));
  };

  table("A", "-2", "3", rows({a_s, a_t}));
  table("B", "-2", "1/2", rows({a_s, a_t, {b_t9}, b_h}));
  table("C", "-16", "1/10", rows({a_s, a_t, {b_t9, c_t14}, b_h}));
  table("D", "-2", "-1/2", rows({d_s, d_t, d_h}));
  table("E", "-2", "-1", rows({d_s, d_t, {e_t28}, d_h}));
  table("E'", "-14/1000", "-15/100", rows({d_s, d_t, {e_t28, e2_t29}, d_h}));
  table("F", "-2", "-5/2", rows({d_s, {d_t[1], d_t[2], d_t[3], e_t28}, {d_h[1], d_h[2]}}));
  table("G", "-2", "-4", rows({d_s, {d_t[1], d_t[2], d_t[3], e_t28}}));
  table("H", "1", "-1", rows({h_s, h_t}));
  table("I", "5/100", "-20/100", rows({h_s, h_t, {i_h38}}));
  table("J", "5/100", "-12/100", rows({h_s, h_t, {j_t39, j_t40, j_h41, j_h42, i_h38}}));
  table("K", "5/100", "-9/100", rows({h_s, {j_t39, h_t[1], j_t40, h_t[2], k_t43}, {j_h41, j_h42, i_h38, k_h44}}));
  table("L", "22/100", "1/100", rows({l_s, l_t, l_h}));
  table("M", "28/100", "1/100", rows({l_s, l_t, {l_h[1], l_h[2]}}));
  table("N", "295/1000", "1/100", rows({l_s, {l_t[0], l_t[2], l_t[3], l_t[4]}, {l_h[2]}}));
  table("P", "1", "1", rows({l_s, {l_t[0], l_t[2], l_t[3], l_t[4]}}));
  return out;
}

}  // namespace

const std::vector<ReferenceTable>& reference_tables() {
  static const std::vector<ReferenceTable> tables = build();
  return tables;
}

const std::map<CaseKey, int>& case_catalogue() {
  static const std::map<CaseKey, int> catalogue = [] {
    std::map<CaseKey, int> m;
    for (const auto& t : reference_tables())
      for (const auto& c : t.cases) {
        auto [it, inserted] = m.emplace(c.key, c.number);
        if (!inserted && it->second != c.number) throw std::logic_error("inconsistent reference numbering");
      }
    return m;
  }();
  return catalogue;
}

std::optional<int> case_number_of(const CaseKey& key) {
  const auto& m = case_catalogue();
  auto it = m.find(key);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

std::map<CaseKey, int> number_by_first_appearance(const std::vector<std::vector<CaseKey>>& tables) {
  std::map<CaseKey, int> out;
  for (auto keys : tables) {
    std::sort(keys.begin(), keys.end(), layout_less);
    for (const auto& k : keys) out.emplace(k, static_cast<int>(out.size()) + 1);
  }
  return out;
}

}  // namespace qda
