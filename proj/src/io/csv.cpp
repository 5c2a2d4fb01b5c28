#include "qda/io/csv.hpp"

namespace qda::io {

std::string tables_csv(const std::vector<CaseTable>& tables) {
  std::string out = "zone,sigma,domain,pos,neg,case_number,a,b,c,d\n";
  for (const auto& t : tables)
    for (const auto& r : t.records) {
      const auto& w = r.witness;
      out += t.label + ",\"" + to_string(r.key.sigma) + "\"," + letter(r.key.domain) + "," + std::to_string(r.key.ap.pos) +
             "," + std::to_string(r.key.ap.neg) + "," + (r.case_number ? std::to_string(*r.case_number) : "") + "," +
             to_string(w.a) + "," + to_string(w.b) + "," + to_string(w.c) + "," + to_string(w.d) + "\n";
    }
  return out;
}

std::string slice_csv(const SliceCurve& sc) {
  std::string out = "t,c,d\n";
  for (const auto& s : sc.samples) out += to_decimal(s.t) + "," + to_decimal(s.c) + "," + to_decimal(s.d) + "\n";
  return out;
}

}  // namespace qda::io
