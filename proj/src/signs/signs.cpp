#include "qda/signs/signs.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace qda {

SignPattern::SignPattern(std::string_view signs) : signs_(signs) {
  if (signs_.size() < 2) throw std::invalid_argument("sign pattern needs at least two signs");
  if (signs_.find_first_not_of("+-") != std::string::npos)
    throw std::invalid_argument("sign pattern may contain only '+' and '-': " + signs_);
  if (signs_.front() != '+') throw std::invalid_argument("sign pattern must begin with '+': " + signs_);
}

DescartesPair descartes_pair(const SignPattern& sp) {
  DescartesPair dp;
  for (std::size_t i = 0; i + 1 < sp.size(); ++i) (sp[i] != sp[i + 1] ? dp.c : dp.p) += 1;
  return dp;
}

bool is_admissible(const SignPattern& sp, const AdmissiblePair& ap) {
  DescartesPair dp = descartes_pair(sp);
  return ap.pos >= 0 && ap.neg >= 0 && ap.pos <= dp.c && ap.neg <= dp.p && (dp.c - ap.pos) % 2 == 0 &&
         (dp.p - ap.neg) % 2 == 0;
}

std::vector<AdmissiblePair> admissible_pairs(const SignPattern& sp) {
  DescartesPair dp = descartes_pair(sp);
  std::vector<AdmissiblePair> out;
  for (int neg = dp.p; neg >= 0; neg -= 2)
    for (int pos = dp.c; pos >= 0; pos -= 2) out.push_back({pos, neg});
  return out;
}

Couple::Couple(SignPattern sp_in, AdmissiblePair ap_in) : sp(std::move(sp_in)), ap(ap_in) {
  if (!is_admissible(sp, ap))
    throw std::invalid_argument("pair (" + std::to_string(ap.pos) + "," + std::to_string(ap.neg) +
                                ") is not admissible for " + sp.str());
}

std::string to_string(const Couple& cp) {
  return cp.sp.str() + " (" + std::to_string(cp.ap.pos) + "," + std::to_string(cp.ap.neg) + ")";
}

SignPattern act_g1(const SignPattern& sp) {
  std::string s = sp.str();
  for (std::size_t i = 1; i < s.size(); i += 2) s[i] = s[i] == '+' ? '-' : '+';
  return SignPattern(s);
}

SignPattern act_g2(const SignPattern& sp) {
  std::string s(sp.str().rbegin(), sp.str().rend());
  if (s.front() == '-')
    for (auto& ch : s) ch = ch == '+' ? '-' : '+';
  return SignPattern(s);
}

Couple act_g1(const Couple& cp) { return Couple(act_g1(cp.sp), {cp.ap.neg, cp.ap.pos}); }

Couple act_g2(const Couple& cp) { return Couple(act_g2(cp.sp), cp.ap); }

Orbit::Orbit(std::vector<Couple> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty()) throw std::invalid_argument("empty orbit");
}

bool Orbit::contains(const Couple& cp) const { return std::binary_search(members_.begin(), members_.end(), cp); }

Orbit orbit_of(const Couple& cp) {
  Couple g1 = act_g1(cp);
  return Orbit({cp, g1, act_g2(cp), act_g2(g1)});
}

std::vector<SignPattern> all_sign_patterns(int d) {
  if (d < 1) throw std::invalid_argument("degree must be at least 1");
  if (d > 24) throw std::invalid_argument("degree too large for exhaustive enumeration");
  std::vector<SignPattern> out;
  for (unsigned long mask = 0; mask < (1ul << d); ++mask) {
    std::string s = "+";
    for (int k = d - 1; k >= 0; --k) s += (mask >> k) & 1 ? '-' : '+';
    out.emplace_back(s);
  }
  return out;
}

std::vector<Couple> all_couples(int d) {
  std::vector<Couple> out;
  for (const auto& sp : all_sign_patterns(d))
    for (const auto& ap : admissible_pairs(sp)) out.emplace_back(sp, ap);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Orbit> all_orbits(int d) {
  std::vector<Orbit> out;
  std::set<Couple> seen;
  for (const auto& cp : all_couples(d)) {
    if (seen.count(cp)) continue;
    Orbit o = orbit_of(cp);
    seen.insert(o.members().begin(), o.members().end());
    out.push_back(std::move(o));
  }
  return out;
}

ZeroCoefficient::ZeroCoefficient(int index)
    : std::domain_error("coefficient of x^" + std::to_string(index) + " is zero"), index_(index) {}

SignPattern sp_of_polynomial(const Polynomial& p) {
  if (p.degree() < 1) throw std::invalid_argument("sign pattern needs degree at least 1");
  const int lead = sign(p.leading());
  std::string s;
  for (int k = p.degree(); k >= 0; --k) {
    int sg = sign(p[k]);
    if (sg == 0) throw ZeroCoefficient(k);
    s += sg * lead > 0 ? '+' : '-';
  }
  return SignPattern(s);
}

std::string to_string(const SigmaLabel& s) { return "s" + std::to_string(s.i) + "," + std::to_string(s.j); }

int quadrant_of(int sign_x, int sign_y) {
  if (sign_x == 0 || sign_y == 0) throw std::invalid_argument("quadrant of a point on an axis");
  if (sign_x > 0) return sign_y > 0 ? 1 : 4;
  return sign_y > 0 ? 2 : 3;
}

SigmaLabel sigma_label(const SignPattern& sp) {
  if (sp.degree() != 5) throw NotNormalized("sigma labels are defined for degree 5 only");
  if (sp[1] < 0) throw NotNormalized("sigma labels need a pattern beginning (+,+): " + sp.str());
  return {quadrant_of(sp[2], sp[3]), quadrant_of(sp[4], sp[5])};
}

SignPattern sign_pattern_of(const SigmaLabel& s) {
  static constexpr const char* quadrant[] = {"", "++", "-+", "--", "+-"};
  if (s.i < 1 || s.i > 4 || s.j < 1 || s.j > 4) throw std::invalid_argument("quadrant index out of range");
  return SignPattern(std::string("++") + quadrant[s.i] + quadrant[s.j]);
}

}  // namespace qda
