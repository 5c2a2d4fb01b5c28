// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "oracle.hpp"
#include "qda/atlas/reference_tables.hpp"
#include "qda/atlas/rules.hpp"
#include "qda/atlas/survey.hpp"
#include "qda/cli/cli.hpp"
#include "qda/discr/slice.hpp"
#include "qda/discr/strata.hpp"
#include "qda/ratpoly/sturm.hpp"
#include "sample_points.hpp"

using namespace qda;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o.precision(3);
  o << s << " s";
  return o.str();
}

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Outcome orbit_census() {
  const auto t0 = Clock::now();
  int len4 = 0, len2 = 0, other = 0;
  for (const auto& o : all_orbits(5)) (o.size() == 4 ? len4 : o.size() == 2 ? len2 : other)++;
  const double dt = seconds_since(t0);
  return {len4 == 22 && len2 == 14 && other == 0 && dt < 1,
          std::to_string(len4) + " of length 4, " + std::to_string(len2) + " of length 2, " + std::to_string(other) +
              " other, " + fmt_seconds(dt)};
}

Outcome ap_counts() {
  const auto t0 = Clock::now();
  std::map<std::pair<int, int>, std::set<std::size_t>> by_pair;
  std::map<int, int> per_quadrant;
  for (const auto& sp : all_sign_patterns(5)) {
    if (sp[1] != 1) continue;
    const DescartesPair dp = descartes_pair(sp);
    const auto aps = admissible_pairs(sp);
    by_pair[{dp.c, dp.p}].insert(aps.size());
    per_quadrant[sigma_label(sp).i] += static_cast<int>(aps.size());
  }
  const double dt = seconds_since(t0);
  const std::map<std::pair<int, int>, std::size_t> want{{{0, 5}, 3}, {{1, 4}, 3}, {{2, 3}, 4}, {{3, 2}, 4}, {{4, 1}, 3}};
  bool ok = by_pair.size() == want.size();
  std::string detail = "APs per Descartes pair:";
  for (const auto& [dp, sizes] : by_pair) {
    detail += " (" + std::to_string(dp.first) + "," + std::to_string(dp.second) + ")=" +
              (sizes.size() == 1 ? std::to_string(*sizes.begin()) : "inconsistent");
    ok = ok && sizes.size() == 1 && want.count(dp) && want.at(dp) == *sizes.begin();
  }
  detail += "; couples per quadrant:";
  for (int i = 1; i <= 4; ++i) detail += " " + std::to_string(per_quadrant[i]);
  ok = ok && per_quadrant[1] == 13 && per_quadrant[2] == 15 && per_quadrant[3] == 15 && per_quadrant[4] == 15;
  return {ok && dt < 1, detail + ", " + fmt_seconds(dt)};
}

Outcome table_reproduction() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  std::map<std::string, std::set<int>> numbers;
  for (const auto& t : figure_tables()) {
    const TableDiff diff = compare_with_reference(t);
    for (const auto& r : t.records)
      if (r.case_number) numbers[t.label].insert(*r.case_number);
    if (diff.empty()) continue;
    ok = false;
    detail += t.label + ":";
    for (const auto& k : diff.missing) detail += " missing " + to_string(k);
    for (const auto& k : diff.extra) {
      const auto n = case_number_of(k);
      detail += " extra " + to_string(k) + (n ? " (#" + std::to_string(*n) + ")" : "");
    }
    detail += "; ";
  }
  const double dt = seconds_since(t0);
  const bool a_ok = numbers["A"] == std::set<int>{1, 2, 3, 4, 5, 6, 7, 8};
  const bool c_ok = numbers["C"].count(14) == 1;
  const bool e_ok = numbers["E'"].count(29) == 1 && numbers["E"].count(29) == 0;
  ok = ok && a_ok && c_ok && e_ok && dt < 600;
  detail += std::string("A={1..8} ") + (a_ok ? "yes" : "no") + ", C has 14 " + (c_ok ? "yes" : "no") +
            ", 29 in E' only " + (e_ok ? "yes" : "no") + ", " + fmt_seconds(dt);
  return {ok, detail};
}

Outcome global_survey() {
  const auto t0 = Clock::now();
  const RealizabilityReport report = survey();
  const double dt = seconds_since(t0);
  bool verified = true;
  for (const auto& c : report.realizable) verified = verified && verify(c);
  const Couple missing(SignPattern("++-+--"), {3, 0});
  const bool one_missing = report.unresolved.size() == 1 && report.unresolved[0].target == missing;
  const auto& r = report.rollup;
  const bool rollup = r.realizable_4 == 22 && r.unresolved_4 == 0 && r.realizable_2 == 13 && r.unresolved_2 == 1;
  std::string detail = std::to_string(report.realizable.size()) + " realizable (" +
                       (verified ? "all certificates verified" : "UNVERIFIED certificate") + "), unresolved:";
  for (const auto& u : report.unresolved) detail += " " + to_string(u.target);
  detail += ", roll-up " + std::to_string(r.realizable_4) + "/" + std::to_string(r.unresolved_4) + " length 4, " +
            std::to_string(r.realizable_2) + "/" + std::to_string(r.unresolved_2) + " length 2, " + fmt_seconds(dt);
  return {report.realizable.size() == 57 && verified && one_missing && rollup && dt < 900, detail};
}

Outcome non_realizability_evidence() {
  const auto t0 = Clock::now();
  const Couple target(sign_pattern_of({2, 3}), {3, 0});
  EvidenceBudget budget;
  budget.samples = 1'000'000;
  const EvidenceReport rep = evidence_scan(target, budget);
  const double dt = seconds_since(t0);
  std::string seen;
  for (const auto& [ap, n] : rep.realized)
    seen += " (" + std::to_string(ap.pos) + "," + std::to_string(ap.neg) + "):" + std::to_string(n);
  return {rep.samples >= 1'000'000 && rep.hits == 0,
          to_string(target) + ", " + std::to_string(rep.samples) + " samples, " + std::to_string(rep.hits) +
              " hits, " + std::to_string(rep.on_boundary) + " on the discriminant, realized APs" + seen + ", " +
              fmt_seconds(dt)};
}

Outcome parametrization_identity() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(6);
  int zero = 0;
  for (int i = 0; i < 500; ++i) {
    const Rational t = oracle::random_rational(rng, 200, 50, false);
    const Rational a = oracle::random_rational(rng, 200, 50, false);
    const Rational b = oracle::random_rational(rng, 200, 50, false);
    const SlicePoint p = slice_point(t, a, b);
    zero += resultant(QuinticParams{a, b, p.c, p.d}) == 0;
  }
  const double dt = seconds_since(t0);
  return {zero == 500 && dt < 30, std::to_string(zero) + "/500 exact zeros, " + fmt_seconds(dt)};
}

Outcome checkpoint_geometry() {
  const bool m1 = m_value(q(1, 3), q(1, 27)) == 0;
  const bool m2 = m_value(q(1, 4), q(0)) == 0;
  const bool m3 = m_value(q(0), q(0)) == 0;
  bool t5 = true;
  for (int m : {3, 4}) {
    const StratumCurvePoint p = stratum_projection(m, q(-1, 5));
    t5 = t5 && p.a == q(2, 5) && p.b == q(2, 25);
  }
  return {m1 && m2 && m3 && t5, std::string("M(1/3,1/27)=0 ") + (m1 ? "yes" : "no") + ", M(1/4,0)=0 " +
                                    (m2 ? "yes" : "no") + ", M(0,0)=0 " + (m3 ? "yes" : "no") +
                                    ", projection at x1=-1/5 is (2/5,2/25) " + (t5 ? "yes" : "no")};
}

Outcome tangent_law() {
  std::mt19937_64 rng(8);
  int identities = 0;
  for (int i = 0; i < 100; ++i) {
    const Rational a = oracle::random_rational(rng, 100, 30, false);
    const Rational b = oracle::random_rational(rng, 100, 30, false);
    const Polynomial lhs = derivative(slice_d(a, b)) + Polynomial::x() * derivative(slice_c(a, b));
    identities += lhs.is_zero();
  }
  // (a, b) with denominators up to 4 keep |b| >= 1/4 while |2 a t| <= 0.04.
  int signs = 0;
  std::uniform_int_distribution<int> step(1, 1000);
  for (int i = 0; i < 100; ++i) {
    const Rational a = oracle::random_rational(rng, 80, 4, false);
    const Rational b = oracle::random_rational(rng, 80, 4, true);
    const Rational t = q(step(rng) * (rng() % 2 ? 1 : -1), 1'000'000);
    signs += sign(slice_point(t, a, b).d) == sign(b);
  }
  return {identities == 100 && signs == 100,
          std::to_string(identities) + "/100 exact identities, " + std::to_string(signs) + "/100 sign(d)=sign(b)"};
}

Outcome sturm_vs_oracle() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(9);
  int agree = 0;
  for (int i = 0; i < 1000; ++i) {
    const int degree = 2 + static_cast<int>(rng() % 6);
    const int pairs = static_cast<int>(rng() % (degree / 2 + 1));
    const int reals = degree - 2 * pairs;
    std::set<Rational> roots;
    while (static_cast<int>(roots.size()) < reals) roots.insert(oracle::random_rational(rng, 50, 12, true));
    oracle::Coeffs c = oracle::expand_roots({roots.begin(), roots.end()});
    for (int k = 0; k < pairs; ++k) {
      const Rational re = oracle::random_rational(rng, 50, 12, false);
      const Rational im = oracle::random_rational(rng, 50, 12, true);
      c = oracle::multiply(c, {re * re + im * im, -2 * re, q(1)});  // (x - re)^2 + im^2
    }
    unsigned pos = 0, neg = 0;
    for (const auto& r : roots) (r > 0 ? pos : neg)++;
    const RootCounts counts = pos_neg_counts(Polynomial(c));
    agree += counts.pos == pos && counts.neg == neg && counts.zero_mult == 0;
  }
  const double dt = seconds_since(t0);
  return {agree == 1000 && dt < 60, std::to_string(agree) + "/1000 agree, " + fmt_seconds(dt)};
}

Outcome rule_checks() {
  bool ok = true;
  std::string detail;
  for (const char* label : {"A", "B", "G", "P"}) {
    for (const auto& p : test_points::kCaptionPoints) {
      if (std::string(p.label) != label) continue;
      const RuleReport rep = check_rules(parse_rational(p.a), parse_rational(p.b));
      std::size_t checks = 0;
      bool zone_ok = rep.passed();
      for (const auto& r : rep.rules) checks += r.checked;
      // rule 5 must actually see h-regions wherever the slice has them
      detail += std::string(label) + (zone_ok ? " passed" : " FAILED") + " (" + std::to_string(checks) +
                " checks, rule 5: " + std::to_string(rep.rules[4].checked) + ") ";
      ok = ok && zone_ok && checks > 0;
    }
  }
  return {ok, detail};
}

Outcome determinism() {
  const fs::path base = fs::temp_directory_path() / ("qda_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(base);
  std::vector<std::string> runs;
  std::vector<int> codes;
  for (const char* run : {"first", "second"}) {
    std::ostringstream out, err;
    codes.push_back(cli::run({"reproduce", "--out", (base / run).string()}, out, err));
    runs.push_back(out.str());
  }
  fs::remove_all(base);
  std::size_t entries = 0;
  for (char ch : runs[0]) entries += ch == '\n';
  const bool same = runs[0] == runs[1] && entries > 0;
  return {same, std::to_string(entries) + " manifest entries, checksums " + (same ? "identical" : "DIFFER") +
                    " across runs, stored manifest " +
                    (codes[0] == 0 && codes[1] == 0 ? "matches" : "does not match (exit " +
                                                                       std::to_string(codes[0]) + ")")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"orbit census", orbit_census},
      {"admissible pair counts", ap_counts},
      {"figure tables", table_reproduction},
      {"global survey", global_survey},
      {"non-realizability evidence", non_realizability_evidence},
      {"parametrization identity", parametrization_identity},
      {"checkpoint geometry", checkpoint_geometry},
      {"tangent law", tangent_law},
      {"root counts against construction", sturm_vs_oracle},
      {"rule checks", rule_checks},
      {"determinism", determinism},
  };
  int failures = 0;
  int n = 0;
  for (const auto& [name, check] : criteria) {
    ++n;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << "criterion " << n << " (" << name << "): " << (o.pass ? "PASS" : "FAIL") << " : " << o.detail
              << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failures ? 1 : 0;
}
