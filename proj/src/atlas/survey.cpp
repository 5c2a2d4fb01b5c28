#include "qda/atlas/survey.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>

#include "qda/atlas/reference_tables.hpp"
#include "qda/util/parallel.hpp"

namespace qda {

namespace {

constexpr std::size_t kBlock = 4096;

struct Partial {
  std::size_t on_boundary = 0;
  std::size_t hits = 0;
  std::optional<QuinticParams> first_hit;
  std::map<AdmissiblePair, std::size_t> realized;
};

void sample_once(const QuinticParams& q, const AdmissiblePair& target, Partial& out) {
  const SturmSequence chain(q.polynomial());
  if (chain.had_multiple_roots()) {
    ++out.on_boundary;
    return;
  }
  const AdmissiblePair ap{static_cast<int>(chain.count_open(Rational(0), std::nullopt)),
                          static_cast<int>(chain.count_open(std::nullopt, Rational(0)))};
  ++out.realized[ap];
  if (ap == target) {
    ++out.hits;
    if (!out.first_hit) out.first_hit = q;
  }
}

}  // namespace

EvidenceReport evidence_scan(const Couple& target, const EvidenceBudget& budget) {
  if (target.sp.degree() != 5 || target.sp[1] < 0)
    throw std::invalid_argument("evidence_scan needs a degree 5 pattern beginning (+,+)");
  const int sa = target.sp[2], sb = target.sp[3], sc = target.sp[4], sd = target.sp[5];
  if (budget.grid_min_exponent > budget.grid_max_exponent) throw std::invalid_argument("empty exponent range");

  const std::size_t side = static_cast<std::size_t>(budget.grid_max_exponent - budget.grid_min_exponent + 1);
  const std::size_t grid_size = std::min(budget.samples, side * side * side * side);
  auto grid_point = [&](std::size_t idx) {
    std::array<Rational, 4> v;
    for (auto& x : v) {
      x = pow2(budget.grid_min_exponent + static_cast<int>(idx % side));
      idx /= side;
    }
    return QuinticParams{sa * v[0], sb * v[1], sc * v[2], sd * v[3]};
  };

  const std::size_t blocks = (budget.samples + kBlock - 1) / kBlock;
  const auto partials = parallel_map<Partial>(blocks, [&](std::size_t blk) {
    Partial part;
    std::mt19937_64 rng(budget.seed + blk);
    std::uniform_int_distribution<int> expo(-8, 8), mant(1024, 2047);
    auto magnitude = [&] { return Rational(mant(rng)) * pow2(expo(rng) - 10); };
    const std::size_t end = std::min(budget.samples, (blk + 1) * kBlock);
    for (std::size_t i = blk * kBlock; i < end; ++i) {
      const QuinticParams q = i < grid_size ? grid_point(i)
                                            : QuinticParams{sa * magnitude(), sb * magnitude(), sc * magnitude(),
                                                            sd * magnitude()};
      sample_once(q, target.ap, part);
    }
    return part;
  });

  EvidenceReport rep{target, budget.samples, 0, 0, std::nullopt, {}, {}};
  for (const auto& p : partials) {
    rep.on_boundary += p.on_boundary;
    rep.hits += p.hits;
    if (!rep.first_hit && p.first_hit) rep.first_hit = p.first_hit;
    for (const auto& [ap, n] : p.realized) rep.realized[ap] += n;
  }
  for (const auto& [ap, n] : rep.realized)
    if (std::abs(ap.pos - target.ap.pos) + std::abs(ap.neg - target.ap.neg) == 2) rep.nearest_misses.push_back(ap);
  return rep;
}

CaseKey case_key(const Certificate& cert) {
  const int real = static_cast<int>(cert.counts.pos + cert.counts.neg);
  const Domain dom = real == 5 ? Domain::h : (real == 3 ? Domain::t : Domain::s);
  return {sigma_label(cert.couple.sp), dom, cert.couple.ap};
}

RealizabilityReport survey(const SurveyOptions& options) {
  RealizabilityReport rep;
  rep.tables = figure_tables(default_table_points(), options.grid);
  RealizeBudget budget = options.realize;
  for (const auto& t : rep.tables)
    for (const auto& r : t.records) budget.witnesses.push_back(r.witness);

  std::vector<Couple> targets;
  for (const auto& c : all_couples(5))
    if (c.sp[1] > 0) targets.push_back(c);

  std::set<Couple> realized;
  for (const auto& c : targets) {
    try {
      rep.realizable.push_back(realize(c, budget));
      realized.insert(c);
    } catch (const NotFound&) {
      rep.unresolved.push_back(evidence_scan(c, options.evidence));
    }
  }
  std::stable_sort(rep.realizable.begin(), rep.realizable.end(), [](const Certificate& x, const Certificate& y) {
    return case_number_of(case_key(x)).value_or(1000) < case_number_of(case_key(y)).value_or(1000);
  });

  for (const auto& orbit : all_orbits(5)) {
    bool ok = false;
    for (const auto& m : orbit.members()) ok = ok || realized.count(m) > 0;
    if (orbit.size() == 4)
      (ok ? rep.rollup.realizable_4 : rep.rollup.unresolved_4) += 1;
    else
      (ok ? rep.rollup.realizable_2 : rep.rollup.unresolved_2) += 1;
  }
  return rep;
}

}  // namespace qda
