#include "qda/atlas/scan.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "qda/atlas/reference_tables.hpp"
#include "qda/discr/nodes.hpp"
#include "qda/discr/slice.hpp"
#include "qda/discr/strata.hpp"
#include "qda/util/parallel.hpp"

namespace qda {

namespace {

int column_rank(Domain d) {
  switch (d) {
    case Domain::s: return 0;
    case Domain::t: return 1;
    case Domain::h: return 2;
    case Domain::boundary: break;
  }
  return 3;
}

// Res(P, P') along c = c0 as a polynomial in d (degree 4), by interpolation.
Polynomial resultant_in_d(const Rational& a, const Rational& b, const Rational& c0) {
  constexpr int kDegree = 4;
  Polynomial out;
  std::vector<Rational> ys;
  for (int i = 0; i <= kDegree; ++i) ys.push_back(resultant(QuinticParams{a, b, c0, Rational(i)}));
  for (int i = 0; i <= kDegree; ++i) {
    Polynomial basis = Polynomial::constant(ys[i]);
    for (int j = 0; j <= kDegree; ++j)
      if (j != i) basis *= Polynomial{Rational(-j), Rational(1)} * (Rational(1) / (i - j));
    out += basis;
  }
  const Rational probe(kDegree + 1);
  if (out(probe) != resultant(QuinticParams{a, b, c0, probe}))
    throw std::logic_error("resultant is not quartic in d");
  return out;
}

// A rational strictly between two disjoint separators x < y.
Rational point_between(RealRoot x, RealRoot y) {
  for (;;) {
    if (x.upper() < y.lower()) return smallest_denominator_between(x.upper(), y.lower());
    if (x.upper() == y.lower() && !x.is_rational() && !y.is_rational()) return x.upper();
    const bool refine_x = !x.is_rational() && (y.is_rational() || x.upper() - x.lower() >= y.upper() - y.lower());
    if (refine_x)
      x = x.bisected();
    else
      y = y.bisected();
  }
}

std::vector<Rational> points_between(std::vector<RealRoot> separators) {
  std::sort(separators.begin(), separators.end(),
            [](const RealRoot& x, const RealRoot& y) { return compare(x, y) < 0; });
  std::vector<Rational> out;
  out.push_back(smallest_denominator_between(separators.front().lower() - 1, separators.front().lower()));
  for (std::size_t i = 0; i + 1 < separators.size(); ++i) out.push_back(point_between(separators[i], separators[i + 1]));
  out.push_back(smallest_denominator_between(separators.back().upper(), separators.back().upper() + 1));
  return out;
}

std::vector<Range> critical_c_values(const Rational& a, const Rational& b, const Rational& width) {
  std::vector<Range> out{Range::exact(0)};
  const Polynomial c_of_t = slice_c(a, b);
  for (const auto& e : cusp_parameters(a, b)) out.push_back(enclose(c_of_t, e.root, width));
  for (const auto& e : isolate_roots(slice_d(a, b))) out.push_back(enclose(c_of_t, e.root, width));
  for (const auto& n : self_intersections(a, b, width)) out.push_back(n.c);
  for (const auto& n : complex_double_points(a, b, width)) out.push_back(n.c);
  std::sort(out.begin(), out.end(), [](const Range& x, const Range& y) { return x.lo < y.lo; });
  std::vector<Range> merged;
  for (const auto& r : out) {
    if (!merged.empty() && r.lo - merged.back().hi <= width) {
      merged.back().hi = std::max(merged.back().hi, r.hi);
      continue;
    }
    merged.push_back(r);
  }
  return merged;
}

std::vector<Rational> column_positions(const std::vector<Range>& critical) {
  std::vector<Rational> out;
  out.push_back(smallest_denominator_between(critical.front().lo - 1, critical.front().lo));
  for (std::size_t i = 0; i + 1 < critical.size(); ++i)
    out.push_back(smallest_denominator_between(critical[i].hi, critical[i + 1].lo));
  out.push_back(smallest_denominator_between(critical.back().hi, critical.back().hi + 1));
  return out;
}

CellColumn make_column(const Rational& a, const Rational& b, const Rational& c0) {
  std::vector<RealRoot> separators{RealRoot::rational(0)};
  for (auto& e : isolate_roots(resultant_in_d(a, b, c0))) separators.push_back(std::move(e.root));
  CellColumn col{c0, {}};
  for (const auto& d : points_between(std::move(separators)))
    col.cells.push_back(classify_point(QuinticParams{a, b, c0, d}));
  return col;
}

// Classifies q, ignoring points on the discriminant or an axis.
void try_classify(const QuinticParams& q, std::vector<Classification>& out) {
  try {
    out.push_back(classify_point(q));
  } catch (const OnDiscriminant&) {
  } catch (const OnCoordinateHyperplane&) {
  }
}

Rational to_dyadic(double x, int bits = 30) {
  Rational r(static_cast<long>(std::llround(std::ldexp(x, bits))));
  return r * pow2(-bits);
}

// Points around p at distance about eps in eight directions and along the
// normals of the given tangent directions.
void seed_around(const Rational& a, const Rational& b, const Rational& c, const Rational& d, const Rational& eps,
                 const std::vector<Rational>& tangents, std::vector<Classification>& out) {
  for (int dc = -1; dc <= 1; ++dc)
    for (int dd = -1; dd <= 1; ++dd)
      if (dc != 0 || dd != 0) try_classify(QuinticParams{a, b, c + dc * eps, d + dd * eps}, out);
  for (const auto& t : tangents) {
    // tangent (1, -t), normal (t, 1), both scaled to length about eps
    const double len = std::hypot(1.0, to_double(t));
    const Rational u = to_dyadic(1.0 / len), v = to_dyadic(to_double(t) / len);
    for (int s : {-1, 1}) {
      try_classify(QuinticParams{a, b, c + s * eps * v, d + s * eps * u}, out);
      try_classify(QuinticParams{a, b, c + s * eps * u, d - s * eps * v}, out);
    }
  }
}

void refine_pair(const Rational& a, const Rational& b, const Classification& x, const Classification& y, int depth,
                 std::vector<Classification>& out) {
  if (depth <= 0 || x.key() == y.key()) return;
  const QuinticParams mid{a, b, (x.params.c + y.params.c) / 2, (x.params.d + y.params.d) / 2};
  try {
    Classification m = classify_point(mid);
    out.push_back(m);
    refine_pair(a, b, x, m, depth - 1, out);
    refine_pair(a, b, m, y, depth - 1, out);
  } catch (const OnDiscriminant&) {
  } catch (const OnCoordinateHyperplane&) {
  }
}

}  // namespace

bool layout_less(const CaseKey& x, const CaseKey& y) {
  if (x.domain != y.domain) return column_rank(x.domain) < column_rank(y.domain);
  if (x.sigma != y.sigma) return x.sigma < y.sigma;
  if (x.ap.neg != y.ap.neg) return x.ap.neg > y.ap.neg;
  return x.ap.pos > y.ap.pos;
}

SliceCells slice_cells(const Rational& a, const Rational& b, const Rational& merge_width) {
  const std::vector<Rational> cs = column_positions(critical_c_values(a, b, merge_width));
  SliceCells out{a, b, {}};
  out.columns = parallel_map<CellColumn>(cs.size(), [&](std::size_t i) { return make_column(a, b, cs[i]); });
  return out;
}

std::vector<Classification> geometric_samples(const Rational& a, const Rational& b, const GridSpec& grid) {
  std::vector<Classification> out;
  const int n = grid.max_exponent - grid.min_exponent + 1;
  if (n < 1) throw std::invalid_argument("empty exponent range");
  for (int sc : {1, -1})
    for (int sd : {1, -1}) {
      std::vector<std::vector<std::optional<Classification>>> g(n, std::vector<std::optional<Classification>>(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          std::vector<Classification> one;
          try_classify(QuinticParams{a, b, sc * pow2(grid.min_exponent + i), sd * pow2(grid.min_exponent + j)}, one);
          if (!one.empty()) {
            g[i][j] = one.front();
            out.push_back(one.front());
          }
        }
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (!g[i][j]) continue;
          if (i + 1 < n && g[i + 1][j]) refine_pair(a, b, *g[i][j], *g[i + 1][j], grid.refine_depth, out);
          if (j + 1 < n && g[i][j + 1]) refine_pair(a, b, *g[i][j], *g[i][j + 1], grid.refine_depth, out);
        }
    }

  const Rational eps = grid.epsilon;
  const Polynomial c_of_t = slice_c(a, b), d_of_t = slice_d(a, b);
  auto seed_at_parameter = [&](const RealRoot& root) {
    const Rational t = root.refined(pow2(-40)).midpoint();
    const SlicePoint pt = slice_point(t, a, b);
    seed_around(a, b, pt.c, pt.d, eps, {t}, out);
  };
  for (const auto& e : cusp_parameters(a, b)) seed_at_parameter(e.root);
  for (const auto& e : isolate_roots(c_of_t)) seed_at_parameter(e.root);
  for (const auto& e : isolate_roots(d_of_t)) seed_at_parameter(e.root);
  for (const auto& node : self_intersections(a, b))
    seed_around(a, b, node.c.mid(), node.d.mid(), eps, {node.t1.mid(), node.t2.mid()}, out);
  return out;
}

std::vector<CaseRecord> distinct_cases(const std::vector<Classification>& samples) {
  std::map<CaseKey, QuinticParams> first;
  for (const auto& s : samples) first.emplace(s.key(), s.params);
  std::vector<CaseRecord> out;
  for (const auto& [key, witness] : first) out.push_back({key, case_number_of(key), witness});
  std::sort(out.begin(), out.end(), [](const CaseRecord& x, const CaseRecord& y) { return layout_less(x.key, y.key); });
  return out;
}

std::vector<CaseRecord> scan_slice(const Rational& a, const Rational& b, const GridSpec& grid) {
  zone_of(a, b);  // validates that (a, b) is off the boundaries
  if (grid.strategy == GridSpec::Strategy::geometric) return distinct_cases(geometric_samples(a, b, grid));
  std::vector<Classification> samples;
  for (auto& col : slice_cells(a, b, grid.merge_width).columns)
    for (auto& cell : col.cells) samples.push_back(std::move(cell));
  return distinct_cases(samples);
}

}  // namespace qda
