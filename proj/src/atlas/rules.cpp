#include "qda/atlas/rules.hpp"

#include <cmath>
#include <set>

#include "qda/discr/nodes.hpp"
#include "qda/discr/slice.hpp"

namespace qda {

namespace {

std::string describe(const Classification& c) {
  return "(" + to_decimal(c.params.c, 6) + ", " + to_decimal(c.params.d, 6) + ") " + to_string(c.key());
}

Rational to_dyadic(double x) {
  return Rational(static_cast<long>(std::llround(std::ldexp(x, 30)))) * pow2(-30);
}

// Unit vector along (x, y), rounded to a dyadic rational.
std::pair<Rational, Rational> unit(double x, double y) {
  const double len = std::hypot(x, y);
  return {to_dyadic(x / len), to_dyadic(y / len)};
}

std::optional<Classification> classify_or_skip(const QuinticParams& q) {
  try {
    return classify_point(q);
  } catch (const OnDiscriminant&) {
  } catch (const OnCoordinateHyperplane&) {
  }
  return std::nullopt;
}

void rule_axis_crossing(const SliceCells& cells, RuleResult& r) {
  for (const auto& col : cells.columns)
    for (std::size_t i = 0; i + 1 < col.cells.size(); ++i) {
      const auto& lo = col.cells[i];
      const auto& hi = col.cells[i + 1];
      if (!(lo.params.d < 0 && hi.params.d > 0)) continue;
      ++r.checked;
      const bool ok = lo.pos + lo.neg == hi.pos + hi.neg && std::abs(lo.pos - hi.pos) == 1;
      if (!ok) r.failures.push_back(describe(lo) + " vs " + describe(hi));
    }
}

void rule_upper_single_root(const SliceCells& cells, RuleResult& r) {
  for (const auto& col : cells.columns)
    for (const auto& c : col.cells) {
      if (c.domain != Domain::s || c.params.d < 0) continue;
      ++r.checked;
      if (c.pos != 0 || c.neg != 1) r.failures.push_back(describe(c));
    }
}

void rule_cusp_sign(const Rational& a, const Rational& b, const Rational& eps, RuleResult& r) {
  for (const auto& e : cusp_parameters(a, b)) {
    const int root_sign = e.root.compare(0);
    const Rational t = e.root.refined(pow2(-40)).midpoint();
    const SlicePoint k = slice_point(t, a, b);
    const auto [ux, uy] = unit(1.0, -to_double(t));
    for (int side : {-1, 1}) {
      auto c = classify_or_skip({a, b, k.c + side * eps * ux, k.d + side * eps * uy});
      if (!c || c->domain != Domain::s) continue;
      ++r.checked;
      const int single = c->pos == 1 ? 1 : -1;
      if (single != root_sign) r.failures.push_back("cusp at t ~ " + to_decimal(t, 6) + ": " + describe(*c));
    }
  }
}

void rule_origin_arc(const Rational& a, const Rational& b, const Rational& eps, RuleResult& r) {
  ++r.checked;
  const SlicePoint minus = slice_point(-eps, a, b), plus = slice_point(eps, a, b);
  auto double_root_at = [&](const Rational& t, const SlicePoint& pt) {
    const Polynomial p = QuinticParams{a, b, pt.c, pt.d}.polynomial();
    return p(t) == 0 && derivative(p)(t) == 0;
  };
  const bool ok = double_root_at(-eps, minus) && double_root_at(eps, plus) && sign(minus.c) == -sign(plus.c) &&
                  sign(minus.c) != 0 && sign(minus.d) == sign(b) && sign(plus.d) == sign(b);
  if (!ok) r.failures.push_back("arc through the origin does not cross between quadrants as expected");
}

void rule_hyperbolic(const SliceCells& cells, RuleResult& r) {
  for (const auto& col : cells.columns)
    for (const auto& c : col.cells) {
      if (c.domain != Domain::h) continue;
      ++r.checked;
      const DescartesPair dp = descartes_pair(c.sp);
      if (c.pos != dp.c || c.neg != dp.p) r.failures.push_back(describe(c));
    }
}

void rule_node_sectors(const Rational& a, const Rational& b, const Rational& eps, RuleResult& r) {
  for (const auto& n : self_intersections(a, b)) {
    const auto [x1, y1] = unit(1.0, -to_double(n.t1.mid()));
    const auto [x2, y2] = unit(1.0, -to_double(n.t2.mid()));
    const auto sum = unit(to_double(x1 + x2), to_double(y1 + y2));
    const auto diff = unit(to_double(x1 - x2), to_double(y1 - y2));
    std::array<std::optional<Classification>, 4> around;
    int k = 0;
    for (const auto& dir : {sum, diff})
      for (int side : {1, -1})
        around[k++] = classify_or_skip({a, b, n.c.mid() + side * eps * dir.first, n.d.mid() + side * eps * dir.second});
    if (!around[0] || !around[1] || !around[2] || !around[3]) continue;
    ++r.checked;
    auto pair_is = [&](int i, std::multiset<Domain> want) {
      return std::multiset<Domain>{around[i]->domain, around[i + 1]->domain} == want;
    };
    const std::multiset<Domain> sh{Domain::s, Domain::h}, tt{Domain::t, Domain::t};
    const bool ok = (pair_is(0, sh) && pair_is(2, tt)) || (pair_is(0, tt) && pair_is(2, sh));
    if (!ok) {
      std::string msg = "node at (" + to_decimal(n.c.mid(), 6) + ", " + to_decimal(n.d.mid(), 6) + "):";
      for (const auto& c : around) msg += std::string(" ") + letter(c->domain);
      r.failures.push_back(msg);
    }
  }
}

}  // namespace

bool RuleReport::passed() const {
  for (const auto& r : rules)
    if (!r.passed()) return false;
  return true;
}

RuleReport check_rules(const Rational& a, const Rational& b, const GridSpec& grid) {
  RuleReport rep{a, b, {}};
  const char* descriptions[] = {
      "crossing the c-axis, exactly one real root changes sign",
      "one-real-root regions above the c-axis have a negative root",
      "next to a cusp, the single real root has the sign of the triple root",
      "along the arc through the origin the double root changes sign",
      "in h-regions the AP is the Descartes pair",
      "around a node, opposite sectors are s and h, the other two are t",
  };
  for (int i = 0; i < 6; ++i) rep.rules[i] = {i + 1, descriptions[i], 0, {}};
  const SliceCells cells = slice_cells(a, b, grid.merge_width);
  rule_axis_crossing(cells, rep.rules[0]);
  rule_upper_single_root(cells, rep.rules[1]);
  rule_cusp_sign(a, b, grid.epsilon, rep.rules[2]);
  rule_origin_arc(a, b, grid.epsilon, rep.rules[3]);
  rule_hyperbolic(cells, rep.rules[4]);
  rule_node_sectors(a, b, grid.epsilon, rep.rules[5]);
  return rep;
}

}  // namespace qda
