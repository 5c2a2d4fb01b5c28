#include "qda/render/slice_plot.hpp"

#include <algorithm>

namespace qda {

namespace {

std::string greek(const char* const names[3], std::size_t i) {
  return i < 3 ? names[i] : std::string(names[2]) + std::to_string(i - 1);
}

bool inside(const PlotSpec& spec, const Rational& x, const Rational& y) {
  return spec.x_lo <= x && x <= spec.x_hi && spec.y_lo <= y && y <= spec.y_hi;
}

SlicePoint cusp_point(const SliceCurve& sc, const RealRoot& t) { return slice_point(cusp_vertex(t), sc.a, sc.b); }

}  // namespace

PlotSpec default_slice_view(const SliceCurve& sc) {
  std::vector<std::pair<Rational, Rational>> pts{{0, 0}};
  for (const auto& e : sc.cusps) {
    const SlicePoint p = cusp_point(sc, e.root);
    pts.emplace_back(p.c, p.d);
  }
  for (const auto& n : sc.nodes) pts.emplace_back(n.c.mid(), n.d.mid());
  const Rational w = pow2(-40);
  for (const auto& e : sc.c_crossings) pts.emplace_back(0, enclose(slice_d(sc.a, sc.b), e.root, w).mid());
  for (const auto& e : sc.d_crossings) pts.emplace_back(enclose(slice_c(sc.a, sc.b), e.root, w).mid(), 0);
  PlotSpec spec;
  spec.x_lo = spec.x_hi = spec.y_lo = spec.y_hi = 0;
  for (const auto& [x, y] : pts) {
    spec.x_lo = std::min(spec.x_lo, x);
    spec.x_hi = std::max(spec.x_hi, x);
    spec.y_lo = std::min(spec.y_lo, y);
    spec.y_hi = std::max(spec.y_hi, y);
  }
  auto pad = [](Rational& lo, Rational& hi) {
    Rational margin = (hi - lo) * Rational(3, 10);
    if (margin == 0) margin = 1;
    lo -= margin;
    hi += margin;
  };
  pad(spec.x_lo, spec.x_hi);
  pad(spec.y_lo, spec.y_hi);
  return spec;
}

std::string render_slice(const SliceCurve& sc, const PlotSpec& spec, const std::vector<RegionLabel>& regions) {
  static const char* const cusp_names[3] = {"κ", "λ", "μ"};
  static const char* const node_names[3] = {"φ", "ψ", "θ"};
  SvgWriter svg(spec);
  svg.line(to_double(spec.x_lo), 0, to_double(spec.x_hi), 0, SvgWriter::Style::axis);
  svg.line(0, to_double(spec.y_lo), 0, to_double(spec.y_hi), SvgWriter::Style::axis);

  std::vector<std::pair<double, double>> pts;
  for (const auto& s : sc.samples) pts.emplace_back(to_double(s.c), to_double(s.d));
  svg.polyline(pts, SvgWriter::Style::solid);

  for (std::size_t i = 0; i < sc.cusps.size(); ++i) {
    const SlicePoint p = cusp_point(sc, sc.cusps[i].root);
    svg.marker(p.c, p.d, "cusp", spec.label_cusps ? greek(cusp_names, i) : "");
  }
  for (std::size_t i = 0; i < sc.nodes.size(); ++i)
    svg.marker(sc.nodes[i].c.mid(), sc.nodes[i].d.mid(), "node", spec.label_nodes ? greek(node_names, i) : "");

  if (spec.label_branches) {
    auto first_inside = std::find_if(sc.samples.begin(), sc.samples.end(),
                                     [&](const SliceSample& s) { return inside(spec, s.c, s.d); });
    auto last_inside = std::find_if(sc.samples.rbegin(), sc.samples.rend(),
                                    [&](const SliceSample& s) { return inside(spec, s.c, s.d); });
    if (first_inside != sc.samples.end()) svg.text(to_double(first_inside->c), to_double(first_inside->d), "branch", "ω");
    if (last_inside != sc.samples.rend()) svg.text(to_double(last_inside->c), to_double(last_inside->d), "branch", "α");
  }
  if (spec.label_regions)
    for (const auto& r : regions)
      if (inside(spec, r.c, r.d)) svg.text(to_double(r.c), to_double(r.d), "region", std::string(1, r.letter));
  return svg.finish();
}

}  // namespace qda
