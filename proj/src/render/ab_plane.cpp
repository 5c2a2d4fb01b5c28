#include "qda/render/ab_plane.hpp"

#include "qda/atlas/reference_tables.hpp"
#include "qda/discr/strata.hpp"

namespace qda {

namespace {

constexpr int kSteps = 4000;
constexpr double kRange = 4.0;

std::vector<std::pair<double, double>> sweep(const Polynomial& x, const Polynomial& y) {
  std::vector<std::pair<double, double>> out;
  for (int k = 0; k <= kSteps; ++k) {
    const Rational u = Rational(2 * k - kSteps, kSteps) * Rational(static_cast<long>(kRange));
    out.emplace_back(to_double(x(u)), to_double(y(u)));
  }
  return out;
}

}  // namespace

std::string render_ab_plane(const PlotSpec& spec) {
  SvgWriter svg(spec);
  svg.line(to_double(spec.x_lo), 0, to_double(spec.x_hi), 0, SvgWriter::Style::axis);
  svg.line(0, to_double(spec.y_lo), 0, to_double(spec.y_hi), SvgWriter::Style::axis);
  svg.polyline(sweep(stratum_a(4), stratum_b(4)), SvgWriter::Style::solid);
  svg.polyline(sweep(stratum_a(3), stratum_b(3)), SvgWriter::Style::dashed);
  if (spec.draw_m_curve) {
    // x^3 + x^2 + a x + b with a double root r
    const Polynomial a{Rational(0), Rational(-2), Rational(-3)};
    const Polynomial b{Rational(0), Rational(0), Rational(1), Rational(2)};
    svg.polyline(sweep(a, b), SvgWriter::Style::dotted);
    svg.marker(Rational(1, 3), Rational(1, 27), "m-cusp", "M cusp");
  }
  svg.marker(Rational(2, 5), Rational(2, 25), "t5", "T5");
  if (spec.label_regions)
    for (const auto& t : reference_tables())
      if (spec.x_lo <= t.a && t.a <= spec.x_hi && spec.y_lo <= t.b && t.b <= spec.y_hi)
        svg.text(to_double(t.a), to_double(t.b), "zone", t.label);
  return svg.finish();
}

}  // namespace qda
