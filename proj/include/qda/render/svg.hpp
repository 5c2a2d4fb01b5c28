#pragma once

#include <string>
#include <vector>

#include "qda/ratpoly/rational.hpp"

namespace qda {

/// Viewport and options shared by both plot kinds. Coordinates are exact;
/// they are converted to decimals only when the SVG text is written.
struct PlotSpec {
  Rational x_lo = -1;
  Rational x_hi = 1;
  Rational y_lo = -1;
  Rational y_hi = 1;
  int width_px = 640;
  int height_px = 480;
  bool label_cusps = true;     // kappa, lambda, mu
  bool label_nodes = true;     // phi, psi, theta
  bool label_branches = true;  // alpha, omega
  bool label_regions = true;   // h, t, s
  bool draw_m_curve = false;   // (a, b)-plane only

  /// Throws std::invalid_argument for an empty range or a non-positive size.
  void validate() const;
};

/// Decimal text with 9 significant digits.
std::string svg_number(double x);
std::string svg_number(const Rational& x);

/// Minimal deterministic SVG writer. Arguments are data coordinates (y-axis
/// up); the file holds pixel coordinates. Markers also carry their data
/// coordinates in data-x and data-y.
class SvgWriter {
 public:
  enum class Style { axis, solid, dashed, dotted };

  explicit SvgWriter(const PlotSpec& spec);

  /// Clipped to the viewport; the visible pieces become separate polylines.
  void polyline(const std::vector<std::pair<double, double>>& points, Style style);
  void line(double x0, double y0, double x1, double y1, Style style);
  void marker(const Rational& x, const Rational& y, const std::string& css_class, const std::string& label);
  void text(double x, double y, const std::string& css_class, const std::string& content);

  std::string finish() const;

 private:
  std::pair<double, double> to_px(double x, double y) const;
  void emit_run(const std::vector<std::pair<double, double>>& px, Style style);

  PlotSpec spec_;
  double x_lo_, x_hi_, y_lo_, y_hi_;
  std::string body_;
};

}  // namespace qda
