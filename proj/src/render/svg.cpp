#include "qda/render/svg.hpp"

#include <cstdio>
#include <stdexcept>

namespace qda {

void PlotSpec::validate() const {
  if (!(x_lo < x_hi) || !(y_lo < y_hi)) throw std::invalid_argument("plot ranges must be nonempty");
  if (width_px <= 0 || height_px <= 0) throw std::invalid_argument("plot size must be positive");
}

std::string svg_number(double x) {
  if (x == 0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

std::string svg_number(const Rational& x) { return to_decimal(x, 9); }

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string attributes(SvgWriter::Style style) {
  switch (style) {
    case SvgWriter::Style::axis: return "class=\"axis\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"";
    case SvgWriter::Style::solid: return "class=\"solid\" fill=\"none\" stroke=\"#000\" stroke-width=\"1.5\"";
    case SvgWriter::Style::dashed:
      return "class=\"dashed\" fill=\"none\" stroke=\"#000\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"";
    case SvgWriter::Style::dotted:
      return "class=\"dotted\" fill=\"none\" stroke=\"#000\" stroke-width=\"1.5\" stroke-dasharray=\"1.5 3\"";
  }
  return "";
}

// Liang-Barsky clipping of the segment p0 -> p1 to the box; false when the
// segment misses it.
bool clip(double box_x0, double box_x1, double box_y0, double box_y1, std::pair<double, double>& p0,
          std::pair<double, double>& p1) {
  const double dx = p1.first - p0.first, dy = p1.second - p0.second;
  double t0 = 0, t1 = 1;
  const double p[4] = {-dx, dx, -dy, dy};
  const double q[4] = {p0.first - box_x0, box_x1 - p0.first, p0.second - box_y0, box_y1 - p0.second};
  for (int i = 0; i < 4; ++i) {
    if (p[i] == 0) {
      if (q[i] < 0) return false;
      continue;
    }
    const double r = q[i] / p[i];
    if (p[i] < 0) {
      if (r > t1) return false;
      if (r > t0) t0 = r;
    } else {
      if (r < t0) return false;
      if (r < t1) t1 = r;
    }
  }
  const auto a = p0;
  p0 = {a.first + t0 * dx, a.second + t0 * dy};
  p1 = {a.first + t1 * dx, a.second + t1 * dy};
  return true;
}

}  // namespace

SvgWriter::SvgWriter(const PlotSpec& spec)
    : spec_(spec),
      x_lo_(to_double(spec.x_lo)),
      x_hi_(to_double(spec.x_hi)),
      y_lo_(to_double(spec.y_lo)),
      y_hi_(to_double(spec.y_hi)) {
  spec_.validate();
}

std::pair<double, double> SvgWriter::to_px(double x, double y) const {
  return {(x - x_lo_) / (x_hi_ - x_lo_) * spec_.width_px, (y_hi_ - y) / (y_hi_ - y_lo_) * spec_.height_px};
}

void SvgWriter::emit_run(const std::vector<std::pair<double, double>>& px, Style style) {
  if (px.size() < 2) return;
  body_ += "<polyline " + attributes(style) + " points=\"";
  for (std::size_t i = 0; i < px.size(); ++i) {
    if (i) body_ += ' ';
    body_ += svg_number(px[i].first) + "," + svg_number(px[i].second);
  }
  body_ += "\"/>\n";
}

void SvgWriter::polyline(const std::vector<std::pair<double, double>>& points, Style style) {
  // A small margin keeps strokes that run along the border intact.
  const double mx = 0.01 * (x_hi_ - x_lo_), my = 0.01 * (y_hi_ - y_lo_);
  std::vector<std::pair<double, double>> run;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    auto p0 = points[i], p1 = points[i + 1];
    if (!clip(x_lo_ - mx, x_hi_ + mx, y_lo_ - my, y_hi_ + my, p0, p1)) {
      emit_run(run, style);
      run.clear();
      continue;
    }
    const bool continues = p0 == points[i] && !run.empty();
    if (!continues) {
      emit_run(run, style);
      run.clear();
      run.push_back(to_px(p0.first, p0.second));
    }
    run.push_back(to_px(p1.first, p1.second));
    if (p1 != points[i + 1]) {
      emit_run(run, style);
      run.clear();
    }
  }
  emit_run(run, style);
}

void SvgWriter::line(double x0, double y0, double x1, double y1, Style style) { polyline({{x0, y0}, {x1, y1}}, style); }

void SvgWriter::marker(const Rational& x, const Rational& y, const std::string& css_class, const std::string& label) {
  const auto [px, py] = to_px(to_double(x), to_double(y));
  body_ += "<circle class=\"" + css_class + "\" fill=\"#c00\" data-label=\"" + escape(label) + "\" data-x=\"" +
           svg_number(x) + "\" data-y=\"" + svg_number(y) + "\" cx=\"" + svg_number(px) + "\" cy=\"" + svg_number(py) +
           "\" r=\"3\"/>\n";
  if (!label.empty())
    body_ += "<text class=\"label\" x=\"" + svg_number(px + 5) + "\" y=\"" + svg_number(py - 5) + "\">" +
             escape(label) + "</text>\n";
}

void SvgWriter::text(double x, double y, const std::string& css_class, const std::string& content) {
  const auto [px, py] = to_px(x, y);
  body_ += "<text class=\"" + css_class + "\" x=\"" + svg_number(px) + "\" y=\"" + svg_number(py) + "\">" +
           escape(content) + "</text>\n";
}

std::string SvgWriter::finish() const {
  const std::string w = std::to_string(spec_.width_px), h = std::to_string(spec_.height_px);
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w + "\" height=\"" + h +
         "\" viewBox=\"0 0 " + w + " " + h + "\" data-x-range=\"" + svg_number(spec_.x_lo) + " " +
         svg_number(spec_.x_hi) + "\" data-y-range=\"" + svg_number(spec_.y_lo) + " " + svg_number(spec_.y_hi) +
         "\" font-family=\"serif\" font-size=\"13\">\n";
  out += "<rect width=\"" + w + "\" height=\"" + h + "\" fill=\"#fff\"/>\n";
  out += body_;
  out += "</svg>\n";
  return out;
}

}  // namespace qda
