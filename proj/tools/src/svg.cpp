#include "radon/cli/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <fmt/format.h>

#include "radon/bisectors.hpp"
#include "radon/norms.hpp"

namespace radon::cli {

namespace {

constexpr double kCanvas = 600.0;
constexpr double kHalfExtent = 1.5;
constexpr double kScale = kCanvas / (2.0 * kHalfExtent);

constexpr std::array<const char*, 6> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

// Rounded to the printed precision first so -0.00001 cannot print as "-0.0000".
std::string num(double x) {
  const double r = std::round(x * 1e4) / 1e4 + 0.0;
  return fmt::format("{:.4f}", r);
}

std::string px(const Vector2& p) { return num(kCanvas / 2 + kScale * p.a) + "," + num(kCanvas / 2 - kScale * p.b); }

std::string closed_path(const std::vector<Vector2>& pts, const std::string& attrs) {
  std::string d;
  for (std::size_t i = 0; i < pts.size(); ++i) d += (i == 0 ? "M" : " L") + px(pts[i]);
  return fmt::format("  <path d=\"{} Z\" {}/>\n", d, attrs);
}

std::string segment(const Vector2& p, const Vector2& q, const std::string& attrs) {
  return fmt::format("  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" {}/>\n", num(kCanvas / 2 + kScale * p.a),
                     num(kCanvas / 2 - kScale * p.b), num(kCanvas / 2 + kScale * q.a),
                     num(kCanvas / 2 - kScale * q.b), attrs);
}

std::string marker(const Vector2& p, const char* label, const char* color) {
  return fmt::format("  <circle class=\"bisector-point\" data-label=\"{}\" cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"{}\"/>\n",
                     label, num(kCanvas / 2 + kScale * p.a), num(kCanvas / 2 - kScale * p.b), color);
}

// Segment of the line through p along d covering the parameters in ts.
std::string line_through(const Vector2& p, const Vector2& d, std::initializer_list<double> ts, const std::string& attrs) {
  const auto [lo, hi] = std::minmax(ts);
  return segment(p + d * (lo - 0.25), p + d * (hi + 0.25), attrs);
}

double param_on(const Vector2& p, const Vector2& d, const Vector2& q) { return dot(q - p, d) / dot(d, d); }

std::string bisector_overlay(const CentrallySymmetricPolygon& body, const Vector2& p, const char* color,
                             const Tolerance& tol) {
  const TangentPair t = tangents_from(body, p, tol);
  const BisectorReport r = bisector_points(body, p, tol);
  const std::string tangent = fmt::format("class=\"tangent\" stroke=\"{}\" stroke-width=\"1\" fill=\"none\"", color);
  std::string out = "  <g class=\"bisector\">\n";
  out += line_through(p, t.r.direction, {0.0, 1.0, param_on(p, t.r.direction, r.y1)}, tangent);
  out += line_through(p, t.s.direction, {0.0, 1.0, param_on(p, t.s.direction, r.x1)}, tangent);
  out += segment(r.x1, r.y1, fmt::format("class=\"chord-outer\" stroke=\"{}\" stroke-width=\"1.5\"", color));
  out += segment(r.x0, r.y0, fmt::format("class=\"chord-inner\" stroke=\"{}\" stroke-width=\"1.5\"", color));
  out += fmt::format("  <circle class=\"external-point\" cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"none\" stroke=\"{}\"/>\n",
                     num(kCanvas / 2 + kScale * p.a), num(kCanvas / 2 - kScale * p.b), color);
  out += marker(r.x0, "x0", color);
  out += marker(r.x1, "x1", color);
  out += marker(r.y0, "y0", color);
  out += marker(r.y1, "y1", color);
  out += "  </g>\n";
  return out;
}

}  // namespace

std::string render_svg(const std::vector<CentrallySymmetricPolygon>& bodies, const Overlays& overlays,
                       const Tolerance& tol) {
  std::string out = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} {0}\">\n",
      static_cast<int>(kCanvas));
  out += fmt::format("  <rect width=\"{0}\" height=\"{0}\" fill=\"white\"/>\n", static_cast<int>(kCanvas));
  const std::string axis = "class=\"axis\" stroke=\"#cccccc\" stroke-width=\"1\"";
  out += segment({-kHalfExtent, 0.0}, {kHalfExtent, 0.0}, axis);
  out += segment({0.0, -kHalfExtent}, {0.0, kHalfExtent}, axis);

  for (std::size_t i = 0; i < bodies.size(); ++i) {
    const auto& body = bodies[i];
    const char* color = kPalette[i % kPalette.size()];
    out += closed_path(body.vertices(),
                       fmt::format("class=\"curve\" fill=\"none\" stroke=\"{}\" stroke-width=\"2\"", color));
    if (overlays.anticircle) {
      const CentrallySymmetricPolygon anti = anticircle(GaugeNorm(body), tol);
      out += closed_path(anti.vertices(), fmt::format("class=\"anticircle\" fill=\"none\" stroke=\"{}\" "
                                                      "stroke-width=\"1\" stroke-dasharray=\"6 4\"",
                                                      color));
    }
    if (overlays.conjugate) {
      const auto [v, w] = conjugate_diameters(body, tol);
      out += closed_path({v + w, w - v, -v - w, v - w},
                         fmt::format("class=\"conjugate-parallelogram\" fill=\"none\" stroke=\"{}\" "
                                     "stroke-width=\"1\"",
                                     color));
      const std::string diam = fmt::format("class=\"conjugate-diameter\" stroke=\"{}\" stroke-width=\"1\"", color);
      out += segment(-v, v, diam);
      out += segment(-w, w, diam);
    }
    if (overlays.bisector) out += bisector_overlay(body, overlays.bisector_point, color, tol);
  }
  out += "</svg>\n";
  return out;
}

}  // namespace radon::cli
