#include "radon/bisectors.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace radon {

TangentPair tangents_from(const CentrallySymmetricPolygon& body, const Vector2& p, const Tolerance& tol) {
  if (!(body.gauge(p) > 1.0 + tol.eps_geom)) {
    throw GeometryError("inside", "tangent point must lie strictly outside the body");
  }
  const std::size_t n = body.size();
  std::vector<bool> visible(n);
  for (std::size_t i = 0; i < n; ++i) {
    visible[i] = det2(normalized(body.edge(i)), p - body.vertex(i)) < -tol.eps_geom;
  }
  std::size_t first = n;
  std::size_t last = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (visible[i] && !visible[(i + n - 1) % n]) first = i;
    if (visible[i] && !visible[(i + 1) % n]) last = (i + 1) % n;
  }
  if (first == n || last == n) {
    throw GeometryError("internal", "visible boundary chain not found");
  }
  TangentPair out;
  out.p = p;
  out.touch_r = body.vertex(first);
  out.touch_s = body.vertex(last);
  out.r = {p, out.touch_r - p};
  out.s = {p, out.touch_s - p};
  return out;
}

BisectorReport bisector_points(const CentrallySymmetricPolygon& body, const Vector2& p, const Tolerance& tol) {
  const TangentPair t = tangents_from(body, p, tol);
  const Vector2 origin{0.0, 0.0};
  BisectorReport out;
  out.x1 = intersect_lines(origin, t.r.direction, t.s.point, t.s.direction);
  out.y1 = intersect_lines(origin, t.s.direction, t.r.point, t.r.direction);
  out.x0 = ray_intersect_boundary(body, out.x1);
  out.y0 = ray_intersect_boundary(body, out.y1);

  const Vector2 outer = out.x1 - out.y1;
  const Vector2 inner = out.x0 - out.y0;
  if (length(outer) == 0.0 || length(inner) == 0.0) {
    throw GeometryError("degenerate", "bisector chord collapsed to a point");
  }
  out.parallelism_defect = line_sine(outer, inner);

  out.busemann_dir = t.r.direction / body.gauge(t.r.direction) + t.s.direction / body.gauge(t.s.direction);
  out.glogovskii_dir = p;
  out.bisector_defect = line_sine(out.busemann_dir, out.glogovskii_dir);
  return out;
}

std::vector<Vector2> gauge_ring(const CentrallySymmetricPolygon& body, int ring_samples, double level) {
  if (ring_samples < 8) {
    throw GeometryError("domain", "bisector ring needs at least 8 samples");
  }
  const std::size_t n = body.size();
  std::vector<Vector2> out;
  out.reserve(static_cast<std::size_t>(ring_samples));
  for (int k = 0; k < ring_samples; ++k) {
    const double u = static_cast<double>(k) * static_cast<double>(n) / ring_samples;
    const auto i = static_cast<std::size_t>(u);
    const double f = u - static_cast<double>(i);
    out.push_back((body.vertex(i) + body.edge(i) * f) * level);
  }
  return out;
}

BisectorCriterion radon_bisector_criterion(const CentrallySymmetricPolygon& body, int ring_samples,
                                           double threshold, const Tolerance& tol) {
  BisectorCriterion out;
  bool first = true;
  for (const auto& p : gauge_ring(body, ring_samples)) {
    const BisectorReport r = bisector_points(body, p, tol);
    if (first || r.parallelism_defect > out.worst_defect) {
      out.worst_defect = r.parallelism_defect;
      out.witness = p;
      first = false;
    }
    out.worst_bisector_defect = std::max(out.worst_bisector_defect, r.bisector_defect);
  }
  out.passes = out.worst_defect <= threshold;
  return out;
}

}  // namespace radon
