#include "radon/plane.hpp"

#include <algorithm>
#include <numbers>

namespace radon {

void Tolerance::validate() const {
  if (!(eps_geom > 0.0) || !(eps_norm > 0.0)) {
    throw GeometryError("tolerance", "eps_geom and eps_norm must be positive");
  }
  if (samples < 8) {
    throw GeometryError("tolerance", "samples must be at least 8");
  }
}

double line_sine(const Vector2& x, const Vector2& y) {
  const double lx = length(x);
  const double ly = length(y);
  if (lx == 0.0 || ly == 0.0) {
    throw GeometryError("degenerate", "line_sine of a zero vector");
  }
  return std::abs(det2(x, y)) / (lx * ly);
}

Frame::Frame(Vector2 v, Vector2 w, double eps) : v_(v), w_(w) {
  if (std::abs(det2(v, w) - 1.0) > eps) {
    throw GeometryError("frame", "frame vectors must satisfy [v, w] = 1");
  }
}

Vector2 Frame::to_frame(const Vector2& external) const {
  const double d = det2(v_, w_);
  return {det2(external, w_) / d, det2(v_, external) / d};
}

Vector2 Frame::to_external(const Vector2& coeffs) const { return v_ * coeffs.a + w_ * coeffs.b; }

QuadrantSet QuadrantSet::antipodal() const {
  QuadrantSet out;
  if (contains(Quadrant::Q1)) out.insert(Quadrant::Q3);
  if (contains(Quadrant::Q2)) out.insert(Quadrant::Q4);
  if (contains(Quadrant::Q3)) out.insert(Quadrant::Q1);
  if (contains(Quadrant::Q4)) out.insert(Quadrant::Q2);
  return out;
}

QuadrantSet classify_quadrant(const Vector2& x) {
  if (x.is_zero()) {
    throw GeometryError("zero-vector", "the origin has no quadrant");
  }
  QuadrantSet out;
  if (x.a >= 0.0 && x.b >= 0.0) out.insert(Quadrant::Q1);
  if (x.a <= 0.0 && x.b >= 0.0) out.insert(Quadrant::Q2);
  if (x.a <= 0.0 && x.b <= 0.0) out.insert(Quadrant::Q3);
  if (x.a >= 0.0 && x.b <= 0.0) out.insert(Quadrant::Q4);
  return out;
}

Verdict is_convex_cyclic(std::span<const Vector2> cycle, double eps_geom) {
  const std::size_t n = cycle.size();
  if (n < 3) {
    return {false, "fewer than 3 vertices"};
  }
  bool left = false;
  bool right = false;
  double winding = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vector2& prev = cycle[(i + n - 1) % n];
    const Vector2& cur = cycle[i];
    const Vector2& next = cycle[(i + 1) % n];
    const Vector2 e0 = cur - prev;
    const Vector2 e1 = next - cur;
    if (e0.is_zero() || e1.is_zero()) {
      return {false, "repeated vertex at index " + std::to_string(i)};
    }
    const double c = det2(e0, e1);
    if (c > eps_geom) left = true;
    if (c < -eps_geom) right = true;
    winding += std::atan2(c, dot(e0, e1));
  }
  if (!left && !right) {
    return {false, "degenerate cycle: all vertices collinear"};
  }
  if (left && right) {
    return {false, "cycle turns in both directions"};
  }
  if (std::abs(std::abs(winding) - 2.0 * std::numbers::pi) > 1e-6) {
    return {false, "cycle does not wind exactly once"};
  }
  return {};
}

namespace {

bool within_chord(const Vector2& a, const Vector2& mid, const Vector2& c, double eps) {
  const Vector2 chord = c - a;
  const double len = length(chord);
  if (len == 0.0) return false;
  if (std::abs(det2(chord, mid - a)) / len > eps) return false;
  return dot(mid - a, c - mid) > 0.0;
}

}  // namespace

std::vector<Vector2> simplify_chain(std::span<const Vector2> chain, double eps_geom, bool merge_collinear) {
  std::vector<Vector2> out;
  out.reserve(chain.size());
  for (const auto& p : chain) {
    if (!out.empty() && distance(out.back(), p) <= eps_geom) continue;
    out.push_back(p);
    while (merge_collinear && out.size() >= 3 &&
           within_chord(out[out.size() - 3], out[out.size() - 2], out.back(), eps_geom)) {
      out.erase(out.end() - 2);
    }
  }
  // Keep the exact final endpoint even when it collapsed onto a near-duplicate.
  if (!chain.empty() && !out.empty() && out.size() > 1 && !(out.back() == chain.back())) {
    out.back() = chain.back();
  }
  return out;
}

Polyline::Polyline(std::vector<Vector2> vertices, double eps_geom)
    : vertices_(simplify_chain(vertices, eps_geom, true)) {
  if (vertices_.size() < 2) {
    throw GeometryError("degenerate", "a polyline needs at least 2 distinct vertices");
  }
}

CentrallySymmetricPolygon::CentrallySymmetricPolygon(std::vector<Vector2> raw, double eps_geom, Merge merge) {
  // Cyclic de-duplication.
  std::vector<Vector2> pts;
  pts.reserve(raw.size());
  for (const auto& p : raw) {
    if (pts.empty() || distance(pts.back(), p) > eps_geom) pts.push_back(p);
  }
  while (pts.size() > 1 && distance(pts.front(), pts.back()) <= eps_geom) pts.pop_back();

  // Collinear merge decided against the original neighbours, then made
  // symmetric so rounding cannot drop only one of a pair of opposite vertices.
  if (merge == Merge::Collinear && pts.size() >= 4) {
    const std::size_t n = pts.size();
    std::vector<bool> keep(n, true);
    for (std::size_t i = 0; i < n; ++i) {
      keep[i] = !within_chord(pts[(i + n - 1) % n], pts[i], pts[(i + 1) % n], eps_geom);
    }
    if (n % 2 == 0) {
      for (std::size_t i = 0; i < n / 2; ++i) {
        const bool k = keep[i] || keep[i + n / 2];
        keep[i] = keep[i + n / 2] = k;
      }
    }
    std::vector<Vector2> kept;
    for (std::size_t i = 0; i < n; ++i) {
      if (keep[i]) kept.push_back(pts[i]);
    }
    pts = std::move(kept);
  }

  if (pts.size() < 4) {
    throw GeometryError("degenerate", "a centrally symmetric polygon needs at least 4 vertices");
  }
  if (auto verdict = is_convex_cyclic(pts, eps_geom); !verdict) {
    throw GeometryError("convexity", verdict.reason);
  }
  double area2 = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) area2 += det2(pts[i], pts[(i + 1) % pts.size()]);
  if (area2 < 0.0) std::reverse(pts.begin(), pts.end());

  const std::size_t n = pts.size();
  if (n % 2 != 0) {
    throw GeometryError("symmetry", "odd vertex count cannot be centrally symmetric");
  }
  // Find the antipode of vertex 0, then require the whole cycle to match.
  std::size_t shift = n;
  for (std::size_t j = 0; j < n; ++j) {
    if (distance(pts[j], -pts[0]) <= eps_geom) {
      shift = j;
      break;
    }
  }
  if (shift != n / 2) {
    throw GeometryError("symmetry", "vertex list is not invariant under x -> -x");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (distance(pts[(i + n / 2) % n], -pts[i]) > eps_geom) {
      throw GeometryError("symmetry", "vertex " + std::to_string(i) + " has no antipodal partner");
    }
  }

  edge_area_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    edge_area_[i] = det2(pts[i], pts[(i + 1) % n]);
    if (edge_area_[i] <= eps_geom) {
      throw GeometryError("origin", "origin is not strictly interior");
    }
  }
  vertices_ = std::move(pts);
}

double CentrallySymmetricPolygon::gauge(const Vector2& x) const {
  if (x.is_zero()) return 0.0;
  double best = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    best = std::max(best, det2(x, edge(i)) / edge_area_[i]);
  }
  return best;
}

std::size_t CentrallySymmetricPolygon::exit_edge(const Vector2& x) const {
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (det2(vertices_[i], x) >= 0.0 && det2(x, vertex(i + 1)) > 0.0) return i;
  }
  // Rounding left no cone containing x; fall back to the gauge maximizer.
  std::size_t arg = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double g = det2(x, edge(i)) / edge_area_[i];
    if (g > best) {
      best = g;
      arg = i;
    }
  }
  return arg;
}

CentrallySymmetricPolygon CentrallySymmetricPolygon::scaled(double factor) const {
  std::vector<Vector2> out;
  out.reserve(vertices_.size());
  for (const auto& p : vertices_) out.push_back(p * factor);
  return CentrallySymmetricPolygon(std::move(out), 1e-9 * std::max(1.0, factor * factor), Merge::KeepCollinear);
}

Vector2 ray_intersect_boundary(const CentrallySymmetricPolygon& body, const Vector2& direction) {
  if (direction.is_zero()) {
    throw GeometryError("zero-vector", "ray direction must be nonzero");
  }
  return direction / body.gauge(direction);
}

BoundaryLocation locate_on_boundary(const CentrallySymmetricPolygon& body, const Vector2& x, double eps_geom) {
  const Vector2 q = ray_intersect_boundary(body, x);
  const std::size_t i = body.exit_edge(x);
  const std::size_t n = body.size();
  if (distance(q, body.vertex(i)) <= eps_geom) return {body.vertex(i), i, true};
  if (distance(q, body.vertex(i + 1)) <= eps_geom) return {body.vertex(i + 1), (i + 1) % n, true};
  return {q, i, false};
}

bool SupportCone::contains(const Vector2& d, double eps) const {
  const Vector2 f = normalized(first);
  const Vector2 s = normalized(second);
  const Vector2 u = normalized(d);
  const double s1 = det2(f, u);
  const double s2 = det2(u, s);
  return (s1 >= -eps && s2 >= -eps) || (s1 <= eps && s2 <= eps);
}

double SupportCone::distance(const Vector2& d, double eps) const {
  if (contains(d, eps)) return 0.0;
  return std::min(line_sine(first, d), line_sine(second, d));
}

SupportCone support_cone(const CentrallySymmetricPolygon& body, const BoundaryLocation& where) {
  if (where.on_vertex) {
    const std::size_t n = body.size();
    return {body.edge((where.index + n - 1) % n), body.edge(where.index)};
  }
  const Vector2 e = body.edge(where.index);
  return {e, e};
}

Vector2 intersect_lines(const Vector2& p, const Vector2& d, const Vector2& q, const Vector2& e) {
  const double denom = det2(d, e);
  if (denom == 0.0) {
    throw GeometryError("degenerate", "lines are parallel");
  }
  return p + d * (det2(q - p, e) / denom);
}

}  // namespace radon
