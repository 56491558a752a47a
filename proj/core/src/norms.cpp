#include "radon/norms.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace radon {

namespace {

void require_samples(int samples, int minimum) {
  if (samples < minimum) {
    throw GeometryError("domain", "need at least " + std::to_string(minimum) + " samples");
  }
}

void require_nonzero(const Vector2& x) {
  if (x.is_zero()) {
    throw GeometryError("zero-vector", "Birkhoff orthogonality needs nonzero vectors");
  }
}

// Coordinates of x over an arbitrary basis {v, w}.
Vector2 coords_over(const Vector2& v, const Vector2& w, const Vector2& x) {
  const double d = det2(v, w);
  return {det2(x, w) / d, det2(v, x) / d};
}

bool in_second_quadrant(const Vector2& c, double eps) { return c.a <= eps && c.b >= -eps; }

}  // namespace

GaugeNorm::GaugeNorm(CentrallySymmetricPolygon body, double form_scale)
    : body_(std::move(body)), form_scale_(form_scale) {
  if (!(form_scale_ > 0.0) || !std::isfinite(form_scale_)) {
    throw GeometryError("form", "symplectic form scale must be positive");
  }
}

double norm(const GaugeNorm& g, const Vector2& x) { return g.body().gauge(x); }

double antinorm(const GaugeNorm& g, const Vector2& x) {
  double best = 0.0;
  for (const auto& y : g.body().vertices()) best = std::max(best, std::abs(det2(y, x)));
  return g.form_scale() * best;
}

CentrallySymmetricPolygon anticircle(const GaugeNorm& g, const Tolerance& tol) {
  const auto& body = g.body();
  std::vector<Vector2> pts;
  pts.reserve(body.size());
  for (std::size_t i = 0; i < body.size(); ++i) {
    const Vector2& y0 = body.vertex(i);
    const Vector2& y1 = body.vertex(i + 1);
    pts.push_back((y1 - y0) / (g.form_scale() * det2(y0, y1)));
  }
  return CentrallySymmetricPolygon(std::move(pts), tol.eps_geom);
}

bool birkhoff(const GaugeNorm& g, const Vector2& x, const Vector2& y, const Tolerance& tol) {
  require_nonzero(x);
  require_nonzero(y);
  const BoundaryLocation where = locate_on_boundary(g.body(), x, tol.eps_geom);
  return support_cone(g.body(), where).contains(y, tol.eps_geom);
}

std::vector<Vector2> birkhoff_companions(const GaugeNorm& g, const Vector2& x, int fan_samples,
                                         const Tolerance& tol) {
  require_nonzero(x);
  const auto& body = g.body();
  const BoundaryLocation where = locate_on_boundary(body, x, tol.eps_geom);
  const SupportCone cone = support_cone(body, where);
  std::vector<Vector2> out;
  if (!where.on_vertex) {
    out.push_back(ray_intersect_boundary(body, cone.first));
    return out;
  }
  const int m = std::max(2, fan_samples);
  const Vector2 f = normalized(cone.first);
  const Vector2 s = normalized(cone.second);
  for (int j = 0; j < m; ++j) {
    const double t = static_cast<double>(j) / (m - 1);
    const Vector2 d = j == 0 ? f : j == m - 1 ? s : f * (1.0 - t) + s * t;
    out.push_back(ray_intersect_boundary(body, d));
  }
  return out;
}

std::vector<Vector2> boundary_samples(const CentrallySymmetricPolygon& body) {
  std::vector<Vector2> out;
  out.reserve(2 * body.size());
  for (std::size_t i = 0; i < body.size(); ++i) {
    out.push_back(body.vertex(i));
    out.push_back((body.vertex(i) + body.vertex(i + 1)) * 0.5);
  }
  return out;
}

SymmetryDefect birkhoff_symmetry_defect(const GaugeNorm& g, int samples, const Tolerance& tol) {
  require_samples(samples, 4);
  const auto& body = g.body();
  SymmetryDefect worst;
  bool first = true;
  for (const auto& x : boundary_samples(body)) {
    for (const auto& y : birkhoff_companions(g, x, samples, tol)) {
      const SupportCone at_y = support_cone(body, locate_on_boundary(body, y, tol.eps_geom));
      const double d = at_y.distance(x, tol.eps_geom);
      if (first || d > worst.defect) {
        worst = {d, x, y};
        first = false;
      }
    }
  }
  return worst;
}

std::pair<Vector2, Vector2> conjugate_diameters(const CentrallySymmetricPolygon& body, const Tolerance& tol) {
  const GaugeNorm g(body);
  const auto& vs = body.vertices();
  for (const auto& v : vs) {
    // The vertex maximizing |[., v]| is Birkhoff orthogonal to v.
    std::size_t arg = 0;
    double best = -1.0;
    for (std::size_t j = 0; j < vs.size(); ++j) {
      const double value = std::abs(det2(vs[j], v));
      if (value > best) {
        best = value;
        arg = j;
      }
    }
    const Vector2& w = vs[arg];
    if (birkhoff(g, v, w, tol) && birkhoff(g, w, v, tol)) return {v, w};
  }
  throw GeometryError("internal", "no conjugate pair found among vertex pairs");
}

bool supporting_direction_quadrant_check(const CentrallySymmetricPolygon& body, const Vector2& v,
                                         const Vector2& w, int samples, const Tolerance& tol) {
  require_samples(samples, 1);
  if (det2(v, w) == 0.0) {
    throw GeometryError("degenerate", "conjugate pair must be linearly independent");
  }
  const double eps = tol.eps_geom;

  // Supporting directions at interior points of the Q1 arc lie in Q2.
  for (const auto& p : boundary_samples(body)) {
    const Vector2 c = coords_over(v, w, p);
    if (!(c.a > eps && c.b > eps)) continue;
    const SupportCone cone = support_cone(body, locate_on_boundary(body, p, eps));
    const Vector2 f = normalized(coords_over(v, w, cone.first));
    const Vector2 s = normalized(coords_over(v, w, cone.second));
    const bool q2 = in_second_quadrant(f, eps) && in_second_quadrant(s, eps);
    const bool q4 = in_second_quadrant(-f, eps) && in_second_quadrant(-s, eps);
    if (!q2 && !q4) return false;
  }

  // Every Q2 direction supports the body at a point of Q1 (or of -Q1 = Q3).
  const auto& vs = body.vertices();
  for (int k = 0; k <= samples; ++k) {
    const double t = static_cast<double>(k) / samples;
    const Vector2 d = v * -t + w * (1.0 - t);
    double best = 0.0;
    for (const auto& y : vs) best = std::max(best, std::abs(det2(d, y)));
    const double slack = eps * length(d);
    bool found = false;
    for (const auto& y : vs) {
      if (std::abs(det2(d, y)) < best - slack) continue;
      const Vector2 c = coords_over(v, w, y);
      if ((c.a >= -eps && c.b >= -eps) || (c.a <= eps && c.b <= eps)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

ConstantArea radon_constant_area(const GaugeNorm& g, int samples, const Tolerance& tol) {
  require_samples(samples, 4);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double sum = 0.0;
  std::size_t count = 0;
  for (const auto& x : boundary_samples(g.body())) {
    for (const auto& y : birkhoff_companions(g, x, samples, tol)) {
      const double area = std::abs(g.form(x, y));
      lo = std::min(lo, area);
      hi = std::max(hi, area);
      sum += area;
      ++count;
    }
  }
  ConstantArea out;
  out.constant = sum / static_cast<double>(count);
  out.spread = hi - lo;
  out.is_radon = out.spread <= tol.eps_norm;
  return out;
}

Homothety anticircle_homothety_check(const GaugeNorm& g, const Tolerance& tol) {
  const CentrallySymmetricPolygon anti = anticircle(g, tol);
  // anti = r * B  <=>  every anticircle vertex has gauge r and every body
  // vertex has antinorm 1 / r.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& a : anti.vertices()) {
    const double r = norm(g, a);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  for (const auto& y : g.body().vertices()) {
    const double r = 1.0 / antinorm(g, y);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  Homothety out;
  out.ratio = 0.5 * (lo + hi);
  out.is_homothet = hi - lo <= tol.eps_geom * std::max(1.0, out.ratio);
  return out;
}

}  // namespace radon
