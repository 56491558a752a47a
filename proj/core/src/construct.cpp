#include "radon/construct.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace radon {

namespace {

constexpr Vector2 kV{1.0, 0.0};
constexpr Vector2 kW{0.0, 1.0};

void require_unit_interval(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw GeometryError("domain", "parameter must lie in [0, 1], got " + std::to_string(lambda));
  }
}

// One affine piece lambda -> intercept + slope * lambda of the support function.
struct SupportLine {
  double intercept;
  double slope;
  std::size_t vertex;

  double at(double lambda) const { return intercept + slope * lambda; }
};

// Breakpoint between two lines of strictly increasing slope.
double crossing(const SupportLine& lo, const SupportLine& hi) {
  return (lo.intercept - hi.intercept) / (hi.slope - lo.slope);
}

Vector2 reflect_b_axis(const Vector2& x) { return {0.0 - x.a, x.b}; }

}  // namespace

GeneratorArc validate_generator(const std::vector<Vector2>& raw, const Tolerance& tol) {
  if (raw.size() < 2) {
    throw GeometryError("degenerate", "a generator arc needs at least 2 vertices");
  }
  if (!(raw.front() == kW)) {
    throw GeometryError("endpoint", "generator arc must start exactly at w = (0, 1)");
  }
  if (!(raw.back() == kV)) {
    throw GeometryError("endpoint", "generator arc must end exactly at v = (1, 0)");
  }
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto& x = raw[i];
    if (x.a < -tol.eps_geom || x.a > 1.0 + tol.eps_geom || x.b < -tol.eps_geom || x.b > 1.0 + tol.eps_geom) {
      throw GeometryError("parallelogram",
                          "vertex " + std::to_string(i) + " lies outside conv{o, v, w, v+w}");
    }
  }

  GeneratorArc arc;
  arc.vertices_ = simplify_chain(raw, tol.eps_geom, true);
  if (arc.vertices_.size() < 2) {
    throw GeometryError("degenerate", "generator arc collapsed to a point");
  }

  std::vector<Vector2> cycle;
  cycle.reserve(arc.vertices_.size() + 1);
  cycle.push_back({0.0, 0.0});
  cycle.insert(cycle.end(), arc.vertices_.begin(), arc.vertices_.end());
  if (auto verdict = is_convex_cyclic(cycle, tol.eps_geom); !verdict) {
    throw GeometryError("convexity", "o-w-arc-v cycle is not convex (" + verdict.reason + ")");
  }
  for (std::size_t i = 0; i < arc.vertices_.size(); ++i) {
    const auto& x = arc.vertices_[i];
    if (x.a + x.b < 1.0 - tol.eps_geom) {
      throw GeometryError("gauge", "vertex " + std::to_string(i) + " lies below the chord [w v]");
    }
  }
  return arc;
}

double support_value(const GeneratorArc& arc, double lambda) {
  require_unit_interval(lambda);
  const Vector2 z = chord_point(lambda);
  double best = 0.0;
  for (const auto& x : arc.vertices()) best = std::max(best, std::abs(det2(x, z)));
  return best;
}

double SupportProfile::evaluate(const GeneratorArc& arc, double lambda) const {
  require_unit_interval(lambda);
  auto it = std::upper_bound(knots.begin(), knots.end(), lambda);
  std::size_t piece = it == knots.begin() ? 0 : static_cast<std::size_t>(it - knots.begin()) - 1;
  piece = std::min(piece, active.size() - 1);
  return std::abs(det2(arc[active[piece]], chord_point(lambda)));
}

SupportProfile support_profile(const GeneratorArc& arc) {
  // For x = (a, b) in the first quadrant, |[x, z(lambda)]| = a + (b - a) lambda.
  std::vector<SupportLine> lines;
  lines.reserve(arc.size());
  for (std::size_t i = 0; i < arc.size(); ++i) {
    lines.push_back({arc[i].a, arc[i].b - arc[i].a, i});
  }
  std::sort(lines.begin(), lines.end(), [](const SupportLine& l, const SupportLine& r) {
    return l.slope < r.slope || (l.slope == r.slope && l.intercept > r.intercept);
  });
  lines.erase(std::unique(lines.begin(), lines.end(),
                          [](const SupportLine& l, const SupportLine& r) { return l.slope == r.slope; }),
              lines.end());

  // Upper envelope over the whole real line.
  std::vector<SupportLine> hull;
  for (const auto& line : lines) {
    while (hull.size() >= 2) {
      const auto& l1 = hull[hull.size() - 2];
      const auto& l2 = hull.back();
      // l2 is redundant when l1 and the new line cross no later than l1 and l2.
      if ((l1.intercept - line.intercept) * (l2.slope - l1.slope) <=
          (l1.intercept - l2.intercept) * (line.slope - l1.slope)) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(line);
  }

  SupportProfile profile;
  profile.knots.push_back(0.0);
  for (std::size_t k = 0; k < hull.size(); ++k) {
    const double lo = k == 0 ? 0.0 : std::max(0.0, crossing(hull[k - 1], hull[k]));
    const double hi = k + 1 == hull.size() ? 1.0 : std::min(1.0, crossing(hull[k], hull[k + 1]));
    if (hi <= lo) continue;
    if (!profile.active.empty()) profile.knots.push_back(lo);
    profile.active.push_back(hull[k].vertex);
  }
  profile.knots.push_back(1.0);

  profile.values.reserve(profile.knots.size());
  for (std::size_t k = 0; k < profile.knots.size(); ++k) {
    const std::size_t piece = std::min(k, profile.active.size() - 1);
    profile.values.push_back(std::abs(det2(arc[profile.active[piece]], chord_point(profile.knots[k]))));
  }
  return profile;
}

Vector2 gamma2_point(const GeneratorArc& arc, double lambda) {
  require_unit_interval(lambda);
  if (lambda == 0.0) return kW;
  if (lambda == 1.0) return -kV;
  return chord_point(lambda) / support_value(arc, lambda);
}

Vector2 dual_vertex(const Vector2& x, const Vector2& y) {
  const double d = det2(x, y);
  if (d == 0.0) {
    throw GeometryError("degenerate", "dual vertex of linearly dependent points");
  }
  return (y - x) / d;
}

Polyline gamma2_polygon(const GeneratorArc& arc, const Tolerance& tol) {
  const SupportProfile profile = support_profile(arc);
  std::vector<Vector2> pts;
  pts.reserve(profile.active.size() + 1);
  pts.push_back(kW);
  for (std::size_t k = 1; k < profile.active.size(); ++k) {
    pts.push_back(dual_vertex(arc[profile.active[k - 1]], arc[profile.active[k]]));
  }
  pts.push_back(-kV);
  Polyline gamma2(std::move(pts), tol.eps_geom);

  // Post-hoc: endpoints, containment in conv{-v, w, w-v}, convexity with [o -v] and [o w].
  if (!(gamma2.front() == kW) || !(gamma2.back() == -kV)) {
    throw GeometryError("internal", "second arc does not run from w to -v");
  }
  for (const auto& p : gamma2.vertices()) {
    if (p.a > tol.eps_geom || p.a < -1.0 - tol.eps_geom || p.b > 1.0 + tol.eps_geom ||
        p.b - p.a < 1.0 - tol.eps_geom) {
      throw GeometryError("internal", "second arc leaves conv{-v, w, w-v}");
    }
  }
  std::vector<Vector2> cycle{{0.0, 0.0}};
  cycle.insert(cycle.end(), gamma2.vertices().begin(), gamma2.vertices().end());
  if (auto verdict = is_convex_cyclic(cycle, tol.eps_geom); !verdict) {
    throw GeometryError("internal", "o-w-gamma2-(-v) cycle is not convex (" + verdict.reason + ")");
  }
  return gamma2;
}

Polyline redualize(const Polyline& gamma2, const Tolerance& tol) {
  std::vector<Vector2> mirrored;
  mirrored.reserve(gamma2.size());
  for (const auto& y : gamma2.vertices()) mirrored.push_back(reflect_b_axis(y));
  const Polyline dual = gamma2_polygon(validate_generator(mirrored, tol), tol);
  std::vector<Vector2> back;
  back.reserve(dual.size());
  for (const auto& p : dual.vertices()) back.push_back(reflect_b_axis(p));
  return Polyline(std::move(back), tol.eps_geom);
}

const char* to_string(ArcLabel label) {
  switch (label) {
    case ArcLabel::Gamma1:
      return "gamma1";
    case ArcLabel::Gamma2:
      return "gamma2";
    case ArcLabel::NegGamma1:
      return "-gamma1";
    case ArcLabel::NegGamma2:
      return "-gamma2";
  }
  return "?";
}

RadonCurve::RadonCurve(CentrallySymmetricPolygon polygon, IndexRange arc1, IndexRange arc2, Frame frame)
    : polygon_(std::move(polygon)), arc1_(arc1), arc2_(arc2), frame_(frame) {
  const std::size_t n = polygon_.size();
  if (!(arc1_.first < arc1_.last && arc1_.last == arc2_.first && arc2_.first < arc2_.last &&
        arc2_.last - arc1_.first == n / 2 && arc2_.last < n)) {
    throw GeometryError("meta", "arc index ranges do not describe a quarter decomposition");
  }
  const double eps = 1e-9;
  if (distance(polygon_.vertex(arc1_.first), kV) > eps || distance(polygon_.vertex(arc1_.last), kW) > eps ||
      distance(polygon_.vertex(arc2_.last), -kV) > eps) {
    throw GeometryError("meta", "arc ranges must start at v, meet at w and end at -v");
  }
}

std::vector<Vector2> RadonCurve::arc1() const {
  std::vector<Vector2> out;
  for (std::size_t i = arc1_.last + 1; i-- > arc1_.first;) out.push_back(polygon_.vertex(i));
  return out;
}

std::vector<Vector2> RadonCurve::arc2() const {
  std::vector<Vector2> out;
  for (std::size_t i = arc2_.first; i <= arc2_.last; ++i) out.push_back(polygon_.vertex(i));
  return out;
}

ArcLabel RadonCurve::label_of(std::size_t vertex_index) const {
  const std::size_t n = polygon_.size();
  const std::size_t rel = (vertex_index % n + n - arc1_.first) % n;
  const std::size_t m = arc1_.last - arc1_.first;
  const std::size_t k = arc2_.last - arc2_.first;
  if (rel <= m) return ArcLabel::Gamma1;
  if (rel < m + k) return ArcLabel::Gamma2;
  if (rel <= 2 * m + k) return ArcLabel::NegGamma1;
  return ArcLabel::NegGamma2;
}

bool RadonCurve::on_arc(std::size_t vertex_index, ArcLabel label) const {
  const std::size_t n = polygon_.size();
  const std::size_t rel = (vertex_index % n + n - arc1_.first) % n;
  const std::size_t m = arc1_.last - arc1_.first;
  const std::size_t k = arc2_.last - arc2_.first;
  switch (label) {
    case ArcLabel::Gamma1:
      return rel <= m;
    case ArcLabel::Gamma2:
      return rel >= m && rel <= m + k;
    case ArcLabel::NegGamma1:
      return rel >= m + k && rel <= 2 * m + k;
    case ArcLabel::NegGamma2:
      return rel >= 2 * m + k || rel == 0;
  }
  return false;
}

RadonCurve assemble_radon(const GeneratorArc& arc, const Tolerance& tol) {
  const Polyline gamma2 = gamma2_polygon(arc, tol);
  const auto& g1 = arc.vertices();
  const auto& g2 = gamma2.vertices();
  const std::size_t m = g1.size() - 1;
  const std::size_t k = g2.size() - 1;

  std::vector<Vector2> cycle;
  cycle.reserve(2 * (m + k));
  for (std::size_t i = g1.size(); i-- > 0;) cycle.push_back(g1[i]);       // v .. w
  for (std::size_t i = 1; i < g2.size(); ++i) cycle.push_back(g2[i]);      // .. -v
  for (std::size_t i = g1.size() - 1; i-- > 0;) cycle.push_back(-g1[i]);   // .. -w
  for (std::size_t i = 1; i + 1 < g2.size(); ++i) cycle.push_back(-g2[i]); // .. before v

  CentrallySymmetricPolygon polygon(std::move(cycle), tol.eps_geom,
                                    CentrallySymmetricPolygon::Merge::KeepCollinear);
  if (polygon.size() != 2 * (m + k) || !(polygon.vertex(0) == kV)) {
    throw GeometryError("internal", "assembled curve lost vertices");
  }
  return RadonCurve(std::move(polygon), {0, m}, {m, m + k});
}

double verify_duality(const GeneratorArc& arc, int grid, const Tolerance& tol) {
  return verify_duality(assemble_radon(arc, tol), grid);
}

double verify_duality(const RadonCurve& curve, int grid) {
  if (grid < 2) {
    throw GeometryError("domain", "duality grid needs at least 2 points");
  }
  const std::vector<Vector2> g2 = curve.arc2();
  double worst = 0.0;
  for (int j = 0; j < grid; ++j) {
    const double theta = static_cast<double>(j) / (grid - 1);
    const Vector2 u{theta, 1.0 - theta};
    double sup = 0.0;
    for (const auto& y : g2) sup = std::max(sup, std::abs(det2(y, u)));
    const Vector2 rebuilt = u / sup;
    const Vector2 truth = ray_intersect_boundary(curve.polygon(), u);
    worst = std::max(worst, distance(rebuilt, truth));
  }
  return worst;
}

double support_bounds_violation(const GeneratorArc& arc, int grid) {
  if (grid < 2) throw GeometryError("domain", "support grid needs at least 2 points");
  double worst = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < grid; ++j) {
    const double lambda = static_cast<double>(j) / (grid - 1);
    const double s = support_value(arc, lambda);
    worst = std::max({worst, std::max(lambda, 1.0 - lambda) - s, s - 1.0});
  }
  return worst;
}

double support_convexity_violation(const GeneratorArc& arc, int grid, int stride) {
  if (grid < 3 || stride < 1) throw GeometryError("domain", "convexity grid needs 3 points and stride >= 1");
  std::vector<double> lambdas;
  std::vector<double> values;
  for (int j = 0; j < grid; j += stride) {
    const double lambda = static_cast<double>(j) / (grid - 1);
    lambdas.push_back(lambda);
    values.push_back(support_value(arc, lambda));
  }
  double worst = -std::numeric_limits<double>::infinity();
  const std::size_t n = lambdas.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 2; k < n; ++k) {
      for (std::size_t j = i + 1; j < k; ++j) {
        const double lhs = (lambdas[k] - lambdas[i]) * values[j];
        const double rhs = (lambdas[k] - lambdas[j]) * values[i] + (lambdas[j] - lambdas[i]) * values[k];
        worst = std::max(worst, lhs - rhs);
      }
    }
  }
  return worst;
}

Gamma2Check check_gamma2(const std::vector<Vector2>& gamma2, const Tolerance& tol) {
  if (gamma2.size() < 2) throw GeometryError("degenerate", "second arc needs at least 2 vertices");
  Gamma2Check out;
  out.endpoint_error = std::max(distance(gamma2.front(), kW), distance(gamma2.back(), -kV));
  // conv{-v, w, w - v} = {a >= -1, b <= 1, b - a >= 1}; violations measured
  // as distances to the side lines.
  for (const auto& y : gamma2) {
    out.outside = std::max({out.outside, -1.0 - y.a, y.b - 1.0, (1.0 - (y.b - y.a)) / std::sqrt(2.0)});
  }
  std::vector<Vector2> cycle{Vector2{0.0, 0.0}};
  cycle.insert(cycle.end(), gamma2.begin(), gamma2.end());
  out.convex = is_convex_cyclic(cycle, tol.eps_geom).ok;
  return out;
}

Attainment check_sup_attainment(const RadonCurve& curve, double lambda, const Tolerance& tol) {
  require_unit_interval(lambda);
  const Vector2 z = chord_point(lambda);
  const auto& vs = curve.polygon().vertices();
  double best = 0.0;
  for (const auto& x : vs) best = std::max(best, std::abs(det2(x, z)));

  std::size_t pick = vs.size();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (std::abs(det2(vs[i], z)) < best - tol.eps_geom) continue;
    if (pick == vs.size()) pick = i;
    if (curve.on_arc(i, ArcLabel::Gamma1) || curve.on_arc(i, ArcLabel::NegGamma1)) {
      pick = i;
      break;
    }
  }
  const ArcLabel label = curve.on_arc(pick, ArcLabel::Gamma1)      ? ArcLabel::Gamma1
                         : curve.on_arc(pick, ArcLabel::NegGamma1) ? ArcLabel::NegGamma1
                                                                   : curve.label_of(pick);
  return {label, vs[pick], std::abs(det2(vs[pick], z))};
}

}  // namespace radon
