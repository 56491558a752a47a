#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "radon/bisectors.hpp"
#include "radon/construct.hpp"
#include "radon/fixtures.hpp"
#include "radon/norms.hpp"

using namespace radon;

namespace {

// Distance from q to the line through p with direction d.
double line_residual(const Line& l, const Vector2& q) { return std::abs(det2(normalized(l.direction), q - l.point)); }

bool supports(const CentrallySymmetricPolygon& body, const Line& l, double eps = 1e-12) {
  const Vector2 n = normalized(l.direction);
  double lo = 0.0;
  double hi = 0.0;
  for (const auto& y : body.vertices()) {
    const double s = det2(n, y - l.point);
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  return lo >= -eps || hi <= eps;
}

}  // namespace

TEST_CASE("tangents from the unit square") {
  const CentrallySymmetricPolygon square(fixtures::unit_square());
  const TangentPair t = tangents_from(square, {2, 0});
  CHECK(t.touch_r == Vector2{1, -1});
  CHECK(t.touch_s == Vector2{1, 1});
  CHECK_THROWS_AS(tangents_from(square, {0.5, 0.5}), GeometryError);
  CHECK_THROWS_AS(tangents_from(square, {1, 0.5}), GeometryError);
}

TEST_CASE("tangents from the Euclidean 256-gon") {
  const CentrallySymmetricPolygon circle(fixtures::regular_polygon(256));
  const TangentPair t = tangents_from(circle, {2, 0});
  const double h = std::sqrt(3.0) / 2;
  // Touch points are vertices, so they sit up to half a vertex spacing from the
  // circle's tangent points at 60 degrees.
  const double half_spacing = std::numbers::pi / 256;
  CHECK(distance(t.touch_r, {0.5, -h}) <= half_spacing);
  CHECK(distance(t.touch_s, {0.5, h}) <= half_spacing);
  CHECK(t.touch_s == circle.vertex(43));
}

TEST_CASE("tangent lines support the body and pass through p") {
  std::mt19937_64 rng(61);
  for (int k = 0; k < 10; ++k) {
    const CentrallySymmetricPolygon body(fixtures::random_symmetric_body(rng, 3 + k));
    for (const auto& p : gauge_ring(body, 16, 1.7)) {
      const TangentPair t = tangents_from(body, p);
      CHECK(supports(body, t.r));
      CHECK(supports(body, t.s));
      CHECK(line_residual(t.r, p) <= 1e-12);
      CHECK(line_residual(t.s, t.touch_s) <= 1e-12);
      CHECK(body.gauge(t.touch_r) == doctest::Approx(1.0));
    }
  }
  // An edge-collinear p: the touch point is the edge endpoint nearer p.
  const CentrallySymmetricPolygon square(fixtures::unit_square());
  const TangentPair t = tangents_from(square, {1, 3});
  CHECK(t.touch_r == Vector2{1, 1});
}

TEST_CASE("bisector points on the hexagon") {
  const CentrallySymmetricPolygon hex(fixtures::hexagon());
  const BisectorReport r = bisector_points(hex, {2, 0.5});
  CHECK(r.parallelism_defect <= 1e-9);
  CHECK(r.bisector_defect <= 1e-9);
  CHECK(hex.gauge(r.x0) == doctest::Approx(1.0));
  CHECK(hex.gauge(r.y0) == doctest::Approx(1.0));
  const TangentPair t = tangents_from(hex, {2, 0.5});
  CHECK(line_residual(t.s, r.x1) <= 1e-12);
  CHECK(line_residual(t.r, r.y1) <= 1e-12);
  // x0 and x1 lie on one origin line parallel to r.
  CHECK(std::abs(det2(r.x0, t.r.direction)) <= 1e-12);
  CHECK(std::abs(det2(r.x1, t.r.direction)) <= 1e-12);
}

TEST_CASE("bisector defect on the Euclidean 256-gon and the square") {
  const CentrallySymmetricPolygon circle(fixtures::regular_polygon(256));
  CHECK(bisector_points(circle, {2, 0}).parallelism_defect <= 1e-3);

  const CentrallySymmetricPolygon square(fixtures::unit_square());
  const BisectorCriterion c = radon_bisector_criterion(square, 64, 1e-9);
  CHECK_FALSE(c.passes);
  CHECK(c.worst_defect > 1e-3);
  CHECK(bisector_points(square, c.witness).parallelism_defect == c.worst_defect);
}

TEST_CASE("defect is invariant under scaling and under swapping r and s") {
  std::mt19937_64 rng(67);
  const CentrallySymmetricPolygon body(fixtures::random_symmetric_body(rng, 5));
  const CentrallySymmetricPolygon big = body.scaled(3.0);
  // Reflecting the body and p through the line a = b swaps the roles of r and s.
  std::vector<Vector2> mirrored;
  for (const auto& y : body.vertices()) mirrored.push_back({y.b, y.a});
  const CentrallySymmetricPolygon flipped(mirrored);
  for (const auto& p : gauge_ring(body, 24)) {
    const double d = bisector_points(body, p).parallelism_defect;
    CHECK(bisector_points(big, p * 3.0).parallelism_defect == doctest::Approx(d).epsilon(1e-9));
    CHECK(bisector_points(flipped, {p.b, p.a}).parallelism_defect == doctest::Approx(d).epsilon(1e-9));
  }
}

TEST_CASE("radon bodies pass the bisector sweep and the two bisectors agree") {
  std::mt19937_64 rng(71);
  for (int k = 0; k < 5; ++k) {
    const CentrallySymmetricPolygon body = assemble_radon(validate_generator(fixtures::random_arc(rng, 3 + 4 * k))).polygon();
    const BisectorCriterion c = radon_bisector_criterion(body, 64, 1e-9);
    CHECK(c.passes);
    CHECK(c.worst_bisector_defect <= 1e-9);
  }
  for (double p : {1.5, 3.0}) {
    const BisectorCriterion c = radon_bisector_criterion(CentrallySymmetricPolygon(fixtures::lp_ball(p, 64)), 64, 1e-9);
    CHECK_FALSE(c.passes);
    CHECK(c.worst_bisector_defect > 1e-9);
  }
}

TEST_CASE("gauge ring") {
  const CentrallySymmetricPolygon hex(fixtures::hexagon());
  const auto ring = gauge_ring(hex, 12);
  CHECK(ring.size() == 12);
  for (const auto& p : ring) CHECK(hex.gauge(p) == doctest::Approx(2.0));
  CHECK_THROWS_AS(gauge_ring(hex, 4), GeometryError);
}
