#pragma once

#include <vector>

#include "radon/plane.hpp"

namespace radon {

struct Line {
  Vector2 point;
  Vector2 direction;
};

/// The two supporting lines of a body through an exterior point p. `r` runs
/// to the first vertex of the boundary chain visible from p (counterclockwise
/// order), `s` to the last one. When p is collinear with an edge the touch
/// point is the edge endpoint nearer p.
struct TangentPair {
  Vector2 p;
  Line r;
  Line s;
  Vector2 touch_r;
  Vector2 touch_s;
};

/// Throws GeometryError("inside") unless gauge(p) > 1 + eps_geom.
TangentPair tangents_from(const CentrallySymmetricPolygon& body, const Vector2& p, const Tolerance& tol = {});

struct BisectorReport {
  Vector2 x0;  // boundary point on the origin line parallel to r
  Vector2 x1;  // that line meets s
  Vector2 y0;  // boundary point on the origin line parallel to s
  Vector2 y1;  // that line meets r
  Vector2 busemann_dir;    // sum of the unit vectors along r and s
  Vector2 glogovskii_dir;  // direction of the line through o and p
  double parallelism_defect = 0.0;  // |sine| between chords [x1 y1] and [x0 y0]
  double bisector_defect = 0.0;     // |sine| between the two bisector directions
};

/// x0 is taken on the same ray from the origin as x1 (and y0 with y1).
BisectorReport bisector_points(const CentrallySymmetricPolygon& body, const Vector2& p, const Tolerance& tol = {});

struct BisectorCriterion {
  bool passes = false;
  double worst_defect = 0.0;
  Vector2 witness;
  double worst_bisector_defect = 0.0;
};

/// Exterior points on the gauge-2 ring, spaced evenly in vertex-index
/// parameter so the sweep commutes with linear maps.
std::vector<Vector2> gauge_ring(const CentrallySymmetricPolygon& body, int ring_samples, double level = 2.0);

/// Sweeps bisector_points over the gauge-2 ring; passes when the worst chord
/// defect is at most `threshold`.
BisectorCriterion radon_bisector_criterion(const CentrallySymmetricPolygon& body, int ring_samples,
                                           double threshold, const Tolerance& tol = {});

}  // namespace radon
