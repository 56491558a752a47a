#pragma once

#include <cstddef>
#include <vector>

#include "radon/plane.hpp"

namespace radon {

/// A convex arc from w = (0,1) to v = (1,0) inside the unit square, such that
/// the segments [o v], [o w] and the arc bound a convex body.
class GeneratorArc {
 public:
  const std::vector<Vector2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Vector2& operator[](std::size_t i) const { return vertices_[i]; }

 private:
  friend GeneratorArc validate_generator(const std::vector<Vector2>&, const Tolerance&);
  std::vector<Vector2> vertices_;
};

/// Checks every arc invariant and merges collinear vertices. Throws
/// GeometryError with code "endpoint", "parallelogram", "convexity" or
/// "degenerate".
GeneratorArc validate_generator(const std::vector<Vector2>& raw_vertices, const Tolerance& tol = {});

/// z(lambda) = (1 - lambda) w - lambda v = (-lambda, 1 - lambda).
constexpr Vector2 chord_point(double lambda) { return {-lambda, 1.0 - lambda}; }

/// Exact piecewise-linear form of s(lambda) = max over the arc of |[x, z(lambda)]|.
/// On [knots[k], knots[k+1]] the maximum is attained at arc vertex active[k].
struct SupportProfile {
  std::vector<double> knots;          // 0 = knots.front() < ... < knots.back() = 1
  std::vector<std::size_t> active;    // knots.size() - 1 entries
  std::vector<double> values;         // s at each knot

  double evaluate(const GeneratorArc& arc, double lambda) const;
};

/// max over arc vertices of |[x, z(lambda)]|, lambda in [0, 1].
double support_value(const GeneratorArc& arc, double lambda);

SupportProfile support_profile(const GeneratorArc& arc);

/// z(lambda) / s(lambda); exactly w at 0 and -v at 1.
Vector2 gamma2_point(const GeneratorArc& arc, double lambda);

/// The point p with [x, p] = [y, p] = 1: where the two support lines dual to
/// consecutive vertices x, y meet.
Vector2 dual_vertex(const Vector2& x, const Vector2& y);

/// The second arc as an exact polyline from w to -v.
Polyline gamma2_polygon(const GeneratorArc& arc, const Tolerance& tol = {});

/// Applies the construction to a second-quadrant arc (w to -v) and returns the
/// recovered first-quadrant arc (w to v).
Polyline redualize(const Polyline& gamma2, const Tolerance& tol = {});

enum class ArcLabel { Gamma1, Gamma2, NegGamma1, NegGamma2 };

const char* to_string(ArcLabel label);

/// Index range [first, last] of a sub-arc inside the polygon's vertex cycle.
struct IndexRange {
  std::size_t first = 0;
  std::size_t last = 0;
};

class RadonCurve {
 public:
  RadonCurve(CentrallySymmetricPolygon polygon, IndexRange arc1, IndexRange arc2, Frame frame = {});

  const CentrallySymmetricPolygon& polygon() const { return polygon_; }
  IndexRange arc1_range() const { return arc1_; }
  IndexRange arc2_range() const { return arc2_; }
  const Frame& frame() const { return frame_; }

  /// Vertices of gamma_1 from w to v (generator orientation).
  std::vector<Vector2> arc1() const;
  /// Vertices of gamma_2 from w to -v.
  std::vector<Vector2> arc2() const;

  /// Which sub-arc a vertex belongs to. Junctions are attributed to gamma_1
  /// (v and w) and -gamma_1 (-v and -w).
  ArcLabel label_of(std::size_t vertex_index) const;
  /// Whether vertex `vertex_index` lies on the given sub-arc (endpoints included).
  bool on_arc(std::size_t vertex_index, ArcLabel label) const;

 private:
  CentrallySymmetricPolygon polygon_;
  IndexRange arc1_;
  IndexRange arc2_;
  Frame frame_;
};

/// gamma_1 u gamma_2 u -gamma_1 u -gamma_2 as one counterclockwise cycle
/// starting at v. Junction points v, w, -v, -w stay vertices even when
/// collinear with their neighbours.
RadonCurve assemble_radon(const GeneratorArc& arc, const Tolerance& tol = {});

/// Largest coordinate distance between the re-dualized point
/// u / max_{y in gamma_2} |[y, u]| and the true first-arc point on the same
/// ray, u = (1 - theta) w + theta v over a uniform theta grid.
double verify_duality(const GeneratorArc& arc, int grid, const Tolerance& tol = {});
double verify_duality(const RadonCurve& curve, int grid);

/// Worst violation of max(lambda, 1 - lambda) <= s(lambda) <= 1 on a uniform
/// grid of `grid` points; <= 0 when the bounds hold.
double support_bounds_violation(const GeneratorArc& arc, int grid);

/// Worst violation of the discrete convexity inequality over all triples of
/// grid points taken at `stride`.
double support_convexity_violation(const GeneratorArc& arc, int grid, int stride);

struct Gamma2Check {
  double endpoint_error = 0.0;  // distance of the ends from w and -v
  double outside = 0.0;         // worst distance outside the triangle {-v, w, w - v}
  bool convex = false;          // the cycle o, w, gamma_2, -v is convex
};

/// Structural properties of a second arc given from w to -v.
Gamma2Check check_gamma2(const std::vector<Vector2>& gamma2, const Tolerance& tol = {});

struct Attainment {
  ArcLabel attained_on = ArcLabel::Gamma1;
  Vector2 witness;
  double value = 0.0;
};

/// Maximizes |[x, z(lambda)]| over every vertex of the curve. Among maximizers
/// (within eps_geom) a vertex of +-gamma_1 is preferred as witness.
Attainment check_sup_attainment(const RadonCurve& curve, double lambda, const Tolerance& tol = {});

}  // namespace radon
