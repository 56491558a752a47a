#pragma once

#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace radon {

/// Raised whenever an input violates a geometric invariant. `code()` names the
/// invariant ("convexity", "symmetry", "endpoint", ...) so front ends can
/// report it without parsing the message.
class GeometryError : public std::invalid_argument {
 public:
  GeometryError(std::string code, const std::string& what)
      : std::invalid_argument(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Tolerances shared by every predicate in the library. Absolute, since all
/// curves are normalized to the unit parallelogram.
struct Tolerance {
  double eps_geom = 1e-9;
  double eps_norm = 1e-9;
  int samples = 1024;

  void validate() const;
};

/// A plane vector in coordinates over the basis {v, w}: x = a*v + b*w.
struct Vector2 {
  double a = 0.0;
  double b = 0.0;

  constexpr Vector2() = default;
  constexpr Vector2(double a_, double b_) : a(a_), b(b_) {
    if (!std::isfinite(a_) || !std::isfinite(b_)) {
      throw GeometryError("non-finite", "vector coordinates must be finite");
    }
  }

  constexpr Vector2 operator+(const Vector2& o) const { return {a + o.a, b + o.b}; }
  constexpr Vector2 operator-(const Vector2& o) const { return {a - o.a, b - o.b}; }
  // 0 - x rather than -x so negating the axis points never yields -0.0.
  constexpr Vector2 operator-() const { return {0.0 - a, 0.0 - b}; }
  constexpr Vector2 operator*(double s) const { return {a * s, b * s}; }
  constexpr Vector2 operator/(double s) const { return {a / s, b / s}; }
  constexpr bool operator==(const Vector2&) const = default;

  bool is_zero() const { return a == 0.0 && b == 0.0; }
};

constexpr Vector2 operator*(double s, const Vector2& x) { return x * s; }

/// The symplectic form [x, y]: with internal coordinates over {v, w} this is
/// the plain 2x2 determinant, so [v, w] = 1.
constexpr double det2(const Vector2& x, const Vector2& y) { return x.a * y.b - x.b * y.a; }

// Coordinate-Euclidean helpers. Only used for tolerances and diagnostics, never
// for anything with geometric meaning in a normed plane.
constexpr double dot(const Vector2& x, const Vector2& y) { return x.a * y.a + x.b * y.b; }
inline double length(const Vector2& x) { return std::hypot(x.a, x.b); }
inline double distance(const Vector2& x, const Vector2& y) { return length(x - y); }
inline Vector2 normalized(const Vector2& x) { return x / length(x); }

/// |sin| of the angle between the lines spanned by x and y.
double line_sine(const Vector2& x, const Vector2& y);

/// Basis {v, w} in external coordinates; internally v = (1,0) and w = (0,1).
class Frame {
 public:
  Frame() = default;
  /// Throws unless det2(v, w) == 1 within eps.
  Frame(Vector2 v, Vector2 w, double eps = 1e-9);

  const Vector2& v() const { return v_; }
  const Vector2& w() const { return w_; }

  Vector2 to_frame(const Vector2& external) const;
  Vector2 to_external(const Vector2& coeffs) const;

 private:
  Vector2 v_{1.0, 0.0};
  Vector2 w_{0.0, 1.0};
};

enum class Quadrant : std::uint8_t { Q1 = 1, Q2 = 2, Q3 = 4, Q4 = 8 };

/// Closed quadrants; points on an axis belong to two of them.
class QuadrantSet {
 public:
  constexpr QuadrantSet() = default;
  constexpr QuadrantSet(std::initializer_list<Quadrant> qs) {
    for (auto q : qs) bits_ |= static_cast<std::uint8_t>(q);
  }

  constexpr bool contains(Quadrant q) const { return (bits_ & static_cast<std::uint8_t>(q)) != 0; }
  constexpr void insert(Quadrant q) { bits_ |= static_cast<std::uint8_t>(q); }
  constexpr std::size_t size() const { return std::popcount(bits_); }
  constexpr bool operator==(const QuadrantSet&) const = default;

  /// Q1 <-> Q3, Q2 <-> Q4.
  QuadrantSet antipodal() const;

 private:
  std::uint8_t bits_ = 0;
};

/// Throws for the zero vector.
QuadrantSet classify_quadrant(const Vector2& x);

/// Outcome of a structural predicate, with a human-readable reason on failure.
struct Verdict {
  bool ok = true;
  std::string reason;

  explicit operator bool() const { return ok; }
};

/// Signed turn of the path a -> b -> c (positive for a left turn).
inline double turn(const Vector2& a, const Vector2& b, const Vector2& c) { return det2(b - a, c - b); }

/// True iff the closed cycle turns consistently one way (cross products
/// within eps count as straight) and winds exactly once. All-collinear input is
/// rejected with a diagnostic.
Verdict is_convex_cyclic(std::span<const Vector2> cycle, double eps_geom = 1e-9);

/// Drops consecutive duplicates and, when `merge_collinear` is set, interior
/// vertices lying within eps of the chord of their neighbours. Open chain: the
/// first and last vertices are kept.
std::vector<Vector2> simplify_chain(std::span<const Vector2> chain, double eps_geom, bool merge_collinear);

class Polyline {
 public:
  /// Merges duplicates and collinear interior vertices; needs >= 2 distinct vertices.
  explicit Polyline(std::vector<Vector2> vertices, double eps_geom = 1e-9);

  const std::vector<Vector2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Vector2& operator[](std::size_t i) const { return vertices_[i]; }
  const Vector2& front() const { return vertices_.front(); }
  const Vector2& back() const { return vertices_.back(); }

 private:
  std::vector<Vector2> vertices_;
};

/// A convex polygon, symmetric about the origin, with the origin strictly
/// inside. Stored counterclockwise; vertex i + n/2 is -vertex i.
class CentrallySymmetricPolygon {
 public:
  enum class Merge { Collinear, KeepCollinear };

  /// Accepts either orientation (clockwise input is reversed). Throws
  /// GeometryError naming the violated invariant.
  explicit CentrallySymmetricPolygon(std::vector<Vector2> vertices, double eps_geom = 1e-9,
                                     Merge merge = Merge::Collinear);

  const std::vector<Vector2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Vector2& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  /// vertex(i+1) - vertex(i)
  Vector2 edge(std::size_t i) const { return vertex(i + 1) - vertex(i); }

  /// Minkowski functional of the polygon: the unique t >= 0 with x/t on the boundary.
  double gauge(const Vector2& x) const;
  /// Index of an edge attaining the gauge maximum, i.e. the edge the ray through x exits by.
  std::size_t exit_edge(const Vector2& x) const;

  CentrallySymmetricPolygon scaled(double factor) const;

 private:
  std::vector<Vector2> vertices_;
  std::vector<double> edge_area_;  // det2(v_i, v_{i+1}) > 0
};

/// The boundary point on the open ray from the origin through `direction`.
Vector2 ray_intersect_boundary(const CentrallySymmetricPolygon& body, const Vector2& direction);

/// Where a boundary point sits: on a vertex, or strictly inside an edge.
struct BoundaryLocation {
  Vector2 point;
  std::size_t index = 0;  // vertex index when on_vertex, edge index otherwise
  bool on_vertex = false;
};

/// Projects x (nonzero) radially onto the boundary and classifies it, snapping
/// to a vertex within eps_geom.
BoundaryLocation locate_on_boundary(const CentrallySymmetricPolygon& body, const Vector2& x,
                                    double eps_geom = 1e-9);

/// Directions of the supporting lines at a boundary point: the closed fan
/// swept counterclockwise from `first` to `second`. Both equal the edge
/// direction for points inside an edge.
struct SupportCone {
  Vector2 first;
  Vector2 second;

  /// Unoriented membership: d or -d lies in the fan (within eps, on unit vectors).
  bool contains(const Vector2& d, double eps) const;
  /// |sine| distance from the line of d to the fan; 0 when contained.
  double distance(const Vector2& d, double eps) const;
};

SupportCone support_cone(const CentrallySymmetricPolygon& body, const BoundaryLocation& where);

/// Intersection of the lines p + t*d and q + u*e; throws for parallel lines.
Vector2 intersect_lines(const Vector2& p, const Vector2& d, const Vector2& q, const Vector2& e);

}  // namespace radon
