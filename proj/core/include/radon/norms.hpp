#pragma once

#include <utility>
#include <vector>

#include "radon/plane.hpp"

namespace radon {

/// The norm whose unit ball is `body`, paired with the symplectic form
/// form_scale * det2.
class GaugeNorm {
 public:
  explicit GaugeNorm(CentrallySymmetricPolygon body, double form_scale = 1.0);

  const CentrallySymmetricPolygon& body() const { return body_; }
  double form_scale() const { return form_scale_; }
  /// [x, y] under this norm's symplectic form.
  double form(const Vector2& x, const Vector2& y) const { return form_scale_ * det2(x, y); }

 private:
  CentrallySymmetricPolygon body_;
  double form_scale_;
};

double norm(const GaugeNorm& g, const Vector2& x);

/// sup{|[y, x]| : y in S}; attained at a vertex of the unit circle.
double antinorm(const GaugeNorm& g, const Vector2& x);

/// The unit circle of the antinorm. Each body edge [y_i, y_{i+1}] becomes the
/// vertex where |[y_i, .]| = |[y_{i+1}, .]| = 1.
CentrallySymmetricPolygon anticircle(const GaugeNorm& g, const Tolerance& tol = {});

/// x is Birkhoff orthogonal to y: the line through x/||x|| with direction y
/// supports the unit ball. Decided by supporting-cone membership.
bool birkhoff(const GaugeNorm& g, const Vector2& x, const Vector2& y, const Tolerance& tol = {});

/// Unit companions of a boundary sample: the directions of its supporting
/// cone, subdivided `fan_samples` times when the point is a vertex.
std::vector<Vector2> birkhoff_companions(const GaugeNorm& g, const Vector2& x, int fan_samples,
                                         const Tolerance& tol = {});

/// Boundary samples used by the sweeps: every vertex and every edge midpoint.
std::vector<Vector2> boundary_samples(const CentrallySymmetricPolygon& body);

struct SymmetryDefect {
  double defect = 0.0;
  Vector2 x;  // witness: x is Birkhoff orthogonal to y ...
  Vector2 y;  // ... but y is `defect` away from being orthogonal to x
};

/// Largest failure of y -|_B x over companions y of boundary samples x,
/// measured as |sine| distance from x to the supporting cone at y.
SymmetryDefect birkhoff_symmetry_defect(const GaugeNorm& g, int samples, const Tolerance& tol = {});

/// A pair of boundary points (vertices) with mutual Birkhoff orthogonality;
/// the first pair met by sweeping vertices from index 0.
std::pair<Vector2, Vector2> conjugate_diameters(const CentrallySymmetricPolygon& body,
                                                const Tolerance& tol = {});

/// With coordinates taken over the conjugate pair {v, w}: every supporting
/// direction at a boundary point of Q1 (other than v, w) lies in Q2, and
/// every sampled Q2 direction supports the body somewhere in Q1.
bool supporting_direction_quadrant_check(const CentrallySymmetricPolygon& body, const Vector2& v,
                                         const Vector2& w, int samples = 64, const Tolerance& tol = {});

struct ConstantArea {
  bool is_radon = false;
  double constant = 0.0;
  double spread = 0.0;
};

/// |[x, y]| over unit Birkhoff pairs x -|_B y from the boundary sweep.
ConstantArea radon_constant_area(const GaugeNorm& g, int samples, const Tolerance& tol = {});

struct Homothety {
  bool is_homothet = false;
  /// ||.|| / ||.||_a, i.e. anticircle = ratio * unit circle. Doubling the
  /// form halves the ratio. Meaningful only when is_homothet.
  double ratio = 0.0;
};

Homothety anticircle_homothety_check(const GaugeNorm& g, const Tolerance& tol = {});

}  // namespace radon
