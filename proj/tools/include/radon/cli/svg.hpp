#pragma once

#include <string>
#include <vector>

#include "radon/plane.hpp"

namespace radon::cli {

struct Overlays {
  bool anticircle = false;
  bool conjugate = false;  // circumscribed parallelogram on a conjugate pair
  bool bisector = false;
  Vector2 bisector_point{2.0, 0.5};
};

/// Deterministic SVG of the bodies in frame coordinates: the square
/// [-1.5, 1.5]^2 maps onto a fixed 600 x 600 canvas. Each body is drawn
/// followed by its overlays (anticircle, parallelogram, bisector) in that order.
std::string render_svg(const std::vector<CentrallySymmetricPolygon>& bodies, const Overlays& overlays,
                       const Tolerance& tol = {});

}  // namespace radon::cli
