#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "radon/plane.hpp"

// Landmark arcs and bodies used by the CLI, the tests and the benchmarks.
namespace radon::fixtures {

/// [w, v]: generates the affine-regular hexagon.
std::vector<Vector2> segment_arc();
/// [w, v + w, v]: square corner in Q1, straight chords in Q2.
std::vector<Vector2> square_arc();
/// `vertex_count` points of the Euclidean quarter circle, uniform in angle.
std::vector<Vector2> circle_arc(int vertex_count);
/// Quarter of the l_p unit circle (p > 1), uniform in Euclidean angle.
std::vector<Vector2> lp_arc(double p, int vertex_count);
/// A strictly convex random arc with exactly `vertex_count` vertices (>= 2).
std::vector<Vector2> random_arc(std::mt19937_64& rng, int vertex_count);

/// The square [-1, 1]^2, i.e. the l_inf ball.
std::vector<Vector2> unit_square();
/// {v, w, w - v, -v, -w, v - w}
std::vector<Vector2> hexagon();
/// Regular n-gon (n even) inscribed in the Euclidean unit circle, vertex at v.
std::vector<Vector2> regular_polygon(int n);
/// Polygon with n (even) vertices on the l_p unit circle, uniform in angle.
std::vector<Vector2> lp_ball(double p, int n);
/// Random centrally symmetric convex polygon with 2 * half_count vertices.
std::vector<Vector2> random_symmetric_body(std::mt19937_64& rng, int half_count);
/// The arc together with its mirror images in both axes: a symmetric body
/// sharing gamma_1 with the Radon curve but (in general) not Radon itself.
std::vector<Vector2> mirror_body(const std::vector<Vector2>& arc);

}  // namespace radon::fixtures
