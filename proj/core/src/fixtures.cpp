#include "radon/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace radon::fixtures {

namespace {

constexpr Vector2 kV{1.0, 0.0};
constexpr Vector2 kW{0.0, 1.0};

double lp_length(double p, double c, double s) {
  return std::pow(std::pow(std::abs(c), p) + std::pow(std::abs(s), p), 1.0 / p);
}

std::vector<Vector2> symmetric_closure(std::vector<Vector2> half) {
  const std::size_t m = half.size();
  for (std::size_t i = 0; i < m; ++i) half.push_back(-half[i]);
  return half;
}

}  // namespace

std::vector<Vector2> segment_arc() { return {kW, kV}; }

std::vector<Vector2> square_arc() { return {kW, {1.0, 1.0}, kV}; }

std::vector<Vector2> circle_arc(int vertex_count) { return lp_arc(2.0, vertex_count); }

std::vector<Vector2> lp_arc(double p, int vertex_count) {
  if (!(p > 1.0) || vertex_count < 2) {
    throw GeometryError("arc-spec", "lp arc needs p > 1 and at least 2 vertices");
  }
  std::vector<Vector2> out;
  out.reserve(static_cast<std::size_t>(vertex_count));
  out.push_back(kW);
  for (int k = 1; k + 1 < vertex_count; ++k) {
    const double t = 0.5 * std::numbers::pi * (1.0 - static_cast<double>(k) / (vertex_count - 1));
    const double c = std::cos(t);
    const double s = std::sin(t);
    const double r = p == 2.0 ? 1.0 : lp_length(p, c, s);
    out.push_back({c / r, s / r});
  }
  out.push_back(kV);
  return out;
}

std::vector<Vector2> random_arc(std::mt19937_64& rng, int vertex_count) {
  if (vertex_count < 2) {
    throw GeometryError("arc-spec", "random arc needs at least 2 vertices");
  }
  if (vertex_count == 2) return segment_arc();
  const int edges = vertex_count - 1;

  // Edge directions turn clockwise from just below horizontal to just right of
  // vertical; gaps are bounded below so no two edges are nearly collinear.
  constexpr double kMargin = 0.02;
  constexpr double kMinGap = 1e-3;
  const double lo = -0.5 * std::numbers::pi + kMargin;
  const double hi = -kMargin;
  std::exponential_distribution<double> spacing(1.0);
  std::uniform_real_distribution<double> weight(0.2, 1.0);
  const double quarter = -0.25 * std::numbers::pi;

  for (;;) {
    std::vector<double> gaps(static_cast<std::size_t>(edges) + 1);
    for (auto& g : gaps) g = spacing(rng);
    double total = 0.0;
    for (double g : gaps) total += g;
    const double free = (hi - lo) - kMinGap * static_cast<double>(gaps.size());
    std::vector<double> angles;
    double theta = hi;
    for (int i = 0; i < edges; ++i) {
      theta -= kMinGap + free * gaps[static_cast<std::size_t>(i)] / total;
      angles.push_back(theta);
    }
    const bool shallow = std::any_of(angles.begin(), angles.end(), [&](double a) { return a > quarter; });
    const bool steep = std::any_of(angles.begin(), angles.end(), [&](double a) { return a < quarter; });
    if (!shallow || !steep) continue;

    std::vector<Vector2> dirs;
    std::vector<double> weights;
    Vector2 s1;
    Vector2 s2;
    for (double a : angles) {
      const Vector2 d{std::cos(a), std::sin(a)};
      const double r = weight(rng);
      dirs.push_back(d);
      weights.push_back(r);
      if (a > quarter) {
        s1 = s1 + d * r;
      } else {
        s2 = s2 + d * r;
      }
    }
    // Scale the two groups so the edges sum to v - w exactly.
    const Vector2 target = kV - kW;
    const double denom = det2(s1, s2);
    const double alpha = det2(target, s2) / denom;
    const double beta = det2(s1, target) / denom;

    std::vector<Vector2> out{kW};
    Vector2 cur = kW;
    for (std::size_t i = 0; i + 1 < dirs.size(); ++i) {
      cur = cur + dirs[i] * (weights[i] * (angles[i] > quarter ? alpha : beta));
      out.push_back(cur);
    }
    out.push_back(kV);
    return out;
  }
}

std::vector<Vector2> unit_square() { return {{1.0, -1.0}, {1.0, 1.0}, {-1.0, 1.0}, {-1.0, -1.0}}; }

std::vector<Vector2> hexagon() { return {kV, kW, kW - kV, -kV, -kW, kV - kW}; }

std::vector<Vector2> regular_polygon(int n) { return lp_ball(2.0, n); }

std::vector<Vector2> lp_ball(double p, int n) {
  if (n < 4 || n % 2 != 0 || !(p >= 1.0)) {
    throw GeometryError("arc-spec", "lp ball needs an even vertex count >= 4 and p >= 1");
  }
  std::vector<Vector2> half;
  for (int k = 0; k < n / 2; ++k) {
    const double t = 2.0 * std::numbers::pi * k / n;
    const double c = std::cos(t);
    const double s = std::sin(t);
    const double r = p == 2.0 ? 1.0 : lp_length(p, c, s);
    half.push_back({c / r, s / r});
  }
  return symmetric_closure(std::move(half));
}

std::vector<Vector2> random_symmetric_body(std::mt19937_64& rng, int half_count) {
  if (half_count < 2) {
    throw GeometryError("arc-spec", "random body needs at least 2 edge directions");
  }
  std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
  std::uniform_real_distribution<double> len(0.3, 1.0);
  std::vector<double> angles;
  while (static_cast<int>(angles.size()) < half_count) {
    const double a = angle(rng);
    if (std::none_of(angles.begin(), angles.end(), [&](double b) { return std::abs(a - b) < 0.05; })) {
      angles.push_back(a);
    }
  }
  std::sort(angles.begin(), angles.end());
  std::vector<Vector2> edges;
  Vector2 sum;
  for (double a : angles) {
    const Vector2 e = Vector2{std::cos(a), std::sin(a)} * len(rng);
    edges.push_back(e);
    sum = sum + e;
  }
  // A zonogon-like cycle: e_1..e_m then -e_1..-e_m, started at -sum/2.
  std::vector<Vector2> half;
  Vector2 cur = sum * -0.5;
  for (const auto& e : edges) {
    half.push_back(cur);
    cur = cur + e;
  }
  return symmetric_closure(std::move(half));
}

std::vector<Vector2> mirror_body(const std::vector<Vector2>& arc) {
  std::vector<Vector2> cycle;
  for (std::size_t i = arc.size(); i-- > 0;) cycle.push_back(arc[i]);                 // v .. w
  for (std::size_t i = 1; i < arc.size(); ++i) cycle.push_back({0.0 - arc[i].a, arc[i].b});  // .. -v
  cycle.pop_back();
  return symmetric_closure(std::move(cycle));
}

}  // namespace radon::fixtures
