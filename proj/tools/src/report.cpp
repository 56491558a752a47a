#include "radon/cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>

#include <fmt/format.h>

#include "radon/bisectors.hpp"
#include "radon/construct.hpp"

namespace radon::cli {

using nlohmann::json;

namespace {

json point(const Vector2& x) { return json::array({x.a, x.b}); }

// Finite stand-in so the report stays valid JSON.
double finite(double x) { return std::isfinite(x) ? x : std::numeric_limits<double>::max(); }

struct Context {
  const LoadedCurve& curve;
  const VerifyOptions& options;
  GaugeNorm norm;
  std::optional<GeneratorArc> arc;
};

GeneratorArc arc_of(const Context& ctx) { return *ctx.arc; }

CheckRecord check_convexity(const Context& ctx) {
  const auto& body = ctx.curve.body;
  double worst = std::numeric_limits<double>::infinity();
  std::size_t at = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    const double s = det2(normalized(body.edge(i)), normalized(body.edge(i + 1)));
    if (s < worst) {
      worst = s;
      at = i + 1;
    }
  }
  const Verdict v = is_convex_cyclic(body.vertices(), ctx.options.tol.eps_geom);
  return {"convexity", v.ok, worst, ctx.options.tol.eps_geom, {{"vertex", at % body.size()}}};
}

CheckRecord check_symmetry(const Context& ctx) {
  const auto& body = ctx.curve.body;
  const std::size_t half = body.size() / 2;
  double worst = 0.0;
  std::size_t at = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    const double d = length(body.vertex(i) + body.vertex(i + half));
    if (d > worst) {
      worst = d;
      at = i;
    }
  }
  const double tol = ctx.options.tol.eps_geom;
  return {"central-symmetry", worst <= tol, worst, tol, {{"vertex", at}}};
}

CheckRecord check_support_bounds(const Context& ctx) {
  const GeneratorArc arc = arc_of(ctx);
  const int grid = ctx.options.tol.samples;
  const double bounds = support_bounds_violation(arc, grid);
  const double convexity = support_convexity_violation(arc, grid, std::max(1, grid / 100));
  const double value = std::max({0.0, bounds, convexity});
  const double tol = ctx.options.tol.eps_geom;
  return {"support-bounds", value <= tol, value, tol,
          {{"bounds_violation", bounds}, {"convexity_violation", convexity}}};
}

CheckRecord check_gamma2(const Context& ctx) {
  const Tolerance& tol = ctx.options.tol;
  const std::vector<Vector2> stored = ctx.curve.radon->arc2();
  const Gamma2Check props = check_gamma2(stored, tol);
  const Polyline rebuilt = gamma2_polygon(arc_of(ctx), tol);
  const bool same_count = rebuilt.size() == stored.size();
  double mismatch = 0.0;
  if (same_count) {
    for (std::size_t i = 0; i < stored.size(); ++i) mismatch = std::max(mismatch, distance(stored[i], rebuilt[i]));
  }
  const double value = std::max({props.endpoint_error, props.outside, mismatch});
  const bool pass = props.convex && same_count && value <= tol.eps_geom;
  return {"gamma2-properties", pass, value, tol.eps_geom,
          {{"endpoint_error", props.endpoint_error},
           {"outside", props.outside},
           {"convex", props.convex},
           {"stored_vertices", stored.size()},
           {"rebuilt_vertices", rebuilt.size()}}};
}

CheckRecord check_duality(const Context& ctx) {
  const double err = verify_duality(*ctx.curve.radon, ctx.options.tol.samples);
  const double tol = ctx.options.tol.eps_geom;
  return {"duality", err <= tol, err, tol, nullptr};
}

CheckRecord check_sup_attainment(const Context& ctx) {
  const int grid = ctx.options.tol.samples;
  int misses = 0;
  json witness = nullptr;
  for (int j = 0; j < grid; ++j) {
    const double lambda = static_cast<double>(j) / (grid - 1);
    const Attainment a = check_sup_attainment(*ctx.curve.radon, lambda, ctx.options.tol);
    if (a.attained_on != ArcLabel::Gamma1 && a.attained_on != ArcLabel::NegGamma1) {
      if (misses == 0) witness = {{"lambda", lambda}, {"vertex", point(a.witness)}, {"arc", to_string(a.attained_on)}};
      ++misses;
    }
  }
  return {"sup-attainment", misses == 0, static_cast<double>(misses), 0.0, witness};
}

CheckRecord check_birkhoff_symmetry(const Context& ctx) {
  const SymmetryDefect d = birkhoff_symmetry_defect(ctx.norm, kFanSamples, ctx.options.tol);
  const double tol = ctx.options.tol.eps_norm;
  return {"birkhoff-symmetry", d.defect <= tol, d.defect, tol, {{"x", point(d.x)}, {"y", point(d.y)}}};
}

std::vector<Vector2> probe_vectors(const std::optional<std::uint64_t>& seed) {
  std::vector<Vector2> out;
  out.reserve(kNormVectors);
  if (seed) {
    std::mt19937_64 rng(*seed);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    while (static_cast<int>(out.size()) < kNormVectors) {
      const Vector2 x{coord(rng), coord(rng)};
      if (!x.is_zero()) out.push_back(x);
    }
    return out;
  }
  for (int k = 0; k < kNormVectors; ++k) {
    const double t = 2.0 * std::numbers::pi * k / kNormVectors;
    out.push_back(Vector2{std::cos(t), std::sin(t)} * (0.5 + 0.25 * (k % 7)));
  }
  return out;
}

CheckRecord check_norm_antinorm(const Context& ctx) {
  double worst = -1.0;
  Vector2 at;
  for (const auto& x : probe_vectors(ctx.options.seed)) {
    const double d = std::abs(norm(ctx.norm, x) - antinorm(ctx.norm, x));
    if (d > worst) {
      worst = d;
      at = x;
    }
  }
  const double tol = ctx.options.tol.eps_norm;
  return {"norm-antinorm", worst <= tol, worst, tol, {{"x", point(at)}}};
}

CheckRecord check_homothety(const Context& ctx) {
  const Homothety h = anticircle_homothety_check(ctx.norm, ctx.options.tol);
  return {"homothety", h.is_homothet, h.ratio, ctx.options.tol.eps_geom, nullptr};
}

CheckRecord check_constant_area(const Context& ctx) {
  const ConstantArea c = radon_constant_area(ctx.norm, kFanSamples, ctx.options.tol);
  return {"constant-area", c.is_radon, c.constant, ctx.options.tol.eps_norm, {{"spread", c.spread}}};
}

CheckRecord check_bisector(const Context& ctx) {
  const double tol = ctx.options.tol.eps_norm;
  const BisectorCriterion b = radon_bisector_criterion(ctx.curve.body, kRingSamples, tol, ctx.options.tol);
  return {"bisector", b.passes, b.worst_defect, tol,
          {{"p", point(b.witness)}, {"bisector_direction_defect", b.worst_bisector_defect}}};
}

using CheckFn = std::function<CheckRecord(const Context&)>;

const std::map<std::string, CheckFn>& registry() {
  static const std::map<std::string, CheckFn> table{
      {"convexity", check_convexity},
      {"central-symmetry", check_symmetry},
      {"support-bounds", check_support_bounds},
      {"gamma2-properties", check_gamma2},
      {"duality", check_duality},
      {"sup-attainment", check_sup_attainment},
      {"birkhoff-symmetry", check_birkhoff_symmetry},
      {"norm-antinorm", check_norm_antinorm},
      {"homothety", check_homothety},
      {"constant-area", check_constant_area},
      {"bisector", check_bisector},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "convexity",     "central-symmetry", "support-bounds", "gamma2-properties", "duality",  "sup-attainment",
      "birkhoff-symmetry", "norm-antinorm", "homothety",     "constant-area",     "bisector",
  };
  return names;
}

bool is_arc_check(const std::string& name) {
  return name == "support-bounds" || name == "gamma2-properties" || name == "duality" || name == "sup-attainment";
}

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

Report run_checks(const LoadedCurve& curve, const VerifyOptions& options) {
  options.tol.validate();
  std::vector<std::string> wanted;
  if (options.checks.empty()) {
    for (const auto& name : check_names()) {
      if (curve.radon || !is_arc_check(name)) wanted.push_back(name);
    }
  } else {
    for (const auto& name : options.checks) {
      if (!registry().contains(name)) throw GeometryError("checks", "unknown check '" + name + "'");
      if (is_arc_check(name) && !curve.radon) {
        throw GeometryError("meta", "check '" + name + "' needs a constructed curve with arc ranges");
      }
    }
    // Report order is fixed and each check runs once, whatever the request order.
    for (const auto& name : check_names()) {
      if (std::find(options.checks.begin(), options.checks.end(), name) != options.checks.end()) {
        wanted.push_back(name);
      }
    }
  }

  Context ctx{curve, options, GaugeNorm(curve.body), std::nullopt};
  if (curve.radon) ctx.arc = validate_generator(curve.radon->arc1(), options.tol);

  Report report;
  report.tol = options.tol;
  report.seed = options.seed;
  for (const auto& name : wanted) report.checks.push_back(registry().at(name)(ctx));
  return report;
}

json to_json(const Report& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"value", finite(c.value)},
                      {"tolerance", c.tolerance},
                      {"witness", c.witness}});
  }
  json doc;
  doc["format"] = kCurveFormat;
  doc["tolerances"] = {{"eps_geom", report.tol.eps_geom},
                       {"eps_norm", report.tol.eps_norm},
                       {"samples", report.tol.samples}};
  doc["seed"] = report.seed ? json(*report.seed) : json(nullptr);
  doc["checks"] = std::move(checks);
  doc["all_pass"] = report.all_pass();
  return doc;
}

std::string profile_csv(const GeneratorArc& arc, int grid) {
  if (grid < 2) throw GeometryError("domain", "profile grid needs at least 2 points");
  std::string out = "lambda,s,lower_bound,upper_bound\n";
  for (int j = 0; j < grid; ++j) {
    const double lambda = static_cast<double>(j) / (grid - 1);
    out += fmt::format("{:.12f},{:.12f},{:.12f},{:.12f}\n", lambda, support_value(arc, lambda),
                       std::max(lambda, 1.0 - lambda), 1.0);
  }
  return out;
}

std::string defect_csv(const GaugeNorm& g, const Tolerance& tol) {
  const auto& body = g.body();
  std::string out = "sample,defect\n";
  std::size_t k = 0;
  for (const auto& x : boundary_samples(body)) {
    double worst = 0.0;
    for (const auto& y : birkhoff_companions(g, x, kFanSamples, tol)) {
      const SupportCone at_y = support_cone(body, locate_on_boundary(body, y, tol.eps_geom));
      worst = std::max(worst, at_y.distance(x, tol.eps_geom));
    }
    out += fmt::format("{},{:.12e}\n", k++, worst);
  }
  return out;
}

}  // namespace radon::cli
