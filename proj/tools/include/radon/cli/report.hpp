#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "radon/cli/curve_file.hpp"
#include "radon/norms.hpp"

namespace radon::cli {

struct CheckRecord {
  std::string name;
  bool pass = false;
  double value = 0.0;
  double tolerance = 0.0;
  nlohmann::json witness;  // null when there is nothing to point at
};

struct Report {
  std::vector<CheckRecord> checks;
  Tolerance tol;
  std::optional<std::uint64_t> seed;

  bool all_pass() const;
};

struct VerifyOptions {
  Tolerance tol;
  std::vector<std::string> checks;  // empty: every check the input supports
  std::optional<std::uint64_t> seed;
};

// Sweep sizes that are not user-facing tolerances.
inline constexpr int kFanSamples = 8;
inline constexpr int kRingSamples = 64;
inline constexpr int kNormVectors = 1000;

/// Every check name, in report order.
const std::vector<std::string>& check_names();
/// Checks that need the arc ranges of a constructed curve.
bool is_arc_check(const std::string& name);

/// Throws GeometryError("checks") for unknown names and GeometryError("meta")
/// when an arc check is requested for a plain body.
Report run_checks(const LoadedCurve& curve, const VerifyOptions& options);

nlohmann::json to_json(const Report& report);

/// Columns lambda, s, lower_bound, upper_bound on a uniform grid.
std::string profile_csv(const GeneratorArc& arc, int grid);
/// Columns sample, defect: per boundary sample, the worst symmetry defect
/// over its Birkhoff companions.
std::string defect_csv(const GaugeNorm& g, const Tolerance& tol);

}  // namespace radon::cli
