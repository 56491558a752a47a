#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "radon/construct.hpp"
#include "radon/plane.hpp"

namespace radon::cli {

/// File could not be read or written (exit code 3).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// On-disk curve: coordinates are frame coefficients. The arc ranges are
/// present only for constructed Radon curves.
struct CurveFile {
  Frame frame;
  std::vector<Vector2> vertices;
  std::optional<IndexRange> arc1;
  std::optional<IndexRange> arc2;
};

inline constexpr int kCurveFormat = 1;

nlohmann::json to_json(const CurveFile& file);
/// Throws GeometryError("format") on schema errors.
CurveFile curve_from_json(const nlohmann::json& doc);

CurveFile curve_from_radon(const RadonCurve& curve);
CurveFile curve_from_body(const CentrallySymmetricPolygon& body, const Frame& frame = {});

/// A validated curve file: always a body, plus the Radon structure when the
/// file carries arc ranges.
struct LoadedCurve {
  CentrallySymmetricPolygon body;
  std::optional<RadonCurve> radon;
  Frame frame;
};

LoadedCurve load_curve(const CurveFile& file, const Tolerance& tol = {});

struct ArcSpec {
  std::string kind;  // explicit | segment | square | circle-arc | lp-arc
  std::vector<Vector2> vertices;
  std::optional<double> p;
  std::optional<int> resolution;
};

ArcSpec arc_spec_from_json(const nlohmann::json& doc);
/// Raw generator vertices for the spec; throws GeometryError("arc-spec").
std::vector<Vector2> arc_vertices(const ArcSpec& spec);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);
/// Parses JSON text; malformed text is an input error, not an I/O error.
nlohmann::json parse_json(const std::string& text);

}  // namespace radon::cli
