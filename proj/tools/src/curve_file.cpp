#include "radon/cli/curve_file.hpp"

#include <fstream>
#include <sstream>

#include "radon/fixtures.hpp"

namespace radon::cli {

using nlohmann::json;

namespace {

json point(const Vector2& x) { return json::array({x.a, x.b}); }

Vector2 read_point(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw GeometryError("format", std::string(what) + " must be a pair of numbers");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<Vector2> read_points(const json& j, const char* what) {
  if (!j.is_array()) throw GeometryError("format", std::string(what) + " must be an array of pairs");
  std::vector<Vector2> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(read_point(e, what));
  return out;
}

IndexRange read_range(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_unsigned() || !j[1].is_number_unsigned()) {
    throw GeometryError("format", std::string(what) + " must be a pair of vertex indices");
  }
  return {j[0].get<std::size_t>(), j[1].get<std::size_t>()};
}

}  // namespace

json to_json(const CurveFile& file) {
  json doc;
  doc["format"] = kCurveFormat;
  doc["frame"] = {{"v", point(file.frame.v())}, {"w", point(file.frame.w())}};
  json verts = json::array();
  for (const auto& x : file.vertices) verts.push_back(point(x));
  doc["vertices"] = std::move(verts);
  json meta = json::object();
  if (file.arc1) meta["arc1_range"] = {file.arc1->first, file.arc1->last};
  if (file.arc2) meta["arc2_range"] = {file.arc2->first, file.arc2->last};
  doc["meta"] = std::move(meta);
  return doc;
}

CurveFile curve_from_json(const json& doc) {
  if (!doc.is_object()) throw GeometryError("format", "curve file must be a JSON object");
  if (!doc.contains("format") || doc["format"] != kCurveFormat) {
    throw GeometryError("format", "unsupported curve format (expected \"format\": 1)");
  }
  CurveFile out;
  if (doc.contains("frame")) {
    const json& f = doc["frame"];
    if (!f.is_object() || !f.contains("v") || !f.contains("w")) {
      throw GeometryError("format", "frame needs \"v\" and \"w\"");
    }
    out.frame = Frame(read_point(f["v"], "frame.v"), read_point(f["w"], "frame.w"));
  }
  if (!doc.contains("vertices")) throw GeometryError("format", "missing \"vertices\"");
  out.vertices = read_points(doc["vertices"], "vertices");
  if (doc.contains("meta")) {
    const json& m = doc["meta"];
    if (!m.is_object()) throw GeometryError("format", "meta must be an object");
    if (m.contains("arc1_range") != m.contains("arc2_range")) {
      throw GeometryError("meta", "arc1_range and arc2_range come together");
    }
    if (m.contains("arc1_range")) {
      out.arc1 = read_range(m["arc1_range"], "meta.arc1_range");
      out.arc2 = read_range(m["arc2_range"], "meta.arc2_range");
    }
  }
  return out;
}

CurveFile curve_from_radon(const RadonCurve& curve) {
  return {curve.frame(), curve.polygon().vertices(), curve.arc1_range(), curve.arc2_range()};
}

CurveFile curve_from_body(const CentrallySymmetricPolygon& body, const Frame& frame) {
  return {frame, body.vertices(), std::nullopt, std::nullopt};
}

LoadedCurve load_curve(const CurveFile& file, const Tolerance& tol) {
  if (file.arc1) {
    // Keep junction vertices so the stored ranges stay valid.
    CentrallySymmetricPolygon body(file.vertices, tol.eps_geom, CentrallySymmetricPolygon::Merge::KeepCollinear);
    if (body.vertices() != file.vertices) {
      throw GeometryError("meta", "arc ranges need a counterclockwise vertex list without duplicates");
    }
    RadonCurve curve(body, *file.arc1, *file.arc2, file.frame);
    return {std::move(body), std::move(curve), file.frame};
  }
  CentrallySymmetricPolygon body(file.vertices, tol.eps_geom);
  return {std::move(body), std::nullopt, file.frame};
}

ArcSpec arc_spec_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) {
    throw GeometryError("arc-spec", "arc spec needs a string \"kind\"");
  }
  ArcSpec spec;
  spec.kind = doc["kind"].get<std::string>();
  if (doc.contains("vertices")) spec.vertices = read_points(doc["vertices"], "vertices");
  if (doc.contains("p")) {
    if (!doc["p"].is_number()) throw GeometryError("arc-spec", "p must be a number");
    spec.p = doc["p"].get<double>();
  }
  if (doc.contains("resolution")) {
    if (!doc["resolution"].is_number_integer()) throw GeometryError("arc-spec", "resolution must be an integer");
    spec.resolution = doc["resolution"].get<int>();
  }
  return spec;
}

std::vector<Vector2> arc_vertices(const ArcSpec& spec) {
  const int resolution = spec.resolution.value_or(64);
  if (resolution < 2) throw GeometryError("arc-spec", "resolution must be at least 2");
  if (spec.kind == "explicit") {
    if (spec.vertices.empty()) throw GeometryError("arc-spec", "explicit arc needs vertices");
    return spec.vertices;
  }
  if (spec.kind == "segment") return fixtures::segment_arc();
  if (spec.kind == "square") return fixtures::square_arc();
  if (spec.kind == "circle-arc") return fixtures::circle_arc(resolution);
  if (spec.kind == "lp-arc") {
    if (!spec.p || !(*spec.p > 1.0)) throw GeometryError("arc-spec", "lp-arc needs p > 1");
    return fixtures::lp_arc(*spec.p, resolution);
  }
  throw GeometryError("arc-spec", "unknown arc kind '" + spec.kind + "'");
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return buf.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("cannot write " + path.string());
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw GeometryError("format", std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace radon::cli
