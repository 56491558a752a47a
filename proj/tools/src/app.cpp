#include "radon/cli/app.hpp"

#include <charconv>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "radon/cli/curve_file.hpp"
#include "radon/cli/report.hpp"
#include "radon/cli/svg.hpp"
#include "radon/fixtures.hpp"
#include "radon/norms.hpp"

namespace radon::cli {

namespace {

struct Options {
  // shared
  double eps_geom = 1e-9;
  double eps_norm = 1e-9;
  int samples = 1024;
  std::string out;
  // construct
  std::string spec_file;
  std::string kind;
  std::optional<double> p;
  std::optional<int> resolution;
  std::string vertices;
  bool mirror = false;
  // verify / eval / render
  std::vector<std::string> inputs;
  std::vector<std::string> checks;
  std::optional<std::uint64_t> seed;
  std::string profile_csv;
  std::string defect_csv;
  std::string vector;
  std::string mode = "norm";
  std::vector<std::string> overlays;
  std::string point = "2,0.5";
};

double parse_number(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw GeometryError("format", "not a number: '" + std::string(text) + "'");
  }
  return value;
}

// "a,b"
Vector2 parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw GeometryError("format", "expected a pair 'a,b', got '" + text + "'");
  return {parse_number(std::string_view(text).substr(0, comma)), parse_number(std::string_view(text).substr(comma + 1))};
}

// "a,b;a,b;..."
std::vector<Vector2> parse_pairs(const std::string& text) {
  std::vector<Vector2> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto semi = text.find(';', start);
    const std::string item = text.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
    if (!item.empty()) out.push_back(parse_pair(item));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return out;
}

Tolerance tolerance_of(const Options& o) {
  Tolerance tol{o.eps_geom, o.eps_norm, o.samples};
  tol.validate();
  return tol;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_text(path, text);
  }
}

LoadedCurve load(const std::string& path, const Tolerance& tol) {
  return load_curve(curve_from_json(parse_json(read_text(path))), tol);
}

int cmd_construct(const Options& o, std::ostream& out) {
  const Tolerance tol = tolerance_of(o);
  ArcSpec spec;
  if (!o.spec_file.empty()) {
    spec = arc_spec_from_json(parse_json(read_text(o.spec_file)));
  } else {
    if (o.kind.empty()) throw GeometryError("arc-spec", "give --input <spec.json> or --kind");
    spec.kind = o.kind;
    spec.p = o.p;
    spec.resolution = o.resolution;
    if (!o.vertices.empty()) spec.vertices = parse_pairs(o.vertices);
  }
  const GeneratorArc arc = validate_generator(arc_vertices(spec), tol);
  CurveFile file;
  if (o.mirror) {
    file = curve_from_body(CentrallySymmetricPolygon(fixtures::mirror_body(arc.vertices()), tol.eps_geom));
  } else {
    file = curve_from_radon(assemble_radon(arc, tol));
  }
  emit(to_json(file).dump(2) + "\n", o.out, out);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Tolerance tol = tolerance_of(o);
  if (o.inputs.size() != 1) throw GeometryError("format", "verify takes exactly one --input");
  const LoadedCurve curve = load(o.inputs.front(), tol);
  const Report report = run_checks(curve, {tol, o.checks, o.seed});
  if (!o.profile_csv.empty()) {
    if (!curve.radon) throw GeometryError("meta", "--profile-csv needs a constructed curve with arc ranges");
    write_text(o.profile_csv, profile_csv(validate_generator(curve.radon->arc1(), tol), tol.samples));
  }
  if (!o.defect_csv.empty()) write_text(o.defect_csv, defect_csv(GaugeNorm(curve.body), tol));
  emit(to_json(report).dump(2) + "\n", o.out, out);
  return report.all_pass() ? kExitOk : kExitCheckFailed;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const Tolerance tol = tolerance_of(o);
  if (o.inputs.size() != 1) throw GeometryError("format", "eval takes exactly one --input");
  const LoadedCurve curve = load(o.inputs.front(), tol);
  const Vector2 x = parse_pair(o.vector);
  const GaugeNorm g(curve.body);
  if (o.mode == "norm") {
    out << fmt::format("{:.12f}\n", norm(g, x) + 0.0);
  } else if (o.mode == "antinorm") {
    out << fmt::format("{:.12f}\n", antinorm(g, x) + 0.0);
  } else if (o.mode == "birkhoff-companion") {
    for (const auto& y : birkhoff_companions(g, x, kFanSamples, tol)) {
      out << fmt::format("{:.12f} {:.12f}\n", y.a + 0.0, y.b + 0.0);
    }
  } else {
    throw GeometryError("format", "unknown mode '" + o.mode + "'");
  }
  return kExitOk;
}

int cmd_render(const Options& o, std::ostream& out) {
  const Tolerance tol = tolerance_of(o);
  if (o.inputs.empty()) throw GeometryError("format", "render needs at least one --input");
  std::vector<CentrallySymmetricPolygon> bodies;
  for (const auto& path : o.inputs) bodies.push_back(load(path, tol).body);
  Overlays overlays;
  for (const auto& name : o.overlays) {
    if (name == "anticircle") {
      overlays.anticircle = true;
    } else if (name == "conjugate-parallelogram") {
      overlays.conjugate = true;
    } else if (name == "bisector") {
      overlays.bisector = true;
    } else {
      throw GeometryError("format", "unknown overlay '" + name + "'");
    }
  }
  overlays.bisector_point = parse_pair(o.point);
  emit(render_svg(bodies, overlays, tol), o.out, out);
  return kExitOk;
}

void add_tolerances(CLI::App* cmd, Options& o) {
  cmd->add_option("--eps-geom", o.eps_geom, "geometric tolerance")->capture_default_str();
  cmd->add_option("--eps-norm", o.eps_norm, "norm-level tolerance")->capture_default_str();
  cmd->add_option("--samples", o.samples, "grid size for parameter sweeps")->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Radon curve construction and verification"};
  app.name("radon");
  app.require_subcommand(1);
  Options o;

  auto* construct = app.add_subcommand("construct", "build a Radon curve from a generator arc");
  construct->add_option("--input", o.spec_file, "arc spec JSON file");
  construct->add_option("--kind", o.kind, "explicit | segment | square | circle-arc | lp-arc");
  construct->add_option("--p", o.p, "exponent for lp-arc");
  construct->add_option("--resolution", o.resolution, "vertex count for circle-arc and lp-arc");
  construct->add_option("--vertices", o.vertices, "explicit arc vertices 'a,b;a,b;...'");
  construct->add_flag("--mirror", o.mirror, "write the arc mirrored into all quadrants instead");
  construct->add_option("--out", o.out, "output curve file (default: stdout)");
  add_tolerances(construct, o);

  auto* verify = app.add_subcommand("verify", "run the verification suite on a curve file");
  verify->add_option("--input", o.inputs, "curve file")->required();
  verify->add_option("--checks", o.checks, "comma-separated check names")->delimiter(',');
  verify->add_option("--seed", o.seed, "seed for the random probe vectors");
  verify->add_option("--profile-csv", o.profile_csv, "write the support profile as CSV");
  verify->add_option("--defect-csv", o.defect_csv, "write the symmetry defect sweep as CSV");
  verify->add_option("--out", o.out, "report file (default: stdout)");
  add_tolerances(verify, o);

  auto* eval = app.add_subcommand("eval", "evaluate the norm, antinorm or Birkhoff companions");
  eval->add_option("--input", o.inputs, "curve file")->required();
  eval->add_option("--vector", o.vector, "vector 'a,b' in frame coordinates")->required();
  eval->add_option("--mode", o.mode, "norm | antinorm | birkhoff-companion")->capture_default_str();
  add_tolerances(eval, o);

  auto* render = app.add_subcommand("render", "draw curves and overlays as SVG");
  render->add_option("--input", o.inputs, "curve file (repeatable)")->required();
  render->add_option("--overlay", o.overlays, "anticircle, conjugate-parallelogram, bisector")->delimiter(',');
  render->add_option("--point", o.point, "external point 'a,b' for the bisector overlay")->capture_default_str();
  render->add_option("--out", o.out, "SVG file (default: stdout)");
  add_tolerances(render, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "radon: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  try {
    if (*construct) return cmd_construct(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*eval) return cmd_eval(o, out);
    return cmd_render(o, out);
  } catch (const IoError& e) {
    err << "radon: io: " << e.what() << "\n";
    return kExitIo;
  } catch (const GeometryError& e) {
    err << "radon: invalid input [" << e.code() << "]: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}

}  // namespace radon::cli
