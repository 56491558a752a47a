#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <regex>

#include "cli_helpers.hpp"
#include "radon/cli/curve_file.hpp"
#include "radon/cli/report.hpp"
#include "radon/construct.hpp"
#include "radon/fixtures.hpp"

using clitest::invoke;
using nlohmann::json;
using namespace radon;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

std::string body_file(const clitest::ScratchDir& dir, const std::string& name, const std::vector<Vector2>& vs) {
  const std::string path = dir.file(name);
  clitest::spit(path, cli::to_json(cli::curve_from_body(CentrallySymmetricPolygon(vs))).dump(2));
  return path;
}

// Golden comparison: identical structure, strings and booleans; numbers within tol.
void compare_json(const json& got, const json& want, const std::string& where, double tol) {
  if (want.is_number()) {
    REQUIRE_MESSAGE(got.is_number(), where);
    CHECK_MESSAGE(std::abs(got.get<double>() - want.get<double>()) <= tol, where);
    return;
  }
  REQUIRE_MESSAGE(got.type() == want.type(), where);
  if (want.is_object()) {
    REQUIRE_MESSAGE(got.size() == want.size(), where);
    for (auto it = want.begin(); it != want.end(); ++it) {
      REQUIRE_MESSAGE(got.contains(it.key()), (where + "." + it.key()));
      compare_json(got[it.key()], it.value(), where + "." + it.key(), tol);
    }
  } else if (want.is_array()) {
    REQUIRE_MESSAGE(got.size() == want.size(), where);
    for (std::size_t i = 0; i < want.size(); ++i) compare_json(got[i], want[i], where + "[" + std::to_string(i) + "]", tol);
  } else {
    CHECK_MESSAGE(got == want, where);
  }
}

}  // namespace

TEST_CASE("construct landmark curves") {
  clitest::ScratchDir dir("construct");
  const auto seg = invoke({"construct", "--kind", "segment", "--out", dir.file("hex.json")});
  REQUIRE(seg.code == 0);
  const json hex = json::parse(clitest::slurp(dir.file("hex.json")));
  CHECK(hex["format"] == 1);
  CHECK(hex["vertices"].size() == 6);
  CHECK(hex["meta"]["arc1_range"] == json::array({0, 1}));
  CHECK(hex["meta"]["arc2_range"] == json::array({1, 3}));

  const auto sq = invoke({"construct", "--kind", "square"});
  REQUIRE(sq.code == 0);
  CHECK(json::parse(sq.out)["vertices"].size() == 6);
}

TEST_CASE("construct from a spec file and from explicit vertices") {
  clitest::ScratchDir dir("spec");
  clitest::spit(dir.file("spec.json"), R"({"kind": "lp-arc", "p": 3, "resolution": 12})");
  const auto r = invoke({"construct", "--input", dir.file("spec.json")});
  REQUIRE(r.code == 0);
  const auto expected = assemble_radon(validate_generator(fixtures::lp_arc(3.0, 12)));
  CHECK(json::parse(r.out)["vertices"].size() == expected.polygon().size());

  const auto ex = invoke({"construct", "--kind", "explicit", "--vertices", "0,1;0.6,0.9;1,0"});
  CHECK(ex.code == 0);
}

TEST_CASE("construct rejects invalid arcs with exit 2 and names the invariant") {
  const auto bad = invoke({"construct", "--kind", "explicit", "--vertices", "0,1;0.2,0.2;1,0"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("convexity") != std::string::npos);
  CHECK(invoke({"construct", "--kind", "explicit", "--vertices", "0,1;1.5,0.5;1,0"}).err.find("parallelogram") !=
        std::string::npos);
  CHECK(invoke({"construct", "--kind", "lp-arc", "--p", "1"}).code == 2);
  CHECK(invoke({"construct", "--kind", "circle-arc", "--resolution", "1"}).code == 2);
  CHECK(invoke({"construct", "--kind", "explicit"}).code == 2);
  CHECK(invoke({"construct", "--kind", "spiral"}).code == 2);
  CHECK(invoke({"construct"}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
}

TEST_CASE("construct round trip is exact") {
  clitest::ScratchDir dir("roundtrip");
  std::mt19937_64 rng(73);
  const auto raw = fixtures::random_arc(rng, 17);
  json spec{{"kind", "explicit"}, {"vertices", json::array()}};
  for (const auto& x : raw) spec["vertices"].push_back({x.a, x.b});
  clitest::spit(dir.file("spec.json"), spec.dump());
  REQUIRE(invoke({"construct", "--input", dir.file("spec.json"), "--out", dir.file("curve.json")}).code == 0);

  const RadonCurve memory = assemble_radon(validate_generator(raw));
  const cli::LoadedCurve loaded =
      cli::load_curve(cli::curve_from_json(json::parse(clitest::slurp(dir.file("curve.json")))));
  REQUIRE(loaded.radon.has_value());
  CHECK(loaded.body.vertices() == memory.polygon().vertices());
  CHECK(loaded.radon->arc1_range().first == memory.arc1_range().first);
  CHECK(loaded.radon->arc1_range().last == memory.arc1_range().last);
  CHECK(loaded.radon->arc2_range().last == memory.arc2_range().last);
  CHECK(loaded.radon->arc1() == memory.arc1());
  CHECK(loaded.radon->arc2() == memory.arc2());
}

TEST_CASE("curve file schema errors") {
  CHECK_THROWS_AS(cli::curve_from_json(json::parse(R"({"vertices": []})")), GeometryError);
  CHECK_THROWS_AS(cli::curve_from_json(json::parse(R"({"format": 2, "vertices": []})")), GeometryError);
  CHECK_THROWS_AS(cli::curve_from_json(json::parse(R"({"format": 1, "vertices": [[1]]})")), GeometryError);
  CHECK_THROWS_AS(cli::curve_from_json(json::parse(R"({"format": 1, "vertices": [], "meta": {"arc1_range": [0, 1]}})")),
                  GeometryError);
  CHECK_THROWS_AS(cli::curve_from_json(json::parse(R"({"format": 1, "frame": {"v": [1, 0], "w": [0, 3]}, "vertices": []})")),
                  GeometryError);
  CHECK_THROWS_AS(cli::parse_json("{not json"), GeometryError);
  // Arc ranges that do not match the vertex list.
  const auto file = cli::curve_from_json(json::parse(
      R"({"format": 1, "vertices": [[1,0],[0,1],[-1,1],[-1,0],[0,-1],[1,-1]], "meta": {"arc1_range": [0, 2], "arc2_range": [2, 3]}})"));
  CHECK_THROWS_AS(cli::load_curve(file), GeometryError);
}

TEST_CASE("verify the hexagon: every check passes") {
  clitest::ScratchDir dir("verify-hex");
  REQUIRE(invoke({"construct", "--kind", "segment", "--out", dir.file("hex.json")}).code == 0);
  const auto r = invoke({"verify", "--input", dir.file("hex.json")});
  CHECK(r.code == 0);
  const json report = json::parse(r.out);
  CHECK(report["all_pass"] == true);
  CHECK(report["checks"].size() == cli::check_names().size());
  for (const auto& c : report["checks"]) CHECK_MESSAGE(c["pass"] == true, c["name"]);
  const json* area = clitest::find_check(report, "constant-area");
  REQUIRE(area != nullptr);
  CHECK((*area)["value"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("verify the unit square as a body") {
  clitest::ScratchDir dir("verify-square");
  const std::string path = body_file(dir, "square.json", fixtures::unit_square());
  const auto r = invoke({"verify", "--input", path});
  CHECK(r.code == 1);
  const json report = json::parse(r.out);
  CHECK(report["all_pass"] == false);
  for (const char* name : {"birkhoff-symmetry", "constant-area", "homothety", "bisector"}) {
    const json* c = clitest::find_check(report, name);
    REQUIRE(c != nullptr);
    CHECK_MESSAGE((*c)["pass"] == false, name);
  }
  for (const char* name : {"convexity", "central-symmetry"}) CHECK((*clitest::find_check(report, name))["pass"] == true);
  // Arc checks need a constructed curve.
  CHECK(clitest::find_check(report, "duality") == nullptr);
  CHECK(invoke({"verify", "--input", path, "--checks", "duality"}).code == 2);
}

TEST_CASE("verify lp constructions pass while the raw lp ball fails") {
  clitest::ScratchDir dir("verify-lp");
  REQUIRE(invoke({"construct", "--kind", "lp-arc", "--p", "4", "--resolution", "48", "--out", dir.file("c.json")}).code == 0);
  CHECK(invoke({"verify", "--input", dir.file("c.json")}).code == 0);
  const std::string ball = body_file(dir, "ball.json", fixtures::lp_ball(4.0, 96));
  CHECK(invoke({"verify", "--input", ball}).code == 1);
  REQUIRE(invoke({"construct", "--kind", "lp-arc", "--p", "4", "--resolution", "48", "--mirror", "--out",
                  dir.file("m.json")})
              .code == 0);
  CHECK(invoke({"verify", "--input", dir.file("m.json")}).code == 1);
}

TEST_CASE("verify check selection, ordering and errors") {
  clitest::ScratchDir dir("verify-select");
  REQUIRE(invoke({"construct", "--kind", "square", "--out", dir.file("c.json")}).code == 0);
  const auto r = invoke({"verify", "--input", dir.file("c.json"), "--checks", "homothety,convexity,homothety"});
  REQUIRE(r.code == 0);
  const json report = json::parse(r.out);
  REQUIRE(report["checks"].size() == 2);
  CHECK(report["checks"][0]["name"] == "convexity");
  CHECK(report["checks"][1]["name"] == "homothety");
  const auto bad = invoke({"verify", "--input", dir.file("c.json"), "--checks", "nonsense"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("nonsense") != std::string::npos);
  CHECK(invoke({"verify", "--input", dir.file("c.json"), "--eps-geom", "-1"}).code == 2);
  CHECK(invoke({"verify", "--input", dir.file("c.json"), "--samples", "3"}).code == 2);
}

TEST_CASE("verify seeds the probe vectors reproducibly") {
  clitest::ScratchDir dir("verify-seed");
  REQUIRE(invoke({"construct", "--kind", "circle-arc", "--resolution", "16", "--out", dir.file("c.json")}).code == 0);
  const auto a = invoke({"verify", "--input", dir.file("c.json"), "--checks", "norm-antinorm", "--seed", "5"});
  const auto b = invoke({"verify", "--input", dir.file("c.json"), "--checks", "norm-antinorm", "--seed", "5"});
  const auto plain = invoke({"verify", "--input", dir.file("c.json"), "--checks", "norm-antinorm"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(json::parse(a.out)["seed"] == 5);
  CHECK(json::parse(plain.out)["seed"].is_null());
  CHECK(plain.out == invoke({"verify", "--input", dir.file("c.json"), "--checks", "norm-antinorm"}).out);
}

TEST_CASE("verify writes CSV profiles") {
  clitest::ScratchDir dir("verify-csv");
  REQUIRE(invoke({"construct", "--kind", "segment", "--out", dir.file("c.json")}).code == 0);
  const auto r = invoke({"verify", "--input", dir.file("c.json"), "--checks", "convexity", "--samples", "11",
                         "--profile-csv", dir.file("s.csv"), "--defect-csv", dir.file("d.csv")});
  REQUIRE(r.code == 0);
  const std::string profile = clitest::slurp(dir.file("s.csv"));
  CHECK(profile.rfind("lambda,s,lower_bound,upper_bound\n", 0) == 0);
  CHECK(count(profile, "\n") == 12);
  CHECK(profile.find("0.500000000000,0.500000000000,0.500000000000,1.000000000000") != std::string::npos);
  const std::string defects = clitest::slurp(dir.file("d.csv"));
  CHECK(defects.rfind("sample,defect\n", 0) == 0);
  CHECK(count(defects, "\n") == 13);  // 6 vertices + 6 midpoints + header

  clitest::ScratchDir other("verify-csv-body");
  const std::string square = body_file(other, "sq.json", fixtures::unit_square());
  CHECK(invoke({"verify", "--input", square, "--profile-csv", other.file("s.csv")}).code == 2);
}

TEST_CASE("golden reports") {
  clitest::ScratchDir dir("golden");
  REQUIRE(invoke({"construct", "--kind", "segment", "--out", dir.file("hex.json")}).code == 0);
  const json hex = json::parse(invoke({"verify", "--input", dir.file("hex.json")}).out);
  compare_json(hex, json::parse(clitest::slurp(std::string(RADON_GOLDEN_DIR) + "/hexagon_report.json")), "hexagon", 1e-12);

  const std::string square = body_file(dir, "square.json", fixtures::unit_square());
  const json sq = json::parse(invoke({"verify", "--input", square}).out);
  compare_json(sq, json::parse(clitest::slurp(std::string(RADON_GOLDEN_DIR) + "/square_report.json")), "square", 1e-12);
}

TEST_CASE("eval") {
  clitest::ScratchDir dir("eval");
  REQUIRE(invoke({"construct", "--kind", "segment", "--out", dir.file("hex.json")}).code == 0);
  const std::string hex = dir.file("hex.json");
  CHECK(invoke({"eval", "--input", hex, "--vector", "1,1"}).out == "2.000000000000\n");
  CHECK(invoke({"eval", "--input", hex, "--vector", "1,1", "--mode", "antinorm"}).out == "2.000000000000\n");
  CHECK(invoke({"eval", "--input", hex, "--vector", "0,0"}).out == "0.000000000000\n");
  CHECK(invoke({"eval", "--input", hex, "--vector=-2,0"}).out == "2.000000000000\n");

  const auto edge = invoke({"eval", "--input", hex, "--vector", "0.5,0.5", "--mode", "birkhoff-companion"});
  CHECK(edge.code == 0);
  CHECK(edge.out == "-1.000000000000 1.000000000000\n");
  const auto vertex = invoke({"eval", "--input", hex, "--vector", "1,0", "--mode", "birkhoff-companion"});
  CHECK(count(vertex.out, "\n") == cli::kFanSamples);

  const auto zero = invoke({"eval", "--input", hex, "--vector", "0,0", "--mode", "birkhoff-companion"});
  CHECK(zero.code == 2);
  CHECK(zero.err.find("zero-vector") != std::string::npos);
  CHECK(invoke({"eval", "--input", hex, "--vector", "1;1"}).code == 2);
  CHECK(invoke({"eval", "--input", hex, "--vector", "1,1", "--mode", "dual"}).code == 2);
}

TEST_CASE("render hexagon without overlays") {
  clitest::ScratchDir dir("render");
  REQUIRE(invoke({"construct", "--kind", "segment", "--out", dir.file("hex.json")}).code == 0);
  const auto r = invoke({"render", "--input", dir.file("hex.json")});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("viewBox=\"0 0 600 600\"") != std::string::npos);
  CHECK(count(r.out, "<path") == 1);
  const std::regex path_re("<path d=\"([^\"]*)\"");
  std::smatch m;
  REQUIRE(std::regex_search(r.out, m, path_re));
  CHECK(count(m[1].str(), ",") == 6);
  CHECK(m[1].str().back() == 'Z');
}

TEST_CASE("render anticircle of the hexagon coincides with it") {
  clitest::ScratchDir dir("render-anti");
  REQUIRE(invoke({"construct", "--kind", "segment", "--out", dir.file("hex.json")}).code == 0);
  const auto r = invoke({"render", "--input", dir.file("hex.json"), "--overlay", "anticircle"});
  REQUIRE(r.code == 0);
  CHECK(count(r.out, "<path") == 2);
  // Same vertex set, possibly starting elsewhere in the cycle.
  const std::regex pt_re("[ML]([0-9.]+,[0-9.]+)");
  std::vector<std::vector<std::string>> paths;
  const std::regex path_re("<path d=\"([^\"]*)\"");
  for (auto it = std::sregex_iterator(r.out.begin(), r.out.end(), path_re); it != std::sregex_iterator(); ++it) {
    const std::string d = (*it)[1].str();
    std::vector<std::string> pts;
    for (auto p = std::sregex_iterator(d.begin(), d.end(), pt_re); p != std::sregex_iterator(); ++p) pts.push_back((*p)[1]);
    std::sort(pts.begin(), pts.end());
    paths.push_back(pts);
  }
  REQUIRE(paths.size() == 2);
  CHECK(paths[0] == paths[1]);
}

TEST_CASE("render the bisector construction on the square") {
  clitest::ScratchDir dir("render-bis");
  const std::string square = body_file(dir, "sq.json", fixtures::unit_square());
  const auto r = invoke({"render", "--input", square, "--overlay", "bisector", "--point", "2,0.5"});
  REQUIRE(r.code == 0);
  CHECK(count(r.out, "class=\"bisector-point\"") == 4);
  for (const char* label : {"x0", "x1", "y0", "y1"}) CHECK(r.out.find(std::string("data-label=\"") + label) != std::string::npos);
  CHECK(count(r.out, "class=\"chord-outer\"") == 1);
  CHECK(count(r.out, "class=\"chord-inner\"") == 1);
  CHECK(invoke({"render", "--input", square, "--overlay", "bisector", "--point", "0.5,0"}).code == 2);
  CHECK(invoke({"render", "--input", square, "--overlay", "glitter"}).code == 2);
}

TEST_CASE("render is deterministic and byte-stable") {
  clitest::ScratchDir dir("render-det");
  REQUIRE(invoke({"construct", "--kind", "lp-arc", "--p", "3", "--resolution", "20", "--out", dir.file("a.json")}).code == 0);
  const std::string square = body_file(dir, "sq.json", fixtures::unit_square());
  const std::vector<std::string> args{"render", "--input", dir.file("a.json"), "--input", square, "--overlay",
                                      "anticircle,conjugate-parallelogram,bisector"};
  auto with_out = args;
  with_out.insert(with_out.end(), {"--out", dir.file("one.svg")});
  REQUIRE(invoke(with_out).code == 0);
  const auto again = invoke(args);
  REQUIRE(again.code == 0);
  CHECK(again.out == clitest::slurp(dir.file("one.svg")));
  CHECK(count(again.out, "class=\"curve\"") == 2);
  CHECK(again.out.find("-0.0000") == std::string::npos);

  const std::string hexagon = body_file(dir, "hex.json", fixtures::hexagon());
  const auto golden = invoke({"render", "--input", hexagon, "--overlay", "anticircle,conjugate-parallelogram,bisector"});
  CHECK(golden.out == clitest::slurp(std::string(RADON_GOLDEN_DIR) + "/hexagon_overlays.svg"));
}

TEST_CASE("I/O failures exit with 3") {
  CHECK(invoke({"verify", "--input", "/nonexistent/curve.json"}).code == 3);
  CHECK(invoke({"construct", "--kind", "segment", "--out", "/nonexistent/dir/out.json"}).code == 3);
  clitest::ScratchDir dir("io");
  clitest::spit(dir.file("broken.json"), "{\"format\": 1, \"vertices\": [[1, 0],");
  CHECK(invoke({"verify", "--input", dir.file("broken.json")}).code == 2);
}

TEST_CASE("help exits cleanly") {
  const auto r = invoke({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("construct") != std::string::npos);
}
