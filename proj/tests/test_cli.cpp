#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <regex>
#include <sstream>
#include <sys/wait.h>

#include "latticircle/cli/commands.hpp"
#include "latticircle/cli/csv.hpp"
#include "latticircle/cli/radii.hpp"
#include "latticircle/errors.hpp"
#include "latticircle/reference_circles.hpp"

using namespace latticircle;
using namespace latticircle::cli;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "latticircle_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

TEST_CASE("format_real") {
  CHECK(format_real(3.0) == "3.0");
  CHECK(format_real(4.0) == "4.0");
  CHECK(format_real(10.0 / 3.0) == "3.33333333333");
  CHECK(format_real(3.2) == "3.2");
  CHECK(format_real(0.125) == "0.125");
}

TEST_CASE("parse_radii") {
  CHECK(parse_radii("10,100,1000") == std::vector<Coord>{10, 100, 1000});
  CHECK(parse_radii("1000,10,100,10") == std::vector<Coord>{10, 100, 1000});
  CHECK(parse_radii("5:20:5") == std::vector<Coord>{5, 10, 15, 20});
  CHECK(parse_radii("log:1:1000:4") == std::vector<Coord>{1, 10, 100, 1000});
  CHECK(parse_radii("log:7:7:1") == std::vector<Coord>{7});
  CHECK(parse_radii("log:1:3:10") == std::vector<Coord>{1, 2, 3});
  for (const char* bad : {"", "0", "-3", "1,,2", "a", "1:5", "5:1:1", "1:5:0", "log:1:2", "log:5:1:3", "3.5"})
    CHECK_THROWS_AS(parse_radii(bad), InvalidArgument);
}

TEST_CASE("generate quadrant CSV") {
  const auto r = invoke({"generate", "--radius", "2", "--cost", "exact", "--extent", "quadrant", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,x,y,s,a,S\n0,2,0,1,2,1\n1,2,1,-1,3,0\n2,1,1,1,2,1\n3,1,2,-1,3,0\n");
  CHECK(r.out.find('\r') == std::string::npos);
}

TEST_CASE("generate full CSV and SVG") {
  const auto csv = invoke({"generate", "--radius", "3", "--extent", "full"});
  CHECK(csv.code == 0);
  const auto rows = lines(csv.out);
  CHECK(rows.size() == 1 + 24);
  for (const auto& row : rows) CHECK(row.back() != ',');

  const auto svg = invoke({"generate", "--radius", "30", "--cost", "approx", "--extent", "full", "--format", "svg"});
  CHECK(svg.code == 0);
  CHECK(svg.out.find("<svg") != std::string::npos);
  CHECK(svg.out.find("version=\"1.1\"") != std::string::npos);
  std::smatch m;
  REQUIRE(std::regex_search(svg.out, m, std::regex("<polygon id=\"path\"[^>]*points=\"([^\"]*)\"")));
  const std::string pts = m[1];
  CHECK(std::count(pts.begin(), pts.end(), ',') == 240);
  CHECK(svg.out.find("<circle") == std::string::npos);

  const auto overlay = invoke({"generate", "--radius", "5", "--format", "svg", "--overlay-circle"});
  CHECK(overlay.out.find("<circle id=\"circle\"") != std::string::npos);
  CHECK(overlay.out.find("<polyline id=\"path\"") != std::string::npos);
}

TEST_CASE("generate SVG uses a y-up 8px grid") {
  const auto svg = invoke({"generate", "--radius", "1", "--format", "svg"});
  // quadrant r = 1, margin 1: x in [-1, 2], y in [-1, 2]; (1,0) -> (16, 16), (1,1) -> (16, 8)
  CHECK(svg.out.find("points=\"16,16 16,8\"") != std::string::npos);
  CHECK(svg.out.find("width=\"24\"") != std::string::npos);
}

TEST_CASE("generate errors") {
  const auto approx = invoke({"generate", "--radius", "3", "--cost", "approx", "--extent", "full"});
  CHECK(approx.code == 1);
  CHECK(approx.err.find("approx requires radius ≥ 5") != std::string::npos);
  CHECK(invoke({"generate", "--radius", "0"}).code == 1);
  CHECK(invoke({"generate", "--radius", "2", "--cost", "fancy"}).code == 1);
  CHECK(invoke({"generate", "--radius", "2", "--bogus"}).code == 1);
  CHECK(invoke({"generate"}).code == 1);
  CHECK(invoke({}).code == 1);
  const auto big = invoke({"generate", "--radius", "2000000000"});
  CHECK(big.code == 3);
}

TEST_CASE("generate then validate reproduces the in-memory verdict") {
  const auto full = scratch("signum5_full.csv");
  CHECK(invoke({"generate", "--radius", "5", "--extent", "full", "--out", full.string()}).code == 0);
  const auto closed = invoke({"validate", "--in", full.string(), "--mode", "closed"});
  CHECK(closed.code == 0);
  CHECK(closed.out.rfind("valid closed path, 40 points", 0) == 0);

  for (Coord r = 1; r <= 12; ++r) {
    const auto quad = scratch("signum_q.csv");
    CHECK(invoke({"generate", "--radius", std::to_string(r), "--out", quad.string()}).code == 0);
    const bool expected = check_path(generate_quadrant(r).points(), PathMode::Open).is_valid;
    CHECK((invoke({"validate", quad.string()}).code == 0) == expected);
    CHECK(invoke({"validate", quad.string(), "--mode", "closed"}).code == 2);
  }

  const auto mid = scratch("midpoint5.csv");
  CHECK(invoke({"generate", "--radius", "5", "--algorithm", "midpoint", "--out", mid.string()}).code == 0);
  const auto bad = invoke({"validate", "--in", mid.string(), "--mode", "open"});
  CHECK(bad.code == 2);
  const std::regex violation("index=[0-9]+ neighbors=[0-9]+");
  const auto report = lines(bad.out);
  REQUIRE(report.size() >= 2);
  for (std::size_t i = 1; i < report.size(); ++i) CHECK(std::regex_match(report[i], violation));
}

TEST_CASE("validate input errors") {
  const auto empty = scratch("empty.csv");
  std::ofstream(empty).close();
  CHECK(invoke({"validate", "--in", empty.string()}).code == 1);

  const auto noxy = scratch("noxy.csv");
  std::ofstream(noxy) << "a,b\n1,2\n";
  CHECK(invoke({"validate", "--in", noxy.string()}).code == 1);

  const auto junk = scratch("junk.csv");
  std::ofstream(junk) << "x,y\n1,zz\n";
  CHECK(invoke({"validate", "--in", junk.string()}).code == 1);

  const auto ragged = scratch("ragged.csv");
  std::ofstream(ragged) << "x,y\n1,2,3\n";
  CHECK(invoke({"validate", "--in", ragged.string()}).code == 1);

  CHECK(invoke({"validate", "--in", scratch("missing-file.csv").string()}).code == 1);

  const auto header_only = scratch("header.csv");
  std::ofstream(header_only) << "y,x\n";
  const auto vacuous = invoke({"validate", "--in", header_only.string()});
  CHECK(vacuous.code == 0);
  CHECK(vacuous.out.find("(empty)") != std::string::npos);

  const auto crlf = scratch("crlf.csv");
  std::ofstream(crlf, std::ios::binary) << "x,y\r\n0,0\r\n1,0\r\n";
  CHECK(invoke({"validate", "--in", crlf.string()}).code == 0);
}

TEST_CASE("pi command") {
  const auto a = invoke({"pi", "--radius", "2", "--estimator", "arithmetic", "--source", "signum"});
  CHECK(a.code == 0);
  auto f = split(lines(a.out).at(0));
  REQUIRE(f.size() == 6);
  CHECK(f[0] == "2");
  CHECK(f[1] == "arithmetic");
  CHECK(f[2] == "signum");
  CHECK(f[3] == "3.33333333333");
  CHECK(std::stod(f[4]) == doctest::Approx(std::numbers::pi));

  const auto h = invoke({"pi", "--radius", "2", "--estimator", "harmonic", "--source", "signum"});
  CHECK(split(lines(h.out).at(0))[3] == "3.2");

  const auto p = invoke({"pi", "--radius", "1", "--estimator", "arithmetic", "--source", "param-exact"});
  f = split(lines(p.out).at(0));
  CHECK(std::stod(f[3]) == doctest::Approx(3.414214).epsilon(1e-6));

  const auto flagged = invoke({"pi", "--radius", "4", "--source", "param-round"});
  CHECK(flagged.code == 0);
  CHECK(flagged.err.find("no closed form") != std::string::npos);

  CHECK(invoke({"pi", "--radius", "2", "--estimator", "median"}).code == 1);
  CHECK(invoke({"pi", "--radius", "4", "--cost", "approx"}).code == 1);
  CHECK(invoke({"pi", "--radius", "1", "--source", "param-floor"}).code == 1);
}

TEST_CASE("sweep command") {
  const auto s = invoke({"sweep", "--radii", "1000,10,100", "--estimator", "arithmetic", "--source", "signum"});
  CHECK(s.code == 0);
  const auto rows = lines(s.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == "r,estimator,source,value,target,abs_error,note");
  std::vector<double> errors;
  for (std::size_t i = 1; i < rows.size(); ++i) errors.push_back(std::stod(split(rows[i])[5]));
  CHECK(split(rows[1])[0] == "10");
  CHECK(split(rows[3])[0] == "1000");
  CHECK(errors[0] > errors[1]);
  CHECK(errors[1] > errors[2]);

  const auto out = scratch("sweep.csv");
  CHECK(invoke({"sweep", "--radii", "10,100,1000,10000", "--estimator", "arithmetic", "--source", "param-exact",
                "--out", out.string()})
            .code == 0);
  const auto written = lines(slurp(out));
  REQUIRE(written.size() == 5);
  CHECK(std::abs(std::stod(split(written[4])[3]) - 3.17406) < 1e-3);

  const auto floor1 = invoke({"sweep", "--radii", "1", "--estimator", "harmonic", "--source", "param-floor"});
  CHECK(floor1.code == 0);
  const auto flagged = split(lines(floor1.out).at(1));
  REQUIRE(flagged.size() == 7);
  CHECK(flagged[6] == "target=pi (no closed form)");
  CHECK(std::stod(flagged[4]) == doctest::Approx(std::numbers::pi));

  CHECK(invoke({"sweep", "--radii", "1", "--source", "param-floor"}).code == 1);
  CHECK(invoke({"sweep", "--radii", "3:1:1"}).code == 1);
  CHECK(invoke({"sweep", "--radii", "log:1:100"}).code == 1);
}

TEST_CASE("sweep output is deterministic across worker counts") {
  const auto a = scratch("sweep_a.csv");
  const auto b = scratch("sweep_b.csv");
  ::setenv("LATTICIRCLE_THREADS", "1", 1);
  CHECK(threads_from_env() == 1);
  CHECK(invoke({"sweep", "--radii", "log:1:5000:25", "--estimator", "harmonic", "--out", a.string()}).code == 0);
  ::setenv("LATTICIRCLE_THREADS", "5", 1);
  CHECK(threads_from_env() == 5);
  CHECK(invoke({"sweep", "--radii", "log:1:5000:25", "--estimator", "harmonic", "--out", b.string()}).code == 0);
  ::setenv("LATTICIRCLE_THREADS", "nonsense", 1);
  CHECK(threads_from_env() == 0);
  ::unsetenv("LATTICIRCLE_THREADS");
  CHECK(slurp(a) == slurp(b));
  CHECK(!slurp(a).empty());
}

TEST_CASE("area command") {
  CHECK(invoke({"area", "--radius", "2", "--with-bounds"}).out == "2,3,1,4,3.0\n");
  CHECK(invoke({"area", "--radius", "1"}).out == "1,1,,,4.0\n");
  const auto big = split(lines(invoke({"area", "--radius", "1000"}).out).at(0));
  CHECK(std::abs(std::stod(big[4]) - std::numbers::pi) < 0.02);
  CHECK(invoke({"area", "--radius", "0"}).code == 1);
  CHECK(invoke({"area"}).code == 1);
}

TEST_CASE("identical flags give byte-identical files") {
  const auto a = scratch("det_a.svg");
  const auto b = scratch("det_b.svg");
  CHECK(invoke({"generate", "--radius", "17", "--extent", "full", "--format", "svg", "--overlay-circle", "--out",
                a.string()})
            .code == 0);
  CHECK(invoke({"generate", "--radius", "17", "--extent", "full", "--format", "svg", "--overlay-circle", "--out",
                b.string()})
            .code == 0);
  CHECK(slurp(a) == slurp(b));
}

TEST_CASE("the installed binary reports exit codes") {
  auto status = [](const std::string& cmd) {
    const int raw = std::system((std::string(LATTICIRCLE_BIN) + " " + cmd + " >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status("generate --radius 4") == 0);
  CHECK(status("generate --radius 3 --cost approx") == 1);
  CHECK(status("generate --radius 3000000000") == 3);
  CHECK(status("--help") == 0);
  const auto mid = scratch("bin_mid7.csv");
  CHECK(status("generate --radius 7 --algorithm midpoint --out " + mid.string()) == 0);
  CHECK(status("validate " + mid.string()) == 2);
}
