#include "latticircle/cli/commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "latticircle/area.hpp"
#include "latticircle/cli/csv.hpp"
#include "latticircle/cli/radii.hpp"
#include "latticircle/cli/svg.hpp"
#include "latticircle/errors.hpp"
#include "latticircle/pi_estimators.hpp"
#include "latticircle/reference_circles.hpp"
#include "latticircle/signum_circle.hpp"

namespace latticircle::cli {

namespace {

const std::map<std::string, CostVariant> kCosts{
    {"exact", CostVariant::Exact},
    {"simplified", CostVariant::Simplified},
    {"approx", CostVariant::Approximate}};

const std::map<std::string, Estimator> kEstimators{
    {"arithmetic", Estimator::Arithmetic}, {"harmonic", Estimator::Harmonic}};

const std::map<std::string, DiscretizationSource> kSources{
    {"signum", DiscretizationSource::Signum},
    {"param-exact", DiscretizationSource::ParamExact},
    {"param-floor", DiscretizationSource::ParamFloor},
    {"param-round", DiscretizationSource::ParamRound},
    {"midpoint", DiscretizationSource::Midpoint}};

template <typename Map>
std::vector<std::string> keys(const Map& m) {
  std::vector<std::string> out;
  for (const auto& [k, v] : m) out.push_back(k);
  return out;
}

// Writes to the named file, or to the fallback stream when the name is empty.
void emit(const std::string& path, std::ostream& fallback, const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidArgument("cannot open '" + path + "' for writing");
  body(file);
  if (!file) throw InvalidArgument("write to '" + path + "' failed");
}

void require_radius(Coord r, CostVariant cost) {
  if (r < 1) throw InvalidArgument("radius must be >= 1");
  if (cost == CostVariant::Approximate && r < kMinApproximateRadius)
    throw InvalidArgument("approx requires radius ≥ 5");
}

struct GenerateArgs {
  Coord radius = 0;
  std::string cost = "exact";
  std::string extent = "quadrant";
  std::string format = "csv";
  std::string algorithm = "signum";
  std::string out_path;
  bool overlay = false;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  const auto cost = kCosts.at(a.cost);
  const bool full = a.extent == "full";
  if (a.algorithm == "midpoint") {
    if (a.radius < 1) throw InvalidArgument("radius must be >= 1");
    if (full) throw InvalidArgument("the midpoint baseline is generated per quadrant only");
    const auto points = midpoint_quadrant(a.radius);
    emit(a.out_path, out, [&](std::ostream& os) {
      if (a.format == "svg")
        write_path_svg(os, points, a.radius, false, {.overlay_circle = a.overlay});
      else
        write_points_csv(os, points);
    });
    return kExitOk;
  }

  require_radius(a.radius, cost);
  const auto trace = generate_quadrant(a.radius, cost);
  emit(a.out_path, out, [&](std::ostream& os) {
    if (a.format == "svg") {
      const auto path = full ? assemble_full_circle(trace) : quadrant_path(trace);
      write_path_svg(os, path.points, a.radius, full, {.overlay_circle = a.overlay});
    } else {
      write_trace_csv(os, trace, full);
    }
  });
  return kExitOk;
}

int cmd_validate(const std::string& in_path, const std::string& mode_name, std::ostream& out) {
  std::ifstream file(in_path, std::ios::binary);
  if (!file) throw InvalidArgument("cannot open '" + in_path + "'");
  const auto points = read_points_csv(file);
  const auto mode = mode_name == "closed" ? PathMode::Closed : PathMode::Open;
  const auto report = check_path(points, mode);
  const bool ok = mode == PathMode::Closed ? report.is_closed_valid : report.is_valid;

  out << (ok ? "valid" : "invalid") << ' ' << mode_name << " path, " << points.size() << " points";
  if (report.empty) out << " (empty)";
  out << '\n';
  for (const auto& v : report.violations) out << "index=" << v.index << " neighbors=" << v.neighbor_count << '\n';
  return ok ? kExitOk : kExitInvalidPath;
}

int cmd_pi(Coord radius, const std::string& estimator, const std::string& source, const std::string& cost,
           std::ostream& out, std::ostream& err) {
  const auto src = kSources.at(source);
  if (src == DiscretizationSource::Signum) require_radius(radius, kCosts.at(cost));
  const auto rec = evaluate(radius, kEstimators.at(estimator), src, kCosts.at(cost));
  out << record_line(rec) << '\n';
  if (!rec.has_closed_form_target) err << "note: target=pi (no closed form)\n";
  return kExitOk;
}

int cmd_sweep(const std::string& spec, const std::string& estimator, const std::string& source,
              const std::string& cost, const std::string& out_path, std::ostream& out) {
  const auto radii = parse_radii(spec);
  const auto records = sweep(radii, kEstimators.at(estimator), kSources.at(source),
                             {.variant = kCosts.at(cost), .threads = threads_from_env()});
  emit(out_path, out, [&](std::ostream& os) { write_sweep_csv(os, records); });
  return kExitOk;
}

int cmd_area(Coord radius, bool with_bounds, const std::string& cost, std::ostream& out) {
  require_radius(radius, kCosts.at(cost));
  const auto report = area_report(radius, with_bounds, kCosts.at(cost));
  out << report.r << ',' << report.area << ',';
  if (report.bounds) out << report.bounds->inner << ',' << report.bounds->outer;
  else out << ',';
  out << ',' << format_real(report.ratio) << '\n';
  return kExitOk;
}

}  // namespace

unsigned threads_from_env() {
  const char* raw = std::getenv("LATTICIRCLE_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 1) return 0;
  return static_cast<unsigned>(v);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Digital circles on the integer lattice built by the signum recursion", "latticircle"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Build a quadrant or full circle and write CSV or SVG");
  generate->add_option("--radius", gen.radius, "Integer radius")->required();
  generate->add_option("--cost", gen.cost, "Cost variant")->check(CLI::IsMember(keys(kCosts)));
  generate->add_option("--extent", gen.extent, "quadrant or full")->check(CLI::IsMember({"quadrant", "full"}));
  generate->add_option("--format", gen.format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}));
  generate->add_option("--algorithm", gen.algorithm, "signum or the midpoint baseline")
      ->check(CLI::IsMember({"signum", "midpoint"}));
  generate->add_option("--out", gen.out_path, "Output file (default: stdout)");
  generate->add_flag("--overlay-circle", gen.overlay, "Draw the Euclidean circle in SVG output");

  std::string in_path;
  std::string mode = "open";
  auto* validate = app.add_subcommand("validate", "Check a CSV point list as a lattice path");
  validate->add_option("--in,in", in_path, "CSV file with x and y columns")->required();
  validate->add_option("--mode", mode, "open or closed")->check(CLI::IsMember({"open", "closed"}));

  Coord radius = 0;
  std::string estimator = "arithmetic";
  std::string source = "signum";
  std::string cost = "exact";
  auto* pi = app.add_subcommand("pi", "Mean of the per-point pi values for one radius");
  pi->add_option("--radius", radius, "Integer radius")->required();
  pi->add_option("--estimator", estimator)->check(CLI::IsMember(keys(kEstimators)));
  pi->add_option("--source", source)->check(CLI::IsMember(keys(kSources)));
  pi->add_option("--cost", cost, "Cost variant of the signum source")->check(CLI::IsMember(keys(kCosts)));

  std::string radii_spec;
  std::string sweep_out;
  auto* sweep_cmd = app.add_subcommand("sweep", "Estimator convergence over many radii, as CSV");
  sweep_cmd->add_option("--radii", radii_spec, "a,b,c | min:max:step | log:a:b:k")->required();
  sweep_cmd->add_option("--estimator", estimator)->check(CLI::IsMember(keys(kEstimators)));
  sweep_cmd->add_option("--source", source)->check(CLI::IsMember(keys(kSources)));
  sweep_cmd->add_option("--cost", cost)->check(CLI::IsMember(keys(kCosts)));
  sweep_cmd->add_option("--out", sweep_out, "Output file (default: stdout)");

  bool with_bounds = false;
  auto* area = app.add_subcommand("area", "Enclosed quadrant area and its staircase bounds");
  area->add_option("--radius", radius, "Integer radius")->required();
  area->add_flag("--with-bounds", with_bounds, "Also report inner and outer areas");
  area->add_option("--cost", cost)->check(CLI::IsMember(keys(kCosts)));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (generate->parsed()) return cmd_generate(gen, out);
    if (validate->parsed()) return cmd_validate(in_path, mode, out);
    if (pi->parsed()) return cmd_pi(radius, estimator, source, cost, out, err);
    if (sweep_cmd->parsed()) return cmd_sweep(radii_spec, estimator, source, cost, sweep_out, out);
    if (area->parsed()) return cmd_area(radius, with_bounds, cost, out);
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kExitOverflow;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace latticircle::cli
