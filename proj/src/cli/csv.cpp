#include "latticircle/cli/csv.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string_view>

#include "latticircle/errors.hpp"

namespace latticircle::cli {

namespace {

std::vector<std::string_view> fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

Coord parse_coord(std::string_view token, std::size_t line_no) {
  token = trim(token);
  Coord v = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (token.empty() || ec != std::errc{} || ptr != end)
    throw InvalidArgument("line " + std::to_string(line_no) + ": '" + std::string(token) +
                          "' is not an integer");
  return v;
}

}  // namespace

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  std::string s(buf);
  if (s.find_first_of(".eEni") == std::string::npos) s += ".0";
  return s;
}

void write_trace_csv(std::ostream& os, const QuadrantTrace& trace, bool full_circle) {
  os << "n,x,y,s,a,S\n";
  const int turns = full_circle ? 4 : 1;
  std::size_t n = 0;
  for (int k = 0; k < turns; ++k) {
    for (std::size_t i = 0; i < trace.size(); ++i, ++n) {
      const auto p = rotate90(trace.point(i), k);
      os << n << ',' << p.x << ',' << p.y << ',' << trace.s_seq[i] << ',' << l1_norm(p) << ','
         << trace.S_seq[i] << '\n';
    }
  }
}

void write_points_csv(std::ostream& os, const std::vector<LatticePoint>& points) {
  os << "n,x,y,a\n";
  for (std::size_t n = 0; n < points.size(); ++n)
    os << n << ',' << points[n].x << ',' << points[n].y << ',' << l1_norm(points[n]) << '\n';
}

std::string record_line(const ConvergenceRecord& rec) {
  std::string line = std::to_string(rec.r);
  line += ',';
  line += to_string(rec.estimator);
  line += ',';
  line += to_string(rec.source);
  line += ',' + format_real(rec.value) + ',' + format_real(rec.target) + ',' + format_real(rec.abs_error);
  return line;
}

void write_sweep_csv(std::ostream& os, const std::vector<ConvergenceRecord>& records) {
  os << "r,estimator,source,value,target,abs_error,note\n";
  for (const auto& rec : records) {
    os << record_line(rec) << ',';
    if (!rec.has_closed_form_target) os << "target=pi (no closed form)";
    os << '\n';
  }
}

std::vector<LatticePoint> read_points_csv(std::istream& is) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(is, line)) {
    ++line_no;
    if (!trim(line).empty()) {
      have_header = true;
      break;
    }
  }
  if (!have_header) throw InvalidArgument("empty CSV input");

  const auto header = fields(line);
  std::size_t xi = header.size();
  std::size_t yi = header.size();
  for (std::size_t i = 0; i < header.size(); ++i) {
    const auto name = trim(header[i]);
    if (name == "x") xi = i;
    if (name == "y") yi = i;
  }
  if (xi == header.size() || yi == header.size())
    throw InvalidArgument("CSV header must contain x and y columns");

  std::vector<LatticePoint> points;
  while (std::getline(is, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto row = fields(line);
    if (row.size() != header.size())
      throw InvalidArgument("line " + std::to_string(line_no) + ": expected " +
                            std::to_string(header.size()) + " fields, got " + std::to_string(row.size()));
    points.push_back({parse_coord(row[xi], line_no), parse_coord(row[yi], line_no)});
  }
  return points;
}

}  // namespace latticircle::cli
