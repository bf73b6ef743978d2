#include "latticircle/cli/radii.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include "latticircle/errors.hpp"

namespace latticircle::cli {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

Coord parse_positive(std::string_view token) {
  Coord v = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (token.empty() || ec != std::errc{} || ptr != end)
    throw InvalidArgument("bad radius '" + std::string(token) + "'");
  if (v < 1) throw InvalidArgument("radius must be >= 1, got " + std::string(token));
  return v;
}

}  // namespace

std::vector<Coord> parse_radii(std::string_view spec) {
  if (spec.empty()) throw InvalidArgument("empty radii spec");
  std::vector<Coord> radii;

  if (spec.starts_with("log:")) {
    const auto parts = split(spec.substr(4), ':');
    if (parts.size() != 3) throw InvalidArgument("log spec must be log:a:b:k");
    const Coord a = parse_positive(parts[0]);
    const Coord b = parse_positive(parts[1]);
    const Coord k = parse_positive(parts[2]);
    if (b < a) throw InvalidArgument("log spec needs a <= b");
    if (k == 1) {
      radii.push_back(a);
    } else {
      const double la = std::log(static_cast<double>(a));
      const double lb = std::log(static_cast<double>(b));
      for (Coord i = 0; i < k; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(k - 1);
        radii.push_back(static_cast<Coord>(std::llround(std::exp(la + t * (lb - la)))));
      }
      radii.front() = a;
      radii.back() = b;
    }
  } else if (spec.find(':') != std::string_view::npos) {
    const auto parts = split(spec, ':');
    if (parts.size() != 3) throw InvalidArgument("range spec must be min:max:step");
    const Coord lo = parse_positive(parts[0]);
    const Coord hi = parse_positive(parts[1]);
    const Coord step = parse_positive(parts[2]);
    if (hi < lo) throw InvalidArgument("range spec needs min <= max");
    for (Coord r = lo; r <= hi; r += step) radii.push_back(r);
  } else {
    for (auto token : split(spec, ',')) radii.push_back(parse_positive(token));
  }

  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  return radii;
}

}  // namespace latticircle::cli
