#include "latticircle/area.hpp"

#include <cmath>
#include <string>

#include "latticircle/errors.hpp"

namespace latticircle {

namespace {

// Largest m >= 0 with m*m <= v, for v >= 0.
std::int64_t isqrt(std::int64_t v) {
  auto m = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
  while (m > 0 && m * m > v) --m;
  while ((m + 1) * (m + 1) <= v) ++m;
  return m;
}

}  // namespace

std::int64_t area_recursive(const QuadrantTrace& trace) {
  std::int64_t area = 0;
  for (std::size_t n = 0; n + 1 < trace.size(); ++n)
    if (trace.s_seq[n] == 1) area += trace.x_seq[n];
  return area;
}

InnerOuter inner_outer_areas(Coord r) {
  if (r < 1) throw InvalidArgument("radius must be >= 1, got " + std::to_string(r));
  const std::int64_t r2 = r * r;
  InnerOuter out;
  for (std::int64_t i = 0; i < r; ++i) {
    // column i: j+1 <= sqrt(r^2 - (i+1)^2)
    const std::int64_t far = r2 - (i + 1) * (i + 1);
    if (far >= 1) out.inner += isqrt(far);
    // j^2 < r^2 - i^2  <=>  j <= isqrt(r^2 - i^2 - 1)
    out.outer += isqrt(r2 - i * i - 1) + 1;
  }
  return out;
}

bool check_sum_identity(const QuadrantTrace& trace) {
  const std::int64_t r = trace.r;
  std::int64_t lhs = 0;
  for (std::int64_t k = 1; k <= 2 * r - 2; ++k) lhs += trace.S_seq[static_cast<std::size_t>(k - 1)];
  return lhs == 2 * area_recursive(trace) - r * r - 1;
}

AreaReport area_report(Coord r, bool with_bounds, CostVariant variant) {
  const auto trace = generate_quadrant(r, variant);
  AreaReport report;
  report.r = r;
  report.area = area_recursive(trace);
  if (with_bounds) report.bounds = inner_outer_areas(r);
  report.ratio = 4.0 * static_cast<double>(report.area) / (static_cast<double>(r) * static_cast<double>(r));
  return report;
}

}  // namespace latticircle
