#pragma once

#include <cstdint>
#include <optional>

#include "latticircle/signum_circle.hpp"

namespace latticircle {

/// Unit cells under the quadrant staircase, accumulated one horizontal strip per
/// upward step: A_0 = 0, A_{n+1} = A_n + x_n whenever s_n = +1, for n <= 2r - 2.
std::int64_t area_recursive(const QuadrantTrace& trace);

struct InnerOuter {
  std::int64_t inner = 0;  // cells [i,i+1]x[j,j+1] inside the quarter disc
  std::int64_t outer = 0;  // cells meeting the open quarter disc
};

/// Staircase bounds from integer cell-corner tests: far corner (i+1)^2 + (j+1)^2 <= r^2
/// for inner, near corner i^2 + j^2 < r^2 for outer.
InnerOuter inner_outer_areas(Coord r);

/// sum_{k=1}^{2r-2} S_{k-1} == 2 A(r) - r^2 - 1, in exact integers.
bool check_sum_identity(const QuadrantTrace& trace);

struct AreaReport {
  Coord r = 0;
  std::int64_t area = 0;
  std::optional<InnerOuter> bounds;
  double ratio = 0.0;  // 4 area / r^2
};

AreaReport area_report(Coord r, bool with_bounds, CostVariant variant = CostVariant::Exact);

}  // namespace latticircle
