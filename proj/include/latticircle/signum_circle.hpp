#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "latticircle/lattice.hpp"

namespace latticircle {

/// Which form of the step cost decides between the left and the upward neighbour.
enum class CostVariant {
  Exact,       // radial deviations of both candidates, in x and y
  Simplified,  // the same cost rewritten in the Manhattan distance a and c = r - n - 1
  Approximate  // leading-order integer form; admissible for r >= 5 only
};

std::string_view to_string(CostVariant v) noexcept;

/// Smallest radius accepted by CostVariant::Approximate.
inline constexpr Coord kMinApproximateRadius = 5;

/// Largest radius for which every cost intermediate fits in 128 bits with margin.
inline constexpr Coord kMaxRadius = Coord{1} << 30;

/// Signum with sgn(0) = -1.
template <typename T>
constexpr int sgn(T v) noexcept {
  return v > T{0} ? 1 : -1;
}

/// Step decision s_n for the point (x, y): +1 moves up to (x, y+1), -1 moves left
/// to (x-1, y). Decided exactly in integers; requires x, y >= 0, (x, y) != (0, 0).
int cost_exact(Coord x, Coord y, Coord r);

/// Step decision from a = x + y and c = r - n - 1 (only c^2 matters); requires a >= 1.
int cost_simplified(Coord a, Coord c, Coord r);

/// -sgn(a^2 + c^2 + 1 - 2 r^2). Throws InvalidArgument for r < 5.
int cost_approx(Coord a, Coord c, Coord r);

/// Full recursion record of one quadrant, n = 0 .. 2r-1.
struct QuadrantTrace {
  Coord r = 0;
  CostVariant variant = CostVariant::Exact;
  std::vector<Coord> x_seq;
  std::vector<Coord> y_seq;
  std::vector<int> s_seq;
  std::vector<Coord> a_seq;        // x + y
  std::vector<Coord> S_seq;        // running sum of s

  std::size_t size() const noexcept { return x_seq.size(); }
  LatticePoint point(std::size_t n) const { return {x_seq[n], y_seq[n]}; }
  std::vector<LatticePoint> points() const;
};

/// Runs the signum recursion from (r, 0). The quadrant owns 2r points; the next
/// step after the last one lands on (0, r), which belongs to the next quadrant.
QuadrantTrace generate_quadrant(Coord r, CostVariant variant = CostVariant::Exact);

struct CirclePath {
  Coord r = 0;
  bool closed = false;
  std::vector<LatticePoint> points;
  PathValidityReport validity;
};

/// Counterclockwise full circle: the quadrant followed by its 90, 180 and 270
/// degree rotations. 8r distinct points, validated as a closed path.
CirclePath assemble_full_circle(const QuadrantTrace& trace);

/// The quadrant alone as an open path.
CirclePath quadrant_path(const QuadrantTrace& trace);

}  // namespace latticircle
