#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace latticircle {

using Coord = std::int64_t;

/// A point of the integer lattice Z^2.
struct LatticePoint {
  Coord x = 0;
  Coord y = 0;

  friend constexpr bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

struct LatticePointHash {
  std::size_t operator()(const LatticePoint& p) const noexcept {
    const auto hx = std::hash<Coord>{}(p.x);
    const auto hy = std::hash<Coord>{}(p.y);
    return hx ^ (hy + 0x9e3779b97f4a7c15ULL + (hx << 6) + (hx >> 2));
  }
};

constexpr Coord l1_norm(LatticePoint p) noexcept {
  return (p.x < 0 ? -p.x : p.x) + (p.y < 0 ? -p.y : p.y);
}

constexpr Coord l2_norm_sq(LatticePoint p) noexcept { return p.x * p.x + p.y * p.y; }

/// Applies (x, y) -> (-y, x) k times; k is taken modulo 4.
constexpr LatticePoint rotate90(LatticePoint p, int k) noexcept {
  k %= 4;
  if (k < 0) k += 4;
  for (int i = 0; i < k; ++i) p = LatticePoint{-p.y, p.x};
  return p;
}

enum class PathMode { Open, Closed };

enum class ViolationKind {
  NeighborCount,  // more than two unit neighbours (open) or not exactly two (closed)
  Duplicate,      // the point occurs more than once
  Disconnected,   // the point is not 4-connected to the component of the first point
};

struct Violation {
  std::size_t index = 0;
  int neighbor_count = 0;
  ViolationKind kind = ViolationKind::NeighborCount;
};

struct PathValidityReport {
  bool is_valid = false;         // open-path criterion
  bool is_closed_valid = false;  // closed-path criterion
  bool empty = false;            // vacuously valid
  std::vector<Violation> violations;  // for the requested mode
};

/// Validity of a point set as a path on the lattice.
///
/// Every point has its unit-l1 neighbours counted among the set members;
/// an open path allows at most two, a closed path requires exactly two.
/// In both modes the set must additionally form a single 4-connected
/// component, so a set of isolated points or two separate arcs is not a
/// path. The verdict depends only on the set, never on the input order;
/// the order only determines the reported indices.
PathValidityReport check_path(std::span<const LatticePoint> points, PathMode mode);

}  // namespace latticircle
