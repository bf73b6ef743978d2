#include "latticircle/lattice.hpp"

#include <array>
#include <unordered_map>

namespace latticircle {

namespace {

constexpr std::array<LatticePoint, 4> kUnitSteps{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};

LatticePoint shifted(LatticePoint p, LatticePoint d) { return {p.x + d.x, p.y + d.y}; }

// Marks every point reachable from points[0] through unit steps.
std::vector<bool> reachable_from_first(
    std::span<const LatticePoint> points,
    const std::unordered_map<LatticePoint, std::vector<std::size_t>, LatticePointHash>& index) {
  std::vector<bool> seen(points.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const auto i = stack.back();
    stack.pop_back();
    for (auto d : kUnitSteps) {
      auto it = index.find(shifted(points[i], d));
      if (it == index.end()) continue;
      for (auto j : it->second) {
        if (!seen[j]) {
          seen[j] = true;
          stack.push_back(j);
        }
      }
    }
    // duplicates of the same point belong to the same component
    for (auto j : index.at(points[i])) {
      if (!seen[j]) {
        seen[j] = true;
        stack.push_back(j);
      }
    }
  }
  return seen;
}

}  // namespace

PathValidityReport check_path(std::span<const LatticePoint> points, PathMode mode) {
  PathValidityReport report;
  if (points.empty()) {
    report.is_valid = true;
    report.is_closed_valid = true;
    report.empty = true;
    return report;
  }

  std::unordered_map<LatticePoint, std::vector<std::size_t>, LatticePointHash> index;
  index.reserve(points.size() * 2);
  for (std::size_t i = 0; i < points.size(); ++i) index[points[i]].push_back(i);

  std::vector<int> neighbors(points.size(), 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (auto d : kUnitSteps) {
      auto it = index.find(shifted(points[i], d));
      if (it != index.end()) neighbors[i] += static_cast<int>(it->second.size());
    }
  }
  const auto seen = reachable_from_first(points, index);

  bool open_ok = true;
  bool closed_ok = true;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const bool duplicate = index.at(points[i]).size() > 1;
    const bool open_count_ok = neighbors[i] <= 2;
    const bool closed_count_ok = neighbors[i] == 2;
    open_ok = open_ok && open_count_ok && !duplicate && seen[i];
    closed_ok = closed_ok && closed_count_ok && !duplicate && seen[i];

    const bool count_ok = mode == PathMode::Open ? open_count_ok : closed_count_ok;
    if (duplicate) {
      report.violations.push_back({i, neighbors[i], ViolationKind::Duplicate});
    } else if (!count_ok) {
      report.violations.push_back({i, neighbors[i], ViolationKind::NeighborCount});
    } else if (!seen[i]) {
      report.violations.push_back({i, neighbors[i], ViolationKind::Disconnected});
    }
  }
  report.is_valid = open_ok;
  report.is_closed_valid = closed_ok;
  return report;
}

}  // namespace latticircle
