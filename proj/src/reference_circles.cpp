#include "latticircle/reference_circles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "latticircle/errors.hpp"

namespace latticircle {

namespace {

void require_index(Coord r, Coord n) {
  if (r < 1) throw InvalidArgument("radius must be >= 1, got " + std::to_string(r));
  if (n < 0 || n > 2 * r - 1)
    throw InvalidArgument("sample index " + std::to_string(n) + " outside [0, " +
                          std::to_string(2 * r - 1) + "]");
}

struct Sample {
  double x;
  double y;
};

Sample sample(Coord r, Coord n) {
  const double phi = phi_n(r, n);
  const double rr = static_cast<double>(r);
  return {std::abs(rr * std::cos(phi)), std::abs(rr * std::sin(phi))};
}

}  // namespace

std::string_view to_string(DiscretizationSource s) noexcept {
  switch (s) {
    case DiscretizationSource::ParamExact: return "param-exact";
    case DiscretizationSource::ParamFloor: return "param-floor";
    case DiscretizationSource::ParamRound: return "param-round";
    case DiscretizationSource::Signum: return "signum";
    case DiscretizationSource::Midpoint: return "midpoint";
  }
  return "?";
}

double phi_n(Coord r, Coord n) {
  require_index(r, n);
  return static_cast<double>(n) * std::numbers::pi / (4.0 * static_cast<double>(r));
}

double a_param_exact(Coord r, Coord n) {
  if (n == 0) {
    require_index(r, n);
    return static_cast<double>(r);
  }
  const auto [x, y] = sample(r, n);
  return x + y;
}

LatticePoint param_floor_point(Coord r, Coord n) {
  if (n == 0) {
    require_index(r, n);
    return {r, 0};
  }
  const auto [x, y] = sample(r, n);
  return {static_cast<Coord>(std::floor(x)), static_cast<Coord>(std::floor(y))};
}

Coord a_param_floor(Coord r, Coord n) { return l1_norm(param_floor_point(r, n)); }

LatticePoint param_round_point(Coord r, Coord n) {
  if (n == 0) {
    require_index(r, n);
    return {r, 0};
  }
  const auto [x, y] = sample(r, n);
  return {static_cast<Coord>(std::floor(x + 0.5)), static_cast<Coord>(std::floor(y + 0.5))};
}

Coord a_param_round(Coord r, Coord n) { return l1_norm(param_round_point(r, n)); }

std::vector<LatticePoint> midpoint_quadrant(Coord r) {
  if (r < 1) throw InvalidArgument("radius must be >= 1, got " + std::to_string(r));

  // Octant from (0, r) clockwise to the diagonal, with second-order differences.
  std::vector<LatticePoint> octant;
  Coord x = 0;
  Coord y = r;
  Coord d = 1 - r;
  Coord delta_e = 3;
  Coord delta_se = 5 - 2 * r;
  while (x <= y) {
    octant.push_back({x, y});
    if (d < 0) {
      d += delta_e;
      delta_e += 2;
      delta_se += 2;
    } else {
      d += delta_se;
      delta_e += 2;
      delta_se += 4;
      --y;
    }
    ++x;
  }

  std::vector<LatticePoint> quadrant;
  quadrant.reserve(2 * octant.size());
  for (const auto& p : octant) quadrant.push_back({p.y, p.x});  // mirrored: angle 0 .. 45
  for (auto it = octant.rbegin(); it != octant.rend(); ++it) {
    if (it->x == it->y) continue;  // diagonal point already present
    quadrant.push_back(*it);
  }
  return quadrant;
}

}  // namespace latticircle
