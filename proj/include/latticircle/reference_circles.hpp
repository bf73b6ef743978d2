#pragma once

#include <string_view>
#include <vector>

#include "latticircle/lattice.hpp"

namespace latticircle {

enum class DiscretizationSource { ParamExact, ParamFloor, ParamRound, Signum, Midpoint };

std::string_view to_string(DiscretizationSource s) noexcept;

// Sampling angles n * pi / (4r) for n = 0 .. 2r-1 of the first quadrant.
double phi_n(Coord r, Coord n);

// Manhattan distance of the sampled point r(cos phi, sin phi).
double a_param_exact(Coord r, Coord n);

// The sample snapped inward: floor of each coordinate.
LatticePoint param_floor_point(Coord r, Coord n);
Coord a_param_floor(Coord r, Coord n);

// Each coordinate rounded independently, floor(v + 1/2).
LatticePoint param_round_point(Coord r, Coord n);
Coord a_param_round(Coord r, Coord n);

/// Second-order midpoint circle rasterization of the first quadrant, from
/// (r, 0) to (0, r) inclusive, ordered by angle. A baseline that is not a
/// valid lattice path (it takes diagonal steps).
std::vector<LatticePoint> midpoint_quadrant(Coord r);

}  // namespace latticircle
