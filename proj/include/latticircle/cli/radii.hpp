#pragma once

#include <string_view>
#include <vector>

#include "latticircle/lattice.hpp"

namespace latticircle::cli {

/// Parses "10,100,1000", "min:max:step" or "log:a:b:k" (k radii, log-spaced
/// from a to b, rounded). Returns ascending distinct radii; throws InvalidArgument.
std::vector<Coord> parse_radii(std::string_view spec);

}  // namespace latticircle::cli
