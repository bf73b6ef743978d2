#pragma once

#include <iosfwd>
#include <vector>

#include "latticircle/lattice.hpp"

namespace latticircle::cli {

struct SvgOptions {
  int unit_px = 8;              // pixels per lattice unit
  bool overlay_circle = false;  // draw the Euclidean circle of radius r
  int margin_units = 1;
};

/// SVG 1.1 drawing of a lattice path over its grid, lattice y pointing up.
/// Closed paths become a <polygon>, open ones a <polyline>.
void write_path_svg(std::ostream& os, const std::vector<LatticePoint>& points, Coord r, bool closed,
                    const SvgOptions& options = {});

}  // namespace latticircle::cli
