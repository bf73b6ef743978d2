#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "latticircle/lattice.hpp"
#include "latticircle/pi_estimators.hpp"
#include "latticircle/signum_circle.hpp"

namespace latticircle::cli {

/// 12 significant digits, '.' separator; integral values keep a trailing ".0".
std::string format_real(double v);

// n,x,y,s,a,S with one row per point.
void write_trace_csv(std::ostream& os, const QuadrantTrace& trace, bool full_circle);

// n,x,y,a for paths without a step record.
void write_points_csv(std::ostream& os, const std::vector<LatticePoint>& points);

std::string record_line(const ConvergenceRecord& rec);
void write_sweep_csv(std::ostream& os, const std::vector<ConvergenceRecord>& records);

/// Reads the x and y columns of a headed CSV. Throws InvalidArgument on an
/// empty stream, a missing column, or a non-integer field.
std::vector<LatticePoint> read_points_csv(std::istream& is);

}  // namespace latticircle::cli
