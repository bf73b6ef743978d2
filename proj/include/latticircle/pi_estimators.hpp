#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <span>
#include <string_view>
#include <vector>

#include "latticircle/lattice.hpp"
#include "latticircle/reference_circles.hpp"
#include "latticircle/signum_circle.hpp"

namespace latticircle {

using Rational = boost::multiprecision::cpp_rational;

/// Manhattan distances a_n of one quadrant and the per-point values pi_n = 4r / a_n.
/// Parametric and signum sources have 2r entries; the midpoint baseline has as
/// many entries as it has points.
struct PiSequence {
  Coord r = 0;
  DiscretizationSource source = DiscretizationSource::Signum;
  std::vector<double> a_values;
  std::vector<double> pi_values;
};

PiSequence make_pi_sequence(Coord r, DiscretizationSource source,
                            CostVariant variant = CostVariant::Exact);
PiSequence make_pi_sequence(const QuadrantTrace& trace);

/// Mean of pi_n; equals 2 * sum(1 / a_n) for 2r samples. Throws DegenerateSequence
/// on an empty sequence or a zero distance.
double arithmetic_mean_pi(const PiSequence& seq);

/// Harmonic mean of pi_n; equals 8 r^2 / sum(a_n) for 2r samples.
double harmonic_mean_pi(const PiSequence& seq);

// Exact counterparts over integer distances.
Rational arithmetic_mean_pi_exact(Coord r, std::span<const Coord> a_values);
Rational inverse_harmonic_mean_pi_exact(Coord r, std::span<const Coord> a_values);

/// (8 sqrt2 / pi) artanh(1 / sqrt2): the continuum mean of 4 / (cos + sin).
double continuum_mean_closed_form();

/// (4 sqrt2 / pi)(ln(2 + sqrt2) - ln(2 - sqrt2)): large-r limit of the parametric mean.
double parametric_asymptote_closed_form();

/// 16 / (pi + 2): large-r limit of the harmonic mean over the signum path.
double harmonic_asymptote();

enum class Estimator { Arithmetic, Harmonic };

std::string_view to_string(Estimator e) noexcept;

struct ConvergenceRecord {
  Coord r = 0;
  Estimator estimator = Estimator::Arithmetic;
  DiscretizationSource source = DiscretizationSource::Signum;
  double value = 0.0;
  double target = 0.0;
  double abs_error = 0.0;
  bool has_closed_form_target = true;  // false: target is pi by convention only
};

struct Target {
  double value;
  bool closed_form;
};

Target target_for(Estimator estimator, DiscretizationSource source);

ConvergenceRecord evaluate(Coord r, Estimator estimator, DiscretizationSource source,
                           CostVariant variant = CostVariant::Exact);

struct SweepOptions {
  CostVariant variant = CostVariant::Exact;
  unsigned threads = 1;  // 0 means hardware concurrency
};

/// One record per radius, in input order regardless of scheduling.
std::vector<ConvergenceRecord> sweep(std::span<const Coord> radii, Estimator estimator,
                                     DiscretizationSource source, SweepOptions options = {});

}  // namespace latticircle
