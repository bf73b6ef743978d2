#include "latticircle/pi_estimators.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <numbers>
#include <string>
#include <thread>

#include "latticircle/errors.hpp"

namespace latticircle {

namespace {

// Neumaier summation.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v))
      carry_ += (sum_ - t) + v;
    else
      carry_ += (v - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

void check_sequence(const PiSequence& seq) {
  if (seq.a_values.empty()) throw DegenerateSequence("empty pi sequence");
  if (seq.r < 1) throw DegenerateSequence("pi sequence without a positive radius");
}

void finish(PiSequence& seq) {
  seq.pi_values.reserve(seq.a_values.size());
  const double c = 4.0 * static_cast<double>(seq.r);
  for (double a : seq.a_values) seq.pi_values.push_back(a > 0.0 ? c / a : INFINITY);
}

}  // namespace

std::string_view to_string(Estimator e) noexcept {
  return e == Estimator::Arithmetic ? "arithmetic" : "harmonic";
}

PiSequence make_pi_sequence(const QuadrantTrace& trace) {
  PiSequence seq;
  seq.r = trace.r;
  seq.source = DiscretizationSource::Signum;
  seq.a_values.assign(trace.a_seq.begin(), trace.a_seq.end());
  finish(seq);
  return seq;
}

PiSequence make_pi_sequence(Coord r, DiscretizationSource source, CostVariant variant) {
  if (source == DiscretizationSource::Signum) return make_pi_sequence(generate_quadrant(r, variant));

  PiSequence seq;
  seq.r = r;
  seq.source = source;
  if (source == DiscretizationSource::Midpoint) {
    for (const auto& p : midpoint_quadrant(r)) seq.a_values.push_back(static_cast<double>(l1_norm(p)));
    finish(seq);
    return seq;
  }
  if (r < 1) throw InvalidArgument("radius must be >= 1, got " + std::to_string(r));
  seq.a_values.reserve(static_cast<std::size_t>(2 * r));
  for (Coord n = 0; n < 2 * r; ++n) {
    switch (source) {
      case DiscretizationSource::ParamExact: seq.a_values.push_back(a_param_exact(r, n)); break;
      case DiscretizationSource::ParamFloor:
        seq.a_values.push_back(static_cast<double>(a_param_floor(r, n)));
        break;
      case DiscretizationSource::ParamRound:
        seq.a_values.push_back(static_cast<double>(a_param_round(r, n)));
        break;
      default: break;
    }
  }
  finish(seq);
  return seq;
}

double arithmetic_mean_pi(const PiSequence& seq) {
  check_sequence(seq);
  CompensatedSum sum;
  for (std::size_t n = 0; n < seq.a_values.size(); ++n) {
    const double a = seq.a_values[n];
    if (!(a > 0.0))
      throw DegenerateSequence("a_n = 0 at n = " + std::to_string(n) + " (r = " +
                               std::to_string(seq.r) + ", " + std::string(to_string(seq.source)) + ")");
    sum.add(1.0 / a);
  }
  return 4.0 * static_cast<double>(seq.r) * sum.value() / static_cast<double>(seq.a_values.size());
}

double harmonic_mean_pi(const PiSequence& seq) {
  check_sequence(seq);
  CompensatedSum sum;
  for (double a : seq.a_values) sum.add(a);
  if (!(sum.value() > 0.0)) throw DegenerateSequence("all distances are zero");
  return 4.0 * static_cast<double>(seq.r) * static_cast<double>(seq.a_values.size()) / sum.value();
}

Rational arithmetic_mean_pi_exact(Coord r, std::span<const Coord> a_values) {
  if (a_values.empty()) throw DegenerateSequence("empty pi sequence");
  Rational sum = 0;
  for (Coord a : a_values) {
    if (a <= 0) throw DegenerateSequence("a_n = 0 in exact mean");
    sum += Rational(1, a);
  }
  return Rational(4 * r) * sum / static_cast<long long>(a_values.size());
}

Rational inverse_harmonic_mean_pi_exact(Coord r, std::span<const Coord> a_values) {
  if (a_values.empty()) throw DegenerateSequence("empty pi sequence");
  boost::multiprecision::cpp_int sum = 0;
  for (Coord a : a_values) sum += a;
  const boost::multiprecision::cpp_int denom =
      boost::multiprecision::cpp_int(4 * r) * static_cast<long long>(a_values.size());
  return Rational(sum, denom);
}

double continuum_mean_closed_form() {
  constexpr double s2 = std::numbers::sqrt2;
  return 8.0 / std::numbers::pi * s2 * std::atanh(1.0 / s2);
}

double parametric_asymptote_closed_form() {
  constexpr double s2 = std::numbers::sqrt2;
  return 4.0 * s2 / std::numbers::pi * (std::log(2.0 + s2) - std::log(2.0 - s2));
}

double harmonic_asymptote() { return 16.0 / (std::numbers::pi + 2.0); }

Target target_for(Estimator estimator, DiscretizationSource source) {
  if (estimator == Estimator::Arithmetic && source == DiscretizationSource::Signum)
    return {std::numbers::pi, true};
  if (estimator == Estimator::Arithmetic && source == DiscretizationSource::ParamExact)
    return {parametric_asymptote_closed_form(), true};
  if (estimator == Estimator::Harmonic && source == DiscretizationSource::Signum)
    return {harmonic_asymptote(), true};
  return {std::numbers::pi, false};
}

ConvergenceRecord evaluate(Coord r, Estimator estimator, DiscretizationSource source,
                           CostVariant variant) {
  const auto seq = make_pi_sequence(r, source, variant);
  const auto target = target_for(estimator, source);
  ConvergenceRecord rec;
  rec.r = r;
  rec.estimator = estimator;
  rec.source = source;
  rec.value = estimator == Estimator::Arithmetic ? arithmetic_mean_pi(seq) : harmonic_mean_pi(seq);
  rec.target = target.value;
  rec.abs_error = std::abs(rec.value - rec.target);
  rec.has_closed_form_target = target.closed_form;
  return rec;
}

std::vector<ConvergenceRecord> sweep(std::span<const Coord> radii, Estimator estimator,
                                     DiscretizationSource source, SweepOptions options) {
  if (radii.empty()) throw InvalidArgument("sweep needs at least one radius");
  for (Coord r : radii) {
    if (r < 1) throw InvalidArgument("radius must be >= 1, got " + std::to_string(r));
    if (source == DiscretizationSource::Signum && options.variant == CostVariant::Approximate &&
        r < kMinApproximateRadius)
      throw InvalidArgument("approx requires radius ≥ 5");
  }

  std::vector<ConvergenceRecord> out(radii.size());
  std::vector<std::exception_ptr> errors(radii.size());
  unsigned workers = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(radii.size()));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < radii.size(); i = next++) {
      try {
        out[i] = evaluate(radii[i], estimator, source, options.variant);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace latticircle
