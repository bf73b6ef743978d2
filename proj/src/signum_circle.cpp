#include "latticircle/signum_circle.hpp"

#include <string>

#include "latticircle/errors.hpp"

namespace latticircle {

namespace {

__extension__ typedef __int128 Wide;

Wide checked_mul(Wide a, Wide b) {
  Wide out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("cost intermediate exceeds 128 bits");
  return out;
}

Wide checked_add(Wide a, Wide b) {
  Wide out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("cost intermediate exceeds 128 bits");
  return out;
}

Wide checked_sub(Wide a, Wide b) {
  Wide out;
  if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("cost intermediate exceeds 128 bits");
  return out;
}

Wide square(Wide v) { return checked_mul(v, v); }

// True iff sqrt(u) + sqrt(v) < sqrt(bound), for u, v, bound >= 0.
bool root_sum_below(Wide u, Wide v, Wide bound) {
  const Wide sum = checked_add(u, v);
  if (sum >= bound) return false;
  // (sqrt u + sqrt v)^2 < bound  <=>  2 sqrt(uv) < bound - u - v, both sides positive
  const Wide slack = bound - sum;
  return checked_mul(4, checked_mul(u, v)) < square(slack);
}

void require_radius(Coord r) {
  if (r < 1) throw InvalidArgument("radius must be >= 1, got " + std::to_string(r));
  if (r > kMaxRadius)
    throw OverflowError("radius " + std::to_string(r) + " exceeds supported maximum " +
                        std::to_string(kMaxRadius));
}

}  // namespace

std::string_view to_string(CostVariant v) noexcept {
  switch (v) {
    case CostVariant::Exact: return "exact";
    case CostVariant::Simplified: return "simplified";
    case CostVariant::Approximate: return "approx";
  }
  return "?";
}

// With u = |x_left|^2 and v = |x_up|^2 the cost factors as
// (sqrt u - sqrt v)(sqrt u + sqrt v - 2r); u - v = -2(x + y) < 0, so only the
// second factor decides. It never vanishes on the lattice, but a zero would map
// to -1 all the same.
int cost_exact(Coord x, Coord y, Coord r) {
  if (r < 1) throw InvalidArgument("radius must be >= 1");
  if (x < 0 || y < 0 || (x == 0 && y == 0))
    throw InvalidArgument("cost_exact expects a quadrant point other than the origin");
  const Wide u = checked_add(square(Wide{x} - 1), square(Wide{y}));
  const Wide v = checked_add(square(Wide{x}), square(Wide{y} + 1));
  const Wide bound = checked_mul(4, square(Wide{r}));
  return root_sum_below(u, v, bound) ? 1 : -1;
}

// Same comparison after the change to (a, c): the candidate norms become
// ((a -+ 1)^2 + c^2) / 2, so the test reads sqrt U + sqrt V vs 2 sqrt(2) r.
// The literal form -sgn(.) sends a zero argument to +1; no zero is reachable.
int cost_simplified(Coord a, Coord c, Coord r) {
  if (r < 1) throw InvalidArgument("radius must be >= 1");
  if (a < 1) throw InvalidArgument("cost_simplified expects a >= 1");
  const Wide c2 = square(Wide{c});
  const Wide u = checked_add(square(Wide{a} - 1), c2);
  const Wide v = checked_add(square(Wide{a} + 1), c2);
  const Wide bound = checked_mul(8, square(Wide{r}));
  const Wide sum = checked_add(u, v);
  const bool at_or_below = sum < bound ? checked_mul(4, checked_mul(u, v)) <= square(bound - sum)
                                       : sum == bound && checked_mul(u, v) == 0;
  return at_or_below ? 1 : -1;
}

int cost_approx(Coord a, Coord c, Coord r) {
  if (r < kMinApproximateRadius)
    throw InvalidArgument("approx requires radius ≥ 5");
  const Wide arg = checked_sub(checked_add(checked_add(square(Wide{a}), square(Wide{c})), 1),
                               checked_mul(2, square(Wide{r})));
  return -sgn(arg);
}

std::vector<LatticePoint> QuadrantTrace::points() const {
  std::vector<LatticePoint> out;
  out.reserve(size());
  for (std::size_t n = 0; n < size(); ++n) out.push_back(point(n));
  return out;
}

QuadrantTrace generate_quadrant(Coord r, CostVariant variant) {
  require_radius(r);
  if (variant == CostVariant::Approximate && r < kMinApproximateRadius)
    throw InvalidArgument("approx requires radius ≥ 5");

  QuadrantTrace t;
  t.r = r;
  t.variant = variant;
  const auto count = static_cast<std::size_t>(2 * r);
  t.x_seq.reserve(count);
  t.y_seq.reserve(count);
  t.s_seq.reserve(count);
  t.a_seq.reserve(count);
  t.S_seq.reserve(count);

  Coord x = r;
  Coord y = 0;
  Coord running = 0;
  for (Coord n = 0; n < 2 * r; ++n) {
    const Coord a = x + y;
    const Coord c = r - n - 1;
    int s = 0;
    switch (variant) {
      case CostVariant::Exact: s = cost_exact(x, y, r); break;
      case CostVariant::Simplified: s = cost_simplified(a, c, r); break;
      case CostVariant::Approximate: s = cost_approx(a, c, r); break;
    }
    running += s;
    t.x_seq.push_back(x);
    t.y_seq.push_back(y);
    t.s_seq.push_back(s);
    t.a_seq.push_back(a);
    t.S_seq.push_back(running);
    x += (s - 1) / 2;
    y += (s + 1) / 2;
  }
  return t;
}

CirclePath quadrant_path(const QuadrantTrace& trace) {
  CirclePath path;
  path.r = trace.r;
  path.closed = false;
  path.points = trace.points();
  path.validity = check_path(path.points, PathMode::Open);
  return path;
}

CirclePath assemble_full_circle(const QuadrantTrace& trace) {
  CirclePath path;
  path.r = trace.r;
  path.closed = true;
  path.points.reserve(4 * trace.size());
  for (int k = 0; k < 4; ++k)
    for (std::size_t n = 0; n < trace.size(); ++n)
      path.points.push_back(rotate90(trace.point(n), k));
  path.validity = check_path(path.points, PathMode::Closed);
  return path;
}

}  // namespace latticircle
