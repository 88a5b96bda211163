#pragma once

// Birkhoff-James orthogonality to the identity in the trace norm.
//
// A symmetric X is orthogonal to I iff ||X + tI||_1 >= ||X||_1 for all real
// t, which holds exactly when pi(X) <= n/2 and nu(X) <= n/2. The inertia
// criterion decides; certified trace-norm intervals provide evidence.

#include "betamat/exact_core.hpp"

#include <cstddef>
#include <optional>

namespace betamat {

/// Closed rational interval [lo, hi].
struct Interval {
  Rational lo;
  Rational hi;
  [[nodiscard]] Rational width() const { return hi - lo; }
  [[nodiscard]] bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

/// Certified decrease: the whole interval for ||A + tI||_1 lies strictly
/// below the interval for ||A||_1.
struct Violation {
  Rational t;
  Interval norm_at_zero;
  Interval norm_at_t;
};

struct BJReport {
  std::size_t n = 0;
  InertiaTriple inertia;
  bool orthogonal = false;
  std::optional<Violation> violation;  // present iff not orthogonal
};

/// Encloses ||A + tI||_1 = sum |eigenvalue(A + tI)| in an interval of width
/// at most `precision`. Exact throughout: characteristic polynomial of
/// A + tI, Sturm isolation of its real roots, bisection refinement.
Interval trace_norm_at(const Matrix& a, const Rational& t, const Rational& precision);

struct ViolationSearch {
  std::size_t grid_points = 64;
  /// Interval widths are kept at or below relative_width * scale, where scale
  /// is the upper end of a unit-width enclosure of ||A||_1.
  Rational relative_width = Rational(1, 1000000);
};

/// Searches t = s * c * 2^-k, k = 0..grid_points-1, with c = |trace(A)|/n
/// (1 when the trace vanishes) and s = -1 when the characteristic
/// polynomial has more positive than negative roots, +1 otherwise. Returns
/// the first t whose decrease is certified; absence is evidence only.
std::optional<Violation> find_violation(const Matrix& a, const ViolationSearch& options = {});

/// Decides orthogonality by inertia; when not orthogonal, attaches a certified
/// violation (from find_violation, or from an exact step below the smallest
/// eigenvalue magnitude on the majority side when the grid misses).
BJReport bj_orthogonal_to_identity(const Matrix& a);

}  // namespace betamat
