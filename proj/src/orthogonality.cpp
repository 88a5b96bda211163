#include "betamat/orthogonality.hpp"

#include "betamat/linalg.hpp"
#include "betamat/polyroots.hpp"

#include <algorithm>

namespace betamat {

namespace {

/// Enclosure of |x| for x in [lo, hi].
Interval abs_enclosure(const Rational& lo, const Rational& hi) {
  if (lo.sign() >= 0) {
    return {lo, hi};
  }
  if (hi.sign() <= 0) {
    return {-hi, -lo};
  }
  return {Rational(0), -lo > hi ? -lo : hi};
}

/// Sum over roots of multiplicity * |root + t|.
Interval shifted_abs_sum(const std::vector<RootInterval>& roots, const Rational& t) {
  Interval out{Rational(0), Rational(0)};
  for (const auto& r : roots) {
    const Rational mult(static_cast<long>(r.multiplicity));
    const Interval a = abs_enclosure(r.lo + t, r.hi + t);
    out.lo += mult * a.lo;
    out.hi += mult * a.hi;
  }
  return out;
}

/// Refines until sum of multiplicity * width is at most `precision`.
void refine_total_width(RealRootIsolator& isolator, const Rational& precision) {
  while (true) {
    const auto& roots = isolator.roots();
    Rational total = 0;
    std::size_t widest = 0;
    Rational widest_width = -1;
    for (std::size_t k = 0; k < roots.size(); ++k) {
      const Rational w = Rational(static_cast<long>(roots[k].multiplicity)) * roots[k].width();
      total += w;
      if (w > widest_width) {
        widest_width = w;
        widest = k;
      }
    }
    if (total <= precision) {
      return;
    }
    isolator.bisect(widest);
  }
}

/// ||A + tI||_1 for many t from one isolation of the eigenvalues of A:
/// the eigenvalues of A + tI are those of A shifted by t.
class ShiftedTraceNorm {
 public:
  explicit ShiftedTraceNorm(const Polynomial& char_poly_a) : isolator_(char_poly_a) {}

  Interval at(const Rational& t, const Rational& precision) {
    refine_total_width(isolator_, precision);
    return shifted_abs_sum(isolator_.roots(), t);
  }

  const RealRootIsolator& isolator() const { return isolator_; }
  RealRootIsolator& isolator() { return isolator_; }

 private:
  RealRootIsolator isolator_;
};

std::optional<Violation> certify(ShiftedTraceNorm& norm, const Rational& t, const Rational& width) {
  const Interval at_zero = norm.at(Rational(0), width);
  const Interval at_t = norm.at(t, width);
  if (at_t.hi < at_zero.lo) {
    return Violation{t, at_zero, at_t};
  }
  return std::nullopt;
}

Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }

Rational trace_of(const Matrix& a) {
  Rational trace = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    trace += a(i, i);
  }
  return trace;
}

}  // namespace

Interval trace_norm_at(const Matrix& a, const Rational& t, const Rational& precision) {
  if (!a.is_symmetric()) {
    throw NotSymmetric();
  }
  if (precision.sign() <= 0) {
    throw std::invalid_argument("trace norm precision must be positive");
  }
  Matrix shifted = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    shifted(i, i) += t;
  }
  RealRootIsolator isolator(char_poly(shifted));
  refine_total_width(isolator, precision);
  return shifted_abs_sum(isolator.roots(), Rational(0));
}

std::optional<Violation> find_violation(const Matrix& a, const ViolationSearch& options) {
  if (!a.is_symmetric()) {
    throw NotSymmetric();
  }
  const std::size_t n = a.rows();
  if (n == 0) {
    return std::nullopt;
  }
  const Polynomial p = char_poly(a);
  const Polynomial nonzero_part = p.drop_zero_roots(p.zero_root_multiplicity());
  const std::size_t positive = sign_changes(nonzero_part);
  const std::size_t negative = sign_changes(nonzero_part.reflect());
  const Rational direction = positive > negative ? Rational(-1) : Rational(1);

  const Rational trace = trace_of(a);
  Rational magnitude = trace.is_zero() ? Rational(1) : trace.abs() / Rational(static_cast<long>(n));
  ShiftedTraceNorm norm(p);
  const Rational scale = norm.at(Rational(0), Rational(1)).hi;
  const Rational max_width = options.relative_width * (scale.is_zero() ? Rational(1) : scale);

  for (std::size_t k = 0; k < options.grid_points; ++k) {
    const Rational t = direction * magnitude;
    const Rational width = min(max_width, magnitude / Rational(4));
    if (auto v = certify(norm, t, width)) {
      return v;
    }
    magnitude /= Rational(2);
  }
  return std::nullopt;
}

BJReport bj_orthogonal_to_identity(const Matrix& a) {
  BJReport report;
  report.n = a.rows();
  report.inertia = inertia_symmetric(a);
  report.orthogonal = 2 * report.inertia.positive <= report.n && 2 * report.inertia.negative <= report.n;
  if (report.orthogonal) {
    return report;
  }
  report.violation = find_violation(a);
  if (report.violation) {
    return report;
  }
  // Step just short of the smallest eigenvalue on the majority side: there
  // the norm decreases by at least |t|.
  ShiftedTraceNorm norm(char_poly(a));
  const Rational scale = norm.at(Rational(0), Rational(1)).hi;
  const bool shift_down = 2 * report.inertia.positive > report.n;
  std::optional<std::size_t> target;
  const auto& roots = norm.isolator().roots();
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (shift_down && roots[k].hi.sign() > 0) {
      target = k;
      break;
    }
    if (!shift_down && roots[k].lo.sign() < 0) {
      target = k;  // keep the last negative root
    }
  }
  while (true) {
    const auto& r = norm.isolator().roots()[*target];
    const Rational inner = shift_down ? r.lo : -r.hi;
    if (inner.sign() > 0) {
      const Rational t = shift_down ? -inner : inner;
      const Rational width = min(ViolationSearch{}.relative_width * scale, inner / Rational(4));
      report.violation = certify(norm, t, width);
      if (report.violation) {
        return report;
      }
      throw std::logic_error("bj_orthogonal_to_identity: could not certify a violation");
    }
    norm.isolator().bisect(*target);
  }
}

}  // namespace betamat
