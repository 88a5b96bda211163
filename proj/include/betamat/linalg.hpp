#pragma once

// Exact determinant, inverse, characteristic polynomial and inertia.

#include "betamat/exact_core.hpp"
#include "betamat/polyroots.hpp"

#include <stdexcept>
#include <vector>

namespace betamat {

class SingularMatrix : public std::domain_error {
 public:
  SingularMatrix() : std::domain_error("matrix is singular") {}
};

class NotSymmetric : public std::invalid_argument {
 public:
  NotSymmetric() : std::invalid_argument("matrix is not symmetric") {}
};

/// Determinant by fraction-free (Bareiss) elimination on the row-wise
/// denominator-cleared integer matrix. The empty matrix has determinant 1.
Rational det_bareiss(const Matrix& a);

/// Exact inverse by Gauss-Jordan elimination; throws SingularMatrix.
Matrix inverse_exact(const Matrix& a);

/// Monic det(xI - A) via the division-free Berkowitz recurrence.
Polynomial char_poly(const Matrix& a);

/// Inertia of a symmetric matrix from its (real-rooted) characteristic
/// polynomial: zero count from the x^k factor, positive count from Descartes
/// on the rest, cross-checked with Sturm counts on p(x) and p(-x).
InertiaTriple inertia_symmetric(const Matrix& a);

/// det of the leading k x k block for k = 1..n.
std::vector<Rational> leading_principal_minors(const Matrix& a);

}  // namespace betamat
