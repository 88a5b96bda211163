#pragma once

// Closed forms for the beta matrix (determinant, inverse, LU factors of the
// inverse) and exact verifiers for the identities behind them.

#include "betamat/exact_core.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

namespace betamat {

/// First failing comparison of a verification: the expected relation
/// `lhs <relation> rhs` does not hold at cell (row, col). Cells are 1-based.
struct Witness {
  std::size_t row = 0;
  std::size_t col = 0;
  Rational lhs;
  Rational rhs;
  std::string relation = "==";
  std::string detail;
};

/// Outcome of an exact verification. Invariant: holds == false implies a
/// witness whose relation fails exactly.
struct VerificationReport {
  std::string identity_name;
  long n = 0;
  bool holds = true;
  std::optional<Witness> witness;
};

/// Entrywise exact comparison; reports the first differing cell in row-major order.
VerificationReport compare_matrices(std::string name, long n, const Matrix& lhs, const Matrix& rhs);

/// (-1)^(n(3n+1)/2) prod_{i=1}^n 1 / (C(n+i-1, n) C(n, i) i)
Rational closed_form_det(long n);

/// Integer inverse of [beta(i, j)]:
/// (-1)^(n+i-j) C(n+i-1, i-1) C(n, j) j sum_{k=1}^{min(i,j)} C(n-k, n-i) C(n+j-1, n+k-1) (-1)^k
Matrix closed_form_inverse(long n);

struct LUFactors {
  Matrix lower;
  Matrix upper;
};

/// LU factors of the inverse of [beta(i, j)]:
/// L_ij = n! C(n-j, n-i) C(n+i-1, i-1) (-1)^(n+i+j) for i >= j,
/// U_ij = C(n+j-1, n+i-1) C(n, j) j (-1)^j / n! for i <= j.
LUFactors closed_form_LU(long n);

bool is_lower_triangular(const Matrix& a);
bool is_upper_triangular(const Matrix& a);

/// K = D2 * B * A * D1.
VerificationReport verify_K_factorization(long n);
/// Same check with a caller-supplied A (used to exercise failure reporting).
VerificationReport verify_K_factorization_with(long n, const Matrix& a);

/// sum_{k=max(i,j)}^n C(n+k-1, n+i-1) C(n-j, n-k) (-1)^(i-k+j)
///   == (-1)^(n+j-i) (n+j-1)! / ((n-i)! (i+j-1)!)
VerificationReport verify_summation_identity(long n, long i, long j);
/// Summation identity over every 1 <= i, j <= n.
VerificationReport verify_summation_grid(long n);

/// Claimed (B^-1)_ij = C(n+j-1, n+i-1) for i <= j.
Matrix claimed_b_inverse(long n);
/// B * claimed_b_inverse(n) == I.
VerificationReport verify_B_inverse(long n);

/// A^2 == I.
VerificationReport verify_A_involution(long n);
VerificationReport verify_involution_of(long n, const Matrix& a);

/// (-1)^(n(n-1)/2), the determinant sign of the Pascal Hadamard inverse.
int pascal_det_sign(long n);
/// Exact determinant sign of pascal_hadamard_inverse(n) against pascal_det_sign(n).
VerificationReport verify_pascal_det_sign(long n);

/// (-1)^(n(3n+1)/2), the determinant sign of [beta(i, j)].
int beta_det_sign(long n);

}  // namespace betamat
