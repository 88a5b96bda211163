#pragma once

// Constructors for the beta-function matrix family and its relatives.
//
// Index conventions: beta-type matrices use 1-based (i, j) in their entry
// formulas, the Pascal matrix uses 0-based indices. Callers only pass n.

#include "betamat/exact_core.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace betamat {

class InvalidParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// [beta(i, j)] = [(i-1)!(j-1)!/(i+j-1)!], i, j = 1..n.
Matrix beta_matrix(long n);
/// [1/beta(i, j)] = [(i+j-1)!/((i-1)!(j-1)!)], integer valued.
Matrix beta_recip_matrix(long n);
/// [1/(i+j-1)!].
Matrix k_matrix(long n);
/// Lower triangular: C(n-j, n-i) (-1)^j for i >= j. Involutory.
Matrix a_matrix(long n);
/// Upper triangular: (-1)^(i-j) C(n+j-1, n+i-1) for i <= j.
Matrix b_matrix(long n);
/// diag[(-1)^(n-i) / (n+i-1)!].
Matrix d1_matrix(long n);
/// diag[(-1)^i (n-i)!].
Matrix d2_matrix(long n);
/// Hadamard inverse of the Pascal matrix: [i! j! / (i+j)!], i, j = 0..n-1.
Matrix pascal_hadamard_inverse(long n);

/// Product of integer powers of Gamma at positive rational arguments. Always
/// positive; evaluated exactly only when every argument is a positive integer.
struct GammaMonomial {
  std::vector<std::pair<Rational, long>> factors;  // (argument, exponent)

  [[nodiscard]] std::string describe() const;
  [[nodiscard]] std::optional<Rational> exact_value() const;
};

/// full = diag(left_scale) * core * diag(right_scale), every scale positive.
struct ScaledMatrix {
  std::vector<GammaMonomial> left_scale;
  Matrix core;
  std::vector<GammaMonomial> right_scale;

  /// The full matrix when all scales are rational, otherwise empty.
  [[nodiscard]] std::optional<Matrix> exact_full() const;
};

struct BetaParams {
  std::vector<Rational> lambdas;
  std::vector<Rational> mus;
  long m = 1;

  [[nodiscard]] std::size_t size() const { return lambdas.size(); }
  /// Throws InvalidParameters unless both sequences are positive, strictly
  /// increasing, of equal nonzero length, m >= 1, and every mu increment is
  /// a positive integer.
  void validate() const;
  /// mu_j - mu_1 as integers (requires validate()).
  [[nodiscard]] std::vector<long> mu_offsets() const;
};

/// [beta(lambda_i, mu_j)^m] as diag(Gamma(lambda_i)^m Gamma(mu_1)^m / Gamma(lambda_i + mu_1)^m) * R,
/// R_ij = (q_j / prod_{k<d_j} (lambda_i + mu_1 + k))^m, q_j = prod_{k<d_j} (mu_1 + k), d_j = mu_j - mu_1.
ScaledMatrix generalized_beta_reduced(const BetaParams& params);

/// [1/Gamma(lambda_i + mu_j)^m] as diag(1/Gamma(lambda_i + mu_1)^m) * S,
/// S_ij = prod_{k<d_j} (lambda_i + mu_1 + k)^(-m).
ScaledMatrix gamma_reduced_matrix(const BetaParams& params);

/// [Gamma(lambda_i + mu_j)^m], the Hadamard inverse of gamma_reduced_matrix.
ScaledMatrix gamma_power_reduced(const BetaParams& params);

/// [1/beta(lambda_i, mu_j)^m], the Hadamard inverse of generalized_beta_reduced.
ScaledMatrix reciprocal_beta_reduced(const BetaParams& params);

/// Parses a comma separated list of rationals ("1/2,3/2,5").
std::vector<Rational> parse_rational_list(const std::string& text);

}  // namespace betamat
