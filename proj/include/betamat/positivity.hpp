#pragma once

// Total nonnegativity / total positivity deciders and the verification
// pipeline for Hadamard powers of generalized beta and gamma matrices.

#include "betamat/exact_core.hpp"
#include "betamat/identities.hpp"
#include "betamat/matrices.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

namespace betamat {

/// Row and column index sets (0-based, strictly increasing) of a minor.
struct MinorIndex {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;

  friend bool operator==(const MinorIndex&, const MinorIndex&) = default;
};

struct MinorCheck {
  bool holds = true;
  std::optional<MinorIndex> failing;
  Rational failing_value;  // meaningful only when failing is set
};

class MinorGuardExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kDefaultMinorGuard = 8;

/// Exhaustive check that every minor is >= 0. Minors are visited by size,
/// then row set, then column set (lexicographic); the first negative one is
/// reported. Throws MinorGuardExceeded when max(rows, cols) > guard.
MinorCheck is_totally_nonnegative(const Matrix& a, std::size_t guard = kDefaultMinorGuard);

/// Exhaustive check that every minor is > 0 (same order and guard).
MinorCheck is_totally_positive_exhaustive(const Matrix& a, std::size_t guard = kDefaultMinorGuard);

/// Total positivity by Fekete's criterion: only minors with contiguous row
/// and column index blocks are evaluated.
MinorCheck is_totally_positive(const Matrix& a);

/// Nonsingularity of [1/Gamma(lambda_i + mu_j)^m] and [beta(lambda_i, mu_j)^m]
/// decided on their rational cores.
VerificationReport verify_nonsingularity(const BetaParams& params);

/// Total positivity of [1/beta(lambda_i, mu_j)^m] and [Gamma(lambda_i + mu_j)^m]
/// decided on their rational cores by Fekete's criterion.
VerificationReport verify_tp_hadamard_power(const BetaParams& params);

/// Random valid parameters: lambdas on a k/2 or k/3 ladder, mu_1 rational,
/// integer mu increments in 1..3, size in 1..max_n, m in 1..max_m.
BetaParams random_beta_params(std::mt19937_64& rng, std::size_t max_n, long max_m);

/// Uniform integer in [lo, hi] from a portable generator.
std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

}  // namespace betamat
