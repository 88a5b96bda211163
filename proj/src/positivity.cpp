#include "betamat/positivity.hpp"

#include "betamat/linalg.hpp"

#include <functional>
#include <numeric>

namespace betamat {

namespace {

/// Calls visit(subset) for each k-subset of {0..n-1} in lexicographic order
/// until visit returns false. Returns false when stopped early.
bool for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  if (k > n) {
    return true;
  }
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (!visit(idx)) {
      return false;
    }
    // Advance to the next combination.
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) {
      --pos;
    }
    if (pos == 0) {
      return true;
    }
    ++idx[pos - 1];
    for (std::size_t t = pos; t < k; ++t) {
      idx[t] = idx[t - 1] + 1;
    }
  }
}

MinorCheck exhaustive(const Matrix& a, std::size_t guard, bool strict) {
  if (std::max(a.rows(), a.cols()) > guard) {
    throw MinorGuardExceeded("exhaustive minor enumeration is limited to order " + std::to_string(guard) +
                             "; use the contiguous-minor total positivity test instead");
  }
  MinorCheck result;
  const std::size_t max_k = std::min(a.rows(), a.cols());
  for (std::size_t k = 1; k <= max_k && result.holds; ++k) {
    for_each_subset(a.rows(), k, [&](const std::vector<std::size_t>& rows) {
      return for_each_subset(a.cols(), k, [&](const std::vector<std::size_t>& cols) {
        const Rational minor = det_bareiss(a.submatrix(rows, cols));
        if (minor.sign() < 0 || (strict && minor.is_zero())) {
          result = MinorCheck{false, MinorIndex{rows, cols}, minor};
          return false;
        }
        return true;
      });
    });
  }
  return result;
}

}  // namespace

MinorCheck is_totally_nonnegative(const Matrix& a, std::size_t guard) { return exhaustive(a, guard, false); }

MinorCheck is_totally_positive_exhaustive(const Matrix& a, std::size_t guard) { return exhaustive(a, guard, true); }

MinorCheck is_totally_positive(const Matrix& a) {
  const std::size_t max_k = std::min(a.rows(), a.cols());
  for (std::size_t k = 1; k <= max_k; ++k) {
    for (std::size_t r0 = 0; r0 + k <= a.rows(); ++r0) {
      for (std::size_t c0 = 0; c0 + k <= a.cols(); ++c0) {
        std::vector<std::size_t> rows(k);
        std::vector<std::size_t> cols(k);
        std::iota(rows.begin(), rows.end(), r0);
        std::iota(cols.begin(), cols.end(), c0);
        const Rational minor = det_bareiss(a.submatrix(rows, cols));
        if (minor.sign() <= 0) {
          return MinorCheck{false, MinorIndex{std::move(rows), std::move(cols)}, minor};
        }
      }
    }
  }
  return {};
}

namespace {

std::string describe_minor(const MinorIndex& idx) {
  auto join = [](const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) {
      s += (k ? "," : "") + std::to_string(v[k] + 1);
    }
    return s;
  };
  return "rows {" + join(idx.rows) + "} cols {" + join(idx.cols) + "}";
}

}  // namespace

VerificationReport verify_nonsingularity(const BetaParams& params) {
  const auto n = static_cast<long>(params.size());
  for (const auto& [label, scaled] : {std::pair{"gamma core", gamma_reduced_matrix(params)},
                                      std::pair{"beta core", generalized_beta_reduced(params)}}) {
    const Rational det = det_bareiss(scaled.core);
    if (det.is_zero()) {
      return {"nonsingular", n, false, Witness{0, 0, det, Rational(0), "!=", std::string(label) + " determinant"}};
    }
  }
  return {"nonsingular", n, true, std::nullopt};
}

VerificationReport verify_tp_hadamard_power(const BetaParams& params) {
  const auto n = static_cast<long>(params.size());
  for (const auto& [label, scaled] : {std::pair{"reciprocal beta core", reciprocal_beta_reduced(params)},
                                      std::pair{"gamma power core", gamma_power_reduced(params)}}) {
    const MinorCheck check = is_totally_positive(scaled.core);
    if (!check.holds) {
      const auto& idx = *check.failing;
      return {"tp", n, false,
              Witness{idx.rows.front() + 1, idx.cols.front() + 1, check.failing_value, Rational(0), ">",
                      std::string(label) + " minor " + describe_minor(idx)}};
    }
  }
  return {"tp", n, true, std::nullopt};
}

std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

BetaParams random_beta_params(std::mt19937_64& rng, std::size_t max_n, long max_m) {
  BetaParams params;
  const auto n = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<std::int64_t>(max_n)));
  params.m = static_cast<long>(uniform_int(rng, 1, max_m));
  const long ladder = uniform_int(rng, 0, 1) == 0 ? 2 : 3;
  long numerator = 0;
  for (std::size_t i = 0; i < n; ++i) {
    numerator += uniform_int(rng, 1, 3);
    params.lambdas.emplace_back(numerator, ladder);
  }
  Rational mu(uniform_int(rng, 1, 6), uniform_int(rng, 1, 4));
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      mu += Rational(uniform_int(rng, 1, 3));
    }
    params.mus.push_back(mu);
  }
  return params;
}

}  // namespace betamat
