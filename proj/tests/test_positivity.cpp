#include "betamat/linalg.hpp"
#include "betamat/matrices.hpp"
#include "betamat/positivity.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace betamat;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = Rational(uniform_int(rng, lo, hi), uniform_int(rng, 1, 3));
    }
  }
  return m;
}

// Hilbert-like Cauchy matrix 1/(x_i + y_j) with increasing x, y: totally positive.
Matrix cauchy_matrix(std::mt19937_64& rng, std::size_t n) {
  std::vector<Rational> x;
  std::vector<Rational> y;
  Rational a(uniform_int(rng, 1, 4), 3);
  Rational b(uniform_int(rng, 1, 4), 5);
  for (std::size_t i = 0; i < n; ++i) {
    x.push_back(a);
    y.push_back(b);
    a += Rational(uniform_int(rng, 1, 5), 2);
    b += Rational(uniform_int(rng, 1, 5), 7);
  }
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = Rational(1) / (x[i] + y[j]);
    }
  }
  return m;
}

std::vector<Rational> random_positive_diag(std::mt19937_64& rng, std::size_t n) {
  std::vector<Rational> d;
  for (std::size_t i = 0; i < n; ++i) {
    d.emplace_back(uniform_int(rng, 1, 9), uniform_int(rng, 1, 9));
  }
  return d;
}

}  // namespace

TEST_CASE("total nonnegativity examples") {
  CHECK(is_totally_nonnegative(Matrix{{1, 2}, {2, 6}}).holds);
  const auto swap = is_totally_nonnegative(Matrix{{0, 1}, {1, 0}});
  CHECK_FALSE(swap.holds);
  REQUIRE(swap.failing.has_value());
  CHECK(swap.failing_value == Rational(-1));
  CHECK(swap.failing->rows == std::vector<std::size_t>{0, 1});
  CHECK(is_totally_nonnegative(Matrix::identity(4)).holds);
  CHECK_THROWS_AS(is_totally_nonnegative(Matrix::identity(9)), MinorGuardExceeded);
  CHECK(is_totally_nonnegative(Matrix::identity(9), 9).holds);
}

TEST_CASE("total positivity examples") {
  CHECK(is_totally_positive(beta_recip_matrix(3)).holds);
  CHECK(is_totally_positive_exhaustive(beta_recip_matrix(3)).holds);
  CHECK(is_totally_positive(hadamard_power(beta_recip_matrix(3), 2)).holds);
  CHECK_FALSE(is_totally_positive(Matrix::identity(3)).holds);

  Matrix interior_zero = beta_recip_matrix(3);
  interior_zero(1, 1) = Rational(0);
  const auto check = is_totally_positive(interior_zero);
  CHECK_FALSE(check.holds);
  REQUIRE(check.failing.has_value());
  CHECK(check.failing->rows == std::vector<std::size_t>{1});
  CHECK(check.failing->cols == std::vector<std::size_t>{1});
  CHECK(check.failing_value.is_zero());

  // ones matrix: nonnegative but not positive
  const Matrix ones{{1, 1}, {1, 1}};
  CHECK(is_totally_nonnegative(ones).holds);
  CHECK_FALSE(is_totally_positive(ones).holds);
}

TEST_CASE("Fekete agrees with exhaustive minors") {
  std::mt19937_64 rng(8080);
  int positives = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, 6));
    Matrix a;
    switch (trial % 3) {
      case 0: a = cauchy_matrix(rng, n); break;
      case 1: a = random_matrix(rng, n, 1, 9); break;
      default: {
        a = cauchy_matrix(rng, n);
        a(rng() % n, rng() % n) *= Rational(uniform_int(rng, 1, 8), 4);
      }
    }
    const bool fekete = is_totally_positive(a).holds;
    CHECK(fekete == is_totally_positive_exhaustive(a).holds);
    positives += fekete ? 1 : 0;
  }
  CHECK(positives > 50);
  for (long n = 1; n <= 6; ++n) {
    CHECK(is_totally_positive(beta_recip_matrix(n)).holds == is_totally_positive_exhaustive(beta_recip_matrix(n)).holds);
    CHECK(is_totally_positive(pascal_hadamard_inverse(n)).holds ==
          is_totally_positive_exhaustive(pascal_hadamard_inverse(n)).holds);
  }
}

TEST_CASE("positive diagonal scaling preserves total positivity") {
  std::mt19937_64 rng(9090);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, 5));
    const Matrix a = trial % 2 == 0 ? cauchy_matrix(rng, n) : random_matrix(rng, n, 1, 9);
    const Matrix d = diag(random_positive_diag(rng, n));
    const Matrix e = diag(random_positive_diag(rng, n));
    CHECK(is_totally_positive(mat_mul(mat_mul(d, a), e)).holds == is_totally_positive(a).holds);
  }
}

TEST_CASE("nonsingularity examples") {
  BetaParams half;
  half.lambdas = {Rational(1, 2), Rational(3, 2)};
  half.mus = {Rational(1, 2), Rational(3, 2)};
  CHECK(det_bareiss(generalized_beta_reduced(half).core) == Rational(-1, 4));
  CHECK(verify_nonsingularity(half).holds);

  BetaParams ints;
  ints.lambdas = {1, 2, 3};
  ints.mus = {1, 2, 3};
  ints.m = 2;
  CHECK(verify_nonsingularity(ints).holds);

  BetaParams bad = half;
  bad.mus = {Rational(1, 2), Rational(2, 3)};
  CHECK_THROWS_AS(verify_nonsingularity(bad), InvalidParameters);
}

TEST_CASE("total positivity of Hadamard powers") {
  BetaParams ints;
  ints.lambdas = {1, 2, 3};
  ints.mus = {1, 2, 3};
  CHECK(verify_tp_hadamard_power(ints).holds);

  BetaParams half;
  half.lambdas = {Rational(1, 2), Rational(3, 2)};
  half.mus = {Rational(1, 2), Rational(3, 2)};
  half.m = 2;
  CHECK(verify_tp_hadamard_power(half).holds);
  CHECK(is_totally_positive_exhaustive(reciprocal_beta_reduced(half).core).holds);

  BetaParams zero_power = half;
  zero_power.m = 0;
  CHECK_THROWS_AS(verify_tp_hadamard_power(zero_power), InvalidParameters);
}

TEST_CASE("random parameter sweeps") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const BetaParams p = random_beta_params(rng, 5, 3);
    REQUIRE_NOTHROW(p.validate());
    CHECK(p.size() >= 1);
    CHECK(p.size() <= 5);
    CHECK(p.m >= 1);
    CHECK(p.m <= 3);
    CHECK(verify_nonsingularity(p).holds);
  }
  std::mt19937_64 rng2(43);
  for (int trial = 0; trial < 50; ++trial) {
    const BetaParams p = random_beta_params(rng2, 5, 3);
    CHECK(verify_tp_hadamard_power(p).holds);
    if (p.size() <= 4) {
      CHECK(is_totally_positive_exhaustive(reciprocal_beta_reduced(p).core).holds);
      CHECK(is_totally_positive_exhaustive(gamma_power_reduced(p).core).holds);
    }
  }
}

TEST_CASE("submatrices of a totally positive gamma matrix are nonsingular") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 20; ++trial) {
    BetaParams p = random_beta_params(rng, 4, 2);
    const Matrix core = gamma_power_reduced(p).core;
    REQUIRE(is_totally_positive(core).holds);
    const std::size_t n = core.rows();
    for (std::size_t mask_r = 1; mask_r < (1u << n); ++mask_r) {
      for (std::size_t mask_c = 1; mask_c < (1u << n); ++mask_c) {
        if (__builtin_popcountl(mask_r) != __builtin_popcountl(mask_c)) {
          continue;
        }
        std::vector<std::size_t> rows;
        std::vector<std::size_t> cols;
        for (std::size_t k = 0; k < n; ++k) {
          if (mask_r >> k & 1u) {
            rows.push_back(k);
          }
          if (mask_c >> k & 1u) {
            cols.push_back(k);
          }
        }
        CHECK_FALSE(det_bareiss(core.submatrix(rows, cols)).is_zero());
      }
    }
  }
}

TEST_CASE("uniform integers stay in range") {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 1000; ++k) {
    const auto v = uniform_int(rng, -3, 4);
    CHECK(v >= -3);
    CHECK(v <= 4);
  }
}
