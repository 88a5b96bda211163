#include "betamat/identities.hpp"

#include "betamat/linalg.hpp"
#include "betamat/matrices.hpp"

#include <algorithm>

namespace betamat {

VerificationReport compare_matrices(std::string name, long n, const Matrix& lhs, const Matrix& rhs) {
  VerificationReport report{std::move(name), n, true, std::nullopt};
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    report.holds = false;
    report.witness = Witness{0, 0, Rational(static_cast<long>(lhs.rows())), Rational(static_cast<long>(rhs.rows())),
                             "==", "shape mismatch"};
    return report;
  }
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t j = 0; j < lhs.cols(); ++j) {
      if (lhs(i, j) != rhs(i, j)) {
        report.holds = false;
        report.witness = Witness{i + 1, j + 1, lhs(i, j), rhs(i, j), "==", {}};
        return report;
      }
    }
  }
  return report;
}

int beta_det_sign(long n) { return static_cast<int>(sign_power(n * (3 * n + 1) / 2)); }

int pascal_det_sign(long n) { return static_cast<int>(sign_power(n * (n - 1) / 2)); }

Rational closed_form_det(long n) {
  if (n < 1) {
    throw InvalidParameters("closed_form_det requires n >= 1");
  }
  mpz_class denominator = 1;
  for (long i = 1; i <= n; ++i) {
    denominator *= binomial(n + i - 1, n) * binomial(n, i) * i;
  }
  return Rational(mpz_class(beta_det_sign(n)), denominator);
}

Matrix closed_form_inverse(long n) {
  if (n < 1) {
    throw InvalidParameters("closed_form_inverse requires n >= 1");
  }
  const auto size = static_cast<std::size_t>(n);
  Matrix out(size, size);
  for (long i = 1; i <= n; ++i) {
    for (long j = 1; j <= n; ++j) {
      mpz_class sum = 0;
      for (long k = 1; k <= std::min(i, j); ++k) {
        sum += binomial(n - k, n - i) * binomial(n + j - 1, n + k - 1) * sign_power(k);
      }
      const mpz_class entry = sign_power(n + i - j) * binomial(n + i - 1, i - 1) * binomial(n, j) * j * sum;
      out(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = Rational(entry);
    }
  }
  return out;
}

LUFactors closed_form_LU(long n) {
  if (n < 1) {
    throw InvalidParameters("closed_form_LU requires n >= 1");
  }
  const auto size = static_cast<std::size_t>(n);
  const mpz_class n_fact = factorial(n);
  LUFactors out{Matrix(size, size), Matrix(size, size)};
  for (long i = 1; i <= n; ++i) {
    for (long j = 1; j <= n; ++j) {
      const auto r = static_cast<std::size_t>(i - 1);
      const auto c = static_cast<std::size_t>(j - 1);
      if (i >= j) {
        out.lower(r, c) =
            Rational(mpz_class(n_fact * binomial(n - j, n - i) * binomial(n + i - 1, i - 1) * sign_power(n + i + j)));
      }
      if (i <= j) {
        out.upper(r, c) =
            Rational(mpz_class(binomial(n + j - 1, n + i - 1) * binomial(n, j) * j * sign_power(j)), n_fact);
      }
    }
  }
  return out;
}

bool is_lower_triangular(const Matrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      if (!a(i, j).is_zero()) {
        return false;
      }
    }
  }
  return true;
}

bool is_upper_triangular(const Matrix& a) { return is_lower_triangular(transpose(a)); }

VerificationReport verify_K_factorization_with(long n, const Matrix& a) {
  return compare_matrices("k-factorization", n, k_matrix(n), d2_matrix(n) * b_matrix(n) * a * d1_matrix(n));
}

VerificationReport verify_K_factorization(long n) { return verify_K_factorization_with(n, a_matrix(n)); }

VerificationReport verify_summation_identity(long n, long i, long j) {
  if (n < 1 || i < 1 || j < 1 || i > n || j > n) {
    throw InvalidParameters("summation identity requires 1 <= i, j <= n");
  }
  mpz_class lhs = 0;
  for (long k = std::max(i, j); k <= n; ++k) {
    lhs += binomial(n + k - 1, n + i - 1) * binomial(n - j, n - k) * sign_power(i - k + j);
  }
  const Rational rhs(mpz_class(sign_power(n + j - i) * factorial(n + j - 1)), factorial(n - i) * factorial(i + j - 1));
  VerificationReport report{"summation", n, Rational(lhs) == rhs, std::nullopt};
  if (!report.holds) {
    report.witness = Witness{static_cast<std::size_t>(i), static_cast<std::size_t>(j), Rational(lhs), rhs, "==", {}};
  }
  return report;
}

VerificationReport verify_summation_grid(long n) {
  for (long i = 1; i <= n; ++i) {
    for (long j = 1; j <= n; ++j) {
      auto report = verify_summation_identity(n, i, j);
      if (!report.holds) {
        return report;
      }
    }
  }
  return {"summation", n, true, std::nullopt};
}

Matrix claimed_b_inverse(long n) {
  if (n < 1) {
    throw InvalidParameters("claimed_b_inverse requires n >= 1");
  }
  const auto size = static_cast<std::size_t>(n);
  Matrix out(size, size);
  for (long i = 1; i <= n; ++i) {
    for (long j = i; j <= n; ++j) {
      out(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = Rational(binomial(n + j - 1, n + i - 1));
    }
  }
  return out;
}

VerificationReport verify_B_inverse(long n) {
  return compare_matrices("b-inverse", n, b_matrix(n) * claimed_b_inverse(n),
                          Matrix::identity(static_cast<std::size_t>(n)));
}

VerificationReport verify_involution_of(long n, const Matrix& a) {
  return compare_matrices("a-involution", n, a * a, Matrix::identity(a.rows()));
}

VerificationReport verify_A_involution(long n) { return verify_involution_of(n, a_matrix(n)); }

VerificationReport verify_pascal_det_sign(long n) {
  const Rational det = det_bareiss(pascal_hadamard_inverse(n));
  VerificationReport report{"pascal-sign", n, det.sign() == pascal_det_sign(n), std::nullopt};
  if (!report.holds) {
    report.witness = Witness{0, 0, Rational(det.sign()), Rational(pascal_det_sign(n)), "==",
                             "sign of det = " + det.str()};
  }
  return report;
}

}  // namespace betamat
