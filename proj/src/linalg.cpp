#include "betamat/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace betamat {

namespace {

void require_square(const Matrix& a, const char* what) {
  if (!a.is_square()) {
    throw DimensionMismatch(std::string(what) + " requires a square matrix");
  }
}

}  // namespace

Rational det_bareiss(const Matrix& a) {
  require_square(a, "determinant");
  const std::size_t n = a.rows();
  if (n == 0) {
    return 1;
  }
  // Clear denominators row by row: det(A) = det(M) / prod(row scale).
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
  mpz_class scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class row_lcm = 1;
    for (std::size_t j = 0; j < n; ++j) {
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), a(i, j).raw().get_den_mpz_t());
    }
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = a(i, j).numerator() * (row_lcm / a(i, j).denominator());
    }
    scale *= row_lcm;
  }

  int sign = 1;
  mpz_class previous = 1;
  mpz_class t;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) {
        ++p;
      }
      if (p == n) {
        return 0;
      }
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        if (mpz_divisible_p(t.get_mpz_t(), previous.get_mpz_t()) == 0) {
          throw std::logic_error("Bareiss elimination: inexact division");
        }
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      m[i][k] = 0;
    }
    previous = m[k][k];
  }
  return Rational(mpz_class(sign * m[n - 1][n - 1]), scale);
}

Matrix inverse_exact(const Matrix& a) {
  require_square(a, "inverse");
  const std::size_t n = a.rows();
  std::vector<std::vector<mpq_class>> work(n, std::vector<mpq_class>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      work[i][j] = a(i, j).raw();
    }
    work[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work[pivot][col] == 0) {
      ++pivot;
    }
    if (pivot == n) {
      throw SingularMatrix();
    }
    std::swap(work[col], work[pivot]);
    const mpq_class inv = 1 / work[col][col];
    for (auto& e : work[col]) {
      e *= inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || work[i][col] == 0) {
        continue;
      }
      const mpq_class factor = work[i][col];
      for (std::size_t j = col; j < 2 * n; ++j) {
        work[i][j] -= factor * work[col][j];
      }
    }
  }
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = Rational(work[i][n + j]);
    }
  }
  return out;
}

Polynomial char_poly(const Matrix& a) {
  require_square(a, "characteristic polynomial");
  const std::size_t n = a.rows();
  // Berkowitz: c_{r+1} = T_r c_r with T_r the lower triangular Toeplitz matrix
  // whose first column is (1, -a_rr, -R S, -R M S, ..., -R M^{r-1} S).
  std::vector<mpq_class> c{1};
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<mpq_class> column(r + 2);
    column[0] = 1;
    column[1] = -a(r, r).raw();
    // v = M^k S, starting from S = A[0..r-1][r].
    std::vector<mpq_class> v(r);
    for (std::size_t i = 0; i < r; ++i) {
      v[i] = a(i, r).raw();
    }
    for (std::size_t k = 0; k < r; ++k) {
      mpq_class dot = 0;
      for (std::size_t i = 0; i < r; ++i) {
        dot += a(r, i).raw() * v[i];
      }
      column[k + 2] = -dot;
      if (k + 1 < r) {
        std::vector<mpq_class> next(r);
        for (std::size_t i = 0; i < r; ++i) {
          for (std::size_t j = 0; j < r; ++j) {
            next[i] += a(i, j).raw() * v[j];
          }
        }
        v = std::move(next);
      }
    }
    std::vector<mpq_class> updated(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, r); ++j) {
        updated[i] += column[i - j] * c[j];
      }
    }
    c = std::move(updated);
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(c.size());
  for (auto& v : c) {
    coeffs.emplace_back(std::move(v));
  }
  return Polynomial(std::move(coeffs));
}

InertiaTriple inertia_symmetric(const Matrix& a) {
  require_square(a, "inertia");
  if (!a.is_symmetric()) {
    throw NotSymmetric();
  }
  const std::size_t n = a.rows();
  const Polynomial p = char_poly(a);
  InertiaTriple out;
  out.zero = p.zero_root_multiplicity();
  const Polynomial q = p.drop_zero_roots(out.zero);
  // Descartes' bound is exact for a real-rooted polynomial.
  out.positive = sign_changes(q);
  out.negative = n - out.positive - out.zero;

  if (sturm_positive_roots(q) != out.positive || sturm_positive_roots(q.reflect()) != out.negative) {
    throw std::logic_error("inertia: Descartes and Sturm counts disagree");
  }
  return out;
}

std::vector<Rational> leading_principal_minors(const Matrix& a) {
  require_square(a, "leading principal minors");
  std::vector<Rational> out;
  out.reserve(a.rows());
  for (std::size_t k = 1; k <= a.rows(); ++k) {
    out.push_back(det_bareiss(a.leading_block(k)));
  }
  return out;
}

}  // namespace betamat
