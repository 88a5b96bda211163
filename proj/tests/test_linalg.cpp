#include "betamat/linalg.hpp"
#include "betamat/matrices.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace betamat;

namespace {

// Cofactor expansion along the first row.
Rational det_laplace(const Matrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) {
    return 1;
  }
  Rational total = 0;
  std::vector<std::size_t> rows;
  for (std::size_t i = 1; i < n; ++i) {
    rows.push_back(i);
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j).is_zero()) {
      continue;
    }
    std::vector<std::size_t> cols;
    for (std::size_t k = 0; k < n; ++k) {
      if (k != j) {
        cols.push_back(k);
      }
    }
    const Rational term = a(0, j) * det_laplace(a.submatrix(rows, cols));
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t n, long span = 6) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, 4);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = Rational(num(rng), den(rng));
    }
  }
  return m;
}

Matrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
  const Matrix m = random_matrix(rng, n);
  return m + transpose(m);
}

std::vector<Rational> diag_values(std::initializer_list<long> v) {
  return std::vector<Rational>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("determinant examples") {
  CHECK(det_bareiss(Matrix::identity(3)) == Rational(1));
  CHECK(det_bareiss(beta_matrix(2)) == Rational(-1, 12));
  CHECK(det_bareiss(beta_matrix(3)) == det_laplace(beta_matrix(3)));
  CHECK(det_bareiss(beta_matrix(3)) == Rational(-1, 2160));
  CHECK(det_bareiss(Matrix(0, 0)) == Rational(1));
  CHECK(det_bareiss(Matrix{{0, 1}, {1, 0}}) == Rational(-1));
  CHECK(det_bareiss(Matrix{{1, 2}, {2, 4}}) == Rational(0));
  CHECK_THROWS_AS(det_bareiss(Matrix(2, 3)), DimensionMismatch);
}

TEST_CASE("determinant against cofactor expansion") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix a = random_matrix(rng, 1 + rng() % 6);
    CHECK(det_bareiss(a) == det_laplace(a));
  }
  for (long n = 1; n <= 7; ++n) {
    CHECK(det_bareiss(beta_matrix(n)) == det_laplace(beta_matrix(n)));
  }
}

TEST_CASE("determinant is multiplicative") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const Matrix a = random_matrix(rng, n);
    const Matrix b = random_matrix(rng, n);
    CHECK(det_bareiss(a) * det_bareiss(b) == det_bareiss(mat_mul(a, b)));
  }
}

TEST_CASE("inverse") {
  CHECK(inverse_exact(Matrix::identity(4)) == Matrix::identity(4));
  CHECK(inverse_exact(beta_matrix(2)) == Matrix{{-2, 6}, {6, -12}});
  CHECK(inverse_exact(diag(diag_values({2, 4}))) ==
        Matrix{{Rational(1, 2), 0}, {0, Rational(1, 4)}});
  CHECK_THROWS_AS(inverse_exact(Matrix{{1, 2}, {2, 4}}), SingularMatrix);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const Matrix a = random_matrix(rng, n);
    if (det_bareiss(a).is_zero()) {
      CHECK_THROWS_AS(inverse_exact(a), SingularMatrix);
      continue;
    }
    CHECK(mat_mul(inverse_exact(a), a) == Matrix::identity(n));
    CHECK(mat_mul(a, inverse_exact(a)) == Matrix::identity(n));
  }
}

TEST_CASE("characteristic polynomial examples") {
  CHECK(char_poly(diag(diag_values({1, -1}))) == Polynomial{1, 0, -1});
  CHECK(char_poly(beta_matrix(2)) == Polynomial{1, Rational(-7, 6), Rational(-1, 12)});
  CHECK(char_poly(Matrix(2, 2)) == Polynomial{1, 0, 0});
  CHECK(char_poly(Matrix(0, 0)) == Polynomial{1});
}

TEST_CASE("characteristic polynomial against det(tI - A)") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const Matrix a = random_matrix(rng, n);
    const Polynomial p = char_poly(a);
    CHECK(p.degree() == static_cast<long>(n));
    CHECK(p.leading() == Rational(1));
    // n + 1 sample points determine a degree-n polynomial.
    for (long t = -static_cast<long>(n) / 2; t <= static_cast<long>(n) / 2 + 1; ++t) {
      const Matrix shifted = Rational(t) * Matrix::identity(n) - a;
      CHECK(p.eval(Rational(t)) == det_laplace(shifted));
    }
    const Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
    CHECK(p.eval(Rational(0)) == sign * det_bareiss(a));
  }
}

TEST_CASE("inertia examples") {
  CHECK(inertia_symmetric(beta_matrix(2)) == InertiaTriple{1, 0, 1});
  CHECK(inertia_symmetric(beta_matrix(3)) == InertiaTriple{2, 0, 1});
  CHECK(inertia_symmetric(diag(diag_values({0, 5, -3}))) == InertiaTriple{1, 1, 1});
  CHECK(inertia_symmetric(Matrix(3, 3)) == InertiaTriple{0, 3, 0});
  CHECK_THROWS_AS(inertia_symmetric(Matrix{{1, 2}, {3, 4}}), NotSymmetric);
}

TEST_CASE("inertia table for beta and pascal matrices") {
  for (long n = 1; n <= 12; ++n) {
    const auto half = static_cast<std::size_t>(n / 2);
    const InertiaTriple expected =
        n % 2 == 0 ? InertiaTriple{half, 0, half} : InertiaTriple{half + 1, 0, half};
    CHECK(inertia_symmetric(beta_matrix(n)) == expected);
    CHECK(inertia_symmetric(pascal_hadamard_inverse(n)) == expected);
  }
}

TEST_CASE("positive count from signs agrees with Sturm") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 80; ++trial) {
    const Matrix a = random_symmetric(rng, 1 + rng() % 6);
    const Polynomial p = char_poly(a);
    const auto zeros = p.zero_root_multiplicity();
    const InertiaTriple in = inertia_symmetric(a);
    CHECK(in.zero == zeros);
    CHECK(in.positive == sturm_positive_roots(p.drop_zero_roots(zeros)));
    CHECK(in.negative == sturm_positive_roots(p.drop_zero_roots(zeros).reflect()));
    CHECK(in.positive + in.zero + in.negative == a.rows());
  }
}

TEST_CASE("Sylvester congruence preserves inertia") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    Matrix a = random_symmetric(rng, n);
    if (trial % 3 == 0) {
      // force a kernel: duplicate the first row/column
      for (std::size_t j = 0; j < n && n > 1; ++j) {
        a(n - 1, j) = a(0, j);
      }
      for (std::size_t i = 0; i < n && n > 1; ++i) {
        a(i, n - 1) = a(i, 0);
      }
      if (n > 1) {
        a(n - 1, n - 1) = a(0, 0);
      }
    }
    Matrix s = random_matrix(rng, n, 3);
    if (det_bareiss(s).is_zero()) {
      continue;
    }
    CHECK(inertia_symmetric(mat_mul(mat_mul(transpose(s), a), s)) == inertia_symmetric(a));
  }
}

TEST_CASE("leading principal minors") {
  CHECK(leading_principal_minors(Matrix::identity(3)) == std::vector<Rational>{1, 1, 1});
  const auto minors = leading_principal_minors(beta_matrix(3));
  REQUIRE(minors.size() == 3);
  CHECK(minors[0] == Rational(1));
  CHECK(minors[1] == Rational(-1, 12));
  CHECK(minors[2] == det_bareiss(beta_matrix(3)));
  CHECK(leading_principal_minors(diag(diag_values({2, 3}))) == std::vector<Rational>{2, 6});
}

TEST_CASE("determinant sign law") {
  for (long n = 1; n <= 12; ++n) {
    const long e = n * (3 * n + 1) / 2;
    CHECK(det_bareiss(beta_matrix(n)).sign() == (e % 2 == 0 ? 1 : -1));
  }
  for (long n = 1; n <= 11; ++n) {
    const int product = det_bareiss(beta_matrix(n)).sign() * det_bareiss(beta_matrix(n + 1)).sign();
    CHECK((product == 1) == (n % 2 == 0));
  }
}
