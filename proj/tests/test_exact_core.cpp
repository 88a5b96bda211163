#include "betamat/exact_core.hpp"

#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

using namespace betamat;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 30);
  return Rational(num(rng), den(rng));
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      m(i, j) = random_rational(rng);
    }
  }
  return m;
}

bool canonical(const Rational& x) {
  const mpz_class num = x.numerator();
  const mpz_class den = x.denominator();
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return den > 0 && g == 1;
}

}  // namespace

TEST_CASE("scalar arithmetic examples") {
  CHECK(*scalar_arith(Rational(1, 2), Rational(1, 6), ArithOp::add) == Rational(2, 3));
  const auto zero = *scalar_arith(Rational(3, 4), Rational(3, 4), ArithOp::sub);
  CHECK(zero.is_zero());
  CHECK(zero.numerator() == 0);
  CHECK(zero.denominator() == 1);
  CHECK(*scalar_arith(Rational(1, 6), Rational(1, 4), ArithOp::sub) == Rational(-1, 12));
  CHECK(*scalar_arith(Rational(2, 3), Rational(3, 4), ArithOp::mul) == Rational(1, 2));
  CHECK(*scalar_arith(Rational(2, 3), Rational(4, 9), ArithOp::div) == Rational(3, 2));
}

TEST_CASE("division by zero") {
  CHECK_FALSE(scalar_arith(Rational(1), Rational(0), ArithOp::div).has_value());
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
  CHECK_THROWS_AS(static_cast<void>(Rational(0).reciprocal()), DivisionByZero);
  CHECK_THROWS_AS(static_cast<void>(Rational(0).pow(-1)), DivisionByZero);
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
}

TEST_CASE("canonical form") {
  const Rational r(6, -8);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 4);
  CHECK(r.str() == "-3/4");
  CHECK(Rational(10, 5).str() == "2");
  CHECK(Rational(0, -7).str() == "0");

  std::mt19937_64 rng(7);
  for (int k = 0; k < 2000; ++k) {
    const Rational a = random_rational(rng);
    const Rational b = random_rational(rng);
    CHECK(canonical(a + b));
    CHECK(canonical(a - b));
    CHECK(canonical(a * b));
    if (!b.is_zero()) {
      CHECK(canonical(a / b));
    }
  }
}

TEST_CASE("parse") {
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK(Rational::parse(" 4/2 ") == Rational(2));
  CHECK(Rational::parse("123456789012345678901234567890/3").str() == "41152263004115226300411522630");
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
}

TEST_CASE("str round trip") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 500; ++k) {
    const Rational a = random_rational(rng).pow(5);
    CHECK(Rational::parse(a.str()) == a);
  }
}

TEST_CASE("powers") {
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(-5).pow(0) == Rational(1));
}

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == mpz_class("2432902008176640000"));
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(0, 1) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(4, 5) == 0);
  CHECK(binomial(-3, 1) == 0);
  // Pascal rule as an independent oracle.
  for (long r = 1; r < 30; ++r) {
    for (long k = 0; k <= r; ++k) {
      CHECK(binomial(r, k) == binomial(r - 1, k - 1) + binomial(r - 1, k));
    }
  }
  CHECK(sign_power(3) == -1);
  CHECK(sign_power(-2) == 1);
}

TEST_CASE("matrix products") {
  const Matrix m{{1, 2, 3}, {4, 5, 6}, {7, 8, Rational(9, 2)}};
  CHECK(mat_mul(Matrix::identity(3), m) == m);
  const std::vector<Rational> d{2, 3};
  CHECK(mat_mul(diag(d), Matrix{{1, 1}, {1, 1}}) == Matrix{{2, 2}, {3, 3}});
  const Matrix a{{-1, 0}, {-1, 1}};
  CHECK(mat_mul(a, a) == Matrix::identity(2));
  CHECK_THROWS_AS(mat_mul(Matrix(2, 3), Matrix(2, 3)), DimensionMismatch);
  CHECK_THROWS_AS(Matrix(2, 2) + Matrix(2, 3), DimensionMismatch);
}

TEST_CASE("transpose and diag") {
  CHECK(transpose(Matrix{{1, 2}, {3, 4}}) == Matrix{{1, 3}, {2, 4}});
  const std::vector<Rational> d{1, 2};
  CHECK(diag(d) == Matrix{{1, 0}, {0, 2}});
  const Matrix s{{1, Rational(1, 2), Rational(1, 3)},
                 {Rational(1, 2), Rational(1, 6), Rational(1, 12)},
                 {Rational(1, 3), Rational(1, 12), Rational(1, 30)}};
  CHECK(transpose(s) == s);
  CHECK(s.is_symmetric());
}

TEST_CASE("hadamard powers") {
  const Matrix a{{1, Rational(1, 2)}, {Rational(1, 2), Rational(1, 6)}};
  CHECK(hadamard_power(a, 1) == a);
  CHECK(hadamard_power(a, -1) == Matrix{{1, 2}, {2, 6}});
  CHECK(hadamard_power(Matrix{{1, 2}, {2, 6}}, 2) == Matrix{{1, 4}, {4, 36}});
  CHECK_THROWS_AS(hadamard_power(Matrix{{1, 0}, {0, 1}}, -1), DivisionByZero);
  CHECK(hadamard_product(a, hadamard_power(a, -1)) == Matrix{{1, 1}, {1, 1}});
}

TEST_CASE("submatrix and blocks") {
  const Matrix m{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  const std::vector<std::size_t> rows{0, 2};
  const std::vector<std::size_t> cols{1, 2};
  CHECK(m.submatrix(rows, cols) == Matrix{{2, 3}, {8, 9}});
  CHECK(m.leading_block(2) == Matrix{{1, 2}, {4, 5}});
  CHECK(m.all_integer());
}

TEST_CASE("ring axioms on random matrices") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t p = 1 + rng() % 4;
    const std::size_t q = 1 + rng() % 4;
    const std::size_t r = 1 + rng() % 4;
    const std::size_t s = 1 + rng() % 4;
    const Matrix a = random_matrix(rng, p, q);
    const Matrix b = random_matrix(rng, q, r);
    const Matrix b2 = random_matrix(rng, q, r);
    const Matrix c = random_matrix(rng, r, s);
    CHECK(mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c)));
    CHECK(mat_mul(a, b + b2) == mat_mul(a, b) + mat_mul(a, b2));
    CHECK(transpose(mat_mul(a, b)) == mat_mul(transpose(b), transpose(a)));
  }
}

TEST_CASE("hadamard inverse is an involution") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    Matrix a = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (a(i, j).is_zero()) {
          a(i, j) = Rational(1, 7);
        }
      }
    }
    CHECK(hadamard_power(hadamard_power(a, -1), -1) == a);
  }
}

TEST_CASE("inertia triple formatting") {
  CHECK(to_string(InertiaTriple{2, 0, 1}) == "(2, 0, 1)");
}
