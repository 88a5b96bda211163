#pragma once

// Exact rational scalars and dense rational matrices.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace betamat {

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Arbitrary-precision rational number, always kept in canonical form
/// (positive denominator, coprime numerator/denominator, zero as 0/1).
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpz_class& integer) : value_(integer) {}
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class value);

  /// Parses "p", "-p", "p/q" (surrounding whitespace allowed).
  /// Throws std::invalid_argument on malformed text or a zero denominator.
  static Rational parse(std::string_view text);

  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

  /// "p/q", or "p" when the denominator is one.
  [[nodiscard]] std::string str() const;
  /// Nearest double; for display and diagnostics only.
  [[nodiscard]] double approx() const { return value_.get_d(); }

  [[nodiscard]] Rational abs() const;
  [[nodiscard]] Rational reciprocal() const;
  /// Integer power; negative exponents require a nonzero base.
  [[nodiscard]] Rational pow(long exponent) const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

enum class ArithOp { add, sub, mul, div };

/// Binary operation with division by zero reported as an empty result.
std::optional<Rational> scalar_arith(const Rational& a, const Rational& b, ArithOp op);

mpz_class factorial(long n);

/// Binomial coefficient C(r, k) for integer r >= 0; zero when k < 0 or k > r.
/// Negative r yields zero as well (only the non-negative range is used).
mpz_class binomial(long r, long k);

/// (-1)^k for any integer k.
inline long sign_power(long k) { return (k % 2 == 0) ? 1 : -1; }

struct InertiaTriple {
  std::size_t positive = 0;
  std::size_t zero = 0;
  std::size_t negative = 0;

  friend bool operator==(const InertiaTriple&, const InertiaTriple&) = default;
};

std::string to_string(const InertiaTriple& inertia);

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }
  [[nodiscard]] bool is_symmetric() const;

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  [[nodiscard]] std::span<const Rational> entries() const { return entries_; }
  [[nodiscard]] std::span<const Rational> row(std::size_t i) const {
    return std::span<const Rational>(entries_).subspan(i * cols_, cols_);
  }

  /// Rows and columns selected by (sorted or unsorted) index lists.
  [[nodiscard]] Matrix submatrix(std::span<const std::size_t> row_idx,
                                 std::span<const std::size_t> col_idx) const;
  /// Leading k x k principal block.
  [[nodiscard]] Matrix leading_block(std::size_t k) const;

  [[nodiscard]] bool all_integer() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
  friend Matrix operator*(const Rational& scale, Matrix rhs);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// Matrix product; throws DimensionMismatch when inner sizes differ.
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
Matrix diag(std::span<const Rational> values);
/// Entrywise m-th power. Negative m needs every entry nonzero (m = -1 is the
/// Hadamard inverse); a zero entry with negative m throws DivisionByZero.
Matrix hadamard_power(const Matrix& a, long m);
Matrix hadamard_product(const Matrix& a, const Matrix& b);

}  // namespace betamat
