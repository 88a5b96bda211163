#include "betamat/exact_core.hpp"

#include <ostream>

#include <algorithm>
#include <cctype>
#include <utility>

namespace betamat {

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) {
    throw DivisionByZero();
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) {
    throw DivisionByZero();
  }
  value_.canonicalize();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    s.remove_prefix(1);
  }
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) {
    s.remove_suffix(1);
  }
  return s;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') {
    s.remove_prefix(1);
  }
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  const mpz_class d = parse_integer(den);
  if (d == 0) {
    throw std::invalid_argument("zero denominator in rational: '" + std::string(text) + "'");
  }
  return Rational(parse_integer(num), d);
}

std::string Rational::str() const {
  if (is_integer()) {
    return value_.get_num().get_str();
  }
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::reciprocal() const {
  if (is_zero()) {
    throw DivisionByZero();
  }
  return Rational(value_.get_den(), value_.get_num());
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) {
    return reciprocal().pow(-exponent);
  }
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  // Powers of coprime integers stay coprime.
  Rational out;
  out.value_ = mpq_class(num, den);
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw DivisionByZero();
  }
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::optional<Rational> scalar_arith(const Rational& a, const Rational& b, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
    case ArithOp::div:
      if (b.is_zero()) {
        return std::nullopt;
      }
      return a / b;
  }
  return std::nullopt;
}

mpz_class factorial(long n) {
  if (n < 0) {
    throw std::invalid_argument("factorial of a negative integer");
  }
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

mpz_class binomial(long r, long k) {
  if (r < 0 || k < 0 || k > r) {
    return 0;
  }
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(k));
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      os << (j ? ", " : "") << m(i, j);
    }
    os << ']';
  }
  return os << ']';
}

std::string to_string(const InertiaTriple& inertia) {
  return "(" + std::to_string(inertia.positive) + ", " + std::to_string(inertia.zero) + ", " +
         std::to_string(inertia.negative) + ")";
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionMismatch("entry count does not match " + std::to_string(rows_) + "x" +
                            std::to_string(cols_));
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw DimensionMismatch("ragged matrix literal");
    }
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    out(i, i) = 1;
  }
  return out;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) {
    return false;
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) {
        return false;
      }
    }
  }
  return true;
}

Matrix Matrix::submatrix(std::span<const std::size_t> row_idx,
                         std::span<const std::size_t> col_idx) const {
  Matrix out(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i) {
    for (std::size_t j = 0; j < col_idx.size(); ++j) {
      out(i, j) = (*this)(row_idx[i], col_idx[j]);
    }
  }
  return out;
}

Matrix Matrix::leading_block(std::size_t k) const {
  Matrix out(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      out(i, j) = (*this)(i, j);
    }
  }
  return out;
}

bool Matrix::all_integer() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& r) { return r.is_integer(); });
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw DimensionMismatch("matrix sum of differently shaped operands");
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    entries_[k] += rhs.entries_[k];
  }
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw DimensionMismatch("matrix difference of differently shaped operands");
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    entries_[k] -= rhs.entries_[k];
  }
  return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols_ != rhs.rows_) {
    throw DimensionMismatch("cannot multiply " + std::to_string(lhs.rows_) + "x" + std::to_string(lhs.cols_) +
                            " by " + std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
  }
  Matrix out(lhs.rows_, rhs.cols_);
  mpq_class acc;
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t j = 0; j < rhs.cols_; ++j) {
      acc = 0;
      for (std::size_t k = 0; k < lhs.cols_; ++k) {
        acc += lhs(i, k).raw() * rhs(k, j).raw();
      }
      out(i, j) = Rational(acc);
    }
  }
  return out;
}

Matrix operator*(const Rational& scale, Matrix rhs) {
  for (auto& e : rhs.entries_) {
    e *= scale;
  }
  return rhs;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }

Matrix transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(j, i) = a(i, j);
    }
  }
  return out;
}

Matrix diag(std::span<const Rational> values) {
  Matrix out(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    out(i, i) = values[i];
  }
  return out;
}

Matrix hadamard_power(const Matrix& a, long m) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(i, j) = a(i, j).pow(m);
    }
  }
  return out;
}

Matrix hadamard_product(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("Hadamard product of differently shaped operands");
  }
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(i, j) = a(i, j) * b(i, j);
    }
  }
  return out;
}

}  // namespace betamat
