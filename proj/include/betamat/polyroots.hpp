#pragma once

// Exact univariate polynomials, sign-change counting (Descartes), Sturm
// sequences and real-root isolation.

#include "betamat/exact_core.hpp"
#include "betamat/matrices.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace betamat {

class ZeroPolynomial : public std::domain_error {
 public:
  ZeroPolynomial() : std::domain_error("operation undefined for the zero polynomial") {}
};

/// Polynomial with exact coefficients stored in descending degree order.
/// The zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> descending);
  Polynomial(std::initializer_list<Rational> descending);

  static Polynomial constant(const Rational& c);
  /// x + c
  static Polynomial linear(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);

  [[nodiscard]] long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] std::span<const Rational> coefficients() const { return coeffs_; }
  /// Coefficient of x^k (zero beyond the degree).
  [[nodiscard]] Rational coeff(std::size_t k) const;
  [[nodiscard]] const Rational& leading() const;

  [[nodiscard]] Rational eval(const Rational& x) const;
  /// Sign just to the right of zero: sign of the lowest nonzero coefficient.
  [[nodiscard]] int sign_at_zero_plus() const;
  /// Sign as x -> +infinity: sign of the leading coefficient.
  [[nodiscard]] int sign_at_infinity() const;
  /// Sign as x -> -infinity.
  [[nodiscard]] int sign_at_neg_infinity() const;

  [[nodiscard]] Polynomial derivative() const;
  [[nodiscard]] Polynomial monic() const;
  /// p(-x)
  [[nodiscard]] Polynomial reflect() const;
  /// p(x + t)
  [[nodiscard]] Polynomial shift(const Rational& t) const;
  /// Number of trailing zero coefficients, i.e. the multiplicity of the root 0.
  [[nodiscard]] std::size_t zero_root_multiplicity() const;
  /// p(x) / x^k for k <= zero_root_multiplicity().
  [[nodiscard]] Polynomial drop_zero_roots(std::size_t k) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  [[nodiscard]] Polynomial pow(long exponent) const;

  [[nodiscard]] std::string str() const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of Euclidean division; throws ZeroPolynomial for b = 0.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic greatest common divisor (zero only when both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Squarefree decomposition p = c * prod f_k^k; returns (f_k, k) pairs with
/// nonconstant f_k.
std::vector<std::pair<Polynomial, std::size_t>> squarefree_decomposition(const Polynomial& p);

/// Number of strict sign alternations in the nonzero coefficients.
std::size_t sign_changes(const Polynomial& p);
std::size_t sign_changes(std::span<const Rational> coefficients);
/// Descartes' upper bound on the positive roots counted with multiplicity.
std::size_t descartes_bound(const Polynomial& p);

/// Sturm chain p, p', -rem(p, p'), ...
std::vector<Polynomial> sturm_chain(const Polynomial& p);
/// Distinct real roots of a squarefree p in the half-open interval (a, b].
std::size_t sturm_count(std::span<const Polynomial> chain, const Rational& a, const Rational& b);
/// Distinct roots of a squarefree p in (0, +infinity), exact end signs.
std::size_t sturm_count_positive(std::span<const Polynomial> chain);

/// Positive real roots counted with multiplicity.
std::size_t sturm_positive_roots(const Polynomial& p);

/// Rational upper bound on the absolute value of every complex root.
Rational root_bound(const Polynomial& p);

/// Real root of multiplicity `multiplicity` enclosed by [lo, hi]; lo == hi
/// means the root is exactly rational. Roots of distinct entries are distinct.
struct RootInterval {
  Rational lo;
  Rational hi;
  std::size_t multiplicity = 1;
  [[nodiscard]] Rational width() const { return hi - lo; }
};

/// All real roots, isolated into disjoint intervals that never contain zero
/// unless the root is exactly zero.
class RealRootIsolator {
 public:
  explicit RealRootIsolator(const Polynomial& p);
  [[nodiscard]] const std::vector<RootInterval>& roots() const { return roots_; }
  /// Bisects the root at `index` once (or marks it exact when hitting it).
  void bisect(std::size_t index);
  /// Refines every root until each width is at most `max_width`.
  void refine_to(const Rational& max_width);

 private:
  struct Factor {
    Polynomial poly;
    std::vector<Polynomial> chain;
    std::size_t multiplicity;
    std::vector<mpz_class> integer_coeffs;  // poly scaled to integer coefficients
  };
  void isolate(std::size_t factor, Rational lo, Rational hi);
  void sort_roots();
  void separate();
  [[nodiscard]] int sign_at(const Factor& f, const Rational& x) const;

  std::vector<Factor> factors_;
  std::vector<RootInterval> roots_;
  std::vector<std::size_t> owner_;
};

/// p(x) * (x + alpha) for alpha > 0; throws std::invalid_argument otherwise.
Polynomial mul_linear(const Polynomial& p, const Rational& alpha);

/// f_1 = c_1 prod_t (x + alpha_1t)^m + c_2,
/// f_k = f_{k-1} prod_t (x + alpha_kt)^m + c_{k+1}.
struct FamilySpec {
  long m = 1;
  std::vector<Rational> constants;          // c_1 .. c_{p+1}
  std::vector<std::vector<Rational>> blocks;  // alpha_k1 .. alpha_kl_k, k = 1..p

  void validate() const;
};

Polynomial build_family(const FamilySpec& spec);

/// sum_{j<n} c_j prod_{k=0}^{mu_n - mu_j - 1} (x + mu_j + k)^m + c_n, built by
/// the nested recursion; its positive zeros bound the solutions of
/// sum_j c_j / Gamma(x + mu_j)^m = 0. Throws for an all-zero c.
Polynomial beta_kernel_polynomial(const BetaParams& params, std::span<const Rational> c);

}  // namespace betamat
