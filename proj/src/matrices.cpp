#include "betamat/matrices.hpp"

#include <sstream>

namespace betamat {

namespace {

void require_size(long n) {
  if (n < 1) {
    throw InvalidParameters("matrix order must be at least 1, got " + std::to_string(n));
  }
}

template <typename Entry>
Matrix build(long n, Entry entry) {
  require_size(n);
  const auto size = static_cast<std::size_t>(n);
  Matrix out(size, size);
  for (long i = 1; i <= n; ++i) {
    for (long j = 1; j <= n; ++j) {
      out(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = entry(i, j);
    }
  }
  return out;
}

/// Product (x)(x+1)...(x+count-1).
Rational rising(const Rational& x, long count) {
  Rational out = 1;
  for (long k = 0; k < count; ++k) {
    out *= x + Rational(k);
  }
  return out;
}

}  // namespace

Matrix beta_matrix(long n) {
  return build(n, [](long i, long j) { return Rational(factorial(i - 1) * factorial(j - 1), factorial(i + j - 1)); });
}

Matrix beta_recip_matrix(long n) {
  return build(n, [](long i, long j) { return Rational(factorial(i + j - 1), factorial(i - 1) * factorial(j - 1)); });
}

Matrix k_matrix(long n) {
  return build(n, [](long i, long j) { return Rational(mpz_class(1), factorial(i + j - 1)); });
}

Matrix a_matrix(long n) {
  return build(n, [n](long i, long j) {
    return i >= j ? Rational(mpz_class(binomial(n - j, n - i) * sign_power(j))) : Rational(0);
  });
}

Matrix b_matrix(long n) {
  return build(n, [n](long i, long j) {
    return i <= j ? Rational(mpz_class(binomial(n + j - 1, n + i - 1) * sign_power(i - j))) : Rational(0);
  });
}

Matrix d1_matrix(long n) {
  return build(n, [n](long i, long j) {
    return i == j ? Rational(mpz_class(sign_power(n - i)), factorial(n + i - 1)) : Rational(0);
  });
}

Matrix d2_matrix(long n) {
  return build(n, [n](long i, long j) {
    return i == j ? Rational(mpz_class(factorial(n - i) * sign_power(i))) : Rational(0);
  });
}

Matrix pascal_hadamard_inverse(long n) {
  // Shift the 1-based loop indices of build() to 0-based.
  return build(n, [](long i, long j) {
    return Rational(factorial(i - 1) * factorial(j - 1), factorial(i + j - 2));
  });
}

// ---------------------------------------------------------------------------

std::string GammaMonomial::describe() const {
  if (factors.empty()) {
    return "1";
  }
  std::ostringstream out;
  bool first = true;
  for (const auto& [arg, exponent] : factors) {
    if (!first) {
      out << " * ";
    }
    first = false;
    out << "Gamma(" << arg.str() << ")^" << exponent;
  }
  return out.str();
}

std::optional<Rational> GammaMonomial::exact_value() const {
  Rational out = 1;
  for (const auto& [arg, exponent] : factors) {
    if (!arg.is_integer()) {
      return std::nullopt;
    }
    const long k = arg.numerator().get_si();
    out *= Rational(factorial(k - 1)).pow(exponent);
  }
  return out;
}

std::optional<Matrix> ScaledMatrix::exact_full() const {
  std::vector<Rational> left;
  std::vector<Rational> right;
  for (const auto& g : left_scale) {
    auto v = g.exact_value();
    if (!v) {
      return std::nullopt;
    }
    left.push_back(*v);
  }
  for (const auto& g : right_scale) {
    auto v = g.exact_value();
    if (!v) {
      return std::nullopt;
    }
    right.push_back(*v);
  }
  return diag(left) * core * diag(right);
}

void BetaParams::validate() const {
  if (lambdas.empty() || lambdas.size() != mus.size()) {
    throw InvalidParameters("lambdas and mus must be nonempty and of equal length");
  }
  if (m < 1) {
    throw InvalidParameters("Hadamard exponent m must be a positive integer");
  }
  for (const auto* seq : {&lambdas, &mus}) {
    const char* name = seq == &lambdas ? "lambdas" : "mus";
    for (std::size_t i = 0; i < seq->size(); ++i) {
      if ((*seq)[i].sign() <= 0) {
        throw InvalidParameters(std::string(name) + " must be positive");
      }
      if (i > 0 && (*seq)[i] <= (*seq)[i - 1]) {
        throw InvalidParameters(std::string(name) + " must be strictly increasing");
      }
    }
  }
  for (std::size_t i = 1; i < mus.size(); ++i) {
    if (!(mus[i] - mus[i - 1]).is_integer()) {
      throw InvalidParameters(
          "mu increment " + (mus[i] - mus[i - 1]).str() +
          " is not an integer; only integer mu increments are supported (the nonsingularity and "
          "total positivity results are established only under that hypothesis)");
    }
  }
}

std::vector<long> BetaParams::mu_offsets() const {
  std::vector<long> out;
  out.reserve(mus.size());
  for (const auto& mu : mus) {
    out.push_back((mu - mus.front()).numerator().get_si());
  }
  return out;
}

ScaledMatrix generalized_beta_reduced(const BetaParams& params) {
  params.validate();
  const std::size_t n = params.size();
  const auto offsets = params.mu_offsets();
  const Rational& mu1 = params.mus.front();
  ScaledMatrix out;
  out.core = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational base = params.lambdas[i] + mu1;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational r = rising(mu1, offsets[j]) / rising(base, offsets[j]);
      out.core(i, j) = r.pow(params.m);
    }
    out.left_scale.push_back(
        GammaMonomial{{{params.lambdas[i], params.m}, {mu1, params.m}, {base, -params.m}}});
    out.right_scale.push_back(GammaMonomial{});
  }
  return out;
}

ScaledMatrix gamma_reduced_matrix(const BetaParams& params) {
  params.validate();
  const std::size_t n = params.size();
  const auto offsets = params.mu_offsets();
  ScaledMatrix out;
  out.core = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational base = params.lambdas[i] + params.mus.front();
    for (std::size_t j = 0; j < n; ++j) {
      out.core(i, j) = rising(base, offsets[j]).pow(-params.m);
    }
    out.left_scale.push_back(GammaMonomial{{{base, -params.m}}});
    out.right_scale.push_back(GammaMonomial{});
  }
  return out;
}

namespace {

ScaledMatrix hadamard_inverse(ScaledMatrix s) {
  s.core = hadamard_power(s.core, -1);
  for (auto* side : {&s.left_scale, &s.right_scale}) {
    for (auto& g : *side) {
      for (auto& factor : g.factors) {
        factor.second = -factor.second;
      }
    }
  }
  return s;
}

}  // namespace

ScaledMatrix gamma_power_reduced(const BetaParams& params) {
  return hadamard_inverse(gamma_reduced_matrix(params));
}

ScaledMatrix reciprocal_beta_reduced(const BetaParams& params) {
  return hadamard_inverse(generalized_beta_reduced(params));
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    out.push_back(Rational::parse(item));
  }
  if (out.empty()) {
    throw std::invalid_argument("empty rational list");
  }
  return out;
}

}  // namespace betamat
