#include "betamat/polyroots.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace betamat {

Polynomial::Polynomial(std::vector<Rational> descending) : coeffs_(std::move(descending)) { normalize(); }

Polynomial::Polynomial(std::initializer_list<Rational> descending) : coeffs_(descending) { normalize(); }

void Polynomial::normalize() {
  const auto first_nonzero =
      std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return !c.is_zero(); });
  coeffs_.erase(coeffs_.begin(), first_nonzero);
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::linear(const Rational& c) { return Polynomial({Rational(1), c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> coeffs(degree + 1);
  coeffs.front() = c;
  return Polynomial(std::move(coeffs));
}

Rational Polynomial::coeff(std::size_t k) const {
  if (static_cast<long>(k) > degree()) {
    return 0;
  }
  return coeffs_[coeffs_.size() - 1 - k];
}

const Rational& Polynomial::leading() const {
  if (is_zero()) {
    throw ZeroPolynomial();
  }
  return coeffs_.front();
}

Rational Polynomial::eval(const Rational& x) const {
  // Horner on raw GMP values avoids a temporary per step.
  mpq_class acc = 0;
  for (const auto& c : coeffs_) {
    acc *= x.raw();
    acc += c.raw();
  }
  return Rational(acc);
}

int Polynomial::sign_at_zero_plus() const {
  if (is_zero()) {
    return 0;
  }
  return coeffs_[coeffs_.size() - 1 - zero_root_multiplicity()].sign();
}

int Polynomial::sign_at_infinity() const { return is_zero() ? 0 : coeffs_.front().sign(); }

int Polynomial::sign_at_neg_infinity() const {
  if (is_zero()) {
    return 0;
  }
  return degree() % 2 == 0 ? coeffs_.front().sign() : -coeffs_.front().sign();
}

Polynomial Polynomial::derivative() const {
  if (degree() <= 0) {
    return {};
  }
  std::vector<Rational> out;
  out.reserve(coeffs_.size() - 1);
  const long d = degree();
  for (long k = 0; k < d; ++k) {
    out.push_back(coeffs_[static_cast<std::size_t>(k)] * Rational(d - k));
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) {
    return {};
  }
  const Rational lead = coeffs_.front();
  std::vector<Rational> out(coeffs_);
  for (auto& c : out) {
    c /= lead;
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::reflect() const {
  std::vector<Rational> out(coeffs_);
  const long d = degree();
  for (long k = 0; k <= d; ++k) {
    // Coefficient of x^(d-k).
    if ((d - k) % 2 != 0) {
      out[static_cast<std::size_t>(k)] = -out[static_cast<std::size_t>(k)];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::shift(const Rational& t) const {
  // Horner in polynomial arithmetic: p(x+t) = (...(a_d (x+t) + a_{d-1})(x+t) + ...).
  Polynomial acc;
  const Polynomial x_plus_t = linear(t);
  for (const auto& c : coeffs_) {
    acc = acc * x_plus_t + constant(c);
  }
  return acc;
}

std::size_t Polynomial::zero_root_multiplicity() const {
  std::size_t k = 0;
  while (k < coeffs_.size() && coeffs_[coeffs_.size() - 1 - k].is_zero()) {
    ++k;
  }
  return k;
}

Polynomial Polynomial::drop_zero_roots(std::size_t k) const {
  if (k > zero_root_multiplicity()) {
    throw std::invalid_argument("polynomial is not divisible by x^" + std::to_string(k));
  }
  return Polynomial(std::vector<Rational>(coeffs_.begin(), coeffs_.end() - static_cast<long>(k)));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) {
    coeffs_.insert(coeffs_.begin(), rhs.coeffs_.size() - coeffs_.size(), Rational(0));
  }
  const std::size_t offset = coeffs_.size() - rhs.coeffs_.size();
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
    coeffs_[offset + k] += rhs.coeffs_[k];
  }
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += Rational(-1) * rhs; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) {
    return {};
  }
  std::vector<mpq_class> acc(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      acc[i + j] += a.coeffs_[i].raw() * b.coeffs_[j].raw();
    }
  }
  std::vector<Rational> out;
  out.reserve(acc.size());
  for (auto& c : acc) {
    out.emplace_back(std::move(c));
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  std::vector<Rational> out(p.coeffs_);
  for (auto& e : out) {
    e *= c;
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::pow(long exponent) const {
  if (exponent < 0) {
    throw std::invalid_argument("negative polynomial power");
  }
  Polynomial result = constant(1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1) {
      result = result * base;
    }
    exponent >>= 1;
    if (exponent > 0) {
      base = base * base;
    }
  }
  return result;
}

std::string Polynomial::str() const {
  if (is_zero()) {
    return "0";
  }
  std::ostringstream out;
  const long d = degree();
  bool first = true;
  for (long k = 0; k <= d; ++k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) {
      continue;
    }
    const long power = d - k;
    const Rational mag = c.abs();
    if (first) {
      out << (c.sign() < 0 ? "-" : "");
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (power == 0 || mag != Rational(1)) {
      out << mag.str();
      if (power > 0) {
        out << "*";
      }
    }
    if (power >= 1) {
      out << "x";
    }
    if (power > 1) {
      out << "^" << power;
    }
  }
  return out.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) {
    throw ZeroPolynomial();
  }
  if (a.degree() < b.degree()) {
    return {Polynomial{}, a};
  }
  const auto bc = b.coefficients();
  std::vector<mpq_class> rem;
  rem.reserve(a.coefficients().size());
  for (const auto& c : a.coefficients()) {
    rem.push_back(c.raw());
  }
  const std::size_t steps = static_cast<std::size_t>(a.degree() - b.degree()) + 1;
  std::vector<Rational> quot;
  quot.reserve(steps);
  const mpq_class& lead = bc.front().raw();
  for (std::size_t s = 0; s < steps; ++s) {
    const mpq_class factor = rem[s] / lead;
    for (std::size_t k = 0; k < bc.size(); ++k) {
      rem[s + k] -= factor * bc[k].raw();
    }
    quot.emplace_back(factor);
  }
  std::vector<Rational> r;
  for (std::size_t k = steps; k < rem.size(); ++k) {
    r.emplace_back(std::move(rem[k]));
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(r))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    // Keep the remainders monic to contain coefficient growth.
    y = r.monic();
  }
  return x.monic();
}

std::vector<std::pair<Polynomial, std::size_t>> squarefree_decomposition(const Polynomial& p) {
  if (p.is_zero()) {
    throw ZeroPolynomial();
  }
  std::vector<std::pair<Polynomial, std::size_t>> out;
  if (p.degree() == 0) {
    return out;
  }
  // Yun's algorithm.
  const Polynomial f = p.monic();
  const Polynomial df = f.derivative();
  const Polynomial a0 = gcd(f, df);
  Polynomial b = divmod(f, a0).first;
  Polynomial c = divmod(df, a0).first;
  Polynomial d = c - b.derivative();
  std::size_t k = 1;
  while (b.degree() > 0) {
    const Polynomial a = gcd(b, d);
    if (a.degree() > 0) {
      out.emplace_back(a, k);
    }
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
    ++k;
  }
  return out;
}

std::size_t sign_changes(std::span<const Rational> coefficients) {
  std::size_t changes = 0;
  int previous = 0;
  for (const auto& c : coefficients) {
    const int s = c.sign();
    if (s == 0) {
      continue;
    }
    if (previous != 0 && s != previous) {
      ++changes;
    }
    previous = s;
  }
  return changes;
}

std::size_t sign_changes(const Polynomial& p) {
  if (p.is_zero()) {
    throw ZeroPolynomial();
  }
  return sign_changes(p.coefficients());
}

std::size_t descartes_bound(const Polynomial& p) { return sign_changes(p); }

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  if (p.is_zero()) {
    throw ZeroPolynomial();
  }
  std::vector<Polynomial> chain{p};
  Polynomial next = p.derivative();
  while (!next.is_zero()) {
    chain.push_back(next);
    const auto& prev = chain[chain.size() - 2];
    next = Rational(-1) * divmod(prev, chain.back()).second;
  }
  return chain;
}

namespace {

std::size_t count_variations(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int previous = 0;
  for (int s : signs) {
    if (s == 0) {
      continue;
    }
    if (previous != 0 && s != previous) {
      ++changes;
    }
    previous = s;
  }
  return changes;
}

std::size_t variations_at(std::span<const Polynomial> chain, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) {
    signs.push_back(q.eval(x).sign());
  }
  return count_variations(signs);
}

}  // namespace

std::size_t sturm_count(std::span<const Polynomial> chain, const Rational& a, const Rational& b) {
  const std::size_t va = variations_at(chain, a);
  const std::size_t vb = variations_at(chain, b);
  assert(va >= vb);
  return va - vb;
}

std::size_t sturm_count_positive(std::span<const Polynomial> chain) {
  std::vector<int> at_zero;
  std::vector<int> at_inf;
  for (const auto& q : chain) {
    at_zero.push_back(q.sign_at_zero_plus());
    at_inf.push_back(q.sign_at_infinity());
  }
  return count_variations(at_zero) - count_variations(at_inf);
}

std::size_t sturm_positive_roots(const Polynomial& p) {
  std::size_t total = 0;
  for (const auto& [factor, multiplicity] : squarefree_decomposition(p)) {
    const auto chain = sturm_chain(factor);
    total += multiplicity * sturm_count_positive(chain);
  }
  return total;
}

Rational root_bound(const Polynomial& p) {
  if (p.is_zero()) {
    throw ZeroPolynomial();
  }
  Rational largest = 0;
  const Rational lead = p.leading().abs();
  for (const auto& c : p.coefficients().subspan(1)) {
    largest = std::max(largest, c.abs() / lead);
  }
  return largest + Rational(1);
}

// ---------------------------------------------------------------------------
// Root isolation

RealRootIsolator::RealRootIsolator(const Polynomial& p) {
  for (auto& [factor, multiplicity] : squarefree_decomposition(p)) {
    Polynomial f = factor;
    if (f.zero_root_multiplicity() > 0) {
      roots_.push_back({Rational(0), Rational(0), multiplicity});
      owner_.push_back(factors_.size());
      f = f.drop_zero_roots(1);
    }
    if (f.degree() <= 0) {
      factors_.push_back({f, {}, multiplicity, {}});
      continue;
    }
    auto chain = sturm_chain(f);
    const Rational bound = root_bound(f);
    mpz_class scale = 1;
    for (const auto& c : f.coefficients()) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.raw().get_den_mpz_t());
    }
    std::vector<mpz_class> integer_coeffs;
    for (const auto& c : f.coefficients()) {
      integer_coeffs.push_back(c.numerator() * (scale / c.denominator()));
    }
    factors_.push_back({f, std::move(chain), multiplicity, std::move(integer_coeffs)});
    const std::size_t idx = factors_.size() - 1;
    isolate(idx, -bound, Rational(0));
    isolate(idx, Rational(0), bound);
  }
  separate();
}

void RealRootIsolator::sort_roots() {
  std::vector<std::size_t> order(roots_.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    order[k] = k;
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return roots_[a].lo < roots_[b].lo; });
  std::vector<RootInterval> sorted_roots;
  std::vector<std::size_t> sorted_owner;
  for (std::size_t k : order) {
    sorted_roots.push_back(roots_[k]);
    sorted_owner.push_back(owner_[k]);
  }
  roots_ = std::move(sorted_roots);
  owner_ = std::move(sorted_owner);
}

// Roots of different squarefree factors are isolated independently, so their
// intervals may overlap; shrink until they are pairwise disjoint and only the
// exact root 0 touches zero.
void RealRootIsolator::separate() {
  while (true) {
    sort_roots();
    bool changed = false;
    for (std::size_t k = 0; k < roots_.size(); ++k) {
      const auto& r = roots_[k];
      if (r.lo != r.hi && (r.lo.is_zero() || r.hi.is_zero())) {
        bisect(k);
        changed = true;
      }
    }
    for (std::size_t k = 0; k + 1 < roots_.size(); ++k) {
      if (roots_[k].hi >= roots_[k + 1].lo) {
        bisect(roots_[k].width() >= roots_[k + 1].width() ? k : k + 1);
        changed = true;
      }
    }
    if (!changed) {
      return;
    }
  }
}

void RealRootIsolator::isolate(std::size_t factor, Rational lo, Rational hi) {
  const auto& f = factors_[factor];
  const std::size_t count = sturm_count(f.chain, lo, hi);
  if (count == 0) {
    return;
  }
  if (count == 1) {
    if (f.poly.eval(hi).is_zero()) {
      lo = hi;
    }
    roots_.push_back({std::move(lo), std::move(hi), f.multiplicity});
    owner_.push_back(factor);
    return;
  }
  const Rational mid = (lo + hi) / Rational(2);
  isolate(factor, lo, mid);
  isolate(factor, mid, hi);
}

int RealRootIsolator::sign_at(const Factor& f, const Rational& x) const {
  // Sign of den^d * f(num/den), by homogeneous Horner in integers.
  const mpz_class num = x.numerator();
  const mpz_class den = x.denominator();
  mpz_class acc = 0;
  mpz_class den_power = 1;
  for (const auto& c : f.integer_coeffs) {
    acc = acc * num + c * den_power;
    den_power *= den;
  }
  return sgn(acc);
}

void RealRootIsolator::bisect(std::size_t index) {
  auto& root = roots_.at(index);
  if (root.lo == root.hi) {
    return;
  }
  const auto& f = factors_[owner_[index]];
  const Rational mid = (root.lo + root.hi) / Rational(2);
  const int at_mid = sign_at(f, mid);
  if (at_mid == 0) {
    root.lo = mid;
    root.hi = mid;
    return;
  }
  const int at_lo = sign_at(f, root.lo);
  // The single root lies in (lo, hi]; with f(lo) != 0 a sign change locates it.
  const bool left = at_lo != 0 ? at_mid != at_lo : sturm_count(f.chain, root.lo, mid) == 1;
  if (left) {
    root.hi = mid;
  } else {
    root.lo = mid;
  }
}

void RealRootIsolator::refine_to(const Rational& max_width) {
  for (std::size_t k = 0; k < roots_.size(); ++k) {
    while (roots_[k].width() > max_width) {
      bisect(k);
    }
  }
}

// ---------------------------------------------------------------------------

Polynomial mul_linear(const Polynomial& p, const Rational& alpha) {
  if (alpha.sign() <= 0) {
    throw std::invalid_argument("mul_linear requires alpha > 0, got " + alpha.str());
  }
  return p * Polynomial::linear(alpha);
}

void FamilySpec::validate() const {
  if (m < 1) {
    throw std::invalid_argument("family exponent m must be positive");
  }
  if (blocks.empty() || constants.size() != blocks.size() + 1) {
    throw std::invalid_argument("family needs p >= 1 blocks and p + 1 constants");
  }
  for (const auto& block : blocks) {
    if (block.empty()) {
      throw std::invalid_argument("family blocks must be nonempty");
    }
    for (const auto& alpha : block) {
      if (alpha.sign() <= 0) {
        throw std::invalid_argument("family shifts alpha must be positive");
      }
    }
  }
}

Polynomial build_family(const FamilySpec& spec) {
  spec.validate();
  Polynomial f = Polynomial::constant(spec.constants.front());
  for (std::size_t k = 0; k < spec.blocks.size(); ++k) {
    Polynomial product = Polynomial::constant(1);
    for (const auto& alpha : spec.blocks[k]) {
      product = product * Polynomial::linear(alpha).pow(spec.m);
    }
    f = f * product + Polynomial::constant(spec.constants[k + 1]);
  }
  return f;
}

Polynomial beta_kernel_polynomial(const BetaParams& params, std::span<const Rational> c) {
  params.validate();
  if (c.size() != params.size()) {
    throw std::invalid_argument("coefficient vector length must equal n");
  }
  if (std::all_of(c.begin(), c.end(), [](const Rational& v) { return v.is_zero(); })) {
    throw std::invalid_argument("coefficient vector must not be all zero");
  }
  if (params.size() == 1) {
    return Polynomial::constant(c.front());
  }
  FamilySpec spec;
  spec.m = params.m;
  spec.constants.assign(c.begin(), c.end());
  const auto offsets = params.mu_offsets();
  for (std::size_t k = 0; k + 1 < params.size(); ++k) {
    std::vector<Rational> block;
    for (long l = 0; l < offsets[k + 1] - offsets[k]; ++l) {
      block.push_back(params.mus[k] + Rational(l));
    }
    spec.blocks.push_back(std::move(block));
  }
  return build_family(spec);
}

}  // namespace betamat
