#include "dowling/polynomials.hpp"

#include "dowling/triangles.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace dowling {

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Polynomial Polynomial::from_coefficients(std::vector<Rational> coeffs) {
  Polynomial p;
  p.coeffs_ = std::move(coeffs);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(unsigned k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational Polynomial::operator()(const Rational& at) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * at + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<Rational> d(coeffs_.size() - 1);
  for (unsigned k = 1; k < coeffs_.size(); ++k)
    d[k - 1] = Rational(k) * coeffs_[k];
  return from_coefficients(std::move(d));
}

Polynomial Polynomial::scale_argument(const Rational& s) const {
  std::vector<Rational> scaled(coeffs_.size());
  Rational spow(1);
  for (unsigned k = 0; k < coeffs_.size(); ++k) {
    scaled[k] = coeffs_[k] * spow;
    spow *= s;
  }
  return from_coefficients(std::move(scaled));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> sum(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (unsigned k = 0; k < sum.size(); ++k) sum[k] = a.coeff(k) + b.coeff(k);
  return Polynomial::from_coefficients(std::move(sum));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> diff(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (unsigned k = 0; k < diff.size(); ++k) diff[k] = a.coeff(k) - b.coeff(k);
  return Polynomial::from_coefficients(std::move(diff));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (unsigned i = 0; i < a.coeffs_.size(); ++i)
    for (unsigned j = 0; j < b.coeffs_.size(); ++j)
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial::from_coefficients(std::move(prod));
}

Polynomial operator*(const Polynomial& a, const Rational& c) {
  std::vector<Rational> scaled(a.coeffs_.size());
  for (unsigned k = 0; k < scaled.size(); ++k) scaled[k] = a.coeffs_[k] * c;
  return Polynomial::from_coefficients(std::move(scaled));
}

namespace {

std::mutex geometric_mutex;
std::vector<Polynomial> geometric_cache;

std::mutex td_mutex;
std::map<std::pair<Rational, Rational>, std::vector<Polynomial>> td_cache;

Polynomial build_geometric(unsigned n) {
  std::vector<Rational> coeffs(n + 1);
  for (unsigned k = 0; k <= n; ++k)
    coeffs[k] = Rational(factorial(k) * stirling2(n, k));
  return Polynomial::from_coefficients(std::move(coeffs));
}

Polynomial build_noncentral_td(const Rational& m, const Rational& a,
                               unsigned n) {
  std::vector<Rational> coeffs(n + 1);
  for (unsigned k = 0; k <= n; ++k)
    coeffs[k] = Rational(factorial(k)) * noncentral_whitney(m, a, n, k);
  return Polynomial::from_coefficients(std::move(coeffs));
}

}  // namespace

Polynomial geometric_polynomial(unsigned n) {
  std::lock_guard lock(geometric_mutex);
  while (geometric_cache.size() <= n)
    geometric_cache.push_back(
        build_geometric(static_cast<unsigned>(geometric_cache.size())));
  return geometric_cache[n];
}

Rational geometric_number(unsigned n) {
  return geometric_polynomial(n)(Rational(1));
}

Polynomial noncentral_td(const Rational& m, const Rational& a, unsigned n) {
  if (m == 0) throw std::domain_error("noncentral_td: m must be nonzero");
  std::lock_guard lock(td_mutex);
  auto& cache = td_cache[{m, a}];
  while (cache.size() <= n)
    cache.push_back(
        build_noncentral_td(m, a, static_cast<unsigned>(cache.size())));
  return cache[n];
}

Polynomial tanny_dowling(int variant, const Rational& m, unsigned n) {
  if (variant != 1 && variant != 2)
    throw std::invalid_argument("tanny_dowling: variant must be 1 or 2");
  if (m == 0) throw std::domain_error("tanny_dowling: m must be nonzero");
  std::vector<Rational> coeffs(n + 1);
  Rational mpow(1);
  for (unsigned k = 0; k <= n; ++k) {
    coeffs[k] = Rational(factorial(k)) * whitney(m, n, k);
    if (variant == 1) coeffs[k] *= mpow;
    mpow *= m;
  }
  return Polynomial::from_coefficients(std::move(coeffs));
}

Polynomial geometric_two_variable(const Rational& r, unsigned n) {
  return noncentral_td(Rational(1), -r, n);
}

Polynomial derivative_recurrence_step(const Polynomial& p) {
  static const Polynomial x =
      Polynomial::from_coefficients({Rational(0), Rational(1)});
  static const Polynomial one_plus_x =
      Polynomial::from_coefficients({Rational(1), Rational(1)});
  return x * (one_plus_x * p).derivative();
}

}  // namespace dowling
