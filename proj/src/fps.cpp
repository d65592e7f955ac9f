#include "dowling/fps.hpp"

#include <algorithm>
#include <stdexcept>

namespace dowling {

TruncatedSeries TruncatedSeries::from_coefficients(
    std::vector<Rational> coeffs) {
  if (coeffs.empty())
    throw std::invalid_argument("series needs at least the constant term");
  TruncatedSeries s(static_cast<unsigned>(coeffs.size()) - 1);
  s.coeffs_ = std::move(coeffs);
  return s;
}

const Rational& TruncatedSeries::coeff(unsigned k) const {
  static const Rational zero(0);
  return k < coeffs_.size() ? coeffs_[k] : zero;
}

void TruncatedSeries::set_coeff(unsigned k, const Rational& v) {
  if (k >= coeffs_.size())
    throw std::out_of_range("coefficient index beyond truncation order");
  coeffs_[k] = v;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order(), b.order()));
  for (unsigned k = 0; k <= r.order(); ++k)
    r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order(), b.order()));
  for (unsigned k = 0; k <= r.order(); ++k)
    r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order(), b.order()));
  for (unsigned i = 0; i <= r.order(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (unsigned j = 0; i + j <= r.order(); ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const Rational& c) {
  TruncatedSeries r = a;
  for (auto& v : r.coeffs_) v *= c;
  return r;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
  if (coeffs_[0] == 0)
    throw std::domain_error("reciprocal: series has zero constant term");
  TruncatedSeries r(order());
  const Rational inv0 = Rational(1) / coeffs_[0];
  r.coeffs_[0] = inv0;
  for (unsigned n = 1; n <= order(); ++n) {
    Rational acc(0);
    for (unsigned i = 1; i <= n; ++i) acc += coeffs_[i] * r.coeffs_[n - i];
    r.coeffs_[n] = -acc * inv0;
  }
  return r;
}

std::vector<Rational> TruncatedSeries::egf_values() const {
  std::vector<Rational> values(coeffs_.size());
  for (unsigned n = 0; n < coeffs_.size(); ++n)
    values[n] = Rational(factorial(n)) * coeffs_[n];
  return values;
}

TruncatedSeries exp_linear(const Rational& c, unsigned order) {
  TruncatedSeries s(order);
  Rational term(1);  // c^k / k!
  s.set_coeff(0, term);
  for (unsigned k = 1; k <= order; ++k) {
    term = term * c / Rational(k);
    s.set_coeff(k, term);
  }
  return s;
}

std::vector<Rational> ftilde_egf(const Rational& m, const Rational& a,
                                 const Rational& x, unsigned order) {
  if (m == 0) throw std::domain_error("ftilde_egf: m must be nonzero");
  const TruncatedSeries unit = TruncatedSeries::constant(Rational(1), order);
  const TruncatedSeries denominator =
      TruncatedSeries::constant(m, order) - (exp_linear(m, order) - unit) * x;
  const TruncatedSeries numerator = exp_linear(-a, order) * m;
  return (numerator * denominator.reciprocal()).egf_values();
}

}  // namespace dowling
