#pragma once

#include "dowling/rational.hpp"

#include <vector>

namespace dowling {

// Truncated formal power series over Rational.  coeff(k) is the ordinary
// coefficient of z^k; a series of order N stores coefficients 0..N.  Binary
// operations truncate to the shorter of the two input orders.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(unsigned order) : coeffs_(order + 1) {}

  static TruncatedSeries constant(const Rational& c, unsigned order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }

  static TruncatedSeries from_coefficients(std::vector<Rational> coeffs);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
  const Rational& coeff(unsigned k) const;
  void set_coeff(unsigned k, const Rational& v);
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  // Multiplicative inverse through the truncation order; requires a nonzero
  // constant term (throws std::domain_error otherwise).
  TruncatedSeries reciprocal() const;

  // a_n = n! * coeff(n) for n = 0..order, i.e. the sequence the series
  // generates when read as an exponential generating function.
  std::vector<Rational> egf_values() const;

  friend TruncatedSeries operator+(const TruncatedSeries& a,
                                   const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a,
                                   const TruncatedSeries& b);
  // Cauchy product, truncated.
  friend TruncatedSeries operator*(const TruncatedSeries& a,
                                   const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const Rational& c);

  bool operator==(const TruncatedSeries&) const = default;

 private:
  std::vector<Rational> coeffs_;
};

// Series of exp(c z): coeff(k) = c^k / k!.
TruncatedSeries exp_linear(const Rational& c, unsigned order);

// EGF values of m e^{-a z} / (m - x (e^{m z} - 1)) for n = 0..order.
// Requires m != 0 (throws std::domain_error).
std::vector<Rational> ftilde_egf(const Rational& m, const Rational& a,
                                 const Rational& x, unsigned order);

}  // namespace dowling
