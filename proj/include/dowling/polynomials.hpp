#pragma once

#include "dowling/rational.hpp"

#include <vector>

namespace dowling {

// Dense univariate polynomial over Rational.  Degrees in this library stay
// small (<= ~15), so dense storage is the right fit.  The coefficient list
// never carries trailing zeros except for the zero polynomial itself.
class Polynomial {
 public:
  Polynomial() = default;  // zero polynomial
  explicit Polynomial(const Rational& constant);
  static Polynomial from_coefficients(std::vector<Rational> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(unsigned k) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  // Exact Horner evaluation.
  Rational operator()(const Rational& at) const;

  Polynomial derivative() const;
  // p(s * x), done by scaling coefficient k with s^k.
  Polynomial scale_argument(const Rational& s) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Rational& c);

  bool operator==(const Polynomial&) const = default;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

// Geometric (Fubini) polynomial w_n(x) = sum_k k! S(n,k) x^k.
Polynomial geometric_polynomial(unsigned n);

// Geometric (ordered Bell) number w_n = w_n(1).
Rational geometric_number(unsigned n);

// Noncentral Tanny-Dowling polynomial sum_k k! W(n,k) x^k built on the
// noncentral Whitney triangle for (m, a); degree exactly n with leading
// coefficient n!.  Requires m != 0.
Polynomial noncentral_td(const Rational& m, const Rational& a, unsigned n);

// Tanny-Dowling polynomials on the Whitney triangle.  Variant 1 carries the
// extra m^k weight, variant 2 does not; they are related by x -> m x.
// variant must be 1 or 2, and m != 0.
Polynomial tanny_dowling(int variant, const Rational& m, unsigned n);

// Two-variable geometric polynomial with shift r; the m = 1, a = -r member
// of the noncentral family.
Polynomial geometric_two_variable(const Rational& r, unsigned n);

// One step of the ladder w_{n+1}(x) = x d/dx[(1 + x) w_n(x)].
Polynomial derivative_recurrence_step(const Polynomial& p);

}  // namespace dowling
