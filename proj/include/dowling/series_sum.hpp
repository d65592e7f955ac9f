#pragma once

#include "dowling/rational.hpp"

#include <stdexcept>

namespace dowling {

// Exact rational interval certified to contain the value of an infinite
// series: partial sum plus a geometric tail bound.
struct Enclosure {
  Rational lo;
  Rational hi;
  unsigned terms_used = 0;

  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  Rational width() const { return hi - lo; }
};

// Thrown when max_terms is exhausted before the tail bound reaches the
// requested tolerance.  Carries the partial enclosure; it is only certified
// when the geometric tail regime had been reached by the last term, which
// is recorded in `certified`.
class UnconvergedError : public std::runtime_error {
 public:
  UnconvergedError(const std::string& what, Enclosure partial, bool certified)
      : std::runtime_error(what),
        partial_(std::move(partial)),
        certified_(certified) {}

  const Enclosure& partial() const { return partial_; }
  bool certified() const { return certified_; }

 private:
  Enclosure partial_;
  bool certified_;
};

// Certified evaluation of
//   (m / (m + x)) * sum_{k >= 0} (x / (m + x))^k (m k - a)^n,
// which converges to the noncentral Tanny-Dowling value for the parameters.
// Requires m > 0, |x / (m + x)| < 1 (i.e. x > -m/2) and eps > 0; throws
// std::domain_error otherwise.  On success the returned enclosure has
// width <= eps and the true value inside.  Tail control: once m k - a > 0
// and |q| ((m(k+1) - a)/(m k - a))^n <= rho with q = x/(m+x) and
// rho = max(|q|, (1+|q|)/2) < 1, the terms decay at least geometrically
// with ratio rho, so |tail| <= |term_k| rho / (1 - rho).
Enclosure ftilde_series(const Rational& m, const Rational& a, unsigned n,
                        const Rational& x, const Rational& eps,
                        unsigned max_terms = 10000);

// The m = 1, a = 0 member: w_n(x) = (1/(x+1)) sum_k (x/(x+1))^k k^n,
// valid for x > -1/2.  At x = 1 this sums k^n / 2^{k+1}.
Enclosure geometric_series_value(unsigned n, const Rational& x,
                                 const Rational& eps);

}  // namespace dowling
