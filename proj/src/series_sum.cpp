#include "dowling/series_sum.hpp"

namespace dowling {

Enclosure ftilde_series(const Rational& m, const Rational& a, unsigned n,
                        const Rational& x, const Rational& eps,
                        unsigned max_terms) {
  if (!(m > 0)) throw std::domain_error("ftilde_series: requires m > 0");
  const Rational m_plus_x = m + x;
  if (!(m_plus_x > 0) || !(abs(x) < m_plus_x))
    throw std::domain_error("ftilde_series: requires |x/(m+x)| < 1");
  if (!(eps > 0)) throw std::domain_error("ftilde_series: requires eps > 0");
  if (max_terms == 0)
    throw std::invalid_argument("ftilde_series: max_terms must be positive");

  const Rational q = x / m_plus_x;
  const Rational q_abs = abs(q);
  const Rational prefactor = m / m_plus_x;
  const Rational rho_candidate = (1 + q_abs) / 2;
  const Rational rho = q_abs > rho_candidate ? q_abs : rho_candidate;
  const Rational tail_factor = rho / (1 - rho);

  Rational q_pow(1);
  Rational sum(0);
  Rational bound(0);
  bool in_tail_regime = false;

  for (unsigned k = 0; k < max_terms; ++k) {
    const Rational base = m * k - a;
    const Rational term = q_pow * int_pow(base, n);
    sum += term;

    // The term-ratio bound is monotone once the base is positive, so from
    // here on every later ratio is also <= rho.
    if (base > 0) {
      const Rational ratio_bound = q_abs * int_pow((base + m) / base, n);
      if (ratio_bound <= rho) {
        in_tail_regime = true;
        bound = prefactor * abs(term) * tail_factor;
        if (2 * bound <= eps) {
          const Rational value = prefactor * sum;
          return {value - bound, value + bound, k + 1};
        }
      }
    }
    q_pow *= q;
  }

  const Rational value = prefactor * sum;
  Enclosure partial{value - bound, value + bound, max_terms};
  throw UnconvergedError(
      "ftilde_series: tolerance not reached within " +
          std::to_string(max_terms) + " terms",
      std::move(partial), in_tail_regime);
}

Enclosure geometric_series_value(unsigned n, const Rational& x,
                                 const Rational& eps) {
  return ftilde_series(Rational(1), Rational(0), n, x, eps);
}

}  // namespace dowling
