#include "dowling/identities.hpp"

#include "dowling/fps.hpp"
#include "dowling/polynomials.hpp"
#include "dowling/triangles.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <tuple>

namespace dowling::identities {

std::string to_string(Variant v) {
  return v == Variant::as_printed ? "as-printed" : "corrected";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::fails:
      return "fails";
    default:
      return "skipped";
  }
}

std::optional<Variant> variant_from_string(const std::string& s) {
  if (s == "as-printed") return Variant::as_printed;
  if (s == "corrected") return Variant::corrected;
  return std::nullopt;
}

namespace {

using P = IdentityParams;

Rational rbinom(unsigned n, unsigned k) { return Rational(binomial(n, k)); }
Rational rfact(unsigned k) { return Rational(factorial(k)); }
Rational pw(const Rational& b, long long e) { return int_pow(b, e); }
Rational sign_pow(unsigned e) { return e % 2 ? Rational(-1) : Rational(1); }

// Tolerance and term budget for the series-backed tags; pinned to match the
// guarantees the rest of the suite asserts.
const Rational& series_eps() {
  static const Rational eps = pw(Rational(10), -20);
  return eps;
}
constexpr unsigned kSeriesMaxTerms = 10000;

// Memoized point values of the polynomial families.  One Evaluator lives for
// the duration of a sweep; the underlying triangles and polynomials carry
// their own process-lifetime caches.
class Evaluator {
 public:
  // w_n(y)
  const Rational& w(unsigned n, const Rational& y) {
    const auto key = std::make_pair(n, y);
    auto it = w_values_.find(key);
    if (it == w_values_.end())
      it = w_values_.emplace(key, geometric_polynomial(n)(y)).first;
    return it->second;
  }

  Rational w_number(unsigned n) { return w(n, Rational(1)); }

  // Noncentral Tanny-Dowling value at (m, a; n; x).
  const Rational& ft(const Rational& m, const Rational& a, unsigned n,
                     const Rational& x) {
    const auto key = std::make_tuple(m, a, n, x);
    auto it = ft_values_.find(key);
    if (it == ft_values_.end())
      it = ft_values_.emplace(key, noncentral_td(m, a, n)(x)).first;
    return it->second;
  }

 private:
  std::map<std::pair<unsigned, Rational>, Rational> w_values_;
  std::map<std::tuple<Rational, Rational, unsigned, Rational>, Rational>
      ft_values_;
};

struct CheckOutcome {
  Rational lhs;
  Rational rhs;
  std::optional<Enclosure> enclosure;
};

struct IdentityDef {
  IdentityInfo info;
  // Returns a skip reason when the instance violates the identity's value
  // preconditions (singular points, sign constraints).
  std::function<std::optional<std::string>(const P&)> skip;
  std::function<CheckOutcome(Evaluator&, const P&, Variant)> eval;
};

std::optional<std::string> no_skip(const P&) { return std::nullopt; }

std::optional<std::string> need_m_nonzero(const P& p) {
  if (*p.m == 0) return "m must be nonzero";
  return std::nullopt;
}

CheckOutcome series_check(Evaluator&, const Rational& m, const Rational& a,
                          unsigned n, const Rational& x,
                          const Rational& target) {
  Enclosure enc = ftilde_series(m, a, n, x, series_eps(), kSeriesMaxTerms);
  const Rational mid = (enc.lo + enc.hi) / 2;
  return {target, mid, std::move(enc)};
}

std::optional<std::string> series_domain(const Rational& m, const Rational& x) {
  if (!(m > 0)) return "series requires m > 0";
  if (!(m + x > 0) || !(abs(x) < m + x)) return "requires |x/(m+x)| < 1";
  return std::nullopt;
}

using param_use::a;
using param_use::a_pair;
using param_use::m;
using param_use::r;
using param_use::x;
using param_use::x_pair;

// The catalog.  Every displayed identity maps to one tag; the `statement`
// strings give the as-printed form, with F(m,a;n;x) the noncentral
// Tanny-Dowling polynomial, W(m,a;n,k) the noncentral Whitney numbers,
// T(m;n,k) the translated Whitney numbers and w_n the geometric polynomials.
// Erratum candidates additionally carry a corrected variant, re-derived from
// the defining triangle (see README); those forms are spelled out inline.
std::vector<IdentityDef> build_catalog() {
  std::vector<IdentityDef> defs;

  auto add = [&defs](IdentityInfo info,
                     std::function<std::optional<std::string>(const P&)> skip,
                     std::function<CheckOutcome(Evaluator&, const P&, Variant)>
                         eval) {
    defs.push_back({std::move(info), std::move(skip), std::move(eval)});
  };

  // --- generating-function cross-checks -------------------------------

  add({"W_EGF", "EGF[1/(1 - x(e^z - 1))]_n = w_n(x)", false, false, 0, 0, x},
      no_skip, [](Evaluator& ev, const P& p, Variant) -> CheckOutcome {
        const unsigned n = p.n;
        const auto unit = TruncatedSeries::constant(Rational(1), n);
        const auto series =
            (unit - (exp_linear(Rational(1), n) - unit) * *p.x).reciprocal();
        return {series.egf_values()[n], ev.w(n, *p.x), {}};
      });

  add({"W_DERIV_REC", "w_{n+1}(x) = x d/dx[(1 + x) w_n(x)]", false, false, 0,
       0, x},
      no_skip, [](Evaluator& ev, const P& p, Variant) -> CheckOutcome {
        const Polynomial stepped =
            derivative_recurrence_step(geometric_polynomial(p.n));
        return {stepped(*p.x), ev.w(p.n + 1, *p.x), {}};
      });

  add({"F1_EGF", "EGF[e^z/(1 - x(e^{mz} - 1))]_n = F1(m;n;x)", false, false, 0,
       0, m | x},
      need_m_nonzero, [](Evaluator&, const P& p, Variant) -> CheckOutcome {
        const unsigned n = p.n;
        const auto unit = TruncatedSeries::constant(Rational(1), n);
        const auto series = exp_linear(Rational(1), n) *
                            (unit - (exp_linear(*p.m, n) - unit) * *p.x)
                                .reciprocal();
        return {series.egf_values()[n], tanny_dowling(1, *p.m, n)(*p.x), {}};
      });

  add({"F2_EGF", "EGF[e^z/(1 - (x/m)(e^{mz} - 1))]_n = F2(m;n;x)", false,
       false, 0, 0, m | x},
      need_m_nonzero, [](Evaluator&, const P& p, Variant) -> CheckOutcome {
        const unsigned n = p.n;
        const auto unit = TruncatedSeries::constant(Rational(1), n);
        const auto series =
            exp_linear(Rational(1), n) *
            (unit - (exp_linear(*p.m, n) - unit) * (*p.x / *p.m)).reciprocal();
        return {series.egf_values()[n], tanny_dowling(2, *p.m, n)(*p.x), {}};
      });

  add({"FT_EGF", "EGF[m e^{-az}/(m - x(e^{mz} - 1))]_n = F(m,a;n;x)", false,
       false, 0, 0, m | a | x},
      need_m_nonzero, [](Evaluator& ev, const P& p, Variant) -> CheckOutcome {
        return {ftilde_egf(*p.m, *p.a, *p.x, p.n)[p.n],
                ev.ft(*p.m, *p.a, p.n, *p.x),
                {}};
      });

  // --- specializations of the noncentral family -----------------------

  add({"SPEC_A0", "F(m,0;n;x) = w_n(x/m)   [corrected: m^n w_n(x/m)]", true,
       true, 0, 0, m | x},
      need_m_nonzero,
      [](Evaluator& ev, const P& p, Variant v) -> CheckOutcome {
        Rational rhs = ev.w(p.n, *p.x / *p.m);
        if (v == Variant::corrected) rhs *= pw(*p.m, p.n);
        return {ev.ft(*p.m, Rational(0), p.n, *p.x), rhs, {}};
      });

  add({"SPEC_AM1", "F(m,-1;n;x) = F2(m;n;x)", false, false, 0, 0, m | x},
      need_m_nonzero, [](Evaluator& ev, const P& p, Variant) -> CheckOutcome {
        return {ev.ft(*p.m, Rational(-1), p.n, *p.x),
                tanny_dowling(2, *p.m, p.n)(*p.x),
                {}};
      });

  add({"SPEC_1MR", "F(1,-r;n;x) = w_n(r;x) (two-variable EGF)", false, false,
       0, 0, r | x},
      no_skip, [](Evaluator& ev, const P& p, Variant) -> CheckOutcome {
        const unsigned n = p.n;
        const auto unit = TruncatedSeries::constant(Rational(1), n);
        const auto series =
            exp_linear(*p.r, n) *
            (unit - (exp_linear(Rational(1), n) - unit) * *p.x).reciprocal();
        return {series.egf_values()[n], ev.ft(Rational(1), -*p.r, n, *p.x), {}};
      });

  // --- binomial convolution formulas ----------------------------------

  add({"THM1", "F(m,a;n;x) = sum_k C(n,k) m^k w_k(x/m) (-a)^{n-k}", false,
       false, 0, 0, m | a | x},
      need_m_nonzero, [](Evaluator& ev, const P& p, Variant) -> CheckOutcome {
        Rational rhs(0);
        for (unsigned k = 0; k <= p.n; ++k)
          rhs += rbinom(p.n, k) * pw(*p.m, k) * ev.w(k, *p.x / *p.m) *
                 pw(-*p.a, p.n - k);
        return {ev.ft(*p.m, *p.a, p.n, *p.x), rhs, {}};
      });

  add({"KARGIN_E13", "w_n(r;x) = sum_k C(n,k) w_k(x) r^{n-k}", false, false, 0,
       0, r | x},
      no_skip, [](Evaluator& ev, const P& p, Variant) -> CheckOutcome {
        Rational rhs(0);
        for (unsigned k = 0; k <= p.n; ++k)
          rhs += rbinom(p.n, k) * ev.w(k, *p.x) * pw(*p.r, p.n - k);
        return {ev.ft(Rational(1), -*p.r, p.n, *p.x), rhs, {}};
      });

  add({"THM2", "x F(m,a-m;n;x) = (m + x) F(m,a;n;x) - (-a)^n m", false, false,
       0, 0, m | a | x},
      need_m_nonzero, [](Evaluator& ev, const P& p, Variant) -> CheckOutcome {
        return {*p.x * ev.ft(*p.m, *p.a - *p.m, p.n, *p.x),
                (*p.m + *p.x) * ev.ft(*p.m, *p.a, p.n, *p.x) -
                    pw(-*p.a, p.n) * *p.m,
                {}};
      });

  add({"KARGIN_E14", "x w_n(r+1;x) = (1 + x) w_n(r;x) - r^n", false, false, 0,
       0, r | x},
      no_skip, [](Evaluator& ev, const P& p, Variant) -> CheckOutcome {
        return {*p.x * ev.ft(Rational(1), -(*p.r + 1), p.n, *p.x),
                (1 + *p.x) * ev.ft(Rational(1), -*p.r, p.n, *p.x) -
                    pw(*p.r, p.n),
                {}};
      });

  // a = 0 and a = m cases of THM2.  The as-printed forms use the m-free
  // reading of F(m,0;n;x); the corrected ones restore the m^n factor (and,
  // for the a = 0 case, the 0^n m boundary term that makes n = 0 work).
  add({"SPEC_6TH",
       "x F(m,-m;n;x) = (m + x) w_n(x/m)   [corrected: (m + x) m^n w_n(x/m) "
       "- 0^n m]",
       true, true, 1, 0, m | x},
      need_m_nonzero,
      [](Evaluator& ev, const P& p, Variant v) -> CheckOutcome {
        const Rational lhs = *p.x * ev.ft(*p.m, -*p.m, p.n, *p.x);
        Rational rhs;
        if (v == Variant::as_printed) {
          rhs = (*p.m + *p.x) * ev.w(p.n, *p.x / *p.m);
        } else {
          rhs = (*p.m + *p.x) * pw(*p.m, p.n) * ev.w(p.n, *p.x / *p.m) -
                pw(Rational(0), p.n) * *p.m;
        }
        return {lhs, rhs, {}};
      });

  add({"SPEC_7TH",
       "(m + x) F(m,m;n;x) = x w_n(x/m) - (-m)^{n+1}   [corrected: x m^n "
       "w_n(x/m) - (-m)^{n+1}]",
       true, true, 0, 0, m | x},
      need_m_nonzero,
      [](Evaluator& ev, const P& p, Variant v) -> CheckOutcome {
        const Rational lhs = (*p.m + *p.x) * ev.ft(*p.m, *p.m, p.n, *p.x);
        Rational scale =
            v == Variant::corrected ? pw(*p.m, p.n) : Rational(1);
        const Rational rhs =
            *p.x * scale * ev.w(p.n, *p.x / *p.m) - pw(-*p.m, p.n + 1);
        return {lhs, rhs, {}};
      });

  add({"SPEC_8TH",
       "x m^n sum_k C(n,k) w_k(x/m) = (m + x) w_n(x/m)   [corrected, n >= 1: "
       "x sum_k C(n,k) w_k(x/m) = (m + x) w_n(x/m)]",
       true, true, 1, 1, m | x},
      need_m_nonzero,
      [](Evaluator& ev, const P& p, Variant v) -> CheckOutcome {
        Rational sum(0);
        for (unsigned k = 0; k <= p.n; ++k)
          sum += rbinom(p.n, k) * ev.w(k, *p.x / *p.m);
        Rational lhs = *p.x * sum;
        if (v == Variant::as_printed) lhs *= pw(*p.m, p.n);
        return {lhs, (*p.m + *p.x) * ev.w(p.n, *p.x / *p.m), {}};
      });

  add({"SPEC_9TH",
       "(m + x) m^n sum_k C(n,k) (-1)^{n-k} w_k(x/m) = x w_n(x/m) - "
       "(-m)^{n+1}   [corrected: (m + x) sum_k C(n,k) (-1)^{n-k} w_k(x/m) = "
       "x w_n(x/m) + (-1)^n m]",
       true, true, 0, 0, m | x},
      need_m_nonzero,
      [](Evaluator& ev, const P& p, Variant v) -> CheckOutcome {
        Rational sum(0);
        for (unsigned k = 0; k <= p.n; ++k)
          sum += rbinom(p.n, k) * sign_pow(p.n - k) * ev.w(k, *p.x / *p.m);
        Rational lhs = (*p.m + *p.x) * sum;
        Rational rhs;
        if (v == Variant::as_printed) {
          lhs *= pw(*p.m, p.n);
          rhs = *p.x * ev.w(p.n, *p.x / *p.m) - pw(-*p.m, p.n + 1);
        } else {
          rhs = *p.x * ev.w(p.n, *p.x / *p.m) + sign_pow(p.n) * *p.m;
        }
        return {lhs, rhs, {}};
      });

  add({"DILKURT_1", "sum_k C(n,k) w_k = 2 w_n   (n >= 1)", false, false, 1, 1,
       0},
      no_skip, [](Evaluator& ev, const P& p, Variant) -> CheckOutcome {
        Rational lhs(0);
        for (unsigned k = 0; k <= p.n; ++k)
          lhs += rbinom(p.n, k) * ev.w_number(k);
        return {lhs, 2 * ev.w_number(p.n), {}};
      });

  add({"DILKURT_2", "2 sum_k C(n,k) (-1)^k w_k = (-1)^n w_n + 1   (n >= 1)",
       false, false, 1, 1, 0},
      no_skip, [](Evaluator& ev, const P& p, Variant) -> CheckOutcome {
        Rational lhs(0);
        for (unsigned k = 0; k <= p.n; ++k)
          lhs += rbinom(p.n, k) * sign_pow(k) * ev.w_number(k);
        return {2 * lhs, sign_pow(p.n) * ev.w_number(p.n) + 1, {}};
      });

  // --- sums of products ------------------------------------------------

  add({"THM3",
       "x sum_k C(n,k) F(m,a1;k;x) F(m,a2;n-k;x) = F(m,A;n+1;x) + A "
       "F(m,A;n;x),  A = a1 + a2 + m",
       false, false, 0, 0, m | a_pair | x},
      need_m_nonzero, [](Evaluator& ev, const P& p, Variant) -> CheckOutcome {
        const Rational abar = *p.a1 + *p.a2 + *p.m;
        Rational sum(0);
        for (unsigned k = 0; k <= p.n; ++k)
          sum += rbinom(p.n, k) * ev.ft(*p.m, *p.a1, k, *p.x) *
                 ev.ft(*p.m, *p.a2, p.n - k, *p.x);
        return {*p.x * sum,
                ev.ft(*p.m, abar, p.n + 1, *p.x) +
                    abar * ev.ft(*p.m, abar, p.n, *p.x),
                {}};
      });

  add({"SPEC_11TH",
       "(m + x) sum_k C(n,k) w_k(x/m) w_{n-k}(x/m) = w_{n+1}(x/m) + m "
       "w_n(x/m)   [corrected: m (w_{n+1}(x/m) + w_n(x/m))]",
       true, true, 0, 0, m | x},
      need_m_nonzero,
      [](Evaluator& ev, const P& p, Variant v) -> CheckOutcome {
        const Rational y = *p.x / *p.m;
        Rational sum(0);
        for (unsigned k = 0; k <= p.n; ++k)
          sum += rbinom(p.n, k) * ev.w(k, y) * ev.w(p.n - k, y);
        const Rational lhs = (*p.m + *p.x) * sum;
        Rational rhs;
        if (v == Variant::as_printed)
          rhs = ev.w(p.n + 1, y) + *p.m * ev.w(p.n, y);
        else
          rhs = *p.m * (ev.w(p.n + 1, y) + ev.w(p.n, y));
        return {lhs, rhs, {}};
      });

  add({"KARGIN1",
       "(x + 1) sum_k C(n,k) w_k(x) w_{n-k}(x) = w_{n+1}(x) + w_n(x)", false,
       false, 0, 0, x},
      no_skip, [](Evaluator& ev, const P& p, Variant) -> CheckOutcome {
        Rational sum(0);
        for (unsigned k = 0; k <= p.n; ++k)
          sum += rbinom(p.n, k) * ev.w(k, *p.x) * ev.w(p.n - k, *p.x);
        return {(*p.x + 1) * sum, ev.w(p.n + 1, *p.x) + ev.w(p.n, *p.x), {}};
      });

  add({"THM4",
       "(x2 - x1) sum_k C(n,k) F(m,a1;k;x1) F(m,a2;n-k;x2) = x2 "
       "F(m,a1+a2;n;x2) - x1 F(m,a1+a2;n;x1)   (x1 != x2)",
       false, false, 0, 0, m | a_pair | x_pair},
      [](const P& p) -> std::optional<std::string> {
        if (*p.m == 0) return "m must be nonzero";
        if (*p.x1 == *p.x2) return "requires x1 != x2";
        return std::nullopt;
      },
      [](Evaluator& ev, const P& p, Variant) -> CheckOutcome {
        Rational sum(0);
        for (unsigned k = 0; k <= p.n; ++k)
          sum += rbinom(p.n, k) * ev.ft(*p.m, *p.a1, k, *p.x1) *
                 ev.ft(*p.m, *p.a2, p.n - k, *p.x2);
        const Rational asum = *p.a1 + *p.a2;
        return {(*p.x2 - *p.x1) * sum,
                *p.x2 * ev.ft(*p.m, asum, p.n, *p.x2) -
                    *p.x1 * ev.ft(*p.m, asum, p.n, *p.x1),
                {}};
      });

  // In the a1 = a2 = 0 reduction the m^n factors cancel between the two
  // sides, so the printed w-form is consistent for every m; the corrected
  // variant spells the cancellation out by routing the left side through the
  // noncentral family itself.
  add({"SPEC_THM4_A0",
       "(x2 - x1) sum_k C(n,k) w_k(x1/m) w_{n-k}(x2/m) = x2 w_n(x2/m) - x1 "
       "w_n(x1/m)   (x1 != x2)",
       true, false, 0, 0, m | x_pair},
      [](const P& p) -> std::optional<std::string> {
        if (*p.m == 0) return "m must be nonzero";
        if (*p.x1 == *p.x2) return "requires x1 != x2";
        return std::nullopt;
      },
      [](Evaluator& ev, const P& p, Variant v) -> CheckOutcome {
        const Rational w_side = *p.x2 * ev.w(p.n, *p.x2 / *p.m) -
                                *p.x1 * ev.w(p.n, *p.x1 / *p.m);
        Rational sum(0);
        if (v == Variant::as_printed) {
          for (unsigned k = 0; k <= p.n; ++k)
            sum += rbinom(p.n, k) * ev.w(k, *p.x1 / *p.m) *
                   ev.w(p.n - k, *p.x2 / *p.m);
          return {(*p.x2 - *p.x1) * sum, w_side, {}};
        }
        for (unsigned k = 0; k <= p.n; ++k)
          sum += rbinom(p.n, k) * ev.ft(*p.m, Rational(0), k, *p.x1) *
                 ev.ft(*p.m, Rational(0), p.n - k, *p.x2);
        return {(*p.x2 - *p.x1) * sum, pw(*p.m, p.n) * w_side, {}};
      });

  add({"KARGIN2",
       "(x2 - x1) sum_k C(n,k) w_k(x1) w_{n-k}(x2) = x2 w_n(x2) - x1 w_n(x1) "
       "  (x1 != x2)",
       false, false, 0, 0, x_pair},
      [](const P& p) -> std::optional<std::string> {
        if (*p.x1 == *p.x2) return "requires x1 != x2";
        return std::nullopt;
      },
      [](Evaluator& ev, const P& p, Variant) -> CheckOutcome {
        Rational sum(0);
        for (unsigned k = 0; k <= p.n; ++k)
          sum += rbinom(p.n, k) * ev.w(k, *p.x1) * ev.w(p.n - k, *p.x2);
        return {(*p.x2 - *p.x1) * sum,
                *p.x2 * ev.w(p.n, *p.x2) - *p.x1 * ev.w(p.n, *p.x1),
                {}};
      });

  // --- inversion, reflection and explicit formulas ---------------------

  // The printed inverse already carries the m^n factor, so the corrected
  // variant coincides with the as-printed one.
  add({"BININV", "m^n w_n(x/m) = sum_j C(n,j) a^{n-j} F(m,a;j;x)", true, false,
       0, 0, m | a | x},
      need_m_nonzero, [](Evaluator& ev, const P& p, Variant) -> CheckOutcome {
        Rational rhs(0);
        for (unsigned j = 0; j <= p.n; ++j)
          rhs += rbinom(p.n, j) * pw(*p.a, p.n - j) * ev.ft(*p.m, *p.a, j, *p.x);
        return {pw(*p.m, p.n) * ev.w(p.n, *p.x / *p.m), rhs, {}};
      });

  add({"REFLECT", "F(m,a;n;x-m) = (-1)^n F(m,-a-m;n;-x)", false, false, 0, 0,
       m | a | x},
      need_m_nonzero, [](Evaluator& ev, const P& p, Variant) -> CheckOutcome {
        return {ev.ft(*p.m, *p.a, p.n, *p.x - *p.m),
                sign_pow(p.n) * ev.ft(*p.m, -*p.a - *p.m, p.n, -*p.x),
                {}};
      });

  add({"THM5",
       "(m + x) F(m,a;n;x) = x sum_k (-1)^{n+k} k! W(m,-a;n,k) (m + x)^k + "
       "(-a)^n m   (x != -m)",
       false, false, 0, 0, m | a | x},
      [](const P& p) -> std::optional<std::string> {
        if (*p.m == 0) return "m must be nonzero";
        if (*p.x == -*p.m) return "requires x != -m";
        return std::nullopt;
      },
      [](Evaluator& ev, const P& p, Variant) -> CheckOutcome {
        Rational sum(0);
        for (unsigned k = 0; k <= p.n; ++k)
          sum += sign_pow(p.n + k) * rfact(k) *
                 noncentral_whitney(*p.m, -*p.a, p.n, k) * pw(*p.m + *p.x, k);
        return {(*p.m + *p.x) * ev.ft(*p.m, *p.a, p.n, *p.x),
                *p.x * sum + pw(-*p.a, p.n) * *p.m,
                {}};
      });

  // a = 0 case of THM5, in Stirling and translated-Whitney notation.  Both
  // are stated for n >= 1 (the n = 0 boundary term is dropped); the printed
  // left side is again short one m^n.
  auto explicit_a0 = [](Evaluator& ev, const P& p, Variant v,
                        bool translated) -> CheckOutcome {
    Rational sum(0);
    for (unsigned k = 0; k <= p.n; ++k) {
      const Rational entry = translated
                                 ? translated_whitney(*p.m, p.n, k)
                                 : pw(*p.m, static_cast<long long>(p.n) - k) *
                                       Rational(stirling2(p.n, k));
      sum += sign_pow(p.n + k) * rfact(k) * entry * pw(*p.m + *p.x, k);
    }
    Rational lhs = (*p.m + *p.x) * ev.w(p.n, *p.x / *p.m);
    if (v == Variant::corrected) lhs *= pw(*p.m, p.n);
    return {lhs, *p.x * sum, {}};
  };

  add({"SPEC_17TH",
       "(m + x) w_n(x/m) = x sum_k (-1)^{n+k} k! m^{n-k} S(n,k) (m + x)^k   "
       "(n >= 1)   [corrected: (m + x) m^n w_n(x/m) = ...]",
       true, true, 1, 1, m | x},
      [](const P& p) -> std::optional<std::string> {
        if (*p.m == 0) return "m must be nonzero";
        if (*p.x == -*p.m) return "requires x != -m";
        return std::nullopt;
      },
      [explicit_a0](Evaluator& ev, const P& p, Variant v) {
        return explicit_a0(ev, p, v, false);
      });

  add({"SPEC_18TH",
       "(m + x) w_n(x/m) = x sum_k (-1)^{n+k} k! T(m;n,k) (m + x)^k   (n >= "
       "1)   [corrected: (m + x) m^n w_n(x/m) = ...]",
       true, true, 1, 1, m | x},
      [](const P& p) -> std::optional<std::string> {
        if (*p.m == 0) return "m must be nonzero";
        if (*p.x == -*p.m) return "requires x != -m";
        return std::nullopt;
      },
      [explicit_a0](Evaluator& ev, const P& p, Variant v) {
        return explicit_a0(ev, p, v, true);
      });

  add({"KARGIN3",
       "(x + 1) w_n(x) = x sum_{k>=1} S(n,k) (-1)^{n+k} k! (x + 1)^k   (n >= "
       "1)",
       false, false, 1, 1, x},
      [](const P& p) -> std::optional<std::string> {
        if (*p.x == -1) return "requires x != -1";
        return std::nullopt;
      },
      [](Evaluator& ev, const P& p, Variant) -> CheckOutcome {
        Rational sum(0);
        for (unsigned k = 1; k <= p.n; ++k)
          sum += Rational(stirling2(p.n, k)) * sign_pow(p.n + k) * rfact(k) *
                 pw(*p.x + 1, k);
        return {(*p.x + 1) * ev.w(p.n, *p.x), *p.x * sum, {}};
      });

  // --- translated Whitney rows -----------------------------------------

  // Row checks: each k in 0..n is compared; the report carries the first
  // mismatching pair, or the matching row sums when everything agrees.
  add({"TW_REC", "T(m;n,k) = T(m;n-1,k-1) + m k T(m;n-1,k)   (n >= 1)", false,
       false, 1, 1, m},
      no_skip, [](Evaluator&, const P& p, Variant) -> CheckOutcome {
        Rational lhs_sum(0), rhs_sum(0);
        for (unsigned k = 0; k <= p.n; ++k) {
          const Rational lhs = translated_whitney(*p.m, p.n, k);
          const Rational rhs =
              (k > 0 ? translated_whitney(*p.m, p.n - 1, k - 1) : Rational(0)) +
              *p.m * k * translated_whitney(*p.m, p.n - 1, k);
          if (lhs != rhs) return {lhs, rhs, {}};
          lhs_sum += lhs;
          rhs_sum += rhs;
        }
        return {lhs_sum, rhs_sum, {}};
      });

  add({"TW_EXPLICIT",
       "m^k k! T(m;n,k) = sum_j (-1)^{k-j} C(k,j) (m j)^n   (all k <= n)",
       false, false, 0, 0, m},
      need_m_nonzero, [](Evaluator&, const P& p, Variant) -> CheckOutcome {
        Rational lhs_sum(0), rhs_sum(0);
        for (unsigned k = 0; k <= p.n; ++k) {
          const Rational lhs =
              pw(*p.m, k) * rfact(k) * translated_whitney(*p.m, p.n, k);
          Rational rhs(0);
          for (unsigned j = 0; j <= k; ++j)
            rhs += sign_pow(k - j) * rbinom(k, j) * pw(*p.m * j, p.n);
          if (lhs != rhs) return {lhs, rhs, {}};
          lhs_sum += lhs;
          rhs_sum += rhs;
        }
        return {lhs_sum, rhs_sum, {}};
      });

  // --- argument-halving formulas ----------------------------------------

  add({"HALF_ARG",
       "(m + 2x) F(m,2a;n;x) = 2^{n+1} (m + x) F(m,a;n;x^2/(m+2x)) - m "
       "F(m,2a;n;-mx/(m+2x))   (x != -m/2)",
       false, false, 0, 0, m | a | x},
      [](const P& p) -> std::optional<std::string> {
        if (*p.m == 0) return "m must be nonzero";
        if (2 * *p.x == -*p.m) return "requires x != -m/2";
        return std::nullopt;
      },
      [](Evaluator& ev, const P& p, Variant) -> CheckOutcome {
        const Rational denom = *p.m + 2 * *p.x;
        const Rational lhs = denom * ev.ft(*p.m, 2 * *p.a, p.n, *p.x);
        const Rational rhs =
            pw(Rational(2), p.n + 1) * (*p.m + *p.x) *
                ev.ft(*p.m, *p.a, p.n, *p.x * *p.x / denom) -
            *p.m * ev.ft(*p.m, 2 * *p.a, p.n, -*p.m * *p.x / denom);
        return {lhs, rhs, {}};
      });

  add({"THM6",
       "(m + 2x)^{n+1} F(m,2a;n;x) = sum_k k! x^k (m + 2x)^{n-k} [2^{n+1} (m "
       "+ x) x^k W(m,a;n,k) + (-m)^{k+1} W(m,2a;n,k)]   (x != -m/2)",
       false, false, 0, 0, m | a | x},
      [](const P& p) -> std::optional<std::string> {
        if (*p.m == 0) return "m must be nonzero";
        if (2 * *p.x == -*p.m) return "requires x != -m/2";
        return std::nullopt;
      },
      [](Evaluator& ev, const P& p, Variant) -> CheckOutcome {
        const Rational denom = *p.m + 2 * *p.x;
        const Rational two_pow = pw(Rational(2), p.n + 1);
        Rational rhs(0);
        for (unsigned k = 0; k <= p.n; ++k)
          rhs += rfact(k) * pw(*p.x, k) *
                 pw(denom, static_cast<long long>(p.n) - k) *
                 (two_pow * (*p.m + *p.x) * pw(*p.x, k) *
                      noncentral_whitney(*p.m, *p.a, p.n, k) +
                  pw(-*p.m, k + 1) *
                      noncentral_whitney(*p.m, 2 * *p.a, p.n, k));
        return {pw(denom, p.n + 1) * ev.ft(*p.m, 2 * *p.a, p.n, *p.x), rhs, {}};
      });

  add({"SPEC_20TH",
       "(m + 2x)^{n+1} w_n(x/m) = sum_k k! x^k T(m;n,k) (m + 2x)^{n-k} "
       "[2^{n+1} (m + x) x^k + (-m)^{k+1}]   [corrected: (m + 2x)^{n+1} m^n "
       "w_n(x/m) = ...]",
       true, true, 0, 0, m | x},
      [](const P& p) -> std::optional<std::string> {
        if (*p.m == 0) return "m must be nonzero";
        if (2 * *p.x == -*p.m) return "requires x != -m/2";
        return std::nullopt;
      },
      [](Evaluator& ev, const P& p, Variant v) -> CheckOutcome {
        const Rational denom = *p.m + 2 * *p.x;
        const Rational two_pow = pw(Rational(2), p.n + 1);
        Rational rhs(0);
        for (unsigned k = 0; k <= p.n; ++k)
          rhs += rfact(k) * pw(*p.x, k) * translated_whitney(*p.m, p.n, k) *
                 pw(denom, static_cast<long long>(p.n) - k) *
                 (two_pow * (*p.m + *p.x) * pw(*p.x, k) + pw(-*p.m, k + 1));
        Rational lhs = pw(denom, p.n + 1) * ev.w(p.n, *p.x / *p.m);
        if (v == Variant::corrected) lhs *= pw(*p.m, p.n);
        return {lhs, rhs, {}};
      });

  add({"KARGIN4",
       "(2x + 1)^{n+1} w_n(x) = sum_k S(n,k) k! x^k (2x + 1)^{n-k} [2^{n+1} "
       "(x + 1) x^k + (-1)^{k+1}]   (x != -1/2)",
       false, false, 0, 0, x},
      [](const P& p) -> std::optional<std::string> {
        if (2 * *p.x == -1) return "requires x != -1/2";
        return std::nullopt;
      },
      [](Evaluator& ev, const P& p, Variant) -> CheckOutcome {
        const Rational denom = 2 * *p.x + 1;
        const Rational two_pow = pw(Rational(2), p.n + 1);
        Rational rhs(0);
        for (unsigned k = 0; k <= p.n; ++k)
          rhs += Rational(stirling2(p.n, k)) * rfact(k) * pw(*p.x, k) *
                 pw(denom, static_cast<long long>(p.n) - k) *
                 (two_pow * (*p.x + 1) * pw(*p.x, k) + sign_pow(k + 1));
        return {pw(denom, p.n + 1) * ev.w(p.n, *p.x), rhs, {}};
      });

  // --- infinite-series formulas (certified enclosures) ------------------

  add({"SERIES_21",
       "F(m,a;n;x) = (m/(m+x)) sum_{k>=0} (x/(m+x))^k (mk - a)^n   (m > 0, "
       "|x/(m+x)| < 1)",
       false, false, 0, 0, m | a | x},
      [](const P& p) { return series_domain(*p.m, *p.x); },
      [](Evaluator& ev, const P& p, Variant) -> CheckOutcome {
        return series_check(ev, *p.m, *p.a, p.n, *p.x,
                            ev.ft(*p.m, *p.a, p.n, *p.x));
      });

  // a = 0 case.  The series itself sums to F(m,0;n;x) = m^n w_n(x/m); the
  // printed reduction claims it equals w_n(x/m) with an m^{n+1}/(m+x)
  // prefactor, one m^n too large.  Corrected: prefactor m/(m+x).
  add({"SPEC_22ND",
       "w_n(x/m) = (m^{n+1}/(m+x)) sum_{k>=0} (x/(m+x))^k k^n   [corrected: "
       "prefactor m/(m+x)]",
       true, true, 0, 0, m | x},
      [](const P& p) { return series_domain(*p.m, *p.x); },
      [](Evaluator& ev, const P& p, Variant v) -> CheckOutcome {
        // Enclosure of (m/(m+x)) sum (x/(m+x))^k (mk)^n, i.e. m^n times the
        // printed right-hand side without its m^n surplus.
        Rational target = ev.w(p.n, *p.x / *p.m);
        if (v == Variant::corrected) target *= pw(*p.m, p.n);
        return series_check(ev, *p.m, Rational(0), p.n, *p.x, target);
      });

  add({"SERIES_23",
       "w_n(x) = (1/(x+1)) sum_{k>=0} (x/(x+1))^k k^n   (x > -1/2)", false,
       false, 0, 0, x},
      [](const P& p) { return series_domain(Rational(1), *p.x); },
      [](Evaluator& ev, const P& p, Variant) -> CheckOutcome {
        return series_check(ev, Rational(1), Rational(0), p.n, *p.x,
                            ev.w(p.n, *p.x));
      });

  add({"SERIES_24", "w_n = sum_{k>=0} k^n / 2^{k+1}", false, false, 0, 0, 0},
      no_skip, [](Evaluator& ev, const P& p, Variant) -> CheckOutcome {
        return series_check(ev, Rational(1), Rational(0), p.n, Rational(1),
                            ev.w_number(p.n));
      });

  return defs;
}

const std::vector<IdentityDef>& catalog() {
  static const std::vector<IdentityDef> defs = build_catalog();
  return defs;
}

const IdentityDef* find_def(const std::string& id) {
  for (const auto& def : catalog())
    if (def.info.id == id) return &def;
  return nullptr;
}

void require_params(const IdentityDef& def, const P& p) {
  const unsigned uses = def.info.uses;
  auto missing = [&def](const char* name) {
    throw std::invalid_argument(std::string("identity ") + def.info.id +
                                " needs parameter " + name);
  };
  if ((uses & m) && !p.m) missing("m");
  if ((uses & a) && !p.a) missing("a");
  if ((uses & a_pair) && (!p.a1 || !p.a2)) missing("a1/a2");
  if ((uses & x) && !p.x) missing("x");
  if ((uses & x_pair) && (!p.x1 || !p.x2)) missing("x1/x2");
  if ((uses & r) && !p.r) missing("r");
}

IdentityReport run_one(const IdentityDef& def, Variant variant, const P& p,
                       Evaluator& ev) {
  IdentityReport report;
  report.id = def.info.id;
  report.variant = variant;
  report.params = p;

  const unsigned min_n = variant == Variant::corrected
                             ? def.info.min_n_corrected
                             : def.info.min_n_as_printed;
  if (p.n < min_n) {
    report.verdict = Verdict::skipped;
    report.skip_reason = "stated for n >= " + std::to_string(min_n);
    return report;
  }
  if (auto reason = def.skip(p)) {
    report.verdict = Verdict::skipped;
    report.skip_reason = *reason;
    return report;
  }

  CheckOutcome outcome;
  try {
    outcome = def.eval(ev, p, variant);
  } catch (const UnconvergedError& e) {
    report.verdict = Verdict::skipped;
    report.skip_reason = e.what();
    return report;
  }
  report.lhs = std::move(outcome.lhs);
  report.rhs = std::move(outcome.rhs);
  report.enclosure = std::move(outcome.enclosure);
  const bool ok = report.enclosure ? report.enclosure->contains(report.lhs)
                                   : report.lhs == report.rhs;
  report.verdict = ok ? Verdict::holds : Verdict::fails;
  return report;
}

// Ordering used for deterministic output: id, variant, then parameters.
bool report_less(const IdentityReport& lhs, const IdentityReport& rhs) {
  auto key = [](const IdentityReport& r) {
    return std::tie(r.id, r.variant, r.params.n, r.params.m, r.params.a,
                    r.params.a1, r.params.a2, r.params.x, r.params.x1,
                    r.params.x2, r.params.r);
  };
  return key(lhs) < key(rhs);
}

std::string params_text(const P& p) {
  std::string out = "n=" + std::to_string(p.n);
  auto app = [&out](const char* name, const std::optional<Rational>& v) {
    if (v) out += std::string(" ") + name + "=" + dowling::to_string(*v);
  };
  app("m", p.m);
  app("a", p.a);
  app("a1", p.a1);
  app("a2", p.a2);
  app("x", p.x);
  app("x1", p.x1);
  app("x2", p.x2);
  app("r", p.r);
  return out;
}

}  // namespace

const std::vector<IdentityInfo>& identity_catalog() {
  static const std::vector<IdentityInfo> infos = [] {
    std::vector<IdentityInfo> v;
    for (const auto& def : catalog()) v.push_back(def.info);
    return v;
  }();
  return infos;
}

const IdentityInfo* find_identity(const std::string& id) {
  for (const auto& info : identity_catalog())
    if (info.id == id) return &info;
  return nullptr;
}

std::vector<std::string> identity_tags() {
  std::vector<std::string> tags;
  for (const auto& def : catalog()) tags.push_back(def.info.id);
  return tags;
}

IdentityReport check_identity(const std::string& id, Variant variant,
                              const IdentityParams& params) {
  const IdentityDef* def = find_def(id);
  if (def == nullptr)
    throw std::invalid_argument("unknown identity id: " + id);
  require_params(*def, params);
  Evaluator ev;
  return run_one(*def, variant, params, ev);
}

ParameterGrid ParameterGrid::defaults() {
  ParameterGrid grid;
  grid.m_set = {Rational(1), Rational(2), Rational(3)};
  grid.a_set = {Rational(-2), Rational(-1), Rational(0), Rational(1),
                Rational(2)};
  grid.x_set = {Rational(-1, 2), Rational(1, 2), Rational(1), Rational(2),
                Rational(5, 3)};
  grid.n_max = 10;
  return grid;
}

namespace {

// Enumerates the sub-grid of the parameters a tag consumes and runs every
// instance.
void sweep_tag(const IdentityDef& def, Variant variant,
               const ParameterGrid& grid, Evaluator& ev,
               std::vector<IdentityReport>& reports) {
  const unsigned uses = def.info.uses;
  const std::vector<Rational> one{Rational(0)};  // placeholder single value

  const auto& ms = (uses & m) ? grid.m_set : one;
  const auto& as = (uses & a) ? grid.a_set : one;
  const auto& a1s = (uses & a_pair) ? grid.a_set : one;
  const auto& a2s = a1s;
  const auto& xs = (uses & x) ? grid.x_set : one;
  const auto& x1s = (uses & x_pair) ? grid.x_set : one;
  const auto& x2s = x1s;
  const auto& rs = (uses & r) ? grid.a_set : one;

  for (unsigned n = 0; n <= grid.n_max; ++n)
    for (const auto& mv : ms)
      for (const auto& av : as)
        for (const auto& a1v : a1s)
          for (const auto& a2v : a2s)
            for (const auto& xv : xs)
              for (const auto& x1v : x1s)
                for (const auto& x2v : x2s)
                  for (const auto& rv : rs) {
                    P p;
                    p.n = n;
                    if (uses & m) p.m = mv;
                    if (uses & a) p.a = av;
                    if (uses & a_pair) {
                      p.a1 = a1v;
                      p.a2 = a2v;
                    }
                    if (uses & x) p.x = xv;
                    if (uses & x_pair) {
                      if (x1v == x2v) continue;  // pairs are ordered, distinct
                      p.x1 = x1v;
                      p.x2 = x2v;
                    }
                    if (uses & r) p.r = rv;
                    reports.push_back(run_one(def, variant, p, ev));
                  }
}

}  // namespace

SuiteSummary run_suite(const std::vector<std::string>& ids,
                       const ParameterGrid& grid,
                       std::optional<Variant> only_variant) {
  if (grid.m_set.empty() || grid.a_set.empty() || grid.x_set.empty())
    throw std::invalid_argument("run_suite: empty parameter grid");

  std::vector<const IdentityDef*> defs;
  for (const auto& id : ids) {
    const IdentityDef* def = find_def(id);
    if (def == nullptr)
      throw std::invalid_argument("unknown identity id: " + id);
    defs.push_back(def);
  }

  SuiteSummary summary;
  Evaluator ev;
  for (const IdentityDef* def : defs) {
    std::vector<Variant> variants;
    if (!only_variant || *only_variant == Variant::as_printed)
      variants.push_back(Variant::as_printed);
    if (def->info.has_corrected &&
        (!only_variant || *only_variant == Variant::corrected))
      variants.push_back(Variant::corrected);
    for (Variant variant : variants)
      sweep_tag(*def, variant, grid, ev, summary.reports);
  }

  std::sort(summary.reports.begin(), summary.reports.end(), report_less);

  for (const auto& report : summary.reports) {
    auto& stats = summary.stats[{report.id, report.variant}];
    switch (report.verdict) {
      case Verdict::holds:
        ++stats.holds;
        break;
      case Verdict::fails:
        ++stats.fails;
        break;
      case Verdict::skipped:
        ++stats.skipped;
        break;
    }
  }

  // Expectation pass.  Corrected variants and non-erratum tags must hold at
  // every non-skipped point.  As-printed erratum candidates must hold
  // wherever m = 1, and any sweep that touches m != 1 with n >= 1 must
  // exhibit at least one failure, otherwise the inconsistency the catalog
  // records would have gone undetected.
  std::map<std::pair<std::string, Variant>, bool> saw_relevant, saw_failure;
  for (const auto& report : summary.reports) {
    if (report.verdict == Verdict::skipped) continue;
    const IdentityDef* def = find_def(report.id);
    const bool lax = def->info.erratum_candidate &&
                     report.variant == Variant::as_printed;
    if (!lax) {
      if (report.verdict == Verdict::fails)
        summary.unexpected.push_back(report.id + " " +
                                     to_string(report.variant) + " failed at " +
                                     params_text(report.params));
      continue;
    }
    const bool at_m1 = report.params.m && *report.params.m == 1;
    if (at_m1) {
      if (report.verdict == Verdict::fails)
        summary.unexpected.push_back(report.id +
                                     " as-printed failed at m = 1 point " +
                                     params_text(report.params));
      continue;
    }
    if (report.params.n >= 1) {
      auto key = std::make_pair(report.id, report.variant);
      saw_relevant[key] = true;
      if (report.verdict == Verdict::fails) saw_failure[key] = true;
    }
  }
  for (const auto& [key, relevant] : saw_relevant) {
    if (relevant && !saw_failure[key])
      summary.unexpected.push_back(
          key.first +
          " as-printed: expected at least one failure for m != 1, none seen");
  }

  return summary;
}

std::string to_json_line(const IdentityReport& report) {
  nlohmann::ordered_json j;
  j["id"] = report.id;
  j["variant"] = to_string(report.variant);
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  auto put = [&params](const char* name, const std::optional<Rational>& v) {
    if (v) params[name] = dowling::to_string(*v);
  };
  put("m", report.params.m);
  put("a", report.params.a);
  put("a1", report.params.a1);
  put("a2", report.params.a2);
  put("x", report.params.x);
  put("x1", report.params.x1);
  put("x2", report.params.x2);
  put("r", report.params.r);
  params["n"] = report.params.n;
  j["params"] = std::move(params);
  if (report.verdict == Verdict::skipped) {
    j["lhs"] = nullptr;
    j["rhs"] = nullptr;
  } else {
    j["lhs"] = dowling::to_string(report.lhs);
    j["rhs"] = dowling::to_string(report.rhs);
  }
  j["verdict"] = to_string(report.verdict);
  j["skip_reason"] = report.skip_reason;
  if (report.enclosure) {
    j["lo"] = dowling::to_string(report.enclosure->lo);
    j["hi"] = dowling::to_string(report.enclosure->hi);
    j["terms_used"] = report.enclosure->terms_used;
  }
  return j.dump();
}

}  // namespace dowling::identities
