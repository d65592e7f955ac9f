#include "dowling/series_sum.hpp"

#include "dowling/polynomials.hpp"
#include "oracles.hpp"

#include <doctest.h>

using dowling::Enclosure;
using dowling::Rational;

namespace {

const Rational kEps = Rational(1) / dowling::int_pow(Rational(10), 20);

}  // namespace

TEST_CASE("series encloses the ordered Bell value w_2(1) = 3") {
  const Enclosure enc =
      dowling::ftilde_series(Rational(1), Rational(0), 2, Rational(1), kEps);
  CHECK(enc.contains(Rational(3)));
  CHECK(enc.width() <= kEps);
  CHECK(enc.terms_used <= 10000);
}

TEST_CASE("n = 0 sums the plain geometric series to 1") {
  for (const Rational& m : {Rational(1), Rational(2), Rational(7, 2)})
    for (const Rational& a : {Rational(-2), Rational(0), Rational(5, 3)})
      for (const Rational& x : {Rational(1), Rational(1, 3), Rational(-1, 3)}) {
        const Enclosure enc = dowling::ftilde_series(m, a, 0, x, kEps);
        CHECK(enc.contains(Rational(1)));
        CHECK(enc.width() <= kEps);
      }
}

TEST_CASE("series agrees with the defining triangle") {
  const Enclosure enc =
      dowling::ftilde_series(Rational(2), Rational(1), 2, Rational(1), kEps);
  const Rational reference =
      dowling::noncentral_td(Rational(2), Rational(1), 2)(Rational(1));
  CHECK(reference == Rational(3));
  CHECK(enc.contains(reference));
}

TEST_CASE("geometric_series_value") {
  CHECK(dowling::geometric_series_value(3, Rational(1), kEps)
            .contains(Rational(13)));
  for (const Rational& x : {Rational(1), Rational(1, 2), Rational(-1, 3)})
    CHECK(dowling::geometric_series_value(0, x, kEps).contains(Rational(1)));
  CHECK(dowling::geometric_series_value(2, Rational(1, 2), kEps)
            .contains(Rational(1)));
  // Alternating case: w_2(-1/3) = -1/3 + 2/9.
  CHECK(dowling::geometric_series_value(2, Rational(-1, 3), kEps)
            .contains(Rational(-1, 9)));
}

TEST_CASE("ordered Bell numbers through the series, n <= 10") {
  for (unsigned n = 0; n <= 10; ++n) {
    const Enclosure enc = dowling::geometric_series_value(n, Rational(1), kEps);
    CHECK(enc.contains(dowling::geometric_number(n)));
    CHECK(enc.width() <= kEps);
  }
}

TEST_CASE("shrinking eps refines the enclosure monotonically") {
  Rational eps(1, 100);
  unsigned last_terms = 0;
  Rational last_width(-1);
  for (int step = 0; step < 4; ++step) {
    const Enclosure enc =
        dowling::ftilde_series(Rational(2), Rational(-1), 5, Rational(2), eps);
    CHECK(enc.width() <= eps);
    if (step > 0) {
      CHECK(enc.terms_used >= last_terms);
      CHECK(enc.width() <= last_width);
    }
    last_terms = enc.terms_used;
    last_width = enc.width();
    eps /= dowling::int_pow(Rational(10), 6);
  }
}

TEST_CASE("domain preconditions") {
  CHECK_THROWS_AS(
      dowling::ftilde_series(Rational(0), Rational(0), 1, Rational(1), kEps),
      std::domain_error);
  CHECK_THROWS_AS(
      dowling::ftilde_series(Rational(-2), Rational(0), 1, Rational(1), kEps),
      std::domain_error);
  // x = -m/2 sits on the boundary |x/(m+x)| = 1.
  CHECK_THROWS_AS(
      dowling::ftilde_series(Rational(1), Rational(0), 1, Rational(-1, 2), kEps),
      std::domain_error);
  CHECK_THROWS_AS(
      dowling::ftilde_series(Rational(1), Rational(0), 1, Rational(-3, 4), kEps),
      std::domain_error);
  CHECK_THROWS_AS(
      dowling::ftilde_series(Rational(1), Rational(0), 1, Rational(1),
                             Rational(0)),
      std::domain_error);
}

TEST_CASE("term budget exhaustion reports the partial sum") {
  try {
    dowling::ftilde_series(Rational(1), Rational(0), 3, Rational(1), kEps, 3);
    FAIL("expected UnconvergedError");
  } catch (const dowling::UnconvergedError& e) {
    CHECK(e.partial().terms_used == 3);
  }
}
