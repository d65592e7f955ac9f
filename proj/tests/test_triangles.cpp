#include "dowling/triangles.hpp"

#include "oracles.hpp"

#include <doctest.h>

using dowling::Rational;

TEST_CASE("stirling2 against set-partition enumeration") {
  for (unsigned n = 0; n <= 8; ++n)
    for (unsigned k = 0; k <= n + 1; ++k)
      CHECK(dowling::stirling2(n, k) == oracles::stirling2_by_enumeration(n, k));
  CHECK(dowling::stirling2(3, 2) == 3);
  CHECK(dowling::stirling2(4, 2) == 7);
  for (unsigned n = 0; n <= 10; ++n) CHECK(dowling::stirling2(n, n) == 1);
  CHECK(dowling::stirling2(3, 5) == 0);
}

TEST_CASE("translated Whitney numbers") {
  CHECK(dowling::translated_whitney(Rational(2), 3, 2) == Rational(6));
  CHECK(dowling::translated_whitney(Rational(2), 4, 2) == Rational(28));
  for (unsigned n = 0; n <= 8; ++n)
    CHECK(dowling::translated_whitney(Rational(7, 3), n, n) == Rational(1));
  for (unsigned n = 0; n <= 8; ++n)
    for (unsigned k = 0; k <= n; ++k)
      CHECK(dowling::translated_whitney(Rational(1), n, k) ==
            Rational(dowling::stirling2(n, k)));
}

TEST_CASE("translated Whitney recurrence") {
  for (const Rational& m : {Rational(1), Rational(2), Rational(3), Rational(5, 2)})
    for (unsigned n = 1; n <= 10; ++n)
      for (unsigned k = 0; k <= n; ++k) {
        const Rational expected =
            (k > 0 ? dowling::translated_whitney(m, n - 1, k - 1)
                   : Rational(0)) +
            m * k * dowling::translated_whitney(m, n - 1, k);
        CHECK(dowling::translated_whitney(m, n, k) == expected);
      }
}

TEST_CASE("translated Whitney alternating-sum route") {
  for (const Rational& m : {Rational(1), Rational(2), Rational(3)})
    for (unsigned n = 0; n <= 10; ++n)
      for (unsigned k = 0; k <= n; ++k)
        CHECK(dowling::translated_whitney_explicit(m, n, k) ==
              dowling::translated_whitney(m, n, k));
  CHECK_THROWS_AS(dowling::translated_whitney_explicit(Rational(0), 3, 1),
                  std::domain_error);
}

TEST_CASE("noncentral Whitney numbers") {
  // a = 0, m = 1 reduces to Stirling.
  for (unsigned n = 0; n <= 8; ++n)
    for (unsigned k = 0; k <= n; ++k)
      CHECK(dowling::noncentral_whitney(Rational(1), Rational(0), n, k) ==
            Rational(dowling::stirling2(n, k)));

  CHECK(dowling::noncentral_whitney(Rational(2), Rational(1), 2, 1) ==
        Rational(0));
  CHECK(dowling::noncentral_whitney(Rational(5, 3), Rational(-7, 2), 0, 0) ==
        Rational(1));
  CHECK(dowling::noncentral_whitney(Rational(2), Rational(1), 1, 3) ==
        Rational(0));

  CHECK_THROWS_AS(dowling::noncentral_whitney(Rational(0), Rational(1), 2, 1),
                  std::domain_error);
  CHECK_THROWS_AS(
      dowling::noncentral_whitney_sum(Rational(0), Rational(1), 2, 1),
      std::domain_error);
}

TEST_CASE("recurrence route agrees with the binomial-Stirling sum") {
  // The triangular recurrence is the fast path; the sum is the defining
  // route.  They must agree before the recurrence is trusted anywhere else.
  for (const Rational& m : {Rational(1), Rational(2), Rational(3)})
    for (int a_int = -2; a_int <= 2; ++a_int)
      for (unsigned n = 0; n <= 12; ++n)
        for (unsigned k = 0; k <= n; ++k)
          CHECK(dowling::noncentral_whitney(m, Rational(a_int), n, k) ==
                dowling::noncentral_whitney_sum(m, Rational(a_int), n, k));
  // Rational parameters as well.
  for (unsigned n = 0; n <= 8; ++n)
    for (unsigned k = 0; k <= n; ++k)
      CHECK(dowling::noncentral_whitney(Rational(3, 2), Rational(-5, 3), n, k) ==
            dowling::noncentral_whitney_sum(Rational(3, 2), Rational(-5, 3), n,
                                            k));
}

TEST_CASE("noncentral Whitney boundary values") {
  const Rational m(2), a(3);
  for (unsigned n = 0; n <= 10; ++n) {
    CHECK(dowling::noncentral_whitney(m, a, n, n) == Rational(1));
    CHECK(dowling::noncentral_whitney(m, a, n, 0) == dowling::int_pow(-a, n));
    CHECK(dowling::noncentral_whitney(m, a, n, n + 1) == Rational(0));
  }
}

TEST_CASE("Whitney numbers") {
  CHECK(dowling::whitney(Rational(1), 2, 1) == Rational(3));
  CHECK(dowling::whitney(Rational(4), 0, 0) == Rational(1));
  CHECK(dowling::whitney(Rational(2), 2, 2) == Rational(1));
  for (unsigned n = 0; n <= 8; ++n)
    for (unsigned k = 0; k <= n; ++k)
      CHECK(dowling::whitney(Rational(2), n, k) ==
            dowling::noncentral_whitney(Rational(2), Rational(-1), n, k));
  CHECK_THROWS_AS(dowling::whitney(Rational(0), 2, 1), std::domain_error);
}
