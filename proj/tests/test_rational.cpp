#include "dowling/rational.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using dowling::Integer;
using dowling::Rational;

TEST_CASE("binomial basics") {
  CHECK(dowling::binomial(5, 2) == oracles::pascal_binomial(5, 2));
  CHECK(dowling::binomial(5, 2) == 10);
  CHECK(dowling::binomial(7, 0) == 1);
  CHECK(dowling::binomial(0, 0) == 1);
  CHECK(dowling::binomial(3, 5) == 0);
}

TEST_CASE("binomial symmetry and Pascal identity up to 50") {
  for (unsigned n = 0; n <= 50; ++n)
    for (unsigned k = 0; k <= n; ++k)
      CHECK(dowling::binomial(n, k) == dowling::binomial(n, n - k));
  for (unsigned n = 1; n <= 50; ++n)
    for (unsigned k = 1; k <= n; ++k)
      CHECK(dowling::binomial(n, k) ==
            dowling::binomial(n - 1, k - 1) + dowling::binomial(n - 1, k));
}

TEST_CASE("factorial") {
  CHECK(dowling::factorial(0) == 1);
  CHECK(dowling::factorial(4) == 24);
  CHECK(dowling::factorial(10) == oracles::product_factorial(10));
  CHECK(dowling::factorial(10) == 3628800);
}

TEST_CASE("int_pow") {
  CHECK(dowling::int_pow(Rational(-2), 3) == Rational(-8));
  CHECK(dowling::int_pow(Rational(0), 0) == Rational(1));
  CHECK(dowling::int_pow(Rational(3, 2), -2) ==
        oracles::pow_by_repeated_multiplication(Rational(3, 2), -2));
  CHECK(dowling::int_pow(Rational(3, 2), -2) == Rational(4, 9));
  CHECK(dowling::int_pow(Rational(0), 5) == Rational(0));
  CHECK_THROWS_AS(dowling::int_pow(Rational(0), -1), std::domain_error);

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  std::uniform_int_distribution<int> exp(-6, 6);
  for (int i = 0; i < 200; ++i) {
    Rational b(num(rng), den(rng));
    long long e = exp(rng);
    if (b == 0 && e < 0) continue;
    CHECK(dowling::int_pow(b, e) ==
          oracles::pow_by_repeated_multiplication(b, e));
  }
}

TEST_CASE("rational normalization and round trip") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long long> any(-1000000, 1000000);
  for (int i = 0; i < 500; ++i) {
    long long p = any(rng);
    long long q = any(rng);
    if (q == 0) continue;
    Rational v = dowling::make_rational(Integer(p), Integer(q));
    CHECK(denominator(v) > 0);
    CHECK(gcd(abs(numerator(v)), denominator(v)) == 1);
    CHECK(dowling::parse_rational(dowling::to_string(v)) == v);
  }
  CHECK_THROWS_AS(dowling::make_rational(Integer(1), Integer(0)),
                  std::invalid_argument);
}

TEST_CASE("parse_rational forms") {
  CHECK(dowling::parse_rational("7") == Rational(7));
  CHECK(dowling::parse_rational("-7") == Rational(-7));
  CHECK(dowling::parse_rational("3/2") == Rational(3, 2));
  CHECK(dowling::parse_rational("-4/6") == Rational(-2, 3));
  CHECK(dowling::parse_rational("5/-3") == Rational(-5, 3));
  CHECK(dowling::parse_rational("0.5") == Rational(1, 2));
  CHECK(dowling::parse_rational("-0.25") == Rational(-1, 4));
  CHECK(dowling::parse_rational("1e-20") ==
        Rational(1) / dowling::int_pow(Rational(10), 20));
  CHECK(dowling::parse_rational("2.5e2") == Rational(250));
  CHECK(dowling::parse_rational(" 5/3 ") == Rational(5, 3));

  CHECK_THROWS_AS(dowling::parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(dowling::parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(dowling::parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(dowling::parse_rational("1/2/3"), std::invalid_argument);
}

TEST_CASE("to_string matches the p/q contract") {
  CHECK(dowling::to_string(Rational(3, 2)) == "3/2");
  CHECK(dowling::to_string(Rational(-3, 2)) == "-3/2");
  CHECK(dowling::to_string(Rational(7)) == "7");
  CHECK(dowling::to_string(Rational(0)) == "0");
}
