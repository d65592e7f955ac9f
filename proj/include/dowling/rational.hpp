#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace dowling {

// Exact scalars used everywhere in the library.  Rational is kept in
// canonical form by construction: denominator > 0 and gcd(|num|, den) = 1.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k); zero when k > n.  Backed by a growable Pascal triangle.
Integer binomial(unsigned n, unsigned k);

// n! with factorial(0) = 1.  Memoized.
Integer factorial(unsigned n);

// num/den in canonical form, accepting a denominator of either sign.
// Throws std::invalid_argument when den is zero.
Rational make_rational(Integer num, Integer den);

// Exact integer power of a rational base.  Adopts 0^0 = 1 so that terms of
// the form (-a)^n stay meaningful at a = 0, n = 0.  Throws std::domain_error
// for a zero base with a negative exponent.
Rational int_pow(const Rational& base, long long exponent);

// Parses "p", "p/q" (optional sign on either part) and exact decimal or
// scientific literals such as "0.5" and "1e-20".  Throws
// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

// Canonical text form: "p/q", or just "p" for integers.
std::string to_string(const Rational& value);

}  // namespace dowling
