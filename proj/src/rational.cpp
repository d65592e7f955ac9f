#include "dowling/rational.hpp"

#include <cctype>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace dowling {

namespace {

std::mutex pascal_mutex;
std::vector<std::vector<Integer>> pascal_rows = {{Integer(1)}};

std::mutex factorial_mutex;
std::vector<Integer> factorial_values = {Integer(1)};

}  // namespace

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return Integer(0);
  std::lock_guard lock(pascal_mutex);
  while (pascal_rows.size() <= n) {
    const auto& prev = pascal_rows.back();
    const unsigned r = static_cast<unsigned>(pascal_rows.size());
    std::vector<Integer> row(r + 1);
    row[0] = 1;
    row[r] = 1;
    for (unsigned j = 1; j < r; ++j) row[j] = prev[j - 1] + prev[j];
    pascal_rows.push_back(std::move(row));
  }
  return pascal_rows[n][k];
}

Integer factorial(unsigned n) {
  std::lock_guard lock(factorial_mutex);
  while (factorial_values.size() <= n)
    factorial_values.push_back(factorial_values.back() *
                               Integer(factorial_values.size()));
  return factorial_values[n];
}

Rational make_rational(Integer num, Integer den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

Rational int_pow(const Rational& base, long long exponent) {
  if (base == 0) {
    if (exponent < 0)
      throw std::domain_error("int_pow: zero base with negative exponent");
    return Rational(exponent == 0 ? 1 : 0);  // 0^0 = 1
  }
  const bool invert = exponent < 0;
  // Negate via unsigned arithmetic so LLONG_MIN is handled.
  unsigned long long e =
      invert ? 0ull - static_cast<unsigned long long>(exponent)
             : static_cast<unsigned long long>(exponent);
  Rational acc(1);
  Rational b = base;
  while (e != 0) {
    if (e & 1ull) acc *= b;
    e >>= 1;
    if (e != 0) b *= b;
  }
  if (invert) acc = Rational(1) / acc;
  return acc;
}

namespace {

// Digits-only check; the caller has already stripped any sign.
bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Leading zeros must go: cpp_int reads "0..." as an octal literal.
std::string strip_leading_zeros(std::string s) {
  size_t first = s.find_first_not_of('0');
  if (first == std::string::npos) return "0";
  return s.substr(first);
}

Integer parse_signed_integer(std::string s, const std::string& original) {
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s.erase(s.begin());
  }
  if (!all_digits(s))
    throw std::invalid_argument("not a rational: '" + original + "'");
  Integer v{strip_leading_zeros(std::move(s))};
  return negative ? -v : v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.pop_back();
  if (s.empty()) throw std::invalid_argument("not a rational: '" + text + "'");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    Integer num = parse_signed_integer(s.substr(0, slash), text);
    Integer den = parse_signed_integer(s.substr(slash + 1), text);
    if (den == 0)
      throw std::invalid_argument("zero denominator in '" + text + "'");
    return make_rational(std::move(num), std::move(den));
  }

  // Decimal / scientific form: [sign] digits [. digits] [e [sign] digits].
  std::string mantissa = s;
  long long exp10 = 0;
  if (auto epos = s.find_first_of("eE"); epos != std::string::npos) {
    mantissa = s.substr(0, epos);
    std::string exp_part = s.substr(epos + 1);
    Integer e = parse_signed_integer(exp_part, text);
    if (e < -100000 || e > 100000)
      throw std::invalid_argument("exponent out of range in '" + text + "'");
    exp10 = e.convert_to<long long>();
  }

  bool negative = false;
  if (!mantissa.empty() && (mantissa[0] == '+' || mantissa[0] == '-')) {
    negative = mantissa[0] == '-';
    mantissa.erase(mantissa.begin());
  }
  std::string digits = mantissa;
  long long frac_digits = 0;
  if (auto dot = mantissa.find('.'); dot != std::string::npos) {
    digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
    frac_digits = static_cast<long long>(mantissa.size() - dot - 1);
  }
  if (!all_digits(digits))
    throw std::invalid_argument("not a rational: '" + text + "'");

  Rational value{Integer(strip_leading_zeros(std::move(digits)))};
  if (negative) value = -value;
  return value * int_pow(Rational(10), exp10 - frac_digits);
}

std::string to_string(const Rational& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

}  // namespace dowling
