#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace amitsur {

/// Exact signed integer used for every entry, coefficient and value.
using Integer = boost::multiprecision::cpp_int;
using IntVector = std::vector<Integer>;

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

/// Non-negative gcd; gcd(0, 0) = 0.
inline Integer gcd(const Integer& a, const Integer& b) {
  Integer x = abs(a), y = abs(b);
  while (y != 0) {
    Integer t = x % y;
    x = std::move(y);
    y = std::move(t);
  }
  return x;
}

/// Non-negative lcm; lcm(0, x) = 0.
inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Remainder in [0, |b|).
inline Integer floor_mod(const Integer& a, const Integer& b) {
  Integer r = a % b;
  if (r < 0) r += abs(b);
  return r;
}

/// "0 divides 0" is true; 0 divides nothing else.
inline bool divides(const Integer& d, const Integer& n) {
  if (d == 0) return n == 0;
  return n % d == 0;
}

struct ExtendedGcd {
  Integer g;  // >= 0
  Integer x;
  Integer y;  // x*a + y*b == g
};

inline ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - q * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

/// Polynomial binomial coefficient x(x-1)...(x-a+1)/a!, valid for negative x.
inline Integer binomial(const Integer& x, std::size_t a) {
  Integer result = 1;
  for (std::size_t i = 0; i < a; ++i) {
    // result == C(x, i) here, so the division is exact.
    result *= (x - i);
    result /= (i + 1);
  }
  return result;
}

/// Parses a plain decimal integer ("-12", "+7", "0").
inline Integer parse_integer(std::string_view text) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
  }
  Integer value(std::string(text.substr(pos)));
  return text[0] == '-' ? Integer(-value) : value;
}

inline std::string to_string(const Integer& a) { return a.str(); }

inline IntVector to_integers(const std::vector<long long>& values) {
  return IntVector(values.begin(), values.end());
}

}  // namespace amitsur
