#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "core/errors.hpp"

namespace pyrenic {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k); zero whenever k < 0 or k > n, which keeps summation bounds safe at
// edge indices. Exact running-product evaluation, stateless.
inline BigInt binomial(long long n, long long k) {
  if (n < 0) fail(ErrorCode::invalid_parameter, "binomial: negative n");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is C(n-k+i, i) here
  }
  return r;
}

// Largest r with r*r <= v.
inline BigInt isqrt_floor(const BigInt& v) {
  if (v < 0) fail(ErrorCode::invalid_parameter, "isqrt_floor: negative input");
  return boost::multiprecision::sqrt(v);
}

inline BigInt pow10(unsigned digits) {
  BigInt r = 1;
  for (unsigned i = 0; i < digits; ++i) r *= 10;
  return r;
}

// Rational bracket lo <= sqrt(2) < hi with hi - lo = 10^-digits.
inline std::pair<Rational, Rational> sqrt2_bracket(unsigned digits) {
  BigInt scale = pow10(digits);
  BigInt s = isqrt_floor(2 * scale * scale);
  return {Rational(s, scale), Rational(s + 1, scale)};
}

// Fixed-point decimal rendering, truncated toward zero.
inline std::string rational_decimal(const Rational& r, unsigned digits) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  std::string sign = num < 0 ? "-" : "";
  if (num < 0) num = -num;
  BigInt scaled = num * pow10(digits) / den;
  std::string s = scaled.str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  return sign + s.substr(0, s.size() - digits) + "." + s.substr(s.size() - digits);
}

}  // namespace pyrenic
