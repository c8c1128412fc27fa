#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace postgroup {

// Exact arbitrary-precision rationals.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& q) { return q.str(); }

inline Rational parse_rational(const std::string& text) { return Rational(text); }

inline Rational factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return Rational(f);
}

inline Rational binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer b = 1;
  for (unsigned i = 1; i <= k; ++i) {
    b *= n - k + i;
    b /= i;
  }
  return Rational(b);
}

}  // namespace postgroup
