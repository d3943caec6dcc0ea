#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace quasi {

using Integer = boost::multiprecision::cpp_int;

/// Floor of a / b for b > 0.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (a.sign() < 0 && q * b != a) --q;
  return q;
}

/// Largest r with r * r <= n, for n >= 0.
inline Integer isqrt(const Integer& n) { return boost::multiprecision::sqrt(n); }

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

inline std::string to_string(const Integer& n) { return n.str(); }

}  // namespace quasi
