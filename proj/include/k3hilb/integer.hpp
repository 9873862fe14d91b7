#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace k3hilb {

using Integer = boost::multiprecision::cpp_int;

inline Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt of negative integer");
  return boost::multiprecision::sqrt(n);
}

inline bool is_square(const Integer& n) {
  if (n < 0) return false;
  Integer r = isqrt(n);
  return r * r == n;
}

inline Integer abs(const Integer& n) { return n < 0 ? Integer(-n) : n; }

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

// Remainder in [0, |m|).
inline Integer mod(const Integer& a, const Integer& m) {
  Integer am = abs(m);
  Integer r = a % am;
  if (r < 0) r += am;
  return r;
}

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::string to_string(const Integer& n) { return n.str(); }

}  // namespace k3hilb
