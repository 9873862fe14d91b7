#pragma once

#include "error.hpp"
#include "integer.hpp"

#include <ostream>
#include <string>

namespace k3hilb {

/// A class x·h + y·G in the rank-2 lattice spanned by the hyperplane class h
/// and a second generator G.
struct DivisorClass {
  Integer x;
  Integer y;

  DivisorClass() = default;
  DivisorClass(Integer x_, Integer y_) : x(std::move(x_)), y(std::move(y_)) {}

  bool is_zero() const { return x == 0 && y == 0; }

  DivisorClass operator-() const { return {-x, -y}; }
  DivisorClass& operator+=(const DivisorClass& o) { x += o.x; y += o.y; return *this; }
  DivisorClass& operator-=(const DivisorClass& o) { x -= o.x; y -= o.y; return *this; }

  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Integer& k, const DivisorClass& d) { return {k * d.x, k * d.y}; }

  friend bool operator==(const DivisorClass& a, const DivisorClass& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const DivisorClass& a, const DivisorClass& b) { return !(a == b); }
  // Lexicographic on (x, y).
  friend bool operator<(const DivisorClass& a, const DivisorClass& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }

  friend std::ostream& operator<<(std::ostream& os, const DivisorClass& d) {
    return os << '(' << d.x << ',' << d.y << ')';
  }
};

inline std::string to_string(const DivisorClass& d) {
  return "(" + d.x.str() + "," + d.y.str() + ")";
}

inline const DivisorClass kHyperplane{1, 0};

/// Gram matrix (4, e; e, s) of an even hyperbolic rank-2 lattice with h² = 4.
class IntersectionForm {
 public:
  static IntersectionForm make(Integer e, Integer s) {
    if (mod(s, 2) != 0)
      throw Error(ErrorCode::OddSelfIntersection,
                  "self-intersection " + s.str() + " is odd");
    if (4 * s - e * e >= 0)
      throw Error(ErrorCode::NonHyperbolic,
                  "Gram matrix (4," + e.str() + ";" + e.str() + "," + s.str() +
                      ") is not hyperbolic");
    return IntersectionForm(std::move(e), std::move(s));
  }

  const Integer& e() const { return e_; }
  const Integer& s() const { return s_; }
  Integer determinant() const { return 4 * s_ - e_ * e_; }

  friend bool operator==(const IntersectionForm& a, const IntersectionForm& b) {
    return a.e_ == b.e_ && a.s_ == b.s_;
  }

 protected:
  IntersectionForm(Integer e, Integer s) : e_(std::move(e)), s_(std::move(s)) {}

 private:
  Integer e_;
  Integer s_;
};

inline Integer intersect(const IntersectionForm& L, const DivisorClass& a, const DivisorClass& b) {
  return 4 * a.x * b.x + L.e() * (a.x * b.y + b.x * a.y) + L.s() * a.y * b.y;
}

inline Integer square(const IntersectionForm& L, const DivisorClass& d) { return intersect(L, d, d); }

inline Integer degree(const IntersectionForm& L, const DivisorClass& d) {
  return intersect(L, d, kHyperplane);
}

/// Arithmetic genus by adjunction on a K3: D²/2 + 1.
inline Integer genus(const IntersectionForm& L, const DivisorClass& d) { return square(L, d) / 2 + 1; }

/// Riemann–Roch on a K3: χ(D) = D²/2 + 2.
inline Integer euler_characteristic(const IntersectionForm& L, const DivisorClass& d) {
  return square(L, d) / 2 + 2;
}

inline bool is_primitive(const DivisorClass& d) { return gcd(d.x, d.y) == 1; }

/// k ≥ 1 with d = k·ray, or 0 when d is not a non-negative multiple of ray.
inline Integer multiple_of(const DivisorClass& d, const DivisorClass& ray) {
  if (d.x * ray.y != d.y * ray.x) return 0;
  const Integer& num = ray.x != 0 ? d.x : d.y;
  const Integer& den = ray.x != 0 ? ray.x : ray.y;
  if (den == 0 || num % den != 0) return 0;
  Integer k = num / den;
  return k > 0 ? k : Integer(0);
}

}  // namespace k3hilb
