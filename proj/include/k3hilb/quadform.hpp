#pragma once

// Representation of integers by Q(x, y) = 4x² + 2exy + sy², the square of
// x·h + y·G on a lattice with Gram matrix (4, e; e, s).

#include "form.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <vector>

namespace k3hilb {

struct RepresentationResult {
  bool representable = false;
  std::optional<DivisorClass> witness;
};

/// Primitive null classes up to sign, normalized to positive degree and
/// sorted lexicographically. `irrational` is set when Q is anisotropic over ℚ.
struct NullRays {
  std::vector<DivisorClass> rays;
  bool irrational = false;
};

namespace quadform_detail {

/// Binary quadratic form a·x² + b·xy + c·y².
struct Form {
  Integer a, b, c;
  friend bool operator==(const Form& l, const Form& r) { return l.a == r.a && l.b == r.b && l.c == r.c; }
  friend bool operator<(const Form& l, const Form& r) {
    if (l.a != r.a) return l.a < r.a;
    if (l.b != r.b) return l.b < r.b;
    return l.c < r.c;
  }
  Integer eval(const Integer& x, const Integer& y) const { return a * x * x + b * x * y + c * y * y; }
  Integer discriminant() const { return b * b - 4 * a * c; }
};

/// Unimodular substitution (x, y) ↦ (p·x + q·y, r·x + t·y).
struct Matrix {
  Integer p = 1, q = 0, r = 0, t = 1;
  friend Matrix operator*(const Matrix& m, const Matrix& n) {
    return {m.p * n.p + m.q * n.r, m.p * n.q + m.q * n.t,
            m.r * n.p + m.t * n.r, m.r * n.q + m.t * n.t};
  }
};

inline Form form_of(const IntersectionForm& L) { return {4, 2 * L.e(), L.s()}; }

// Necessary condition: Q(x, y) ≡ n (mod m) must be solvable for every m.
inline bool passes_modular_filter(const Form& f, const Integer& n) {
  static constexpr std::array<int, 9> kModuli{3, 4, 5, 7, 8, 9, 11, 13, 16};
  for (int m : kModuli) {
    const long long a = mod(f.a, m).convert_to<long long>();
    const long long b = mod(f.b, m).convert_to<long long>();
    const long long c = mod(f.c, m).convert_to<long long>();
    const long long target = mod(n, m).convert_to<long long>();
    bool hit = false;
    for (long long x = 0; x < m && !hit; ++x)
      for (long long y = 0; y < m && !hit; ++y)
        hit = (a * x * x + b * x * y + c * y * y) % m == target;
    if (!hit) return false;
  }
  return true;
}

inline std::vector<Integer> positive_divisors(const Integer& n) {
  std::vector<Integer> small, large;
  const Integer m = abs(n);
  for (Integer d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    small.push_back(d);
    if (d * d != m) large.push_back(m / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Square discriminant Δ = k², a ≠ 0: 4a·f(x,y) = (2ax + (b−k)y)(2ax + (b+k)y),
/// so every solution comes from a factorization u·v of 4a·n.
inline std::optional<DivisorClass> represent_square_disc(const Form& f, const Integer& n) {
  const Integer k = isqrt(f.discriminant());
  const Integer target = 4 * f.a * n;
  for (const Integer& d : positive_divisors(target)) {
    for (const Integer& u : {Integer(-d), d}) {
      const Integer v = target / u;
      if ((v - u) % (2 * k) != 0) continue;
      const Integer y = (v - u) / (2 * k);
      const Integer twice_ax = u - (f.b - k) * y;
      if (twice_ax % (2 * f.a) != 0) continue;
      const Integer x = twice_ax / (2 * f.a);
      if (f.eval(x, y) == n) return DivisorClass{x, y};
    }
  }
  return std::nullopt;
}

// Reduction theory for indefinite forms of non-square discriminant Δ: f is
// reduced iff |√Δ − 2|a|| < b < √Δ, and ρ(a, b, c) = (c, r, (r² − Δ)/4c)
// with r ≡ −b (mod 2c) normalized against √Δ.
class CycleReducer {
 public:
  explicit CycleReducer(Integer disc) : disc_(std::move(disc)), root_(isqrt(disc_)) {}

  bool is_reduced(const Form& f) const {
    const Integer two_a = 2 * abs(f.a);
    return f.b > 0 && f.b <= root_ && root_ < two_a + f.b && two_a - f.b <= root_;
  }

  /// Applies ρ in place; the substitution is composed onto `m`.
  void rho(Form& f, Matrix& m) const {
    const Integer c_abs = abs(f.c);
    const Integer two_c = 2 * c_abs;
    Integer r;
    if (c_abs > root_) {
      r = mod(-f.b, two_c);
      if (r > c_abs) r -= two_c;
    } else {
      r = root_ - mod(root_ + f.b, two_c);
    }
    const Integer t = (r + f.b) / (2 * f.c);
    m = m * Matrix{0, -1, 1, t};
    f = Form{f.c, r, (r * r - disc_) / (4 * f.c)};
  }

  Form reduce(Form f, Matrix& m) const {
    while (!is_reduced(f)) rho(f, m);
    return f;
  }

  /// The ρ-cycle of a reduced form, each member paired with the substitution
  /// carrying the original form onto it.
  std::map<Form, Matrix> cycle(const Form& start, const Matrix& m0) const {
    std::map<Form, Matrix> out;
    Form f = start;
    Matrix m = m0;
    do {
      out.emplace(f, m);
      rho(f, m);
    } while (!(f == start));
    return out;
  }

 private:
  Integer disc_;
  Integer root_;
};

/// Primitive representation of n ≠ 0 by f (non-square discriminant): f
/// represents n primitively iff some (n, b, (b² − Δ)/4n) is properly
/// equivalent to f, with b ranging over residues mod 2|n|.
inline std::optional<DivisorClass> represent_primitive(const Form& f, const Integer& n,
                                                       const CycleReducer& reducer,
                                                       const std::map<Form, Matrix>& f_cycle) {
  const Integer disc = f.discriminant();
  const Integer four_n = 4 * n;
  for (Integer b = 0; b < 2 * abs(n); ++b) {
    if (mod(b * b - disc, four_n) != 0) continue;
    Matrix mg;
    const Form reduced = reducer.reduce(Form{n, b, (b * b - disc) / four_n}, mg);
    auto it = f_cycle.find(reduced);
    if (it == f_cycle.end()) continue;
    // f·M_f = g·M_g, so g(1, 0) = n = f(M_f·M_g⁻¹·(1, 0)).
    const Matrix& mf = it->second;
    const Integer u = mg.t, w = -mg.r;
    return DivisorClass{mf.p * u + mf.q * w, mf.r * u + mf.t * w};
  }
  return std::nullopt;
}

}  // namespace quadform_detail

inline NullRays null_rays(const IntersectionForm& L) {
  NullRays out;
  // 4x² + 2exy + sy² = 0  ⇔  x/y = (−e ± k)/4 with k² = e² − 4s.
  const Integer reduced_disc = L.e() * L.e() - 4 * L.s();
  if (!is_square(reduced_disc)) {
    out.irrational = true;
    return out;
  }
  const Integer k = isqrt(reduced_disc);
  for (const Integer& num : {Integer(-L.e() + k), Integer(-L.e() - k)}) {
    DivisorClass ray{num, 4};
    const Integer g = gcd(ray.x, ray.y);
    ray = DivisorClass{ray.x / g, ray.y / g};
    if (degree(L, ray) < 0) ray = -ray;
    out.rays.push_back(ray);
  }
  std::sort(out.rays.begin(), out.rays.end());
  return out;
}

/// Decides whether Q(x, y) = n has a nonzero integral solution.
inline RepresentationResult represents(const IntersectionForm& L, const Integer& n) {
  using namespace quadform_detail;
  if (n == 0) {
    NullRays nr = null_rays(L);
    if (nr.rays.empty()) return {};
    return {true, nr.rays.front()};
  }

  Form f = form_of(L);
  if (!passes_modular_filter(f, n)) return {};

  const Integer content = gcd(gcd(f.a, f.b), f.c);
  if (n % content != 0) return {};
  f = Form{f.a / content, f.b / content, f.c / content};
  const Integer target = n / content;

  if (is_square(f.discriminant())) {
    if (auto w = represent_square_disc(f, target)) return {true, *w};
    return {};
  }

  const CycleReducer reducer(f.discriminant());
  Matrix mf;
  const Form fr = reducer.reduce(f, mf);
  const auto f_cycle = reducer.cycle(fr, mf);

  // Non-primitive solutions are t·(primitive solution of target / t²).
  for (Integer t = 1; t * t <= abs(target); ++t) {
    if (target % (t * t) != 0) continue;
    if (auto w = represent_primitive(f, target / (t * t), reducer, f_cycle))
      return {true, t * *w};
  }
  return {};
}

/// True when the lattice has no class of square −2 and no nonzero null
/// class, i.e. the surface carries neither (−2)-curves nor elliptic curves.
inline bool verify_no_special_curves(const IntersectionForm& L) {
  return !represents(L, -2).representable && null_rays(L).rays.empty();
}

}  // namespace k3hilb
