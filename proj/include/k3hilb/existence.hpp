#pragma once

#include "classify.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace k3hilb {

struct DegreeGenusPair {
  Integer d;
  Integer g;
};

/// Smooth curves of degree d > 0 and genus g ≥ 0 lie on some smooth quartic
/// surface iff g = d²/8 + 1, or g < d²/8 and (d, g) ≠ (5, 3).
inline bool mori_exists(const Integer& d, const Integer& g) {
  if (d <= 0 || g < 0) return false;
  if (8 * (g - 1) == d * d) return true;
  return 8 * g < d * d && !(d == 5 && g == 3);
}

/// All classes a·h + b·G with b ≠ 0 of degree d (and genus g when given),
/// sorted lexicographically.
///
/// Substituting a = (d − e·b)/4 into the form gives
///   C² = (d² − (e² − 4s)·b²) / 4,
/// and e² − 4s > 0 on a hyperbolic lattice. With g fixed, b² is therefore
/// determined. Without g, every class that can carry an irreducible curve has
/// C² ≥ −2, hence b² ≤ (d² + 8)/(e² − 4s); that bound is exhaustive.
inline std::vector<DivisorClass> enumerate_classes(const SurfaceModel& S, const Integer& d,
                                                   const std::optional<Integer>& g = std::nullopt) {
  std::vector<DivisorClass> out;
  if (d <= 0) return out;
  const PicardLattice& L = S.lattice();
  const Integer spread = L.e() * L.e() - 4 * L.s();

  std::vector<Integer> candidates;
  if (g) {
    const Integer numerator = d * d - 4 * (2 * *g - 2);
    if (numerator < 0 || numerator % spread != 0) return out;
    const Integer b2 = numerator / spread;
    if (!is_square(b2) || b2 == 0) return out;
    const Integer b = isqrt(b2);
    candidates = {-b, b};
  } else {
    const Integer bound = isqrt((d * d + 8) / spread);
    for (Integer b = -bound; b <= bound; ++b)
      if (b != 0) candidates.push_back(b);
  }

  for (const Integer& b : candidates) {
    const Integer rest = d - L.e() * b;
    if (mod(rest, 4) != 0) continue;
    DivisorClass C{rest / 4, b};
    if (g && genus(L, C) != *g) continue;
    out.push_back(std::move(C));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Every effective, smooth-connected, non-complete-intersection class of
/// degree ≤ d_max whose Hilbert scheme is generically non-reduced along the
/// S-maximal family. Sorted by (d, class).
inline std::vector<ClassificationReport> scan_nonreduced(const AmbientThreefold& V,
                                                         const SurfaceModel& S, const Integer& d_max,
                                                         const Assumptions& A) {
  std::vector<ClassificationReport> out;
  for (Integer d = 1; d <= d_max; ++d) {
    for (const DivisorClass& C : enumerate_classes(S, d)) {
      if (!is_effective(S, C) || !general_member_smooth_connected(S, C)) continue;
      ClassificationReport r = classify_curve(V, S, C, A);
      if (r.status != Status::GenericallyNonReducedComponent) continue;
      if (!mori_exists(r.d, r.g))
        throw std::logic_error("non-reduced class " + to_string(C) +
                               " violates the quartic existence bound");
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace k3hilb
