#pragma once

#include "cone.hpp"

namespace k3hilb {

struct CohomologyTriple {
  Integer h0;
  Integer h1;
  Integer h2;
};

namespace detail {

// h⁰ of an effective class: the (−2)-curves stripped by the reduction are
// fixed components, so h⁰(D) = h⁰(P) for the nef part P.
inline Integer h0_effective(const SurfaceModel& S, const DivisorClass& D) {
  const PicardLattice& L = S.lattice();
  const DivisorClass P = negative_part_reduction(S, D).positive;
  if (P.is_zero()) return 1;
  const Integer p2 = square(L, P);
  if (p2 > 0) return p2 / 2 + 2;
  for (const DivisorClass& F : S.rays(RayKind::EllipticFiber)) {
    const Integer k = multiple_of(P, F);
    if (k > 0) return k + 1;  // |kF| is composed with the pencil |F|
  }
  throw std::logic_error("nef class " + to_string(P) + " with P^2 = 0 is not a fiber multiple");
}

}  // namespace detail

/// h⁰, h¹, h² of O_S(D). h² comes from Serre duality (K_S = 0) and h¹ from
/// Riemann–Roch, so only h⁰ is computed independently.
inline CohomologyTriple cohomology(const SurfaceModel& S, const DivisorClass& D) {
  if (D.is_zero()) return {1, 0, 1};
  const Integer chi = euler_characteristic(S.lattice(), D);
  Integer h0 = 0, h2 = 0;
  if (is_effective(S, D))
    h0 = detail::h0_effective(S, D);
  else if (is_effective(S, -D))
    h2 = detail::h0_effective(S, -D);
  return {h0, h0 + h2 - chi, h2};
}

/// Saint-Donat's criterion: a nef |D| has a base point iff D = E₀ + k·F₀ with
/// E₀ an effective (−2)-class, F₀ an elliptic pencil, E₀·F₀ = 1 and k ≥ 2.
inline bool has_base_point(const SurfaceModel& S, const DivisorClass& D) {
  if (D.is_zero() || !is_nef(S, D))
    throw Error(ErrorCode::PreconditionNef, "class " + to_string(D) + " is not a nonzero nef class");
  const PicardLattice& L = S.lattice();
  const Integer d = degree(L, D);
  for (const DivisorClass& F : S.rays(RayKind::EllipticFiber)) {
    const Integer max_k = d / degree(L, F);
    for (Integer k = 2; k <= max_k; ++k) {
      const DivisorClass E0 = D - k * F;
      if (square(L, E0) == -2 && intersect(L, E0, F) == 1 && is_effective(S, E0)) return true;
    }
  }
  return false;
}

/// Whether a general member of |D| is a smooth connected curve.
inline bool general_member_smooth_connected(const SurfaceModel& S, const DivisorClass& D) {
  if (!is_effective(S, D))
    throw Error(ErrorCode::PreconditionEffective, "class " + to_string(D) + " is not effective");
  for (const DivisorClass& E : S.rays(RayKind::MinusTwoCurve))
    if (D == E) return true;
  for (const DivisorClass& F : S.rays(RayKind::EllipticFiber)) {
    const Integer k = multiple_of(D, F);
    if (k > 0) return k == 1;
  }
  if (!is_nef(S, D)) return false;
  return square(S.lattice(), D) > 0 && !has_base_point(S, D);
}

}  // namespace k3hilb
