#pragma once

#include "lattice.hpp"
#include "pell.hpp"

#include <algorithm>
#include <optional>
#include <string_view>
#include <vector>

namespace k3hilb {

enum class RayKind { MinusTwoCurve, EllipticFiber, IrrationalNullBoundary };

constexpr std::string_view ray_kind_name(RayKind k) {
  switch (k) {
    case RayKind::MinusTwoCurve: return "minus-two-curve";
    case RayKind::EllipticFiber: return "elliptic-fiber";
    case RayKind::IrrationalNullBoundary: return "irrational-null-boundary";
  }
  return "unknown";
}

struct ExtremalRay {
  RayKind kind;
  std::optional<DivisorClass> cls;  // absent for irrational boundaries
};

/// Closed cone of curves NE(S); `first` is spanned by the generator G
/// whenever G is a curve.
struct MoriCone {
  ExtremalRay first;
  ExtremalRay second;
};

namespace detail {

inline MoriCone compute_cone(const PicardLattice& L) {
  const Integer& e = L.e();
  switch (L.kind()) {
    case GeneratorKind::RationalGenerator: {
      if (e % 2 == 0)
        return {{RayKind::MinusTwoCurve, DivisorClass{0, 1}},
                {RayKind::MinusTwoCurve, DivisorClass{e / 2, -1}}};
      // E' = xh − yE with y² + exy − 2x² = 1; x = 2Y, y = X − eY turns this
      // into X² − (e² + 8)Y² = 1.
      const PellSolution sol = fundamental_solution(e * e + 8);
      return {{RayKind::MinusTwoCurve, DivisorClass{0, 1}},
              {RayKind::MinusTwoCurve, DivisorClass{2 * sol.Y, -(sol.X - e * sol.Y)}}};
    }
    case GeneratorKind::EllipticGenerator:
      if (e == 3)  // plane cubic F; the residual line is h − F
        return {{RayKind::EllipticFiber, DivisorClass{0, 1}},
                {RayKind::MinusTwoCurve, DivisorClass{1, -1}}};
      return {{RayKind::EllipticFiber, DivisorClass{0, 1}},
              {RayKind::EllipticFiber,
               e % 2 != 0 ? DivisorClass{e, -2} : DivisorClass{e / 2, -1}}};
    case GeneratorKind::LineGenerator:
      return {{RayKind::MinusTwoCurve, DivisorClass{0, 1}},
              {RayKind::EllipticFiber, DivisorClass{1, -1}}};
    case GeneratorKind::NoSpecialCurves:
      return {{RayKind::IrrationalNullBoundary, std::nullopt},
              {RayKind::IrrationalNullBoundary, std::nullopt}};
  }
  throw Error(ErrorCode::UnsupportedFamily, "unsupported lattice kind");
}

}  // namespace detail

/// A validated surface family together with its Mori cone.
class SurfaceModel {
 public:
  explicit SurfaceModel(PicardLattice lattice)
      : lattice_(std::move(lattice)), cone_(detail::compute_cone(lattice_)) {}

  static SurfaceModel rational(Integer e) {
    return SurfaceModel(make_lattice(std::move(e), -2, GeneratorKind::RationalGenerator));
  }
  /// e ≥ 4, or e = 3 for a plane cubic (cone of the line model).
  static SurfaceModel elliptic(Integer e) {
    if (e == 3) return SurfaceModel(detail::plane_cubic_lattice());
    return SurfaceModel(make_lattice(std::move(e), 0, GeneratorKind::EllipticGenerator));
  }
  static SurfaceModel line() { return SurfaceModel(make_lattice(1, -2, GeneratorKind::LineGenerator)); }
  static SurfaceModel no_special_curves(Integer e, Integer s) {
    return SurfaceModel(make_lattice(std::move(e), std::move(s), GeneratorKind::NoSpecialCurves));
  }

  const PicardLattice& lattice() const { return lattice_; }
  const MoriCone& cone() const { return cone_; }
  GeneratorKind kind() const { return lattice_.kind(); }

  /// Integral classes of the rays of the given kind, in cone order.
  std::vector<DivisorClass> rays(RayKind kind) const {
    std::vector<DivisorClass> out;
    for (const ExtremalRay* r : {&cone_.first, &cone_.second})
      if (r->kind == kind && r->cls) out.push_back(*r->cls);
    return out;
  }

  bool has_integral_rays() const { return cone_.first.cls.has_value(); }

 private:
  PicardLattice lattice_;
  MoriCone cone_;
};

inline const MoriCone& extremal_rays(const SurfaceModel& S) { return S.cone(); }

inline bool is_nef(const SurfaceModel& S, const DivisorClass& D) {
  const PicardLattice& L = S.lattice();
  if (!S.has_integral_rays()) return square(L, D) >= 0 && degree(L, D) >= 0;
  return intersect(L, D, *S.cone().first.cls) >= 0 && intersect(L, D, *S.cone().second.cls) >= 0;
}

struct NegativePartReduction {
  DivisorClass positive;                  // P
  std::vector<DivisorClass> subtracted;   // one entry per step
};

/// Strips (−2)-curves forced into the base locus: while some (−2)-ray R has
/// D·R < 0, D ← D − R. Stops early once the degree goes negative; each step
/// lowers the degree by deg R ≥ 1, so the loop terminates.
inline NegativePartReduction negative_part_reduction(const SurfaceModel& S, const DivisorClass& D) {
  const PicardLattice& L = S.lattice();
  const std::vector<DivisorClass> curves = S.rays(RayKind::MinusTwoCurve);
  NegativePartReduction out{D, {}};
  while (degree(L, out.positive) >= 0) {
    auto negative = std::find_if(curves.begin(), curves.end(), [&](const DivisorClass& R) {
      return intersect(L, out.positive, R) < 0;
    });
    if (negative == curves.end()) break;
    out.positive -= *negative;
    out.subtracted.push_back(*negative);
  }
  return out;
}

/// Effectivity of a nonzero class; the zero class is reported as not
/// effective.
inline bool is_effective(const SurfaceModel& S, const DivisorClass& D) {
  const PicardLattice& L = S.lattice();
  if (D.is_zero()) return false;
  if (!S.has_integral_rays()) return square(L, D) > 0 && degree(L, D) > 0;

  const std::vector<DivisorClass> fibers = S.rays(RayKind::EllipticFiber);
  auto meets_fiber_negatively = [&](const DivisorClass& C) {
    return std::any_of(fibers.begin(), fibers.end(),
                       [&](const DivisorClass& F) { return intersect(L, C, F) < 0; });
  };
  if (meets_fiber_negatively(D)) return false;

  const DivisorClass P = negative_part_reduction(S, D).positive;
  if (degree(L, P) < 0) return false;
  if (P.is_zero()) return true;
  if (meets_fiber_negatively(P)) return false;
  // Nef with positive degree: χ(P) = P²/2 + 2 ≥ 2.
  return is_nef(S, P) && degree(L, P) > 0;
}

}  // namespace k3hilb
