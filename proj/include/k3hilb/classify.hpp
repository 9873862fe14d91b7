#pragma once

// Hilbert-scheme status of a smooth connected curve C on a quartic K3
// surface S inside V = ℙ³ or a smooth quartic threefold V₄. Everything is
// driven by D = C + K_V|_S:
//   h¹(S, D) = 0                          → generically smooth component
//   D·E = −2 on a (−2)-curve E, D ≠ E,
//     D² ≥ 0, h¹(S, D − 3E) = 0           → h¹ = 1, generically non-reduced
//   D = m·F for an elliptic pencil F      → h¹ = m − 1; non-reduced for m = 2
// The latter two need the π-map of E (resp. F) to be non-surjective, which is
// automatic in ℙ³ and an input assumption in V₄.

#include "cohomology.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace k3hilb {

struct Assumptions {
  bool normal_bundle_globally_generated = false;  // N_{E/V} for a rational E ⊂ V₄
  bool pi_map_nonsurjective_elliptic = false;     // π-map of an elliptic F ⊂ V₄
};

/// Both π-map hypotheses hold automatically in projective space.
inline Assumptions effective_assumptions(const AmbientThreefold& V, Assumptions A) {
  if (V.variant == Ambient::ProjectiveSpace3) {
    A.normal_bundle_globally_generated = true;
    A.pi_map_nonsurjective_elliptic = true;
  }
  return A;
}

enum class Status {
  SmoothPoint,
  GenericallySmoothComponent,
  GenericallyNonReducedComponent,
  ObstructedComponentStatusOpen,
  OutOfTheoremScope,
};

constexpr std::string_view status_name(Status s) {
  switch (s) {
    case Status::SmoothPoint: return "smooth-point";
    case Status::GenericallySmoothComponent: return "generically-smooth";
    case Status::GenericallyNonReducedComponent: return "generically-non-reduced";
    case Status::ObstructedComponentStatusOpen: return "obstructed-component-status-open";
    case Status::OutOfTheoremScope: return "out-of-theorem-scope";
  }
  return "unknown";
}

enum class ObstructionClause { None, Vanishing, MinusTwoCurve, EllipticPencil };

constexpr std::string_view clause_name(ObstructionClause c) {
  switch (c) {
    case ObstructionClause::None: return "none";
    case ObstructionClause::Vanishing: return "h1-vanishing";
    case ObstructionClause::MinusTwoCurve: return "minus-two-curve";
    case ObstructionClause::EllipticPencil: return "elliptic-pencil";
  }
  return "unknown";
}

/// Which obstruction clause applies to D, with the numbers that decide it.
struct ObstructionConditions {
  ObstructionClause clause = ObstructionClause::None;
  Integer h1_D;
  std::vector<std::pair<DivisorClass, Integer>> ray_products;  // (ray, D·ray)
  std::optional<DivisorClass> curve;                  // the (−2)-curve with D·E = −2
  std::optional<Integer> h1_minus_three_curve;        // h¹(D − 3E)
  std::optional<DivisorClass> pencil;                 // F with D = m·F
  std::optional<Integer> pencil_multiplicity;         // m
};

inline ObstructionConditions obstruction_conditions(const SurfaceModel& S, const DivisorClass& D) {
  if (!D.is_zero() && !is_effective(S, D))
    throw Error(ErrorCode::PreconditionEffective, "class " + to_string(D) + " is not effective");
  const PicardLattice& L = S.lattice();
  ObstructionConditions out;
  out.h1_D = cohomology(S, D).h1;
  for (const ExtremalRay* r : {&S.cone().first, &S.cone().second})
    if (r->cls) out.ray_products.emplace_back(*r->cls, intersect(L, D, *r->cls));

  for (const DivisorClass& E : S.rays(RayKind::MinusTwoCurve)) {
    if (intersect(L, D, E) != -2 || D == E) continue;
    out.curve = E;
    out.h1_minus_three_curve = cohomology(S, D - Integer(3) * E).h1;
    break;
  }
  for (const DivisorClass& F : S.rays(RayKind::EllipticFiber)) {
    const Integer m = multiple_of(D, F);
    if (m >= 2) {
      out.pencil = F;
      out.pencil_multiplicity = m;
      break;
    }
  }

  if (out.h1_D == 0)
    out.clause = ObstructionClause::Vanishing;
  else if (out.curve && square(L, D) >= 0 && *out.h1_minus_three_curve == 0)
    out.clause = ObstructionClause::MinusTwoCurve;
  else if (out.pencil)
    out.clause = ObstructionClause::EllipticPencil;
  return out;
}

struct DegreeGenus {
  Integer d;
  Integer g;
};

inline DegreeGenus curve_numerics(const SurfaceModel& S, const DivisorClass& C) {
  return {degree(S.lattice(), C), genus(S.lattice(), C)};
}

/// Dimension of the Hilbert-flag scheme at (C, S): (−K_V|_S)²/2 + g + 1.
inline Integer hilbert_flag_dimension(const AmbientThreefold& V, const Integer& g) {
  // h² = 4 on every supported surface, so the square only depends on V.
  const Integer k = V.canonical_restriction.x;
  return 4 * k * k / 2 + g + 1;
}

struct PreconditionCheck {
  std::string name;
  bool passed;
};

struct ClassificationReport {
  Ambient ambient;
  GeneratorKind family;
  Integer e;
  Integer s;
  DivisorClass curve_class;
  Integer d;
  Integer g;
  DivisorClass D_class;
  bool D_effective = false;
  bool D_nef = false;
  std::optional<std::pair<Integer, Integer>> D_dot_rays;
  Integer h1_SD;
  bool h1_certified = false;  // h¹ value is one of the stated vanishing/pencil/(−2) cases
  Status status = Status::OutOfTheoremScope;
  std::string reason;         // set for OutOfTheoremScope
  ObstructionClause rule = ObstructionClause::None;
  std::optional<Integer> dim_W;
  std::optional<Integer> h0_NCV;
  std::vector<PreconditionCheck> preconditions;
  std::vector<std::string> notes;
};

namespace detail {

// True when h¹(S, D) falls under a case with a known closed form: D = 0,
// D nef (vanishing, or k − 1 on a pencil), D a (−2)-ray, or the D·E = −2
// clause. Anything else comes from the reduction alone.
inline bool h1_is_certified(const SurfaceModel& S, const DivisorClass& D,
                            ObstructionClause clause) {
  if (D.is_zero()) return true;
  if (clause == ObstructionClause::MinusTwoCurve || clause == ObstructionClause::EllipticPencil)
    return true;
  if (is_effective(S, D) && is_nef(S, D)) return true;
  for (const DivisorClass& E : S.rays(RayKind::MinusTwoCurve))
    if (D == E) return true;
  return false;
}

}  // namespace detail

inline ClassificationReport classify_curve(const AmbientThreefold& V, const SurfaceModel& S,
                                           const DivisorClass& C, const Assumptions& assumed) {
  const PicardLattice& L = S.lattice();
  const Assumptions A = effective_assumptions(V, assumed);

  ClassificationReport r;
  r.ambient = V.variant;
  r.family = S.kind();
  r.e = L.e();
  r.s = L.s();
  r.curve_class = C;
  r.D_class = C + V.canonical_restriction;
  const DegreeGenus dg = curve_numerics(S, C);
  r.d = dg.d;
  r.g = dg.g;
  const DivisorClass& D = r.D_class;
  r.D_effective = is_effective(S, D);
  r.D_nef = is_nef(S, D);
  if (S.has_integral_rays())
    r.D_dot_rays = std::make_pair(intersect(L, D, *S.cone().first.cls),
                                  intersect(L, D, *S.cone().second.cls));
  r.h1_SD = cohomology(S, D).h1;
  if (S.kind() == GeneratorKind::EllipticGenerator && L.e() == 3)
    r.notes.emplace_back("plane-cubic lattice: Mori cone of the line model (line = h - F)");

  const bool smooth_connected = is_effective(S, C) && general_member_smooth_connected(S, C);
  r.preconditions = {
      {"smooth-connected", smooth_connected},
      {"not-complete-intersection", C.y != 0},
      {"degree-bound", r.d > V.degree_bound},
      {"D-effective", r.D_effective},
  };

  std::string failed;
  for (const PreconditionCheck& p : r.preconditions)
    if (!p.passed) failed += (failed.empty() ? "" : ",") + p.name;

  if (!failed.empty()) {
    // Nonsingularity at [C] only needs the first-order deformation (C not a
    // complete intersection) and h¹(S, D) = 0; no component claim is made.
    if (smooth_connected && C.y != 0 && r.h1_SD == 0) {
      r.status = Status::SmoothPoint;
      r.rule = ObstructionClause::Vanishing;
      r.h1_certified = detail::h1_is_certified(S, D, r.rule);
    } else {
      r.status = Status::OutOfTheoremScope;
      r.reason = "precondition failed: " + failed;
      r.h1_certified = detail::h1_is_certified(S, D, ObstructionClause::None);
    }
    return r;
  }

  const ObstructionConditions oc = obstruction_conditions(S, D);
  r.rule = oc.clause;
  switch (oc.clause) {
    case ObstructionClause::Vanishing:
      r.status = Status::GenericallySmoothComponent;
      break;
    case ObstructionClause::MinusTwoCurve:
      if (r.h1_SD != 1)
        throw std::logic_error("h1(D) = " + r.h1_SD.str() + " on the (-2)-curve clause");
      if (A.normal_bundle_globally_generated) {
        r.status = Status::GenericallyNonReducedComponent;
      } else {
        r.reason = "pi-map non-surjectivity of the (-2)-curve not assumed";
      }
      break;
    case ObstructionClause::EllipticPencil:
      if (r.h1_SD != *oc.pencil_multiplicity - 1)
        throw std::logic_error("h1(mF) = " + r.h1_SD.str() + " disagrees with m - 1");
      if (!A.pi_map_nonsurjective_elliptic) {
        r.reason = "pi-map non-surjectivity of the elliptic curve not assumed";
      } else if (*oc.pencil_multiplicity == 2) {
        r.status = Status::GenericallyNonReducedComponent;
      } else {
        r.status = Status::ObstructedComponentStatusOpen;
      }
      if (S.kind() == GeneratorKind::EllipticGenerator && L.e() == 3)
        r.notes.emplace_back("pencil rule applied directly; rank-two elliptic statement needs e >= 4");
      break;
    case ObstructionClause::None:
      r.reason = "uncovered positivity pattern";
      break;
  }
  r.h1_certified = detail::h1_is_certified(S, D, oc.clause);

  if (r.status != Status::OutOfTheoremScope) {
    r.dim_W = hilbert_flag_dimension(V, r.g);
    r.h0_NCV = *r.dim_W + r.h1_SD;
  }
  return r;
}

}  // namespace k3hilb
