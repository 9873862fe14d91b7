#pragma once

#include "error.hpp"
#include "form.hpp"
#include "quadform.hpp"

#include <string>
#include <string_view>

namespace k3hilb {

/// What the second generator G of Pic S = ℤh ⊕ ℤG is.
enum class GeneratorKind {
  RationalGenerator,  // smooth rational curve, G² = −2, h·G ≥ 2
  EllipticGenerator,  // smooth elliptic curve, G² = 0, h·G ≥ 4
  LineGenerator,      // a line, G² = −2, h·G = 1
  NoSpecialCurves,    // neither (−2)-classes nor null classes exist
};

constexpr std::string_view kind_name(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::RationalGenerator: return "rational";
    case GeneratorKind::EllipticGenerator: return "elliptic";
    case GeneratorKind::LineGenerator: return "line";
    case GeneratorKind::NoSpecialCurves: return "none";
  }
  return "unknown";
}

class PicardLattice;
PicardLattice make_lattice(Integer e, Integer s, GeneratorKind kind);

namespace detail {
PicardLattice plane_cubic_lattice();
}

/// Picard lattice of a quartic K3 surface of Picard rank two, tagged with the
/// kind of its second generator.
class PicardLattice : public IntersectionForm {
 public:
  GeneratorKind kind() const { return kind_; }

  DivisorClass generator() const { return {0, 1}; }

 private:
  PicardLattice(IntersectionForm form, GeneratorKind kind)
      : IntersectionForm(std::move(form)), kind_(kind) {}

  friend PicardLattice make_lattice(Integer e, Integer s, GeneratorKind kind);
  friend PicardLattice detail::plane_cubic_lattice();

  GeneratorKind kind_;
};

inline PicardLattice make_lattice(Integer e, Integer s, GeneratorKind kind) {
  IntersectionForm form = IntersectionForm::make(e, s);
  auto mismatch = [&](std::string_view why) {
    return Error(ErrorCode::KindMismatch,
                 std::string(kind_name(kind)) + " lattice (e=" + e.str() + ", s=" + s.str() +
                     "): " + std::string(why));
  };
  switch (kind) {
    case GeneratorKind::RationalGenerator:
      if (s != -2 || e < 2) throw mismatch("requires s = -2 and e >= 2");
      break;
    case GeneratorKind::EllipticGenerator:
      if (s != 0 || e < 4) throw mismatch("requires s = 0 and e >= 4");
      break;
    case GeneratorKind::LineGenerator:
      if (s != -2 || e != 1) throw mismatch("requires s = -2 and e = 1");
      break;
    case GeneratorKind::NoSpecialCurves:
      if (e < 1) throw mismatch("requires e >= 1");
      if (!verify_no_special_curves(form)) throw mismatch("lattice has (-2)-classes or null classes");
      break;
  }
  return PicardLattice(std::move(form), kind);
}

namespace detail {
// Quartic containing a plane cubic F: Gram (4, 3; 3, 0). make_lattice rejects
// it as an elliptic lattice (its Mori cone is the line cone, with line h − F),
// so surfaces build it through this path only.
inline PicardLattice plane_cubic_lattice() {
  return PicardLattice(IntersectionForm::make(3, 0), GeneratorKind::EllipticGenerator);
}
}  // namespace detail

enum class Ambient { ProjectiveSpace3, QuarticThreefold };

struct AmbientThreefold {
  Ambient variant;
  DivisorClass canonical_restriction;  // K_V restricted to S
  Integer degree_bound;                // curves need degree > bound

  static AmbientThreefold projective_space() { return {Ambient::ProjectiveSpace3, {-4, 0}, 16}; }
  static AmbientThreefold quartic_threefold() { return {Ambient::QuarticThreefold, {-1, 0}, 4}; }
  static AmbientThreefold of(Ambient a) {
    return a == Ambient::ProjectiveSpace3 ? projective_space() : quartic_threefold();
  }
};

constexpr std::string_view ambient_name(Ambient a) {
  return a == Ambient::ProjectiveSpace3 ? "p3" : "v4";
}

}  // namespace k3hilb
