#include <k3hilb/cohomology.hpp>

#include <gtest/gtest.h>

using namespace k3hilb;

namespace {

void expect_triple(const CohomologyTriple& t, int h0, int h1, int h2) {
  EXPECT_EQ(t.h0, h0);
  EXPECT_EQ(t.h1, h1);
  EXPECT_EQ(t.h2, h2);
}

std::vector<SurfaceModel> sweep_families() {
  std::vector<SurfaceModel> out;
  for (int e = 2; e <= 9; ++e) out.push_back(SurfaceModel::rational(e));
  for (int e = 3; e <= 9; ++e) out.push_back(SurfaceModel::elliptic(e));
  out.push_back(SurfaceModel::line());
  out.push_back(SurfaceModel::no_special_curves(6, 2));
  return out;
}

}  // namespace

TEST(Cohomology, Examples) {
  const SurfaceModel conic = SurfaceModel::rational(2);
  expect_triple(cohomology(conic, {1, 2}), 5, 1, 0);
  expect_triple(cohomology(conic, {1, 1}), 5, 0, 0);
  expect_triple(cohomology(conic, {0, 0}), 1, 0, 1);
  expect_triple(cohomology(conic, {1, 0}), 4, 0, 0);
  expect_triple(cohomology(SurfaceModel::elliptic(4), {0, 2}), 3, 1, 0);
  // dual of the first example
  expect_triple(cohomology(conic, {-1, -2}), 0, 1, 5);
  // rigid (−2)-curves
  expect_triple(cohomology(conic, {0, 1}), 1, 0, 0);
  expect_triple(cohomology(conic, {1, -1}), 1, 0, 0);
  // 2E: h⁰ = 1, χ = −2
  expect_triple(cohomology(conic, {0, 2}), 1, 3, 0);
}

TEST(Cohomology, EllipticPencils) {
  const SurfaceModel S = SurfaceModel::elliptic(4);
  for (int k = 1; k <= 8; ++k) {
    const CohomologyTriple t = cohomology(S, {0, k});
    EXPECT_EQ(t.h0, k + 1) << k;
    EXPECT_EQ(t.h1, k - 1) << k;
    EXPECT_EQ(t.h2, 0) << k;
  }
  // the other ruling (e/2)h − F
  const CohomologyTriple t = cohomology(S, {6, -3});
  EXPECT_EQ(t.h0, 4);
  EXPECT_EQ(t.h1, 2);
}

TEST(Cohomology, NeitherSideEffective) {
  const SurfaceModel conic = SurfaceModel::rational(2);
  // (1, 3): D² = 4 + 12 − 18 = −2 ⇒ χ = 1 > 0, so ±D must be effective.
  EXPECT_TRUE(is_effective(conic, {1, 3}) || is_effective(conic, {-1, -3}));
  // h − 3E ... D² = 4 − 12 − 18 = −26, not effective either way.
  const CohomologyTriple t = cohomology(conic, {1, -3});
  EXPECT_EQ(t.h0, 0);
  EXPECT_EQ(t.h2, 0);
  EXPECT_EQ(t.h1, 11);
}

TEST(HasBasePoint, Examples) {
  const SurfaceModel conic = SurfaceModel::rational(2);
  for (const DivisorClass& D : {DivisorClass{1, 0}, DivisorClass{1, 1}, DivisorClass{2, 2}, DivisorClass{3, 1}})
    EXPECT_FALSE(has_base_point(conic, D)) << D;
  EXPECT_FALSE(has_base_point(SurfaceModel::elliptic(4), {0, 3}));
  try {
    has_base_point(SurfaceModel::line(), {1, 1});
    FAIL() << "expected PreconditionNef";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionNef);
  }
}

TEST(GeneralMember, Examples) {
  const SurfaceModel conic = SurfaceModel::rational(2);
  EXPECT_TRUE(general_member_smooth_connected(conic, {2, 2}));
  EXPECT_TRUE(general_member_smooth_connected(conic, {0, 1}));
  EXPECT_TRUE(general_member_smooth_connected(conic, {1, -1}));
  EXPECT_FALSE(general_member_smooth_connected(conic, {1, 2}));  // E is a fixed part
  EXPECT_FALSE(general_member_smooth_connected(conic, {0, 2}));

  const SurfaceModel ell = SurfaceModel::elliptic(4);
  EXPECT_FALSE(general_member_smooth_connected(ell, {0, 2}));
  EXPECT_TRUE(general_member_smooth_connected(ell, {0, 1}));
  EXPECT_TRUE(general_member_smooth_connected(ell, {1, 0}));

  const SurfaceModel line = SurfaceModel::line();
  EXPECT_TRUE(general_member_smooth_connected(line, {0, 1}));
  EXPECT_TRUE(general_member_smooth_connected(line, {1, -1}));
  EXPECT_FALSE(general_member_smooth_connected(line, {2, -2}));
  EXPECT_TRUE(general_member_smooth_connected(line, {1, 0}));

  EXPECT_TRUE(general_member_smooth_connected(SurfaceModel::no_special_curves(6, 2), {1, 0}));
  EXPECT_THROW(general_member_smooth_connected(conic, {-1, 0}), Error);
}

TEST(CohomologyProperty, RiemannRochDualityAndVanishing) {
  for (const SurfaceModel& S : sweep_families()) {
    const PicardLattice& L = S.lattice();
    for (int x = -20; x <= 20; ++x)
      for (int y = -20; y <= 20; ++y) {
        const DivisorClass D{x, y};
        const CohomologyTriple t = cohomology(S, D);
        const CohomologyTriple dual = cohomology(S, -D);
        ASSERT_GE(t.h0, 0);
        ASSERT_GE(t.h1, 0) << "e=" << L.e() << " D=" << D;
        ASSERT_GE(t.h2, 0);
        EXPECT_EQ(t.h0 - t.h1 + t.h2, square(L, D) / 2 + 2);
        EXPECT_EQ(t.h2, dual.h0);
        EXPECT_EQ(t.h1, dual.h1);
        EXPECT_EQ(t.h0 >= 1, D.is_zero() || is_effective(S, D));
        EXPECT_GE(cohomology(S, D + kHyperplane).h0, t.h0) << D;

        if (!is_effective(S, D) || !is_nef(S, D)) continue;
        if (S.kind() == GeneratorKind::RationalGenerator || S.kind() == GeneratorKind::NoSpecialCurves)
          EXPECT_EQ(t.h1, 0) << D;
        for (const DivisorClass& F : S.rays(RayKind::EllipticFiber))
          if (const Integer k = multiple_of(D, F); k > 0) EXPECT_EQ(t.h1, k - 1) << D;
      }
  }
}
