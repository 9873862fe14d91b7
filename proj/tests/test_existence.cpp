#include <k3hilb/existence.hpp>

#include <gtest/gtest.h>

#include <vector>

using namespace k3hilb;

namespace {
const AmbientThreefold kP3 = AmbientThreefold::projective_space();
const AmbientThreefold kV4 = AmbientThreefold::quartic_threefold();

bool contains(const std::vector<ClassificationReport>& reports, const DivisorClass& c) {
  for (const auto& r : reports)
    if (r.curve_class == c) return true;
  return false;
}
}  // namespace

TEST(MoriExists, Examples) {
  EXPECT_FALSE(mori_exists(5, 3));
  EXPECT_TRUE(mori_exists(4, 3));
  EXPECT_TRUE(mori_exists(6, 2));
  EXPECT_TRUE(mori_exists(4, 1));
  EXPECT_TRUE(mori_exists(12, 13));
  EXPECT_TRUE(mori_exists(12, 19));  // on the boundary 8(g − 1) = d²
  EXPECT_FALSE(mori_exists(12, 20));
  EXPECT_FALSE(mori_exists(0, 0));
  EXPECT_FALSE(mori_exists(3, -1));
  for (int d = 4; d <= 40; d += 4) EXPECT_TRUE(mori_exists(d, d * d / 8 + 1));
}

TEST(MoriExists, BoundaryIsSharp) {
  for (int d = 1; d <= 60; ++d)
    for (int g = 0; g <= d * d / 8 + 3; ++g) {
      const bool expected = 8 * (g - 1) == d * d || (8 * g < d * d && !(d == 5 && g == 3));
      EXPECT_EQ(mori_exists(d, g), expected) << d << "," << g;
    }
}

TEST(EnumerateClasses, Examples) {
  const SurfaceModel conic = SurfaceModel::rational(2);
  const auto a = enumerate_classes(conic, 12, Integer(13));
  EXPECT_NE(std::find(a.begin(), a.end(), DivisorClass(2, 2)), a.end());
  EXPECT_TRUE(enumerate_classes(conic, 12, Integer(19)).empty());
  const auto b = enumerate_classes(SurfaceModel::elliptic(3), 22, Integer(57));
  EXPECT_NE(std::find(b.begin(), b.end(), DivisorClass(4, 2)), b.end());
  EXPECT_TRUE(enumerate_classes(conic, 0).empty());
}

TEST(EnumerateClasses, AgreesWithBruteForce) {
  std::vector<SurfaceModel> families;
  for (int e = 2; e <= 7; ++e) families.push_back(SurfaceModel::rational(e));
  for (int e = 3; e <= 7; ++e) families.push_back(SurfaceModel::elliptic(e));
  families.push_back(SurfaceModel::line());
  families.push_back(SurfaceModel::no_special_curves(6, 2));
  for (const SurfaceModel& S : families) {
    const PicardLattice& L = S.lattice();
    const long long e = L.e().convert_to<long long>();
    for (int d = 1; d <= 30; ++d) {
      std::vector<DivisorClass> any, with_g;
      for (long long x = -40; x <= 40; ++x)
        for (long long y = -40; y <= 40; ++y) {
          if (y == 0 || 4 * x + e * y != d) continue;
          const DivisorClass C{x, y};
          if (square(L, C) >= -2) any.push_back(C);
          if (genus(L, C) == 7) with_g.push_back(C);
        }
      // the unrestricted list may contain classes of square < −2; the
      // brute-force ones must all be present
      const auto listed = enumerate_classes(S, d);
      for (const auto& C : any)
        EXPECT_NE(std::find(listed.begin(), listed.end(), C), listed.end()) << C;
      EXPECT_TRUE(std::is_sorted(listed.begin(), listed.end()));
      EXPECT_EQ(enumerate_classes(S, d, Integer(7)), with_g);
    }
  }
}

TEST(ScanNonreduced, ConicFamilyInV4) {
  const SurfaceModel conic = SurfaceModel::rational(2);
  const Assumptions gg{true, false};
  const auto wide = scan_nonreduced(kV4, conic, 18, gg);
  EXPECT_TRUE(contains(wide, {2, 2}));
  EXPECT_TRUE(contains(wide, {3, 3}));
  const auto narrow = scan_nonreduced(kV4, conic, 11, gg);
  EXPECT_FALSE(contains(narrow, {2, 2}));
  EXPECT_FALSE(contains(narrow, {3, 3}));
  EXPECT_TRUE(scan_nonreduced(kV4, conic, 18, {}).empty());
}

TEST(ScanNonreduced, PlaneCubicInP3) {
  const auto found = scan_nonreduced(kP3, SurfaceModel::elliptic(3), 22, {});
  EXPECT_TRUE(contains(found, {4, 2}));
}

TEST(ScanNonreduced, EveryResultIsConsistent) {
  const Assumptions all{true, true};
  std::vector<SurfaceModel> families;
  for (int e = 2; e <= 6; ++e) families.push_back(SurfaceModel::rational(e));
  for (int e = 3; e <= 6; ++e) families.push_back(SurfaceModel::elliptic(e));
  families.push_back(SurfaceModel::line());
  for (const SurfaceModel& S : families)
    for (const AmbientThreefold& V : {kP3, kV4}) {
      const auto found = scan_nonreduced(V, S, 40, all);
      Integer last_d = 0;
      for (const auto& r : found) {
        EXPECT_EQ(r.status, Status::GenericallyNonReducedComponent);
        EXPECT_EQ(r.h1_SD, 1);
        EXPECT_TRUE(mori_exists(r.d, r.g));
        EXPECT_NE(r.curve_class.y, 0);
        EXPECT_GT(r.d, V.degree_bound);
        EXPECT_LE(r.d, 40);
        EXPECT_GE(r.d, last_d);
        last_d = r.d;
        EXPECT_TRUE(general_member_smooth_connected(S, r.curve_class));
      }
    }
}
