#include <gtest/gtest.h>

#include <random>

#include "nomsub/sheaf.hpp"
#include "nomsub/suites.hpp"

using namespace nomsub;

TEST(Sheaf, RepresentablesOverIAreSheaves) {
  for (int k = 0; k <= 2; ++k) {
    TruncPresheaf y = representable(CatTag::I, k, 6);
    EXPECT_TRUE(preserves(y, SquareKind::Intersections, 3).ok);
    EXPECT_TRUE(ictx_sheaf(y, 3).sheaf) << k;
  }
}

TEST(Sheaf, CollapsedPresheafFailsBoth) {
  TruncPresheaf p = detail::collapsed_y1(6);
  bool ip = preserves(p, SquareKind::Intersections, 3).ok;
  EXPECT_EQ(ip, ictx_sheaf(p, 3).sheaf);
}

TEST(Sheaf, IntersectionsIffSheafOnRandomPresheaves) {
  std::mt19937 rng(21);
  int sheaves = 0;
  for (int i = 0; i < 30; ++i) {
    TruncPresheaf p = random_presheaf(rng, CatTag::I, 6, 3);
    SheafVerdict v = ictx_sheaf(p, 3);
    sheaves += v.sheaf;
    EXPECT_EQ(preserves(p, SquareKind::Intersections, 3).ok, v.sheaf) << p.name << ": " << v.witness;
  }
  EXPECT_GT(sheaves, 0);
  EXPECT_LT(sheaves, 30);
}

TEST(Sheaf, SubsetPresheavesOnO) {
  std::mt19937 rng(4);
  for (int i = 0; i < 30; ++i) {
    SubsetPresheaf p = random_subset_presheaf(rng, 3, "P" + std::to_string(i));
    ASSERT_TRUE(check_functorial(p).ok);
    bool sh = o_sheaf(p).ok && iSub_separated(p).ok;
    EXPECT_EQ(preserves_intersections(p).ok, sh) << p.name;
  }
}

TEST(Sheaf, SuiteRunsClean) {
  SuiteConfig cfg;
  SuiteReport r = run_suite("sheaf", cfg);
  for (const auto& l : r.laws) EXPECT_TRUE(l.ok) << l.id << ": " << l.witness;
}
