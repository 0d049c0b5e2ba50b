#include <gtest/gtest.h>

#include "nomsub/coend.hpp"
#include "nomsub/monad.hpp"
#include "nomsub/psh_laws.hpp"
#include "oracles.hpp"

using namespace nomsub;

namespace {
const CatTag kCats[] = {CatTag::B, CatTag::I, CatTag::S, CatTag::F};
}

TEST(Presheaf, RepresentableStagesAreHomSets) {
  for (CatTag c : kCats)
    for (int k = 0; k <= 2; ++k) {
      auto y = representable(c, k, 4);
      EXPECT_TRUE(check_functorial(y).ok) << cat_name(c);
      for (int n = 0; n <= 4; ++n) EXPECT_EQ(y.size(n), static_cast<int>(hom(c, k, n).size()));
    }
}

TEST(Presheaf, TerminalCoproductAndProduct) {
  for (CatTag c : kCats) {
    auto one = terminal_presheaf(c, 3), y1 = representable(c, 1, 3);
    auto s = coproduct(y1, one), p = pointwise_product(y1, y1);
    EXPECT_TRUE(check_functorial(s).ok);
    EXPECT_TRUE(check_functorial(p).ok);
    for (int n = 0; n <= 3; ++n) {
      EXPECT_EQ(one.size(n), 1);
      EXPECT_EQ(s.size(n), y1.size(n) + 1);
      EXPECT_EQ(p.size(n), y1.size(n) * y1.size(n));
    }
  }
}

// Day ⊕ of representables is representable: 𝐲a ⊕ 𝐲b ≅ 𝐲(a+b).
TEST(Day, SumOfRepresentablesCounts) {
  for (CatTag c : kCats) {
    auto y1 = representable(c, 1, 3), y2 = representable(c, 2, 3);
    Day d(y1, y2, DayOp::Sum, 3, 3);
    for (int n = 0; n <= 3; ++n) EXPECT_EQ(d.result().size(n), static_cast<int>(hom(c, 3, n).size())) << cat_name(c);
    EXPECT_TRUE(check_functorial(d.result()).ok);
  }
}

// Day × of representables: 𝐲a ⊗ 𝐲b ≅ 𝐲(ab).
TEST(Day, ProductOfRepresentablesCounts) {
  for (CatTag c : kCats) {
    auto y1 = representable(c, 1, 3), y2 = representable(c, 2, 3);
    Day d(y2, y1, DayOp::Prod, 3, 3);
    for (int n = 0; n <= 3; ++n) EXPECT_EQ(d.result().size(n), static_cast<int>(hom(c, 2, n).size())) << cat_name(c);
  }
}

TEST(SubstTensor, UnitsAtBound3) {
  for (CatTag c : kCats) {
    auto y2 = representable(c, 2, 3), one = terminal_presheaf(c, 3);
    for (const auto* y : {&y2, &one}) {
      EXPECT_TRUE(left_unit_psh(*y, 3).ok) << cat_name(c) << " " << y->name;
      EXPECT_TRUE(right_unit_psh(*y, 3).ok) << cat_name(c) << " " << y->name;
    }
  }
}

TEST(SubstTensor, DistributivityOnStableCategories) {
  for (CatTag c : {CatTag::B, CatTag::I, CatTag::F}) {
    auto y1 = representable(c, 1, 3), one = terminal_presheaf(c, 3);
    EXPECT_TRUE(distributivity_psh(y1, one, y1, 3).ok) << cat_name(c);
    EXPECT_TRUE(distributivity_psh(y1, y1, one, 3).ok) << cat_name(c);
  }
}

// Over 𝕊 the truncated tensor loses classes at the top inner stage; the
// diagnostic must report it.
TEST(SubstTensor, SurjectionsAreTruncationUnstable) {
  auto y2 = representable(CatTag::S, 2, 3), one = terminal_presheaf(CatTag::S, 3);
  EXPECT_FALSE(stabilization_tensor(y2, one, 3).stable);
  EXPECT_FALSE(stabilization_tensor(one, y2, 3).stable);
  for (CatTag c : {CatTag::B, CatTag::I}) {
    auto z2 = representable(c, 2, 3), z1 = terminal_presheaf(c, 3);
    EXPECT_TRUE(stabilization_tensor(z2, z1, 3).stable) << cat_name(c);
    EXPECT_TRUE(stabilization_tensor(z1, z2, 3).stable) << cat_name(c);
  }
}

TEST(SubstTensor, PowersAndDayUnits) {
  for (CatTag c : kCats) {
    auto y1 = representable(c, 1, 3);
    EXPECT_TRUE(day_power_iso(y1, 2, 3).ok);
    EXPECT_TRUE(day_power_iso(y1, 3, 3).ok);
    EXPECT_TRUE(empty_power_iso(y1, 3).ok);
    EXPECT_TRUE(points_power_iso(c, 2, 3).ok);
    EXPECT_TRUE(day_prod_unit(c, 3).ok);
  }
  auto f1 = representable(CatTag::F, 1, 3), f2 = representable(CatTag::F, 2, 3);
  EXPECT_TRUE(day_sum_is_product(f1, f2, 3).ok);
}

TEST(Coend, CoYoneda) {
  for (CatTag c : kCats) {
    auto y2 = representable(c, 2, 3);
    for (int k = 0; k <= 3; ++k) EXPECT_TRUE(coyoneda_check(y2, k).ok) << cat_name(c) << " " << k;
  }
}

// Natural transformations 𝐲a → X are X(a) by Yoneda.
TEST(NatTrans, EnumerationMatchesYoneda) {
  for (CatTag c : kCats) {
    auto y1 = representable(c, 1, 3), y2 = representable(c, 2, 3);
    EXPECT_EQ(static_cast<int>(nat_enumerate(y1, y2).size()), y2.size(1)) << cat_name(c);
    EXPECT_EQ(static_cast<int>(nat_enumerate(y2, y1).size()), y1.size(2)) << cat_name(c);
  }
}

TEST(Adjunction, CurryUncurryRoundTrip) {
  for (CatTag c : kCats) {
    auto y1 = representable(c, 1, 2), one = terminal_presheaf(c, 2);
    for (const auto* z : {&one, &y1}) {
      auto r = adjunction_psh(y1, y1, *z, 2);
      EXPECT_TRUE(r.law.ok) << cat_name(c) << " " << r.law.witness;
      EXPECT_EQ(r.lhs_count, r.rhs_count);
    }
  }
}

TEST(Phi, LeftUnitCompatibility) {
  for (CatTag c : kCats) EXPECT_TRUE(phi_left_unit(representable(c, 2, 3), 3).ok) << cat_name(c);
}

TEST(Monad, MonoidLawsForListAndBag) {
  EXPECT_TRUE(monoid_laws(list_monad(2), 2).ok);
  EXPECT_TRUE(monoid_laws(multiset_monad(2), 2).ok);
  EXPECT_TRUE(MonadMonoid(list_monad(2), 3).well_defined().ok);
}

TEST(Monad, CommutativitySquare) {
  auto bag = commutativity(multiset_monad(3), 3);
  EXPECT_TRUE(bag.commutes) << bag.witness;
  EXPECT_GT(bag.squares, 0);
  auto list = commutativity(list_monad(3), 3);
  EXPECT_FALSE(list.commutes);
  EXPECT_FALSE(list.witness.empty());
}
