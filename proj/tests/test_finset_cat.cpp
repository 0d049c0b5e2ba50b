#include <gtest/gtest.h>

#include "nomsub/finset_cat.hpp"
#include "oracles.hpp"

using namespace nomsub;

TEST(Hom, CardinalitiesMatchClosedForms) {
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      long f = static_cast<long>(hom(CatTag::F, m, n).size());
      long i = static_cast<long>(hom(CatTag::I, m, n).size());
      long b = static_cast<long>(hom(CatTag::B, m, n).size());
      long s = static_cast<long>(hom(CatTag::S, m, n).size());
      EXPECT_EQ(f, oracle::ipow(n, m));
      EXPECT_EQ(i, oracle::falling(n, m));
      EXPECT_EQ(b, m == n ? oracle::factorial(n) : 0);
      EXPECT_EQ(s, oracle::surjections(m, n));
    }
}

TEST(Mor, CompositionAssociativeAndUnital) {
  for (const auto& f : all_maps(2, 3))
    for (const auto& g : all_maps(3, 2))
      for (const auto& h : all_maps(2, 2)) {
        EXPECT_EQ(compose(h, compose(g, f)), compose(compose(h, g), f));
        EXPECT_EQ(compose(Mor::id(3), f), f);
        EXPECT_EQ(compose(f, Mor::id(2)), f);
      }
}

TEST(Mor, SumAndProductAreFunctorial) {
  for (const auto& f : all_maps(1, 2))
    for (const auto& g : all_maps(2, 2)) {
      Mor s = sum(f, g);
      EXPECT_EQ(s.dom, 3);
      EXPECT_EQ(s.cod, 4);
      Mor p = product(f, g);
      EXPECT_EQ(p.dom, 2);
      EXPECT_EQ(p.cod, 4);
      for (const auto& f2 : all_maps(2, 2))
        for (const auto& g2 : all_maps(2, 2)) {
          EXPECT_EQ(compose(sum(f2, g2), sum(f, g)), sum(compose(f2, f), compose(g2, g)));
          EXPECT_EQ(compose(product(f2, g2), product(f, g)), product(compose(f2, f), compose(g2, g)));
        }
    }
}

TEST(Pullback, IsAPullbackSquare) {
  for (int x = 0; x <= 2; ++x)
    for (int bb = 0; bb <= 2; ++bb)
      for (const auto& f : all_maps(x, 2))
        for (const auto& b : all_maps(bb, 2)) {
          Pullback p = pullback(f, b);
          EXPECT_TRUE(is_pullback_square(f, b, p.fst, p.r, 3)) << f.str() << " " << b.str();
        }
}

TEST(Contextuality, AllFourCategoriesAreContextual) {
  for (CatTag c : {CatTag::B, CatTag::I, CatTag::S, CatTag::F}) {
    auto r = contextuality_check(c, 3);
    EXPECT_TRUE(r.contextual()) << cat_name(c) << " " << r.witness;
    EXPECT_TRUE(r.product_prime()) << cat_name(c) << " " << r.witness;
    EXPECT_TRUE(r.agree());
  }
}

TEST(Contextuality, IdentitiesOnlyIsNot) {
  auto r = contextuality_check(CatTag::J, 3);
  EXPECT_FALSE(r.contextual());
  EXPECT_TRUE(r.agree());
}

TEST(Coverage, SingletonInclusionsAreStable) {
  for (CatTag c : {CatTag::B, CatTag::I, CatTag::F})
    for (int a = 0; a <= 2; ++a)
      for (const auto& cover : covers_ictx(c, a, 3))
        for (int d = 0; d <= 3; ++d)
          for (const auto& g : hom(c, a, d)) {
            auto w = ictx_stability(c, cover, g);
            EXPECT_TRUE(w.commutes);
            EXPECT_TRUE(w.in_ctx);
          }
}

TEST(Coverage, OCoversMeetToTheCoveredSet) {
  for (unsigned a = 0; a < 8; ++a)
    for (const auto& fam : covers_o(a, 3)) {
      unsigned meet = 7;
      for (unsigned b : fam) meet &= b;
      EXPECT_EQ(meet, a);
    }
}
