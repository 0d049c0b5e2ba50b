#include <gtest/gtest.h>

#include <random>

#include "nomsub/atoms.hpp"
#include "oracles.hpp"

using namespace nomsub;

TEST(AtomSet, SetAlgebra) {
  AtomSet a{3, 1, 2}, b{2, 5};
  EXPECT_EQ(a.size(), 3u);
  EXPECT_EQ(a[0], 1);
  EXPECT_EQ(a.unite(b), (AtomSet{1, 2, 3, 5}));
  EXPECT_EQ(a.meet(b), (AtomSet{2}));
  EXPECT_EQ(a.minus(b), (AtomSet{1, 3}));
  EXPECT_TRUE((AtomSet{1, 3}).subset_of(a));
  EXPECT_FALSE(a.disjoint(b));
  EXPECT_EQ(a.index_of(3), 2);
  EXPECT_EQ(AtomSet::stage(3), (AtomSet{0, 1, 2}));
  EXPECT_EQ(a.str(), "{a1,a2,a3}");
}

TEST(AtomSet, RoundTripsThroughValues) {
  AtomSet a{0, 4, 7};
  EXPECT_EQ(atoms_of(a.to_val()), a);
}

TEST(Perm, CountsAndGroupLaws) {
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(static_cast<long>(all_perms(AtomSet::stage(n)).size()), oracle::factorial(n));
  auto ps = all_perms(AtomSet::stage(4));
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Perm& p = ps[rng() % ps.size()];
    const Perm& q = ps[rng() % ps.size()];
    for (Atom a = 0; a < 6; ++a) {
      EXPECT_EQ(p.compose(q)(a), p(q(a)));
      EXPECT_EQ(p.inverse()(p(a)), a);
    }
  }
}

TEST(Perm, SwapAndExtension) {
  Perm s = Perm::swap(0, 3);
  EXPECT_EQ(s(0), 3);
  EXPECT_EQ(s(3), 0);
  EXPECT_EQ(s(1), 1);
  Perm e = extend_bijection({{0, 5}, {1, 0}});
  EXPECT_EQ(e(0), 5);
  EXPECT_EQ(e(1), 0);
  // a permutation: injective on a window
  std::set<Atom> img;
  for (Atom a = 0; a < 10; ++a) img.insert(e(a));
  EXPECT_EQ(img.size(), 10u);
}

TEST(Renaming, CountsAndComposition) {
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(static_cast<long>(all_renamings(AtomSet::stage(n)).size()), oracle::ipow(n, n));
  Renaming r(std::map<Atom, Atom>{{0, 2}, {1, 2}});
  EXPECT_EQ(r.image(AtomSet{0, 1}), (AtomSet{2}));
  EXPECT_FALSE(r.injective_on(AtomSet{0, 1}));
  Renaming s(std::map<Atom, Atom>{{2, 4}});
  EXPECT_EQ(s.compose(r)(0), 4);
}

TEST(Fresh, AvoidsGivenAtoms) {
  AtomSet avoid{0, 1, 3};
  auto f = fresh(avoid, 3);
  ASSERT_EQ(f.size(), 3u);
  for (Atom a : f) EXPECT_FALSE(avoid.contains(a));
  EXPECT_FALSE(avoid.contains(fresh_one(avoid)));
}
