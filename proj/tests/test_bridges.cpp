#include <gtest/gtest.h>

#include <random>

#include "nomsub/bridges.hpp"
#include "nomsub/sheaf.hpp"
#include "nomsub/suites.hpp"
#include "oracles.hpp"

using namespace nomsub;

TEST(IStar, StagesMatchNominalStages) {
  for (const auto& x : {discrete(2), atoms(), fresh_power(2), power(2), pf(2)}) {
    TruncPresheaf p = I_star(*x, CatTag::I, 4);
    EXPECT_TRUE(check_functorial(p).ok) << x->name();
    for (int k = 0; k <= 4; ++k) EXPECT_EQ(p.size(k), static_cast<int>(x->stage(k).size())) << x->name();
  }
  // |A^{*2}(n)| = n(n-1), |Pf(A)(n)| = 2^n
  TruncPresheaf a2 = I_star(*fresh_power(2), CatTag::I, 4), p = I_star(*pf(), CatTag::I, 4);
  for (int k = 0; k <= 4; ++k) {
    EXPECT_EQ(a2.size(k), oracle::falling(k, 2));
    EXPECT_EQ(p.size(k), oracle::ipow(2, k));
  }
}

TEST(Upper, RoundTripsAndRepresentables) {
  for (int k = 0; k <= 2; ++k) EXPECT_TRUE(upper_representable(k, 4).ok) << k;
  for (const auto& x : {atoms(), fresh_power(2), pf(), power(2)}) EXPECT_TRUE(upper_star_roundtrip(x, CatTag::I, 4).ok);
  for (const auto& x : {pf(2), power(2), atoms()}) EXPECT_TRUE(upper_star_roundtrip(x, CatTag::F, 3).ok);
}

TEST(Upper, CollapsedPresheafIsTruncationUnstable) {
  EXPECT_THROW(I_upper(detail::collapsed_y1(3)), TruncationUnstable);
}

TEST(FreshProduct, IsDaySum) {
  EXPECT_TRUE(fresh_product_day_sum(atoms(), atoms(), 4).ok);
  EXPECT_TRUE(fresh_product_day_sum(pf(2), fresh_power(2), 4).ok);
}

TEST(Species, NominalSetsAsPresheavesOnB) {
  for (const auto& x : {atoms(), fresh_power(2), pf(), power(2)}) EXPECT_TRUE(species_roundtrip_nominal(x, CatTag::B, 4).ok);
  std::mt19937 rng(9);
  for (int i = 0; i < 5; ++i) {
    TruncPresheaf p = random_presheaf(rng, CatTag::B, 3, 3);
    EXPECT_TRUE(species_roundtrip_presheaf(p).ok) << p.name;
  }
}

TEST(Species, TerminalMapIsNotSupportPreserving) {
  EqMap term{"!", fresh_power(2), discrete(1), [](const Val&) { return Val::nat(0); }};
  EXPECT_THROW(species_map(term, species(*fresh_power(2), CatTag::B, 3), species(*discrete(1), CatTag::B, 3)),
               NotSupportPreserving);
}

TEST(TMonad, LawsWriterAndTerminal) {
  for (const auto& x : {fresh_power(2), pf(2), atoms()}) EXPECT_TRUE(t_monad_laws(x, 3).ok) << x->name();
  for (const auto& x : {atoms(), pf(2)}) EXPECT_TRUE(writer_laws(x, 3).ok) << x->name();
  EXPECT_TRUE(r_terminal_is_pf(4).ok);
}

TEST(Kleisli, TransposeIsBijective) {
  for (auto [x, y] : {std::pair{fresh_power(2), atoms()}, std::pair{pf(2), pf(2)}, std::pair{power(2), atoms()}}) {
    KleisliReport r = kleisli_transpose(x, y, 3);
    EXPECT_TRUE(r.ok()) << r.witness;
    EXPECT_GT(r.maps, 0);
    EXPECT_EQ(r.maps, r.transposes);
  }
}

TEST(EqCategory, ProductAndTerminal) {
  EXPECT_TRUE(eq_product_universal(fresh_power(2), power(2), pf(2), 3).ok);
  for (const auto& x : {power(2), pf(2), fresh_power(2)}) EXPECT_TRUE(eq_terminal_universal(x, 3).ok) << x->name();
}
