#include <gtest/gtest.h>

#include "nomsub/bridges.hpp"
#include "nomsub/lambda.hpp"
#include "nomsub/renaming.hpp"
#include "nomsub/sheaf.hpp"
#include "oracles.hpp"

using namespace nomsub;

namespace {
std::vector<NomPtr> relevant() { return {discrete(2), atoms(), power(2), pf(2)}; }
}  // namespace

TEST(RenamingSets, CorpusCarriesRenamingAction) {
  for (const auto& x : {discrete(2), atoms(), power(2), pf(2), pf(), free_group(2), lambda_terms(2)})
    EXPECT_TRUE(check_renaming_set(*x, 3).ok) << x->name() << ": " << check_renaming_set(*x, 3).witness;
}

TEST(RenamingSets, RelevanceOnCorpus) {
  for (const auto& x : relevant()) EXPECT_TRUE(check_relevant(*x, 3).ok) << x->name();
  LawCheck fg = check_relevant(*free_group(2), 3);
  EXPECT_FALSE(fg.ok);
  EXPECT_FALSE(fg.witness.empty());
}

// Renaming all atoms of A^2 by every map A_3 → A_3 keeps values inside A_3.
TEST(RenamingSets, RenamingActionMatchesRelabel) {
  auto sq = power(2);
  for (const auto& f : oracle::functions(3, 3)) {
    std::map<Atom, Atom> m;
    for (int i = 0; i < 3; ++i) m[i] = f[i];
    Renaming r(m);
    for (const auto& v : sq->stage(3)) EXPECT_EQ(sq->rename(r, v), oracle::relabel(v, m));
  }
}

TEST(RenTensor, PreservesRelevanceAndUnitors) {
  for (const auto& x : relevant())
    for (const auto& y : relevant()) {
      RenTensorSet ts(x, y);
      EXPECT_TRUE(check_renaming_set(ts, 3).ok) << ts.name();
      EXPECT_TRUE(check_relevant(ts, 3).ok) << ts.name();
    }
  for (const auto& y : relevant()) {
    RenTensorSet l(atoms(), y), r(y, atoms());
    for (int k = 0; k <= 3; ++k) {
      EXPECT_TRUE(check_nominal_iso(l, *y, [](const Val& c) { return ren_left_unitor(c); }, k).ok);
      EXPECT_TRUE(check_nominal_iso(r, *y, [&](const Val& c) { return ren_right_unitor(r, c); }, k).ok);
      for (const auto& v : y->stage(k)) {
        EXPECT_EQ(ren_left_unitor(ren_left_unitor_inv(l, v)), v);
        EXPECT_EQ(ren_right_unitor(r, ren_right_unitor_inv(r, v)), v);
      }
    }
  }
}

TEST(RenTensor, OneStepSearchEqualsClosure) {
  for (const auto& x : relevant())
    for (const auto& y : {atoms(), pf(2)}) {
      RenTensorSet ts(x, y);
      auto ys = y->stage(2);
      std::vector<Val> vals{ys.front(), ys.back()};
      RenClassEqReport r = validate_ren_class_eq(ts, 3, vals);
      EXPECT_GT(r.pairs, 0);
      EXPECT_TRUE(r.ok()) << ts.name() << ": " << r.witness;
    }
}

TEST(Counterexamples, Reproduced) {
  Counterexample fg = free_group_not_relevant();
  Counterexample hom = hom_not_relevant();
  EXPECT_TRUE(fg.verified) << fg.witness;
  EXPECT_TRUE(hom.verified) << hom.witness;
  EXPECT_FALSE(fg.witness.empty());
  EXPECT_FALSE(hom.witness.empty());
}

TEST(Species, RelevantSetsAsPresheavesOnS) {
  for (const auto& x : {pf(), power(2), atoms()}) EXPECT_TRUE(species_roundtrip_nominal(x, CatTag::S, 3).ok) << x->name();
  EXPECT_THROW(species(*free_group(2), CatTag::S, 3), NotRelevant);
  std::mt19937 rng(3);
  for (int i = 0; i < 5; ++i) {
    TruncPresheaf p = random_presheaf(rng, CatTag::S, 3, 3);
    EXPECT_TRUE(species_roundtrip_presheaf(p).ok) << p.name;
  }
}

TEST(Preimages, RelevantIffPreserved) {
  for (const auto& x : relevant()) EXPECT_TRUE(preserves(I_star(*x, CatTag::F, 3), SquareKind::Preimages).ok) << x->name();
  EXPECT_FALSE(preserves(I_star(*free_group(2), CatTag::F, 3), SquareKind::Preimages).ok);
}
