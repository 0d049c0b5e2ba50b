#include <gtest/gtest.h>

#include "nomsub/corpus.hpp"
#include "nomsub/suites.hpp"

using namespace nomsub;

TEST(Corpus, NominalNames) {
  for (const char* n : {"2", "A", "A*2", "A^2", "PfA", "PfA@2", "FreeGroup@2", "Lam@depth2"})
    EXPECT_NO_THROW(nominal_by_name(n)) << n;
  EXPECT_EQ(nominal_by_name("A*2")->stage(3).size(), 6u);
  EXPECT_THROW(nominal_by_name("B"), UnknownObject);
  EXPECT_THROW(nominal_by_name("A*"), UnknownObject);
}

TEST(Corpus, PresheafNames) {
  EXPECT_EQ(presheaf_by_name("y2", CatTag::I, 3).size(3), 6);
  EXPECT_EQ(presheaf_by_name("1", CatTag::S, 3).size(2), 1);
  EXPECT_EQ(presheaf_by_name("I_star(PfA@2)", CatTag::I, 3).size(3), 7);
  EXPECT_NO_THROW(presheaf_by_name("List@2", CatTag::F, 2));
  EXPECT_THROW(presheaf_by_name("Bag@2", CatTag::I, 2), UnknownObject);
  EXPECT_THROW(presheaf_by_name("A*2", CatTag::F, 2), UnknownObject);
  EXPECT_THROW(presheaf_by_name("zz", CatTag::I, 2), UnknownObject);
  EXPECT_THROW(category_by_name("Q"), UnknownObject);
}

TEST(Suites, UnknownSuiteThrows) {
  SuiteConfig cfg;
  EXPECT_THROW(run_suite("nope", cfg), UnknownSuite);
}

TEST(Suites, ReportsAreSortedAndDeterministic) {
  SuiteConfig cfg;
  cfg.seed = 7;
  SuiteReport a = run_suite("bridges", cfg), b = run_suite("bridges", cfg);
  ASSERT_EQ(a.laws.size(), b.laws.size());
  for (std::size_t i = 0; i < a.laws.size(); ++i) {
    EXPECT_EQ(a.laws[i].id, b.laws[i].id);
    EXPECT_EQ(a.laws[i].ok, b.laws[i].ok);
    EXPECT_EQ(a.laws[i].witness, b.laws[i].witness);
    if (i) EXPECT_LT(a.laws[i - 1].id, a.laws[i].id);
  }
  EXPECT_TRUE(a.ok());
}

TEST(Suites, RenamingSuitePassesWithCounterexamples) {
  SuiteConfig cfg;
  SuiteReport r = run_suite("renaming", cfg);
  for (const auto& l : r.laws) EXPECT_TRUE(l.ok) << l.id << ": " << l.witness;
  ASSERT_EQ(r.counterexamples.size(), 2u);
  for (const auto& c : r.counterexamples) EXPECT_TRUE(c.verified) << c.name;
}

TEST(Suites, PresheafSuiteFlagsOnlyS) {
  SuiteConfig cfg;
  SuiteReport r = run_suite("presheaf-monoidal", cfg);
  int flagged = 0;
  for (const auto& l : r.laws) {
    if (!l.flag.empty()) {
      ++flagged;
      EXPECT_EQ(l.id.rfind("psh.S.", 0), 0u) << l.id;
    } else {
      EXPECT_TRUE(l.ok) << l.id << ": " << l.witness;
    }
  }
  EXPECT_GT(flagged, 0);
}
