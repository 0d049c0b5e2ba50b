#include <gtest/gtest.h>

#include <random>

#include "nomsub/lambda_laws.hpp"
#include "oracles.hpp"

using namespace nomsub;

namespace {
std::map<std::string, oracle::NP> named_subst(const std::map<Atom, Val>& s) {
  std::map<std::string, oracle::NP> out;
  for (const auto& [a, t] : s) out[atom_name(a)] = oracle::from_ln(t);
  return out;
}
}  // namespace

TEST(Lambda, ParsePrint) {
  Val t = lam::parse("λx y. x (y z)");
  EXPECT_TRUE(lam::locally_closed(t));
  EXPECT_EQ(lam::parse(lam::print(t)), t);
  EXPECT_EQ(lam::parse("\\x. x"), lam::parse("λy. y"));
  EXPECT_NE(lam::parse("λx. y"), lam::parse("λy. y"));
  EXPECT_EQ(lam::parse("a3"), lam::var(3));
  EXPECT_EQ(lam::parse("f x y"), lam::app(lam::app(lam::var(5), lam::var(23)), lam::var(24)));
  EXPECT_THROW(lam::parse("λ. x"), lam::ParseError);
  EXPECT_THROW(lam::parse("(x y"), lam::ParseError);
  EXPECT_THROW(lam::parse_subst("x"), lam::ParseError);
}

TEST(Lambda, ParseSubstAllowsCommasInParens) {
  auto s = lam::parse_subst("a=(f x),b=λz. z");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.at(0), lam::parse("f x"));
  EXPECT_EQ(s.at(1), lam::parse("λz. z"));
}

TEST(Lambda, PrintedBindersAvoidFreeNames) {
  Val t = lam::parse("λa0. a0 a1");
  std::string p = lam::print(t);
  EXPECT_EQ(lam::parse(p), t);
  EXPECT_EQ(p, "λa0. a0 a1");
}

// (λz. z x)[x := y z] renames the binder: λw. w (y z)
TEST(Lambda, WorkedExample) {
  Val t = lam::parse("λz. z x");
  auto s = lam::parse_subst("x=y z");
  Val got = lam::bind(t, s);
  EXPECT_EQ(got, lam::parse("λw. w (y z)"));
  EXPECT_EQ(lam::print(got), "λa0. a0 (a24 a25)");
  EXPECT_TRUE(oracle::alpha(oracle::from_ln(got), oracle::subst(oracle::from_ln(t), named_subst(s))));
}

TEST(Lambda, BindMatchesNamedAndDeBruijnOracles) {
  std::mt19937 rng(17);
  int checked = 0;
  for (int i = 0; i < 600; ++i) {
    Val t = lam::random_term(rng, 4, 4);
    std::map<Atom, Val> s;
    for (Atom a = 0; a < 4; ++a)
      if (rng() % 3) s[a] = lam::random_term(rng, 6, 3);
    Val got = lam::bind(t, s);
    ASSERT_TRUE(lam::locally_closed(got));
    EXPECT_EQ(got, lam::db::bind(t, s)) << lam::print(t);
    EXPECT_TRUE(oracle::alpha(oracle::from_ln(got), oracle::subst(oracle::from_ln(t), named_subst(s))))
        << lam::print(t) << " gives " << lam::print(got);
    ++checked;
  }
  EXPECT_GE(checked, 500);
}

TEST(Lambda, OracleAlphaIsNotSyntacticEquality) {
  using namespace oracle;
  EXPECT_TRUE(alpha(nlam("p", nvar("p")), nlam("q", nvar("q"))));
  EXPECT_FALSE(alpha(nlam("p", nvar("q")), nlam("q", nvar("q"))));
  // the textbook substitution renames when it must
  NP r = subst(nlam("y", napp(nvar("y"), nvar("x"))), {{"x", nvar("y")}});
  EXPECT_TRUE(alpha(r, nlam("w", napp(nvar("w"), nvar("y")))));
}

TEST(Lambda, TermCountsAndSupport) {
  // depth ≤ 2 over n atoms: n leaves, n abstractions of leaves plus λ.0, n² applications
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(static_cast<long>(lam::terms(n, 2).size()), n + (n + 1) + n * n);
  auto l = lambda_terms(3);
  for (const auto& t : l->stage(3)) EXPECT_EQ(l->supp(t), lam::free_vars(t));
}

TEST(Lambda, MonoidUnitsOnAllDepth2Terms) {
  for (const auto& t : lam::terms(3, 3)) {
    if (!lam::locally_closed(t)) continue;
    std::map<Atom, Val> id;
    for (Atom a : atoms_of(t)) id[a] = lam::var(a);
    EXPECT_EQ(lam::bind(t, id), t);
    Val x = lam::var(0);
    EXPECT_EQ(lam::bind(x, {{0, t}}), t);
  }
}

TEST(Lambda, AssociativityOfBindSampled) {
  std::mt19937 rng(2);
  for (int i = 0; i < 300; ++i) {
    Val t = lam::random_term(rng, 2, 3);
    std::map<Atom, Val> s, r;
    for (Atom a = 0; a < 2; ++a) s[a] = lam::random_term(rng, 3, 3);
    for (Atom a = 0; a < 3; ++a) r[a] = lam::random_term(rng, 4, 2);
    std::map<Atom, Val> sr;
    for (auto& [a, u] : s) sr[a] = lam::bind(u, r);
    // atoms not in dom s pass through to r
    for (auto& [a, u] : r)
      if (!sr.count(a)) sr[a] = u;
    EXPECT_EQ(lam::bind(lam::bind(t, s), r), lam::bind(t, sr)) << lam::print(t);
  }
}

TEST(Lambda, SuiteAtDepth2AllPass) {
  LambdaSuiteConfig cfg;
  cfg.depth = 2;
  cfg.stage = 3;
  SuiteReport r = lambda_suite(cfg);
  for (const auto& l : r.laws) EXPECT_TRUE(l.ok) << l.id << ": " << l.witness;
}
