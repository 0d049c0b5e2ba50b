#include <gtest/gtest.h>

#include <random>

#include "nomsub/subst_nom.hpp"
#include "nomsub/uniform.hpp"
#include "oracles.hpp"

using namespace nomsub;

namespace {
std::vector<NomPtr> corpus() { return {discrete(1), discrete(2), atoms(), fresh_power(2), power(2), pf(2)}; }
}  // namespace

TEST(Tensor, ClassCountsMatchBruteForce) {
  for (const auto& x : corpus())
    for (const auto& y : corpus()) {
      TensorSet t(x, y);
      for (int n = 0; n <= 3; ++n)
        EXPECT_EQ(static_cast<long>(t.stage(n).size()), oracle::tensor_class_count(*x, *y, n)) << t.name() << " " << n;
    }
}

TEST(Tensor, CapturefulClassCountsMatchBruteForce) {
  for (const auto& x : {fresh_power(2), power(2), pf(2)})
    for (const auto& y : {atoms(), pf(2)}) {
      TensorSet t(x, y, TensorKind::Capture);
      for (int n = 0; n <= 3; ++n)
        EXPECT_EQ(static_cast<long>(t.stage(n).size()), oracle::tensor_class_count(*x, *y, n, true)) << t.name();
    }
}

TEST(Tensor, ExampleClassesAndPrinting) {
  auto t = tensor(pf(), discrete(2));
  Val c1 = t->make(AtomSet{0, 1}.to_val(), {Val::nat(0), Val::nat(1)});
  Val c2 = t->make(AtomSet{2, 3}.to_val(), {Val::nat(0), Val::nat(1)});
  Val c3 = t->make(AtomSet{0, 1}.to_val(), {Val::nat(1), Val::nat(0)});
  Val c4 = t->make(AtomSet{0, 1}.to_val(), {Val::nat(0), Val::nat(0)});
  EXPECT_EQ(c1, c2);  // atoms of x are bound
  EXPECT_EQ(c1, c3);  // swap a0, a1
  EXPECT_NE(c1, c4);
  EXPECT_TRUE(t->supp(c1).empty());
  EXPECT_NE(t->show(c1).find("↦"), std::string::npos);
}

TEST(Tensor, NominalAndSupportFormula) {
  for (const auto& x : corpus())
    for (const auto& y : corpus()) {
      TensorSet t(x, y);
      EXPECT_TRUE(check_nominal(t, 3).ok) << t.name();
      for (const auto& c : t.stage(3)) EXPECT_EQ(t.supp(c), t.supp_formula(c)) << t.show(c);
    }
}

TEST(ClassEq, OneStepSearchEqualsClosure) {
  std::mt19937 rng(11);
  for (const auto& x : corpus())
    for (const auto& y : corpus()) {
      TensorSet t(x, y);
      for (int n = 0; n <= 4; ++n) {
        auto r = validate_class_eq(t, n, 2, rng);
        EXPECT_TRUE(r.ok()) << t.name() << " " << r.witness;
      }
    }
}

TEST(Unitors, AreIsomorphisms) {
  for (const auto& y : corpus()) {
    TensorSet l(atoms(), y);
    TensorSet r(y, atoms());
    for (int n = 0; n <= 4; ++n) {
      EXPECT_TRUE(check_iso(
                      l, *y, [](const Val& c) { return left_unitor(c); },
                      [&](const Val& v) { return left_unitor_inv(l, v); }, n)
                      .ok)
          << y->name();
      EXPECT_TRUE(check_iso(
                      r, *y, [&](const Val& c) { return right_unitor(*y, c); },
                      [&](const Val& v) { return right_unitor_inv(r, v); }, n)
                      .ok)
          << y->name();
    }
  }
}

TEST(Associator, IsAnIsomorphismOnSampledTriples) {
  std::vector<std::array<NomPtr, 3>> triples{{atoms(), pf(2), fresh_power(2)},
                                             {power(2), atoms(), pf(2)},
                                             {pf(2), pf(2), discrete(2)},
                                             {fresh_power(2), power(2), atoms()}};
  for (const auto& [x, y, z] : triples) {
    Associator a(x, y, z);
    for (int n = 0; n <= 4; ++n)
      EXPECT_TRUE(check_iso(
                      a.lhs(), a.rhs(), [&](const Val& c) { return a.forward(c); },
                      [&](const Val& c) { return a.inverse(c); }, n)
                      .ok)
          << a.lhs().name();
  }
}

TEST(Associator, Pentagon) {
  std::mt19937 rng(5);
  auto r = pentagon(atoms(), power(2), pf(2), atoms(), 4, 60, rng);
  EXPECT_GE(r.samples, 50);
  EXPECT_TRUE(r.ok()) << r.witness;
}

// 𝔸^{*2} ◇̂ 𝔸 ≅ 𝔸², so 𝔸 is no right unit for the captureful tensor.
TEST(Capture, FreshPairOverAtomsIsTheSquare) {
  auto cap = std::make_shared<TensorSet>(fresh_power(2), atoms(), TensorKind::Capture);
  for (int n = 0; n <= 4; ++n) {
    EXPECT_EQ(cap->stage(n).size(), power(2)->stage(n).size());
    EXPECT_TRUE(check_iso(
                    *cap, *power(2), [](const Val& c) { return Val::tuple(TensorSet::gamma(c)); },
                    [&](const Val& v) { return cap->make(Val::tuple({Val::atom(0), Val::atom(1)}), v.kids); }, n)
                    .ok);
  }
  EXPECT_EQ(cap->stage(4).size(), 16u);
  EXPECT_EQ(fresh_power(2)->stage(4).size(), 12u);
}

TEST(Curry, RoundTripsAndExactSupport) {
  TensorSet t(fresh_power(2), atoms());
  auto pair = [](const Val& c) { return Val::tuple(TensorSet::gamma(c)); };
  auto r = curry_roundtrip("pair", t, pair, 4, Val::atom(0), Val::atom(5));
  EXPECT_TRUE(r.ok()) << r.witness;
  EXPECT_TRUE(r.support_exact);

  TensorSet t2(pf(2), pf(2));
  auto flatten = [](const Val& c) {
    AtomSet s;
    for (const auto& v : TensorSet::gamma(c)) s = s.unite(atoms_of(v));
    return s.to_val();
  };
  auto r2 = curry_roundtrip("flatten", t2, flatten, 3, AtomSet{}.to_val(), AtomSet{0}.to_val());
  EXPECT_TRUE(r2.ok()) << r2.witness;
  EXPECT_TRUE(r2.support_exact);
}

TEST(Reducible, MinimalSupportAndConstants) {
  auto a = atoms();
  auto sq = power(2);
  HomElem f{{0, 1}, [](const std::vector<Val>& t) { return Val::tuple({t[1], t[1]}); }, HomDomain::Fresh};
  ReducibleMap m = tabulate_hom(f, a, sq);
  EXPECT_TRUE(table_equivariant(m));
  EXPECT_EQ(hom_support(*a, m.as_hom(), 4), (AtomSet{1}));
  EXPECT_EQ(factorization_support(*a, m.as_hom(), 4), (AtomSet{1}));
  EXPECT_FALSE(irreducible(m, *a, 4));
  ReducibleMap mm = minimize(m, a, Val::atom(0), 4);
  EXPECT_EQ(AtomSet(mm.A), (AtomSet{1}));
  EXPECT_TRUE(irreducible(mm, *a, 4));
  HomElem f1{{1}, [](const std::vector<Val>& t) { return Val::tuple({t[0], t[0]}); }, HomDomain::Fresh};
  EXPECT_EQ(tabulate_hom(f1, a, sq), mm);
  EXPECT_EQ(m.eval({Val::atom(7), Val::atom(5)}), Val::tuple({Val::atom(5), Val::atom(5)}));

  HomElem k{{}, [](const std::vector<Val>&) { return Val::tuple({Val::atom(3), Val::atom(3)}); }, HomDomain::Fresh};
  ReducibleMap km = tabulate_hom(k, a, sq);
  EXPECT_TRUE(km.A.empty());
  EXPECT_TRUE(irreducible(km, *a, 3));
}

TEST(Uniform, MatrixFormIsSymmetric) {
  auto u = std::make_shared<UniformMatrixSet>(pf(), fresh_power(2));
  auto v = std::make_shared<UniformMatrixSet>(fresh_power(2), pf());
  EXPECT_TRUE(check_nominal(*u, 3).ok);
  for (int n = 0; n <= 4; ++n)
    EXPECT_TRUE(check_iso(
                    *u, *v, [&](const Val& c) { return uniform_swap(*v, c); },
                    [&](const Val& c) { return uniform_swap(*u, c); }, n)
                    .ok);
}

// The literal single-orbit filter is not symmetric: two matrices with
// permuted rows inside one orbit give the same filtered class.
TEST(Uniform, LiteralFilterIsNotSymmetric) {
  TensorSet lu(pf(), fresh_power(2), TensorKind::Uniform), lv(fresh_power(2), pf(), TensorKind::Uniform);
  EXPECT_EQ(lu.stage(4).size(), 25u);
  EXPECT_EQ(lv.stage(4).size(), 19u);
  UniformMatrixSet v(fresh_power(2), pf());
  auto c = compare_uniform(v, lv, 4);
  EXPECT_TRUE(c.surjective);
  EXPECT_FALSE(c.injective);
  EXPECT_FALSE(c.witness.empty());
}
