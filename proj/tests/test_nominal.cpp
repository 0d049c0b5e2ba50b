#include <gtest/gtest.h>

#include "nomsub/lambda.hpp"
#include "nomsub/nominal.hpp"
#include "oracles.hpp"

using namespace nomsub;

namespace {
std::vector<NomPtr> corpus() {
  return {discrete(2), atoms(), fresh_power(2), power(2), pf(2), pf(), free_group(2), lambda_terms(2)};
}
}  // namespace

TEST(Nominal, StageCardinalities) {
  for (int n = 0; n <= 4; ++n) {
    EXPECT_EQ(static_cast<long>(discrete(2)->stage(n).size()), 2);
    EXPECT_EQ(static_cast<long>(atoms()->stage(n).size()), n);
    EXPECT_EQ(static_cast<long>(fresh_power(2)->stage(n).size()), oracle::falling(n, 2));
    EXPECT_EQ(static_cast<long>(power(2)->stage(n).size()), n * n);
    EXPECT_EQ(static_cast<long>(pf()->stage(n).size()), oracle::ipow(2, n));
    EXPECT_EQ(static_cast<long>(pf(2)->stage(n).size()), 1 + n + n * (n - 1) / 2);
  }
}

TEST(Nominal, ActionLawsAndIntersectionProperty) {
  for (const auto& x : corpus()) {
    EXPECT_TRUE(check_nominal(*x, 3).ok) << x->name() << " " << check_nominal(*x, 3).witness;
    EXPECT_TRUE(check_intersection_property(*x, 3).ok) << x->name();
  }
}

// The least support equals the intersection of all supporting subsets of the
// stage, found by brute force over permutations. The pool leaves at least two
// atoms outside every candidate, so a finite pool cannot fake a support.
TEST(Nominal, LeastSupportMatchesBruteForce) {
  AtomSet pool = AtomSet::stage(5);
  for (const auto& x : corpus())
    for (const auto& v : x->stage(3)) {
      AtomSet least = AtomSet::stage(3);
      for (unsigned m = 0; m < 8; ++m) {
        std::vector<Atom> s;
        for (Atom a = 0; a < 3; ++a)
          if (m & (1u << a)) s.push_back(a);
        AtomSet cand(s);
        if (supports_by_perms(*x, v, cand, pool)) least = least.meet(cand);
      }
      EXPECT_EQ(x->supp(v), least) << x->name() << " " << x->show(v);
    }
}

TEST(Nominal, OrbitCounts) {
  EXPECT_EQ(orbit_reps(*atoms(), 3).size(), 1u);
  EXPECT_EQ(orbit_reps(*power(2), 3).size(), 2u);      // (a,a), (a,b)
  EXPECT_EQ(orbit_reps(*pf(), 3).size(), 4u);          // by cardinality
  EXPECT_EQ(orbit_reps(*fresh_power(2), 3).size(), 1u);
  EXPECT_EQ(orbit_reps(*discrete(2), 3).size(), 2u);
}

TEST(Nominal, CanonicalFormsAreOrbitInvariant) {
  auto ps = all_perms(AtomSet::stage(4));
  for (const auto& x : {power(2), pf(2), lambda_terms(2)})
    for (const auto& v : x->stage(3)) {
      Val c = canonical(*x, v);
      for (std::size_t i = 0; i < ps.size(); i += 5) EXPECT_EQ(canonical(*x, x->act(ps[i], v)), c);
    }
}

TEST(Nominal, FreshProductSupportsAreDisjoint) {
  auto fp = fresh_product(pf(2), atoms());
  for (const auto& v : fp->stage(3)) EXPECT_TRUE(pf(2)->supp(v[0]).disjoint(atoms()->supp(v[1])));
  EXPECT_TRUE(check_nominal(*fp, 3).ok);
}

TEST(Nominal, EquivarianceAndSupportPreservation) {
  EqMap diag{"diag", atoms(), power(2), [](const Val& a) { return Val::tuple({a, a}); }};
  EXPECT_TRUE(check_equivariant(diag, 3).ok);
  EXPECT_TRUE(is_support_preserving(diag, 3));
  EqMap bang{"!", atoms(), discrete(1), [](const Val&) { return Val::nat(0); }};
  EXPECT_TRUE(check_equivariant(bang, 3).ok);
  EXPECT_FALSE(is_support_preserving(bang, 3));
  EqMap bad{"to a0", atoms(), atoms(), [](const Val&) { return Val::atom(0); }};
  EXPECT_FALSE(check_equivariant(bad, 3).ok);
}
