#pragma once

// The law suites run by the command line and the acceptance binary.

#include <chrono>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "nomsub/bridges.hpp"
#include "nomsub/corpus.hpp"
#include "nomsub/lambda_laws.hpp"
#include "nomsub/monad.hpp"
#include "nomsub/psh_laws.hpp"
#include "nomsub/renaming.hpp"
#include "nomsub/report.hpp"
#include "nomsub/sheaf.hpp"
#include "nomsub/subst_nom.hpp"
#include "nomsub/uniform.hpp"

namespace nomsub {

struct SuiteConfig {
  int bound = 3;       // presheaf truncation; nominal stages go one further
  unsigned seed = 1;
  int depth = 3;       // λ-term depth
  int stage() const { return bound + 1; }
};

namespace detail {

// Runs one law, recording elapsed time and turning exceptions into failures.
inline void run_law(SuiteReport& rep, const std::string& id, const std::function<Law()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  Law l;
  try {
    l = fn();
  } catch (const std::exception& e) {
    l = make_law(id, false, 0, std::string("exception: ") + e.what());
  }
  l.id = id;
  l.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  rep.add(std::move(l));
}

// Accumulates LawCheck-like results into one law.
struct Tally {
  long checked = 0;
  bool ok = true;
  std::string witness;
  template <class R>
  void add(const R& r, const std::string& where = "") {
    ++checked;
    if (!r.ok && ok) witness = where.empty() ? r.witness : where + ": " + r.witness;
    ok = ok && r.ok;
  }
  void add(bool good, const std::string& w) {
    ++checked;
    if (!good && ok) witness = w;
    ok = ok && good;
  }
  Law law() const { return make_law("", ok, checked, witness); }
};

inline std::vector<NomPtr> nominal_corpus() {
  return {discrete(1), discrete(2), atoms(), fresh_power(2), power(2), pf(2)};
}

// Renaming sets of the corpus that are relevant.
inline std::vector<NomPtr> relevant_corpus() { return {discrete(2), atoms(), power(2), pf(2)}; }

inline std::string cat_id(CatTag c) { return cat_name(c); }

// 𝐲1 collapsed to a point from stage 2 on, over 𝕀: restriction maps do not
// preserve intersections there.
inline TruncPresheaf collapsed_y1(int bound) {
  TruncPresheaf base = representable(CatTag::I, 1, bound);
  return tabulate(
      "y1|2", CatTag::I, bound,
      [&](int n) { return n >= 2 ? std::vector<Val>{Val::nat(-1)} : base.elems[n]; },
      [&](const Mor& f, const Val& v) {
        if (f.cod >= 2) return Val::nat(-1);
        return base.at(f.cod, base.apply(f, base.find(f.dom, v)));
      });
}

}  // namespace detail

// ---- presheaf-monoidal ----

inline SuiteReport presheaf_monoidal_suite(const SuiteConfig& cfg) {
  using detail::run_law;
  SuiteReport rep;
  rep.suite = "presheaf-monoidal";
  rep.bound = cfg.bound;
  rep.seed = cfg.seed;
  int b = cfg.bound;
  for (CatTag c : {CatTag::B, CatTag::I, CatTag::S, CatTag::F}) {
    std::string p = "psh." + detail::cat_id(c) + ".";
    auto y1 = representable(c, 1, b), y2 = representable(c, 2, b), one = terminal_presheaf(c, b);
    run_law(rep, p + "functorial", [&] {
      detail::Tally t;
      for (const auto* x : {&y1, &y2, &one}) t.add(check_functorial(*x), x->name);
      return t.law();
    });
    run_law(rep, p + "unit.left.y2", [&] { return make_law("", left_unit_psh(y2, b), 1); });
    run_law(rep, p + "unit.left.1", [&] { return make_law("", left_unit_psh(one, b), 1); });
    run_law(rep, p + "unit.right.y2", [&] { return make_law("", right_unit_psh(y2, b), 1); });
    run_law(rep, p + "unit.right.1", [&] { return make_law("", right_unit_psh(one, b), 1); });

    // (X ⊕ Y) ◇ Z ≅ X ◇ Z ⊕ Y ◇ Z, i.e. − ◇ Z preserves ⊕; a failure on a
    // truncation-unstable tensor is flagged rather than counted
    struct Triple {
      const char* id;
      const TruncPresheaf *x, *y, *z;
    };
    for (const Triple& tr : {Triple{"y1_1_y1", &y1, &one, &y1}, Triple{"y1_y1_1", &y1, &y1, &one}})
      run_law(rep, p + "distributivity." + tr.id, [&] {
        Law l = make_law("", distributivity_psh(*tr.x, *tr.y, *tr.z, b), 1);
        if (!l.ok) {
          Day d(*tr.x, *tr.y, DayOp::Sum, b, b);
          Stabilization s = stabilization_tensor(d.result(), *tr.z, b);
          if (!s.stable) l.flag = "TruncationUnstable: " + s.str();
        }
        return l;
      });
    struct Pair {
      const char* id;
      const TruncPresheaf *x, *y;
    };
    for (const Pair& pr : {Pair{"y1_y1", &y1, &y1}, Pair{"y2_1", &y2, &one}, Pair{"1_y2", &one, &y2}})
      run_law(rep, p + "stabilization." + pr.id, [&] {
        Stabilization s = stabilization_tensor(*pr.x, *pr.y, b);
        Law l = make_law("", s.stable, static_cast<long>(s.counts.size()), s.stable ? "" : s.str());
        if (!s.stable) l.flag = "TruncationUnstable: " + s.str();
        return l;
      });
    run_law(rep, p + "power.two", [&] { return make_law("", day_power_iso(y1, 2, b), 1); });
    run_law(rep, p + "power.empty", [&] { return make_law("", empty_power_iso(y1, b), 1); });
    run_law(rep, p + "power.points", [&] { return make_law("", points_power_iso(c, 2, b), 1); });
    run_law(rep, p + "day_prod.unit", [&] { return make_law("", day_prod_unit(c, b), 1); });
    run_law(rep, p + "coyoneda", [&] {
      detail::Tally t;
      for (int k = 0; k <= b; ++k) t.add(coyoneda_check(y2, k), "stage " + std::to_string(k));
      return t.law();
    });
    run_law(rep, p + "adjunction", [&] {
      int ab = std::min(b, 2);
      auto a1 = representable(c, 1, ab), a0 = terminal_presheaf(c, ab);
      AdjunctionReport r = adjunction_psh(a1, a1, a0, ab);
      Law l = make_law("", r.law, r.lhs_count + r.rhs_count);
      l.bound = ab;
      return l;
    });
    run_law(rep, p + "phi.left_unit", [&] { return make_law("", phi_left_unit(y2, b), 1); });
  }
  run_law(rep, "psh.F.day_sum.is_product", [&] {
    auto y1 = representable(CatTag::F, 1, b), y2 = representable(CatTag::F, 2, b);
    detail::Tally t;
    t.add(day_sum_is_product(y1, y2, b), "y1,y2");
    t.add(day_sum_is_product(y2, terminal_presheaf(CatTag::F, b), b), "y2,1");
    return t.law();
  });
  for (auto [id, t] : {std::pair{"list", list_monad(2)}, std::pair{"bag", multiset_monad(2)}}) {
    run_law(rep, std::string("psh.monad.") + id + ".monoid_laws", [&, t = t] { return make_law("", monoid_laws(t, 2), 1); });
    run_law(rep, std::string("psh.monad.") + id + ".mult_well_defined",
            [&, t = t] { return make_law("", MonadMonoid(t, b).well_defined(), 1); });
  }
  run_law(rep, "psh.monad.bag.commutative", [&] {
    auto r = commutativity(multiset_monad(b), b);
    return make_law("", r.commutes, r.squares, r.witness);
  });
  run_law(rep, "psh.monad.list.not_commutative", [&] {
    auto r = commutativity(list_monad(b), b);
    return make_law("", !r.commutes, r.squares, r.witness);
  });
  rep.sort();
  return rep;
}

// ---- nom-substitution ----

inline SuiteReport nom_substitution_suite(const SuiteConfig& cfg) {
  using detail::run_law;
  SuiteReport rep;
  rep.suite = "nom-substitution";
  rep.bound = cfg.bound;
  rep.seed = cfg.seed;
  int n = cfg.stage();
  std::mt19937 rng(cfg.seed);
  auto corpus = detail::nominal_corpus();

  for (const auto& x : {discrete(2), atoms(), fresh_power(2), power(2), pf(2), pf(), free_group(2), lambda_terms(2)})
    run_law(rep, "nom.carrier." + x->name(), [&] {
      detail::Tally t;
      int m = std::min(n, 3);
      t.add(check_nominal(*x, m));
      t.add(check_intersection_property(*x, m));
      return t.law();
    });

  run_law(rep, "nom.tensor.nominal", [&] {
    detail::Tally t;
    for (const auto& x : corpus)
      for (const auto& y : corpus) {
        TensorSet ts(x, y);
        t.add(check_nominal(ts, 3), ts.name());
        for (const auto& c : ts.stage(3))
          if (ts.supp(c) != ts.supp_formula(c)) {
            t.add(false, ts.name() + ": support formula fails at " + ts.show(c));
            break;
          }
      }
    return t.law();
  });
  run_law(rep, "nom.unitor.left", [&] {
    detail::Tally t;
    for (const auto& y : corpus) {
      TensorSet ts(atoms(), y);
      for (int k = 0; k <= n; ++k)
        t.add(check_iso(
            ts, *y, [](const Val& c) { return left_unitor(c); }, [&](const Val& v) { return left_unitor_inv(ts, v); },
            k));
    }
    return t.law();
  });
  run_law(rep, "nom.unitor.right", [&] {
    detail::Tally t;
    for (const auto& x : corpus) {
      TensorSet ts(x, atoms());
      for (int k = 0; k <= n; ++k)
        t.add(check_iso(
            ts, *x, [&](const Val& c) { return right_unitor(*x, c); },
            [&](const Val& v) { return right_unitor_inv(ts, v); }, k));
    }
    return t.law();
  });
  run_law(rep, "nom.class_eq.closure_oracle", [&] {
    Law l = make_law("", true, 0);
    for (const auto& x : corpus)
      for (const auto& y : corpus) {
        TensorSet ts(x, y);
        for (int k = 0; k <= n; ++k) {
          ClassEqReport r = validate_class_eq(ts, k, 2, rng);
          l.checked += r.pairs;
          if (!r.ok() && l.ok) l.ok = false, l.witness = ts.name() + ": " + r.witness;
        }
      }
    return l;
  });
  run_law(rep, "nom.associator", [&] {
    detail::Tally t;
    for (const auto& x : corpus)
      for (const auto& y : corpus)
        for (const auto& z : corpus) {
          Associator a(x, y, z);
          for (int k = 0; k <= n; ++k)
            t.add(check_iso(
                a.lhs(), a.rhs(), [&](const Val& c) { return a.forward(c); },
                [&](const Val& c) { return a.inverse(c); }, k));
        }
    return t.law();
  });
  run_law(rep, "nom.pentagon", [&] {
    PentagonReport r = pentagon(atoms(), power(2), pf(2), atoms(), std::min(n, 4), 60, rng);
    return make_law("", r.ok(), r.samples, r.witness);
  });

  // captureful tensor: 𝔸^{*2} ◇̂ 𝔸 ≅ 𝔸², and 𝔸 is not a right unit
  auto cap = std::make_shared<TensorSet>(fresh_power(2), atoms(), TensorKind::Capture);
  run_law(rep, "nom.capture.fresh_pair_atoms_is_square", [&] {
    auto sq = power(2);
    detail::Tally t;
    for (int k = 0; k <= n; ++k)
      t.add(check_iso(
          *cap, *sq, [](const Val& c) { return Val::tuple(TensorSet::gamma(c)); },
          [&](const Val& v) { return cap->make(Val::tuple({Val::atom(0), Val::atom(1)}), v.kids); }, k));
    return t.law();
  });
  run_law(rep, "nom.capture.no_right_unit", [&] {
    auto a2 = fresh_power(2);
    std::string l, r;
    bool differ = false;
    for (int k = 0; k <= n; ++k) {
      auto cl = cap->stage(k).size(), cr = a2->stage(k).size();
      differ = differ || cl != cr;
      l += (k ? "," : "") + std::to_string(cl);
      r += (k ? "," : "") + std::to_string(cr);
    }
    return make_law("", differ, n + 1, "stages 0.." + std::to_string(n) + ": |" + cap->name() + "| = " + l + "; |" + a2->name() + "| = " + r);
  });

  // currying: uncurry ∘ curry = id, curry ∘ uncurry = id, supp(curry f x) = supp x
  auto curry_law = [&](const std::string& id, TensorPtr t, std::function<Val(const Val&)> f, int m, Val e1, Val e2) {
    run_law(rep, "nom.curry." + id, [&] {
      CurryReport r = curry_roundtrip(id, *t, f, m, e1, e2);
      Law l = make_law("", r.ok() && r.support_exact, 1, r.witness);
      if (!r.support_exact && l.witness.empty()) l.witness = "supp(curry f x) ≠ supp x";
      return l;
    });
  };
  auto pair_f = [](const Val& c) { return Val::tuple(TensorSet::gamma(c)); };
  auto flatten_f = [](const Val& c) {
    AtomSet s;
    for (const auto& v : TensorSet::gamma(c)) s = s.unite(atoms_of(v));
    return s.to_val();
  };
  auto rho_pf = [](const Val& c) { return right_unitor(*pf(2), c); };
  auto lam_pf = [](const Val& c) { return left_unitor(c); };
  curry_law("pair", tensor(fresh_power(2), atoms()), pair_f, n, Val::atom(0), Val::atom(5));
  curry_law("flatten", tensor(pf(2), pf(2)), flatten_f, 3, AtomSet{}.to_val(), AtomSet{0}.to_val());
  curry_law("right_unitor", tensor(pf(2), atoms()), rho_pf, 3, Val::atom(0), Val::atom(5));
  curry_law("left_unitor", tensor(atoms(), pf(2)), lam_pf, 3, AtomSet{}.to_val(), AtomSet{0}.to_val());

  // tabulated reducible maps
  run_law(rep, "nom.reducible.minimal_support", [&] {
    detail::Tally t;
    auto a = atoms();
    auto sq = power(2);
    // f(γ) = (γa1, γa1) over A = {a0, a1}: reduction support shrinks to {a1}
    HomElem f{{0, 1}, [](const std::vector<Val>& v) { return Val::tuple({v[1], v[1]}); }, HomDomain::Fresh};
    ReducibleMap m = tabulate_hom(f, a, sq);
    t.add(table_equivariant(m), "table is not equivariant");
    AtomSet hs = hom_support(*a, m.as_hom(), 4), fs = factorization_support(*a, m.as_hom(), 4);
    t.add(hs == fs && hs == AtomSet{1}, "support " + hs.str() + " vs factorization " + fs.str());
    ReducibleMap mm = minimize(m, a, Val::atom(0), 4);
    t.add(AtomSet(mm.A) == AtomSet{1} && irreducible(mm, *a, 4) && !irreducible(m, *a, 4),
          "minimized support " + AtomSet(mm.A).str());
    t.add(hom_equal(*a, m.as_hom(), mm.as_hom(), 4), "minimized map differs");
    // constants have empty reduction support
    HomElem k{{}, [](const std::vector<Val>&) { return Val::tuple({Val::atom(3), Val::atom(3)}); }, HomDomain::Fresh};
    ReducibleMap km = tabulate_hom(k, a, sq);
    t.add(km.A.empty() && irreducible(km, *a, 3), "constant map is not irreducible with empty support");
    // curried maps: table support equals the element's support
    TensorSet ts(fresh_power(2), atoms());
    for (const auto& x : fresh_power(2)->stage(3)) {
      ReducibleMap cm = tabulate_hom(curry(ts, pair_f, x), a, sq);
      t.add(hom_support(*a, cm.as_hom(), 4) == fresh_power(2)->supp(x), "curried pair at " + ts.left()->show(x));
    }
    return t.law();
  });

  // uniform tensor: matrix form against the literal single-orbit filter
  auto p2 = pf(), a2 = fresh_power(2);
  auto u = std::make_shared<UniformMatrixSet>(p2, a2), v = std::make_shared<UniformMatrixSet>(a2, p2);
  run_law(rep, "nom.uniform.matrix.nominal", [&] { return make_law("", check_nominal(*u, 3), 1); });
  run_law(rep, "nom.uniform.matrix.symmetry", [&] {
    detail::Tally t;
    for (int k = 0; k <= n; ++k)
      t.add(check_iso(
          *u, *v, [&](const Val& c) { return uniform_swap(*v, c); }, [&](const Val& c) { return uniform_swap(*u, c); },
          k));
    return t.law();
  });
  run_law(rep, "nom.uniform.matrix.day_tensor", [&] {
    detail::Tally t;
    t.add(uniform_matrix_day(atoms(), fresh_power(2), n), "A, A*2");
    t.add(uniform_matrix_day(pf(2), fresh_power(2), n), "PfA@2, A*2");
    return t.law();
  });
  run_law(rep, "nom.uniform.literal.not_symmetric", [&] {
    TensorSet lu(p2, a2, TensorKind::Uniform), lv(a2, p2, TensorKind::Uniform);
    auto s1 = lu.stage(n).size(), s2 = lv.stage(n).size();
    UniformComparison c = compare_uniform(*v, lv, n);
    std::string w = "stage " + std::to_string(n) + ": |" + lu.name() + "| = " + std::to_string(s1) + ", |" +
                    lv.name() + "| = " + std::to_string(s2) + "; " + c.witness;
    return make_law("", s1 != s2 && c.surjective && !c.injective, 2, w);
  });
  rep.sort();
  return rep;
}

// ---- bridges ----

inline SuiteReport bridges_suite(const SuiteConfig& cfg) {
  using detail::run_law;
  SuiteReport rep;
  rep.suite = "bridges";
  rep.bound = cfg.bound;
  rep.seed = cfg.seed;
  int n = std::min(cfg.stage(), 4);
  int b = cfg.bound;
  std::mt19937 rng(cfg.seed);

  run_law(rep, "bridge.I_star.stages", [&] {
    detail::Tally t;
    for (const auto& x : detail::nominal_corpus()) {
      TruncPresheaf p = I_star(*x, CatTag::I, n);
      for (int k = 0; k <= n; ++k)
        t.add(p.size(k) == static_cast<int>(x->stage(k).size()), x->name() + " at stage " + std::to_string(k));
      t.add(check_functorial(p), x->name());
    }
    return t.law();
  });
  run_law(rep, "bridge.upper.representable", [&] {
    detail::Tally t;
    for (int k = 0; k <= 2; ++k) t.add(upper_representable(k, n), "y" + std::to_string(k));
    return t.law();
  });
  run_law(rep, "bridge.upper.roundtrip.I", [&] {
    detail::Tally t;
    for (const auto& x : {atoms(), fresh_power(2), pf(), power(2)}) t.add(upper_star_roundtrip(x, CatTag::I, n), x->name());
    return t.law();
  });
  run_law(rep, "bridge.upper.truncation_unstable", [&] {
    try {
      I_upper(detail::collapsed_y1(b));
      return make_law("", false, 1, "no TruncationUnstable raised for y1|2");
    } catch (const TruncationUnstable& e) {
      return make_law("", true, 1, e.what());
    }
  });
  run_law(rep, "bridge.fresh_product.day_sum", [&] {
    detail::Tally t;
    t.add(fresh_product_day_sum(atoms(), atoms(), n), "A, A");
    t.add(fresh_product_day_sum(pf(2), fresh_power(2), n), "PfA@2, A*2");
    return t.law();
  });
  run_law(rep, "bridge.species.B.nominal", [&] {
    detail::Tally t;
    for (const auto& x : {atoms(), fresh_power(2), pf(), power(2)}) t.add(species_roundtrip_nominal(x, CatTag::B, n), x->name());
    return t.law();
  });
  run_law(rep, "bridge.species.B.presheaf", [&] {
    detail::Tally t;
    for (int i = 0; i < 10; ++i) {
      TruncPresheaf p = random_presheaf(rng, CatTag::B, b, 3);
      t.add(species_roundtrip_presheaf(p), p.name);
    }
    return t.law();
  });
  run_law(rep, "bridge.species.not_support_preserving", [&] {
    EqMap term{"!", fresh_power(2), discrete(1), [](const Val&) { return Val::nat(0); }};
    try {
      species_map(term, species(*fresh_power(2), CatTag::B, b), species(*discrete(1), CatTag::B, b));
      return make_law("", false, 1, "no NotSupportPreserving raised");
    } catch (const NotSupportPreserving& e) {
      return make_law("", true, 1, e.what());
    }
  });
  run_law(rep, "bridge.T.monad_laws", [&] {
    detail::Tally t;
    for (const auto& x : {fresh_power(2), pf(2), atoms()}) t.add(t_monad_laws(x, 3), x->name());
    return t.law();
  });
  run_law(rep, "bridge.T.terminal_is_pf", [&] { return make_law("", r_terminal_is_pf(n), 1); });
  run_law(rep, "bridge.T.writer", [&] {
    detail::Tally t;
    for (const auto& x : {atoms(), pf(2)}) t.add(writer_laws(x, 3), x->name());
    return t.law();
  });
  run_law(rep, "bridge.kleisli.transpose", [&] {
    Law l = make_law("", true, 0);
    for (auto [x, y] : {std::pair{fresh_power(2), atoms()}, std::pair{pf(2), pf(2)}, std::pair{power(2), atoms()}}) {
      KleisliReport r = kleisli_transpose(x, y, 3);
      l.checked += r.maps;
      bool good = r.ok() && r.maps == r.transposes && r.maps > 0;
      if (!good && l.ok) l.ok = false, l.witness = x->name() + " → " + y->name() + ": " + r.witness;
    }
    return l;
  });
  run_law(rep, "bridge.eq.product_universal", [&] {
    UniversalReport r = eq_product_universal(fresh_power(2), power(2), pf(2), 3);
    return make_law("", r.ok, r.cones, r.witness);
  });
  run_law(rep, "bridge.eq.terminal_universal", [&] {
    detail::Tally t;
    for (const auto& x : {power(2), pf(2), fresh_power(2)}) {
      UniversalReport r = eq_terminal_universal(x, 3);
      t.add(r.ok, x->name() + ": " + r.witness);
    }
    return t.law();
  });
  rep.sort();
  return rep;
}

// ---- sheaf ----

inline SuiteReport sheaf_suite(const SuiteConfig& cfg) {
  using detail::run_law;
  SuiteReport rep;
  rep.suite = "sheaf";
  rep.bound = cfg.bound;
  rep.seed = cfg.seed;
  std::mt19937 rng(cfg.seed);

  // exact when presheaves are tabulated to 2B − A for covers A ⊆ B ≤ 3
  run_law(rep, "sheaf.I.intersections_iff_sheaf", [&] {
    const int tab = 6, covers = 3, samples = 30;
    int sheaves = 0;
    Law l = make_law("", true, samples);
    l.bound = tab;
    for (int i = 0; i < samples; ++i) {
      TruncPresheaf p = random_presheaf(rng, CatTag::I, tab, 3);
      bool ip = preserves(p, SquareKind::Intersections, covers).ok;
      SheafVerdict v = ictx_sheaf(p, covers);
      sheaves += v.sheaf;
      if (ip != v.sheaf && l.ok) l.ok = false, l.witness = p.name + ": " + v.witness;
    }
    if (l.ok) l.witness = std::to_string(sheaves) + " of " + std::to_string(samples) + " are sheaves";
    return l;
  });
  run_law(rep, "sheaf.O.intersections_iff_sheaf", [&] {
    const int samples = 30;
    int sheaves = 0;
    Law l = make_law("", true, samples);
    for (int i = 0; i < samples; ++i) {
      SubsetPresheaf p = random_subset_presheaf(rng, 3, "P" + std::to_string(i));
      bool fun = check_functorial(p).ok;
      bool ip = preserves_intersections(p).ok;
      LawResult o = o_sheaf(p);
      bool sh = o.ok && iSub_separated(p).ok;
      sheaves += sh;
      if ((!fun || ip != sh) && l.ok) l.ok = false, l.witness = p.name + ": " + o.witness;
    }
    if (l.ok) l.witness = std::to_string(sheaves) + " of " + std::to_string(samples) + " are sheaves";
    return l;
  });
  for (CatTag c : {CatTag::J, CatTag::Isub, CatTag::B, CatTag::I, CatTag::S, CatTag::F}) {
    run_law(rep, "sheaf.contextuality." + cat_name(c), [&] {
      ContextualityReport r = contextuality_check(c, cfg.bound);
      std::string w = std::string("contextual=") + (r.contextual() ? "yes" : "no") +
                      " product_prime=" + (r.product_prime() ? "yes" : "no") + (r.witness.empty() ? "" : "; " + r.witness);
      return make_law("", r.agree(), 1, w);
    });
  }
  run_law(rep, "sheaf.ictx.stability", [&] {
    detail::Tally t;
    for (CatTag c : {CatTag::B, CatTag::I, CatTag::F})
      for (int a = 0; a <= cfg.bound; ++a)
        for (const Mor& cover : covers_ictx(c, a, cfg.bound))
          for (int d = 0; d <= cfg.bound; ++d)
            for (const Mor& g : hom(c, a, d)) {
              StabilityWitness w = ictx_stability(c, cover, g);
              t.add(w.commutes && w.in_ctx, cat_name(c) + ": cover " + cover.str() + " along " + g.str());
            }
    return t.law();
  });
  rep.sort();
  return rep;
}

// ---- renaming ----

inline SuiteReport renaming_suite(const SuiteConfig& cfg) {
  using detail::run_law;
  SuiteReport rep;
  rep.suite = "renaming";
  rep.bound = cfg.bound;
  rep.seed = cfg.seed;
  int b = cfg.bound;
  std::mt19937 rng(cfg.seed);
  auto relevant = detail::relevant_corpus();

  for (const auto& x : {discrete(2), atoms(), power(2), pf(2), pf(), free_group(2), lambda_terms(2)})
    run_law(rep, "ren.carrier." + x->name(), [&] { return make_law("", check_renaming_set(*x, b), 1); });
  for (const auto& x : relevant)
    run_law(rep, "ren.relevant." + x->name(), [&] { return make_law("", check_relevant(*x, b), 1); });
  run_law(rep, "ren.relevant.FreeGroup@2.fails", [&] {
    LawCheck r = check_relevant(*free_group(2), b);
    return make_law("", !r.ok, 1, r.witness);
  });
  run_law(rep, "ren.tensor.preserves_relevance", [&] {
    detail::Tally t;
    for (const auto& x : relevant)
      for (const auto& y : relevant) {
        RenTensorSet ts(x, y);
        t.add(check_renaming_set(ts, 3), ts.name());
        t.add(check_relevant(ts, 3), ts.name());
      }
    return t.law();
  });
  run_law(rep, "ren.unitor.left", [&] {
    detail::Tally t;
    for (const auto& y : relevant) {
      RenTensorSet ts(atoms(), y);
      auto f = [](const Val& c) { return ren_left_unitor(c); };
      for (int k = 0; k <= b; ++k) {
        t.add(check_nominal_iso(ts, *y, f, k), ts.name());
        t.add(check_ren_equivariant(ts, *y, f, k), ts.name());
        for (const auto& v : y->stage(k)) t.add(f(ren_left_unitor_inv(ts, v)) == v, "inverse at " + y->show(v));
      }
    }
    return t.law();
  });
  run_law(rep, "ren.unitor.right", [&] {
    detail::Tally t;
    for (const auto& x : relevant) {
      RenTensorSet ts(x, atoms());
      auto f = [&](const Val& c) { return ren_right_unitor(ts, c); };
      for (int k = 0; k <= b; ++k) {
        t.add(check_nominal_iso(ts, *x, f, k), ts.name());
        t.add(check_ren_equivariant(ts, *x, f, k), ts.name());
        for (const auto& v : x->stage(k)) t.add(f(ren_right_unitor_inv(ts, v)) == v, "inverse at " + x->show(v));
      }
    }
    return t.law();
  });
  run_law(rep, "ren.class_eq.closure_oracle", [&] {
    Law l = make_law("", true, 0);
    for (const auto& x : relevant)
      for (const auto& y : relevant) {
        RenTensorSet ts(x, y);
        auto ys = y->stage(2);
        std::vector<Val> vals;
        for (std::size_t i = 0; i < ys.size() && vals.size() < 3; i += std::max<std::size_t>(1, ys.size() / 3))
          vals.push_back(ys[i]);
        RenClassEqReport r = validate_ren_class_eq(ts, 4, vals);
        l.checked += r.pairs;
        if (!r.ok() && l.ok) l.ok = false, l.witness = ts.name() + ": " + r.witness;
      }
    return l;
  });
  for (const Counterexample& c : {free_group_not_relevant(), hom_not_relevant()}) {
    Law l = make_law("ren.counterexample." + c.name, c.verified, 1, c.witness);
    rep.counterexamples.push_back(c);
    rep.add(l);
  }

  // relevance sets against presheaves on 𝕊 and renaming sets on 𝔽
  run_law(rep, "ren.species.S.nominal", [&] {
    detail::Tally t;
    for (const auto& x : {pf(), power(2), atoms()}) t.add(species_roundtrip_nominal(x, CatTag::S, b), x->name());
    return t.law();
  });
  run_law(rep, "ren.species.S.presheaf", [&] {
    detail::Tally t;
    for (int i = 0; i < 10; ++i) {
      TruncPresheaf p = random_presheaf(rng, CatTag::S, b, 3);
      t.add(species_roundtrip_presheaf(p), p.name);
    }
    return t.law();
  });
  run_law(rep, "ren.species.S.rejects_non_relevant", [&] {
    try {
      species(*free_group(2), CatTag::S, b);
      return make_law("", false, 1, "no NotRelevant raised for the free group");
    } catch (const NotRelevant& e) {
      return make_law("", true, 1, e.what());
    }
  });
  run_law(rep, "ren.preimages.relevant_iff", [&] {
    detail::Tally t;
    for (const auto& x : relevant) t.add(preserves(I_star(*x, CatTag::F, b), SquareKind::Preimages), x->name());
    LawResult fg = preserves(I_star(*free_group(2), CatTag::F, b), SquareKind::Preimages);
    t.add(!fg.ok, "free group preserves preimages");
    return t.law();
  });
  run_law(rep, "ren.T.lifted_monad", [&] {
    detail::Tally t;
    for (const auto& x : {power(2), pf(2)}) {
      t.add(t_monad_laws(x, 3), x->name());
      auto tx = tmonad(x);
      t.add(check_renaming_set(*tx, 3), tx->name());
      t.add(check_relevant(*tx, 3), tx->name());
    }
    return t.law();
  });
  run_law(rep, "ren.upper.roundtrip.F", [&] {
    detail::Tally t;
    for (const auto& x : {pf(2), power(2), atoms()}) t.add(upper_star_roundtrip(x, CatTag::F, b), x->name());
    return t.law();
  });
  run_law(rep, "ren.upper.day_sum_is_product", [&] {
    detail::Tally t;
    t.add(upper_carries_product(pf(2), atoms(), b), "PfA@2, A");
    TruncPresheaf fx = I_star(*pf(2), CatTag::F, b), fy = I_star(*atoms(), CatTag::F, b);
    t.add(day_sum_is_product(fx, fy, b), "Day sum over F");
    return t.law();
  });
  rep.sort();
  return rep;
}

// ---- dispatch ----

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"presheaf-monoidal", "nom-substitution", "bridges",
                                              "sheaf",             "renaming",         "lambda"};
  return names;
}

inline SuiteReport lambda_suite_for(const SuiteConfig& cfg) {
  LambdaSuiteConfig lc;
  lc.depth = cfg.depth;
  lc.seed = cfg.seed;
  SuiteReport r = lambda_suite(lc);
  r.bound = cfg.bound;
  return r;
}

inline SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (name == "presheaf-monoidal") return presheaf_monoidal_suite(cfg);
  if (name == "nom-substitution") return nom_substitution_suite(cfg);
  if (name == "bridges") return bridges_suite(cfg);
  if (name == "sheaf") return sheaf_suite(cfg);
  if (name == "renaming") return renaming_suite(cfg);
  if (name == "lambda") return lambda_suite_for(cfg);
  if (name == "all") {
    SuiteReport all;
    all.suite = "all";
    all.bound = cfg.bound;
    all.seed = cfg.seed;
    for (const auto& s : suite_names()) all.merge(run_suite(s, cfg));
    all.sort();
    return all;
  }
  throw UnknownSuite(name);
}

}  // namespace nomsub
