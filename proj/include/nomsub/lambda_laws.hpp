#pragma once

// The ◇-monoid (Λ, bind, var) and its law suite, on captureful classes for
// full substitution and on fresh-valued classes for the affine tensor.

#include <random>
#include <string>
#include <vector>

#include "nomsub/lambda.hpp"
#include "nomsub/renaming.hpp"
#include "nomsub/report.hpp"
#include "nomsub/subst_nom.hpp"

namespace nomsub {

namespace lam {

// bind on a class x[γ] of Λ ◇ Λ, Λ ◇̂ Λ or Λ ◇ᴿ Λ
inline Val bind_class(const NomSet& left, const Val& c) {
  const Val& x = TensorSet::x_part(c);
  AtomSet s = left.supp(x);
  std::map<Atom, Val> sub;
  for (std::size_t i = 0; i < s.size(); ++i) sub[s[i]] = TensorSet::gamma(c)[i];
  return lam::bind(x, sub);
}

// Random term of depth ≤ d over atoms A_n; leaves may be bound indices.
inline Val random_term(std::mt19937& rng, int n, int d, int binders = 0) {
  auto pick = [&](int k) { return std::uniform_int_distribution<int>(0, k - 1)(rng); };
  int leaves = n + binders;
  int choice = d <= 1 ? 0 : pick(3);
  if (choice == 0 && leaves > 0) {
    int i = pick(leaves);
    return i < n ? var(i) : bvar(i - n);
  }
  if (choice == 1 || leaves == 0) return abs(random_term(rng, n, std::max(1, d - 1), binders + 1));
  return app(random_term(rng, n, d - 1, binders), random_term(rng, n, d - 1, binders));
}

}  // namespace lam

struct LambdaSuiteConfig {
  int depth = 3;          // outer term depth for unit and sampled laws
  int stage = 4;          // atoms available to unit laws and equivariance
  int db_instances = 500;
  int roundtrip_terms = 200;
  int assoc_samples = 300;
  unsigned seed = 1;
};

inline SuiteReport lambda_suite(const LambdaSuiteConfig& cfg) {
  SuiteReport rep;
  rep.suite = "lambda";
  rep.bound = cfg.depth;
  rep.seed = cfg.seed;
  std::mt19937 rng(cfg.seed);
  auto lamd = lambda_terms(cfg.depth);

  // parse, print, α-equivalence
  {
    bool ok = lam::alpha_eq("λa. a b", "λc. c b") && !lam::alpha_eq("λa. a b", "λa. a c");
    rep.add(make_law("lambda.alpha_eq.examples", ok, 2));
    LawCheck r;
    long n = 0;
    for (int i = 0; i < cfg.roundtrip_terms; ++i) {
      Val t = lam::random_term(rng, 4, cfg.depth + 1);
      ++n;
      std::string s = lam::print(t);
      if (lam::parse(s) != t) r.fail("print/parse changes " + s);
    }
    rep.add(make_law("lambda.parse_print.roundtrip", r, n));
  }

  // support and action
  {
    LawCheck r;
    long n = 0;
    for (const auto& t : lamd->stage(std::min(cfg.stage, 3))) {
      ++n;
      if (lamd->supp(t) != lam::free_vars(t)) r.fail("supp ≠ free names at " + lam::print(t));
    }
    rep.add(make_law("lambda.support.free_vars", r, n));
    Val t = lam::parse("λa. a b");
    bool ok = lamd->supp(t) == AtomSet{1} && lam::free_vars(lam::parse("λa. a")).empty() &&
              lamd->act(Perm::swap(0, 1), t) == lam::parse("λc. c a");
    rep.add(make_law("lambda.action.examples", ok, 3, ok ? "" : lam::print(lamd->act(Perm::swap(0, 1), t))));
  }

  // the worked example; the stated display drops the substituted term
  {
    Val t = lam::parse("λx. x y");
    auto sub = lam::parse_subst("y=x y");
    Val got = lam::bind(t, sub);
    Val want = lam::parse("λz. z (x y)");
    rep.add(make_law("lambda.bind.worked_example", got == want && lam::db::bind(t, sub) == want, 1, lam::print(got)));
  }

  auto cap = std::make_shared<TensorSet>(lamd, lamd, TensorKind::Capture);
  auto aff = std::make_shared<TensorSet>(lamd, lamd, TensorKind::Sub);

  // de Bruijn agreement on random classes of Λ ◇̂ Λ
  {
    LawCheck r;
    long n = 0;
    for (int i = 0; i < cfg.db_instances; ++i) {
      Val x = lam::random_term(rng, 3, cfg.depth);
      AtomSet s = lam::free_vars(x);
      std::vector<Val> g;
      for (std::size_t k = 0; k < s.size(); ++k) g.push_back(lam::random_term(rng, 4, cfg.depth));
      Val c = cap->make(x, g);
      ++n;
      Val a = lam::bind_class(*lamd, c);
      std::map<Atom, Val> sub;
      for (std::size_t k = 0; k < s.size(); ++k) sub[s[k]] = g[k];
      Val b = lam::db::bind(x, sub);
      if (a != b) r.fail("bind " + cap->show(c) + " = " + lam::print(a) + ", de Bruijn gives " + lam::print(b));
      else if (lam::bind(x, sub) != a) r.fail("bind depends on the representative of " + cap->show(c));
    }
    rep.add(make_law("lambda.bind.de_bruijn", r, n));
  }

  // equivariance on classes with all permutations of the stage
  {
    LawCheck r;
    long n = 0;
    auto perms = all_perms(AtomSet::stage(cfg.stage));
    for (int i = 0; i < 40; ++i) {
      Val x = lam::random_term(rng, cfg.stage, cfg.depth);
      std::vector<Val> g;
      for (std::size_t k = 0; k < lam::free_vars(x).size(); ++k) g.push_back(lam::random_term(rng, cfg.stage, 2));
      Val c = cap->make(x, g);
      for (const auto& p : perms) {
        ++n;
        if (lam::bind_class(*lamd, cap->act(p, c)) != lamd->act(p, lam::bind_class(*lamd, c)))
          r.fail("bind not equivariant at " + cap->show(c) + " under " + p.str());
      }
    }
    rep.add(make_law("lambda.bind.equivariant", r, n));
  }

  // units: bind(a[a↦t]) = t and bind(t[a↦a]) = t, for both tensors
  for (auto [tag, t] : {std::pair{"capture", cap}, std::pair{"fresh", aff}}) {
    LawCheck l, rr;
    long n = 0;
    for (const auto& x : lamd->stage(cfg.stage)) {
      ++n;
      if (lam::bind_class(*lamd, t->make(Val::atom(0), {x})) != x) l.fail("left unit fails at " + lam::print(x));
      std::vector<Val> g;
      for (Atom a : lam::free_vars(x)) g.push_back(Val::atom(a));
      if (lam::bind_class(*lamd, t->make(x, g)) != x) rr.fail("right unit fails at " + lam::print(x));
    }
    rep.add(make_law(std::string("lambda.monoid.") + tag + ".left_unit", l, n));
    rep.add(make_law(std::string("lambda.monoid.") + tag + ".right_unit", rr, n));
  }

  // associativity modulo the associator: exhaustive at depth 2, sampled at
  // the configured depth over every orbit of outer terms
  auto assoc = [&](TensorKind kind, int d, int stage, int samples, const std::string& id) {
    auto ld = lambda_terms(d);
    Associator as(ld, ld, ld, kind);
    LawCheck r;
    long n = 0;
    auto check = [&](const Val& c) {
      ++n;
      Val u = TensorSet::x_part(c);
      Val inner = lam::bind_class(*ld, u);
      std::map<Atom, Val> sub;
      AtomSet su = as.lhs().left()->supp(u);
      for (std::size_t i = 0; i < su.size(); ++i) sub[su[i]] = TensorSet::gamma(c)[i];
      Val left = lam::bind(inner, sub);
      Val rc = as.forward(c);
      std::vector<Val> g;
      for (const auto& w : TensorSet::gamma(rc)) g.push_back(lam::bind_class(*ld, w));
      Val right = lam::bind_class(*ld, class_val(TensorSet::x_part(rc), g));
      if (left != right) r.fail("associativity fails at " + as.lhs().show(c) + ": " + lam::print(left) + " vs " + lam::print(right));
    };
    // a random term, moved off `used` for the fresh tensor
    auto draw = [&](AtomSet& used) {
      Val y = lam::random_term(rng, stage, d);
      if (kind == TensorKind::Sub) {
        AtomSet sy = lam::free_vars(y);
        auto f = fresh(used, static_cast<int>(sy.size()));
        std::map<Atom, Atom> shift;
        for (std::size_t j = 0; j < sy.size(); ++j) shift[sy[j]] = f[j];
        y = act(extend_bijection(shift), y);
      }
      used = used.unite(lam::free_vars(y));
      return y;
    };
    if (samples <= 0) {
      for (const auto& c : as.lhs().stage(stage)) check(c);
    } else {
      for (int k = 0; k <= stage; ++k)
        for (const auto& x : exact_reps(*ld, k))
          for (int s = 0; s < samples; ++s) {
            std::vector<Val> g;
            AtomSet used;
            for (int i = 0; i < k; ++i) g.push_back(draw(used));
            auto xy = std::static_pointer_cast<const TensorSet>(as.lhs().left());
            Val inner = xy->make(x, g);
            AtomSet si = xy->supp(inner);
            std::vector<Val> dlt;
            AtomSet used2;
            for (std::size_t i = 0; i < si.size(); ++i) dlt.push_back(draw(used2));
            check(as.lhs().make(inner, dlt));
          }
    }
    rep.add(make_law(id, r, n));
  };
  assoc(TensorKind::Capture, 2, 2, 0, "lambda.monoid.capture.assoc.depth2");
  assoc(TensorKind::Sub, 2, 3, 0, "lambda.monoid.fresh.assoc.depth2");
  if (cfg.depth >= 3) {
    assoc(TensorKind::Capture, cfg.depth, cfg.stage, std::max(1, cfg.assoc_samples / 50), "lambda.monoid.capture.assoc.sampled");
    assoc(TensorKind::Sub, cfg.depth, cfg.stage, std::max(1, cfg.assoc_samples / 50), "lambda.monoid.fresh.assoc.sampled");
  }

  // β through a singleton bind: (λa. p) q ↦ p[a ↦ q]
  {
    LawCheck r;
    long n = 0;
    for (int i = 0; i < 200; ++i) {
      Val p = lam::random_term(rng, 3, cfg.depth);
      Val q = lam::random_term(rng, 4, cfg.depth);
      ++n;
      Val red = lam::beta(lam::app(lam::lam(0, p), q));
      if (red != lam::bind(p, {{0, q}})) r.fail("β differs from bind at " + lam::print(p) + " with " + lam::print(q));
    }
    rep.add(make_law("lambda.beta.singleton_bind", r, n));
  }

  // curry of bind: at a variable it is γ ↦ γ(a); round trips on Λ ◇ Λ
  {
    auto ld2 = lambda_terms(2);
    auto t = std::make_shared<TensorSet>(lamd, ld2, TensorKind::Sub);
    auto f = [&](const Val& c) { return lam::bind_class(*lamd, c); };
    CurryReport cr = curry_roundtrip("bind", *t, f, 2, lam::var(0), lam::app(lam::var(0), lam::var(1)));
    rep.add(make_law("lambda.curry.roundtrip", cr.ok(), 1, cr.witness));
    rep.add(make_law("lambda.curry.support_exact", cr.support_exact, 1, cr.witness));
    HomElem h = curry(*t, f, lam::var(0));
    bool ok = true;
    for (const auto& y : ld2->stage(2))
      if (h({{0, y}}) != y) ok = false;
    rep.add(make_law("lambda.curry.at_variable", ok, 1));
  }

  // the renaming-set bind on Λ ◇ᴿ Λ: well defined on classes, commutes with
  // renamings, and curry/uncurry are inverse on depth-2 terms
  {
    auto ld2 = lambda_terms(2);
    RenTensorSet t(ld2, ld2);
    LawCheck wd, eqv, rt;
    long n = 0;
    auto rhos = all_renamings(AtomSet::stage(2));
    for (int k = 0; k <= 2; ++k)
      for (const auto& x : exact_reps(*ld2, k)) {
        std::vector<Val> g;
        auto ys = ld2->stage(2);
        std::function<void()> go = [&]() {
          if (static_cast<int>(g.size()) == k) {
            ++n;
            Val c = t.make(x, g);
            std::map<Atom, Val> sub;
            for (int i = 0; i < k; ++i) sub[i] = g[i];
            Val raw = lam::bind(x, sub);
            if (lam::bind_class(*ld2, c) != raw) wd.fail("Ren bind depends on the representative of " + t.show(c));
            for (const auto& rho : rhos)
              if (lam::bind_class(*ld2, t.rename(rho, c)) != act(rho, raw))
                eqv.fail("Ren bind does not commute with " + rho.str() + " at " + t.show(c));
            // curry at x then uncurry at the class
            HomElem h;
            h.idx = AtomSet::stage(k).elems();
            h.dom = HomDomain::Any;
            h.g = [&](const std::vector<Val>& gg) { return lam::bind_class(*ld2, t.make(x, gg)); };
            if (h(sub) != lam::bind_class(*ld2, c)) rt.fail("uncurry∘curry differs at " + t.show(c));
            return;
          }
          for (const auto& y : ys) {
            g.push_back(y);
            go();
            g.pop_back();
          }
        };
        go();
      }
    rep.add(make_law("lambda.ren.bind.well_defined", wd, n));
    rep.add(make_law("lambda.ren.bind.renaming_equivariant", eqv, n));
    rep.add(make_law("lambda.ren.curry.roundtrip", rt, n));
  }

  rep.sort();
  return rep;
}

}  // namespace nomsub
