#pragma once

// Renaming sets: relevance, the renaming substitution tensor with its
// one-step normal form (collapse, then a permutation search) against a
// union-find closure oracle, renaming-hom elements, and the two relevance
// counterexamples.

#include <random>

#include "nomsub/quotient.hpp"
#include "nomsub/report.hpp"
#include "nomsub/subst_nom.hpp"

namespace nomsub {

// supp(ρ·x) = ρ[supp x] for every renaming ρ of A_n and x ∈ X(n)
inline LawCheck check_relevant(const NomSet& x, int n) {
  LawCheck r;
  AtomSet sn = AtomSet::stage(n);
  auto rhos = all_renamings(sn);
  for (const auto& v : x.stage(n)) {
    AtomSet s = x.ren_supp(v);
    for (const auto& rho : rhos) {
      Val w = x.rename(rho, v);
      if (x.ren_supp(w) != rho.image(s)) {
        r.fail(x.name() + ": supp(" + rho.str() + "·" + x.show(v) + ") = " + x.ren_supp(w).str() + " ≠ " +
               rho.image(s).str());
        return r;
      }
    }
  }
  return r;
}

// renaming-action laws and agreement of renaming support with nominal support
inline LawCheck check_renaming_set(const NomSet& x, int n) {
  LawCheck r;
  AtomSet sn = AtomSet::stage(n);
  auto rhos = all_renamings(sn);
  auto st = x.stage(n);
  std::set<Val> in(st.begin(), st.end());
  for (const auto& v : st) {
    if (x.rename(Renaming(), v) != v) r.fail(x.name() + ": identity renaming moves " + x.show(v));
    if (x.ren_supp(v) != x.supp(v)) r.fail(x.name() + ": renaming support differs from support at " + x.show(v));
    for (std::size_t i = 0; i < rhos.size(); i += 3) {
      Val w = x.rename(rhos[i], v);
      if (!in.count(w)) r.fail(x.name() + ": stage not closed under " + rhos[i].str());
      for (std::size_t j = 0; j < rhos.size(); j += 7)
        if (x.rename(rhos[j].compose(rhos[i]), v) != x.rename(rhos[j], w))
          r.fail(x.name() + ": renaming action does not respect composition");
    }
  }
  return r;
}

// X ◇ Y for renaming sets: classes (x, γ ∈ Y^{supp x}) modulo
// (σ·x, γ) ∼ (x, γ∘σ) for all renamings σ. Canonical classes have γ
// injective and x canonical under permutations.
class RenTensorSet : public NomSet {
 public:
  RenTensorSet(NomPtr x, NomPtr y) : x_(std::move(x)), y_(std::move(y)) {
    if (!x_->renamable() || !y_->renamable()) throw std::invalid_argument("RenTensorSet: factors must be renaming sets");
  }
  const NomPtr& left() const { return x_; }
  const NomPtr& right() const { return y_; }
  std::string name() const override { return "(" + x_->name() + "◇ᴿ" + y_->name() + ")"; }
  int max_support() const override {
    int a = x_->max_support(), b = y_->max_support();
    return a < 0 || b < 0 ? -1 : a * b;
  }

  // merge atoms of supp x carrying equal values into the least of them
  std::pair<Val, std::vector<Val>> collapse(const Val& x, const std::vector<Val>& g) const {
    AtomSet s = x_->supp(x);
    std::map<Atom, Atom> m;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j)
        if (g[j] == g[i]) {
          m[s[i]] = s[j];
          break;
        }
    Val x2 = x_->rename(Renaming(m), x);
    AtomSet s2 = x_->supp(x2);
    std::vector<Val> g2;
    for (Atom a : s2) g2.push_back(g[s.index_of(a)]);
    return {x2, g2};
  }

  Val make(const Val& x, const std::vector<Val>& g) const {
    auto [x2, g2] = collapse(x, g);
    Perm p;
    Val cx = canonical(*x_, x2, &p);
    auto moved = transport(*x_, p, x2, g2);
    std::vector<Val> best;
    bool first = true;
    for (const auto& q : stabilizer(*x_, cx, static_cast<int>(moved.second.size()))) {
      std::vector<Val> g3(moved.second.size());
      for (std::size_t i = 0; i < g3.size(); ++i) g3[q(static_cast<Atom>(i))] = moved.second[i];
      if (first || g3 < best) best = std::move(g3), first = false;
    }
    return class_val(cx, best);
  }

  Val act(const Perm& p, const Val& c) const override { return rename(p.as_renaming(), c); }
  Val rename(const Renaming& r, const Val& c) const override {
    std::vector<Val> g;
    for (const auto& v : TensorSet::gamma(c)) g.push_back(y_->rename(r, v));
    return make(TensorSet::x_part(c), g);
  }
  AtomSet over_support(const Val& c) const override {
    AtomSet s;
    for (const auto& v : TensorSet::gamma(c)) s = s.unite(y_->over_support(v));
    return s;
  }

  std::vector<Val> stage(int n) const override {
    if (auto it = cache_.find(n); it != cache_.end()) return it->second;
    std::set<Val> out;
    auto ys = y_->stage(n);
    int kc = x_->max_support() >= 0 ? x_->max_support() : n;
    for (int k = 0; k <= kc; ++k)
      for (const auto& x : exact_reps(*x_, k)) {
        std::vector<Val> g;
        std::function<void()> go = [&]() {
          if (static_cast<int>(g.size()) == k) {
            out.insert(make(x, g));
            return;
          }
          for (const auto& v : ys) {
            g.push_back(v);
            go();
            g.pop_back();
          }
        };
        go();
      }
    std::vector<Val> v(out.begin(), out.end());
    cache_[n] = v;
    return v;
  }

  std::string show(const Val& c) const override {
    std::string s = x_->show(TensorSet::x_part(c)) + "[";
    const auto& g = TensorSet::gamma(c);
    AtomSet sx = x_->supp(TensorSet::x_part(c));
    for (std::size_t i = 0; i < g.size(); ++i) s += (i ? ", " : "") + atom_name(sx[i]) + "↦" + y_->show(g[i]);
    return s + "]";
  }

 private:
  NomPtr x_, y_;
  mutable std::map<int, std::vector<Val>> cache_;
};

// 𝔸 ◇ᴿ Y ≅ Y: a[a↦y] ↦ y
inline Val ren_left_unitor(const Val& c) { return TensorSet::gamma(c)[0]; }
inline Val ren_left_unitor_inv(const RenTensorSet& t, const Val& y) { return t.make(Val::atom(0), {y}); }

// X ◇ᴿ 𝔸 ≅ X: x[γ] ↦ γ·x, read as a renaming of supp x
inline Val ren_right_unitor(const RenTensorSet& t, const Val& c) {
  const Val& x = TensorSet::x_part(c);
  AtomSet s = t.left()->supp(x);
  std::map<Atom, Atom> m;
  for (std::size_t i = 0; i < s.size(); ++i) m[s[i]] = TensorSet::gamma(c)[i].v;
  return t.left()->rename(Renaming(m), x);
}
inline Val ren_right_unitor_inv(const RenTensorSet& t, const Val& x) {
  std::vector<Val> g;
  for (Atom a : t.left()->supp(x)) g.push_back(Val::atom(a));
  return t.make(x, g);
}

// One step: collapse both sides, then search for a permutation.
inline bool ren_class_eq(const RenTensorSet& t, const RawClass& c1, const RawClass& c2) {
  auto [x1, g1] = t.collapse(c1.x, c1.g);
  auto [x2, g2] = t.collapse(c2.x, c2.g);
  return class_eq(*t.left(), {x1, g1}, {x2, g2});
}

struct RenClassEqReport {
  long universe = 0;
  long pairs = 0;
  long agree = 0;
  long classes = 0;
  std::string witness;
  bool ok() const { return pairs == agree; }
};

// Oracle: all raw pairs (x, γ) with x ∈ X(pool) and γ: supp x → values,
// quotiented by union-find over every renaming of the pool. The one-step
// check must agree with the oracle on every pair of the universe.
inline RenClassEqReport validate_ren_class_eq(const RenTensorSet& t, int pool_size, const std::vector<Val>& values) {
  RenClassEqReport rep;
  const NomSet& x = *t.left();
  AtomSet pool = AtomSet::stage(pool_size);
  std::vector<RawClass> u;
  std::map<Val, int> id;
  auto xs = x.stage(pool_size);
  for (const auto& v : xs) {
    int k = static_cast<int>(x.supp(v).size());
    std::vector<Val> g;
    std::function<void()> go = [&]() {
      if (static_cast<int>(g.size()) == k) {
        id[class_val(v, g)] = static_cast<int>(u.size());
        u.push_back({v, g});
        return;
      }
      for (const auto& y : values) {
        g.push_back(y);
        go();
        g.pop_back();
      }
    };
    go();
  }
  rep.universe = static_cast<long>(u.size());
  UnionFind uf;
  for (std::size_t i = 0; i < u.size(); ++i) uf.add();
  // (σ·x, γ|supp σx) ∼ (x, γ∘σ) for every γ on σ[supp x]
  for (const auto& sigma : all_renamings(pool))
    for (const auto& xv : xs) {
      Val sx = x.rename(sigma, xv);
      AtomSet s = x.supp(xv), ss = x.supp(sx), img = sigma.image(s);
      std::vector<Val> g(img.size());
      std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (i == img.size()) {
          std::vector<Val> pulled, restricted;
          for (Atom a : s) pulled.push_back(g[img.index_of(sigma(a))]);
          for (Atom a : ss) restricted.push_back(g[img.index_of(a)]);
          auto it1 = id.find(class_val(sx, restricted));
          auto it2 = id.find(class_val(xv, pulled));
          if (it1 != id.end() && it2 != id.end()) uf.unite(it1->second, it2->second);
          return;
        }
        for (const auto& y : values) {
          g[i] = y;
          go(i + 1);
        }
      };
      go(0);
    }
  Quotient q = to_quotient(uf);
  rep.classes = q.count();
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j) {
      ++rep.pairs;
      bool fast = ren_class_eq(t, u[i], u[j]);
      bool slow = q.cls[i] == q.cls[j];
      bool canon = t.make(u[i].x, u[i].g) == t.make(u[j].x, u[j].g);
      if (fast == slow && canon == slow) ++rep.agree;
      else if (rep.witness.empty())
        rep.witness = t.show(class_val(u[i].x, u[i].g)) + " vs " + t.show(class_val(u[j].x, u[j].g)) +
                      ": one-step=" + std::to_string(fast) + " closure=" + std::to_string(slow);
    }
  return rep;
}

// ---- renaming-hom elements ----

// f(γ) = g(γ(idx_0), …) for arbitrary γ: 𝔸 → Y; renamings act by (ρ·f)(γ) = f(γ∘ρ).
inline HomElem ren_act(const HomElem& f, const Renaming& r) {
  HomElem h{{}, f.g, f.dom};
  for (Atom a : f.idx) h.idx.push_back(r(a));
  return h;
}

// a ∈ supp f iff [a↦b]·f ≠ f for fresh b, compared on all γ over the stage
inline AtomSet ren_hom_support(const NomSet& y, const HomElem& f, int n) {
  AtomSet on = idx_set(f);
  Atom b = fresh_one(on);
  std::vector<Atom> s;
  for (Atom a : on)
    if (!hom_equal(y, f, ren_act(f, Renaming(std::map<Atom, Atom>{{a, b}})), n)) s.push_back(a);
  return AtomSet(s);
}

// In the free group: ρ = [a↦c, b↦c] sends ab⁻¹ to 1, so supp(ρ·ab⁻¹) = ∅ ≠ {c}.
inline Counterexample free_group_not_relevant() {
  FreeGroupSet g(2);
  Val w = reduce_word({letter(0, false), letter(1, true)});
  Renaming rho(std::map<Atom, Atom>{{0, 2}, {1, 2}});
  Val rw = g.rename(rho, w);
  AtomSet lhs = g.ren_supp(rw), rhs = rho.image(g.ren_supp(w));
  Counterexample c;
  c.name = "free-group-relevance";
  c.claim_ref = "renaming sets need not be relevant";
  c.witness = "ρ=" + rho.str() + ", x=" + show(w) + ", ρ·x=" + show(rw) + ", supp(ρ·x)=" + lhs.str() +
              ", ρ[supp x]=" + rhs.str();
  c.verified = lhs.empty() && rhs == AtomSet{2} && rw.kids.empty();
  return c;
}

// On Y = Z = 2 the map f(γ) = [γa = γb] has support {a,b}, yet
// ρ = [a↦c, b↦c] makes it constant 1, so supp(ρ·f) = ∅ ≠ {c}.
inline Counterexample hom_not_relevant() {
  Discrete two(2);
  HomElem f{{0, 1}, [](const std::vector<Val>& t) { return Val::nat(t[0] == t[1] ? 1 : 0); }, HomDomain::Any};
  Renaming rho(std::map<Atom, Atom>{{0, 2}, {1, 2}});
  HomElem rf = ren_act(f, rho);
  AtomSet sf = ren_hom_support(two, f, 0), srf = ren_hom_support(two, rf, 0);
  bool constant = true;
  for (const auto& gam : fresh_assignments(two, AtomSet{0, 1, 2}, 0, HomDomain::Any))
    if (rf(gam) != Val::nat(1)) constant = false;
  Counterexample c;
  c.name = "hom-relevance";
  c.claim_ref = "the renaming internal hom does not preserve relevance";
  c.witness = "f(γ)=[γa0=γa1] on 2, supp f=" + sf.str() + ", ρ=" + rho.str() + ", ρ·f constant 1: " +
              (constant ? "yes" : "no") + ", supp(ρ·f)=" + srf.str() + ", ρ[supp f]=" + rho.image(sf).str();
  c.verified = sf == AtomSet{0, 1} && srf.empty() && constant && rho.image(sf) == AtomSet{2};
  return c;
}

}  // namespace nomsub
