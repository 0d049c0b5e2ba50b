#pragma once

// Staged nominal sets: each carrier enumerates the elements supported by a
// stage A_n = {a0..a(n-1)} and knows its permutation action (and, when it is
// also a renaming set, its renaming action). Least supports come from the
// swap test; orbits from canonical relabelling of supports.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "nomsub/atoms.hpp"
#include "nomsub/freegroup.hpp"
#include "nomsub/val.hpp"

namespace nomsub {

class NomSet {
 public:
  virtual ~NomSet() = default;
  virtual std::string name() const = 0;
  // elements supported by A_n, sorted and duplicate-free
  virtual std::vector<Val> stage(int n) const = 0;
  // canonical form of a raw value after relabelling atoms
  virtual Val normalize(const Val& x) const { return x; }
  virtual Val act(const Perm& p, const Val& x) const { return normalize(nomsub::act(p, x)); }
  // constructor-supplied superset of the least support
  virtual AtomSet over_support(const Val& x) const { return atoms_of(x); }
  // whether the carrier is closed under arbitrary renamings
  virtual bool renamable() const { return true; }
  virtual Val rename(const Renaming& r, const Val& x) const {
    if (!renamable()) throw std::logic_error(name() + " is not a renaming set");
    return normalize(nomsub::act(r, x));
  }
  // bound on |supp x| over the whole carrier, or -1 if unbounded
  virtual int max_support() const { return -1; }
  virtual std::string show(const Val& x) const { return nomsub::show(x); }

  // least support by the swap test: a ∈ supp x iff (a b)·x ≠ x for fresh b
  AtomSet supp(const Val& x) const {
    AtomSet over = over_support(x);
    Atom b = fresh_one(over.unite(atoms_of(x)));
    std::vector<Atom> s;
    for (Atom a : over)
      if (act(Perm::swap(a, b), x) != x) s.push_back(a);
    return AtomSet(s);
  }
  // least support for the renaming action: a ∈ supp x iff [a↦b]·x ≠ x for fresh b
  AtomSet ren_supp(const Val& x) const {
    AtomSet over = over_support(x);
    Atom b = fresh_one(over.unite(atoms_of(x)));
    std::vector<Atom> s;
    for (Atom a : over)
      if (rename(Renaming(std::map<Atom, Atom>{{a, b}}), x) != x) s.push_back(a);
    return AtomSet(s);
  }
};

using NomPtr = std::shared_ptr<const NomSet>;

// ---- canonical forms and orbits ----

// Least relabelling of x with supp x sent onto {a0..a(k-1)}; also returns a
// permutation achieving it.
inline Val canonical(const NomSet& x, const Val& v, Perm* how = nullptr) {
  AtomSet s = x.supp(v);
  AtomSet target = AtomSet::stage(static_cast<int>(s.size()));
  Val best;
  bool first = true;
  for (const auto& b : all_bijections(s, target)) {
    Perm p = extend_bijection(b);
    Val w = x.act(p, v);
    if (first || w < best) {
      best = w;
      if (how) *how = p;
      first = false;
    }
  }
  return best;
}

struct Orbit {
  Val rep;
  int size = 0;  // elements of the stage in this orbit
};

inline std::vector<Orbit> orbit_reps(const NomSet& x, int n) {
  std::map<Val, int> m;
  for (const auto& v : x.stage(n)) ++m[canonical(x, v)];
  std::vector<Orbit> out;
  for (auto& [k, c] : m) out.push_back({k, c});
  return out;
}

// Orbit representatives whose support is exactly {a0..a(k-1)}.
inline std::vector<Val> exact_reps(const NomSet& x, int k) {
  std::vector<Val> out;
  for (const auto& v : x.stage(k))
    if (static_cast<int>(x.supp(v).size()) == k && canonical(x, v) == v) out.push_back(v);
  return out;
}

// Permutations of {a0..a(k-1)} fixing v.
inline std::vector<Perm> stabilizer(const NomSet& x, const Val& v, int k) {
  std::vector<Perm> out;
  for (const auto& p : all_perms(AtomSet::stage(k)))
    if (x.act(p, v) == v) out.push_back(p);
  return out;
}

// ---- corpus carriers ----

class Discrete : public NomSet {
 public:
  explicit Discrete(int k) : k_(k) {}
  std::string name() const override { return std::to_string(k_); }
  std::vector<Val> stage(int) const override {
    std::vector<Val> v;
    for (int i = 0; i < k_; ++i) v.push_back(Val::nat(i));
    return v;
  }
  int max_support() const override { return 0; }

 private:
  int k_;
};

class AtomsSet : public NomSet {
 public:
  std::string name() const override { return "A"; }
  std::vector<Val> stage(int n) const override {
    std::vector<Val> v;
    for (int i = 0; i < n; ++i) v.push_back(Val::atom(i));
    return v;
  }
  int max_support() const override { return 1; }
};

namespace detail {
inline void atom_tuples(int n, int k, bool distinct, std::vector<Val>& out) {
  std::vector<Val> cur;
  std::function<void()> go = [&]() {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(Val::tuple(cur));
      return;
    }
    for (int a = 0; a < n; ++a) {
      if (distinct && std::any_of(cur.begin(), cur.end(), [&](const Val& c) { return c.v == a; })) continue;
      cur.push_back(Val::atom(a));
      go();
      cur.pop_back();
    }
  };
  go();
}
}  // namespace detail

// 𝔸^{*k}: k-tuples of distinct atoms
class FreshPower : public NomSet {
 public:
  explicit FreshPower(int k) : k_(k) {}
  std::string name() const override { return "A*" + std::to_string(k_); }
  std::vector<Val> stage(int n) const override {
    std::vector<Val> v;
    detail::atom_tuples(n, k_, true, v);
    return v;
  }
  bool renamable() const override { return false; }
  int max_support() const override { return k_; }

 private:
  int k_;
};

// 𝔸^k: all k-tuples of atoms
class Power : public NomSet {
 public:
  explicit Power(int k) : k_(k) {}
  std::string name() const override { return "A^" + std::to_string(k_); }
  std::vector<Val> stage(int n) const override {
    std::vector<Val> v;
    detail::atom_tuples(n, k_, false, v);
    return v;
  }
  int max_support() const override { return k_; }

 private:
  int k_;
};

// Finite sets of atoms, optionally truncated at cardinality c; renamings act
// by direct image.
class FinPowerset : public NomSet {
 public:
  explicit FinPowerset(int c = -1) : c_(c) {}
  std::string name() const override { return c_ < 0 ? "PfA" : "PfA@" + std::to_string(c_); }
  std::vector<Val> stage(int n) const override {
    std::vector<Val> v;
    for (unsigned m = 0; m < (1u << n); ++m) {
      if (c_ >= 0 && __builtin_popcount(m) > c_) continue;
      std::vector<Atom> s;
      for (int i = 0; i < n; ++i)
        if (m & (1u << i)) s.push_back(i);
      v.push_back(AtomSet(s).to_val());
    }
    std::sort(v.begin(), v.end());
    return v;
  }
  Val normalize(const Val& x) const override {
    std::vector<Atom> s;
    for (const auto& k : x.kids) s.push_back(k.v);
    return AtomSet(s).to_val();
  }
  int max_support() const override { return c_; }

 private:
  int c_;
};

// Reduced words of length ≤ len in the free group on the atoms.
class FreeGroupSet : public NomSet {
 public:
  explicit FreeGroupSet(int len = 2) : len_(len) {}
  std::string name() const override { return "FreeGroup@" + std::to_string(len_); }
  std::vector<Val> stage(int n) const override {
    std::vector<Atom> at;
    for (int i = 0; i < n; ++i) at.push_back(i);
    auto v = reduced_words(at, len_);
    std::sort(v.begin(), v.end());
    return v;
  }
  Val normalize(const Val& x) const override { return reduce_word(x.kids); }
  int max_support() const override { return len_; }

 private:
  int len_;
};

class ProductSet : public NomSet {
 public:
  ProductSet(NomPtr x, NomPtr y) : x_(std::move(x)), y_(std::move(y)) {}
  std::string name() const override { return "(" + x_->name() + "×" + y_->name() + ")"; }
  std::vector<Val> stage(int n) const override {
    std::vector<Val> v;
    auto xs = x_->stage(n), ys = y_->stage(n);
    for (const auto& a : xs)
      for (const auto& b : ys) v.push_back(Val::tuple({a, b}));
    return v;
  }
  Val act(const Perm& p, const Val& v) const override { return Val::tuple({x_->act(p, v[0]), y_->act(p, v[1])}); }
  bool renamable() const override { return x_->renamable() && y_->renamable(); }
  Val rename(const Renaming& r, const Val& v) const override {
    return Val::tuple({x_->rename(r, v[0]), y_->rename(r, v[1])});
  }
  AtomSet over_support(const Val& v) const override { return x_->over_support(v[0]).unite(y_->over_support(v[1])); }
  int max_support() const override {
    return x_->max_support() < 0 || y_->max_support() < 0 ? -1 : x_->max_support() + y_->max_support();
  }
  std::string show(const Val& v) const override { return "(" + x_->show(v[0]) + ", " + y_->show(v[1]) + ")"; }
  const NomPtr& left() const { return x_; }
  const NomPtr& right() const { return y_; }

 protected:
  NomPtr x_, y_;
};

// X * Y: pairs with disjoint supports
class FreshProductSet : public ProductSet {
 public:
  using ProductSet::ProductSet;
  std::string name() const override { return "(" + x_->name() + "*" + y_->name() + ")"; }
  std::vector<Val> stage(int n) const override {
    std::vector<Val> v;
    auto xs = x_->stage(n), ys = y_->stage(n);
    std::vector<AtomSet> sy;
    for (const auto& b : ys) sy.push_back(y_->supp(b));
    for (const auto& a : xs) {
      AtomSet sa = x_->supp(a);
      for (std::size_t j = 0; j < ys.size(); ++j)
        if (sa.disjoint(sy[j])) v.push_back(Val::tuple({a, ys[j]}));
    }
    return v;
  }
  bool renamable() const override { return false; }
};

class CoproductSet : public NomSet {
 public:
  CoproductSet(NomPtr x, NomPtr y) : x_(std::move(x)), y_(std::move(y)) {}
  std::string name() const override { return "(" + x_->name() + "+" + y_->name() + ")"; }
  static Val inj(int t, const Val& v) { return Val::node(Label::Inj, {Val::nat(t), v}); }
  std::vector<Val> stage(int n) const override {
    std::vector<Val> v;
    for (const auto& a : x_->stage(n)) v.push_back(inj(0, a));
    for (const auto& b : y_->stage(n)) v.push_back(inj(1, b));
    return v;
  }
  const NomSet& part(const Val& v) const { return v[0].v == 0 ? *x_ : *y_; }
  Val act(const Perm& p, const Val& v) const override { return inj(v[0].v, part(v).act(p, v[1])); }
  bool renamable() const override { return x_->renamable() && y_->renamable(); }
  Val rename(const Renaming& r, const Val& v) const override { return inj(v[0].v, part(v).rename(r, v[1])); }
  AtomSet over_support(const Val& v) const override { return part(v).over_support(v[1]); }
  int max_support() const override {
    return x_->max_support() < 0 || y_->max_support() < 0 ? -1 : std::max(x_->max_support(), y_->max_support());
  }
  std::string show(const Val& v) const override { return "in" + std::to_string(v[0].v) + "(" + part(v).show(v[1]) + ")"; }

 private:
  NomPtr x_, y_;
};

inline NomPtr discrete(int k) { return std::make_shared<Discrete>(k); }
inline NomPtr atoms() { return std::make_shared<AtomsSet>(); }
inline NomPtr fresh_power(int k) { return std::make_shared<FreshPower>(k); }
inline NomPtr power(int k) { return std::make_shared<Power>(k); }
inline NomPtr pf(int c = -1) { return std::make_shared<FinPowerset>(c); }
inline NomPtr free_group(int len = 2) { return std::make_shared<FreeGroupSet>(len); }
inline NomPtr product(NomPtr x, NomPtr y) { return std::make_shared<ProductSet>(std::move(x), std::move(y)); }
inline NomPtr fresh_product(NomPtr x, NomPtr y) {
  return std::make_shared<FreshProductSet>(std::move(x), std::move(y));
}
inline NomPtr coproduct(NomPtr x, NomPtr y) { return std::make_shared<CoproductSet>(std::move(x), std::move(y)); }

// ---- laws of a staged nominal set ----

// eq:supp oracle: S supports x iff every permutation of the pool fixing S fixes x.
inline bool supports_by_perms(const NomSet& x, const Val& v, const AtomSet& s, const AtomSet& pool) {
  for (const auto& p : all_perms(pool))
    if (p.fixes_all(s) && x.act(p, v) != v) return false;
  return true;
}

struct LawCheck {
  bool ok = true;
  std::string witness;
  void fail(const std::string& w) {
    if (ok) witness = w;
    ok = false;
  }
};

// Group action laws, stage closure, and least support against the oracle on
// a pool one atom larger than the stage.
inline LawCheck check_nominal(const NomSet& x, int n) {
  LawCheck r;
  auto st = x.stage(n);
  std::set<Val> in(st.begin(), st.end());
  AtomSet pool = AtomSet::stage(n + 1), sn = AtomSet::stage(n);
  auto perms = all_perms(sn);
  for (const auto& v : st) {
    if (x.act(Perm(), v) != v) r.fail(x.name() + ": identity moves " + x.show(v));
    for (const auto& p : perms) {
      Val w = x.act(p, v);
      if (!in.count(w)) r.fail(x.name() + ": stage not closed under " + p.str());
    }
    AtomSet s = x.supp(v);
    if (!s.subset_of(sn)) r.fail(x.name() + ": support of " + x.show(v) + " leaves the stage");
    if (!supports_by_perms(x, v, s, pool)) r.fail(x.name() + ": computed support does not support " + x.show(v));
    for (Atom a : s)
      if (supports_by_perms(x, v, s.minus(AtomSet{a}), pool))
        r.fail(x.name() + ": support of " + x.show(v) + " is not least");
  }
  // composition on a sample of pairs
  for (std::size_t i = 0; i < perms.size() && i < 6; ++i)
    for (std::size_t j = 0; j < perms.size() && j < 6; ++j)
      for (const auto& v : st)
        if (x.act(perms[i].compose(perms[j]), v) != x.act(perms[i], x.act(perms[j], v)))
          r.fail(x.name() + ": action does not respect composition");
  return r;
}

// A ⊆ B gives stage inclusion; supported by A and B gives supported by A ∩ B.
inline LawCheck check_intersection_property(const NomSet& x, int n) {
  LawCheck r;
  std::vector<std::set<Val>> st(n + 1);
  for (int k = 0; k <= n; ++k) {
    auto v = x.stage(k);
    st[k] = std::set<Val>(v.begin(), v.end());
    if (k > 0)
      for (const auto& e : st[k - 1])
        if (!st[k].count(e)) r.fail(x.name() + ": stage " + std::to_string(k - 1) + " not included in the next");
  }
  for (const auto& v : st[n]) {
    AtomSet s = x.supp(v);
    for (unsigned m = 0; m < (1u << n); ++m) {
      std::vector<Atom> a;
      for (int i = 0; i < n; ++i)
        if (m & (1u << i)) a.push_back(i);
      AtomSet A(a);
      bool by_a = supports_by_perms(x, v, A, AtomSet::stage(n + 1));
      if (by_a != s.subset_of(A)) r.fail(x.name() + ": supports of " + x.show(v) + " are not the up-set of supp");
    }
  }
  return r;
}

// ---- equivariant maps ----

struct EqMap {
  std::string name;
  NomPtr dom, cod;
  std::function<Val(const Val&)> f;
  Val operator()(const Val& v) const { return f(v); }
};

inline LawCheck check_equivariant(const EqMap& m, int n) {
  LawCheck r;
  for (const auto& v : m.dom->stage(n))
    for (const auto& p : all_perms(AtomSet::stage(n + 1)))
      if (m(m.dom->act(p, v)) != m.cod->act(p, m(v)))
        r.fail(m.name + " not equivariant at " + m.dom->show(v) + " under " + p.str());
  return r;
}

inline bool is_support_preserving(const EqMap& m, int n) {
  for (const auto& v : m.dom->stage(n))
    if (m.cod->supp(m(v)) != m.dom->supp(v)) return false;
  return true;
}

// Stage-wise bijection check between two carriers via an element map.
inline LawCheck check_stage_bijection(const NomSet& x, const NomSet& y, const std::function<Val(const Val&)>& f, int n) {
  LawCheck r;
  auto xs = x.stage(n), ys = y.stage(n);
  std::set<Val> target(ys.begin(), ys.end()), hit;
  for (const auto& v : xs) {
    Val w = f(v);
    if (!target.count(w)) r.fail(x.name() + " → " + y.name() + ": " + x.show(v) + " lands outside stage " + std::to_string(n));
    else if (!hit.insert(w).second) r.fail(x.name() + " → " + y.name() + ": not injective at " + y.show(w));
  }
  if (xs.size() != ys.size())
    r.fail(x.name() + " → " + y.name() + ": stage " + std::to_string(n) + " sizes " + std::to_string(xs.size()) + " vs " +
           std::to_string(ys.size()));
  return r;
}

}  // namespace nomsub
