#pragma once

// The substitution tensor X ◇ Y of nominal sets, its captureful and uniform
// variants, the explicit class-equality search with a brute-force closure
// oracle, unitors, associator, pentagon sampling, and finitely reducible
// maps with curry/uncurry.
//
// A class x[γ] is stored as Class(x, Tuple(γ(a) for a in sorted supp x)).
// Canonical classes have x canonical (supp x = {a0..a(k-1)}) and the least
// γ over the stabilizer of x. Caches make these objects single-threaded.

#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>

#include "nomsub/nominal.hpp"

namespace nomsub {

enum class TensorKind {
  Sub,             // γ pairwise fresh
  Capture,         // γ unrestricted
  Uniform,         // γ pairwise fresh with γ[supp x] inside one orbit
};

inline const char* tensor_symbol(TensorKind k) {
  switch (k) {
    case TensorKind::Sub: return "◇";
    case TensorKind::Capture: return "◇̂";
    case TensorKind::Uniform: return "⊗";
  }
  return "?";
}

inline Val class_val(const Val& x, std::vector<Val> g) { return Val::node(Label::Class, {x, Val::tuple(std::move(g))}); }

// Moves a raw representative (x, γ) along p: (p·x, γ∘p⁻¹), γ re-aligned.
inline std::pair<Val, std::vector<Val>> transport(const NomSet& x, const Perm& p, const Val& v, const std::vector<Val>& g) {
  AtomSet s = x.supp(v);
  AtomSet t = p.image(s);
  std::vector<Val> g2(g.size());
  for (std::size_t i = 0; i < s.size(); ++i) g2[t.index_of(p(s[i]))] = g[i];
  return {x.act(p, v), std::move(g2)};
}

class TensorSet : public NomSet {
 public:
  TensorSet(NomPtr x, NomPtr y, TensorKind kind = TensorKind::Sub, int kmax = -1)
      : x_(std::move(x)), y_(std::move(y)), kind_(kind), kmax_(kmax) {}

  const NomPtr& left() const { return x_; }
  const NomPtr& right() const { return y_; }
  TensorKind kind() const { return kind_; }
  bool uniform() const { return kind_ == TensorKind::Uniform; }

  std::string name() const override { return "(" + x_->name() + tensor_symbol(kind_) + y_->name() + ")"; }
  bool renamable() const override { return false; }
  int max_support() const override {
    int a = x_->max_support(), b = y_->max_support();
    return a < 0 || b < 0 ? -1 : a * b;
  }
  // support sizes of x enumerated at stage n
  int x_cap(int n) const {
    if (kmax_ >= 0) return kmax_;
    return x_->max_support() >= 0 ? x_->max_support() : n;
  }

  static const Val& x_part(const Val& c) { return c[0]; }
  static const std::vector<Val>& gamma(const Val& c) { return c[1].kids; }

  // canonical class of the raw representative (x, γ)
  Val make(const Val& x, const std::vector<Val>& g) const {
    Perm p;
    Val cx = canonical(*x_, x, &p);
    auto moved = transport(*x_, p, x, g);
    return make_canon(cx, moved.second);
  }

  Val act(const Perm& p, const Val& c) const override {
    std::vector<Val> g;
    for (const auto& v : gamma(c)) g.push_back(y_->act(p, v));
    return make_canon(x_part(c), g);
  }
  AtomSet over_support(const Val& c) const override {
    AtomSet s;
    for (const auto& v : gamma(c)) s = s.unite(y_->over_support(v));
    return s;
  }
  // supp x[γ] = ∪ supp γ(a)
  AtomSet supp_formula(const Val& c) const {
    AtomSet s;
    for (const auto& v : gamma(c)) s = s.unite(y_->supp(v));
    return s;
  }

  std::vector<Val> stage(int n) const override {
    if (auto it = stage_cache_.find(n); it != stage_cache_.end()) return it->second;
    std::set<Val> out;
    auto ys = y_->stage(n);
    std::vector<AtomSet> ysupp;
    for (const auto& v : ys) ysupp.push_back(y_->supp(v));
    std::vector<Val> yorb;
    if (uniform())
      for (const auto& v : ys) yorb.push_back(canonical(*y_, v));
    for (int k = 0; k <= x_cap(n); ++k) {
      for (const auto& x : exact_reps_cached(k)) {
        std::vector<std::size_t> pick;
        std::function<void(AtomSet)> go = [&](AtomSet used) {
          if (static_cast<int>(pick.size()) == k) {
            std::vector<Val> g;
            for (auto i : pick) g.push_back(ys[i]);
            out.insert(make_canon(x, g));
            return;
          }
          for (std::size_t i = 0; i < ys.size(); ++i) {
            if (kind_ != TensorKind::Capture && !ysupp[i].disjoint(used)) continue;
            if (uniform() && !pick.empty() && yorb[i] != yorb[pick[0]]) continue;
            pick.push_back(i);
            go(used.unite(ysupp[i]));
            pick.pop_back();
          }
        };
        go(AtomSet{});
      }
    }
    std::vector<Val> v(out.begin(), out.end());
    stage_cache_[n] = v;
    return v;
  }

  std::string show(const Val& c) const override {
    std::string s = x_->show(x_part(c)) + "[";
    const auto& g = gamma(c);
    AtomSet sx = x_->supp(x_part(c));
    for (std::size_t i = 0; i < g.size(); ++i) s += (i ? ", " : "") + atom_name(sx[i]) + "↦" + y_->show(g[i]);
    return s + "]";
  }

  const std::vector<Val>& exact_reps_cached(int k) const {
    auto it = reps_cache_.find(k);
    if (it == reps_cache_.end()) it = reps_cache_.emplace(k, exact_reps(*x_, k)).first;
    return it->second;
  }

 private:
  const std::vector<Perm>& stab(const Val& cx) const {
    auto it = stab_cache_.find(cx);
    if (it == stab_cache_.end())
      it = stab_cache_.emplace(cx, stabilizer(*x_, cx, static_cast<int>(x_->supp(cx).size()))).first;
    return it->second;
  }
  // cx canonical, g aligned with {a0..a(k-1)}
  Val make_canon(const Val& cx, const std::vector<Val>& g) const {
    std::vector<Val> best;
    bool first = true;
    for (const auto& p : stab(cx)) {
      std::vector<Val> g2(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) g2[p(static_cast<Atom>(i))] = g[i];
      if (first || g2 < best) best = std::move(g2), first = false;
    }
    return class_val(cx, best);
  }

  NomPtr x_, y_;
  TensorKind kind_;
  int kmax_;
  mutable std::map<int, std::vector<Val>> stage_cache_;
  mutable std::map<int, std::vector<Val>> reps_cache_;
  mutable std::map<Val, std::vector<Perm>> stab_cache_;
};

using TensorPtr = std::shared_ptr<const TensorSet>;

inline TensorPtr tensor(NomPtr x, NomPtr y, TensorKind k = TensorKind::Sub) {
  return std::make_shared<TensorSet>(std::move(x), std::move(y), k);
}

// ---- class equality ----

struct RawClass {
  Val x;
  std::vector<Val> g;  // aligned with sorted supp x
};

// One-step search for π with π·x2 = x1 and γ2 = γ1 ∘ π on supp x2.
inline bool class_eq(const NomSet& x, const RawClass& c1, const RawClass& c2) {
  AtomSet s1 = x.supp(c1.x), s2 = x.supp(c2.x);
  if (s1.size() != s2.size()) return false;
  for (const auto& b : all_bijections(s2, s1)) {
    bool ok = true;
    for (std::size_t i = 0; i < s2.size() && ok; ++i) ok = c2.g[i] == c1.g[s1.index_of(b.at(s2[i]))];
    if (ok && x.act(extend_bijection(b), c2.x) == c1.x) return true;
  }
  return false;
}

// Closure of the generating relation (π·x, γ) ∼ (x, γ∘π) under
// transpositions of a finite pool, by breadth-first search.
inline std::set<Val> closure_orbit(const NomSet& x, const RawClass& c, const AtomSet& pool) {
  auto key = [](const Val& v, const std::vector<Val>& g) { return class_val(v, g); };
  std::set<Val> seen{key(c.x, c.g)};
  std::deque<RawClass> q{c};
  std::vector<Perm> taus;
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j) taus.push_back(Perm::swap(pool[i], pool[j]));
  while (!q.empty()) {
    RawClass cur = q.front();
    q.pop_front();
    for (const auto& t : taus) {
      auto [v, g] = transport(x, t, cur.x, cur.g);
      if (seen.insert(key(v, g)).second) q.push_back({v, g});
    }
  }
  return seen;
}

struct ClassEqReport {
  long pairs = 0;
  long agree = 0;
  long classes = 0;
  std::string witness;
  bool ok() const { return pairs == agree; }
};

// Random raw representatives of every class at stage n (the canonical one
// plus `extra` relabellings inside A_{k+1}); class_eq on all pairs against the
// closure oracle over that pool.
inline ClassEqReport validate_class_eq(const TensorSet& t, int n, int extra, std::mt19937& rng) {
  ClassEqReport rep;
  const NomSet& x = *t.left();
  std::map<int, std::vector<std::pair<RawClass, int>>> by_k;
  auto st = t.stage(n);
  rep.classes = static_cast<long>(st.size());
  for (std::size_t ci = 0; ci < st.size(); ++ci) {
    const Val& c = st[ci];
    RawClass base{TensorSet::x_part(c), TensorSet::gamma(c)};
    int k = static_cast<int>(base.g.size());
    auto perms = all_perms(AtomSet::stage(k + 1));
    by_k[k].push_back({base, static_cast<int>(ci)});
    for (int e = 0; e < extra; ++e) {
      const Perm& p = perms[rng() % perms.size()];
      auto [v, g] = transport(x, p, base.x, base.g);
      by_k[k].push_back({{v, g}, static_cast<int>(ci)});
    }
  }
  for (auto& [k, reps] : by_k) {
    AtomSet pool = AtomSet::stage(k + 1);
    for (const auto& [r1, c1] : reps) {
      std::set<Val> orbit = closure_orbit(x, r1, pool);
      for (const auto& [r2, c2] : reps) {
        ++rep.pairs;
        bool fast = class_eq(x, r1, r2);
        bool slow = orbit.count(class_val(r2.x, r2.g)) > 0;
        if (fast == slow && fast == (c1 == c2)) ++rep.agree;
        else if (rep.witness.empty())
          rep.witness = t.show(class_val(r1.x, r1.g)) + " vs " + t.show(class_val(r2.x, r2.g)) +
                        ": search=" + std::to_string(fast) + " closure=" + std::to_string(slow);
      }
    }
  }
  return rep;
}

// ---- structure maps ----

// λ: 𝔸 ◇ Y → Y, a[a↦y] ↦ y
inline Val left_unitor(const Val& c) { return TensorSet::gamma(c)[0]; }
inline Val left_unitor_inv(const TensorSet& t, const Val& y) { return t.make(Val::atom(0), {y}); }

// ρ: X ◇ 𝔸 → X, x[γ] ↦ γ·x for the injective γ: supp x → 𝔸
inline Val right_unitor(const NomSet& x, const Val& c) {
  const Val& v = TensorSet::x_part(c);
  AtomSet s = x.supp(v);
  std::map<Atom, Atom> b;
  for (std::size_t i = 0; i < s.size(); ++i) b[s[i]] = TensorSet::gamma(c)[i].v;
  return x.act(extend_bijection(b), v);
}
inline Val right_unitor_inv(const TensorSet& t, const Val& v) {
  AtomSet s = t.left()->supp(v);
  std::vector<Val> g;
  for (Atom a : s) g.push_back(Val::atom(a));
  return t.make(v, g);
}

// α: (X ◇ Y) ◇ Z → X ◇ (Y ◇ Z)
class Associator {
 public:
  Associator(NomPtr x, NomPtr y, NomPtr z, TensorKind k = TensorKind::Sub)
      : xy_(std::make_shared<TensorSet>(x, y, k)),
        yz_(std::make_shared<TensorSet>(y, z, k)),
        lhs_(std::make_shared<TensorSet>(xy_, z, k)),
        rhs_(std::make_shared<TensorSet>(x, yz_, k)) {}

  const TensorSet& lhs() const { return *lhs_; }
  const TensorSet& rhs() const { return *rhs_; }
  TensorPtr lhs_ptr() const { return lhs_; }
  TensorPtr rhs_ptr() const { return rhs_; }

  // (x[γ])[δ] ↦ x[a ↦ γ(a)[δ|supp γ(a)]]
  Val forward(const Val& c) const {
    const Val& u = TensorSet::x_part(c);
    const auto& d = TensorSet::gamma(c);
    AtomSet su = xy_->supp(u);
    const NomSet& y = *xy_->right();
    std::vector<Val> w;
    for (const auto& gy : TensorSet::gamma(u)) {
      std::vector<Val> di;
      for (Atom a : y.supp(gy)) di.push_back(d[su.index_of(a)]);
      w.push_back(yz_->make(gy, di));
    }
    return rhs_->make(TensorSet::x_part(u), w);
  }

  // x[a ↦ y_a[ε_a]] ↦ (x[a ↦ y'_a])[∪ ε'_a] with the y_a moved apart
  Val inverse(const Val& c) const {
    const NomSet& y = *xy_->right();
    std::vector<Val> ys, d;
    Atom off = 0;
    for (const auto& w : TensorSet::gamma(c)) {
      const Val& yi = TensorSet::x_part(w);
      AtomSet s = y.supp(yi);
      std::map<Atom, Atom> b;
      for (std::size_t j = 0; j < s.size(); ++j) b[s[j]] = off + static_cast<Atom>(j);
      auto [moved, eps] = transport(y, extend_bijection(b), yi, TensorSet::gamma(w));
      ys.push_back(moved);
      d.insert(d.end(), eps.begin(), eps.end());
      off += static_cast<Atom>(s.size());
    }
    Val u = xy_->make(TensorSet::x_part(c), ys);
    return lhs_->make(u, d);
  }

 private:
  TensorPtr xy_, yz_, lhs_, rhs_;
};

// Bijection, inverse and equivariance of an element map between two staged sets.
inline LawCheck check_iso(const NomSet& a, const NomSet& b, const std::function<Val(const Val&)>& f,
                          const std::function<Val(const Val&)>& g, int n) {
  LawCheck r = check_stage_bijection(a, b, f, n);
  auto perms = all_perms(AtomSet::stage(n));
  for (const auto& v : a.stage(n)) {
    Val w = f(v);
    if (g(w) != v) r.fail(a.name() + " → " + b.name() + ": inverse fails at " + a.show(v));
    for (std::size_t i = 0; i < perms.size(); i += std::max<std::size_t>(1, perms.size() / 6))
      if (f(a.act(perms[i], v)) != b.act(perms[i], w))
        r.fail(a.name() + " → " + b.name() + ": not equivariant at " + a.show(v));
  }
  return r;
}

// f ◇ id for an equivariant f: X → X'
inline Val tensor_map_left(const TensorSet& src, const TensorSet& dst, const std::function<Val(const Val&)>& f,
                           const Val& c) {
  const Val& x = TensorSet::x_part(c);
  AtomSet s = src.left()->supp(x);
  Val fx = f(x);
  std::vector<Val> g;
  for (Atom a : dst.left()->supp(fx)) g.push_back(TensorSet::gamma(c)[s.index_of(a)]);
  return dst.make(fx, g);
}

// id ◇ g for an equivariant g: Y → Y'
inline Val tensor_map_right(const TensorSet& dst, const std::function<Val(const Val&)>& f, const Val& c) {
  std::vector<Val> g;
  for (const auto& v : TensorSet::gamma(c)) g.push_back(f(v));
  return dst.make(TensorSet::x_part(c), g);
}

struct PentagonReport {
  int samples = 0;
  int agree = 0;
  std::string witness;
  bool ok() const { return samples > 0 && samples == agree; }
};

// Both routes ((X◇Y)◇Z)◇W → X◇(Y◇(Z◇W)) on sampled elements of stage n.
inline PentagonReport pentagon(NomPtr x, NomPtr y, NomPtr z, NomPtr w, int n, int samples, std::mt19937& rng) {
  Associator a_xyz(x, y, z);                          // (XY)Z → X(YZ)
  auto xy = std::dynamic_pointer_cast<const TensorSet>(a_xyz.lhs().left());
  auto yz = std::dynamic_pointer_cast<const TensorSet>(a_xyz.rhs().right());
  Associator a_xy_z_w(xy, z, w);                      // ((XY)Z)W → (XY)(ZW)
  auto zw = std::dynamic_pointer_cast<const TensorSet>(a_xy_z_w.rhs().right());
  Associator a_x_y_zw(x, y, zw);                      // (XY)(ZW) → X(Y(ZW))
  Associator a_x_yz_w(x, yz, w);                      // (X(YZ))W → X((YZ)W)
  Associator a_y_z_w(y, z, w);                        // (YZ)W → Y(ZW)
  const TensorSet& top = a_xy_z_w.lhs();              // ((XY)Z)W
  TensorSet mid_l(a_xyz.rhs_ptr(), w);                // (X(YZ))W
  const TensorSet& mid_r = a_x_yz_w.rhs();            // X((YZ)W)
  const TensorSet& end = a_x_y_zw.rhs();              // X(Y(ZW))

  PentagonReport rep;
  auto st = top.stage(n);
  if (st.empty()) return rep;
  std::vector<std::size_t> idx(st.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng);
  for (std::size_t i = 0; i < idx.size() && rep.samples < samples; ++i) {
    const Val& e = st[idx[i]];
    Val r1 = a_x_y_zw.forward(a_xy_z_w.forward(e));
    Val m1 = tensor_map_left(top, mid_l, [&](const Val& u) { return a_xyz.forward(u); }, e);
    Val m2 = a_x_yz_w.forward(m1);
    Val r2 = tensor_map_right(end, [&](const Val& u) { return a_y_z_w.forward(u); }, m2);
    ++rep.samples;
    if (r1 == r2) ++rep.agree;
    else if (rep.witness.empty()) rep.witness = top.show(e) + ": " + end.show(r1) + " vs " + end.show(r2);
    (void)mid_r;
  }
  return rep;
}

// ---- finitely reducible maps and currying ----

// Which γ a hom element accepts: pairwise fresh (⊸), pairwise fresh in one
// orbit (⊸⊗), or arbitrary (renaming sets).
enum class HomDomain { Fresh, SingleOrbit, Any };

// An element of Y ⊸ Z: f(γ) = g(γ(idx_0), …, γ(idx_{k-1})) for γ ∈ Y^{*𝔸}.
struct HomElem {
  std::vector<Atom> idx;
  std::function<Val(const std::vector<Val>&)> g;
  HomDomain dom = HomDomain::Fresh;

  Val operator()(const std::map<Atom, Val>& gam) const {
    std::vector<Val> t;
    for (Atom a : idx) t.push_back(gam.at(a));
    return g(t);
  }
  // (π·f)(γ) = f(γ∘π)
  HomElem act(const Perm& p) const {
    HomElem r{{}, g, dom};
    for (Atom a : idx) r.idx.push_back(p(a));
    return r;
  }
};

// All γ on the given atoms with values in Y's stage n accepted by dom.
inline std::vector<std::map<Atom, Val>> fresh_assignments(const NomSet& y, const AtomSet& on, int n,
                                                          HomDomain dom = HomDomain::Fresh) {
  bool one_orbit = dom == HomDomain::SingleOrbit;
  auto ys = y.stage(n);
  std::vector<AtomSet> sy;
  std::vector<Val> orb;
  for (const auto& v : ys) {
    sy.push_back(y.supp(v));
    if (one_orbit) orb.push_back(canonical(y, v));
  }
  const Val* first = nullptr;
  std::vector<std::map<Atom, Val>> out;
  std::map<Atom, Val> cur;
  std::function<void(std::size_t, AtomSet)> go = [&](std::size_t i, AtomSet used) {
    if (i == on.size()) {
      out.push_back(cur);
      return;
    }
    for (std::size_t j = 0; j < ys.size(); ++j) {
      if (dom != HomDomain::Any && !sy[j].disjoint(used)) continue;
      if (one_orbit && i > 0 && orb[j] != *first) continue;
      if (one_orbit && i == 0) first = &orb[j];
      cur[on[i]] = ys[j];
      go(i + 1, used.unite(sy[j]));
    }
    cur.erase(on[i]);
  };
  go(0, AtomSet{});
  return out;
}

inline AtomSet idx_set(const HomElem& f) { return AtomSet(f.idx); }

inline bool hom_equal(const NomSet& y, const HomElem& f, const HomElem& h, int n) {
  AtomSet on = idx_set(f).unite(idx_set(h));
  for (const auto& gam : fresh_assignments(y, on, n, f.dom))
    if (f(gam) != h(gam)) return false;
  return true;
}

// Least support by the swap test: a ∈ supp f iff (a b)·f ≠ f for fresh b.
inline AtomSet hom_support(const NomSet& y, const HomElem& f, int n) {
  AtomSet on = idx_set(f);
  Atom b = fresh_one(on);
  std::vector<Atom> s;
  for (Atom a : on)
    if (!hom_equal(y, f, f.act(Perm::swap(a, b)), n)) s.push_back(a);
  return AtomSet(s);
}

// Coordinates the reduction actually reads: changing γ at a alone changes f.
inline AtomSet factorization_support(const NomSet& y, const HomElem& f, int n) {
  AtomSet on = idx_set(f);
  auto gs = fresh_assignments(y, on, n, f.dom);
  std::vector<Atom> s;
  for (Atom a : on) {
    bool used = false;
    for (std::size_t i = 0; i < gs.size() && !used; ++i)
      for (std::size_t j = i + 1; j < gs.size() && !used; ++j) {
        bool same_off_a = true;
        for (Atom b : on)
          if (b != a && gs[i].at(b) != gs[j].at(b)) same_off_a = false;
        if (same_off_a && f(gs[i]) != f(gs[j])) used = true;
      }
    if (used) s.push_back(a);
  }
  return AtomSet(s);
}

// curry f (x) = γ ↦ f(x[γ|supp x])
inline HomElem curry(const TensorSet& t, const std::function<Val(const Val&)>& f, const Val& x) {
  AtomSet s = t.left()->supp(x);
  HomElem h;
  h.idx = s.elems();
  h.g = [&t, f, x](const std::vector<Val>& g) { return f(t.make(x, g)); };
  h.dom = t.kind() == TensorKind::Uniform ? HomDomain::SingleOrbit
          : t.kind() == TensorKind::Capture ? HomDomain::Any
                                              : HomDomain::Fresh;
  return h;
}

// Fresh extension strategy for uncurry: the value placed at atoms outside supp x.
using FreshExtension = std::function<Val(const AtomSet& avoid, int which)>;

// uncurry h (x[γ]) = h(x)(γ̂) where γ̂ extends γ freshly off supp x
inline Val uncurry(const TensorSet& t, const std::function<HomElem(const Val&)>& h, const Val& c,
                   const FreshExtension& ext) {
  const Val& x = TensorSet::x_part(c);
  AtomSet s = t.left()->supp(x);
  HomElem hx = h(x);
  std::map<Atom, Val> gam;
  AtomSet used;
  for (std::size_t i = 0; i < s.size(); ++i) {
    gam[s[i]] = TensorSet::gamma(c)[i];
    used = used.unite(atoms_of(gam[s[i]]));
  }
  int which = 0;
  for (Atom a : hx.idx)
    if (!gam.count(a)) {
      Val v = ext(used, which++);
      used = used.unite(atoms_of(v));
      gam[a] = v;
    }
  return hx(gam);
}

// Moves a sample element of Y onto atoms avoiding `avoid`.
inline FreshExtension fresh_extension(const NomSet& y, const Val& sample) {
  return [&y, sample](const AtomSet& avoid, int) {
    AtomSet s = y.supp(sample);
    auto f = fresh(avoid.unite(atoms_of(sample)), static_cast<int>(s.size()));
    std::map<Atom, Atom> b;
    for (std::size_t i = 0; i < s.size(); ++i) b[s[i]] = f[i];
    return y.act(extend_bijection(b), sample);
  };
}

struct CurryReport {
  std::string map;
  bool uncurry_curry = true;   // uncurry(curry f) = f on X◇Y
  bool curry_uncurry = true;   // curry(uncurry (curry f)) = curry f on X
  bool equivariant = true;     // curry f (π·x) = π·curry f (x)
  bool support_exact = true;   // supp(curry f x) = supp x
  bool ext_independent = true; // two fresh extensions agree
  std::string witness;
  bool ok() const { return uncurry_curry && curry_uncurry && equivariant && ext_independent; }
};

inline CurryReport curry_roundtrip(const std::string& name, const TensorSet& t, const std::function<Val(const Val&)>& f,
                                   int n, const Val& ext_a, const Val& ext_b) {
  CurryReport rep;
  rep.map = name;
  const NomSet& x = *t.left();
  const NomSet& y = *t.right();
  auto cf = [&](const Val& v) { return curry(t, f, v); };
  auto e1 = fresh_extension(y, ext_a), e2 = fresh_extension(y, ext_b);
  for (const auto& c : t.stage(n)) {
    Val u1 = uncurry(t, cf, c, e1), u2 = uncurry(t, cf, c, e2);
    if (u1 != f(c)) {
      rep.uncurry_curry = false;
      if (rep.witness.empty()) rep.witness = "uncurry∘curry differs at " + t.show(c);
    }
    if (u1 != u2) {
      rep.ext_independent = false;
      if (rep.witness.empty()) rep.witness = "fresh extension changes the value at " + t.show(c);
    }
  }
  int m = std::min(n, 3);
  auto perms = all_perms(AtomSet::stage(m + 1));
  for (const auto& v : x.stage(m)) {
    HomElem h = cf(v);
    HomElem back = curry(t, [&](const Val& c) { return uncurry(t, cf, c, e1); }, v);
    if (!hom_equal(y, h, back, m)) {
      rep.curry_uncurry = false;
      if (rep.witness.empty()) rep.witness = "curry∘uncurry differs at " + x.show(v);
    }
    for (std::size_t i = 0; i < perms.size(); i += 5)
      if (!hom_equal(y, cf(x.act(perms[i], v)), h.act(perms[i]), m + 1)) {
        rep.equivariant = false;
        if (rep.witness.empty()) rep.witness = "curry f not equivariant at " + x.show(v);
      }
    if (hom_support(y, h, m + 1) != x.supp(v)) rep.support_exact = false;
  }
  return rep;
}

// ---- tabulated reducible maps ----

// k-tuples of Y accepted by a hom domain, as a nominal set under the
// pointwise action.
class TupleSet : public NomSet {
 public:
  TupleSet(NomPtr y, int k, HomDomain dom) : y_(std::move(y)), k_(k), dom_(dom) {}
  std::string name() const override { return y_->name() + "^" + std::to_string(k_); }
  std::vector<Val> stage(int n) const override {
    std::vector<Val> out;
    AtomSet on = AtomSet::stage(k_);
    for (const auto& gam : fresh_assignments(*y_, on, n, dom_)) {
      std::vector<Val> t;
      for (auto& [a, v] : gam) t.push_back(v);
      out.push_back(Val::tuple(t));
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  Val act(const Perm& p, const Val& t) const override {
    Val r = t;
    for (auto& v : r.kids) v = y_->act(p, v);
    return r;
  }
  AtomSet over_support(const Val& t) const override {
    AtomSet s;
    for (const auto& v : t.kids) s = s.unite(y_->over_support(v));
    return s;
  }
  int max_support() const override { return y_->max_support() < 0 ? -1 : k_ * y_->max_support(); }

 private:
  NomPtr y_;
  int k_;
  HomDomain dom_;
};

// Y ⊸ Z element as a table: reduction support A and one value per orbit
// representative of the tuples over A; other tuples are evaluated by
// transporting along the canonicalizing permutation.
struct ReducibleMap {
  std::vector<Atom> A;
  std::shared_ptr<const TupleSet> tuples;
  NomPtr cod;
  std::map<Val, Val> table;
  HomDomain dom = HomDomain::Fresh;

  Val eval(const std::vector<Val>& t) const {
    Perm p;
    Val rep = canonical(*tuples, Val::tuple(t), &p);
    auto it = table.find(rep);
    if (it == table.end()) throw std::out_of_range("ReducibleMap: tuple outside the tabulated orbits");
    return cod->act(p.inverse(), it->second);
  }
  HomElem as_hom() const {
    auto self = *this;
    return HomElem{A, [self](const std::vector<Val>& t) { return self.eval(t); }, dom};
  }
  friend bool operator==(const ReducibleMap& a, const ReducibleMap& b) { return a.A == b.A && a.table == b.table; }
};

// Tabulates f on the orbits of tuples over its (sorted) reduction atoms.
inline ReducibleMap tabulate_hom(const HomElem& f, NomPtr y, NomPtr z) {
  ReducibleMap m;
  m.A = AtomSet(f.idx).elems();
  m.dom = f.dom;
  m.cod = std::move(z);
  int k = static_cast<int>(m.A.size());
  if (y->max_support() < 0) throw std::logic_error("tabulate_hom: orbits of " + y->name() + " are not bounded");
  m.tuples = std::make_shared<TupleSet>(y, k, f.dom);
  for (const auto& o : orbit_reps(*m.tuples, k * y->max_support())) {
    std::map<Atom, Val> gam;
    for (int i = 0; i < k; ++i) gam[m.A[i]] = o.rep[i];
    m.table[o.rep] = f(gam);
  }
  return m;
}

// Values are fixed by the stabilizer of their representative.
inline bool table_equivariant(const ReducibleMap& m) {
  for (const auto& [rep, v] : m.table) {
    int s = static_cast<int>(m.tuples->supp(rep).size());
    for (const auto& p : stabilizer(*m.tuples, rep, s))
      if (m.cod->act(p, v) != v) return false;
  }
  return true;
}

// The same map tabulated at its minimal factorization support, with
// discarded coordinates filled by fresh values.
inline ReducibleMap minimize(const ReducibleMap& m, NomPtr y, const Val& sample, int n) {
  HomElem h = m.as_hom();
  AtomSet keep = factorization_support(*y, h, n);
  FreshExtension ext = fresh_extension(*y, sample);
  HomElem r;
  r.idx = keep.elems();
  r.dom = m.dom;
  r.g = [h, keep, ext, A = m.A](const std::vector<Val>& t) {
    std::map<Atom, Val> gam;
    AtomSet used;
    for (std::size_t i = 0; i < keep.size(); ++i) {
      gam[keep[i]] = t[i];
      used = used.unite(atoms_of(t[i]));
    }
    int which = 0;
    for (Atom a : A)
      if (!gam.count(a)) {
        gam[a] = ext(used, which++);
        used = used.unite(atoms_of(gam[a]));
      }
    return h(gam);
  };
  return tabulate_hom(r, y, m.cod);
}

// Every coordinate of the reduction support is used.
inline bool irreducible(const ReducibleMap& m, const NomSet& y, int n) {
  return factorization_support(y, m.as_hom(), n) == AtomSet(m.A);
}

}  // namespace nomsub
