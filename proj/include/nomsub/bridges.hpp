#pragma once

// Bridges between staged nominal sets and truncated presheaves:
//   I_star   X ↦ presheaf A ↦ {x | A supports x} over 𝕀 (or 𝔽 for renaming sets)
//   I_upper  presheaf ↦ nominal set of classes [A, x]
//   𝒮, ∐     Nom= ≃ PSh 𝔹 (and 𝒮^𝕊, ∐^𝕊 for Relev= ≃ PSh 𝕊)
//   𝒯        x ↦ (x, A) with supp x ⊆ A, its writer form 1_= * X, the
//            Kleisli transpose, ×_= and 1_=.

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "nomsub/coend.hpp"
#include "nomsub/nominal.hpp"
#include "nomsub/presheaf.hpp"
#include "nomsub/renaming.hpp"
#include "nomsub/sheaf.hpp"
#include "nomsub/uniform.hpp"

namespace nomsub {

struct TruncationUnstable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotSupportPreserving : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotRelevant : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::map<Atom, Atom> stage_map(const Mor& f) {
  std::map<Atom, Atom> m;
  for (int i = 0; i < f.dom; ++i) m[i] = f.t[i];
  return m;
}

// i ↦ position of s(B[i]) in the sorted image
inline Mor image_mor(const std::vector<Atom>& b, const std::function<Atom(Atom)>& s, AtomSet* img) {
  std::vector<Atom> im;
  for (Atom a : b) im.push_back(s(a));
  *img = AtomSet(im);
  Mor f{static_cast<int>(b.size()), static_cast<int>(img->size()), {}};
  for (Atom a : im) f.t.push_back(img->index_of(a));
  return f;
}

// x over A_k moved onto the atoms of b in order
inline Val relabel_onto(const NomSet& x, const Val& v, const AtomSet& b) {
  std::map<Atom, Atom> m;
  for (std::size_t i = 0; i < b.size(); ++i) m[static_cast<Atom>(i)] = b[i];
  return x.act(extend_bijection(m), v);
}

// the inverse: x supported by b moved onto A_|b|
inline Val relabel_from(const NomSet& x, const Val& v, const AtomSet& b) {
  std::map<Atom, Atom> m;
  for (std::size_t i = 0; i < b.size(); ++i) m[b[i]] = static_cast<Atom>(i);
  return x.act(extend_bijection(m), v);
}

inline std::vector<AtomSet> subsets(int n, int maxsize) {
  std::vector<AtomSet> out;
  for (unsigned m = 0; m < (1u << n); ++m) {
    if (__builtin_popcount(m) > maxsize) continue;
    std::vector<Atom> s;
    for (int i = 0; i < n; ++i)
      if (m & (1u << i)) s.push_back(i);
    out.emplace_back(s);
  }
  return out;
}

}  // namespace detail

// ---- I_star ----

// Over 𝕀 and 𝔹 maps act as permutations extending them; over 𝔽 and 𝕊 as
// renamings, which needs a renaming set.
inline TruncPresheaf I_star(const NomSet& x, CatTag cat, int bound) {
  bool ren = cat == CatTag::F || cat == CatTag::S;
  if (ren && !x.renamable()) throw std::invalid_argument("I_star over " + cat_name(cat) + ": " + x.name() + " is not a renaming set");
  return tabulate(
      "I*" + x.name(), cat, bound, [&](int n) { return x.stage(n); },
      [&x, ren](const Mor& f, const Val& v) {
        if (ren) return x.rename(Renaming(detail::stage_map(f)), v);
        return x.act(extend_bijection(detail::stage_map(f)), v);
      });
}

// ---- I_upper ----

// Classes [B, y] of a presheaf over 𝕀 (or 𝔽) glued along inclusions, each
// named by its least stage. Elements are Tuple(B, y) with y ∈ P(|B|).
class UpperSet : public NomSet {
 public:
  explicit UpperSet(TruncPresheaf p) : p_(std::move(p)) {
    if (p_.cat != CatTag::I && p_.cat != CatTag::F)
      throw std::invalid_argument("I_upper: presheaf over " + cat_name(p_.cat));
    LawResult r = preserves(p_, SquareKind::Intersections);
    if (!r.ok) throw TruncationUnstable("I_upper(" + p_.name + "): intersections not preserved: " + r.witness);
    build();
  }
  const TruncPresheaf& source() const { return p_; }

  std::string name() const override { return "I^" + p_.name; }
  bool renamable() const override { return p_.cat == CatTag::F; }
  int max_support() const override { return p_.bound; }

  static AtomSet base(const Val& v) { return atoms_of(v[0]); }
  static const Val& elem(const Val& v) { return v[1]; }
  Val make(const AtomSet& b, const Val& y) const { return Val::tuple({b.to_val(), y}); }

  Val normalize(const Val& v) const override {
    AtomSet b = base(v);
    int k = static_cast<int>(b.size());
    if (k > p_.bound) throw TruncationUnstable("I_upper(" + p_.name + "): stage " + std::to_string(k) + " past the bound");
    int y = p_.find(k, elem(v));
    if (y < 0) throw std::invalid_argument("I_upper: " + show(elem(v)) + " is not in stage " + std::to_string(k));
    const auto& [sub, y0] = least_[k][y];
    std::vector<Atom> img;
    for (Atom a : sub) img.push_back(b[a]);
    return make(AtomSet(img), p_.at(static_cast<int>(sub.size()), y0));
  }
  Val act(const Perm& p, const Val& v) const override { return move(v, [&p](Atom a) { return p(a); }); }
  Val rename(const Renaming& r, const Val& v) const override {
    if (!renamable()) throw std::logic_error(name() + " is not a renaming set");
    return move(v, [&r](Atom a) { return r(a); });
  }
  AtomSet over_support(const Val& v) const override { return base(v); }

  std::vector<Val> stage(int n) const override {
    std::set<Val> out;
    for (const auto& b : detail::subsets(n, p_.bound)) {
      int k = static_cast<int>(b.size());
      for (int y = 0; y < p_.size(k); ++y) out.insert(normalize(make(b, p_.at(k, y))));
    }
    return {out.begin(), out.end()};
  }
  std::string show(const Val& v) const override { return "[" + base(v).str() + ", " + nomsub::show(elem(v)) + "]"; }

 private:
  Val move(const Val& v, const std::function<Atom(Atom)>& s) const {
    AtomSet b = base(v), img;
    Mor f = detail::image_mor(b.elems(), s, &img);
    int y = p_.find(f.dom, elem(v));
    return normalize(make(img, p_.at(f.cod, p_.apply(f, y))));
  }

  // For each y ∈ P(k): the least (B ⊆ A_k, y0) in its class, found by
  // gluing all pairs over subsets of A_bound along inclusions.
  void build() {
    int N = p_.bound;
    auto subs = detail::subsets(N, N);
    std::map<std::pair<unsigned, int>, int> id;
    std::vector<std::pair<AtomSet, int>> node;
    auto mask = [](const AtomSet& s) {
      unsigned m = 0;
      for (Atom a : s) m |= 1u << a;
      return m;
    };
    for (const auto& s : subs)
      for (int y = 0; y < p_.size(static_cast<int>(s.size())); ++y) {
        id[{mask(s), y}] = static_cast<int>(node.size());
        node.emplace_back(s, y);
      }
    UnionFind uf(static_cast<int>(node.size()));
    for (const auto& s : subs)
      for (const auto& t : subs) {
        if (s.size() + 1 != t.size() || !s.subset_of(t)) continue;
        Mor inc{static_cast<int>(s.size()), static_cast<int>(t.size()), {}};
        for (Atom a : s) inc.t.push_back(t.index_of(a));
        for (int y = 0; y < p_.size(inc.dom); ++y)
          uf.unite(id[{mask(s), y}], id[{mask(t), p_.apply(inc, y)}]);
      }
    least_.assign(N + 1, {});
    for (int k = 0; k <= N; ++k) {
      AtomSet ak = AtomSet::stage(k);
      for (int y = 0; y < p_.size(k); ++y) {
        int root = uf.find(id[{mask(ak), y}]);
        std::pair<std::vector<Atom>, int> best{ak.elems(), y};
        for (std::size_t i = 0; i < node.size(); ++i) {
          const auto& [s, y2] = node[i];
          if (!s.subset_of(ak) || uf.find(static_cast<int>(i)) != root) continue;
          std::pair<std::vector<Atom>, int> cand{s.elems(), y2};
          if (cand.first.size() < best.first.size() ||
              (cand.first.size() == best.first.size() && cand < best))
            best = cand;
        }
        least_[k].push_back(best);
      }
    }
  }

  TruncPresheaf p_;
  std::vector<std::vector<std::pair<std::vector<Atom>, int>>> least_;
};

inline std::shared_ptr<UpperSet> I_upper(TruncPresheaf p) { return std::make_shared<UpperSet>(std::move(p)); }

// [B, y] ↦ y moved onto B, for I_upper of an I_star.
inline Val upper_to_nominal(const NomSet& x, const Val& e) {
  return detail::relabel_onto(x, UpperSet::elem(e), UpperSet::base(e));
}

// Stage-wise bijection plus equivariance of an element map.
inline LawCheck check_nominal_iso(const NomSet& x, const NomSet& y, const std::function<Val(const Val&)>& f, int n) {
  LawCheck r = check_stage_bijection(x, y, f, n);
  if (!r.ok) return r;
  for (const auto& v : x.stage(n))
    for (const auto& p : all_perms(AtomSet::stage(n + 1)))
      if (f(x.act(p, v)) != y.act(p, f(v))) {
        r.fail(x.name() + " → " + y.name() + " not equivariant at " + x.show(v) + " under " + p.str());
        return r;
      }
  return r;
}

// Renaming-equivariance of an element map on stage n.
inline LawCheck check_ren_equivariant(const NomSet& x, const NomSet& y, const std::function<Val(const Val&)>& f, int n) {
  LawCheck r;
  for (const auto& v : x.stage(n))
    for (const auto& rho : all_renamings(AtomSet::stage(n)))
      if (f(x.rename(rho, v)) != y.rename(rho, f(v))) {
        r.fail(x.name() + " → " + y.name() + " does not commute with " + rho.str() + " at " + x.show(v));
        return r;
      }
  return r;
}

// ---- I_*(X * Y) ≅ I_*X ⊕ I_*Y ----

struct FreshSumBridge {
  TruncPresheaf lhs, fx, fy;
  std::unique_ptr<Day> day;
};

// (x, y) ↦ class of (|supp x|, |supp y|; h; x', y') with h listing supp x then
// supp y; the inverse reads (h|_A·x', h|_B·y') off a representative.
inline LawResult fresh_product_day_sum(const NomPtr& x, const NomPtr& y, int bound) {
  NomPtr xy = fresh_product(x, y);
  TruncPresheaf lhs = I_star(*xy, CatTag::I, bound);
  TruncPresheaf fx = I_star(*x, CatTag::I, bound), fy = I_star(*y, CatTag::I, bound);
  Day day(fx, fy, DayOp::Sum, bound, bound);
  const TruncPresheaf& rhs = day.result();
  auto fwd = [&](int n, int i) {
    const Val& v = lhs.at(n, i);
    AtomSet sa = x->supp(v[0]), sb = y->supp(v[1]);
    int p = static_cast<int>(sa.size()), q = static_cast<int>(sb.size());
    Mor h{p + q, n, {}};
    for (Atom a : sa) h.t.push_back(a);
    for (Atom b : sb) h.t.push_back(b);
    int xi = fx.find(p, detail::relabel_from(*x, v[0], sa));
    int yi = fy.find(q, detail::relabel_from(*y, v[1], sb));
    return day.locate(n, {p, q}, h, {xi, yi});
  };
  LawResult r = check_natural_iso(lhs, rhs, fwd);
  if (!r.ok) return r;
  for (int n = 0; n <= bound; ++n)
    for (int c = 0; c < rhs.size(n); ++c) {
      const Day::Tuple& t = day.decode(n, c);
      Mor ja{t.fib[0], n, {t.h.t.begin(), t.h.t.begin() + t.fib[0]}};
      Mor jb{t.fib[1], n, {t.h.t.begin() + t.fib[0], t.h.t.end()}};
      Val xv = x->act(extend_bijection(detail::stage_map(ja)), fx.at(t.fib[0], t.xs[0]));
      Val yv = y->act(extend_bijection(detail::stage_map(jb)), fy.at(t.fib[1], t.xs[1]));
      int back = lhs.find(n, Val::tuple({xv, yv}));
      if (back < 0 || fwd(n, back) != c) r.fail("inverse fails on class " + show(rhs.at(n, c)));
    }
  return r;
}

// ---- matrix-form uniform tensor against the Day tensor over 𝕀 ----

// x[y; M] ↦ class of (k, m; h(i·m + j) = M[i][j]; x, y) in I_*X ⊗ I_*Y, as a
// natural iso I_*(X ⊗ᴰ Y) ≅ I_*X ⊗ I_*Y.
inline LawResult uniform_matrix_day(const NomPtr& x, const NomPtr& y, int bound) {
  auto u = std::make_shared<UniformMatrixSet>(x, y);
  TruncPresheaf lhs = I_star(*u, CatTag::I, bound);
  TruncPresheaf fx = I_star(*x, CatTag::I, bound), fy = I_star(*y, CatTag::I, bound);
  Day day(fx, fy, DayOp::Prod, bound, bound);
  auto fwd = [&](int n, int i) {
    const Val& e = lhs.at(n, i);
    auto m = UniformMatrixSet::matrix(e);
    int k = static_cast<int>(x->supp(UniformMatrixSet::x_part(e)).size());
    int mm = static_cast<int>(y->supp(UniformMatrixSet::y_part(e)).size());
    Mor h{k * mm, n, {}};
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < mm; ++b) h.t.push_back(m[a][b]);
    int xi = fx.find(k, UniformMatrixSet::x_part(e)), yi = fy.find(mm, UniformMatrixSet::y_part(e));
    return day.locate(n, {k, mm}, h, {xi, yi});
  };
  return check_natural_iso(lhs, day.result(), fwd);
}

// ---- species: Nom= ≃ PSh 𝔹, Relev= ≃ PSh 𝕊 ----

inline std::vector<Val> exact_stage(const NomSet& x, int n) {
  std::vector<Val> out;
  AtomSet an = AtomSet::stage(n);
  for (const auto& v : x.stage(n))
    if (x.supp(v) == an) out.push_back(v);
  return out;
}

// 𝒮X(n) = {x | supp x = A_n}; over 𝕊 surjections act as renamings, which
// stays inside the exact stages only for relevance sets.
inline TruncPresheaf species(const NomSet& x, CatTag cat, int bound) {
  if (cat != CatTag::B && cat != CatTag::S) throw std::invalid_argument("species over " + cat_name(cat));
  bool ren = cat == CatTag::S;
  if (ren) {
    if (!x.renamable()) throw NotRelevant(x.name() + " is not a renaming set");
    LawCheck rel = check_relevant(x, bound);
    if (!rel.ok) throw NotRelevant(rel.witness);
  }
  return tabulate(
      (ren ? "S^S" : "S") + x.name(), cat, bound, [&](int n) { return exact_stage(x, n); },
      [&x, ren](const Mor& f, const Val& v) {
        if (ren) return x.rename(Renaming(detail::stage_map(f)), v);
        return x.act(extend_bijection(detail::stage_map(f)), v);
      });
}

// 𝒮 on maps; needs supp f(x) = supp x.
inline NatTrans species_map(const EqMap& f, const TruncPresheaf& sx, const TruncPresheaf& sy) {
  NatTrans a;
  a.comp.resize(sx.bound + 1);
  for (int n = 0; n <= sx.bound; ++n)
    for (int i = 0; i < sx.size(n); ++i) {
      Val w = f(sx.at(n, i));
      int j = sy.find(n, w);
      if (j < 0) throw NotSupportPreserving(f.name + " sends " + f.dom->show(sx.at(n, i)) + " to " + f.cod->show(w));
      a.comp[n].push_back(j);
    }
  return a;
}

// ∐F: pairs (B, y ∈ F(|B|)), no identification; supp = B.
class SpeciesCoprod : public NomSet {
 public:
  explicit SpeciesCoprod(TruncPresheaf p) : p_(std::move(p)) {
    if (p_.cat != CatTag::B && p_.cat != CatTag::S) throw std::invalid_argument("coprod over " + cat_name(p_.cat));
  }
  std::string name() const override { return (p_.cat == CatTag::S ? "∐^S" : "∐") + p_.name; }
  bool renamable() const override { return p_.cat == CatTag::S; }
  int max_support() const override { return p_.bound; }
  static AtomSet base(const Val& v) { return atoms_of(v[0]); }
  static const Val& elem(const Val& v) { return v[1]; }
  Val make(const AtomSet& b, const Val& y) const { return Val::tuple({b.to_val(), y}); }

  Val act(const Perm& p, const Val& v) const override { return move(v, [&p](Atom a) { return p(a); }); }
  Val rename(const Renaming& r, const Val& v) const override {
    if (!renamable()) throw std::logic_error(name() + " is not a renaming set");
    return move(v, [&r](Atom a) { return r(a); });
  }
  AtomSet over_support(const Val& v) const override { return base(v); }
  std::vector<Val> stage(int n) const override {
    std::vector<Val> out;
    for (const auto& b : detail::subsets(n, p_.bound)) {
      int k = static_cast<int>(b.size());
      for (const auto& y : p_.elems[k]) out.push_back(make(b, y));
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  std::string show(const Val& v) const override { return "κ" + base(v).str() + "(" + nomsub::show(elem(v)) + ")"; }

 private:
  Val move(const Val& v, const std::function<Atom(Atom)>& s) const {
    AtomSet b = base(v), img;
    Mor f = detail::image_mor(b.elems(), s, &img);
    return make(img, p_.at(f.cod, p_.apply(f, p_.find(f.dom, elem(v)))));
  }
  TruncPresheaf p_;
};

inline std::shared_ptr<SpeciesCoprod> species_coprod(TruncPresheaf p) {
  return std::make_shared<SpeciesCoprod>(std::move(p));
}

// 𝒮(∐F) ≅ F: y ↦ κ_{A_n}(y).
inline LawResult species_roundtrip_presheaf(const TruncPresheaf& f) {
  auto cp = species_coprod(f);
  TruncPresheaf back = species(*cp, f.cat, f.bound);
  return check_natural_iso(f, back, [&](int n, int i) { return back.find(n, cp->make(AtomSet::stage(n), f.at(n, i))); });
}

// ∐𝒮X ≅ X: κ_B(y) ↦ y moved onto B; also checks renaming-equivariance over 𝕊.
inline LawCheck species_roundtrip_nominal(const NomPtr& x, CatTag cat, int bound) {
  auto cp = species_coprod(species(*x, cat, bound));
  auto f = [&](const Val& e) { return detail::relabel_onto(*x, SpeciesCoprod::elem(e), SpeciesCoprod::base(e)); };
  LawCheck r;
  for (int n = 0; n <= bound && r.ok; ++n) {
    r = check_nominal_iso(*cp, *x, f, n);
    if (r.ok && cat == CatTag::S) r = check_ren_equivariant(*cp, *x, f, n);
  }
  return r;
}

// supp κ_B(y) = B
inline LawCheck coprod_support(const SpeciesCoprod& c, int n) {
  LawCheck r;
  for (const auto& v : c.stage(n))
    if (c.supp(v) != SpeciesCoprod::base(v)) r.fail("supp " + c.show(v) + " = " + c.supp(v).str());
  return r;
}

// ---- 𝒯, R, writer, Kleisli ----

// 𝒯X = {(x, A) | supp x ⊆ A}, with the renaming action (ρx, ρA) when X is a
// renaming set (the lifted monad on relevance sets).
class TSet : public NomSet {
 public:
  explicit TSet(NomPtr x) : x_(std::move(x)) {}
  const NomPtr& inner() const { return x_; }
  std::string name() const override { return "T" + x_->name(); }
  static const Val& x_part(const Val& v) { return v[0]; }
  static AtomSet a_part(const Val& v) { return atoms_of(v[1]); }
  static Val make(const Val& x, const AtomSet& a) { return Val::tuple({x, a.to_val()}); }
  std::vector<Val> stage(int n) const override {
    std::vector<Val> out;
    for (const auto& v : x_->stage(n)) {
      AtomSet s = x_->supp(v);
      for (const auto& a : detail::subsets(n, n))
        if (s.subset_of(a)) out.push_back(make(v, a));
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  Val act(const Perm& p, const Val& v) const override { return make(x_->act(p, x_part(v)), p.image(a_part(v))); }
  bool renamable() const override { return x_->renamable(); }
  Val rename(const Renaming& r, const Val& v) const override {
    return make(x_->rename(r, x_part(v)), r.image(a_part(v)));
  }
  AtomSet over_support(const Val& v) const override { return a_part(v); }
  std::string show(const Val& v) const override { return "(" + x_->show(x_part(v)) + ", " + a_part(v).str() + ")"; }

 private:
  NomPtr x_;
};

inline std::shared_ptr<TSet> tmonad(NomPtr x) { return std::make_shared<TSet>(std::move(x)); }

inline Val t_unit(const NomSet& x, const Val& v) { return TSet::make(v, x.supp(v)); }
inline Val t_mult(const Val& v) { return TSet::make(TSet::x_part(TSet::x_part(v)), TSet::a_part(v)); }
// 𝒯f(x, A) = (f x, A)
inline Val t_map(const std::function<Val(const Val&)>& f, const Val& v) {
  return TSet::make(f(TSet::x_part(v)), TSet::a_part(v));
}

// Unit, associativity, naturality of η and μ under permutations, and under
// renamings when X is a renaming set (the lifted monad).
inline LawCheck t_monad_laws(const NomPtr& x, int n) {
  LawCheck r;
  auto tx = tmonad(x);
  auto ttx = tmonad(tx);
  auto tttx = tmonad(ttx);
  for (const auto& v : tx->stage(n)) {
    if (t_mult(t_unit(*tx, v)) != v) r.fail("μ∘η_T ≠ id at " + tx->show(v));
    if (t_mult(t_map([&](const Val& w) { return t_unit(*x, w); }, v)) != v) r.fail("μ∘Tη ≠ id at " + tx->show(v));
  }
  for (const auto& v : tttx->stage(n))
    if (t_mult(t_mult(v)) != t_mult(t_map(t_mult, v))) r.fail("μ∘μ ≠ μ∘Tμ at " + tttx->show(v));
  for (const auto& v : x->stage(n)) {
    AtomSet s = x->supp(v);
    if (tx->supp(t_unit(*x, v)) != s) r.fail("η does not preserve support at " + x->show(v));
  }
  for (const auto& v : ttx->stage(n))
    if (tx->supp(t_mult(v)) != ttx->supp(v)) r.fail("μ does not preserve support at " + ttx->show(v));
  if (x->renamable())
    for (const auto& v : x->stage(n))
      for (const auto& rho : all_renamings(AtomSet::stage(n)))
        if (t_unit(*x, x->rename(rho, v)) != tx->rename(rho, t_unit(*x, v))) {
          r.fail("η does not commute with " + rho.str() + " at " + x->show(v));
          return r;
        }
  return r;
}

// R(1) ≅ 𝒫f𝔸: (•, A) ↦ A
inline LawCheck r_terminal_is_pf(int n) {
  auto t1 = tmonad(discrete(1));
  auto p = pf();
  LawCheck r;
  for (int k = 0; k <= n && r.ok; ++k)
    r = check_nominal_iso(*t1, *p, [](const Val& v) { return v[1]; }, k);
  return r;
}

// 𝒯X ≅ 1_= * X, (x, A) ↦ (A ∖ supp x, x), and its compatibility with the
// units and multiplications of 𝒯 and the writer monad.
inline Val writer_iso(const NomSet& x, const Val& v) {
  return Val::tuple({TSet::a_part(v).minus(x.supp(TSet::x_part(v))).to_val(), TSet::x_part(v)});
}
inline Val writer_inv(const NomSet& x, const Val& w) {
  return TSet::make(w[1], atoms_of(w[0]).unite(x.supp(w[1])));
}
inline Val writer_unit(const Val& v) { return Val::tuple({AtomSet().to_val(), v}); }
inline Val writer_mult(const Val& w) {
  return Val::tuple({atoms_of(w[0]).unite(atoms_of(w[1][0])).to_val(), w[1][1]});
}

inline LawCheck writer_laws(const NomPtr& x, int n) {
  LawCheck r;
  auto tx = tmonad(x);
  auto ttx = tmonad(tx);
  auto wx = fresh_product(pf(), x);
  auto wwx = fresh_product(pf(), wx);
  for (int k = 0; k <= n && r.ok; ++k) {
    r = check_nominal_iso(*tx, *wx, [&](const Val& v) { return writer_iso(*x, v); }, k);
    for (const auto& w : wx->stage(k))
      if (writer_iso(*x, writer_inv(*x, w)) != w) r.fail("writer inverse fails at " + wx->show(w));
  }
  for (const auto& v : x->stage(n))
    if (writer_iso(*x, t_unit(*x, v)) != writer_unit(v)) r.fail("iso does not carry η_T to η_W at " + x->show(v));
  for (const auto& w : wx->stage(n))
    if (writer_mult(writer_unit(w)) != w) r.fail("writer left unit fails at " + wx->show(w));
  for (const auto& w : wwx->stage(n)) {
    Val inner = w[1];
    if (writer_mult(Val::tuple({w[0], writer_unit(inner[1])})) != Val::tuple({w[0], inner[1]}))
      r.fail("writer right unit fails at " + wwx->show(w));
  }
  for (const auto& v : ttx->stage(n)) {
    Val lhs = writer_iso(*x, t_mult(v));
    Val step = writer_iso(*tx, v);
    Val rhs = writer_mult(Val::tuple({step[0], writer_iso(*x, step[1])}));
    if (lhs != rhs) r.fail("iso does not carry μ_T to μ_W at " + ttx->show(v));
  }
  return r;
}

// Equivariant maps X → Y on stages ≤ n, one value per orbit of X, fixed by
// the stabilizer and supported by supp x; `filter` restricts the values.
inline std::vector<std::map<Val, Val>> equivariant_maps(const NomSet& x, const NomSet& y, int n,
                                                        const std::function<bool(const Val&, const Val&)>& filter,
                                                        std::size_t limit = 4096) {
  std::vector<std::pair<Val, std::vector<Val>>> choices;
  for (int k = 0; k <= n; ++k)
    for (const auto& rep : exact_reps(x, k)) {
      auto st = stabilizer(x, rep, k);
      std::vector<Val> ok;
      for (const auto& w : y.stage(k)) {
        bool fixed = std::all_of(st.begin(), st.end(), [&](const Perm& p) { return y.act(p, w) == w; });
        if (fixed && filter(rep, w)) ok.push_back(w);
      }
      choices.emplace_back(rep, std::move(ok));
    }
  std::vector<std::map<Val, Val>> out;
  std::map<Val, Val> cur;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (out.size() >= limit) return;
    if (i == choices.size()) {
      out.push_back(cur);
      return;
    }
    for (const auto& w : choices[i].second) {
      cur[choices[i].first] = w;
      go(i + 1);
    }
    cur.erase(choices[i].first);
  };
  go(0);
  return out;
}

// Evaluates an orbit table at any element by transport.
inline Val eval_orbit_table(const NomSet& x, const NomSet& y, const std::map<Val, Val>& t, const Val& v) {
  Perm p;
  Val rep = canonical(x, v, &p);
  return y.act(p.inverse(), t.at(rep));
}

struct KleisliReport {
  long maps = 0;        // equivariant X → Y
  long transposes = 0;  // support-preserving X → 𝒯Y
  bool bijective = true;
  bool support_preserving = true;
  bool id_is_unit = true;
  std::string witness;
  bool ok() const { return bijective && support_preserving && id_is_unit; }
};

// f ↦ f_=(x) = (f x, supp x) against g ↦ π₁∘g, on all maps tabulated over the
// orbits of X up to stage n.
inline KleisliReport kleisli_transpose(const NomPtr& x, const NomPtr& y, int n) {
  KleisliReport rep;
  auto ty = tmonad(y);
  auto fs = equivariant_maps(*x, *y, n, [&](const Val& v, const Val& w) { return y->supp(w).subset_of(x->supp(v)); });
  auto gs = equivariant_maps(*x, *ty, n, [&](const Val& v, const Val& w) { return ty->supp(w) == x->supp(v); });
  rep.maps = static_cast<long>(fs.size());
  rep.transposes = static_cast<long>(gs.size());
  std::set<std::map<Val, Val>> gset(gs.begin(), gs.end()), hit;
  for (const auto& f : fs) {
    std::map<Val, Val> g;
    for (const auto& [v, w] : f) g[v] = TSet::make(w, x->supp(v));
    for (const auto& [v, w] : g)
      if (ty->supp(w) != x->supp(v)) rep.support_preserving = false;
    if (!gset.count(g)) {
      rep.bijective = false;
      if (rep.witness.empty()) rep.witness = "transpose of a map is not a support-preserving Kleisli map";
    }
    hit.insert(g);
  }
  for (const auto& g : gs) {
    std::map<Val, Val> f;
    for (const auto& [v, w] : g) f[v] = TSet::x_part(w);
    std::map<Val, Val> back;
    for (const auto& [v, w] : f) back[v] = TSet::make(w, x->supp(v));
    if (back != g) {
      rep.bijective = false;
      if (rep.witness.empty()) rep.witness = "π₁ loses information at some Kleisli map";
    }
  }
  if (hit.size() != gs.size()) rep.bijective = false;
  for (int k = 0; k <= n; ++k)
    for (const auto& v : x->stage(k))
      if (t_unit(*x, v) != TSet::make(v, x->supp(v)) || tmonad(x)->supp(t_unit(*x, v)) != x->supp(v))
        rep.id_is_unit = false;
  return rep;
}

// X ×_= Y = {(x, y) | supp x = supp y}
class EqProductSet : public ProductSet {
 public:
  using ProductSet::ProductSet;
  std::string name() const override { return "(" + x_->name() + "×=" + y_->name() + ")"; }
  std::vector<Val> stage(int n) const override {
    std::vector<Val> v;
    for (const auto& a : ProductSet::stage(n))
      if (x_->supp(a[0]) == y_->supp(a[1])) v.push_back(a);
    return v;
  }
};

inline NomPtr eq_product(NomPtr x, NomPtr y) { return std::make_shared<EqProductSet>(std::move(x), std::move(y)); }
inline NomPtr eq_terminal() { return pf(); }

struct UniversalReport {
  long cones = 0;
  bool ok = true;
  std::string witness;
};

// Every pair of support-preserving maps Z → X, Z → Y factors uniquely through
// X ×_= Y by support-preserving maps.
inline UniversalReport eq_product_universal(const NomPtr& z, const NomPtr& x, const NomPtr& y, int n) {
  UniversalReport r;
  auto p = eq_product(x, y);
  auto sp = [](const NomSet& a, const NomSet& b) {
    return [&a, &b](const Val& v, const Val& w) { return b.supp(w) == a.supp(v); };
  };
  auto fs = equivariant_maps(*z, *x, n, sp(*z, *x));
  auto gs = equivariant_maps(*z, *y, n, sp(*z, *y));
  auto hs = equivariant_maps(*z, *p, n, sp(*z, *p));
  for (const auto& f : fs)
    for (const auto& g : gs) {
      ++r.cones;
      int found = 0;
      for (const auto& h : hs) {
        bool ok = true;
        for (const auto& [v, w] : h)
          if (w[0] != f.at(v) || w[1] != g.at(v)) ok = false;
        found += ok;
      }
      if (found != 1) {
        r.ok = false;
        r.witness = std::to_string(found) + " mediating maps for a cone from " + z->name();
        return r;
      }
    }
  return r;
}

// Exactly one support-preserving map X → 1_=, namely supp.
inline UniversalReport eq_terminal_universal(const NomPtr& x, int n) {
  UniversalReport r;
  auto one = eq_terminal();
  auto ms = equivariant_maps(*x, *one, n, [&](const Val& v, const Val& w) { return one->supp(w) == x->supp(v); });
  r.cones = static_cast<long>(ms.size());
  if (ms.size() != 1) {
    r.ok = false;
    r.witness = std::to_string(ms.size()) + " support-preserving maps " + x->name() + " → 1_=";
    return r;
  }
  for (const auto& [v, w] : ms[0])
    if (w != x->supp(v).to_val()) r.ok = false, r.witness = "the map differs from supp at " + x->show(v);
  return r;
}

// ---- renaming sets over 𝔽 ----

// Day ⊕ over 𝔽 is the pointwise product, and I_upper carries it to X × Y.
inline LawCheck upper_carries_product(const NomPtr& x, const NomPtr& y, int bound) {
  TruncPresheaf fx = I_star(*x, CatTag::F, bound), fy = I_star(*y, CatTag::F, bound);
  auto up = I_upper(pointwise_product(fx, fy));
  NomPtr xy = product(x, y);
  auto f = [&](const Val& e) {
    const Val& pr = UpperSet::elem(e);
    AtomSet b = UpperSet::base(e);
    return Val::tuple({detail::relabel_onto(*x, pr[0], b), detail::relabel_onto(*y, pr[1], b)});
  };
  LawCheck r;
  for (int n = 0; n <= bound && r.ok; ++n) {
    r = check_nominal_iso(*up, *xy, f, n);
    if (r.ok) r = check_ren_equivariant(*up, *xy, f, n);
  }
  return r;
}

// I_upper ∘ I_star ≅ id on a nominal or renaming set.
inline LawCheck upper_star_roundtrip(const NomPtr& x, CatTag cat, int bound) {
  auto up = I_upper(I_star(*x, cat, bound));
  auto f = [&](const Val& e) { return upper_to_nominal(*x, e); };
  LawCheck r;
  for (int n = 0; n <= bound && r.ok; ++n) {
    r = check_nominal_iso(*up, *x, f, n);
    if (r.ok && cat == CatTag::F) r = check_ren_equivariant(*up, *x, f, n);
  }
  return r;
}

// I_upper(𝐲k) ≅ 𝔸^{*k}: [B, j] ↦ (B[j(0)], …, B[j(k-1)])
inline LawCheck upper_representable(int k, int bound) {
  auto up = I_upper(representable(CatTag::I, k, bound));
  auto fp = fresh_power(k);
  auto f = [](const Val& e) {
    AtomSet b = UpperSet::base(e);
    Mor j = mor_of_val(UpperSet::elem(e));
    std::vector<Val> t;
    for (int i = 0; i < j.dom; ++i) t.push_back(Val::atom(b[j.t[i]]));
    return Val::tuple(t);
  };
  LawCheck r;
  for (int n = 0; n <= bound && r.ok; ++n) r = check_nominal_iso(*up, *fp, f, n);
  return r;
}

}  // namespace nomsub
