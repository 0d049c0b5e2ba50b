#pragma once

// Explicit isomorphisms and law checks for the presheaf substitution tensor:
// unit isos, left distributivity, Day-power decompositions of A ◁ X, the
// internal hom with curry/uncurry, and the comparison map from the uniform
// (Day ×) tensor.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "nomsub/coend.hpp"
#include "nomsub/presheaf.hpp"

namespace nomsub {

// Induced map on classes of a quotient-built presheaf. m(c, tuple) returns an
// index in the target or -1 when the tuple cannot be transported within the
// truncation. Checks that all transportable tuples of a class agree, then
// that the class map is a natural bijection on stages ≤ upto.
template <class Src, class M>
LawResult iso_from_tuples(const Src& src, const TruncPresheaf& target, M m, int upto) {
  const TruncPresheaf& x = src.result();
  LawResult r;
  std::vector<std::vector<int>> img(upto + 1);
  for (int c = 0; c <= upto; ++c) {
    img[c].assign(x.size(c), -1);
    src.for_each_tuple(c, [&](const auto& t, int cls) {
      int j = m(c, t);
      if (j < 0) return;
      if (img[c][cls] < 0) img[c][cls] = j;
      else if (img[c][cls] != j)
        r.fail("map not constant on the class of " + show(x.at(c, cls)) + " at stage " + std::to_string(c));
    });
  }
  if (!r.ok) return r;
  return check_natural_iso(x, target, [&](int n, int i) { return img[n][i]; }, upto);
}

inline std::vector<int> offsets(const std::vector<int>& fib) {
  std::vector<int> off(fib.size() + 1, 0);
  for (std::size_t i = 0; i < fib.size(); ++i) off[i + 1] = off[i] + fib[i];
  return off;
}

// The map A → C picked out by a bundle of points t_k: 1 → n_k over h: Σn → C.
inline Mor bundle_points(const Day::Tuple& t, const TruncPresheaf& y1) {
  auto off = offsets(t.fib);
  Mor j{static_cast<int>(t.fib.size()), t.h.cod, {}};
  for (std::size_t k = 0; k < t.fib.size(); ++k) {
    Mor pt = mor_of_val(y1.at(t.fib[k], t.xs[k]));
    j.t.push_back(t.h(off[k] + pt(0)));
  }
  return j;
}

// λ: y1 ◇ Y ≅ Y, (A, x: 1 → A, γ) ↦ reindex γ along x, then h · y.
inline LawResult left_unit_psh(const TruncPresheaf& y, int bound) {
  TruncPresheaf y1 = representable(y.cat, 1, bound);
  SubstTensor t(y1, y, bound, bound);
  return iso_from_tuples(
      t, y,
      [&](int c, const SubstTensor::Tuple& u) {
        Mor x = mor_of_val(y1.at(u.a, u.x));
        int g1 = reindex(t.power(u.a), t.power(1), x, c, u.g);
        if (g1 < 0) return -1;
        const Day::Tuple& d = t.power(1).decode(c, g1);
        return y.apply(d.h, d.xs[0]);
      },
      bound);
}

// ρ: X ◇ y1 ≅ X, (A, x, γ) ↦ j · x where j: A → C is the map γ picks out.
inline LawResult right_unit_psh(const TruncPresheaf& x, int bound) {
  TruncPresheaf y1 = representable(x.cat, 1, bound);
  SubstTensor t(x, y1, bound, bound);
  return iso_from_tuples(
      t, x,
      [&](int c, const SubstTensor::Tuple& u) {
        Mor j = bundle_points(t.power(u.a).decode(c, u.g), y1);
        if (!member(x.cat, j)) return -1;
        return x.apply(j, u.x);
      },
      bound);
}

// (X ⊕ Y) ◇ Z ≅ (X ◇ Z) ⊕ (Y ◇ Z): reindex the substitution along the Day
// map h: A1 + A2 → A and split its fibres in two.
inline LawResult distributivity_psh(const TruncPresheaf& x, const TruncPresheaf& y, const TruncPresheaf& z,
                                    int bound) {
  Day d(x, y, DayOp::Sum, bound, bound);
  SubstTensor lhs(d.result(), z, bound, bound);
  SubstTensor tx(x, z, bound, bound), ty(y, z, bound, bound);
  Day rhs(tx.result(), ty.result(), DayOp::Sum, bound, bound);
  return iso_from_tuples(
      lhs, rhs.result(),
      [&](int c, const SubstTensor::Tuple& u) {
        const Day::Tuple& w = d.decode(u.a, u.x);
        int a1 = w.fib[0], a2 = w.fib[1];
        int g = reindex(lhs.power(u.a), lhs.power(a1 + a2), w.h, c, u.g);
        if (g < 0) return -1;
        const Day::Tuple& b = lhs.power(a1 + a2).decode(c, g);
        std::vector<int> n1(b.fib.begin(), b.fib.begin() + a1), n2(b.fib.begin() + a1, b.fib.end());
        std::vector<int> z1(b.xs.begin(), b.xs.begin() + a1), z2(b.xs.begin() + a1, b.xs.end());
        int s1 = std::accumulate(n1.begin(), n1.end(), 0), s2 = std::accumulate(n2.begin(), n2.end(), 0);
        int g1 = tx.power(a1).locate(s1, n1, Mor::id(s1), z1);
        int g2 = ty.power(a2).locate(s2, n2, Mor::id(s2), z2);
        int v1 = tx.locate(s1, a1, w.xs[0], g1), v2 = ty.locate(s2, a2, w.xs[1], g2);
        if (v1 < 0 || v2 < 0) return -1;
        return rhs.locate(c, {s1, s2}, b.h, {v1, v2});
      },
      bound);
}

// A ◁ X ≅ X ⊕ (X ⊕ (… ⊕ X)) for a ≥ 1, by nesting the fibres to the right.
inline LawResult day_power_iso(const TruncPresheaf& x, int a, int bound) {
  auto p = subst_presheaf(a, x, bound, bound);
  // nest[k] is the k-fold right-nested binary power, k ≥ 2
  std::vector<std::unique_ptr<Day>> nest(a + 1);
  for (int k = 2; k <= a; ++k) {
    const TruncPresheaf& rest = k == 2 ? x : nest[k - 1]->result();
    nest[k] = std::make_unique<Day>(x, rest, DayOp::Sum, bound, bound);
  }
  const TruncPresheaf& target = a == 1 ? x : nest[a]->result();
  // embeds fibres i.. at the identity, returning (stage, index)
  std::function<std::pair<int, int>(const Day::Tuple&, int)> embed = [&](const Day::Tuple& t, int i) {
    int k = a - i;
    if (k == 1) return std::make_pair(t.fib[i], t.xs[i]);
    auto [s, r] = embed(t, i + 1);
    int n = t.fib[i] + s;
    return std::make_pair(n, nest[k]->locate(n, {t.fib[i], s}, Mor::id(n), {t.xs[i], r}));
  };
  return iso_from_tuples(
      *p, target,
      [&](int c, const Day::Tuple& t) {
        if (a == 1) return x.apply(t.h, t.xs[0]);
        auto [s, r] = embed(t, 1);
        return nest[a]->locate(c, {t.fib[0], s}, t.h, {t.xs[0], r});
      },
      bound);
}

// 0 ◁ X ≅ y0
inline LawResult empty_power_iso(const TruncPresheaf& x, int bound) {
  auto p = subst_presheaf(0, x, bound, bound);
  TruncPresheaf y0 = representable(x.cat, 0, bound);
  return iso_from_tuples(
      *p, y0, [&](int c, const Day::Tuple& t) { return y0.find(c, t.h.to_val()); }, bound);
}

// A ◁ y1 ≅ y A
inline LawResult points_power_iso(CatTag cat, int a, int bound) {
  TruncPresheaf y1 = representable(cat, 1, bound);
  TruncPresheaf ya = representable(cat, a, bound);
  auto p = subst_presheaf(a, y1, bound, bound);
  return iso_from_tuples(
      *p, ya, [&](int c, const Day::Tuple& t) { return ya.find(c, bundle_points(t, y1).to_val()); }, bound);
}

// Over 𝔽, X ⊕ Y is the pointwise product.
inline LawResult day_sum_is_product(const TruncPresheaf& x, const TruncPresheaf& y, int bound) {
  Day d(x, y, DayOp::Sum, bound, bound);
  TruncPresheaf p = pointwise_product(x, y);
  return iso_from_tuples(
      d, p,
      [&](int c, const Day::Tuple& t) {
        Mor l = compose(t.h, Mor::incl(t.fib[0], t.fib[0] + t.fib[1]));
        Mor r{t.fib[1], c, {}};
        for (int i = 0; i < t.fib[1]; ++i) r.t.push_back(t.h(t.fib[0] + i));
        return p.find(c, Val::tuple({x.at(c, x.apply(l, t.xs[0])), y.at(c, y.apply(r, t.xs[1]))}));
      },
      bound);
}

// y1 ⊗ y1 ≅ y1 for the Day tensor over ×.
inline LawResult day_prod_unit(CatTag cat, int bound) {
  TruncPresheaf y1 = representable(cat, 1, bound);
  Day d(y1, y1, DayOp::Prod, bound, bound);
  return iso_from_tuples(
      d, y1,
      [&](int c, const Day::Tuple& t) {
        Mor p = product(mor_of_val(y1.at(t.fib[0], t.xs[0])), mor_of_val(y1.at(t.fib[1], t.xs[1])));
        return y1.find(c, compose(t.h, p).to_val());
      },
      bound);
}

// Co-Yoneda: ∫^D Ctx(D, C) × F D ≅ F C, computed through the generic coend.
inline LawResult coyoneda_check(const TruncPresheaf& f, int c) {
  Bifunctor h;
  h.cat = f.cat;
  h.bound = f.bound;
  h.elems = [&](int j, int i) {
    std::vector<Val> out;
    for (const auto& g : homset(f.cat, j, c).mors)
      for (const auto& x : f.elems[i]) out.push_back(Val::tuple({g.to_val(), x}));
    return out;
  };
  h.pre = [&](const Mor& m, const Val& z) { return Val::tuple({compose(mor_of_val(z[0]), m).to_val(), z[1]}); };
  h.post = [&](const Mor& m, const Val& z) {
    return Val::tuple({z[0], f.at(m.cod, f.apply(m, f.find(m.dom, z[1])))});
  };
  CoendResult res = coend_quotient(h);
  LawResult r;
  std::vector<int> img(res.classes(), -1);
  for (std::size_t k = 0; k < res.members.size(); ++k) {
    auto [i, z] = res.members[k];
    Mor g = mor_of_val(z[0]);
    int y = f.apply(g, f.find(i, z[1]));
    int cls = res.q.cls[k];
    if (img[cls] < 0) img[cls] = y;
    else if (img[cls] != y) r.fail("co-Yoneda map not constant on a class");
  }
  if (res.classes() != f.size(c))
    r.fail("co-Yoneda: " + std::to_string(res.classes()) + " classes vs " + std::to_string(f.size(c)));
  std::vector<int> hit(f.size(c), 0);
  for (int y : img)
    if (y >= 0 && hit[y]++) r.fail("co-Yoneda map not injective");
  return r;
}

// ---- internal hom (Y ⊸ Z)(A) = Nat(A ◁ Y, Z) ----

inline Val nat_to_val(const NatTrans& a) {
  std::vector<Val> st;
  for (const auto& comp : a.comp) {
    std::vector<Val> v;
    for (int j : comp) v.push_back(Val::nat(j));
    st.push_back(Val::tuple(v));
  }
  return Val::tuple(st);
}

inline NatTrans nat_of_val(const Val& v) {
  NatTrans a;
  for (const auto& st : v.kids) {
    a.comp.emplace_back();
    for (const auto& j : st.kids) a.comp.back().push_back(j.v);
  }
  return a;
}

class InternalHom {
 public:
  InternalHom(const TruncPresheaf& y, const TruncPresheaf& z, int bound) : y_(y), z_(z) {
    for (int a = 0; a <= bound; ++a) p_.push_back(subst_presheaf(a, y, bound, bound));
    res_ = tabulate(
        y.name + "⊸" + z.name, y.cat, bound,
        [&](int a) {
          std::vector<Val> v;
          for (const auto& n : nat_enumerate(p_[a]->result(), z)) v.push_back(nat_to_val(n));
          return v;
        },
        [&](const Mor& f, const Val& v) {
          NatTrans al = nat_of_val(v), out;
          out.comp.resize(bound + 1);
          for (int c = 0; c <= bound; ++c)
            for (int g = 0; g < p_[f.cod]->result().size(c); ++g) {
              int g0 = reindex(*p_[f.cod], *p_[f.dom], f, c, g);
              if (g0 < 0) throw std::logic_error("internal hom: reindexing leaves the truncation");
              out.comp[c].push_back(al.comp[c][g0]);
            }
          return nat_to_val(out);
        });
  }
  const TruncPresheaf& result() const { return res_; }
  const Day& power(int a) const { return *p_[a]; }

 private:
  const TruncPresheaf& y_;
  const TruncPresheaf& z_;
  std::vector<std::unique_ptr<Day>> p_;
  TruncPresheaf res_;
};

// curry(β)_A(x) = (γ ↦ β [x, γ])
inline NatTrans curry_psh(const SubstTensor& t, const InternalHom& h, const NatTrans& beta) {
  const TruncPresheaf& x = t.left();
  int bound = h.result().bound;
  NatTrans out;
  out.comp.resize(bound + 1);
  for (int a = 0; a <= bound; ++a)
    for (int xi = 0; xi < x.size(a); ++xi) {
      NatTrans al;
      al.comp.resize(bound + 1);
      for (int c = 0; c <= bound; ++c)
        for (int g = 0; g < t.power(a).result().size(c); ++g) al.comp[c].push_back(beta.comp[c][t.locate(c, a, xi, g)]);
      out.comp[a].push_back(h.result().find(a, nat_to_val(al)));
    }
  return out;
}

// uncurry(α)[x, γ] = α_A(x)_C(γ)
inline NatTrans uncurry_psh(const SubstTensor& t, const InternalHom& h, const NatTrans& alpha) {
  int bound = h.result().bound;
  NatTrans out;
  out.comp.resize(bound + 1);
  for (int c = 0; c <= bound; ++c)
    for (int e = 0; e < t.result().size(c); ++e) {
      const auto& u = t.decode(c, e);
      NatTrans al = nat_of_val(h.result().at(u.a, alpha.comp[u.a][u.x]));
      out.comp[c].push_back(al.comp[c][u.g]);
    }
  return out;
}

struct AdjunctionReport {
  LawResult law;
  long lhs_count = 0;  // |Nat(X ◇ Y, Z)|
  long rhs_count = 0;  // |Nat(X, Y ⊸ Z)|
};

// Nat(X ◇ Y, Z) ≅ Nat(X, Y ⊸ Z): both round trips are identities and the
// images are natural.
inline AdjunctionReport adjunction_psh(const TruncPresheaf& x, const TruncPresheaf& y, const TruncPresheaf& z,
                                       int bound) {
  AdjunctionReport rep;
  SubstTensor t(x, y, bound, bound);
  InternalHom h(y, z, bound);
  auto lhs = nat_enumerate(t.result(), z);
  auto rhs = nat_enumerate(x, h.result());
  rep.lhs_count = static_cast<long>(lhs.size());
  rep.rhs_count = static_cast<long>(rhs.size());
  if (lhs.size() != rhs.size()) rep.law.fail("hom-set sizes differ");
  for (const auto& b : lhs) {
    NatTrans c = curry_psh(t, h, b);
    for (const auto& comp : c.comp)
      for (int v : comp)
        if (v < 0) {
          rep.law.fail("curry lands outside the internal hom");
          return rep;
        }
    if (!check_natural(x, h.result(), c).ok) rep.law.fail("curry is not natural");
    if (uncurry_psh(t, h, c).comp != b.comp) rep.law.fail("uncurry ∘ curry ≠ id");
  }
  for (const auto& a : rhs) {
    NatTrans u = uncurry_psh(t, h, a);
    if (!check_natural(t.result(), z, u).ok) rep.law.fail("uncurry is not natural");
    if (curry_psh(t, h, u).comp != a.comp) rep.law.fail("curry ∘ uncurry ≠ id");
  }
  return rep;
}

// ---- uniform tensor comparison φ: X ⊗ Y → X ◇ Y ----

// φ κ_{A,B}(j, x, y) = κ_A(x, [j, (y)_{a ∈ A}]) with all fibres equal to B.
class PhiMap {
 public:
  PhiMap(const TruncPresheaf& x, const TruncPresheaf& y, int bound)
      : uni_(x, y, DayOp::Prod, bound, bound), sub_(x, y, bound, bound), bound_(bound) {}

  const Day& uniform() const { return uni_; }
  const SubstTensor& subst() const { return sub_; }

  int on_tuple(int c, const Day::Tuple& t) const {
    int a = t.fib[0], b = t.fib[1];
    std::vector<int> fib(a, b), ys(a, t.xs[1]);
    int g = sub_.power(a).locate(c, fib, t.h, ys);
    return sub_.locate(c, a, t.xs[0], g);
  }

  // well-definedness on classes; returns the induced component tables
  LawResult check(NatTrans* out = nullptr) const {
    LawResult r;
    NatTrans phi;
    phi.comp.resize(bound_ + 1);
    for (int c = 0; c <= bound_; ++c) {
      phi.comp[c].assign(uni_.result().size(c), -1);
      uni_.for_each_tuple(c, [&](const Day::Tuple& t, int cls) {
        int v = on_tuple(c, t);
        if (v < 0) return;
        if (phi.comp[c][cls] < 0) phi.comp[c][cls] = v;
        else if (phi.comp[c][cls] != v) r.fail("φ not constant on the class of " + show(uni_.result().at(c, cls)));
      });
      for (int e = 0; e < uni_.result().size(c); ++e)
        if (phi.comp[c][e] < 0) r.fail("φ undefined within the truncation on " + show(uni_.result().at(c, e)));
    }
    if (r.ok) {
      LawResult n = check_natural(uni_.result(), sub_.result(), phi);
      if (!n.ok) r.fail(n.witness);
    }
    if (out) *out = phi;
    return r;
  }

  bool injective() const {
    NatTrans phi;
    if (!check(&phi).ok) return false;
    for (auto& comp : phi.comp) {
      auto s = comp;
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
    }
    return true;
  }

 private:
  Day uni_;
  SubstTensor sub_;
  int bound_;
};

// λ_◇ ∘ φ = λ_⊗ on y1 ⊗ Y.
inline LawResult phi_left_unit(const TruncPresheaf& y, int bound) {
  TruncPresheaf y1 = representable(y.cat, 1, bound);
  PhiMap phi(y1, y, bound);
  LawResult r;
  NatTrans tab;
  LawResult w = phi.check(&tab);
  if (!w.ok) return w;
  const SubstTensor& t = phi.subst();
  for (int c = 0; c <= bound; ++c)
    phi.uniform().for_each_tuple(c, [&](const Day::Tuple& u, int cls) {
      Mor x = mor_of_val(y1.at(u.fib[0], u.xs[0]));
      int lam_tensor = y.apply(compose(u.h, product(x, Mor::id(u.fib[1]))), u.xs[1]);
      const auto& s = t.decode(c, tab.comp[c][cls]);
      Mor xs = mor_of_val(y1.at(s.a, s.x));
      int g1 = reindex(t.power(s.a), t.power(1), xs, c, s.g);
      if (g1 < 0) {
        r.fail("left unit leaves the truncation");
        return;
      }
      const Day::Tuple& d = t.power(1).decode(c, g1);
      if (y.apply(d.h, d.xs[0]) != lam_tensor) r.fail("λ∘φ ≠ λ on " + show(phi.uniform().result().at(c, cls)));
    });
  return r;
}

}  // namespace nomsub
