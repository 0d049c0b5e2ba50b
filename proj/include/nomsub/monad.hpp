#pragma once

// Finitary set monads restricted to finite stages, their ◇-monoids on
// presheaves over 𝔽, and the commutativity square for the induced monoid
// m_⊗ = m · φ over the uniform tensor.

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "nomsub/psh_laws.hpp"

namespace nomsub {

struct SetMonad {
  std::string name;
  std::function<std::vector<Val>(int)> elems;  // T(n), truncated
  std::function<Val(const Mor&, const Val&)> fmap;
  std::function<Val(int)> unit;  // η(a) for a variable a
  std::function<Val(const Val&, const std::vector<Val>&)> bind;
};

namespace detail {
inline std::vector<Val> words(int n, int len, bool sorted) {
  std::vector<Val> out;
  std::vector<Val> cur;
  std::function<void(int)> go = [&](int lo) {
    out.push_back(Val::tuple(cur));
    if (static_cast<int>(cur.size()) == len) return;
    for (int a = sorted ? lo : 0; a < n; ++a) {
      cur.push_back(Val::nat(a));
      go(a);
      cur.pop_back();
    }
  };
  go(0);
  return out;
}
}  // namespace detail

// Free monoid, words of length ≤ len.
inline SetMonad list_monad(int len) {
  SetMonad t;
  t.name = "List@" + std::to_string(len);
  t.elems = [len](int n) { return detail::words(n, len, false); };
  t.fmap = [](const Mor& f, const Val& s) {
    Val r = s;
    for (auto& k : r.kids) k = Val::nat(f(k.v));
    return r;
  };
  t.unit = [](int a) { return Val::tuple({Val::nat(a)}); };
  t.bind = [](const Val& s, const std::vector<Val>& g) {
    std::vector<Val> r;
    for (const auto& k : s.kids) r.insert(r.end(), g[k.v].kids.begin(), g[k.v].kids.end());
    return Val::tuple(r);
  };
  return t;
}

// Free commutative monoid, bags of size ≤ len.
inline SetMonad multiset_monad(int len) {
  SetMonad t;
  t.name = "Bag@" + std::to_string(len);
  auto bag = [](std::vector<Val> ks) {
    std::sort(ks.begin(), ks.end());
    return Val::node(Label::Bag, std::move(ks));
  };
  t.elems = [len, bag](int n) {
    std::vector<Val> out;
    for (auto& w : detail::words(n, len, true)) out.push_back(bag(w.kids));
    return out;
  };
  t.fmap = [bag](const Mor& f, const Val& s) {
    std::vector<Val> ks;
    for (const auto& k : s.kids) ks.push_back(Val::nat(f(k.v)));
    return bag(ks);
  };
  t.unit = [bag](int a) { return bag({Val::nat(a)}); };
  t.bind = [bag](const Val& s, const std::vector<Val>& g) {
    std::vector<Val> r;
    for (const auto& k : s.kids) r.insert(r.end(), g[k.v].kids.begin(), g[k.v].kids.end());
    return bag(r);
  };
  return t;
}

inline SetMonad identity_monad() {
  SetMonad t;
  t.name = "Id";
  t.elems = [](int n) {
    std::vector<Val> out;
    for (int a = 0; a < n; ++a) out.push_back(Val::nat(a));
    return out;
  };
  t.fmap = [](const Mor& f, const Val& s) { return Val::nat(f(s.v)); };
  t.unit = [](int a) { return Val::nat(a); };
  t.bind = [](const Val& s, const std::vector<Val>& g) { return g[s.v]; };
  return t;
}

// The carrier of the ◇-monoid: T restricted to stages of 𝔽.
inline TruncPresheaf monad_presheaf(const SetMonad& t, int bound) {
  return tabulate(t.name, CatTag::F, bound, t.elems, t.fmap);
}

// All families A → T(B) drawn from the truncated T(B).
inline std::vector<std::vector<Val>> families(const SetMonad& t, int a, int b) {
  auto tb = t.elems(b);
  std::vector<std::vector<Val>> out;
  std::vector<Val> cur;
  std::function<void()> go = [&]() {
    if (static_cast<int>(cur.size()) == a) {
      out.push_back(cur);
      return;
    }
    for (const auto& v : tb) {
      cur.push_back(v);
      go();
      cur.pop_back();
    }
  };
  go();
  return out;
}

// Monoid laws of m(s, γ) = bind, elementwise on stages ≤ bound: units,
// associativity, compatibility with the coend relation m(j·s, γ) = m(s, γ∘j)
// and naturality in the output stage.
inline LawResult monoid_laws(const SetMonad& t, int bound) {
  LawResult r;
  auto units = [&](int a) {
    std::vector<Val> u;
    for (int i = 0; i < a; ++i) u.push_back(t.unit(i));
    return u;
  };
  for (int a = 0; a <= bound; ++a)
    for (const auto& s : t.elems(a)) {
      if (t.bind(s, units(a)) != s) r.fail(t.name + ": right unit fails on " + show(s));
      for (int b = 0; b <= bound; ++b)
        for (const auto& g : families(t, a, b)) {
          Val sg = t.bind(s, g);
          for (int c = 0; c <= bound; ++c) {
            for (const auto& f : homset(CatTag::F, b, c).mors) {
              std::vector<Val> fg;
              for (const auto& v : g) fg.push_back(t.fmap(f, v));
              if (t.bind(s, fg) != t.fmap(f, sg)) r.fail(t.name + ": not natural at " + f.str());
            }
            if (a > 2 || b > 2 || c > 2) continue;
            for (const auto& d : families(t, b, c)) {
              std::vector<Val> gd;
              for (const auto& v : g) gd.push_back(t.bind(v, d));
              if (t.bind(sg, d) != t.bind(s, gd)) r.fail(t.name + ": associativity fails on " + show(s));
            }
          }
        }
      for (int a2 = 0; a2 <= bound; ++a2)
        for (const auto& j : homset(CatTag::F, a, a2).mors)
          for (const auto& g : families(t, a2, std::min(bound, 2))) {
            std::vector<Val> gj;
            for (int i = 0; i < a; ++i) gj.push_back(g[j(i)]);
            if (t.bind(t.fmap(j, s), g) != t.bind(s, gj)) r.fail(t.name + ": m(j·s, γ) ≠ m(s, γ∘j)");
          }
    }
  for (int a = 1; a <= bound; ++a)
    for (int i = 0; i < a; ++i)
      for (const auto& g : families(t, a, std::min(bound, 2)))
        if (t.bind(t.unit(i), g) != g[i]) r.fail(t.name + ": left unit fails at variable " + std::to_string(i));
  return r;
}

// The ◇-monoid multiplication on the presheaf engine's classes of M ◇ M:
// m[x, (h, (y_a))] = bind(x, a ↦ T(h ∘ ι_a)(y_a)).
class MonadMonoid {
 public:
  MonadMonoid(const SetMonad& t, int bound) : t_(t), m_(monad_presheaf(t, bound)), phi_(m_, m_, bound), bound_(bound) {}

  const TruncPresheaf& carrier() const { return m_; }
  const PhiMap& phi() const { return phi_; }

  Val mult_tuple(int c, const SubstTensor::Tuple& u) const {
    const SubstTensor& st = phi_.subst();
    const Day::Tuple& d = st.power(u.a).decode(c, u.g);
    auto off = offsets(d.fib);
    std::vector<Val> g;
    for (int k = 0; k < u.a; ++k) {
      Mor h{d.fib[k], c, {}};
      for (int e = 0; e < d.fib[k]; ++e) h.t.push_back(d.h(off[k] + e));
      g.push_back(t_.fmap(h, m_.at(d.fib[k], d.xs[k])));
    }
    return t_.bind(m_.at(u.a, u.x), g);
  }
  Val mult(int c, int cls) const { return mult_tuple(c, phi_.subst().decode(c, cls)); }

  // m is constant on every class of M ◇ M
  LawResult well_defined() const {
    LawResult r;
    const SubstTensor& st = phi_.subst();
    for (int c = 0; c <= bound_; ++c) {
      std::vector<Val> seen(st.result().size(c));
      std::vector<char> has(st.result().size(c), 0);
      st.for_each_tuple(c, [&](const SubstTensor::Tuple& u, int cls) {
        Val v = mult_tuple(c, u);
        if (!has[cls]) {
          has[cls] = 1;
          seen[cls] = v;
        } else if (seen[cls] != v) {
          r.fail(t_.name + ": multiplication not constant on " + show(st.result().at(c, cls)));
        }
      });
    }
    return r;
  }

  // m_⊗ on (s ∈ T A, t ∈ T B) at the identity of A × B
  Val mult_uniform(int a, int b, int s, int t) const {
    int c = a * b;
    int cls = phi_.on_tuple(c, Day::Tuple{{a, b}, Mor::id(c), {s, t}});
    return mult(c, cls);
  }

 private:
  const SetMonad& t_;
  TruncPresheaf m_;
  PhiMap phi_;
  int bound_;
};

struct CommutativityReport {
  bool commutes = true;
  long squares = 0;
  std::string witness;
};

// The square T A × T B → T(A × B) against the swapped route through
// T B × T A → T(B × A) and the symmetry τ, for all A·B ≤ bound.
inline CommutativityReport commutativity(const SetMonad& t, int bound) {
  MonadMonoid mm(t, bound);
  const TruncPresheaf& m = mm.carrier();
  CommutativityReport rep;
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; a * b <= bound && b <= bound; ++b) {
      Mor tau{a * b, a * b, {}};
      for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) tau.t.push_back(j * a + i);
      for (int s = 0; s < m.size(a); ++s)
        for (int u = 0; u < m.size(b); ++u) {
          ++rep.squares;
          Val top = t.fmap(tau, mm.mult_uniform(a, b, s, u));
          Val bottom = mm.mult_uniform(b, a, u, s);
          if (top != bottom && rep.commutes) {
            rep.commutes = false;
            rep.witness = "s=" + show(m.at(a, s)) + " ∈ T" + std::to_string(a) + ", t=" + show(m.at(b, u)) + " ∈ T" +
                          std::to_string(b) + ": " + show(top) + " vs " + show(bottom);
          }
        }
    }
  return rep;
}

}  // namespace nomsub
