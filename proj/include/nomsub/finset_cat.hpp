#pragma once

// Finite stages n = {0..n-1}, maps between them, and the wide subcategories
// of finite sets used as categories of contexts.

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nomsub/val.hpp"

namespace nomsub {

struct Mor {
  int dom = 0;
  int cod = 0;
  std::vector<int> t;  // t[i] = image of i

  static Mor id(int n) {
    Mor m{n, n, std::vector<int>(n)};
    for (int i = 0; i < n; ++i) m.t[i] = i;
    return m;
  }
  // the inclusion n ⊆ m, i ↦ i
  static Mor incl(int n, int m) {
    Mor r{n, m, std::vector<int>(n)};
    for (int i = 0; i < n; ++i) r.t[i] = i;
    return r;
  }
  int operator()(int i) const { return t[i]; }

  bool injective() const {
    std::vector<char> hit(cod, 0);
    for (int x : t) {
      if (hit[x]) return false;
      hit[x] = 1;
    }
    return true;
  }
  bool surjective() const {
    std::vector<char> hit(cod, 0);
    for (int x : t) hit[x] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  }
  bool bijective() const { return dom == cod && injective(); }
  bool identity() const { return *this == id(dom); }
  bool inclusion() const { return *this == incl(dom, cod); }

  std::string str() const {
    std::string s = "[" + std::to_string(dom) + "," + std::to_string(cod) + ",[";
    for (int i = 0; i < dom; ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + "]]";
  }
  Val to_val() const {
    std::vector<Val> ks;
    for (int x : t) ks.push_back(Val::nat(x));
    return Val::tuple({Val::nat(dom), Val::nat(cod), Val::tuple(std::move(ks))});
  }

  friend bool operator==(const Mor&, const Mor&) = default;
  friend auto operator<=>(const Mor& a, const Mor& b) {
    if (auto c = a.dom <=> b.dom; c != 0) return c;
    if (auto c = a.cod <=> b.cod; c != 0) return c;
    return a.t <=> b.t;
  }
};

// g ∘ f
inline Mor compose(const Mor& g, const Mor& f) {
  if (f.cod != g.dom) throw std::invalid_argument("compose: codomain/domain mismatch");
  Mor r{f.dom, g.cod, std::vector<int>(f.dom)};
  for (int i = 0; i < f.dom; ++i) r.t[i] = g.t[f.t[i]];
  return r;
}

// f + g on m1 + m2 → n1 + n2, left block first
inline Mor sum(const Mor& f, const Mor& g) {
  Mor r{f.dom + g.dom, f.cod + g.cod, {}};
  for (int x : f.t) r.t.push_back(x);
  for (int x : g.t) r.t.push_back(f.cod + x);
  return r;
}

// Pairs (i, j) of m1 × m2 are indexed i * m2 + j.
inline Mor product(const Mor& f, const Mor& g) {
  Mor r{f.dom * g.dom, f.cod * g.cod, std::vector<int>(f.dom * g.dom)};
  for (int i = 0; i < f.dom; ++i)
    for (int j = 0; j < g.dom; ++j) r.t[i * g.dom + j] = f.t[i] * g.cod + g.t[j];
  return r;
}

// All maps m → n in lexicographic order of their tables.
inline std::vector<Mor> all_maps(int m, int n) {
  std::vector<Mor> out;
  if (n == 0) {
    if (m == 0) out.push_back(Mor{0, 0, {}});
    return out;
  }
  std::vector<int> t(m, 0);
  while (true) {
    out.push_back(Mor{m, n, t});
    int i = m - 1;
    while (i >= 0 && ++t[i] == n) t[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

enum class CatTag { J, Isub, B, I, S, F };

inline std::string cat_name(CatTag c) {
  switch (c) {
    case CatTag::J: return "J";
    case CatTag::Isub: return "Isub";
    case CatTag::B: return "B";
    case CatTag::I: return "I";
    case CatTag::S: return "S";
    case CatTag::F: return "F";
  }
  return "?";
}

inline std::optional<CatTag> cat_from_name(const std::string& s) {
  for (CatTag c : {CatTag::J, CatTag::Isub, CatTag::B, CatTag::I, CatTag::S, CatTag::F})
    if (cat_name(c) == s) return c;
  return std::nullopt;
}

inline bool member(CatTag c, const Mor& f) {
  switch (c) {
    case CatTag::J: return f.identity();
    case CatTag::Isub: return f.inclusion();
    case CatTag::B: return f.bijective();
    case CatTag::I: return f.injective();
    case CatTag::S: return f.surjective();
    case CatTag::F: return true;
  }
  return false;
}

// A wide subcategory of finite sets given by an enumerable membership predicate.
struct Subcat {
  std::string name;
  std::function<bool(const Mor&)> contains;

  static Subcat of(CatTag c) {
    return Subcat{cat_name(c), [c](const Mor& f) { return member(c, f); }};
  }
};

inline std::vector<Mor> hom(const Subcat& c, int m, int n) {
  std::vector<Mor> out;
  for (auto& f : all_maps(m, n))
    if (c.contains(f)) out.push_back(std::move(f));
  return out;
}
inline std::vector<Mor> hom(CatTag c, int m, int n) { return hom(Subcat::of(c), m, n); }

// Canonical pullback of b: B → Y along f: X → Y. The carrier is the
// lexicographically ordered set of pairs (x, β) with f(x) = b(β); fst is the
// base change f*b and r the reindexing projection r_f.
struct Pullback {
  std::vector<std::pair<int, int>> carrier;
  Mor fst;
  Mor r;
};

inline Pullback pullback(const Mor& f, const Mor& b) {
  if (f.cod != b.cod) throw std::invalid_argument("pullback: codomains differ");
  Pullback p;
  for (int x = 0; x < f.dom; ++x)
    for (int beta = 0; beta < b.dom; ++beta)
      if (f.t[x] == b.t[beta]) p.carrier.emplace_back(x, beta);
  int n = static_cast<int>(p.carrier.size());
  p.fst = Mor{n, f.dom, {}};
  p.r = Mor{n, b.dom, {}};
  for (auto [x, beta] : p.carrier) {
    p.fst.t.push_back(x);
    p.r.t.push_back(beta);
  }
  return p;
}

inline std::vector<int> preimage(const Mor& f, const std::vector<int>& u) {
  std::vector<int> out;
  for (int x = 0; x < f.dom; ++x)
    if (std::find(u.begin(), u.end(), f.t[x]) != u.end()) out.push_back(x);
  return out;
}

// Universal property of a candidate square (p1: P → X, p2: P → B) over (f, b):
// every cone (q1: Q → X, q2: Q → B) with Q ≤ bound factors uniquely.
inline bool is_pullback_square(const Mor& f, const Mor& b, const Mor& p1, const Mor& p2, int bound) {
  if (compose(f, p1) != compose(b, p2)) return false;
  for (int q = 0; q <= bound; ++q)
    for (const auto& q1 : all_maps(q, f.dom))
      for (const auto& q2 : all_maps(q, b.dom)) {
        if (compose(f, q1) != compose(b, q2)) continue;
        int mediators = 0;
        for (const auto& u : all_maps(q, p1.dom))
          if (compose(p1, u) == q1 && compose(p2, u) == q2) ++mediators;
        if (mediators != 1) return false;
      }
  return true;
}

struct ContextualityReport {
  int bound = 0;
  bool plus_closed = true;
  bool pullback_stable = true;
  bool times_closed = true;
  bool prime = true;
  bool all_isos = true;
  bool contextual() const { return plus_closed && pullback_stable; }
  bool product_prime() const { return times_closed && prime; }
  // the two characterizations are only claimed to agree when all isos are present
  bool agree() const { return !all_isos || contextual() == product_prime(); }
  std::string witness;  // first failing square or pair, if any
};

inline ContextualityReport contextuality_check(const Subcat& c, int bound) {
  ContextualityReport rep;
  rep.bound = bound;
  auto note = [&](const std::string& w) {
    if (rep.witness.empty()) rep.witness = w;
  };
  for (int n = 0; n <= bound; ++n)
    for (const auto& s : all_maps(n, n))
      if (s.bijective() && !c.contains(s)) rep.all_isos = false;

  for (int m1 = 0; m1 <= bound; ++m1)
    for (int m2 = 0; m1 + m2 <= bound; ++m2)
      for (int n1 = 0; n1 <= bound; ++n1)
        for (int n2 = 0; n1 + n2 <= bound; ++n2)
          for (const auto& f : all_maps(m1, n1))
            for (const auto& g : all_maps(m2, n2)) {
              bool fin = c.contains(f), gin = c.contains(g);
              bool sin = c.contains(sum(f, g));
              if (fin && gin && !sin) {
                rep.plus_closed = false;
                note("sum " + f.str() + "+" + g.str() + " leaves " + c.name);
              }
              if (sin && !(fin && gin)) {
                rep.prime = false;
                note("sum " + f.str() + "+" + g.str() + " is in " + c.name + " but a summand is not");
              }
            }

  for (int m1 = 0; m1 <= bound; ++m1)
    for (int m2 = 0; m2 <= bound && m1 * m2 <= bound; ++m2)
      for (int n1 = 0; n1 <= bound; ++n1)
        for (int n2 = 0; n2 <= bound && n1 * n2 <= bound; ++n2) {
          for (const auto& f : hom(c, m1, n1))
            for (const auto& g : hom(c, m2, n2))
              if (!c.contains(product(f, g))) {
                rep.times_closed = false;
                note("product " + f.str() + "x" + g.str() + " leaves " + c.name);
              }
        }

  // every square with stages ≤ bound, every iso-variant of its carrier
  for (int y = 0; y <= bound; ++y)
    for (int x = 0; x <= bound; ++x)
      for (const auto& f : hom(c, x, y))
        for (int bb = 0; bb <= bound; ++bb)
          for (const auto& b : all_maps(bb, y)) {
            Pullback p = pullback(f, b);
            int pn = p.r.dom;
            if (pn > bound) continue;
            for (const auto& s : all_maps(pn, pn)) {
              if (!s.bijective()) continue;
              Mor r = compose(p.r, s);
              if (!c.contains(r)) {
                rep.pullback_stable = false;
                note("pullback of b=" + b.str() + " along f=" + f.str() + " has reindexing leg " +
                     r.str() + " outside " + c.name);
              }
            }
          }
  return rep;
}

inline ContextualityReport contextuality_check(CatTag c, int bound) {
  return contextuality_check(Subcat::of(c), bound);
}

// ---- coverages ----

enum class CoverageTag { ICtx, O };

// Singleton inclusion covers {A ⊆ B} of stage a, for B ≤ bound, kept if in Ctx.
inline std::vector<Mor> covers_ictx(CatTag c, int a, int bound) {
  std::vector<Mor> out;
  for (int b = a; b <= bound; ++b) {
    Mor i = Mor::incl(a, b);
    if (member(c, i)) out.push_back(i);
  }
  return out;
}

// Stability witness for the singleton-inclusion coverage: given the cover
// C ⊆ C + A and g: C → D, the cover D ⊆ D + A' with the square (g + π).
struct StabilityWitness {
  Mor cover;   // C → C + A
  Mor g;       // C → D
  Mor tcover;  // D → D + A'
  Mor across;  // g + π : C + A → D + A'
  bool commutes = false;
  bool in_ctx = false;
};

inline StabilityWitness ictx_stability(CatTag c, const Mor& cover, const Mor& g) {
  int a = cover.cod - cover.dom;
  StabilityWitness w{cover, g, Mor::incl(g.cod, g.cod + a), sum(g, Mor::id(a))};
  w.commutes = compose(w.tcover, g) == compose(w.across, cover);
  w.in_ctx = member(c, w.across) && member(c, w.tcover);
  return w;
}

// Covers of a ⊆ universe (bitmasks) in the coverage O on subset inclusions:
// nonempty families of supersets whose intersection is exactly a.
inline std::vector<std::vector<unsigned>> covers_o(unsigned a, int universe) {
  std::vector<unsigned> ups;
  unsigned full = (1u << universe) - 1;
  for (unsigned b = 0; b <= full; ++b)
    if ((b & a) == a) ups.push_back(b);
  std::vector<std::vector<unsigned>> out;
  for (unsigned long fam = 1; fam < (1ul << ups.size()); ++fam) {
    unsigned meet = full;
    std::vector<unsigned> f;
    for (std::size_t i = 0; i < ups.size(); ++i)
      if (fam & (1ul << i)) {
        f.push_back(ups[i]);
        meet &= ups[i];
      }
    if (meet == a) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace nomsub
