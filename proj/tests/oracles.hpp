#pragma once

// Brute-force oracles, written without the library's canonical forms,
// class searches or locally nameless machinery.

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "nomsub/finset_cat.hpp"
#include "nomsub/lambda.hpp"
#include "nomsub/nominal.hpp"

namespace oracle {

using nomsub::Atom;
using nomsub::Val;

inline long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }
inline long falling(int n, int k) {
  long r = 1;
  for (int i = 0; i < k; ++i) r *= n - i;
  return k > n ? 0 : r;
}
inline long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}
// surjections m → n by inclusion–exclusion
inline long surjections(int m, int n) {
  long s = 0;
  long binom = 1;
  for (int k = 0; k <= n; ++k) {
    s += (k % 2 ? -1 : 1) * binom * ipow(n - k, m);
    binom = binom * (n - k) / (k + 1);
  }
  return s;
}

// All functions m → n as vectors.
inline std::vector<std::vector<int>> functions(int m, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> f(m, 0);
  if (m > 0 && n == 0) return out;
  while (true) {
    out.push_back(f);
    int i = 0;
    while (i < m && ++f[i] == n) f[i++] = 0;
    if (i == m) break;
  }
  return out;
}

// Raw atom relabelling of a value, independent of any carrier.
inline Val relabel(const Val& v, const std::map<Atom, Atom>& m) {
  if (v.is_atom()) {
    auto it = m.find(v.v);
    return it == m.end() ? v : Val::atom(it->second);
  }
  Val r = v;
  for (auto& k : r.kids) k = relabel(k, m);
  return r;
}

// Number of classes of X ◇ Y supported by A_n: pairs (x, γ) with x over
// A_m (m = max support of X), γ: supp x → Y(n) with pairwise disjoint
// supports, identified along every permutation of A_m acting on x and
// precomposed into γ. Orbits are counted by exhaustive closure.
inline long tensor_class_count(const nomsub::NomSet& x, const nomsub::NomSet& y, int n, bool capture = false) {
  int m = x.max_support();
  std::vector<Atom> pool(m);
  std::iota(pool.begin(), pool.end(), 0);
  auto ys = y.stage(n);
  std::set<std::pair<Val, std::vector<Val>>> seen;
  long classes = 0;
  std::vector<std::vector<Atom>> perms;
  do perms.push_back(pool);
  while (std::next_permutation(pool.begin(), pool.end()));
  for (const auto& xv : x.stage(m)) {
    nomsub::AtomSet s = x.supp(xv);
    int k = static_cast<int>(s.size());
    for (const auto& f : functions(k, static_cast<int>(ys.size()))) {
      std::vector<Val> g;
      bool ok = true;
      nomsub::AtomSet used;
      for (int i = 0; i < k; ++i) {
        const Val& yv = ys[f[i]];
        nomsub::AtomSet sy = y.supp(yv);
        if (!capture && !used.disjoint(sy)) ok = false;
        used = used.unite(sy);
        g.push_back(yv);
      }
      if (!ok) continue;
      // γ as a map from atoms of supp x
      std::map<Atom, Val> gam;
      for (int i = 0; i < k; ++i) gam[s[i]] = g[i];
      auto key_of = [&](const std::vector<Atom>& p) {
        std::map<Atom, Atom> pm;
        for (int i = 0; i < m; ++i) pm[i] = p[i];
        Val px = x.normalize(relabel(xv, pm));
        // (π·x, γ∘π⁻¹), listed along sorted supp(π·x)
        std::map<Atom, Val> pg;
        for (auto& [a, v] : gam) pg[pm[a]] = v;
        std::vector<Val> gl;
        for (auto& [a, v] : pg) gl.push_back(v);
        return std::make_pair(px, gl);
      };
      auto key = key_of(perms[0]);
      if (seen.count(key)) continue;
      ++classes;
      for (const auto& p : perms) seen.insert(key_of(p));
    }
  }
  return classes;
}

// ---- named λ-terms with textbook capture-avoiding substitution ----

struct Named {
  enum Kind { Var, Lam, App } kind = Var;
  std::string name;  // variable or binder
  std::shared_ptr<Named> l, r;
};
using NP = std::shared_ptr<Named>;

inline NP nvar(std::string x) { return std::make_shared<Named>(Named{Named::Var, std::move(x), nullptr, nullptr}); }
inline NP nlam(std::string x, NP b) { return std::make_shared<Named>(Named{Named::Lam, std::move(x), b, nullptr}); }
inline NP napp(NP a, NP b) { return std::make_shared<Named>(Named{Named::App, "", a, b}); }

inline void free_names(const NP& t, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (t->kind) {
    case Named::Var:
      if (!bound.count(t->name)) out.insert(t->name);
      return;
    case Named::App:
      free_names(t->l, bound, out);
      free_names(t->r, bound, out);
      return;
    case Named::Lam: {
      bool had = bound.count(t->name);
      bound.insert(t->name);
      free_names(t->l, bound, out);
      if (!had) bound.erase(t->name);
      return;
    }
  }
}
inline std::set<std::string> fv(const NP& t) {
  std::set<std::string> b, o;
  free_names(t, b, o);
  return o;
}

inline std::string fresh_name(const std::set<std::string>& avoid) {
  for (int i = 0;; ++i) {
    std::string c = "v" + std::to_string(i);
    if (!avoid.count(c)) return c;
  }
}

// t[σ], simultaneous, renaming a binder whenever it would capture.
inline NP subst(const NP& t, const std::map<std::string, NP>& s) {
  switch (t->kind) {
    case Named::Var: {
      auto it = s.find(t->name);
      return it == s.end() ? t : it->second;
    }
    case Named::App: return napp(subst(t->l, s), subst(t->r, s));
    case Named::Lam: {
      std::map<std::string, NP> inner = s;
      inner.erase(t->name);
      std::set<std::string> danger;
      for (const auto& x : fv(t->l))
        if (x != t->name) {
          auto it = inner.find(x);
          if (it != inner.end())
            for (const auto& y : fv(it->second)) danger.insert(y);
        }
      if (!danger.count(t->name)) return nlam(t->name, subst(t->l, inner));
      std::set<std::string> avoid = danger;
      for (const auto& y : fv(t->l)) avoid.insert(y);
      for (const auto& [k, v] : inner) {
        avoid.insert(k);
        for (const auto& y : fv(v)) avoid.insert(y);
      }
      std::string z = fresh_name(avoid);
      inner[t->name] = nvar(z);
      return nlam(z, subst(t->l, inner));
    }
  }
  return t;
}

// α-equivalence by parallel binder environments.
inline bool alpha(const NP& a, const NP& b, std::vector<std::pair<std::string, std::string>>& env) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Named::Var:
      for (auto it = env.rbegin(); it != env.rend(); ++it) {
        if (it->first == a->name || it->second == b->name) return it->first == a->name && it->second == b->name;
      }
      return a->name == b->name;
    case Named::App: return alpha(a->l, b->l, env) && alpha(a->r, b->r, env);
    case Named::Lam: {
      env.emplace_back(a->name, b->name);
      bool r = alpha(a->l, b->l, env);
      env.pop_back();
      return r;
    }
  }
  return false;
}
inline bool alpha(const NP& a, const NP& b) {
  std::vector<std::pair<std::string, std::string>> env;
  return alpha(a, b, env);
}

// Locally nameless value → named term: free atom a_i ↦ "a<i>", binders "x<depth>".
inline NP from_ln(const Val& t, std::vector<std::string>& binders) {
  if (t.is_atom()) return nvar(nomsub::atom_name(t.v));
  if (t.is_nat()) return nvar(binders[binders.size() - 1 - t.v]);
  if (t.is(nomsub::Label::App)) return napp(from_ln(t.kids[0], binders), from_ln(t.kids[1], binders));
  std::string x = "x" + std::to_string(binders.size());
  binders.push_back(x);
  NP b = from_ln(t.kids[0], binders);
  binders.pop_back();
  return nlam(x, b);
}
inline NP from_ln(const Val& t) {
  std::vector<std::string> b;
  return from_ln(t, b);
}

}  // namespace oracle
