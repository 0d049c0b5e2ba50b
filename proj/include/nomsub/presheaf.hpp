#pragma once

// Truncated covariant presheaves over a category of contexts, tabulated on
// stages 0..bound, together with natural transformations.

#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "nomsub/finset_cat.hpp"
#include "nomsub/quotient.hpp"
#include "nomsub/val.hpp"

namespace nomsub {

// ---- cached hom-sets with rank lookup ----

struct HomSet {
  std::vector<Mor> mors;
  std::vector<int> pos;  // rank of table -> index in mors, or -1
};

inline long rank_of(const Mor& f) {
  long r = 0;
  for (int x : f.t) r = r * f.cod + x;
  return r;
}

inline const HomSet& homset(CatTag c, int m, int n) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::unique_ptr<HomSet>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(static_cast<int>(c), m, n);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  auto hs = std::make_unique<HomSet>();
  long total = 1;
  for (int i = 0; i < m; ++i) total *= n;
  if (n == 0) total = (m == 0) ? 1 : 0;
  if (total > (1L << 24)) throw std::length_error("homset: too many maps");
  hs->pos.assign(total, -1);
  for (auto& f : all_maps(m, n))
    if (member(c, f)) {
      hs->pos[rank_of(f)] = static_cast<int>(hs->mors.size());
      hs->mors.push_back(std::move(f));
    }
  return *cache.emplace(key, std::move(hs)).first->second;
}

inline int hom_index(CatTag c, const Mor& f) {
  const HomSet& hs = homset(c, f.dom, f.cod);
  if (hs.pos.empty()) return -1;
  return hs.pos[rank_of(f)];
}

// ---- presheaves ----

struct TruncPresheaf {
  std::string name;
  CatTag cat = CatTag::F;
  int bound = 0;
  std::vector<std::vector<Val>> elems;
  // act[m][n][k][i]: the k-th morphism of hom(cat, m, n) applied to element i
  std::vector<std::vector<std::vector<std::vector<int>>>> act;
  std::vector<std::unordered_map<Val, int, ValHash>> index;
  bool unstable = false;
  std::string diagnostic;

  int size(int n) const { return static_cast<int>(elems[n].size()); }
  int find(int n, const Val& v) const {
    auto it = index[n].find(v);
    return it == index[n].end() ? -1 : it->second;
  }
  int apply(const Mor& f, int i) const {
    int k = hom_index(cat, f);
    if (k < 0) throw std::invalid_argument("apply: morphism outside the category");
    return act[f.dom][f.cod][k][i];
  }
  const Val& at(int n, int i) const { return elems[n][i]; }
  long total() const {
    long t = 0;
    for (const auto& e : elems) t += static_cast<long>(e.size());
    return t;
  }
};

inline void build_index(TruncPresheaf& p) {
  p.index.assign(p.bound + 1, {});
  for (int n = 0; n <= p.bound; ++n)
    for (int i = 0; i < p.size(n); ++i) p.index[n].emplace(p.elems[n][i], i);
}

// Tabulates a presheaf from an element enumerator and an action rule.
// Throws if the action leaves the enumerated sets.
template <class Elems, class Act>
TruncPresheaf tabulate(std::string name, CatTag cat, int bound, Elems elems, Act act) {
  TruncPresheaf p;
  p.name = std::move(name);
  p.cat = cat;
  p.bound = bound;
  p.elems.resize(bound + 1);
  for (int n = 0; n <= bound; ++n) p.elems[n] = elems(n);
  build_index(p);
  p.act.assign(bound + 1, std::vector<std::vector<std::vector<int>>>(bound + 1));
  for (int m = 0; m <= bound; ++m)
    for (int n = 0; n <= bound; ++n) {
      const auto& hs = homset(cat, m, n);
      for (const auto& f : hs.mors) {
        std::vector<int> tab(p.size(m));
        for (int i = 0; i < p.size(m); ++i) {
          int j = p.find(n, act(f, p.elems[m][i]));
          if (j < 0)
            throw std::logic_error("tabulate(" + p.name + "): action of " + f.str() + " on " +
                                   show(p.elems[m][i]) + " leaves the stage");
          tab[i] = j;
        }
        p.act[m][n].push_back(std::move(tab));
      }
    }
  return p;
}

struct LawResult {
  bool ok = true;
  std::string witness;
  void fail(const std::string& w) {
    if (ok) witness = w;
    ok = false;
  }
};

inline LawResult check_functorial(const TruncPresheaf& p) {
  LawResult r;
  for (int n = 0; n <= p.bound; ++n)
    for (int i = 0; i < p.size(n); ++i)
      if (p.apply(Mor::id(n), i) != i) r.fail(p.name + ": identity moves " + show(p.at(n, i)));
  for (int a = 0; a <= p.bound; ++a)
    for (int b = 0; b <= p.bound; ++b)
      for (int c = 0; c <= p.bound; ++c)
        for (const auto& f : homset(p.cat, a, b).mors)
          for (const auto& g : homset(p.cat, b, c).mors) {
            Mor gf = compose(g, f);
            for (int i = 0; i < p.size(a); ++i)
              if (p.apply(gf, i) != p.apply(g, p.apply(f, i)))
                r.fail(p.name + ": composite " + g.str() + "∘" + f.str() + " on " + show(p.at(a, i)));
          }
  return r;
}

// ---- corpus presheaves ----

// y A = Ctx(A, -)
inline TruncPresheaf representable(CatTag cat, int a, int bound) {
  return tabulate(
      "y" + std::to_string(a), cat, bound,
      [&](int n) {
        std::vector<Val> v;
        for (const auto& f : homset(cat, a, n).mors) v.push_back(f.to_val());
        return v;
      },
      [](const Mor& f, const Val& g) {
        Mor gm{g[0].v, g[1].v, {}};
        for (const auto& k : g[2].kids) gm.t.push_back(k.v);
        return compose(f, gm).to_val();
      });
}

inline Mor mor_of_val(const Val& g) {
  Mor m{g[0].v, g[1].v, {}};
  for (const auto& k : g[2].kids) m.t.push_back(k.v);
  return m;
}

// Subgroup of the symmetric group on k generated by the given bijections.
inline std::vector<Mor> generate_group(int k, const std::vector<Mor>& gens) {
  std::vector<Mor> g{Mor::id(k)};
  for (std::size_t i = 0; i < g.size(); ++i)
    for (const auto& s : gens) {
      Mor h = compose(s, g[i]);
      if (std::find(g.begin(), g.end(), h) == g.end()) g.push_back(h);
    }
  std::sort(g.begin(), g.end());
  return g;
}

// The orbit presheaf y k / G: morphisms k → n up to precomposition with G.
inline TruncPresheaf orbit_presheaf(CatTag cat, int k, const std::vector<Mor>& group, int bound,
                                    std::string name = "") {
  auto canon = [group](const Mor& f) {
    Mor best = f;
    for (const auto& g : group) best = std::min(best, compose(f, g));
    return best;
  };
  if (name.empty()) name = "y" + std::to_string(k) + "/G" + std::to_string(group.size());
  return tabulate(
      name, cat, bound,
      [&](int n) {
        std::vector<Val> v;
        for (const auto& f : homset(cat, k, n).mors)
          if (canon(f) == f) v.push_back(f.to_val());
        return v;
      },
      [canon](const Mor& f, const Val& g) { return canon(compose(f, mor_of_val(g))).to_val(); });
}

// Terminal presheaf.
inline TruncPresheaf terminal_presheaf(CatTag cat, int bound) {
  return tabulate(
      "1", cat, bound, [](int) { return std::vector<Val>{Val::nat(0)}; },
      [](const Mor&, const Val& v) { return v; });
}

inline TruncPresheaf coproduct(const TruncPresheaf& x, const TruncPresheaf& y) {
  auto tag = [](int t, const Val& v) { return Val::node(Label::Inj, {Val::nat(t), v}); };
  return tabulate(
      x.name + "+" + y.name, x.cat, x.bound,
      [&](int n) {
        std::vector<Val> v;
        for (const auto& e : x.elems[n]) v.push_back(tag(0, e));
        for (const auto& e : y.elems[n]) v.push_back(tag(1, e));
        return v;
      },
      [&](const Mor& f, const Val& e) {
        const TruncPresheaf& src = e[0].v == 0 ? x : y;
        return tag(e[0].v, src.at(f.cod, src.apply(f, src.find(f.dom, e[1]))));
      });
}

// Pointwise product X(n) × Y(n).
inline TruncPresheaf pointwise_product(const TruncPresheaf& x, const TruncPresheaf& y) {
  return tabulate(
      x.name + "×" + y.name, x.cat, x.bound,
      [&](int n) {
        std::vector<Val> v;
        for (const auto& a : x.elems[n])
          for (const auto& b : y.elems[n]) v.push_back(Val::tuple({a, b}));
        return v;
      },
      [&](const Mor& f, const Val& e) {
        return Val::tuple({x.at(f.cod, x.apply(f, x.find(f.dom, e[0]))),
                           y.at(f.cod, y.apply(f, y.find(f.dom, e[1])))});
      });
}

// ---- natural transformations ----

struct NatTrans {
  std::vector<std::vector<int>> comp;  // comp[n][i] = index in target stage n
};

inline LawResult check_natural(const TruncPresheaf& x, const TruncPresheaf& y, const NatTrans& a) {
  LawResult r;
  for (int m = 0; m <= x.bound; ++m)
    for (int n = 0; n <= x.bound; ++n)
      for (const auto& f : homset(x.cat, m, n).mors)
        for (int i = 0; i < x.size(m); ++i)
          if (a.comp[n][x.apply(f, i)] != y.apply(f, a.comp[m][i]))
            r.fail("naturality fails at " + f.str() + " on " + show(x.at(m, i)));
  return r;
}

// All natural transformations x ⇒ y, by backtracking over elements in stage
// order; each choice is propagated along every morphism out of its stage.
inline std::vector<NatTrans> nat_enumerate(const TruncPresheaf& x, const TruncPresheaf& y,
                                           std::size_t limit = 1u << 20) {
  int N = x.bound;
  std::vector<std::pair<int, int>> order;
  for (int n = 0; n <= N; ++n)
    for (int i = 0; i < x.size(n); ++i) order.emplace_back(n, i);
  std::vector<NatTrans> out;
  NatTrans cur;
  cur.comp.resize(N + 1);
  for (int n = 0; n <= N; ++n) cur.comp[n].assign(x.size(n), -1);

  // assigns and propagates; returns false on conflict, logging changes for undo
  auto assign = [&](int n, int i, int v, std::vector<std::pair<int, int>>& log) {
    std::vector<std::tuple<int, int, int>> todo{{n, i, v}};
    while (!todo.empty()) {
      auto [m, e, val] = todo.back();
      todo.pop_back();
      if (cur.comp[m][e] >= 0) {
        if (cur.comp[m][e] != val) return false;
        continue;
      }
      cur.comp[m][e] = val;
      log.emplace_back(m, e);
      for (int k = 0; k <= N; ++k)
        for (const auto& f : homset(x.cat, m, k).mors)
          todo.emplace_back(k, x.apply(f, e), y.apply(f, val));
    }
    return true;
  };

  std::function<void(std::size_t)> go = [&](std::size_t pos) {
    if (out.size() >= limit) return;
    while (pos < order.size() && cur.comp[order[pos].first][order[pos].second] >= 0) ++pos;
    if (pos == order.size()) {
      out.push_back(cur);
      return;
    }
    auto [n, i] = order[pos];
    for (int v = 0; v < y.size(n); ++v) {
      std::vector<std::pair<int, int>> log;
      if (assign(n, i, v, log)) go(pos + 1);
      for (auto [m, e] : log) cur.comp[m][e] = -1;
    }
  };
  go(0);
  return out;
}

// Checks that a stage-wise map given by fn(n, i) -> index is a natural bijection.
template <class Fn>
LawResult check_natural_iso(const TruncPresheaf& x, const TruncPresheaf& y, Fn fn, int upto = -1) {
  LawResult r;
  if (upto < 0) upto = x.bound;
  NatTrans a;
  a.comp.resize(upto + 1);
  for (int n = 0; n <= upto; ++n) {
    std::vector<int> hit(y.size(n), 0);
    for (int i = 0; i < x.size(n); ++i) {
      int j = fn(n, i);
      a.comp[n].push_back(j);
      if (j < 0) {
        r.fail(x.name + " → " + y.name + ": no image for " + show(x.at(n, i)));
        continue;
      }
      if (hit[j]++) r.fail(x.name + " → " + y.name + ": not injective at stage " + std::to_string(n));
    }
    if (x.size(n) != y.size(n))
      r.fail(x.name + " → " + y.name + ": stage " + std::to_string(n) + " sizes " +
             std::to_string(x.size(n)) + " vs " + std::to_string(y.size(n)));
  }
  if (!r.ok) return r;
  for (int m = 0; m <= upto; ++m)
    for (int n = 0; n <= upto; ++n)
      for (const auto& f : homset(x.cat, m, n).mors)
        for (int i = 0; i < x.size(m); ++i)
          if (a.comp[n][x.apply(f, i)] != y.apply(f, a.comp[m][i]))
            r.fail("not natural at " + f.str() + " on " + show(x.at(m, i)));
  return r;
}

}  // namespace nomsub
