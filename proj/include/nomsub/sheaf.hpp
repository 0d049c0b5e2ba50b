#pragma once

// Structure checks on truncated presheaves (pullback, intersection and
// preimage preservation; sheaf and separation conditions for the singleton
// inclusion coverage), presheaves on the subset poset with the intersection
// coverage, and random presheaf generators.

#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "nomsub/freegroup.hpp"
#include "nomsub/presheaf.hpp"

namespace nomsub {

// F sends the canonical pullback of (f, g) to a pullback of sets. Squares
// whose legs leave the category or whose apex exceeds the bound are skipped.
inline LawResult preserves_pullback_of(const TruncPresheaf& p, const Mor& f, const Mor& g) {
  LawResult r;
  Pullback pb = pullback(f, g);
  int n = pb.r.dom;
  if (n > p.bound || !member(p.cat, pb.fst) || !member(p.cat, pb.r)) return r;
  std::set<std::pair<int, int>> matching;
  for (int u = 0; u < p.size(f.dom); ++u)
    for (int v = 0; v < p.size(g.dom); ++v)
      if (p.apply(f, u) == p.apply(g, v)) matching.emplace(u, v);
  std::set<std::pair<int, int>> hit;
  for (int w = 0; w < p.size(n); ++w) {
    auto uv = std::make_pair(p.apply(pb.fst, w), p.apply(pb.r, w));
    if (!hit.insert(uv).second) {
      r.fail(p.name + ": two elements over " + f.str() + ", " + g.str() + " agree on both legs");
      return r;
    }
  }
  for (const auto& uv : matching)
    if (!hit.count(uv)) {
      r.fail(p.name + ": pair (" + show(p.at(f.dom, uv.first)) + ", " + show(p.at(g.dom, uv.second)) +
             ") over " + f.str() + ", " + g.str() + " has no preimage");
      return r;
    }
  return r;
}

enum class SquareKind { Intersections, Preimages };

// Squares with legs of size ≤ legs (default: all) and apex ≤ bound.
inline LawResult preserves(const TruncPresheaf& p, SquareKind kind, int legs = -1) {
  LawResult r;
  if (legs < 0) legs = p.bound;
  for (int c = 0; c <= p.bound; ++c)
    for (int a = 0; a <= legs; ++a)
      for (int b = 0; b <= legs; ++b)
        for (const auto& f : homset(p.cat, a, c).mors) {
          if (kind == SquareKind::Intersections && !f.injective()) continue;
          for (const auto& g : homset(p.cat, b, c).mors) {
            if (!g.injective()) continue;
            LawResult s = preserves_pullback_of(p, f, g);
            if (!s.ok) return s;
          }
        }
  return r;
}

struct SheafVerdict {
  bool separated = true;
  bool sheaf = true;
  std::string witness;
};

// Sheaf condition for the singleton inclusion coverage: every y ∈ F B with
// g·y = k·y whenever g, k agree on A has exactly one x ∈ F A over it.
// Covers A ⊆ B are taken with B ≤ upto; the matching test ranges over all
// codomains ≤ bound, which is exact when bound ≥ 2B − A.
inline SheafVerdict ictx_sheaf(const TruncPresheaf& p, int upto = -1) {
  SheafVerdict v;
  if (upto < 0) upto = p.bound;
  for (int a = 0; a <= upto; ++a)
    for (int b = a; b <= upto; ++b) {
      Mor i = Mor::incl(a, b);
      if (!member(p.cat, i)) continue;
      std::vector<char> matching(p.size(b), 1);
      for (int e = 0; e <= p.bound; ++e) {
        const auto& hs = homset(p.cat, b, e).mors;
        for (std::size_t gi = 0; gi < hs.size(); ++gi)
          for (std::size_t ki = gi + 1; ki < hs.size(); ++ki) {
            if (compose(hs[gi], i) != compose(hs[ki], i)) continue;
            for (int y = 0; y < p.size(b); ++y)
              if (p.apply(hs[gi], y) != p.apply(hs[ki], y)) matching[y] = 0;
          }
      }
      std::vector<int> amalg(p.size(b), 0);
      for (int x = 0; x < p.size(a); ++x) ++amalg[p.apply(i, x)];
      for (int y = 0; y < p.size(b); ++y) {
        if (!matching[y]) continue;
        std::string where = " for " + show(p.at(b, y)) + " over " + i.str();
        if (amalg[y] > 1) {
          v.separated = v.sheaf = false;
          if (v.witness.empty()) v.witness = "several amalgamations" + where;
        } else if (amalg[y] == 0) {
          v.sheaf = false;
          if (v.witness.empty()) v.witness = "no amalgamation" + where;
        }
      }
    }
  return v;
}

// ---- presheaves on the poset of subsets of a finite universe ----

struct SubsetPresheaf {
  std::string name;
  int universe = 3;
  std::vector<std::vector<Val>> elems;                    // per bitmask
  std::map<std::pair<unsigned, unsigned>, std::vector<int>> act;  // (A, B) with A ⊆ B

  unsigned full() const { return (1u << universe) - 1; }
  int size(unsigned a) const { return static_cast<int>(elems[a].size()); }
  int apply(unsigned a, unsigned b, int i) const { return act.at({a, b})[i]; }
};

inline LawResult check_functorial(const SubsetPresheaf& p) {
  LawResult r;
  unsigned u = p.full();
  for (unsigned a = 0; a <= u; ++a)
    for (unsigned b = 0; b <= u; ++b)
      for (unsigned c = 0; c <= u; ++c) {
        if ((a & b) != a || (b & c) != b) continue;
        for (int i = 0; i < p.size(a); ++i) {
          if (p.apply(a, a, i) != i) r.fail(p.name + ": identity moves an element");
          if (p.apply(a, c, i) != p.apply(b, c, p.apply(a, b, i))) r.fail(p.name + ": composite fails");
        }
      }
  return r;
}

inline std::string mask_str(unsigned m) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i)
    if (m & (1u << i)) {
      s += (first ? "" : ",") + atom_name(i);
      first = false;
    }
  return s + "}";
}

// The square A∩B ⊆ A, B ⊆ C is sent to a pullback for all A, B ⊆ C.
inline LawResult preserves_intersections(const SubsetPresheaf& p) {
  LawResult r;
  unsigned u = p.full();
  for (unsigned c = 0; c <= u; ++c)
    for (unsigned a = 0; a <= u; ++a)
      for (unsigned b = 0; b <= u; ++b) {
        if ((a & c) != a || (b & c) != b) continue;
        unsigned m = a & b;
        std::set<std::pair<int, int>> hit;
        for (int w = 0; w < p.size(m); ++w)
          if (!hit.emplace(p.apply(m, a, w), p.apply(m, b, w)).second) {
            r.fail(p.name + ": F(" + mask_str(m) + ") not jointly injective into " + mask_str(a) + ", " + mask_str(b));
            return r;
          }
        for (int x = 0; x < p.size(a); ++x)
          for (int y = 0; y < p.size(b); ++y)
            if (p.apply(a, c, x) == p.apply(b, c, y) && !hit.count({x, y})) {
              r.fail(p.name + ": matching pair over " + mask_str(a) + ", " + mask_str(b) + " ⊆ " + mask_str(c) +
                     " has no preimage in " + mask_str(m));
              return r;
            }
      }
  return r;
}

// Every F(A ⊆ B) injective.
inline LawResult iSub_separated(const SubsetPresheaf& p) {
  LawResult r;
  unsigned u = p.full();
  for (unsigned a = 0; a <= u; ++a)
    for (unsigned b = 0; b <= u; ++b) {
      if ((a & b) != a) continue;
      std::set<int> img;
      for (int x = 0; x < p.size(a); ++x)
        if (!img.insert(p.apply(a, b, x)).second) {
          r.fail(p.name + ": F(" + mask_str(a) + " ⊆ " + mask_str(b) + ") not injective");
          return r;
        }
    }
  return r;
}

// Sheaf condition for covers (A ⊆ B_i) with ⋂ B_i = A.
inline LawResult o_sheaf(const SubsetPresheaf& p) {
  LawResult r;
  unsigned u = p.full();
  for (unsigned a = 0; a <= u; ++a)
    for (const auto& cover : covers_o(a, p.universe)) {
      std::size_t k = cover.size();
      std::vector<int> fam(k);
      std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (!r.ok) return;
        if (i == k) {
          int n = 0;
          for (int x = 0; x < p.size(a); ++x) {
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j) ok = p.apply(a, cover[j], x) == fam[j];
            n += ok;
          }
          if (n != 1) {
            std::string s;
            for (unsigned b : cover) s += mask_str(b);
            r.fail(p.name + ": matching family on cover " + s + " of " + mask_str(a) + " has " + std::to_string(n) +
                   " amalgamations");
          }
          return;
        }
        for (int y = 0; y < p.size(cover[i]); ++y) {
          bool ok = true;
          for (std::size_t j = 0; j < i && ok; ++j) {
            unsigned un = cover[i] | cover[j];
            ok = p.apply(cover[i], un, y) == p.apply(cover[j], un, fam[j]);
          }
          if (!ok) continue;
          fam[i] = y;
          go(i + 1);
        }
      };
      go(0);
      if (!r.ok) return r;
    }
  return r;
}

// Random presheaf on subsets: germs appear once the stage contains one of
// their birth sets, and pairs of germs merge once the stage contains a set M.
inline SubsetPresheaf random_subset_presheaf(std::mt19937& rng, int universe, const std::string& name) {
  SubsetPresheaf p;
  p.name = name;
  p.universe = universe;
  unsigned u = p.full();
  auto pick = [&](int n) { return static_cast<int>(std::uniform_int_distribution<int>(0, n - 1)(rng)); };
  int germs = 1 + pick(3);
  std::vector<std::vector<unsigned>> births(germs);
  for (auto& b : births) {
    int nb = 1 + pick(2);
    for (int i = 0; i < nb; ++i) b.push_back(static_cast<unsigned>(pick(static_cast<int>(u) + 1)));
  }
  struct Merge {
    int g1, g2;
    unsigned m;
  };
  std::vector<Merge> merges;
  int nm = pick(3);
  for (int i = 0; i < nm && germs > 1; ++i) {
    int g1 = pick(germs), g2 = pick(germs);
    if (g1 != g2) merges.push_back({g1, g2, static_cast<unsigned>(pick(static_cast<int>(u) + 1))});
  }
  auto present = [&](int g, unsigned a) {
    for (unsigned b : births[g])
      if ((b & a) == b) return true;
    return false;
  };
  // least present germ in the class of g at stage a
  auto rep = [&](int g, unsigned a) {
    UnionFind uf(germs);
    for (const auto& mg : merges)
      if ((mg.m & a) == mg.m && present(mg.g1, a) && present(mg.g2, a)) uf.unite(mg.g1, mg.g2);
    return uf.find(g);
  };
  p.elems.resize(u + 1);
  for (unsigned a = 0; a <= u; ++a)
    for (int g = 0; g < germs; ++g)
      if (present(g, a) && rep(g, a) == g) p.elems[a].push_back(Val::nat(g));
  for (unsigned a = 0; a <= u; ++a)
    for (unsigned b = 0; b <= u; ++b) {
      if ((a & b) != a) continue;
      std::vector<int> tab;
      for (const auto& e : p.elems[a]) {
        int g = rep(e.v, b);
        int idx = -1;
        for (int j = 0; j < p.size(b); ++j)
          if (p.elems[b][j].v == g) idx = j;
        tab.push_back(idx);
      }
      p.act[{a, b}] = std::move(tab);
    }
  return p;
}

// ---- random presheaves over 𝕀 ----

inline std::vector<Mor> random_subgroup(std::mt19937& rng, int k) {
  std::vector<Mor> gens;
  int ng = std::uniform_int_distribution<int>(0, 2)(rng);
  for (int i = 0; i < ng && k > 1; ++i) {
    Mor s = Mor::id(k);
    std::shuffle(s.t.begin(), s.t.end(), rng);
    gens.push_back(s);
  }
  return generate_group(k, gens);
}

// One summand: an orbit presheaf y k / G, possibly restricted to a region of
// stages, collapsed to a point on that region, or the point on that region.
// The region is n ≥ m where maps grow stages (𝕀, 𝔹) and n ≤ m over 𝕊; over
// 𝔽 only orbit presheaves and the point are generated. Orbit sizes k and
// thresholds m range up to `shape`, tabulation up to bound.
inline TruncPresheaf random_component(std::mt19937& rng, CatTag cat, int bound, int shape) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  int kind = pick(0, 3);
  int k = pick(0, std::min(shape, 2));
  int m = pick(1, shape);
  auto group = random_subgroup(rng, k);
  TruncPresheaf base = orbit_presheaf(cat, k, group, bound);
  std::string tag = base.name;
  bool down = cat == CatTag::S;
  if (cat == CatTag::F) {
    if (kind == 0 || kind == 2) return base;
    m = 0;
    kind = 1;
  }
  auto in = [m, down](int n) { return down ? n <= m : n >= m; };
  std::string rel = down ? "≤" : "≥";
  switch (kind) {
    case 0: return base;
    case 1:
      return tabulate(
          "const" + rel + std::to_string(m), cat, bound,
          [in](int n) { return in(n) ? std::vector<Val>{Val::nat(0)} : std::vector<Val>{}; },
          [](const Mor&, const Val& v) { return v; });
    case 2:
      return tabulate(
          tag + rel + std::to_string(m), cat, bound,
          [&](int n) { return in(n) ? base.elems[n] : std::vector<Val>{}; },
          [&](const Mor& f, const Val& v) { return base.at(f.cod, base.apply(f, base.find(f.dom, v))); });
    default:
      return tabulate(
          tag + "|" + std::to_string(m), cat, bound,
          [&](int n) { return in(n) ? std::vector<Val>{Val::nat(-1)} : base.elems[n]; },
          [&](const Mor& f, const Val& v) {
            if (in(f.cod)) return Val::nat(-1);
            return base.at(f.cod, base.apply(f, base.find(f.dom, v)));
          });
  }
}

inline TruncPresheaf random_presheaf(std::mt19937& rng, CatTag cat, int bound, int shape) {
  TruncPresheaf p = random_component(rng, cat, bound, shape);
  if (std::uniform_int_distribution<int>(0, 1)(rng)) p = coproduct(p, random_component(rng, cat, bound, shape));
  return p;
}

// Reduced words of length ≤ len over the stage, a presheaf over 𝔽.
inline TruncPresheaf free_group_presheaf(int bound, int len) {
  return tabulate(
      "G@" + std::to_string(len), CatTag::F, bound,
      [len](int n) {
        std::vector<Atom> at;
        for (int i = 0; i < n; ++i) at.push_back(i);
        return reduced_words(at, len);
      },
      [](const Mor& f, const Val& w) { return rename_word(w, [&](Atom a) { return f(a); }); });
}

}  // namespace nomsub
