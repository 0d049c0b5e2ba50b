#pragma once

// Atoms, finite atom sets, finite permutations and finite renamings.

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "nomsub/val.hpp"

namespace nomsub {

class AtomSet {
 public:
  AtomSet() = default;
  AtomSet(std::initializer_list<Atom> xs) : e_(xs) { normalize(); }
  explicit AtomSet(std::vector<Atom> xs) : e_(std::move(xs)) { normalize(); }

  static AtomSet stage(int n) {
    std::vector<Atom> v(n);
    std::iota(v.begin(), v.end(), 0);
    return AtomSet(std::move(v));
  }

  bool contains(Atom a) const { return std::binary_search(e_.begin(), e_.end(), a); }
  std::size_t size() const { return e_.size(); }
  bool empty() const { return e_.empty(); }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }
  Atom operator[](std::size_t i) const { return e_[i]; }
  const std::vector<Atom>& elems() const { return e_; }
  Atom max_or(Atom d) const { return e_.empty() ? d : e_.back(); }
  // position of a in sorted order, or -1
  int index_of(Atom a) const {
    auto it = std::lower_bound(e_.begin(), e_.end(), a);
    return (it != e_.end() && *it == a) ? static_cast<int>(it - e_.begin()) : -1;
  }

  bool subset_of(const AtomSet& o) const {
    return std::includes(o.e_.begin(), o.e_.end(), e_.begin(), e_.end());
  }
  AtomSet unite(const AtomSet& o) const {
    std::vector<Atom> r;
    std::set_union(e_.begin(), e_.end(), o.e_.begin(), o.e_.end(), std::back_inserter(r));
    return AtomSet(std::move(r));
  }
  AtomSet meet(const AtomSet& o) const {
    std::vector<Atom> r;
    std::set_intersection(e_.begin(), e_.end(), o.e_.begin(), o.e_.end(), std::back_inserter(r));
    return AtomSet(std::move(r));
  }
  AtomSet minus(const AtomSet& o) const {
    std::vector<Atom> r;
    std::set_difference(e_.begin(), e_.end(), o.e_.begin(), o.e_.end(), std::back_inserter(r));
    return AtomSet(std::move(r));
  }
  bool disjoint(const AtomSet& o) const { return meet(o).empty(); }

  Val to_val() const {
    std::vector<Val> ks;
    for (Atom a : e_) ks.push_back(Val::atom(a));
    return Val::node(Label::Set, std::move(ks));
  }
  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < e_.size(); ++i) s += (i ? "," : "") + atom_name(e_[i]);
    return s + "}";
  }

  friend bool operator==(const AtomSet&, const AtomSet&) = default;
  friend auto operator<=>(const AtomSet& a, const AtomSet& b) { return a.e_ <=> b.e_; }

 private:
  void normalize() {
    std::sort(e_.begin(), e_.end());
    e_.erase(std::unique(e_.begin(), e_.end()), e_.end());
  }
  std::vector<Atom> e_;
};

inline AtomSet atoms_of(const Val& x) {
  std::vector<Atom> v;
  for_each_atom(x, [&](Atom a) { v.push_back(a); });
  return AtomSet(std::move(v));
}

// Sparse graphs with the identity implicit; fixed points are never stored.
class Renaming {
 public:
  Renaming() = default;
  explicit Renaming(const std::map<Atom, Atom>& g) {
    for (auto [a, b] : g)
      if (a != b) g_[a] = b;
  }
  static Renaming identity() { return {}; }

  Atom operator()(Atom a) const {
    auto it = g_.find(a);
    return it == g_.end() ? a : it->second;
  }
  // this ∘ o
  Renaming compose(const Renaming& o) const {
    std::map<Atom, Atom> r;
    for (auto [a, b] : o.g_) r[a] = (*this)(b);
    for (auto [a, b] : g_)
      if (!o.g_.count(a)) r[a] = b;
    return Renaming(r);
  }
  AtomSet image(const AtomSet& s) const {
    std::vector<Atom> r;
    for (Atom a : s) r.push_back((*this)(a));
    return AtomSet(std::move(r));
  }
  AtomSet domain() const {
    std::vector<Atom> r;
    for (auto [a, b] : g_) r.push_back(a);
    return AtomSet(std::move(r));
  }
  const std::map<Atom, Atom>& graph() const { return g_; }
  bool is_identity() const { return g_.empty(); }
  bool injective_on(const AtomSet& s) const { return image(s).size() == s.size(); }

  std::string str() const {
    std::string s = "[";
    bool first = true;
    for (auto [a, b] : g_) {
      s += (first ? "" : ", ") + atom_name(a) + "↦" + atom_name(b);
      first = false;
    }
    return s + "]";
  }
  friend bool operator==(const Renaming&, const Renaming&) = default;
  friend auto operator<=>(const Renaming& a, const Renaming& b) { return a.g_ <=> b.g_; }

 protected:
  std::map<Atom, Atom> g_;
};

class Perm {
 public:
  Perm() = default;
  // Throws if g is not a bijection of its domain onto itself.
  explicit Perm(const std::map<Atom, Atom>& g) {
    std::vector<Atom> dom, img;
    for (auto [a, b] : g) {
      dom.push_back(a);
      img.push_back(b);
    }
    if (AtomSet(dom) != AtomSet(img) || AtomSet(img).size() != img.size())
      throw std::invalid_argument("Perm: graph is not a bijection on its domain");
    for (auto [a, b] : g)
      if (a != b) g_[a] = b;
  }
  static Perm identity() { return {}; }
  static Perm swap(Atom a, Atom b) {
    if (a == b) return {};
    return Perm({{a, b}, {b, a}});
  }

  Atom operator()(Atom a) const {
    auto it = g_.find(a);
    return it == g_.end() ? a : it->second;
  }
  Perm compose(const Perm& o) const {
    std::map<Atom, Atom> r;
    for (auto [a, b] : o.g_) r[a] = (*this)(b);
    for (auto [a, b] : g_)
      if (!o.g_.count(a)) r[a] = b;
    return Perm(r);
  }
  Perm inverse() const {
    std::map<Atom, Atom> r;
    for (auto [a, b] : g_) r[b] = a;
    return Perm(r);
  }
  Renaming as_renaming() const { return Renaming(g_); }
  AtomSet domain() const {
    std::vector<Atom> r;
    for (auto [a, b] : g_) r.push_back(a);
    return AtomSet(std::move(r));
  }
  AtomSet image(const AtomSet& s) const {
    std::vector<Atom> r;
    for (Atom a : s) r.push_back((*this)(a));
    return AtomSet(std::move(r));
  }
  bool fixes_all(const AtomSet& s) const {
    return std::all_of(s.begin(), s.end(), [&](Atom a) { return (*this)(a) == a; });
  }
  const std::map<Atom, Atom>& graph() const { return g_; }
  bool is_identity() const { return g_.empty(); }

  // cycle notation, e.g. (a0 a1 a2)(a3 a4)
  std::string str() const {
    if (g_.empty()) return "id";
    std::string s;
    std::map<Atom, bool> seen;
    for (auto [a, b] : g_) {
      if (seen[a]) continue;
      s += "(";
      Atom c = a;
      bool first = true;
      do {
        seen[c] = true;
        s += (first ? "" : " ") + atom_name(c);
        first = false;
        c = (*this)(c);
      } while (c != a);
      s += ")";
    }
    return s;
  }
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.g_ <=> b.g_; }

 private:
  std::map<Atom, Atom> g_;
};

// The k least atoms not in avoid.
inline std::vector<Atom> fresh(const AtomSet& avoid, int k) {
  std::vector<Atom> r;
  for (Atom a = 0; static_cast<int>(r.size()) < k; ++a)
    if (!avoid.contains(a)) r.push_back(a);
  return r;
}

inline Atom fresh_one(const AtomSet& avoid) { return fresh(avoid, 1)[0]; }

// A permutation agreeing with the injective partial map j on its domain.
// Points of img∖dom are sent to dom∖img in increasing order.
inline Perm extend_bijection(const std::map<Atom, Atom>& j) {
  std::vector<Atom> dom, img;
  for (auto [a, b] : j) {
    dom.push_back(a);
    img.push_back(b);
  }
  AtomSet D(dom), I(img);
  if (I.size() != img.size()) throw std::invalid_argument("extend_bijection: map is not injective");
  std::map<Atom, Atom> g = j;
  AtomSet tail = I.minus(D), head = D.minus(I);
  for (std::size_t i = 0; i < tail.size(); ++i) g[tail[i]] = head[i];
  return Perm(g);
}

inline Val act(const Perm& p, const Val& x) {
  return map_atoms(x, [&](Atom a) { return p(a); });
}
inline Val act(const Renaming& r, const Val& x) {
  return map_atoms(x, [&](Atom a) { return r(a); });
}

// All permutations of s (as Perms fixing everything outside s), in
// lexicographic order of the image sequence.
inline std::vector<Perm> all_perms(const AtomSet& s) {
  std::vector<Atom> img(s.begin(), s.end());
  std::vector<Perm> out;
  do {
    std::map<Atom, Atom> g;
    for (std::size_t i = 0; i < s.size(); ++i) g[s[i]] = img[i];
    out.emplace_back(g);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// All maps from s into t, as renamings (identity off s).
inline std::vector<Renaming> all_renamings(const AtomSet& s, const AtomSet& t) {
  std::vector<Renaming> out;
  if (t.empty()) {
    if (s.empty()) out.emplace_back();
    return out;
  }
  std::vector<std::size_t> idx(s.size(), 0);
  while (true) {
    std::map<Atom, Atom> g;
    for (std::size_t i = 0; i < s.size(); ++i) g[s[i]] = t[idx[i]];
    out.emplace_back(g);
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == t.size()) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  return out;
}

inline std::vector<Renaming> all_renamings(const AtomSet& s) { return all_renamings(s, s); }

// Bijections s → t as partial maps, lexicographic in the image sequence.
inline std::vector<std::map<Atom, Atom>> all_bijections(const AtomSet& s, const AtomSet& t) {
  std::vector<std::map<Atom, Atom>> out;
  if (s.size() != t.size()) return out;
  std::vector<Atom> img(t.begin(), t.end());
  do {
    std::map<Atom, Atom> g;
    for (std::size_t i = 0; i < s.size(); ++i) g[s[i]] = img[i];
    out.push_back(std::move(g));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace nomsub
