#pragma once

// Union-find with least-index canonical representatives, plus a naive
// fixpoint closure used to cross-check it.

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

namespace nomsub {

class UnionFind {
 public:
  explicit UnionFind(int n = 0) : p_(n) { std::iota(p_.begin(), p_.end(), 0); }
  int add() {
    p_.push_back(static_cast<int>(p_.size()));
    return static_cast<int>(p_.size()) - 1;
  }
  int find(int x) {
    while (p_[x] != x) {
      p_[x] = p_[p_[x]];
      x = p_[x];
    }
    return x;
  }
  // the smaller root wins, so every root is the least member of its class
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) p_[b] = a;
    else p_[a] = b;
  }
  int size() const { return static_cast<int>(p_.size()); }

 private:
  std::vector<int> p_;
};

// Result of quotienting {0..n-1}: cls[i] is a dense class id, classes are
// numbered in order of their least member, rep[c] is that least member.
struct Quotient {
  std::vector<int> cls;
  std::vector<int> rep;
  int count() const { return static_cast<int>(rep.size()); }
};

inline Quotient to_quotient(UnionFind& uf) {
  Quotient q;
  int n = uf.size();
  q.cls.assign(n, -1);
  std::vector<int> id_of_root(n, -1);
  for (int i = 0; i < n; ++i) {
    int r = uf.find(i);
    if (id_of_root[r] < 0) {
      id_of_root[r] = q.count();
      q.rep.push_back(i);
    }
    q.cls[i] = id_of_root[r];
  }
  return q;
}

inline Quotient quotient(int n, const std::vector<std::pair<int, int>>& gens) {
  UnionFind uf(n);
  for (auto [a, b] : gens) uf.unite(a, b);
  return to_quotient(uf);
}

// Brute-force closure: iterate min-label propagation over the generators
// until nothing changes. Quadratic but independent of union-find.
inline std::vector<int> closure_labels(int n, const std::vector<std::pair<int, int>>& gens) {
  std::vector<int> lab(n);
  std::iota(lab.begin(), lab.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, b] : gens) {
      int m = std::min(lab[a], lab[b]);
      if (lab[a] != m || lab[b] != m) {
        lab[a] = lab[b] = m;
        changed = true;
      }
    }
  }
  return lab;
}

}  // namespace nomsub
