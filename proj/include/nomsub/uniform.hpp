#pragma once

// The uniform tensor in matrix form: x[y] with supp x = {a_1..a_k},
// supp y = {b_1..b_m} and a k×m matrix of pairwise fresh names j_{a_i}(b_j),
// modulo the internal symmetries of x (rows) and y (columns) acting together.
// This is the nominal presentation of I*(I_*X ⊗ I_*Y). It is symmetric by
// transposition and maps onto the single-orbit ◇-classes; that map need not
// be injective when y has internal symmetries.
//
// Elements are Tuple(x, y, rows) with x, y canonical orbit representatives.

#include "nomsub/subst_nom.hpp"

namespace nomsub {

class UniformMatrixSet : public NomSet {
 public:
  UniformMatrixSet(NomPtr x, NomPtr y) : x_(std::move(x)), y_(std::move(y)) {}
  const NomPtr& left() const { return x_; }
  const NomPtr& right() const { return y_; }

  std::string name() const override { return "(" + x_->name() + "⊗ᴰ" + y_->name() + ")"; }
  bool renamable() const override { return false; }
  int max_support() const override {
    int a = x_->max_support(), b = y_->max_support();
    return a < 0 || b < 0 ? -1 : a * b;
  }

  static const Val& x_part(const Val& e) { return e[0]; }
  static const Val& y_part(const Val& e) { return e[1]; }
  static const Val& rows(const Val& e) { return e[2]; }

  // canonical element for canonical x, y and a raw matrix
  Val make(const Val& x, const Val& y, const std::vector<std::vector<Atom>>& m) const {
    const auto& sx = stab(*x_, x, xstab_);
    const auto& sy = stab(*y_, y, ystab_);
    Val best;
    bool first = true;
    for (const auto& p : sx)
      for (const auto& q : sy) {
        std::vector<Val> rs(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) {
          std::vector<Val> r(m[i].size());
          for (std::size_t j = 0; j < m[i].size(); ++j) r[q(static_cast<Atom>(j))] = Val::atom(m[i][j]);
          rs[p(static_cast<Atom>(i))] = Val::tuple(std::move(r));
        }
        Val cand = Val::tuple(std::move(rs));
        if (first || cand < best) best = std::move(cand), first = false;
      }
    return Val::tuple({x, y, best});
  }
  static std::vector<std::vector<Atom>> matrix(const Val& e) {
    std::vector<std::vector<Atom>> m;
    for (const auto& r : rows(e).kids) {
      m.emplace_back();
      for (const auto& a : r.kids) m.back().push_back(a.v);
    }
    return m;
  }

  Val act(const Perm& p, const Val& e) const override {
    auto m = matrix(e);
    for (auto& r : m)
      for (auto& a : r) a = p(a);
    return make(x_part(e), y_part(e), m);
  }
  AtomSet over_support(const Val& e) const override { return atoms_of(rows(e)); }

  std::vector<Val> stage(int n) const override {
    if (auto it = cache_.find(n); it != cache_.end()) return it->second;
    std::set<Val> out;
    int kc = x_->max_support() >= 0 ? x_->max_support() : n;
    int mc = y_->max_support() >= 0 ? y_->max_support() : n;
    for (int k = 0; k <= kc; ++k)
      for (int m = 0; m <= mc; ++m) {
        if (k * m > n) continue;
        auto xs = exact_reps(*x_, k);
        auto ys = exact_reps(*y_, m);
        std::vector<std::vector<Atom>> mat(k, std::vector<Atom>(m));
        std::vector<char> used(n, 0);
        for (const auto& x : xs)
          for (const auto& y : ys) {
            std::function<void(int)> go = [&](int cell) {
              if (cell == k * m) {
                out.insert(make(x, y, mat));
                return;
              }
              for (int a = 0; a < n; ++a) {
                if (used[a]) continue;
                used[a] = 1;
                mat[cell / m][cell % m] = a;
                go(cell + 1);
                used[a] = 0;
              }
            };
            go(0);
          }
      }
    std::vector<Val> v(out.begin(), out.end());
    cache_[n] = v;
    return v;
  }

  std::string show(const Val& e) const override {
    std::string s = x_->show(x_part(e)) + "[" + y_->show(y_part(e)) + "; ";
    for (std::size_t i = 0; i < rows(e).size(); ++i) s += (i ? " | " : "") + nomsub::show(rows(e)[i]);
    return s + "]";
  }

 private:
  static const std::vector<Perm>& stab(const NomSet& s, const Val& v, std::map<Val, std::vector<Perm>>& cache) {
    auto it = cache.find(v);
    if (it == cache.end()) it = cache.emplace(v, stabilizer(s, v, static_cast<int>(s.supp(v).size()))).first;
    return it->second;
  }

  NomPtr x_, y_;
  mutable std::map<int, std::vector<Val>> cache_;
  mutable std::map<Val, std::vector<Perm>> xstab_, ystab_;
};

// x[y; M] ↦ y[x; Mᵀ]
inline Val uniform_swap(const UniformMatrixSet& dst, const Val& e) {
  auto m = UniformMatrixSet::matrix(e);
  std::size_t k = m.size();
  int mm = static_cast<int>(dst.left()->supp(UniformMatrixSet::y_part(e)).size());
  std::vector<std::vector<Atom>> t(mm, std::vector<Atom>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (int j = 0; j < mm; ++j) t[j][i] = m[i][j];
  return dst.make(UniformMatrixSet::y_part(e), UniformMatrixSet::x_part(e), t);
}

// x[y; M] ↦ x[a_i ↦ j_i·y] in the single-orbit ◇-classes
inline Val uniform_to_classes(const UniformMatrixSet& src, const TensorSet& dst, const Val& e) {
  const NomSet& y = *src.right();
  const Val& yv = UniformMatrixSet::y_part(e);
  AtomSet sy = y.supp(yv);
  std::vector<Val> g;
  for (const auto& r : UniformMatrixSet::matrix(e)) {
    std::map<Atom, Atom> j;
    for (std::size_t b = 0; b < sy.size(); ++b) j[sy[b]] = r[b];
    g.push_back(y.act(extend_bijection(j), yv));
  }
  return dst.make(UniformMatrixSet::x_part(e), g);
}

struct UniformComparison {
  long matrix_size = 0;
  long class_size = 0;
  bool surjective = true;
  bool injective = true;
  std::string witness;  // two matrix elements with the same image
};

// Compares the matrix form with the literal single-orbit filter at stage n.
// Elements with empty support are excluded: there the filter has one class
// per x while the matrix form has one per pair of orbits.
inline UniformComparison compare_uniform(const UniformMatrixSet& u, const TensorSet& lit, int n) {
  UniformComparison r;
  std::map<Val, Val> pre;
  std::set<Val> hit;
  for (const auto& e : u.stage(n)) {
    if (u.supp(e).empty()) continue;
    ++r.matrix_size;
    Val c = uniform_to_classes(u, lit, e);
    hit.insert(c);
    auto [it, fresh_img] = pre.emplace(c, e);
    if (!fresh_img && r.injective) {
      r.injective = false;
      r.witness = u.show(it->second) + " and " + u.show(e) + " both give " + lit.show(c);
    }
  }
  for (const auto& c : lit.stage(n))
    if (!lit.supp_formula(c).empty()) {
      ++r.class_size;
      if (!hit.count(c)) r.surjective = false;
    }
  return r;
}

}  // namespace nomsub
