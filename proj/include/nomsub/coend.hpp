#pragma once

// Coends in Set by union-find, Day convolution for + and ×, the substitution
// presheaf A ◁ X as an n-ary Day power over bundles, and the substitution
// tensor X ◇ Y on truncated presheaves.

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "nomsub/presheaf.hpp"
#include "nomsub/quotient.hpp"

namespace nomsub {

// ---- generic coend of a tabulated bifunctor H: Ctx^op × Ctx → Set ----

struct Bifunctor {
  CatTag cat = CatTag::F;
  int bound = 0;
  // elems(j, i) = H(j, i)
  std::function<std::vector<Val>(int, int)> elems;
  // for f: i → j and z ∈ H(j, i): H(f, i)(z) ∈ H(i, i) and H(j, f)(z) ∈ H(j, j)
  std::function<Val(const Mor&, const Val&)> pre;
  std::function<Val(const Mor&, const Val&)> post;
};

struct CoendResult {
  std::vector<std::pair<int, Val>> members;  // (stage, payload) in disjoint-union order
  std::vector<std::pair<int, int>> generators;
  Quotient q;
  std::map<std::pair<int, Val>, int> where;

  int project(int stage, const Val& x) const { return q.cls[where.at({stage, x})]; }
  int classes() const { return q.count(); }
};

inline CoendResult coend_quotient(const Bifunctor& h) {
  CoendResult r;
  for (int i = 0; i <= h.bound; ++i)
    for (auto& x : h.elems(i, i)) {
      r.where[{i, x}] = static_cast<int>(r.members.size());
      r.members.emplace_back(i, x);
    }
  for (int i = 0; i <= h.bound; ++i)
    for (int j = 0; j <= h.bound; ++j)
      for (const auto& f : homset(h.cat, i, j).mors)
        for (const auto& z : h.elems(j, i))
          r.generators.emplace_back(r.where.at({i, h.pre(f, z)}), r.where.at({j, h.post(f, z)}));
  r.q = quotient(static_cast<int>(r.members.size()), r.generators);
  return r;
}

// ---- Day convolution ----

enum class DayOp { Sum, Prod };

class Day {
 public:
  struct Tuple {
    std::vector<int> fib;
    Mor h;
    std::vector<int> xs;
  };

  Day(std::vector<const TruncPresheaf*> factors, CatTag cat, DayOp op, int outer, int inner,
      std::string name)
      : fs_(std::move(factors)), op_(op), outer_(outer), inner_(inner), cat_(cat) {
    if (op == DayOp::Prod && fs_.size() != 2) throw std::invalid_argument("Day ×: two factors");
    for (auto* f : fs_)
      if (f->bound < inner) throw std::invalid_argument("Day: factor " + f->name + " tabulated below inner bound");
    res_.name = std::move(name);
    res_.bound = outer;
    res_.elems.resize(outer + 1);
    stage_.resize(outer + 1);
    enumerate_fibres();
    for (int c = 0; c <= outer; ++c) build_stage(c);
    build_index(res_);
    build_action();
  }
  Day(const TruncPresheaf& x, const TruncPresheaf& y, DayOp op, int outer, int inner)
      : Day({&x, &y}, x.cat, op, outer, inner, x.name + (op == DayOp::Sum ? "⊕" : "⊗") + y.name) {}

  const TruncPresheaf& result() const { return res_; }
  int inner() const { return inner_; }
  int arity() const { return static_cast<int>(fs_.size()); }

  int combined(const std::vector<int>& fib) const {
    if (op_ == DayOp::Prod) return fib[0] * fib[1];
    int s = 0;
    for (int n : fib) s += n;
    return s;
  }

  // class (element index at stage c) of a tuple; -1 if it lies past the inner bound
  int locate(int c, const std::vector<int>& fib, const Mor& h, const std::vector<int>& xs) const {
    long t = tuple_index(c, fib, h, xs);
    if (t < 0) return -1;
    return stage_[c].q.cls[t];
  }
  const Tuple& decode(int c, int elem) const { return stage_[c].reps[elem]; }
  const Val& factor_elem(int i, int n, int x) const { return fs_[i]->at(n, x); }

  // visits every tuple at stage c together with its class
  template <class F>
  void for_each_tuple(int c, F f) const {
    const auto& st = stage_[c];
    for (const auto& b : st.blocks) {
      const auto& hs = homset(cat_, combined(b.fib), c);
      std::vector<int> xs(b.fib.size(), 0);
      for (std::size_t hi = 0; hi < hs.mors.size(); ++hi) {
        long base = b.offset + static_cast<long>(hi) * b.xcount;
        for (long r = 0; r < b.xcount; ++r) {
          unrank(b, r, xs);
          f(Tuple{b.fib, hs.mors[hi], xs}, st.q.cls[base + r]);
        }
      }
    }
  }

  // lift of f: fib[i] → n' on factor i to the combined stage
  Mor lift(const std::vector<int>& fib, int i, const Mor& f) const {
    if (op_ == DayOp::Prod)
      return i == 0 ? product(f, Mor::id(fib[1])) : product(Mor::id(fib[0]), f);
    Mor acc{0, 0, {}};
    for (int k = 0; k < static_cast<int>(fib.size()); ++k) acc = sum(acc, k == i ? f : Mor::id(fib[k]));
    return acc;
  }

 private:
  struct Block {
    std::vector<int> fib;
    long offset = 0;
    long xcount = 1;
    long size = 0;
  };
  struct Stage {
    std::vector<Block> blocks;
    std::map<std::vector<int>, int> block_of;
    long ntuples = 0;
    Quotient q;
    std::vector<Tuple> reps;
  };

  void enumerate_fibres() {
    std::vector<int> cur(fs_.size(), 0);
    std::function<void(std::size_t)> go = [&](std::size_t i) {
      if (i == fs_.size()) {
        if (combined(cur) <= inner_) fibres_.push_back(cur);
        return;
      }
      for (int n = 0; n <= inner_; ++n) {
        cur[i] = n;
        go(i + 1);
      }
    };
    go(0);
  }

  void unrank(const Block& b, long r, std::vector<int>& xs) const {
    for (int i = static_cast<int>(b.fib.size()) - 1; i >= 0; --i) {
      long s = fs_[i]->size(b.fib[i]);
      xs[i] = static_cast<int>(r % s);
      r /= s;
    }
  }

  long tuple_index(int c, const std::vector<int>& fib, const Mor& h, const std::vector<int>& xs) const {
    const auto& st = stage_[c];
    auto it = st.block_of.find(fib);
    if (it == st.block_of.end()) return -1;
    const Block& b = st.blocks[it->second];
    int hi = hom_index(cat_, h);
    if (hi < 0) throw std::logic_error("Day: tuple map outside the category: " + h.str());
    long r = 0;
    for (std::size_t i = 0; i < fib.size(); ++i) r = r * fs_[i]->size(fib[i]) + xs[i];
    return b.offset + static_cast<long>(hi) * b.xcount + r;
  }

  void build_stage(int c) {
    Stage& st = stage_[c];
    for (const auto& fib : fibres_) {
      Block b;
      b.fib = fib;
      for (std::size_t i = 0; i < fib.size(); ++i) b.xcount *= fs_[i]->size(fib[i]);
      long hc = static_cast<long>(homset(cat_, combined(fib), c).mors.size());
      b.size = hc * b.xcount;
      if (b.size == 0) continue;
      b.offset = st.ntuples;
      st.ntuples += b.size;
      st.block_of[fib] = static_cast<int>(st.blocks.size());
      st.blocks.push_back(std::move(b));
    }
    UnionFind uf(static_cast<int>(st.ntuples));
    for (const auto& b : st.blocks) {
      std::vector<int> xs(b.fib.size());
      for (std::size_t i = 0; i < b.fib.size(); ++i)
        for (int n2 = 0; n2 <= inner_; ++n2) {
          std::vector<int> fib2 = b.fib;
          fib2[i] = n2;
          if (combined(fib2) > inner_) continue;
          auto it2 = st.block_of.find(fib2);
          if (it2 == st.block_of.end()) continue;
          const auto& hs2 = homset(cat_, combined(fib2), c);
          for (const auto& f : homset(cat_, b.fib[i], n2).mors) {
            Mor l = lift(b.fib, static_cast<int>(i), f);
            for (const auto& h2 : hs2.mors) {
              Mor h = compose(h2, l);
              for (long r = 0; r < b.xcount; ++r) {
                unrank(b, r, xs);
                long a = tuple_index(c, b.fib, h, xs);
                std::vector<int> xs2 = xs;
                xs2[i] = fs_[i]->apply(f, xs[i]);
                long z = tuple_index(c, fib2, h2, xs2);
                uf.unite(static_cast<int>(a), static_cast<int>(z));
              }
            }
          }
        }
    }
    st.q = to_quotient(uf);
    // decode representatives
    std::vector<Tuple> reps(st.q.count());
    std::vector<char> done(st.q.count(), 0);
    for_each_tuple(c, [&](const Tuple& t, int cls) {
      if (!done[cls]) {
        done[cls] = 1;
        reps[cls] = t;
      }
    });
    st.reps = std::move(reps);
    for (const auto& t : st.reps) {
      std::vector<Val> fv, xv;
      for (int n : t.fib) fv.push_back(Val::nat(n));
      for (std::size_t i = 0; i < t.xs.size(); ++i) xv.push_back(fs_[i]->at(t.fib[i], t.xs[i]));
      res_.elems[c].push_back(Val::tuple({Val::tuple(fv), t.h.to_val(), Val::tuple(xv)}));
    }
  }

  void build_action() {
    res_.cat = cat_;
    res_.act.assign(outer_ + 1, std::vector<std::vector<std::vector<int>>>(outer_ + 1));
    for (int m = 0; m <= outer_; ++m)
      for (int n = 0; n <= outer_; ++n)
        for (const auto& f : homset(cat_, m, n).mors) {
          std::vector<int> tab(res_.size(m));
          for (int e = 0; e < res_.size(m); ++e) {
            const Tuple& t = stage_[m].reps[e];
            tab[e] = locate(n, t.fib, compose(f, t.h), t.xs);
          }
          res_.act[m][n].push_back(std::move(tab));
        }
  }

  std::vector<const TruncPresheaf*> fs_;
  DayOp op_;
  int outer_, inner_;
  CatTag cat_;
  std::vector<std::vector<int>> fibres_;
  std::vector<Stage> stage_;
  TruncPresheaf res_;
};

// A ◁ X: bundles over A presented with fibres in blocks, i.e. the A-fold Day
// power for +. A = 0 gives the tuple-free Day power, isomorphic to y0.
inline std::unique_ptr<Day> subst_presheaf(int a, const TruncPresheaf& x, int outer, int inner) {
  std::vector<const TruncPresheaf*> fs(a, &x);
  auto d = std::make_unique<Day>(fs, x.cat, DayOp::Sum, outer, inner, std::to_string(a) + "◁" + x.name);
  return d;
}

// Pullback of a bundle element of A ◁ X along j: A' → A, i.e. y r_j · p_j.
// Returns the class in A' ◁ X at the same stage, or -1 if the pulled-back
// bundle exceeds the inner bound.
inline int reindex(const Day& src, const Day& dst, const Mor& j, int c, int elem) {
  const Day::Tuple& t = src.decode(c, elem);
  std::vector<int> off(t.fib.size() + 1, 0);
  for (std::size_t a = 0; a < t.fib.size(); ++a) off[a + 1] = off[a] + t.fib[a];
  std::vector<int> fib2(j.dom), xs2(j.dom);
  Mor r{0, off.back(), {}};
  for (int a2 = 0; a2 < j.dom; ++a2) {
    int a = j.t[a2];
    fib2[a2] = t.fib[a];
    xs2[a2] = t.xs[a];
    for (int e = 0; e < t.fib[a]; ++e) r.t.push_back(off[a] + e);
  }
  r.dom = static_cast<int>(r.t.size());
  if (r.dom > dst.inner()) return -1;
  return dst.locate(c, fib2, compose(t.h, r), xs2);
}

// X ◇ Y = ∫^A X A · (A ◁ Y), inner stages A and bundle totals ≤ inner.
class SubstTensor {
 public:
  struct Tuple {
    int a;
    int x;
    int g;
  };

  SubstTensor(const TruncPresheaf& x, const TruncPresheaf& y, int outer, int inner)
      : x_(x), y_(y), outer_(outer), inner_(inner) {
    if (x.bound < inner || y.bound < inner) throw std::invalid_argument("SubstTensor: inputs below inner bound");
    for (int a = 0; a <= inner; ++a) p_.push_back(subst_presheaf(a, y, outer, inner));
    res_.name = x.name + "◇" + y.name;
    res_.cat = x.cat;
    res_.bound = outer;
    res_.elems.resize(outer + 1);
    stage_.resize(outer + 1);
    for (int c = 0; c <= outer; ++c) build_stage(c);
    build_index(res_);
    build_action();
  }

  const TruncPresheaf& result() const { return res_; }
  const Day& power(int a) const { return *p_[a]; }
  const TruncPresheaf& left() const { return x_; }
  const TruncPresheaf& right() const { return y_; }
  int inner() const { return inner_; }
  long truncated_generators() const { return truncated_; }

  int locate(int c, int a, int x, int g) const {
    if (a > inner_ || g < 0) return -1;
    return stage_[c].q.cls[stage_[c].offset[a] + static_cast<long>(x) * p_[a]->result().size(c) + g];
  }
  const Tuple& decode(int c, int elem) const { return stage_[c].reps[elem]; }

  template <class F>
  void for_each_tuple(int c, F f) const {
    for (int a = 0; a <= inner_; ++a)
      for (int x = 0; x < x_.size(a); ++x)
        for (int g = 0; g < p_[a]->result().size(c); ++g) f(Tuple{a, x, g}, locate(c, a, x, g));
  }

 private:
  struct Stage {
    std::vector<long> offset;
    Quotient q;
    std::vector<Tuple> reps;
  };

  void build_stage(int c) {
    Stage& st = stage_[c];
    long n = 0;
    for (int a = 0; a <= inner_; ++a) {
      st.offset.push_back(n);
      n += static_cast<long>(x_.size(a)) * p_[a]->result().size(c);
    }
    UnionFind uf(static_cast<int>(n));
    auto idx = [&](int a, int x, int g) {
      return static_cast<int>(st.offset[a] + static_cast<long>(x) * p_[a]->result().size(c) + g);
    };
    for (int a = 0; a <= inner_; ++a)
      for (int a2 = 0; a2 <= inner_; ++a2)
        for (const auto& j : homset(x_.cat, a, a2).mors)
          for (int g2 = 0; g2 < p_[a2]->result().size(c); ++g2) {
            int g = reindex(*p_[a2], *p_[a], j, c, g2);
            if (g < 0) {
              ++truncated_;
              continue;
            }
            for (int x = 0; x < x_.size(a); ++x) uf.unite(idx(a2, x_.apply(j, x), g2), idx(a, x, g));
          }
    st.q = to_quotient(uf);
    st.reps.resize(st.q.count());
    std::vector<char> done(st.q.count(), 0);
    for (int a = 0; a <= inner_; ++a)
      for (int x = 0; x < x_.size(a); ++x)
        for (int g = 0; g < p_[a]->result().size(c); ++g) {
          int k = st.q.cls[idx(a, x, g)];
          if (!done[k]) {
            done[k] = 1;
            st.reps[k] = Tuple{a, x, g};
          }
        }
    for (const auto& t : st.reps)
      res_.elems[c].push_back(Val::tuple({Val::nat(t.a), x_.at(t.a, t.x), p_[t.a]->result().at(c, t.g)}));
  }

  void build_action() {
    res_.act.assign(outer_ + 1, std::vector<std::vector<std::vector<int>>>(outer_ + 1));
    for (int m = 0; m <= outer_; ++m)
      for (int n = 0; n <= outer_; ++n)
        for (const auto& f : homset(res_.cat, m, n).mors) {
          std::vector<int> tab(res_.size(m));
          for (int e = 0; e < res_.size(m); ++e) {
            const Tuple& t = stage_[m].reps[e];
            tab[e] = locate(n, t.a, t.x, p_[t.a]->result().apply(f, t.g));
          }
          res_.act[m][n].push_back(std::move(tab));
        }
  }

  const TruncPresheaf& x_;
  const TruncPresheaf& y_;
  int outer_, inner_;
  std::vector<std::unique_ptr<Day>> p_;
  std::vector<Stage> stage_;
  TruncPresheaf res_;
  long truncated_ = 0;
};

// Stabilization diagnostic: compare class counts at stages ≤ bound-1 between
// inner bound `bound` and `bound-1`.
struct Stabilization {
  bool stable = true;
  std::vector<std::pair<int, int>> counts;  // (count with inner-1, count with inner) per stage
  std::string str() const {
    std::string s;
    for (std::size_t c = 0; c < counts.size(); ++c)
      s += (c ? " " : "") + std::to_string(c) + ":" + std::to_string(counts[c].first) + "/" +
           std::to_string(counts[c].second);
    return s;
  }
};

inline Stabilization compare_counts(const TruncPresheaf& lo, const TruncPresheaf& hi, int upto) {
  Stabilization s;
  for (int c = 0; c <= upto; ++c) {
    s.counts.emplace_back(lo.size(c), hi.size(c));
    if (lo.size(c) != hi.size(c)) s.stable = false;
  }
  return s;
}

inline Stabilization stabilization_tensor(const TruncPresheaf& x, const TruncPresheaf& y, int bound) {
  if (bound < 1) return {};
  SubstTensor lo(x, y, bound - 1, bound - 1), hi(x, y, bound - 1, bound);
  return compare_counts(lo.result(), hi.result(), bound - 1);
}

inline Stabilization stabilization_day(const TruncPresheaf& x, const TruncPresheaf& y, DayOp op, int bound) {
  if (bound < 1) return {};
  Day lo(x, y, op, bound - 1, bound - 1), hi(x, y, op, bound - 1, bound);
  return compare_counts(lo.result(), hi.result(), bound - 1);
}

}  // namespace nomsub
