#pragma once

// Reduced words of the free group over atoms, truncated at a length bound.
// A word is Val Word(Letter(atom, nat inv)…); renamings act letterwise and
// then freely reduce, so non-injective renamings can shrink a word.

#include <vector>

#include "nomsub/val.hpp"

namespace nomsub {

inline Val letter(Atom a, bool inv) { return Val::node(Label::Letter, {Val::atom(a), Val::nat(inv ? 1 : 0)}); }

inline Val reduce_word(const std::vector<Val>& ls) {
  std::vector<Val> st;
  for (const auto& l : ls) {
    if (!st.empty() && st.back()[0] == l[0] && st.back()[1].v != l[1].v) st.pop_back();
    else st.push_back(l);
  }
  return Val::node(Label::Word, std::move(st));
}

// All reduced words of length ≤ len over the given atoms, shortlex order.
inline std::vector<Val> reduced_words(const std::vector<Atom>& atoms, int len) {
  std::vector<Val> out{Val::node(Label::Word, {})};
  std::vector<Val> frontier = out;
  for (int l = 1; l <= len; ++l) {
    std::vector<Val> next;
    for (const auto& w : frontier)
      for (Atom a : atoms)
        for (int inv = 0; inv < 2; ++inv) {
          if (!w.kids.empty() && w.kids.back()[0].v == a && w.kids.back()[1].v != inv) continue;
          Val x = w;
          x.kids.push_back(letter(a, inv));
          next.push_back(x);
        }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

template <class F>
Val rename_word(const Val& w, const F& rho) {
  std::vector<Val> ls;
  for (const auto& l : w.kids) ls.push_back(letter(rho(l[0].v), l[1].v != 0));
  return reduce_word(ls);
}

}  // namespace nomsub
