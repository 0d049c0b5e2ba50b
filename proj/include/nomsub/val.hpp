#pragma once

// Uniform tree values. Every element of every staged structure in the library
// is a Val: atoms and naturals are leaves, everything else is a labelled node.
// Atom leaves are exactly the places a permutation or renaming acts on.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace nomsub {

using Atom = int;

enum class Label : int {
  Tuple = 0,
  Set = 1,
  Lam = 2,
  App = 3,
  Class = 4,
  Word = 5,
  Letter = 6,
  Inj = 7,    // coproduct injection: kids = {nat(tag), payload}
  Kappa = 8,  // coproduct over atom sets: kids = {set of atoms, payload}
  Bag = 9,
  Map = 10,   // finite map as sorted (key, value) pairs
};

struct Val {
  enum class Kind : std::uint8_t { Nat = 0, Atom = 1, Node = 2 };
  Kind kind = Kind::Nat;
  int v = 0;
  std::vector<Val> kids;

  static Val nat(int n) { return Val{Kind::Nat, n, {}}; }
  static Val atom(Atom a) { return Val{Kind::Atom, a, {}}; }
  static Val node(Label l, std::vector<Val> ks) {
    return Val{Kind::Node, static_cast<int>(l), std::move(ks)};
  }
  static Val tuple(std::vector<Val> ks) { return node(Label::Tuple, std::move(ks)); }

  bool is_atom() const { return kind == Kind::Atom; }
  bool is_nat() const { return kind == Kind::Nat; }
  bool is(Label l) const { return kind == Kind::Node && v == static_cast<int>(l); }
  Label label() const { return static_cast<Label>(v); }
  const Val& operator[](std::size_t i) const { return kids[i]; }
  std::size_t size() const { return kids.size(); }

  friend bool operator==(const Val& a, const Val& b) {
    return a.kind == b.kind && a.v == b.v && a.kids == b.kids;
  }
  friend std::strong_ordering operator<=>(const Val& a, const Val& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    if (auto c = a.v <=> b.v; c != 0) return c;
    std::size_t n = std::min(a.kids.size(), b.kids.size());
    for (std::size_t i = 0; i < n; ++i)
      if (auto c = a.kids[i] <=> b.kids[i]; c != 0) return c;
    return a.kids.size() <=> b.kids.size();
  }
};

inline std::size_t hash_val(const Val& x) {
  std::size_t h = static_cast<std::size_t>(x.kind) * 0x9e3779b97f4a7c15ULL;
  h ^= std::hash<int>{}(x.v) + 0x9e3779b9 + (h << 6) + (h >> 2);
  for (const auto& k : x.kids) h ^= hash_val(k) + 0x9e3779b9 + (h << 6) + (h >> 2);
  return h;
}

struct ValHash {
  std::size_t operator()(const Val& x) const { return hash_val(x); }
};

inline std::string atom_name(Atom a) { return "a" + std::to_string(a); }

// Relabels every atom leaf through f.
template <class F>
Val map_atoms(const Val& x, const F& f) {
  if (x.kind == Val::Kind::Atom) return Val::atom(f(x.v));
  if (x.kind == Val::Kind::Nat) return x;
  Val out{x.kind, x.v, {}};
  out.kids.reserve(x.kids.size());
  for (const auto& k : x.kids) out.kids.push_back(map_atoms(k, f));
  return out;
}

template <class F>
void for_each_atom(const Val& x, const F& f) {
  if (x.kind == Val::Kind::Atom) {
    f(x.v);
    return;
  }
  for (const auto& k : x.kids) for_each_atom(k, f);
}

// Generic printer. Structure-specific printers live with their carriers.
inline std::string show(const Val& x) {
  switch (x.kind) {
    case Val::Kind::Nat: return std::to_string(x.v);
    case Val::Kind::Atom: return atom_name(x.v);
    case Val::Kind::Node: break;
  }
  auto join = [&](const char* open, const char* close) {
    std::string s = open;
    for (std::size_t i = 0; i < x.kids.size(); ++i) {
      if (i) s += ",";
      s += show(x.kids[i]);
    }
    return s + close;
  };
  switch (x.label()) {
    case Label::Set: return join("{", "}");
    case Label::Bag: return join("{|", "|}");
    case Label::Inj: return "in" + show(x.kids[0]) + "(" + show(x.kids[1]) + ")";
    case Label::Kappa: return "k" + show(x.kids[0]) + "(" + show(x.kids[1]) + ")";
    case Label::Word: {
      if (x.kids.empty()) return "1";
      std::string s;
      for (const auto& l : x.kids) s += show(l[0]) + (l[1].v ? "⁻¹" : "");
      return s;
    }
    case Label::Map: {
      std::string s = "[";
      for (std::size_t i = 0; i < x.kids.size(); ++i) {
        if (i) s += ", ";
        s += show(x.kids[i][0]) + "↦" + show(x.kids[i][1]);
      }
      return s + "]";
    }
    default: return join("(", ")");
  }
}

}  // namespace nomsub
