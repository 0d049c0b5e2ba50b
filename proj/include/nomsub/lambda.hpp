#pragma once

// Untyped λ-terms in locally nameless form: Atom leaves are free variables,
// Nat leaves are bound indices, Lam(body) and App(t, u) are nodes. Permutations
// and renamings act on free atoms only, so both are capture-free. Includes a
// parser and printer for named syntax, simultaneous substitution (the bind of
// the ◇-monoid), and a de Bruijn reference implementation of the same bind.

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "nomsub/nominal.hpp"

namespace nomsub {

namespace lam {

inline Val var(Atom a) { return Val::atom(a); }
inline Val bvar(int i) { return Val::nat(i); }
inline Val abs(Val body) { return Val::node(Label::Lam, {std::move(body)}); }
inline Val app(Val t, Val u) { return Val::node(Label::App, {std::move(t), std::move(u)}); }

inline int depth(const Val& t) {
  if (!t.kids.size()) return 1;
  int d = 0;
  for (const auto& k : t.kids) d = std::max(d, depth(k));
  return d + 1;
}

// no bound index escapes its binders
inline bool locally_closed(const Val& t, int binders = 0) {
  if (t.is_nat()) return t.v < binders;
  if (t.is_atom()) return true;
  if (t.is(Label::Lam)) return locally_closed(t[0], binders + 1);
  return locally_closed(t[0], binders) && locally_closed(t[1], binders);
}

// Terms of depth ≤ d with free atoms in A_n and bound indices < binders.
inline std::vector<Val> terms(int n, int d, int binders = 0) {
  std::vector<Val> out;
  if (d <= 0) return out;
  for (int a = 0; a < n; ++a) out.push_back(var(a));
  for (int i = 0; i < binders; ++i) out.push_back(bvar(i));
  if (d == 1) return out;
  for (auto& b : terms(n, d - 1, binders + 1)) out.push_back(abs(b));
  auto sub = terms(n, d - 1, binders);
  for (const auto& t : sub)
    for (const auto& u : sub) out.push_back(app(t, u));
  return out;
}

// Simultaneous substitution of free atoms; σ maps atoms to locally closed terms.
inline Val bind(const Val& t, const std::map<Atom, Val>& s) {
  if (t.is_atom()) {
    auto it = s.find(t.v);
    return it == s.end() ? t : it->second;
  }
  if (t.is_nat()) return t;
  Val r{t.kind, t.v, {}};
  for (const auto& k : t.kids) r.kids.push_back(lam::bind(k, s));
  return r;
}

inline AtomSet free_vars(const Val& t) { return atoms_of(t); }

// body with bound index `depth` replaced by u
inline Val open(const Val& body, const Val& u, int depth = 0) {
  if (body.is_nat()) return body.v == depth ? u : body;
  if (body.is_atom()) return body;
  if (body.is(Label::Lam)) return abs(open(body[0], u, depth + 1));
  return app(open(body[0], u, depth), open(body[1], u, depth));
}

// atom a replaced by the bound index `depth`
inline Val close(const Val& t, Atom a, int depth = 0) {
  if (t.is_atom()) return t.v == a ? bvar(depth) : t;
  if (t.is_nat()) return t;
  if (t.is(Label::Lam)) return abs(close(t[0], a, depth + 1));
  return app(close(t[0], a, depth), close(t[1], a, depth));
}

// λa. t
inline Val lam(Atom a, const Val& t) { return abs(close(t, a)); }

// one β-step at the root: (λ. p) q ↦ p opened with q
inline Val beta(const Val& t) {
  if (!t.is(Label::App) || !t[0].is(Label::Lam)) throw std::invalid_argument("beta: not a redex");
  return open(t[0][0], t[1]);
}

// ---- named syntax ----

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Single letters name a0..a25 by offset from 'a'; aN names aN.
class Parser {
 public:
  explicit Parser(std::string s) : s_(std::move(s)) {}

  Val term() {
    std::vector<std::string> scope;
    Val t = parse_term(scope);
    skip();
    if (i_ != s_.size()) fail("unexpected input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& m) const {
    throw ParseError(m + " at offset " + std::to_string(i_) + " in \"" + s_ + "\"");
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool at_lambda() {
    skip();
    if (s_.compare(i_, 2, "λ") == 0) return true;
    return i_ < s_.size() && s_[i_] == '\\';
  }
  void eat_lambda() { i_ += s_[i_] == '\\' ? 1 : 2; }
  bool at_name() {
    skip();
    return i_ < s_.size() && std::islower(static_cast<unsigned char>(s_[i_]));
  }
  std::string name() {
    skip();
    std::size_t b = i_;
    if (!at_name()) fail("expected a variable");
    ++i_;
    if (s_[b] == 'a')
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    return s_.substr(b, i_ - b);
  }
  static Atom atom_of(const std::string& n) {
    if (n.size() == 1) return n[0] - 'a';
    return std::stoi(n.substr(1));
  }
  Val leaf(const std::string& n, const std::vector<std::string>& scope) {
    for (std::size_t k = scope.size(); k-- > 0;)
      if (scope[k] == n) return bvar(static_cast<int>(scope.size() - 1 - k));
    return var(atom_of(n));
  }
  Val parse_term(std::vector<std::string>& scope) {
    if (at_lambda()) {
      eat_lambda();
      std::vector<std::string> names;
      while (at_name()) names.push_back(name());
      if (names.empty()) fail("binder without a variable");
      skip();
      if (i_ >= s_.size() || s_[i_] != '.') fail("expected '.'");
      ++i_;
      for (auto& n : names) scope.push_back(n);
      Val body = parse_term(scope);
      for (std::size_t k = 0; k < names.size(); ++k) {
        scope.pop_back();
        body = abs(body);
      }
      return body;
    }
    Val t = parse_atomic(scope);
    while (true) {
      skip();
      if (i_ >= s_.size() || s_[i_] == ')') break;
      if (at_lambda()) {
        t = app(t, parse_term(scope));
        break;
      }
      t = app(t, parse_atomic(scope));
    }
    return t;
  }
  Val parse_atomic(std::vector<std::string>& scope) {
    skip();
    if (i_ < s_.size() && s_[i_] == '(') {
      ++i_;
      Val t = parse_term(scope);
      skip();
      if (i_ >= s_.size() || s_[i_] != ')') fail("expected ')'");
      ++i_;
      return t;
    }
    return leaf(name(), scope);
  }

  std::string s_;
  std::size_t i_ = 0;
};

inline Val parse(const std::string& s) { return Parser(s).term(); }

inline bool alpha_eq(const Val& t, const Val& u) { return t == u; }
inline bool alpha_eq(const std::string& t, const std::string& u) { return parse(t) == parse(u); }

// "a=<term>,b=<term>" with commas inside parentheses allowed
inline std::map<Atom, Val> parse_subst(const std::string& s) {
  std::map<Atom, Val> out;
  std::size_t i = 0;
  while (i < s.size()) {
    int depth = 0;
    std::size_t j = i;
    while (j < s.size() && !(s[j] == ',' && depth == 0)) {
      if (s[j] == '(') ++depth;
      if (s[j] == ')') --depth;
      ++j;
    }
    std::string item = s.substr(i, j - i);
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("substitution item without '=': \"" + item + "\"");
    Val lhs = parse(item.substr(0, eq));
    if (!lhs.is_atom()) throw ParseError("substitution key is not a variable: \"" + item + "\"");
    out[lhs.v] = parse(item.substr(eq + 1));
    i = j + 1;
  }
  return out;
}

inline std::string print(const Val& t) {
  AtomSet avoid = atoms_of(t);
  std::vector<Atom> names;
  std::function<std::string(const Val&, int)> go = [&](const Val& u, int ctx) -> std::string {
    // ctx: 0 top, 1 function position, 2 argument position
    if (u.is_atom()) return atom_name(u.v);
    if (u.is_nat()) return atom_name(names[names.size() - 1 - u.v]);
    if (u.is(Label::Lam)) {
      std::vector<Atom> used(names.begin(), names.end());
      AtomSet av = avoid.unite(AtomSet(used));
      Atom b = fresh_one(av);
      names.push_back(b);
      std::string s = "λ" + atom_name(b) + ". " + go(u[0], 0);
      names.pop_back();
      return ctx ? "(" + s + ")" : s;
    }
    std::string s = go(u[0], 1) + " " + go(u[1], 2);
    return ctx == 2 ? "(" + s + ")" : s;
  };
  return go(t, 0);
}

// ---- de Bruijn reference ----

namespace db {

// Free atom a becomes index depth + position of a in ctx.
inline Val from_ln(const Val& t, const std::vector<Atom>& ctx, int depth = 0) {
  if (t.is_atom()) {
    for (std::size_t i = 0; i < ctx.size(); ++i)
      if (ctx[i] == t.v) return Val::nat(depth + static_cast<int>(i));
    throw std::logic_error("db::from_ln: atom outside context");
  }
  if (t.is_nat()) return t;
  if (t.is(Label::Lam)) return abs(from_ln(t[0], ctx, depth + 1));
  return app(from_ln(t[0], ctx, depth), from_ln(t[1], ctx, depth));
}

inline Val to_ln(const Val& t, const std::vector<Atom>& ctx, int depth = 0) {
  if (t.is_nat()) return t.v < depth ? t : var(ctx.at(t.v - depth));
  if (t.is(Label::Lam)) return abs(to_ln(t[0], ctx, depth + 1));
  return app(to_ln(t[0], ctx, depth), to_ln(t[1], ctx, depth));
}

inline Val shift(const Val& t, int by, int cutoff = 0) {
  if (t.is_nat()) return t.v >= cutoff ? Val::nat(t.v + by) : t;
  if (t.is(Label::Lam)) return abs(shift(t[0], by, cutoff + 1));
  return app(shift(t[0], by, cutoff), shift(t[1], by, cutoff));
}

// Replaces free index i (relative to the top) with s[i].
inline Val subst(const Val& t, const std::vector<Val>& s, int depth = 0) {
  if (t.is_nat()) return t.v < depth ? t : shift(s.at(t.v - depth), depth);
  if (t.is(Label::Lam)) return abs(subst(t[0], s, depth + 1));
  return app(subst(t[0], s, depth), subst(t[1], s, depth));
}

// The same simultaneous substitution computed through de Bruijn terms.
inline Val bind(const Val& t, const std::map<Atom, Val>& sub) {
  AtomSet in = atoms_of(t);
  AtomSet out_atoms;
  for (Atom a : in) {
    auto it = sub.find(a);
    out_atoms = out_atoms.unite(it == sub.end() ? AtomSet{a} : atoms_of(it->second));
  }
  std::vector<Atom> ctx_in(in.begin(), in.end()), ctx_out(out_atoms.begin(), out_atoms.end());
  std::vector<Val> s;
  for (Atom a : ctx_in) {
    auto it = sub.find(a);
    s.push_back(from_ln(it == sub.end() ? var(a) : it->second, ctx_out));
  }
  return to_ln(subst(from_ln(t, ctx_in), s), ctx_out);
}

}  // namespace db

}  // namespace lam

// Λ truncated at a depth, as a nominal set and a renaming set.
class LambdaSet : public NomSet {
 public:
  explicit LambdaSet(int depth) : d_(depth) {}
  std::string name() const override { return "Lam@depth" + std::to_string(d_); }
  std::vector<Val> stage(int n) const override {
    auto v = lam::terms(n, d_);
    std::sort(v.begin(), v.end());
    return v;
  }
  int max_support() const override { return 1 << (d_ - 1); }
  std::string show(const Val& x) const override { return lam::print(x); }

 private:
  int d_;
};

inline NomPtr lambda_terms(int depth) { return std::make_shared<LambdaSet>(depth); }

}  // namespace nomsub
