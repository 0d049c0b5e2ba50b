#pragma once

// Name lookup for the corpus of nominal sets and presheaves used by the
// suites and the command line.
//
//   nominal:   k  A  A*k  A^k  PfA  PfA@c  FreeGroup@len  Lam@depthD
//   presheaf:  yK  1  G@len  List@len  Bag@len  I_star(<nominal>)  or a nominal name

#include <regex>
#include <stdexcept>
#include <string>

#include "nomsub/bridges.hpp"
#include "nomsub/lambda.hpp"
#include "nomsub/monad.hpp"
#include "nomsub/sheaf.hpp"

namespace nomsub {

struct UnknownObject : std::invalid_argument {
  explicit UnknownObject(const std::string& name) : std::invalid_argument("UnknownObject: " + name) {}
};

struct UnknownSuite : std::invalid_argument {
  explicit UnknownSuite(const std::string& name) : std::invalid_argument("UnknownSuite: " + name) {}
};

inline NomPtr nominal_by_name(const std::string& name) {
  std::smatch m;
  auto num = [&](int i) { return std::stoi(m[i].str()); };
  if (std::regex_match(name, m, std::regex(R"((\d+))"))) return discrete(num(1));
  if (name == "A") return atoms();
  if (std::regex_match(name, m, std::regex(R"(A\*(\d+))"))) return fresh_power(num(1));
  if (std::regex_match(name, m, std::regex(R"(A\^(\d+))"))) return power(num(1));
  if (name == "PfA") return pf();
  if (std::regex_match(name, m, std::regex(R"(PfA@(\d+))"))) return pf(num(1));
  if (std::regex_match(name, m, std::regex(R"(FreeGroup@(\d+))"))) return free_group(num(1));
  if (std::regex_match(name, m, std::regex(R"(Lam@depth(\d+))"))) return lambda_terms(num(1));
  throw UnknownObject(name);
}

inline CatTag category_by_name(const std::string& name) {
  if (auto c = cat_from_name(name)) return *c;
  if (name == "B") return CatTag::B;
  if (name == "I") return CatTag::I;
  if (name == "S") return CatTag::S;
  if (name == "F") return CatTag::F;
  throw UnknownObject("category " + name);
}

// Presheaf names over `cat`; a bare nominal name means its I_star.
inline TruncPresheaf presheaf_by_name(const std::string& name, CatTag cat, int bound) {
  std::smatch m;
  if (std::regex_match(name, m, std::regex(R"(y(\d+))"))) return representable(cat, std::stoi(m[1].str()), bound);
  if (name == "1") return terminal_presheaf(cat, bound);
  if (std::regex_match(name, m, std::regex(R"((G|List|Bag)@(\d+))"))) {
    if (cat != CatTag::F) throw UnknownObject(name + " over " + cat_name(cat) + " (only over F)");
    int len = std::stoi(m[2].str());
    if (m[1] == "G") return free_group_presheaf(bound, len);
    return monad_presheaf(m[1] == "List" ? list_monad(len) : multiset_monad(len), bound);
  }
  std::string inner = name;
  if (std::regex_match(name, m, std::regex(R"(I_star\((.+)\))"))) inner = m[1].str();
  NomPtr x = nominal_by_name(inner);
  if ((cat == CatTag::F || cat == CatTag::S) && !x->renamable())
    throw UnknownObject(name + " over " + cat_name(cat) + " (not a renaming set)");
  return I_star(*x, cat, bound);
}

}  // namespace nomsub
