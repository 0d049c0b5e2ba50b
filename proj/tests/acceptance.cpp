// One pass/fail line per acceptance criterion, computed from the full law run.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "nomsub/suites.hpp"

using namespace nomsub;

namespace {

bool starts(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

struct Criterion {
  std::string name;
  std::vector<std::string> prefixes;
  // laws that may be flagged as truncation-unstable instead of passing
  std::function<bool(const Law&)> may_flag = [](const Law&) { return false; };
  std::vector<std::pair<std::string, long>> min_checked = {};
};

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  SuiteConfig cfg;
  SuiteReport all = run_suite("all", cfg);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  auto s_only = [](const Law& l) { return starts(l.id, "psh.S."); };
  std::vector<Criterion> cs = {
      {"1 unitors, associator, pentagon", {"nom.unitor.", "nom.associator", "nom.pentagon"}, {}, {{"nom.pentagon", 50}}},
      {"2 curry/uncurry round trips with exact support", {"nom.curry.", "lambda.curry."}},
      {"3 one-step class search equals closure oracle", {"nom.class_eq.", "ren.class_eq."}},
      {"4 presheaf units, distributivity, stabilization",
       {"psh.B.unit", "psh.I.unit", "psh.S.unit", "psh.F.unit", "psh.B.distributivity", "psh.I.distributivity",
        "psh.S.distributivity", "psh.F.distributivity", "psh.B.stabilization", "psh.I.stabilization",
        "psh.S.stabilization", "psh.F.stabilization"},
       s_only},
      {"5 bridges: fresh sum, species on B and S, Kleisli, writer",
       {"bridge.fresh_product.", "bridge.species.", "ren.species.", "bridge.kleisli.", "bridge.T.writer", "bridge.upper.",
        "ren.upper."}},
      {"6 counterexamples reproduced", {"ren.counterexample.", "ren.relevant.FreeGroup@2.fails", "nom.uniform.literal."}},
      {"7 sheaf agreement on random presheaves",
       {"sheaf.I.intersections_iff_sheaf", "sheaf.O.intersections_iff_sheaf"},
       {},
       {{"sheaf.I.intersections_iff_sheaf", 30}, {"sheaf.O.intersections_iff_sheaf", 30}}},
      {"8 captureful tensor: A*2 over A is A^2, no right unit", {"nom.capture."}},
      {"9 bag commutes, list does not", {"psh.monad.bag.commutative", "psh.monad.list.not_commutative"}},
      {"10 lambda bind: de Bruijn oracle, monoid laws, worked example",
       {"lambda.bind.", "lambda.monoid."},
       {},
       {{"lambda.bind.de_bruijn", 500}}},
  };

  bool all_ok = true;
  for (const auto& c : cs) {
    int matched = 0, flagged = 0;
    std::string first_fail;
    for (const auto& l : all.laws) {
      bool hit = false;
      for (const auto& p : c.prefixes) hit = hit || starts(l.id, p);
      if (!hit) continue;
      ++matched;
      if (l.ok) continue;
      if (!l.flag.empty() && c.may_flag(l)) {
        ++flagged;
        continue;
      }
      if (first_fail.empty()) first_fail = l.id + (l.witness.empty() ? "" : ": " + l.witness);
    }
    for (const auto& [id, n] : c.min_checked) {
      bool found = false;
      for (const auto& l : all.laws)
        if (l.id == id) {
          found = true;
          if (l.checked < n && first_fail.empty()) first_fail = id + " checked " + std::to_string(l.checked) + " < " + std::to_string(n);
        }
      if (!found && first_fail.empty()) first_fail = id + " missing";
    }
    if (matched == 0 && first_fail.empty()) first_fail = "no laws matched";
    bool ok = first_fail.empty();
    all_ok = all_ok && ok;
    std::printf("%s  criterion %s  (%d laws%s)%s%s\n", ok ? "PASS" : "FAIL", c.name.c_str(), matched,
                flagged ? (", " + std::to_string(flagged) + " flagged truncation-unstable").c_str() : "",
                ok ? "" : "  ", first_fail.c_str());
  }
  bool fast = secs < 600.0;
  all_ok = all_ok && fast;
  std::printf("%s  runtime  %.1f s (limit 600 s)\n", fast ? "PASS" : "FAIL", secs);
  return all_ok ? 0 : 1;
}
