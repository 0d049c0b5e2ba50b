#pragma once

// Law outcomes collected by the suites and printed by the CLI.

#include <algorithm>
#include <string>
#include <vector>

namespace nomsub {

struct Law {
  std::string id;
  bool ok = true;
  long checked = 0;     // instances examined
  std::string witness;  // first failure, or the verified counterexample
  std::string flag;     // set when the run is truncation-unstable
  int bound = -1;       // bound used, when it differs from the suite's
  double seconds = 0;

  // a failure on a run flagged as unstable is reported, not counted
  bool counts_as_failure() const { return !ok && flag.empty(); }
  std::string status() const { return ok ? "pass" : flag.empty() ? "fail" : "flagged"; }
};

// A claim refuted by an explicit witness.
struct Counterexample {
  std::string name;
  std::string claim_ref;
  std::string witness;
  bool verified = false;
};

struct SuiteReport {
  std::string suite;
  int bound = 0;
  unsigned seed = 0;
  std::vector<Law> laws;
  std::vector<Counterexample> counterexamples;

  bool ok() const {
    return std::none_of(laws.begin(), laws.end(), [](const Law& l) { return l.counts_as_failure(); });
  }
  void add(Law l) { laws.push_back(std::move(l)); }
  void sort() {
    std::sort(laws.begin(), laws.end(), [](const Law& a, const Law& b) { return a.id < b.id; });
  }
  void merge(const SuiteReport& other) {
    laws.insert(laws.end(), other.laws.begin(), other.laws.end());
    counterexamples.insert(counterexamples.end(), other.counterexamples.begin(), other.counterexamples.end());
  }
};

// Any result type with `ok` and `witness` members.
template <class R>
Law make_law(std::string id, const R& r, long checked = 0) {
  Law l;
  l.id = std::move(id);
  l.ok = r.ok;
  l.checked = checked;
  l.witness = r.witness;
  return l;
}

inline Law make_law(std::string id, bool ok, long checked, std::string witness = "") {
  Law l;
  l.id = std::move(id);
  l.ok = ok;
  l.checked = checked;
  l.witness = std::move(witness);
  return l;
}

}  // namespace nomsub
