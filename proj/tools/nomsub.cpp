// nomsub: run law suites and dump tensors, presheaves and λ-substitutions.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "nomsub/corpus.hpp"
#include "nomsub/suites.hpp"

using json = nlohmann::ordered_json;
using namespace nomsub;

namespace {

constexpr int kSchemaVersion = 1;

json mor_json(const Mor& f) { return {{"dom", f.dom}, {"cod", f.cod}, {"map", f.t}}; }

json presheaf_json(const TruncPresheaf& p) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["name"] = p.name;
  j["cat"] = cat_name(p.cat);
  j["bound"] = p.bound;
  json stages = json::array();
  for (int n = 0; n <= p.bound; ++n) {
    json elems = json::array();
    for (const auto& v : p.elems[n]) elems.push_back(show(v));
    stages.push_back({{"n", n}, {"elems", elems}});
  }
  j["stages"] = stages;
  json action = json::array();
  for (int m = 0; m <= p.bound; ++m)
    for (int n = 0; n <= p.bound; ++n) {
      const auto& hs = homset(p.cat, m, n).mors;
      for (std::size_t k = 0; k < hs.size(); ++k) action.push_back({{"mor", mor_json(hs[k])}, {"map", p.act[m][n][k]}});
    }
  j["action"] = action;
  json warnings = json::array();
  if (p.unstable) warnings.push_back("TruncationUnstable: " + p.diagnostic);
  j["warnings"] = warnings;
  return j;
}

json report_json(const SuiteReport& r, int depth, bool timings) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["suite"] = r.suite;
  j["bound"] = r.bound;
  j["depth"] = depth;
  j["seed"] = r.seed;
  j["ok"] = r.ok();
  json laws = json::array();
  for (const auto& l : r.laws) {
    json e;
    e["law"] = l.id;
    e["status"] = l.status();
    if (!l.witness.empty()) e["witness"] = l.witness;
    e["checked"] = l.checked;
    e["bounds"] = {{"bound", l.bound >= 0 ? l.bound : r.bound}};
    e["flags"] = l.flag.empty() ? json::array() : json::array({l.flag});
    if (timings) e["timing_ms"] = static_cast<long>(l.seconds * 1000.0 + 0.5);
    laws.push_back(e);
  }
  j["laws"] = laws;
  json cx = json::array();
  for (const auto& c : r.counterexamples)
    cx.push_back({{"name", c.name}, {"claim_ref", c.claim_ref}, {"witness", c.witness}, {"verified", c.verified}});
  j["counterexamples"] = cx;
  return j;
}

std::string report_text(const SuiteReport& r, bool timings) {
  std::string s;
  for (const auto& l : r.laws) {
    s += l.status() + "  " + l.id + "  n=" + std::to_string(l.checked);
    if (timings) s += "  " + std::to_string(static_cast<long>(l.seconds * 1000.0 + 0.5)) + "ms";
    if (!l.flag.empty()) s += "  [" + l.flag + "]";
    if (!l.witness.empty()) s += "  " + l.witness;
    s += "\n";
  }
  for (const auto& c : r.counterexamples)
    s += std::string(c.verified ? "verified" : "UNVERIFIED") + "  " + c.name + "  " + c.witness + "\n";
  s += r.suite + ": " + (r.ok() ? "all laws hold" : "some laws fail") + "\n";
  return s;
}

TensorKind kind_by_name(const std::string& k) {
  if (k == "sub") return TensorKind::Sub;
  if (k == "cap") return TensorKind::Capture;
  if (k == "uniform") return TensorKind::Uniform;
  throw UnknownObject("tensor kind " + k);
}

json tensor_json(const std::string& kind, const std::string& xn, const std::string& yn, int stage) {
  NomPtr x = nominal_by_name(xn), y = nominal_by_name(yn);
  std::shared_ptr<const NomSet> t;
  if (kind == "ren") t = std::make_shared<RenTensorSet>(x, y);
  else t = tensor(x, y, kind_by_name(kind));
  json j;
  j["schema_version"] = kSchemaVersion;
  j["tensor"] = t->name();
  j["kind"] = kind;
  j["stage"] = stage;
  json classes = json::array();
  for (const auto& c : t->stage(stage)) classes.push_back({{"class", t->show(c)}, {"support", t->supp(c).str()}});
  j["count"] = classes.size();
  j["classes"] = classes;
  return j;
}

json orbit_json(const std::string& xn, int stage) {
  NomPtr x = nominal_by_name(xn);
  json j;
  j["schema_version"] = kSchemaVersion;
  j["set"] = x->name();
  j["stage"] = stage;
  json orbits = json::array();
  for (const auto& o : orbit_reps(*x, stage)) orbits.push_back({{"rep", x->show(o.rep)}, {"support", x->supp(o.rep).str()}});
  j["orbits"] = orbits;
  return j;
}

// Presheaf names may be a corpus name or a substitution tensor "P<>Q".
TruncPresheaf presheaf_for_dump(const std::string& name, CatTag cat, int bound) {
  auto pos = name.find("<>");
  if (pos == std::string::npos) return presheaf_by_name(name, cat, bound);
  TruncPresheaf x = presheaf_by_name(name.substr(0, pos), cat, bound);
  TruncPresheaf y = presheaf_by_name(name.substr(pos + 2), cat, bound);
  SubstTensor t(x, y, bound, bound);
  TruncPresheaf r = t.result();
  Stabilization s = stabilization_tensor(x, y, bound);
  if (!s.stable) {
    r.unstable = true;
    r.diagnostic = s.str();
  }
  return r;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << text;
}

int default_bound() {
  if (const char* e = std::getenv("NOMSUB_BOUND")) return std::atoi(e);
  return 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nominal and presheaf substitution tensors: law suites and dumps"};
  app.require_subcommand(1);

  int bound = default_bound();
  unsigned seed = 1;
  int depth = 3;
  std::string out, format = "json";
  bool timings = false;
  auto common = [&](CLI::App* c) {
    c->add_option("--bound", bound, "truncation bound (default NOMSUB_BOUND or 3)");
    c->add_option("--seed", seed, "random seed");
    c->add_option("--out", out, "write output to a file");
    c->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };

  std::string suite;
  std::vector<CLI::App*> suite_cmds;
  for (const char* name : {"suite", "run_suite"}) {
    auto* c = app.add_subcommand(name, "run a law suite");
    c->add_option("name", suite, "presheaf-monoidal | nom-substitution | bridges | sheaf | renaming | lambda | all")
        ->required();
    c->add_option("--depth", depth, "λ-term depth for the lambda suite");
    c->add_flag("--timings", timings, "include per-law wall-clock times");
    common(c);
    suite_cmds.push_back(c);
  }

  std::string kind = "sub", xn, yn;
  int stage = 3;
  auto* tensor_cmd = app.add_subcommand("tensor", "class table of a nominal tensor");
  tensor_cmd->add_option("--kind", kind, "sub | cap | uniform | ren");
  tensor_cmd->add_option("X", xn)->required();
  tensor_cmd->add_option("Y", yn)->required();
  tensor_cmd->add_option("--stage", stage);
  common(tensor_cmd);

  std::string what, object, cat = "I";
  auto* dump_cmd = app.add_subcommand("dump", "dump a tensor, presheaf, hom table or orbit list as JSON");
  dump_cmd->add_option("what", what, "tensor | presheaf | hom | orbit")
      ->required()
      ->check(CLI::IsMember({"tensor", "presheaf", "hom", "orbit"}));
  dump_cmd->add_option("object", object, "corpus name; for tensors X and Y")->required();
  dump_cmd->add_option("Y", yn, "right factor of a tensor");
  dump_cmd->add_option("--cat", cat, "B | I | S | F");
  dump_cmd->add_option("--kind", kind, "tensor kind");
  dump_cmd->add_option("--stage", stage);
  common(dump_cmd);

  std::string term, sub;
  auto* lambda_cmd = app.add_subcommand("lambda", "λ-term operations");
  auto* bind_cmd = lambda_cmd->add_subcommand("bind", "capture-avoiding simultaneous substitution");
  lambda_cmd->require_subcommand(1);
  bind_cmd->add_option("term", term)->required();
  bind_cmd->add_option("--sub", sub, "a=<term>,b=<term>");
  bind_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  bind_cmd->add_option("--out", out);

  auto* cx_cmd = app.add_subcommand("counterexamples", "reproduce the two relevance counterexamples");
  common(cx_cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    for (auto* c : suite_cmds)
      if (c->parsed()) {
        SuiteConfig cfg;
        cfg.bound = bound;
        cfg.seed = seed;
        cfg.depth = depth;
        SuiteReport r = run_suite(suite, cfg);
        emit(format == "json" ? report_json(r, depth, timings).dump(2) + "\n" : report_text(r, timings), out);
        return r.ok() ? 0 : 1;
      }
    if (tensor_cmd->parsed()) {
      emit(tensor_json(kind, xn, yn, stage).dump(2) + "\n", out);
      return 0;
    }
    if (dump_cmd->parsed()) {
      json j;
      if (what == "tensor") {
        if (yn.empty()) throw UnknownObject("tensor dump needs X and Y");
        j = tensor_json(kind, object, yn, stage);
      } else if (what == "orbit") {
        j = orbit_json(object, stage);
      } else {
        std::string name = object;
        // a hom table is the representable on that stage
        if (what == "hom" && !name.empty() && name[0] != 'y') name = "y" + name;
        j = presheaf_json(presheaf_for_dump(name, category_by_name(cat), bound));
      }
      emit(j.dump(2) + "\n", out);
      return 0;
    }
    if (bind_cmd->parsed()) {
      Val t = lam::parse(term);
      auto s = lam::parse_subst(sub);
      Val r = lam::bind(t, s);
      if (format == "json")
        emit(json{{"schema_version", kSchemaVersion}, {"term", lam::print(t)}, {"result", lam::print(r)}}.dump(2) + "\n",
             out);
      else
        emit(lam::print(r) + "\n", out);
      return 0;
    }
    if (cx_cmd->parsed()) {
      SuiteReport r;
      r.suite = "counterexamples";
      for (const auto& c : {free_group_not_relevant(), hom_not_relevant()}) {
        r.counterexamples.push_back(c);
        r.add(make_law("ren.counterexample." + c.name, c.verified, 1, c.witness));
      }
      emit(format == "json" ? report_json(r, depth, false).dump(2) + "\n" : report_text(r, false), out);
      return r.ok() ? 0 : 1;
    }
  } catch (const UnknownSuite& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const UnknownObject& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const lam::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
