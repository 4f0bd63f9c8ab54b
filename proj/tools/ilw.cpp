// ilw: command-line workbench over the il library.

#include "CLI11.hpp"
#include "json.hpp"

#include "il/correspondence.hpp"
#include "il/decide.hpp"
#include "il/library.hpp"
#include "il/parse.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <omp.h>
#include <sstream>

using namespace il;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitTheorem = 0;
constexpr int kExitNonTheorem = 10;
constexpr int kExitUnknown = 20;
constexpr int kExitUsage = 64;
constexpr int kExitFile = 66;

struct FileError {
  std::string path;
};

std::string slurp(const std::string &path) {
  std::ifstream in(path);
  if (!in.good()) throw FileError{path};
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

bool g_json = false;

void emit(const json &j, const std::string &text) {
  if (g_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

const Logic &logic_arg(const std::string &name) {
  const Logic *l = logic_by_name(name);
  if (!l) {
    std::cerr << "unknown logic: " << name << "\n";
    std::exit(kExitUsage);
  }
  return *l;
}

SchemeId scheme_arg(const std::string &name) {
  if (auto s = scheme_by_name(name)) return *s;
  std::cerr << "unknown scheme: " << name << "\n";
  std::exit(kExitUsage);
}

ConditionId condition_arg(const std::string &scheme, bool gen) {
  SchemeId s = scheme_arg(scheme);
  switch (s) {
  case SchemeId::J1: return gen ? ConditionId::G_J1 : ConditionId::V_J1;
  case SchemeId::J2: return gen ? ConditionId::G_J2 : ConditionId::V_J2;
  case SchemeId::J2plus: return gen ? ConditionId::G_J2plus : ConditionId::V_J2;
  case SchemeId::J4: return gen ? ConditionId::G_J4 : ConditionId::V_J4;
  case SchemeId::J4plus: return gen ? ConditionId::G_J4plus : ConditionId::V_J4;
  case SchemeId::J5: return gen ? ConditionId::G_J5 : ConditionId::V_J5;
  default:
    std::cerr << "no frame condition for scheme " << scheme << "\n";
    std::exit(kExitUsage);
  }
}

json worldset_json(const std::vector<std::string> &worlds, WorldSet s) {
  json a = json::array();
  for (std::size_t i = 0; i < worlds.size(); ++i)
    if ((s >> i) & 1) a.push_back(worlds[i]);
  return a;
}

json valuation_json(const std::vector<std::string> &worlds,
                    const std::map<std::string, WorldSet> &val) {
  json v = json::object();
  for (const auto &[p, s] : val) v[p] = worldset_json(worlds, s);
  return v;
}

json countermodel_json(const Countermodel &cm) {
  json j;
  if (cm.vmodel) {
    j["class"] = "veltman";
    j["model"] = json::parse(veltman_model_to_json(*cm.vmodel));
    j["world"] = cm.vmodel->frame.worlds[static_cast<std::size_t>(cm.world)];
  } else {
    j["class"] = "gen";
    j["model"] = json::parse(gen_model_to_json(*cm.gmodel));
    j["world"] = cm.gmodel->frame.worlds[static_cast<std::size_t>(cm.world)];
  }
  return j;
}

bool is_gen_file(const json &j, const std::string &cls) {
  if (cls == "gen") return true;
  if (cls == "veltman") return false;
  // Veltman files list S_x as pairs, generalized ones as per-world maps.
  if (j.contains("S") && j["S"].is_object())
    for (const auto &el : j["S"].items()) return el.value().is_object();
  return false;
}

int cmd_parse(const std::string &formula) {
  Formula f = parse(formula);
  emit(json{{"input", formula}, {"formula", print(f)}}, print(f) + "\n");
  return 0;
}

int cmd_check_proof(const std::string &logic, const std::string &path) {
  const Logic &l = logic_arg(logic);
  Proof p = proof_from_text(slurp(path));
  ProofVerdict v = check_proof(l, p);
  json j{{"logic", l.name},
         {"lines", p.lines.size()},
         {"ok", v.ok}};
  std::ostringstream t;
  if (v.ok) {
    j["conclusion"] = print(p.conclusion());
    t << "ok: " << p.lines.size() << " lines, conclusion "
      << print(p.conclusion()) << "\n";
  } else {
    j["line"] = v.line + 1;
    j["reason"] = v.reason;
    t << "line " << v.line + 1 << ": " << v.reason << "\n";
  }
  emit(j, t.str());
  return v.ok ? 0 : 1;
}

int cmd_eval(const std::string &path, const std::string &formula,
             const std::string &cls, const std::string &world) {
  Formula f = parse(formula);
  std::string text = slurp(path);
  json raw = json::parse(text);
  std::vector<std::string> worlds;
  WorldSet sat = 0;
  if (is_gen_file(raw, cls)) {
    GenModel m = gen_model_from_json(text);
    worlds = m.frame.worlds;
    sat = gen_eval_set(m, f);
  } else {
    VeltmanModel m = veltman_model_from_json(text);
    worlds = m.frame.worlds;
    sat = eval_set(m, f);
  }
  json j{{"formula", print(f)}, {"true_at", worldset_json(worlds, sat)}};
  std::ostringstream t;
  int rc = 0;
  if (!world.empty()) {
    auto it = std::find(worlds.begin(), worlds.end(), world);
    if (it == worlds.end()) {
      std::cerr << "unknown world: " << world << "\n";
      return kExitUsage;
    }
    bool b = (sat >> (it - worlds.begin())) & 1;
    j["world"] = world;
    j["value"] = b;
    t << (b ? "true" : "false") << "\n";
    rc = b ? 0 : 1;
  } else {
    t << print(f) << " true at:";
    for (std::size_t i = 0; i < worlds.size(); ++i)
      if ((sat >> i) & 1) t << " " << worlds[i];
    t << "\n";
  }
  emit(j, t.str());
  return rc;
}

int cmd_valid(const std::string &path, const std::string &formula,
              const std::string &cls, std::uint64_t budget) {
  Formula f = parse(formula);
  std::string text = slurp(path);
  json raw = json::parse(text);
  json j{{"formula", print(f)}};
  std::ostringstream t;
  bool ok;
  if (is_gen_file(raw, cls)) {
    GenFrame fr = gen_model_from_json(text).frame;
    auto bad = gen_falsifying_valuation(fr, f, budget);
    ok = !bad.has_value();
    if (bad) j["falsifying"] = valuation_json(fr.worlds, *bad);
  } else {
    VeltmanFrame fr = veltman_model_from_json(text).frame;
    auto bad = falsifying_valuation(fr, f, budget);
    ok = !bad.has_value();
    if (bad) j["falsifying"] = valuation_json(fr.worlds, *bad);
  }
  j["valid"] = ok;
  t << (ok ? "valid" : "not valid") << "\n";
  emit(j, t.str());
  return ok ? 0 : 1;
}

int cmd_frame_check(const std::string &path, const std::string &cls) {
  std::string text = slurp(path);
  json raw = json::parse(text);
  std::string err = is_gen_file(raw, cls)
                        ? check_gen_frame(gen_model_from_json(text).frame)
                        : check_frame(veltman_model_from_json(text).frame);
  emit(json{{"ok", err.empty()}, {"error", err}},
       err.empty() ? "ok\n" : err + "\n");
  return err.empty() ? 0 : 1;
}

int cmd_correspond(const std::string &path, const std::string &scheme,
                   const std::string &cls, std::uint64_t budget) {
  bool gen = cls != "veltman";
  ConditionId c = condition_arg(scheme, gen);
  std::string text = slurp(path);
  CorrespondenceReport rep =
      gen ? correspondence_audit(gen_model_from_json(text).frame, c, budget)
          : correspondence_audit(veltman_model_from_json(text).frame, c, budget);
  json j{{"scheme", scheme},
         {"condition", condition_name(c)},
         {"condition_holds", rep.condition_holds},
         {"instance_valid", rep.instance_valid},
         {"agree", rep.agree()}};
  std::ostringstream t;
  t << condition_name(c) << ": " << (rep.condition_holds ? "true" : "false")
    << ", instance " << print(characteristic_instance(c)) << ": "
    << (rep.instance_valid ? "valid" : "not valid") << "\n";
  emit(j, t.str());
  return rep.agree() ? 0 : 1;
}

int cmd_refute(const std::string &logic, const std::string &formula,
               int worlds, std::uint64_t budget) {
  const Logic &l = logic_arg(logic);
  Formula f = parse(formula);
  bool exhausted = false;
  auto cm = bounded_refute(l, f, worlds, budget, &exhausted);
  json j{{"logic", l.name}, {"formula", print(f)}, {"refuted", cm.has_value()}};
  std::ostringstream t;
  if (cm) {
    json cj = countermodel_json(*cm);
    j["countermodel"] = cj;
    t << cj["model"].dump(2) << "\nrefuted at world "
      << cj["world"].get<std::string>() << "\n";
  } else {
    j["exhausted"] = exhausted;
    t << "no countermodel within " << worlds << " worlds"
      << (exhausted ? " (search exhausted)" : " (budget cut)") << "\n";
  }
  emit(j, t.str());
  return cm ? kExitNonTheorem : kExitUnknown;
}

int cmd_decide(const std::string &logic, const std::string &formula,
               const std::string &mode) {
  const Logic &l = logic_arg(logic);
  Formula f = parse(formula);
  DecideMode m;
  if (mode == "exact") {
    m = DecideMode::exact_mode();
  } else if (mode.rfind("exact:", 0) == 0) {
    m = DecideMode::exact_mode(std::stoi(mode.substr(6)));
  } else if (mode.rfind("practical:", 0) == 0) {
    m = DecideMode::practical(std::stoi(mode.substr(10)));
  } else {
    std::cerr << "mode must be practical:<n> or exact[:<n>]\n";
    return kExitUsage;
  }
  json j{{"logic", l.name}, {"formula", print(f)}, {"mode", mode}};
  try {
    Decision d = decide(l, f, m);
    const char *v = d.verdict == Verdict::theorem      ? "theorem"
                    : d.verdict == Verdict::non_theorem ? "non-theorem"
                                                        : "unknown";
    j["verdict"] = v;
    j["note"] = d.note;
    if (d.fmp_bound) j["fmp_bound"] = d.fmp_bound;
    std::ostringstream t;
    t << v << ": " << d.note << "\n";
    if (d.cm) {
      json cj = countermodel_json(*d.cm);
      j["countermodel"] = cj;
      t << cj["model"].dump(2) << "\nfails at world "
        << cj["world"].get<std::string>() << "\n";
    }
    emit(j, t.str());
    return d.verdict == Verdict::theorem      ? kExitTheorem
           : d.verdict == Verdict::non_theorem ? kExitNonTheorem
                                               : kExitUnknown;
  } catch (const ExactBoundError &e) {
    j["verdict"] = "unknown";
    j["note"] = e.what();
    j["fmp_bound"] = e.bound;
    emit(j, std::string("unknown: ") + e.what() + "\n");
    return kExitUnknown;
  }
}

int cmd_canonical(const std::string &logic, const std::string &formula,
                  int ceiling) {
  const Logic &l = logic_arg(logic);
  Formula f = parse(formula);
  ExactOracle o(ceiling);
  json j{{"logic", l.name}, {"formula", print(f)}};
  try {
    CanonicalModel m = canonical_model(l, f, o);
    CanonicalAudit a = audit_canonical(l, m, f);
    j["worlds"] = m.world_gamma.size();
    j["root"] = m.vmodel ? m.vmodel->frame.worlds[static_cast<std::size_t>(m.root)]
                         : m.gmodel->frame.worlds[static_cast<std::size_t>(m.root)];
    j["audit"] = json{{"frame", a.frame_ok},
                      {"conditions", a.conditions_ok},
                      {"truth_lemma", a.truth_ok},
                      {"root_refutes", a.root_refutes}};
    j["model"] = m.vmodel ? json::parse(veltman_model_to_json(*m.vmodel))
                          : json::parse(gen_model_to_json(*m.gmodel));
    std::ostringstream t;
    t << m.world_gamma.size() << " worlds, root " << j["root"].get<std::string>()
      << ", audit " << (a.all() ? "passed" : "FAILED: " + a.detail) << "\n";
    emit(j, t.str());
    return a.all() ? kExitNonTheorem : 1;
  } catch (const ProvedError &) {
    j["verdict"] = "theorem";
    emit(j, "theorem: no refuting maximal set\n");
    return kExitTheorem;
  } catch (const ExactBoundError &e) {
    j["verdict"] = "unknown";
    j["note"] = e.what();
    j["fmp_bound"] = e.bound;
    emit(j, std::string("unknown: ") + e.what() + "\n");
    return kExitUnknown;
  }
}

int cmd_library_verify() {
  const auto &lib = theorem_library();
  json entries = json::array();
  int bad = 0;
  std::ostringstream t;
  for (const auto &e : lib) {
    const Logic &l = logic_arg(e.logic);
    ProofVerdict v = check_proof(l, e.proof);
    // The text format must round-trip to an equally checkable proof.
    bool rt = v.ok && check_proof(l, proof_from_text(proof_to_text(e.proof))).ok;
    bool ok = v.ok && rt;
    bad += !ok;
    entries.push_back(json{{"name", e.name},
                           {"logic", e.logic},
                           {"lines", e.proof.lines.size()},
                           {"ok", ok}});
    t << (ok ? "ok " : "FAIL ") << e.name << " (" << e.logic << ", "
      << e.proof.lines.size() << " lines)";
    if (!v.ok) t << ": line " << v.line + 1 << " " << v.reason;
    t << "\n";
  }
  t << lib.size() - bad << "/" << lib.size() << " verified\n";
  emit(json{{"entries", entries}, {"total", lib.size()}, {"failed", bad}},
       t.str());
  return bad ? 1 : 0;
}

int cmd_reproduce(const std::string &which, std::string frame_path) {
  struct Case {
    const char *file;
    std::vector<ConditionId> holds;
    ConditionId fails;
  };
  Case c;
  if (which == "icp1")
    c = {"icp1.json",
         {ConditionId::G_J2, ConditionId::G_J4plus, ConditionId::G_J5},
         ConditionId::G_J2plus};
  else if (which == "icp2")
    c = {"icp2.json",
         {ConditionId::G_J1, ConditionId::G_J4, ConditionId::G_J5},
         ConditionId::G_J4plus};
  else {
    std::cerr << "reproduce takes icp1 or icp2\n";
    return kExitUsage;
  }
  if (frame_path.empty()) frame_path = std::string(DATA_DIR) + "/" + c.file;
  GenFrame f = gen_model_from_json(slurp(frame_path)).frame;
  json j{{"case", which}, {"frame", frame_path}};
  std::ostringstream t;
  bool ok = true;
  json conds = json::object();
  for (ConditionId cd : c.holds) {
    bool b = gen_condition(f, cd);
    ok = ok && b;
    conds[condition_name(cd)] = b;
    t << condition_name(cd) << ": " << (b ? "true" : "false") << "\n";
  }
  bool fb = gen_condition(f, c.fails);
  ok = ok && !fb;
  conds[condition_name(c.fails)] = fb;
  t << condition_name(c.fails) << ": " << (fb ? "true" : "false") << "\n";
  j["conditions"] = conds;
  Formula inst = characteristic_instance(c.fails);
  auto bad = gen_falsifying_valuation(f, inst);
  ok = ok && bad.has_value();
  j["instance"] = print(inst);
  if (bad) {
    j["refuting_valuation"] = valuation_json(f.worlds, *bad);
    t << print(inst) << " fails under " << j["refuting_valuation"].dump()
      << "\n";
  } else {
    t << print(inst) << " unexpectedly valid\n";
  }
  j["ok"] = ok;
  emit(j, t.str());
  return ok ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"workbench for the interpretability logics below IL"};
  app.require_subcommand(1);

  std::string format = "text";
  int threads = 0;
  unsigned seed = 0;
  app.add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", threads, "OpenMP thread count (0 = default)");
  app.add_option("--seed", seed, "seed for randomized subcommands");

  std::string formula, logic, frame, model, proof, mode = "practical:3",
                                                  scheme, cls = "auto", world;
  int worlds = 4, ceiling = 3;
  std::uint64_t budget = 1ull << 20;
  std::uint64_t vbudget = 1ull << 24;

  auto *c_parse = app.add_subcommand("parse", "parse and reprint a formula");
  c_parse->add_option("--formula", formula)->required();

  auto *c_proof = app.add_subcommand("check-proof", "check a Hilbert proof");
  c_proof->add_option("--logic", logic)->required();
  c_proof->add_option("--proof", proof)->required();

  auto *c_eval = app.add_subcommand("eval", "evaluate a formula in a model");
  c_eval->add_option("--model", model)->required();
  c_eval->add_option("--formula", formula)->required();
  c_eval->add_option("--class", cls)->check(CLI::IsMember({"auto", "veltman", "gen"}));
  c_eval->add_option("--world", world);

  auto *c_valid = app.add_subcommand("valid", "frame validity of a formula");
  c_valid->add_option("--frame", frame)->required();
  c_valid->add_option("--formula", formula)->required();
  c_valid->add_option("--class", cls)->check(CLI::IsMember({"auto", "veltman", "gen"}));
  c_valid->add_option("--budget", vbudget);

  auto *c_fc = app.add_subcommand("frame-check", "well-formedness of a frame");
  c_fc->add_option("--frame", frame)->required();
  c_fc->add_option("--class", cls)->check(CLI::IsMember({"auto", "veltman", "gen"}));

  auto *c_corr = app.add_subcommand(
      "correspond", "frame condition vs characteristic instance");
  c_corr->add_option("--frame", frame)->required();
  c_corr->add_option("--scheme", scheme)->required();
  c_corr->add_option("--class", cls)->check(CLI::IsMember({"veltman", "gen"}))
      ->required();
  c_corr->add_option("--budget", vbudget);

  auto *c_ref = app.add_subcommand("refute", "bounded countermodel search");
  c_ref->add_option("--logic", logic)->required();
  c_ref->add_option("--formula", formula)->required();
  c_ref->add_option("--worlds", worlds);
  c_ref->add_option("--budget", budget);

  auto *c_dec = app.add_subcommand("decide", "provability in a listed logic");
  c_dec->add_option("--logic", logic)->required();
  c_dec->add_option("--formula", formula)->required();
  c_dec->add_option("--mode", mode, "practical:<n> or exact[:<n>]");

  auto *c_can = app.add_subcommand("canonical",
                                   "finite canonical model of a non-theorem");
  c_can->add_option("--logic", logic)->required();
  c_can->add_option("--formula", formula)->required();
  c_can->add_option("--ceiling", ceiling, "oracle search ceiling (worlds)");

  auto *c_lib = app.add_subcommand("library-verify",
                                   "re-check every stored derivation");

  std::string which;
  auto *c_rep = app.add_subcommand("reproduce",
                                   "re-run a stored frame analysis");
  c_rep->add_option("case", which, "icp1 or icp2")->required();
  c_rep->add_option("--frame", frame, "override the shipped frame file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  g_json = format == "json";
  if (threads > 0) omp_set_num_threads(threads);

  try {
    if (c_parse->parsed()) return cmd_parse(formula);
    if (c_proof->parsed()) return cmd_check_proof(logic, proof);
    if (c_eval->parsed()) return cmd_eval(model, formula, cls, world);
    if (c_valid->parsed()) return cmd_valid(frame, formula, cls, vbudget);
    if (c_fc->parsed()) return cmd_frame_check(frame, cls);
    if (c_corr->parsed()) return cmd_correspond(frame, scheme, cls, vbudget);
    if (c_ref->parsed()) return cmd_refute(logic, formula, worlds, budget);
    if (c_dec->parsed()) return cmd_decide(logic, formula, mode);
    if (c_can->parsed()) return cmd_canonical(logic, formula, ceiling);
    if (c_lib->parsed()) return cmd_library_verify();
    if (c_rep->parsed()) return cmd_reproduce(which, frame);
  } catch (const FileError &e) {
    std::cerr << "cannot read " << e.path << "\n";
    return kExitFile;
  } catch (const std::exception &e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
