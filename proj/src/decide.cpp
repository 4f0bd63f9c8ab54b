#include "il/decide.hpp"

namespace il {

Decision decide(const Logic &l, const Formula &a, DecideMode mode) {
  Decision d;
  d.fmp_bound = fmp_world_bound(a);

  if (!mode.exact) {
    if (auto cm = bounded_refute(l, a, mode.budget)) {
      d.verdict = Verdict::non_theorem;
      d.cm = std::move(cm);
      d.note = "countermodel found by bounded search";
    } else {
      d.verdict = Verdict::unknown;
      d.note = "no countermodel within " + std::to_string(mode.budget) +
               " worlds";
    }
    return d;
  }

  auto ctx = std::make_shared<AdequateContext>(adequate_closure({a}));
  ConsequenceEngine engine(l, ctx);
  if (engine.proves(a)) {
    d.verdict = Verdict::theorem;
    d.note = "clause-engine certificate";
    return d;
  }
  if (auto cm = bounded_refute(l, a, mode.budget)) {
    d.verdict = Verdict::non_theorem;
    d.cm = std::move(cm);
    d.note = "countermodel found by bounded search";
    return d;
  }
  // Neither certificate within the search ceiling: settle the question
  // with the canonical construction over exactly K_L, or fail loudly.
  ExactOracle o(mode.budget);
  try {
    CanonicalModel m = canonical_model(l, a, o);
    Countermodel cm;
    cm.vmodel = m.vmodel;
    cm.gmodel = m.gmodel;
    cm.world = m.root;
    d.verdict = Verdict::non_theorem;
    d.cm = std::move(cm);
    d.note = "canonical construction";
  } catch (const ProvedError &) {
    d.verdict = Verdict::theorem;
    d.note = "every member of K_L contains the formula";
  }
  return d;
}

} // namespace il
