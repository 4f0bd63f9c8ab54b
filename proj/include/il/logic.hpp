#pragma once

#include "il/scheme.hpp"

#include <set>
#include <string>
#include <vector>

namespace il {

/// Frame-condition identifiers used by the correspondence module.
/// V_* conditions live on Veltman frames, G_* on generalized frames.
enum class ConditionId {
  V_J1,   // xRy => y S_x y
  V_J4,   // y S_x z => xRz            (shared by J4, J4+, J2, J2+)
  V_J2,   // V_J4 and every S_x transitive
  V_J5,   // xRy & yRz => y S_x z
  G_J1,   // xRy => y S_x {y}
  G_J4,   // y S_x V => some z in V with xRz
  G_J4plus, // y S_x V => y S_x (V n R[x])
  G_J2,   // G_J4 and the union-of-choices condition
  G_J2plus, // G_J4 and the split union-of-choices condition
  G_J5,   // xRy & yRz => y S_x {z}
};

std::string condition_name(ConditionId c);

enum class CompleteClass { veltman, generalized };

struct Logic {
  std::string name;
  /// Schemes added on top of the IL- base, as displayed in the name.
  std::vector<SchemeId> added;
  /// Every scheme usable as an axiom: base, added, and their aliases.
  std::set<SchemeId> axioms;
  /// Added schemes plus everything provable from them (alias closure
  /// and the cross-scheme derivations); drives the consequence engine.
  std::set<SchemeId> derived;
  CompleteClass complete_class;
  /// Conditions characterizing the logic's frames within its class.
  std::vector<ConditionId> frame_conditions;

  bool has_axiom(SchemeId s) const { return axioms.count(s) != 0; }
  bool proves_scheme(SchemeId s) const { return derived.count(s) != 0; }
};

/// The twenty registered logics: twelve complete for Veltman frames,
/// eight complete only for generalized frames.
const std::vector<Logic> &registry();

/// Lookup by name ("IL-", "IL-(J1,J4+)", "CL", "IL"; scheme order in
/// the parenthesized list is normalized).
const Logic *logic_by_name(const std::string &name);

} // namespace il
