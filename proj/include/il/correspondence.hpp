#pragma once

#include "il/genveltman.hpp"
#include "il/logic.hpp"
#include "il/veltman.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace il {

/// The instance whose validity on a fixed frame is equivalent to the
/// structural condition. Uses exactly the variables p, q, r.
Formula characteristic_instance(ConditionId c);

/// Structural checks. veltman_condition accepts V_* ids only,
/// gen_condition accepts G_* ids only; both throw std::invalid_argument
/// otherwise. Set quantifiers in gen_condition range over stored
/// generators (sound by monotonicity of S_x); gen_condition_powerset
/// evaluates the literal quantified statement over the full powerset,
/// for cross-checking on small frames.
bool veltman_condition(const VeltmanFrame &f, ConditionId c);
bool gen_condition(const GenFrame &f, ConditionId c);
bool gen_condition_powerset(const GenFrame &f, ConditionId c);

/// Does the frame satisfy every condition attached to the logic?
/// Throws if the logic's completeness class does not match the frame
/// class.
bool satisfies_logic_conditions(const VeltmanFrame &f, const Logic &l);
bool satisfies_logic_conditions(const GenFrame &f, const Logic &l);

struct CorrespondenceReport {
  ConditionId cond;
  bool condition_holds = false;
  bool instance_valid = false;
  // set on disagreement: a valuation separating the two
  std::map<std::string, WorldSet> separating;

  bool agree() const { return condition_holds == instance_valid; }
};

CorrespondenceReport correspondence_audit(const VeltmanFrame &f, ConditionId c,
                                          std::uint64_t budget = 1ull << 24);
CorrespondenceReport correspondence_audit(const GenFrame &f, ConditionId c,
                                          std::uint64_t budget = 1ull << 24);

struct SweepStats {
  std::uint64_t frames = 0;
  std::uint64_t witness_checks = 0;
  std::uint64_t full_checks = 0;
  std::uint64_t disagreements = 0;
};

/// Audits condition against instance validity over every Veltman frame
/// with at most max_n worlds and R listed in increasing order. Every
/// finite frame is isomorphic to one in that form, so the enumeration
/// covers all frames up to isomorphism. The six instances J1, J2, J2+,
/// J4, J4+, J5 are each audited against their condition (J4/J4+ share
/// V_J4, J2/J2+ share V_J2). Condition failures are confirmed cheaply
/// by evaluating a witness valuation built from the failing tuple; a
/// full validity search runs whenever the condition holds, and on every
/// full_every-th frame as a cross-check of the witness shortcut.
SweepStats sweep_veltman_frames(int max_n, bool parallel,
                                std::uint64_t full_every = 100000);

/// Audits `count` pseudo-random generalized frames with n worlds and at
/// most two generators per S_x pair, full validity search throughout.
SweepStats sample_gen_frames(int count, int n, unsigned seed);

} // namespace il
