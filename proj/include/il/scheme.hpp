#pragma once

#include "il/formula.hpp"

#include <map>
#include <optional>
#include <string>

namespace il {

enum class SchemeId : int {
  G1, // all propositional tautologies (box/rhd subformulas as atoms)
  G2, // [](A->B) -> ([]A -> []B)
  G3, // []([]A->A) -> []A
  J3, // (A|>C)&(B|>C) -> (A|B)|>C
  J6, // []A <-> ~A |> #f
  J1, // [](A->B) -> A|>B
  J1p,      // A|>A
  J2,       // (A|>B)&(B|>C) -> A|>C
  J2plus,   // (A|>(B|C))&(B|>C) -> A|>C
  J2plusP,  // (A|>B)&((B&~C)|>C) -> A|>C
  J4,       // A|>B -> (<>A -> <>B)
  J4p,      // A|>B -> (B|>#f -> A|>#f)
  J4plus,   // [](A->B) -> (C|>A -> C|>B)
  J4plusP,  // []A -> (C|>(A->B) -> C|>B)
  J4plusPP, // []A -> (C|>B -> C|>(A&B))
  J5,       // <>A |> A
};

const std::string &scheme_name(SchemeId s);
std::optional<SchemeId> scheme_by_name(const std::string &name);

/// Metavariable substitution; keys are "A", "B", "C".
using Subst = std::map<std::string, Formula>;

/// The scheme's shape with metavariables as uppercase variables
/// (never produced by the parser). G1 has no pattern.
Formula scheme_pattern(SchemeId s);

/// Replaces uppercase variables by their images; other variables fixed.
Formula substitute(const Formula &pattern, const Subst &sub);

/// Propositional tautology test treating each maximal []- or |>-rooted
/// subformula (and each variable) as an atom. Throws if more than
/// max_atoms distinct atoms occur.
bool taut(const Formula &f, int max_atoms = 24);

/// Matching substitution of f against the scheme, or nothing. For G1 an
/// empty substitution iff taut(f).
std::optional<Subst> is_instance(const Formula &f, SchemeId s);

} // namespace il
