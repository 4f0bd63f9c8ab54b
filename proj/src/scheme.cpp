#include "il/scheme.hpp"

#include "il/parse.hpp"

#include <array>
#include <functional>
#include <stdexcept>
#include <vector>

namespace il {

namespace {

struct SchemeInfo {
  SchemeId id;
  std::string name;
};

const std::array<SchemeInfo, 16> kSchemes = {{
    {SchemeId::G1, "G1"},
    {SchemeId::G2, "G2"},
    {SchemeId::G3, "G3"},
    {SchemeId::J3, "J3"},
    {SchemeId::J6, "J6"},
    {SchemeId::J1, "J1"},
    {SchemeId::J1p, "J1'"},
    {SchemeId::J2, "J2"},
    {SchemeId::J2plus, "J2+"},
    {SchemeId::J2plusP, "J2+'"},
    {SchemeId::J4, "J4"},
    {SchemeId::J4p, "J4'"},
    {SchemeId::J4plus, "J4+"},
    {SchemeId::J4plusP, "J4+'"},
    {SchemeId::J4plusPP, "J4+''"},
    {SchemeId::J5, "J5"},
}};

} // namespace

const std::string &scheme_name(SchemeId s) {
  for (const auto &info : kSchemes)
    if (info.id == s) return info.name;
  throw std::logic_error("unknown scheme");
}

std::optional<SchemeId> scheme_by_name(const std::string &name) {
  for (const auto &info : kSchemes)
    if (info.name == name) return info.id;
  return std::nullopt;
}

Formula scheme_pattern(SchemeId s) {
  Formula A = var("A"), B = var("B"), C = var("C");
  switch (s) {
  case SchemeId::G1:
    throw std::logic_error("G1 has no pattern");
  case SchemeId::G2:
    return imp(box(imp(A, B)), imp(box(A), box(B)));
  case SchemeId::G3:
    return imp(box(imp(box(A), A)), box(A));
  case SchemeId::J3:
    return imp(conj(rhd(A, C), rhd(B, C)), rhd(disj(A, B), C));
  case SchemeId::J6:
    return iff(box(A), rhd(neg(A), bot()));
  case SchemeId::J1:
    return imp(box(imp(A, B)), rhd(A, B));
  case SchemeId::J1p:
    return rhd(A, A);
  case SchemeId::J2:
    return imp(conj(rhd(A, B), rhd(B, C)), rhd(A, C));
  case SchemeId::J2plus:
    return imp(conj(rhd(A, disj(B, C)), rhd(B, C)), rhd(A, C));
  case SchemeId::J2plusP:
    return imp(conj(rhd(A, B), rhd(conj(B, neg(C)), C)), rhd(A, C));
  case SchemeId::J4:
    return imp(rhd(A, B), imp(dia(A), dia(B)));
  case SchemeId::J4p:
    return imp(rhd(A, B), imp(rhd(B, bot()), rhd(A, bot())));
  case SchemeId::J4plus:
    return imp(box(imp(A, B)), imp(rhd(C, A), rhd(C, B)));
  case SchemeId::J4plusP:
    return imp(box(A), imp(rhd(C, imp(A, B)), rhd(C, B)));
  case SchemeId::J4plusPP:
    return imp(box(A), imp(rhd(C, B), rhd(C, conj(A, B))));
  case SchemeId::J5:
    return rhd(dia(A), A);
  }
  throw std::logic_error("unknown scheme");
}

namespace {

bool is_metavar(const Formula &f) {
  return f->kind() == Kind::Var && !f->name().empty() &&
         f->name()[0] >= 'A' && f->name()[0] <= 'Z';
}

bool match_rec(const Formula &pat, const Formula &f, Subst &sub) {
  if (is_metavar(pat)) {
    auto it = sub.find(pat->name());
    if (it != sub.end()) return equal(it->second, f);
    sub.emplace(pat->name(), f);
    return true;
  }
  if (pat->kind() != f->kind()) return false;
  if (pat->kind() == Kind::Var) return pat->name() == f->name();
  if (pat->left() && !match_rec(pat->left(), f->left(), sub)) return false;
  if (pat->right() && !match_rec(pat->right(), f->right(), sub)) return false;
  return true;
}

// Collects the propositional atoms of f (variables and maximal []-
// or |>-rooted subformulas), assigning indices in first-visit order.
void collect_atoms(const Formula &f, std::vector<Formula> &atoms) {
  switch (f->kind()) {
  case Kind::Top:
  case Kind::Bot:
    return;
  case Kind::Neg:
    collect_atoms(f->left(), atoms);
    return;
  case Kind::And:
  case Kind::Or:
  case Kind::Imp:
    collect_atoms(f->left(), atoms);
    collect_atoms(f->right(), atoms);
    return;
  default:
    for (const auto &a : atoms)
      if (equal(a, f)) return;
    atoms.push_back(f);
    return;
  }
}

bool eval_prop(const Formula &f, const std::vector<Formula> &atoms,
               std::uint64_t assignment) {
  switch (f->kind()) {
  case Kind::Top:
    return true;
  case Kind::Bot:
    return false;
  case Kind::Neg:
    return !eval_prop(f->left(), atoms, assignment);
  case Kind::And:
    return eval_prop(f->left(), atoms, assignment) &&
           eval_prop(f->right(), atoms, assignment);
  case Kind::Or:
    return eval_prop(f->left(), atoms, assignment) ||
           eval_prop(f->right(), atoms, assignment);
  case Kind::Imp:
    return !eval_prop(f->left(), atoms, assignment) ||
           eval_prop(f->right(), atoms, assignment);
  default:
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (equal(atoms[i], f)) return (assignment >> i) & 1;
    throw std::logic_error("atom not collected");
  }
}

} // namespace

Formula substitute(const Formula &pattern, const Subst &sub) {
  if (is_metavar(pattern)) {
    auto it = sub.find(pattern->name());
    if (it == sub.end())
      throw std::invalid_argument("unbound metavariable " + pattern->name());
    return it->second;
  }
  switch (pattern->kind()) {
  case Kind::Var:
  case Kind::Top:
  case Kind::Bot:
    return pattern;
  case Kind::Neg:
    return neg(substitute(pattern->left(), sub));
  case Kind::Box:
    return box(substitute(pattern->left(), sub));
  case Kind::And:
    return conj(substitute(pattern->left(), sub),
                substitute(pattern->right(), sub));
  case Kind::Or:
    return disj(substitute(pattern->left(), sub),
                substitute(pattern->right(), sub));
  case Kind::Imp:
    return imp(substitute(pattern->left(), sub),
               substitute(pattern->right(), sub));
  case Kind::Rhd:
    return rhd(substitute(pattern->left(), sub),
               substitute(pattern->right(), sub));
  }
  throw std::logic_error("unknown kind");
}

bool taut(const Formula &f, int max_atoms) {
  std::vector<Formula> atoms;
  collect_atoms(f, atoms);
  if (static_cast<int>(atoms.size()) > max_atoms)
    throw std::runtime_error("tautology check: too many atoms in " + print(f));
  std::uint64_t n = 1ull << atoms.size();
  for (std::uint64_t a = 0; a < n; ++a)
    if (!eval_prop(f, atoms, a)) return false;
  return true;
}

std::optional<Subst> is_instance(const Formula &f, SchemeId s) {
  if (s == SchemeId::G1) {
    if (taut(f)) return Subst{};
    return std::nullopt;
  }
  Subst sub;
  if (match_rec(scheme_pattern(s), f, sub)) return sub;
  return std::nullopt;
}

} // namespace il
