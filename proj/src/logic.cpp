#include "il/logic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace il {

std::string condition_name(ConditionId c) {
  switch (c) {
  case ConditionId::V_J1: return "V_J1";
  case ConditionId::V_J4: return "V_J4";
  case ConditionId::V_J2: return "V_J2";
  case ConditionId::V_J5: return "V_J5";
  case ConditionId::G_J1: return "G_J1";
  case ConditionId::G_J4: return "G_J4";
  case ConditionId::G_J4plus: return "G_J4plus";
  case ConditionId::G_J2: return "G_J2";
  case ConditionId::G_J2plus: return "G_J2plus";
  case ConditionId::G_J5: return "G_J5";
  }
  throw std::logic_error("unknown condition");
}

namespace {

void add_aliases(std::set<SchemeId> &s) {
  if (s.count(SchemeId::J1) || s.count(SchemeId::J1p)) {
    s.insert(SchemeId::J1);
    s.insert(SchemeId::J1p);
  }
  if (s.count(SchemeId::J4) || s.count(SchemeId::J4p)) {
    s.insert(SchemeId::J4);
    s.insert(SchemeId::J4p);
  }
  if (s.count(SchemeId::J4plus) || s.count(SchemeId::J4plusP) ||
      s.count(SchemeId::J4plusPP)) {
    s.insert(SchemeId::J4plus);
    s.insert(SchemeId::J4plusP);
    s.insert(SchemeId::J4plusPP);
  }
  if (s.count(SchemeId::J2plus) || s.count(SchemeId::J2plusP)) {
    s.insert(SchemeId::J2plus);
    s.insert(SchemeId::J2plusP);
  }
}

// Closure of the added schemes under alias equivalence and the
// cross-scheme derivations: J2+ proves J2 and J4+; J4+ proves J4;
// J2 proves J4; J1 with J2 proves J2+.
std::set<SchemeId> derived_closure(const std::vector<SchemeId> &added) {
  std::set<SchemeId> s(added.begin(), added.end());
  for (bool changed = true; changed;) {
    std::size_t before = s.size();
    add_aliases(s);
    if (s.count(SchemeId::J2plus)) {
      s.insert(SchemeId::J2);
      s.insert(SchemeId::J4plus);
    }
    if (s.count(SchemeId::J4plus)) s.insert(SchemeId::J4);
    if (s.count(SchemeId::J2)) s.insert(SchemeId::J4);
    if (s.count(SchemeId::J1) && s.count(SchemeId::J2))
      s.insert(SchemeId::J2plus);
    changed = s.size() != before;
  }
  return s;
}

Logic make_logic(std::string name, std::vector<SchemeId> added,
                 CompleteClass cls) {
  Logic l;
  l.name = std::move(name);
  l.added = std::move(added);
  l.axioms = {SchemeId::G1, SchemeId::G2, SchemeId::G3, SchemeId::J3,
              SchemeId::J6};
  std::set<SchemeId> with_aliases(l.added.begin(), l.added.end());
  add_aliases(with_aliases);
  l.axioms.insert(with_aliases.begin(), with_aliases.end());
  l.derived = derived_closure(l.added);
  l.complete_class = cls;

  const auto &d = l.derived;
  if (cls == CompleteClass::veltman) {
    if (d.count(SchemeId::J1)) l.frame_conditions.push_back(ConditionId::V_J1);
    if (d.count(SchemeId::J2))
      l.frame_conditions.push_back(ConditionId::V_J2);
    else if (d.count(SchemeId::J4) || d.count(SchemeId::J4plus))
      l.frame_conditions.push_back(ConditionId::V_J4);
    if (d.count(SchemeId::J5)) l.frame_conditions.push_back(ConditionId::V_J5);
  } else {
    if (d.count(SchemeId::J1)) l.frame_conditions.push_back(ConditionId::G_J1);
    if (d.count(SchemeId::J2plus))
      l.frame_conditions.push_back(ConditionId::G_J2plus);
    else if (d.count(SchemeId::J2))
      l.frame_conditions.push_back(ConditionId::G_J2);
    else if (d.count(SchemeId::J4))
      l.frame_conditions.push_back(ConditionId::G_J4);
    if (d.count(SchemeId::J4plus))
      l.frame_conditions.push_back(ConditionId::G_J4plus);
    if (d.count(SchemeId::J5)) l.frame_conditions.push_back(ConditionId::G_J5);
  }
  return l;
}

std::vector<Logic> build_registry() {
  using S = SchemeId;
  const auto V = CompleteClass::veltman;
  const auto G = CompleteClass::generalized;
  std::vector<Logic> r;
  // Complete with respect to Veltman frames.
  r.push_back(make_logic("IL-", {}, V));
  r.push_back(make_logic("IL-(J1)", {S::J1}, V));
  r.push_back(make_logic("IL-(J4+)", {S::J4plus}, V));
  r.push_back(make_logic("IL-(J5)", {S::J5}, V));
  r.push_back(make_logic("IL-(J1,J4+)", {S::J1, S::J4plus}, V));
  r.push_back(make_logic("IL-(J1,J5)", {S::J1, S::J5}, V));
  r.push_back(make_logic("IL-(J4+,J5)", {S::J4plus, S::J5}, V));
  r.push_back(make_logic("IL-(J2+)", {S::J2plus}, V));
  r.push_back(make_logic("IL-(J1,J4+,J5)", {S::J1, S::J4plus, S::J5}, V));
  r.push_back(make_logic("IL-(J2+,J5)", {S::J2plus, S::J5}, V));
  r.push_back(make_logic("CL", {S::J1, S::J2}, V));
  r.push_back(make_logic("IL", {S::J1, S::J2, S::J5}, V));
  // Complete only with respect to generalized frames.
  r.push_back(make_logic("IL-(J4)", {S::J4}, G));
  r.push_back(make_logic("IL-(J1,J4)", {S::J1, S::J4}, G));
  r.push_back(make_logic("IL-(J4,J5)", {S::J4, S::J5}, G));
  r.push_back(make_logic("IL-(J1,J4,J5)", {S::J1, S::J4, S::J5}, G));
  r.push_back(make_logic("IL-(J2)", {S::J2}, G));
  r.push_back(make_logic("IL-(J2,J5)", {S::J2, S::J5}, G));
  r.push_back(make_logic("IL-(J2,J4+)", {S::J2, S::J4plus}, G));
  r.push_back(make_logic("IL-(J2,J4+,J5)", {S::J2, S::J4plus, S::J5}, G));
  return r;
}

} // namespace

const std::vector<Logic> &registry() {
  static const std::vector<Logic> r = build_registry();
  return r;
}

const Logic *logic_by_name(const std::string &name) {
  for (const auto &l : registry())
    if (l.name == name) return &l;
  // Accept any IL-(...) spelling whose scheme set matches a registered
  // logic (order-insensitive, whitespace tolerated).
  if (name.rfind("IL-(", 0) == 0 && name.back() == ')') {
    std::set<SchemeId> want;
    std::string inner = name.substr(4, name.size() - 5);
    std::stringstream ss(inner);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
      auto s = scheme_by_name(item);
      if (!s) return nullptr;
      want.insert(*s);
    }
    for (const auto &l : registry()) {
      std::set<SchemeId> have(l.added.begin(), l.added.end());
      if (have == want) return &l;
    }
  }
  return nullptr;
}

} // namespace il
