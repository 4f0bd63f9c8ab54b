#include "il/formula.hpp"

#include <algorithm>
#include <functional>

namespace il {

namespace {

Formula make(Kind k, std::string name, Formula l, Formula r) {
  int sz = 1;
  if (l) sz += l->size();
  if (r) sz += r->size();
  return std::make_shared<const FormulaNode>(k, std::move(name), std::move(l),
                                             std::move(r), sz);
}

const Formula &top_singleton() {
  static const Formula t = make(Kind::Top, "", nullptr, nullptr);
  return t;
}

const Formula &bot_singleton() {
  static const Formula b = make(Kind::Bot, "", nullptr, nullptr);
  return b;
}

} // namespace

Formula var(const std::string &name) {
  return make(Kind::Var, name, nullptr, nullptr);
}
Formula top() { return top_singleton(); }
Formula bot() { return bot_singleton(); }
Formula neg(Formula a) { return make(Kind::Neg, "", std::move(a), nullptr); }
Formula conj(Formula a, Formula b) {
  return make(Kind::And, "", std::move(a), std::move(b));
}
Formula disj(Formula a, Formula b) {
  return make(Kind::Or, "", std::move(a), std::move(b));
}
Formula imp(Formula a, Formula b) {
  return make(Kind::Imp, "", std::move(a), std::move(b));
}
Formula box(Formula a) { return make(Kind::Box, "", std::move(a), nullptr); }
Formula rhd(Formula a, Formula b) {
  return make(Kind::Rhd, "", std::move(a), std::move(b));
}
Formula dia(Formula a) { return neg(box(neg(std::move(a)))); }
Formula iff(Formula a, Formula b) { return conj(imp(a, b), imp(b, a)); }

bool equal(const Formula &a, const Formula &b) { return compare(a, b) == 0; }

int compare(const Formula &a, const Formula &b) {
  if (a == b) return 0;
  if (a->size() != b->size()) return a->size() < b->size() ? -1 : 1;
  if (a->kind() != b->kind())
    return static_cast<int>(a->kind()) < static_cast<int>(b->kind()) ? -1 : 1;
  if (a->kind() == Kind::Var) return a->name().compare(b->name());
  if (a->left()) {
    int c = compare(a->left(), b->left());
    if (c != 0) return c;
  }
  if (a->right()) return compare(a->right(), b->right());
  return 0;
}

std::size_t hash_value(const Formula &f) {
  std::size_t h = static_cast<std::size_t>(f->kind()) * 0x9e3779b97f4a7c15ull;
  if (f->kind() == Kind::Var) h ^= std::hash<std::string>{}(f->name());
  if (f->left()) h = h * 31 + hash_value(f->left());
  if (f->right()) h = h * 31 + hash_value(f->right());
  return h;
}

FormulaSet subformulas(const Formula &f) {
  FormulaSet out;
  std::function<void(const Formula &)> go = [&](const Formula &g) {
    if (!out.insert(g).second) return;
    if (g->left()) go(g->left());
    if (g->right()) go(g->right());
  };
  go(f);
  return out;
}

Formula simneg(const Formula &f) {
  if (f->kind() == Kind::Neg) return f->left();
  return neg(f);
}

bool is_dia(const Formula &f) {
  return f->kind() == Kind::Neg && f->left()->kind() == Kind::Box &&
         f->left()->left()->kind() == Kind::Neg;
}

Formula dia_operand(const Formula &f) { return f->left()->left()->left(); }

FormulaSet rhd_operands(const FormulaSet &phi) {
  FormulaSet out;
  for (const auto &f : phi) {
    if (f->kind() == Kind::Rhd) {
      out.insert(f->left());
      out.insert(f->right());
    }
  }
  return out;
}

std::vector<std::string> variables(const Formula &f) {
  std::set<std::string> names;
  for (const auto &g : subformulas(f))
    if (g->kind() == Kind::Var) names.insert(g->name());
  return {names.begin(), names.end()};
}

Formula big_or(const FormulaSet &disjuncts) {
  if (disjuncts.empty()) return bot();
  auto it = disjuncts.begin();
  Formula acc = *it;
  for (++it; it != disjuncts.end(); ++it) acc = disj(acc, *it);
  return acc;
}

Formula big_and(const FormulaSet &conjuncts) {
  if (conjuncts.empty()) return top();
  auto it = conjuncts.begin();
  Formula acc = *it;
  for (++it; it != conjuncts.end(); ++it) acc = conj(acc, *it);
  return acc;
}

} // namespace il
