#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace il {

enum class Kind : std::uint8_t {
  Var,
  Top,
  Bot,
  Neg,
  And,
  Or,
  Imp,
  Box,
  Rhd,
};

class FormulaNode;
/// Immutable, structurally-shared formula handle. Equality is syntactic.
using Formula = std::shared_ptr<const FormulaNode>;

class FormulaNode {
public:
  FormulaNode(Kind k, std::string name, Formula l, Formula r, int size)
      : kind_(k), name_(std::move(name)), left_(std::move(l)),
        right_(std::move(r)), size_(size) {}

  Kind kind() const { return kind_; }
  const std::string &name() const { return name_; }
  const Formula &left() const { return left_; }
  const Formula &right() const { return right_; }
  /// Node count of the syntax tree.
  int size() const { return size_; }

private:
  Kind kind_;
  std::string name_; // Var only
  Formula left_;     // unary operand / left operand
  Formula right_;    // right operand
  int size_;
};

Formula var(const std::string &name);
Formula top();
Formula bot();
Formula neg(Formula a);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula imp(Formula a, Formula b);
Formula box(Formula a);
Formula rhd(Formula a, Formula b);
/// Derived constructor: <>A stored as ~[]~A.
Formula dia(Formula a);
/// A <-> B as (A -> B) & (B -> A).
Formula iff(Formula a, Formula b);

bool equal(const Formula &a, const Formula &b);
/// Total order: by (size, structural lexicographic). Deterministic across
/// runs; used wherever a canonical formula order is needed.
int compare(const Formula &a, const Formula &b);
std::size_t hash_value(const Formula &f);

struct FormulaLess {
  bool operator()(const Formula &a, const Formula &b) const {
    return compare(a, b) < 0;
  }
};

using FormulaSet = std::set<Formula, FormulaLess>;

/// All subformulas of f, including f itself.
FormulaSet subformulas(const Formula &f);

/// ~A: strips a top-level negation if present, otherwise prepends one.
Formula simneg(const Formula &f);

/// True iff f is ~[]~A for some A (printable as <>A).
bool is_dia(const Formula &f);
/// The A of ~[]~A; requires is_dia(f).
Formula dia_operand(const Formula &f);

/// Left and right operands of every |>-formula in phi.
FormulaSet rhd_operands(const FormulaSet &phi);

/// Variable names occurring in f, sorted.
std::vector<std::string> variables(const Formula &f);

/// \/ of the given formulas in canonical sorted order, deduplicated;
/// the empty disjunction is #f.
Formula big_or(const FormulaSet &disjuncts);
/// /\ in canonical order; the empty conjunction is #t.
Formula big_and(const FormulaSet &conjuncts);

} // namespace il
