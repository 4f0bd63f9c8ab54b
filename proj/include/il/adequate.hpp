#pragma once

#include "il/formula.hpp"

#include <optional>
#include <unordered_map>
#include <vector>

namespace il {

/// A finite adequate set Phi together with Phi_rhd, both in the fixed
/// total formula order, with O(1) membership/index lookup.
class AdequateContext {
public:
  AdequateContext(FormulaSet phi, FormulaSet phi_rhd);

  const std::vector<Formula> &phi() const { return phi_; }
  const std::vector<Formula> &phi_rhd() const { return phi_rhd_; }

  bool contains(const Formula &f) const { return index_of(f).has_value(); }
  std::optional<int> index_of(const Formula &f) const;
  const Formula &at(int i) const { return phi_[static_cast<std::size_t>(i)]; }
  int size() const { return static_cast<int>(phi_.size()); }

private:
  std::vector<Formula> phi_;
  std::vector<Formula> phi_rhd_;
  std::unordered_map<std::size_t, std::vector<int>> index_; // by hash
};

/// []( B -> \/(C_i, <>D_j) ) with the disjuncts merged, sorted,
/// deduplicated; the empty disjunction is #f. This is the only shape in
/// which the box-of-disjunction closure formulas occur in Phi.
Formula guarded_box(const Formula &b, const FormulaSet &cs,
                    const FormulaSet &ds);

/// Smallest adequate set containing the seed, per the canonicalization
/// above. #f |> #f is inserted to put #f into Phi_rhd.
AdequateContext adequate_closure(const FormulaSet &seed);

/// Independent audit of the five closure conditions by exhaustive
/// enumeration. Returns a description of the first violation, if any.
std::optional<std::string> adequate_violation(const AdequateContext &ctx);

} // namespace il
