#include "il/adequate.hpp"

#include "il/parse.hpp"

#include <algorithm>

namespace il {

AdequateContext::AdequateContext(FormulaSet phi, FormulaSet phi_rhd)
    : phi_(phi.begin(), phi.end()), phi_rhd_(phi_rhd.begin(), phi_rhd.end()) {
  for (int i = 0; i < static_cast<int>(phi_.size()); ++i)
    index_[hash_value(phi_[static_cast<std::size_t>(i)])].push_back(i);
}

std::optional<int> AdequateContext::index_of(const Formula &f) const {
  auto it = index_.find(hash_value(f));
  if (it == index_.end()) return std::nullopt;
  for (int i : it->second)
    if (equal(phi_[static_cast<std::size_t>(i)], f)) return i;
  return std::nullopt;
}

Formula guarded_box(const Formula &b, const FormulaSet &cs,
                    const FormulaSet &ds) {
  FormulaSet disjuncts = cs;
  for (const auto &d : ds) disjuncts.insert(dia(d));
  return box(imp(b, big_or(disjuncts)));
}

namespace {

// Close s under subformulas and simneg, in place.
void close_sub_simneg(FormulaSet &s) {
  std::vector<Formula> work(s.begin(), s.end());
  while (!work.empty()) {
    Formula f = work.back();
    work.pop_back();
    for (const auto &g : subformulas(f))
      if (s.insert(g).second) work.push_back(g);
    Formula n = simneg(f);
    if (s.insert(n).second) work.push_back(n);
  }
}

// All subsets of the given (small) base set.
std::vector<FormulaSet> subsets(const std::vector<Formula> &base) {
  std::vector<FormulaSet> out;
  std::size_t n = base.size();
  for (std::size_t mask = 0; mask < (1ull << n); ++mask) {
    FormulaSet s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ull << i)) s.insert(base[i]);
    out.push_back(std::move(s));
  }
  return out;
}

} // namespace

AdequateContext adequate_closure(const FormulaSet &seed) {
  FormulaSet s = seed;
  s.insert(rhd(bot(), bot()));
  close_sub_simneg(s);

  FormulaSet phi_rhd = rhd_operands(s);
  std::vector<Formula> base(phi_rhd.begin(), phi_rhd.end());

  for (const auto &b : phi_rhd) {
    for (const auto &c : phi_rhd) s.insert(rhd(b, c));
    s.insert(box(simneg(b)));
  }
  auto subs = subsets(base);
  for (const auto &b : phi_rhd)
    for (const auto &cs : subs)
      for (const auto &ds : subs) s.insert(guarded_box(b, cs, ds));

  close_sub_simneg(s);
  return AdequateContext(std::move(s), std::move(phi_rhd));
}

std::optional<std::string> adequate_violation(const AdequateContext &ctx) {
  FormulaSet phi(ctx.phi().begin(), ctx.phi().end());
  FormulaSet phi_rhd(ctx.phi_rhd().begin(), ctx.phi_rhd().end());

  // Phi_rhd must be exactly the |>-operands of Phi.
  FormulaSet ops = rhd_operands(phi);
  ops.insert(bot());
  bool same = ops.size() == phi_rhd.size() &&
              std::equal(ops.begin(), ops.end(), phi_rhd.begin(),
                         [](const Formula &a, const Formula &b) {
                           return equal(a, b);
                         });
  if (!same) return "phi_rhd is not the |>-operand set plus #f";

  for (const auto &f : phi) {
    for (const auto &g : subformulas(f))
      if (!phi.count(g))
        return "not subformula-closed at " + print(f) + " / " + print(g);
    if (!phi.count(simneg(f))) return "not ~-closed at " + print(f);
  }
  if (!phi_rhd.count(bot())) return "#f missing from phi_rhd";
  for (const auto &b : phi_rhd) {
    for (const auto &c : phi_rhd)
      if (!phi.count(rhd(b, c)))
        return "missing " + print(rhd(b, c));
    if (!phi.count(box(simneg(b))))
      return "missing " + print(box(simneg(b)));
  }
  std::vector<Formula> base(phi_rhd.begin(), phi_rhd.end());
  auto subs = subsets(base);
  for (const auto &b : phi_rhd)
    for (const auto &cs : subs)
      for (const auto &ds : subs) {
        Formula g = guarded_box(b, cs, ds);
        if (!phi.count(g)) return "missing " + print(g);
      }
  return std::nullopt;
}

} // namespace il
