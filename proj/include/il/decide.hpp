#pragma once

#include "il/adequate.hpp"
#include "il/genveltman.hpp"
#include "il/logic.hpp"
#include "il/veltman.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace il {

/// A Phi-maximal set Gamma, stored as a membership bitmask over
/// ctx->phi(). Maximality is structural: membership of a compound
/// formula is determined by its parts, so exactly one of A, ~A is in.
struct MCSet {
  std::shared_ptr<const AdequateContext> ctx;
  std::vector<std::uint64_t> bits;

  bool member(int phi_index) const;
  /// Membership of f. f must be in Phi, or a negation whose operand is
  /// (resolved as the complement); anything else throws.
  bool member(const Formula &f) const;

  bool operator==(const MCSet &o) const { return bits == o.bits; }
  /// Order-minimal bitmask order (membership compared from index 0 up);
  /// the deterministic tie-break everywhere a witness is picked.
  bool operator<(const MCSet &o) const;
};

/// The successor relation of the completeness proofs: every boxed
/// formula of Gamma propagates (with its body) into Delta, and Delta
/// gains at least one new boxed formula.
bool prec(const MCSet &gamma, const MCSet &delta);
/// prec plus: B |> C in Gamma forces ~B in Delta, for every such B.
bool prec_C(const MCSet &gamma, const MCSet &delta, const Formula &c);
/// prec plus: B |> C in Gamma forces ~B and []~B in Delta.
bool prec_C_star(const MCSet &gamma, const MCSet &delta, const Formula &c);

/// A countermodel in one of the two frame classes, with a world where
/// the refuted formula fails.
struct Countermodel {
  std::optional<VeltmanModel> vmodel;
  std::optional<GenModel> gmodel;
  int world = -1;
};

/// Searches models in l's complete class (frames passing
/// l.frame_conditions) with at most max_worlds worlds, over valuations
/// of a's variables. Returns the first countermodel in the fixed
/// enumeration order (worlds 0..n-1, R as transitive subsets of
/// {(i,j) : i < j}, then S / generator assignments, then valuations),
/// re-verified before being returned. Nothing means no countermodel
/// within the budget, not that a is a theorem. frame_budget caps the
/// number of S assignments examined; exhausted (if given) reports
/// whether the enumeration ran to completion rather than being cut.
std::optional<Countermodel>
bounded_refute(const Logic &l, const Formula &a, int max_worlds,
               std::uint64_t frame_budget = 1ull << 20,
               bool *exhausted = nullptr);

/// Provability interface used to certify consistency of candidate sets.
struct OracleResult {
  enum class Status { proved, refuted, unknown };
  Status status = Status::unknown;
  std::optional<Countermodel> cm;
  std::string note;
};

class Oracle {
public:
  virtual ~Oracle() = default;
  virtual OracleResult query(const Logic &l, const Formula &a) = 0;
};

/// Countermodel search up to a fixed world budget; never answers
/// proved.
class BoundedOracle final : public Oracle {
public:
  explicit BoundedOracle(int max_worlds) : max_worlds_(max_worlds) {}
  OracleResult query(const Logic &l, const Formula &a) override;

private:
  int max_worlds_;
};

/// Searches up to min(FMP world bound, ceiling). Within the bound a
/// fruitless exhaustive Veltman-class search proves a; above the
/// ceiling, or for the generalized class (where the generator-capped
/// enumeration is not exhaustive), a fruitless search stays unknown
/// rather than overclaim.
class ExactOracle final : public Oracle {
public:
  explicit ExactOracle(int ceiling_worlds = 5) : ceiling_(ceiling_worlds) {}
  OracleResult query(const Logic &l, const Formula &a) override;

private:
  int ceiling_;
};

/// Worlds of the finite canonical model built over closure({a}):
/// 2^|Phi| * |Phi_rhd|, saturating at uint64 max.
std::uint64_t fmp_world_bound(const Formula &a);

/// Assignment-based candidate generator for K_L. Variables, boxed
/// formulas and |>-formulas of Phi are free atoms constrained by a CNF
/// of L-provable clauses (necessitations, box monotonicity, Lob, the
/// J6 link, |>-monotonicity, J3, and l's derived schemes); every
/// member of K_L satisfies all of them, so the solutions are a
/// superset of K_L.
class ConsequenceEngine {
public:
  ConsequenceEngine(const Logic &l, std::shared_ptr<const AdequateContext> ctx);

  /// True iff asserting a false is unsatisfiable, which is an
  /// L-provability certificate for a (each clause is L-provable, and
  /// any L-consistent ~a extends to a solution).
  bool proves(const Formula &a) const;
  /// All solutions, as membership bitmasks. Throws if more than cap.
  std::vector<MCSet> candidates(std::size_t cap = 4096) const;

  const std::shared_ptr<const AdequateContext> &ctx() const { return ctx_; }
  int atom_count() const { return static_cast<int>(atoms_.size()); }
  int clause_count() const { return static_cast<int>(clauses_.size()); }

private:
  bool solve(std::vector<signed char> &val,
             const std::vector<std::pair<int, bool>> &targets,
             std::vector<MCSet> *out, std::size_t cap) const;
  bool eval3(int phi_index, const std::vector<signed char> &val,
             std::vector<signed char> &memo) const;

  const Logic *logic_;
  std::shared_ptr<const AdequateContext> ctx_;
  std::vector<int> atoms_;      // phi indices of Var/Box/Rhd formulas
  std::vector<int> atom_of_;    // phi index -> atom ordinal or -1
  std::vector<std::vector<int>> clauses_; // literals +-(ordinal+1)
};

/// Engine candidates filtered by the oracle on each conjunction-
/// inconsistency query /\Gamma -> #f: proved drops the candidate,
/// refuted confirms it, unknown keeps it flagged. When every survivor
/// is confirmed the result is exactly K_L. status (if given) receives
/// one entry per returned set.
std::vector<MCSet> enumerate_KL(const Logic &l, const AdequateContext &ctx,
                                Oracle &o,
                                std::vector<OracleResult> *status = nullptr);
/// Same, sharing the given context handle, so the returned sets are
/// prec-compatible with other sets over the same handle.
std::vector<MCSet> enumerate_KL(const Logic &l,
                                std::shared_ptr<const AdequateContext> ctx,
                                Oracle &o,
                                std::vector<OracleResult> *status = nullptr);

/// Longest prec-path ranks for each member of kl (sup of successor
/// ranks plus one, empty sup is 0).
std::vector<int> prec_ranks(const std::vector<MCSet> &kl);

/// Witness searches for the existence lemmas behind the truth lemmas.
/// Each returns the order-minimal member of K_L with the properties of
/// the variant matching l's schemes; hypothesis violations and missing
/// witnesses throw.
/// D |> E not in Gamma: Delta with D in Delta, Gamma prec_E Delta
/// (plus []~E with J5; prec*_E with J2 and J5).
MCSet lemma_pl3(const Logic &l, const MCSet &gamma, const Formula &d,
                const Formula &e, Oracle &o);
/// D |> E in Gamma, Gamma prec_F Delta, D in Delta: Theta with E, ~F
/// (plus prec with J4+; prec_F with J2+; prec*_F and []~F with J2+,J5).
MCSet lemma_pl4(const Logic &l, const MCSet &gamma, const MCSet &delta,
                const Formula &d, const Formula &e, const Formula &f,
                Oracle &o);
/// J4 variant: D |> E in Gamma, Gamma prec Delta, D in Delta: Theta
/// with Gamma prec Theta and E in Theta.
MCSet lemma_pl5(const Logic &l, const MCSet &gamma, const MCSet &delta,
                const Formula &d, const Formula &e, Oracle &o);
/// J2 variant: as PL4 but Gamma prec_F Theta and E in Theta (prec*_F
/// and []~F with J5).
MCSet lemma_pl6(const Logic &l, const MCSet &gamma, const MCSet &delta,
                const Formula &d, const Formula &e, const Formula &f,
                Oracle &o);

/// Thrown by the canonical constructions when a has no refuting
/// Gamma_0, i.e. a is provable.
struct ProvedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// Thrown when an exact answer would need more than the configured
/// resources; carries the theoretical world bound.
struct ExactBoundError : std::runtime_error {
  ExactBoundError(const std::string &msg, std::uint64_t b)
      : std::runtime_error(msg), bound(b) {}
  std::uint64_t bound;
};

/// A finite canonical model over closure({a}) together with its
/// bookkeeping: world i is the pair (kl[world_gamma[i]], tag), where
/// the tag is a sequence over ctx->phi_rhd() indices (length one for
/// the pair-based constructions).
struct CanonicalModel {
  std::shared_ptr<const AdequateContext> ctx;
  std::vector<MCSet> kl;
  std::vector<int> world_gamma;
  std::vector<std::vector<int>> world_tag;
  std::optional<VeltmanModel> vmodel;
  std::optional<GenModel> gmodel;
  int root = -1;
};

/// Frame-condition check, full truth-lemma audit (membership iff
/// forcing, every C in Phi, every world) and root refutation, run on
/// every construction before it returns.
struct CanonicalAudit {
  bool frame_ok = false;
  bool conditions_ok = false;
  bool truth_ok = false;
  bool root_refutes = false;
  std::string detail;
  bool all() const {
    return frame_ok && conditions_ok && truth_ok && root_refutes;
  }
};
CanonicalAudit audit_canonical(const Logic &l, const CanonicalModel &m,
                               const Formula &a);

/// Pair-world Veltman construction for the ten logics it covers
/// (IL-, IL-(J1), IL-(J4+), IL-(J1,J4+), IL-(J2+), CL, IL-(J5),
/// IL-(J1,J5), IL-(J4+,J5), IL-(J1,J4+,J5)). Requires every candidate
/// to be oracle-confirmed, so the universe is exactly K_L.
CanonicalModel canonical_ct1(const Logic &l, const Formula &a, Oracle &o);
/// Sequence-world Veltman construction for IL-(J2+,J5) and IL.
CanonicalModel canonical_ct2(const Logic &l, const Formula &a, Oracle &o);
/// Pair-world generalized construction for IL-(J4), IL-(J1,J4),
/// IL-(J4,J5), IL-(J1,J4,J5), IL-(J2), IL-(J2,J4+).
CanonicalModel canonical_gct1(const Logic &l, const Formula &a, Oracle &o);
/// Sequence-world generalized construction for IL-(J2,J5) and
/// IL-(J2,J4+,J5).
CanonicalModel canonical_gct2(const Logic &l, const Formula &a, Oracle &o);
/// Dispatch to the construction covering l.
CanonicalModel canonical_model(const Logic &l, const Formula &a, Oracle &o);

enum class Verdict { theorem, non_theorem, unknown };

struct DecideMode {
  bool exact = false;
  int budget = 3; // practical world budget / exact search ceiling
  static DecideMode practical(int worlds) { return {false, worlds}; }
  static DecideMode exact_mode(int ceiling = 5) { return {true, ceiling}; }
};

struct Decision {
  Verdict verdict = Verdict::unknown;
  std::optional<Countermodel> cm;
  std::uint64_t fmp_bound = 0;
  std::string note;
};

/// Practical mode: countermodel search within the budget, otherwise
/// unknown. Exact mode: clause-engine provability certificate, then
/// search, then the canonical construction over exactly K_L; never
/// unknown, but throws ExactBoundError when the configured ceiling is
/// insufficient (the bound is reported, never silently truncated).
Decision decide(const Logic &l, const Formula &a, DecideMode mode);

/// One-step proper extensions within a completeness class: pairs
/// (stronger, weaker) whose derived-scheme sets are in strict covering
/// inclusion. The demo drivers refute, for each edge, the
/// characteristic instance of a scheme the weaker logic lacks.
std::vector<std::pair<const Logic *, const Logic *>>
covering_edges(CompleteClass cls);

} // namespace il
