#pragma once

#include "il/proof.hpp"

#include <optional>

namespace il {

/// Incrementally builds a checkable proof. Indices are 0-based line
/// numbers into the proof under construction.
class ProofBuilder {
public:
  /// G1 line; throws if f is not a tautology.
  int taut_line(const Formula &f);
  /// Axiom-instance line for substitute(scheme_pattern(s), sub).
  int ax(SchemeId s, const Subst &sub);
  /// From minor: A and major: A -> B, adds B.
  int mp(int minor, int major);
  int nec(int i);
  int r1(int i, const Formula &c);
  int r2(int i, const Formula &c);
  /// Adds target as a propositional consequence of the given earlier
  /// lines: one G1 line for premises -> target, then an MP chain.
  int from(const Formula &target, const std::vector<int> &premises);
  /// []X -> []Y, via Nec and G2; requires taut(X -> Y).
  int box_mono(const Formula &x, const Formula &y);

  const Formula &formula(int i) const;
  int last() const { return static_cast<int>(proof_.lines.size()) - 1; }
  Proof take() { return std::move(proof_); }

private:
  int push(ProofLine ln);
  Proof proof_;
};

/// Derived-instance builders. Each appends a derivation of the named
/// scheme instance to b, choosing a route through l's axioms, and
/// returns its line index. Throws if l supports no route.
int inst_j1(ProofBuilder &b, const Logic &l, const Formula &A,
            const Formula &B);                    // [](A->B) -> A|>B
int inst_j1p(ProofBuilder &b, const Logic &l, const Formula &A); // A|>A
int inst_j2(ProofBuilder &b, const Logic &l, const Formula &A,
            const Formula &B, const Formula &C);
int inst_j2plus(ProofBuilder &b, const Logic &l, const Formula &A,
                const Formula &B, const Formula &C);
int inst_j2plusP(ProofBuilder &b, const Logic &l, const Formula &A,
                 const Formula &B, const Formula &C);
int inst_j4(ProofBuilder &b, const Logic &l, const Formula &A,
            const Formula &B);                    // A|>B -> (<>A -> <>B)
int inst_j4p(ProofBuilder &b, const Logic &l, const Formula &A,
             const Formula &B); // A|>B -> (B|>#f -> A|>#f)
int inst_j4plus(ProofBuilder &b, const Logic &l, const Formula &A,
                const Formula &B, const Formula &C);
/// []~A -> A|>B, derivable in IL- alone.
int box_neg_rhd(ProofBuilder &b, const Formula &A, const Formula &B);
/// [](A->B) -> (B|>C -> A|>C), derivable in IL- alone.
int strong_r2(ProofBuilder &b, const Formula &A, const Formula &B,
              const Formula &C);

/// From proofs of A0 <-> A1 and B0 <-> B1, a proof of
/// A0|>B0 <-> A1|>B1 using only G1, MP, R1, R2 beyond the inputs.
Proof congruence_proof(const Proof &pa, const Proof &pb);

/// The scheme's shape at A=p, B=q, C=r.
Formula char_instance(SchemeId s);

/// A proof of char_instance(s) in l, when a route exists.
std::optional<Proof> derive_scheme_instance(const Logic &l, SchemeId s);

struct LibraryEntry {
  std::string name;
  std::string logic; // registry name
  Proof proof;
};

/// The stored derivations, mechanized at representative arguments
/// p, q, r.
const std::vector<LibraryEntry> &theorem_library();

} // namespace il
