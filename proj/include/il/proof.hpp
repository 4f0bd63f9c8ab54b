#pragma once

#include "il/logic.hpp"

#include <string>
#include <vector>

namespace il {

struct ProofLine {
  enum class Just { Ax, MP, Nec, R1, R2 };
  Formula formula;
  Just just;
  SchemeId scheme = SchemeId::G1; // Ax
  Subst subst;                    // Ax (empty for G1)
  int i = -1, j = -1;             // earlier line indices (0-based)
  Formula side;                   // the C of R1/R2
};

struct Proof {
  std::vector<ProofLine> lines;
  const Formula &conclusion() const { return lines.back().formula; }
};

struct ProofVerdict {
  bool ok;
  int line = -1; // first offending line if not ok
  std::string reason;
};

/// One forward pass: each line must be an axiom instance of the logic
/// or follow from earlier lines by MP (line j is line i -> this),
/// Nec, R1 or R2 with the stated side formula.
ProofVerdict check_proof(const Logic &l, const Proof &p);

/// Line-oriented text format:
///   N. <formula> ; AX <scheme> [A=<f>] [B=<f>] [C=<f>]
///   N. <formula> ; MP i j | NEC i | R1 i C=<f> | R2 i C=<f>
/// Line numbers are 1-based.
std::string proof_to_text(const Proof &p);
Proof proof_from_text(const std::string &text);

} // namespace il
