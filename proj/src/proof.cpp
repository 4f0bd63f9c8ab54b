#include "il/proof.hpp"

#include "il/parse.hpp"

#include <sstream>
#include <stdexcept>

namespace il {

namespace {

ProofVerdict reject(int line, std::string reason) {
  return {false, line, std::move(reason)};
}

} // namespace

ProofVerdict check_proof(const Logic &l, const Proof &p) {
  if (p.lines.empty()) return reject(-1, "empty proof");
  for (int n = 0; n < static_cast<int>(p.lines.size()); ++n) {
    const ProofLine &ln = p.lines[static_cast<std::size_t>(n)];
    auto earlier = [&](int k) { return k >= 0 && k < n; };
    switch (ln.just) {
    case ProofLine::Just::Ax: {
      if (!l.has_axiom(ln.scheme))
        return reject(n, scheme_name(ln.scheme) + " is not an axiom of " +
                             l.name);
      if (ln.scheme == SchemeId::G1) {
        if (!taut(ln.formula))
          return reject(n, "not a propositional tautology");
      } else {
        Formula want;
        try {
          want = substitute(scheme_pattern(ln.scheme), ln.subst);
        } catch (const std::invalid_argument &e) {
          return reject(n, e.what());
        }
        if (!equal(want, ln.formula))
          return reject(n, "formula is not the stated " +
                               scheme_name(ln.scheme) + " instance");
      }
      break;
    }
    case ProofLine::Just::MP: {
      if (!earlier(ln.i) || !earlier(ln.j))
        return reject(n, "MP refers to a non-earlier line");
      const Formula &maj = p.lines[static_cast<std::size_t>(ln.j)].formula;
      const Formula &min = p.lines[static_cast<std::size_t>(ln.i)].formula;
      if (maj->kind() != Kind::Imp || !equal(maj->left(), min) ||
          !equal(maj->right(), ln.formula))
        return reject(n, "MP shape mismatch");
      break;
    }
    case ProofLine::Just::Nec: {
      if (!earlier(ln.i)) return reject(n, "NEC refers to a non-earlier line");
      if (ln.formula->kind() != Kind::Box ||
          !equal(ln.formula->left(),
                 p.lines[static_cast<std::size_t>(ln.i)].formula))
        return reject(n, "NEC shape mismatch");
      break;
    }
    case ProofLine::Just::R1:
    case ProofLine::Just::R2: {
      if (!earlier(ln.i)) return reject(n, "rule refers to a non-earlier line");
      const Formula &prem = p.lines[static_cast<std::size_t>(ln.i)].formula;
      if (prem->kind() != Kind::Imp) return reject(n, "premise is not A -> B");
      if (!ln.side) return reject(n, "missing side formula C");
      Formula want =
          ln.just == ProofLine::Just::R1
              ? imp(rhd(ln.side, prem->left()), rhd(ln.side, prem->right()))
              : imp(rhd(prem->right(), ln.side), rhd(prem->left(), ln.side));
      if (!equal(want, ln.formula))
        return reject(n, ln.just == ProofLine::Just::R1 ? "R1 shape mismatch"
                                                        : "R2 shape mismatch");
      break;
    }
    }
  }
  return {true, -1, ""};
}

std::string proof_to_text(const Proof &p) {
  std::ostringstream out;
  for (std::size_t n = 0; n < p.lines.size(); ++n) {
    const ProofLine &ln = p.lines[n];
    out << (n + 1) << ". " << print(ln.formula) << " ; ";
    switch (ln.just) {
    case ProofLine::Just::Ax:
      out << "AX " << scheme_name(ln.scheme);
      for (const auto &[k, v] : ln.subst) out << ' ' << k << '=' << print(v);
      break;
    case ProofLine::Just::MP:
      out << "MP " << (ln.i + 1) << ' ' << (ln.j + 1);
      break;
    case ProofLine::Just::Nec:
      out << "NEC " << (ln.i + 1);
      break;
    case ProofLine::Just::R1:
      out << "R1 " << (ln.i + 1) << " C=" << print(ln.side);
      break;
    case ProofLine::Just::R2:
      out << "R2 " << (ln.i + 1) << " C=" << print(ln.side);
      break;
    }
    out << '\n';
  }
  return out.str();
}

namespace {

// Splits "AX J2 A=p B=q C=r"-style argument tails at the top-level
// " X=" markers ('=' never occurs inside a formula).
Subst parse_subst(const std::string &tail) {
  Subst sub;
  std::size_t i = 0;
  while (i < tail.size()) {
    while (i < tail.size() && tail[i] == ' ') ++i;
    if (i >= tail.size()) break;
    if (i + 1 >= tail.size() || tail[i + 1] != '=' || tail[i] < 'A' ||
        tail[i] > 'Z')
      throw std::runtime_error("bad substitution item in: " + tail);
    std::string key(1, tail[i]);
    i += 2;
    std::size_t end = tail.size();
    for (std::size_t j = i; j + 1 < tail.size(); ++j)
      if (tail[j] == ' ' && tail[j + 1] >= 'A' && tail[j + 1] <= 'Z' &&
          j + 2 < tail.size() && tail[j + 2] == '=') {
        end = j;
        break;
      }
    sub[key] = parse(tail.substr(i, end - i));
    i = end;
  }
  return sub;
}

} // namespace

Proof proof_from_text(const std::string &text) {
  Proof p;
  std::istringstream in(text);
  std::string line;
  int expect = 1;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::size_t dot = line.find(". ");
    std::size_t sep = line.find(" ; ");
    if (dot == std::string::npos || sep == std::string::npos || dot > sep)
      throw std::runtime_error("bad proof line: " + line);
    if (std::stoi(line.substr(0, dot)) != expect)
      throw std::runtime_error("out-of-order line number in: " + line);
    ProofLine ln;
    ln.formula = parse(line.substr(dot + 2, sep - dot - 2));
    std::istringstream just(line.substr(sep + 3));
    std::string tag;
    just >> tag;
    if (tag == "AX") {
      std::string sname;
      just >> sname;
      auto s = scheme_by_name(sname);
      if (!s) throw std::runtime_error("unknown scheme: " + sname);
      ln.just = ProofLine::Just::Ax;
      ln.scheme = *s;
      std::string rest;
      std::getline(just, rest);
      ln.subst = parse_subst(rest);
    } else if (tag == "MP") {
      ln.just = ProofLine::Just::MP;
      just >> ln.i >> ln.j;
      --ln.i, --ln.j;
    } else if (tag == "NEC") {
      ln.just = ProofLine::Just::Nec;
      just >> ln.i;
      --ln.i;
    } else if (tag == "R1" || tag == "R2") {
      ln.just = tag == "R1" ? ProofLine::Just::R1 : ProofLine::Just::R2;
      just >> ln.i;
      --ln.i;
      std::string rest;
      std::getline(just, rest);
      std::size_t eq = rest.find("C=");
      if (eq == std::string::npos)
        throw std::runtime_error("missing C= in: " + line);
      ln.side = parse(rest.substr(eq + 2));
    } else {
      throw std::runtime_error("unknown justification: " + tag);
    }
    p.lines.push_back(std::move(ln));
    ++expect;
  }
  if (p.lines.empty()) throw std::runtime_error("empty proof text");
  return p;
}

} // namespace il
