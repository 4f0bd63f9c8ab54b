#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "il/library.hpp"
#include "il/parse.hpp"

#include <random>

using namespace il;

TEST_CASE("scheme matching") {
  auto s = is_instance(parse("[](p->q) -> ([]p -> []q)"), SchemeId::G2);
  REQUIRE(s.has_value());
  CHECK(equal((*s)["A"], var("p")));
  CHECK(equal((*s)["B"], var("q")));

  CHECK(is_instance(parse("p |> p"), SchemeId::J1p).has_value());
  CHECK(!is_instance(parse("(p&q) |> (q&p)"), SchemeId::J1p).has_value());
  CHECK(is_instance(parse("([](([]p)->p)) -> []p"), SchemeId::G3).has_value());
  CHECK(is_instance(parse("(p|>r)&(q|>r) -> (p|q)|>r"), SchemeId::J3)
            .has_value());
  CHECK(is_instance(parse("([]p -> ~p|>#f) & (~p|>#f -> []p)"), SchemeId::J6)
            .has_value());
  CHECK(is_instance(parse("p|>q -> (<>p -> <>q)"), SchemeId::J4).has_value());
  CHECK(is_instance(parse("<>p |> p"), SchemeId::J5).has_value());
  // <> is not sugar-matched against an unexpanded shape
  CHECK(is_instance(parse("~[]~p |> p"), SchemeId::J5).has_value());
}

TEST_CASE("G1 via truth tables") {
  CHECK(is_instance(parse("p | ~p"), SchemeId::G1).has_value());
  CHECK(is_instance(parse("[]p -> []p"), SchemeId::G1).has_value());
  CHECK(is_instance(parse("(p|>q) | ~(p|>q)"), SchemeId::G1).has_value());
  CHECK(!is_instance(parse("[]( p -> p )"), SchemeId::G1).has_value());
  CHECK(!is_instance(parse("p -> []p"), SchemeId::G1).has_value());
  CHECK(taut(parse("#t")));
  CHECK(!taut(parse("#f")));
  CHECK(taut(parse("(p->q)->((q->r)->(p->r))")));
}

namespace {

// Reference tautology check: substitute all 2^k atom values by #t/#f
// and fold constants.
bool eval_subst(const Formula &f, const std::vector<Formula> &atoms,
                unsigned a) {
  switch (f->kind()) {
  case Kind::Top: return true;
  case Kind::Bot: return false;
  case Kind::Neg: return !eval_subst(f->left(), atoms, a);
  case Kind::And:
    return eval_subst(f->left(), atoms, a) && eval_subst(f->right(), atoms, a);
  case Kind::Or:
    return eval_subst(f->left(), atoms, a) || eval_subst(f->right(), atoms, a);
  case Kind::Imp:
    return !eval_subst(f->left(), atoms, a) || eval_subst(f->right(), atoms, a);
  default:
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (equal(atoms[i], f)) return (a >> i) & 1;
    REQUIRE(false);
    return false;
  }
}

void atoms_of(const Formula &f, std::vector<Formula> &out) {
  switch (f->kind()) {
  case Kind::Top:
  case Kind::Bot:
    return;
  case Kind::Neg:
    atoms_of(f->left(), out);
    return;
  case Kind::And:
  case Kind::Or:
  case Kind::Imp:
    atoms_of(f->left(), out);
    atoms_of(f->right(), out);
    return;
  default:
    for (const auto &g : out)
      if (equal(g, f)) return;
    out.push_back(f);
  }
}

Formula random_bool_formula(std::mt19937 &rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 5 : 9);
  switch (pick(rng)) {
  case 0: return var("p");
  case 1: return var("q");
  case 2: return box(var("p"));
  case 3: return rhd(var("p"), var("q"));
  case 4: return top();
  case 5: return bot();
  case 6: return neg(random_bool_formula(rng, depth - 1));
  case 7:
    return conj(random_bool_formula(rng, depth - 1),
                random_bool_formula(rng, depth - 1));
  case 8:
    return disj(random_bool_formula(rng, depth - 1),
                random_bool_formula(rng, depth - 1));
  default:
    return imp(random_bool_formula(rng, depth - 1),
               random_bool_formula(rng, depth - 1));
  }
}

} // namespace

TEST_CASE("taut agrees with substitution oracle") {
  std::mt19937 rng(3);
  for (int i = 0; i < 1500; ++i) {
    Formula f = random_bool_formula(rng, 5);
    std::vector<Formula> atoms;
    atoms_of(f, atoms);
    REQUIRE(atoms.size() <= 16);
    bool expect = true;
    for (unsigned a = 0; a < (1u << atoms.size()); ++a)
      if (!eval_subst(f, atoms, a)) {
        expect = false;
        break;
      }
    CHECK(taut(f) == expect);
  }
}

TEST_CASE("registry shape") {
  CHECK(registry().size() == 20);
  int veltman = 0, gen = 0;
  for (const auto &l : registry())
    (l.complete_class == CompleteClass::veltman ? veltman : gen)++;
  CHECK(veltman == 12);
  CHECK(gen == 8);

  const Logic *cl = logic_by_name("CL");
  REQUIRE(cl != nullptr);
  CHECK(cl->has_axiom(SchemeId::J1));
  CHECK(cl->has_axiom(SchemeId::J1p));
  CHECK(cl->has_axiom(SchemeId::J2));
  CHECK(!cl->has_axiom(SchemeId::J2plus));
  CHECK(cl->proves_scheme(SchemeId::J2plus));
  CHECK(cl->proves_scheme(SchemeId::J4plus));
  CHECK(cl->proves_scheme(SchemeId::J4));
  CHECK(logic_by_name("IL-(J1,J2)") == cl);
  CHECK(logic_by_name("IL-(J2, J1)") == cl);

  const Logic *il = logic_by_name("IL");
  REQUIRE(il != nullptr);
  CHECK(il->proves_scheme(SchemeId::J2plus));
  CHECK(il->complete_class == CompleteClass::veltman);

  const Logic *j4 = logic_by_name("IL-(J4)");
  REQUIRE(j4 != nullptr);
  CHECK(j4->complete_class == CompleteClass::generalized);
  CHECK(j4->has_axiom(SchemeId::J4p));
  CHECK(!j4->proves_scheme(SchemeId::J4plus));

  const Logic *j4p = logic_by_name("IL-(J4+)");
  REQUIRE(j4p != nullptr);
  CHECK(j4p->proves_scheme(SchemeId::J4));
  CHECK(!j4p->proves_scheme(SchemeId::J2));

  CHECK(logic_by_name("IL-(J9)") == nullptr);
  CHECK(logic_by_name("IL-(J1,J4)") != nullptr);
}

TEST_CASE("check_proof basics") {
  const Logic &il_minus = *logic_by_name("IL-");
  const Logic &j1 = *logic_by_name("IL-(J1)");

  Proof p = proof_from_text("1. #f -> q ; AX G1\n"
                            "2. p|>#f -> p|>q ; R1 1 C=p\n");
  CHECK(check_proof(il_minus, p).ok);

  Proof bad = proof_from_text("1. p |> p ; AX J1' A=p\n");
  ProofVerdict v = check_proof(il_minus, bad);
  CHECK(!v.ok);
  CHECK(v.line == 0);
  CHECK(check_proof(j1, bad).ok);

  Proof mp = proof_from_text("1. p -> (q -> p) ; AX G1\n"
                             "2. (p -> (q -> p)) -> (p -> p) ; AX G1\n"
                             "3. p -> p ; MP 1 2\n"
                             "4. [](p -> p) ; NEC 3\n"
                             "5. q|>p -> q|>p ; R1 3 C=q\n"
                             "6. p|>r -> p|>r ; R2 3 C=r\n");
  CHECK(check_proof(il_minus, mp).ok);

  Proof wrong_mp = proof_from_text("1. p -> p ; AX G1\n"
                                   "2. q ; MP 1 1\n");
  CHECK(!check_proof(il_minus, wrong_mp).ok);

  Proof wrong_ref = proof_from_text("1. [](p->q) -> (p |> q) ; AX J1 A=q B=q\n");
  CHECK(!check_proof(j1, wrong_ref).ok);
}

TEST_CASE("proof text round trip") {
  for (const auto &e : theorem_library()) {
    Proof back = proof_from_text(proof_to_text(e.proof));
    REQUIRE(back.lines.size() == e.proof.lines.size());
    for (std::size_t i = 0; i < back.lines.size(); ++i)
      CHECK(equal(back.lines[i].formula, e.proof.lines[i].formula));
    CHECK(check_proof(*logic_by_name(e.logic), back).ok);
  }
}

TEST_CASE("theorem library checks in stated logics") {
  const auto &lib = theorem_library();
  CHECK(lib.size() >= 13);
  for (const auto &e : lib) {
    const Logic *l = logic_by_name(e.logic);
    REQUIRE(l != nullptr);
    ProofVerdict v = check_proof(*l, e.proof);
    INFO(e.name, " in ", e.logic, ": line ", v.line, " ", v.reason);
    CHECK(v.ok);
  }
  // spot-check conclusions
  auto find = [&](const std::string &n) -> const LibraryEntry & {
    for (const auto &e : lib)
      if (e.name == n) return e;
    throw std::logic_error("missing entry " + n);
  };
  CHECK(equal(find("0P3.1").proof.conclusion(), parse("[]~p -> p|>q")));
  CHECK(equal(find("0P3.2").proof.conclusion(),
              parse("[](p->q) -> (q|>r -> p|>r)")));
  CHECK(equal(find("1P1.a").proof.conclusion(), parse("p|>p")));
  CHECK(equal(find("4C1").proof.conclusion(), parse("p|>q -> (<>p -> <>q)")));
  CHECK(equal(find("2C1").proof.conclusion(),
              parse("[](p->q) -> (r|>p -> r|>q)")));
  CHECK(equal(find("CLP1.1").proof.conclusion(),
              parse("([]p -> ~p|>#f) & (~p|>#f -> []p)")));
}

TEST_CASE("library proofs fail in too-weak logics") {
  const auto &lib = theorem_library();
  const Logic &il_minus = *logic_by_name("IL-");
  int rejected = 0;
  for (const auto &e : lib)
    if (e.logic != "IL-" && !check_proof(il_minus, e.proof).ok) ++rejected;
  CHECK(rejected >= 15);
}

TEST_CASE("congruence proofs") {
  const Logic &il_minus = *logic_by_name("IL-");
  ProofBuilder ta, tb;
  ta.taut_line(parse("(p&q -> q&p) & (q&p -> p&q)"));
  tb.taut_line(parse("(r -> r) & (r -> r)"));
  Proof pr = congruence_proof(ta.take(), tb.take());
  CHECK(check_proof(il_minus, pr).ok);
  CHECK(equal(pr.conclusion(),
              parse("((p&q)|>r -> (q&p)|>r) & ((q&p)|>r -> (p&q)|>r)")));

  ProofBuilder tc, td;
  tc.taut_line(parse("(p -> p) & (p -> p)"));
  td.taut_line(parse("(q|#f -> q) & (q -> q|#f)"));
  Proof pr2 = congruence_proof(tc.take(), td.take());
  CHECK(check_proof(il_minus, pr2).ok);
  CHECK(equal(pr2.conclusion(),
              parse("(p|>(q|#f) -> p|>q) & (p|>q -> p|>(q|#f))")));
}

TEST_CASE("derive_scheme_instance covers cross-scheme routes") {
  struct Case {
    const char *logic;
    SchemeId s;
  };
  for (const Case &c : std::initializer_list<Case>{
           {"IL-(J2)", SchemeId::J4},
           {"IL-(J2+)", SchemeId::J2},
           {"IL-(J2+)", SchemeId::J4plus},
           {"IL-(J4+)", SchemeId::J4},
           {"CL", SchemeId::J2plus},
           {"CL", SchemeId::J4plus},
           {"CL", SchemeId::J4},
           {"IL", SchemeId::J2plus},
           {"IL-(J1)", SchemeId::J1p},
       }) {
    const Logic &l = *logic_by_name(c.logic);
    auto pr = derive_scheme_instance(l, c.s);
    REQUIRE(pr.has_value());
    ProofVerdict v = check_proof(l, *pr);
    INFO(scheme_name(c.s), " in ", c.logic, ": ", v.reason);
    CHECK(v.ok);
    CHECK(equal(pr->conclusion(), char_instance(c.s)));
  }
  CHECK(!derive_scheme_instance(*logic_by_name("IL-"), SchemeId::J1)
             .has_value());
  CHECK(!derive_scheme_instance(*logic_by_name("IL-(J4)"), SchemeId::J4plus)
             .has_value());
  CHECK(!derive_scheme_instance(*logic_by_name("IL-(J5)"), SchemeId::J2)
             .has_value());
}
