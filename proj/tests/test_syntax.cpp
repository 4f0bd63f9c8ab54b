#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "il/adequate.hpp"
#include "il/formula.hpp"
#include "il/parse.hpp"

#include <random>

using namespace il;

TEST_CASE("parsing basics") {
  CHECK(print(parse("p & q | r")) == "p & q | r");
  CHECK(print(parse("(p | q) & r")) == "(p | q) & r");
  CHECK(print(parse("p -> q -> r")) == "p -> q -> r");
  CHECK(print(parse("(p -> q) -> r")) == "(p -> q) -> r");
  CHECK(print(parse("~p & q")) == "~p & q");
  CHECK(print(parse("~(p & q)")) == "~(p & q)");
  CHECK(print(parse("[]p |> <>q")) == "[]p |> <>q");
  CHECK(print(parse("p |> (q |> r)")) == "p |> (q |> r)");
  CHECK(print(parse("p | q |> r & s")) == "p | q |> r & s");
  CHECK(equal(parse("box p"), parse("[]p")));
  CHECK(equal(parse("top"), parse("#t")));
  CHECK(equal(parse("bot"), parse("#f")));
  CHECK(equal(parse("!p"), parse("~p")));
}

TEST_CASE("unicode operator spellings") {
  CHECK(equal(parse("¬p ∧ q"), parse("~p & q")));
  CHECK(equal(parse("p ∨ q → □r"), parse("p | q -> []r")));
  CHECK(equal(parse("◇p ▷ p"), parse("<>p |> p")));
}

TEST_CASE("dia is an abbreviation") {
  Formula f = parse("<>p");
  CHECK(f->kind() == Kind::Neg);
  CHECK(equal(f, parse("~[]~p")));
  CHECK(print(parse("~[]~p")) == "<>p");
  CHECK(is_dia(f));
  CHECK(equal(dia_operand(f), var("p")));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse("p |> q |> r"), ParseError);
  CHECK_THROWS_AS(parse("p &"), ParseError);
  CHECK_THROWS_AS(parse("(p"), ParseError);
  CHECK_THROWS_AS(parse("p q"), ParseError);
  CHECK_THROWS_AS(parse("@"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
}

TEST_CASE("]|> chain error mentions associativity") {
  try {
    parse("p |> q |> r");
    FAIL("expected throw");
  } catch (const ParseError &e) {
    CHECK(std::string(e.what()).find("non-associative") != std::string::npos);
  }
}

namespace {

Formula random_formula(std::mt19937 &rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 4 : 11);
  switch (pick(rng)) {
  case 0: return var("p");
  case 1: return var("q");
  case 2: return var("r");
  case 3: return top();
  case 4: return bot();
  case 5: return neg(random_formula(rng, depth - 1));
  case 6: return box(random_formula(rng, depth - 1));
  case 7: return dia(random_formula(rng, depth - 1));
  case 8:
    return conj(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
  case 9:
    return disj(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
  case 10:
    return imp(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
  default:
    return rhd(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
  }
}

} // namespace

TEST_CASE("print/parse round trip on random formulas") {
  std::mt19937 rng(20240817);
  for (int i = 0; i < 2000; ++i) {
    Formula f = random_formula(rng, 8);
    CHECK(equal(parse(print(f)), f));
  }
}

TEST_CASE("total order is a strict weak order consistent with equal") {
  std::mt19937 rng(7);
  std::vector<Formula> fs;
  for (int i = 0; i < 60; ++i) fs.push_back(random_formula(rng, 4));
  for (const auto &a : fs)
    for (const auto &b : fs) {
      int ab = compare(a, b), ba = compare(b, a);
      CHECK(ab == -ba);
      CHECK((ab == 0) == equal(a, b));
      for (const auto &c : fs)
        if (ab < 0 && compare(b, c) < 0) CHECK(compare(a, c) < 0);
    }
}

TEST_CASE("simneg") {
  CHECK(equal(simneg(parse("~p")), parse("p")));
  CHECK(equal(simneg(parse("p")), parse("~p")));
  CHECK(equal(simneg(parse("~~p")), parse("~p")));
  CHECK(equal(simneg(simneg(parse("p |> q"))), parse("p |> q")));
  std::mt19937 rng(11);
  for (int i = 0; i < 500; ++i) {
    Formula f = random_formula(rng, 6);
    Formula n = simneg(f);
    // at most one more node, and involutive up to one application
    CHECK(n->size() <= f->size() + 1);
    CHECK(equal(simneg(n), f->kind() == Kind::Neg ? simneg(n) : f));
  }
}

TEST_CASE("subformulas and rhd_operands") {
  auto subs = subformulas(parse("(p |> q) -> []r"));
  CHECK(subs.size() == 6);
  CHECK(subs.count(parse("p |> q")) == 1);
  CHECK(subs.count(parse("[]r")) == 1);
  CHECK(subs.count(parse("r")) == 1);

  FormulaSet phi{parse("p |> q"), parse("r")};
  auto ops = rhd_operands(phi);
  CHECK(ops.size() == 2);
  CHECK(ops.count(var("p")) == 1);
  CHECK(ops.count(var("q")) == 1);
  CHECK(rhd_operands({parse("#f |> #f")}).size() == 1);
  CHECK(rhd_operands(FormulaSet{}).empty());
}

TEST_CASE("adequate closure of {p}") {
  AdequateContext ctx = adequate_closure({var("p")});
  CHECK(adequate_violation(ctx) == std::nullopt);
  CHECK(ctx.phi_rhd().size() == 1);
  CHECK(equal(ctx.phi_rhd()[0], bot()));
  CHECK(ctx.contains(parse("p")));
  CHECK(ctx.contains(parse("~p")));
  CHECK(ctx.contains(parse("#f |> #f")));
  CHECK(ctx.contains(parse("[]~#f")));
  CHECK(ctx.contains(parse("[](#f -> #f)")));
  CHECK(ctx.contains(parse("[](#f -> <>#f)")));
  CHECK(ctx.contains(parse("[](#f -> #f | <>#f)")));
  MESSAGE("closure({p}) size: ", ctx.size());
}

TEST_CASE("adequate closure of {} is the #f skeleton") {
  AdequateContext ctx0 = adequate_closure({});
  CHECK(adequate_violation(ctx0) == std::nullopt);
  AdequateContext ctxp = adequate_closure({var("p")});
  // same except p and ~p
  CHECK(ctxp.size() == ctx0.size() + 2);
  for (const auto &f : ctx0.phi()) CHECK(ctxp.contains(f));
}

TEST_CASE("adequate closure is idempotent") {
  for (const char *seed : {"p", "p |> q", "[]p -> p"}) {
    AdequateContext ctx = adequate_closure({parse(seed)});
    CHECK(adequate_violation(ctx) == std::nullopt);
    FormulaSet phi(ctx.phi().begin(), ctx.phi().end());
    AdequateContext again = adequate_closure(phi);
    CHECK(again.size() == ctx.size());
    for (const auto &f : ctx.phi()) CHECK(again.contains(f));
  }
}

TEST_CASE("phi_rhd of closure equals rhd operand extraction") {
  AdequateContext ctx = adequate_closure({parse("p |> q")});
  FormulaSet phi(ctx.phi().begin(), ctx.phi().end());
  FormulaSet ops = rhd_operands(phi);
  CHECK(ops.size() == ctx.phi_rhd().size());
  for (const auto &b : ctx.phi_rhd()) CHECK(ops.count(b) == 1);
}
