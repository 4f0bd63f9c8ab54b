#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "il/library.hpp"
#include "il/parse.hpp"
#include "random_models.hpp"

#include <fstream>
#include <sstream>

using namespace il;
using namespace il::testing;

namespace {

std::string slurp(const std::string &path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GenModel load_icp(int which) {
  return gen_model_from_json(
      slurp(std::string(DATA_DIR) + "/icp" + std::to_string(which) + ".json"));
}

} // namespace

TEST_CASE("check_gen_frame") {
  GenFrame f = make_gen_frame(2);
  f.r[0] = 0b10;
  f.gen[0][1] = {0b10};
  CHECK(check_gen_frame(f).empty());

  f.gen[0][1] = {0b10, 0b11}; // {w1} subset of {w0,w1}
  CHECK(check_gen_frame(f).find("antichain") != std::string::npos);
  antichain_reduce(f);
  CHECK(f.gen[0][1] == std::vector<WorldSet>{0b10});
  CHECK(check_gen_frame(f).empty());

  f.gen[0][1] = {0};
  CHECK(check_gen_frame(f).find("empty generator") != std::string::npos);

  GenFrame g = make_gen_frame(2);
  g.gen[0][1] = {0b01};
  CHECK(check_gen_frame(g).find("non-successor") != std::string::npos);
}

TEST_CASE("monotone S lookup") {
  GenFrame f = make_gen_frame(3);
  f.r[0] = 0b110;
  f.gen[0][1] = {0b100};
  CHECK(f.s(0, 1, 0b100));
  CHECK(f.s(0, 1, 0b110)); // superset, by monotone closure
  CHECK(!f.s(0, 1, 0b010));
  CHECK(!f.s(0, 2, 0b111)); // no generators at all
}

TEST_CASE("icp1 frame evaluation") {
  GenModel m = load_icp(1);
  REQUIRE(check_gen_frame(m.frame).empty());
  m.val = {{"p", 0b0010}, {"q", 0b0100}, {"r", 0b1000}};
  // worlds: x=0, y0=1, y1=2, y2=3
  CHECK(gen_eval(m, 0, parse("p |> (q|r)")));
  CHECK(gen_eval(m, 0, parse("q |> r")));
  CHECK(!gen_eval(m, 0, parse("p |> r")));
  CHECK(!gen_eval(m, 0, parse("(p|>(q|r)) & (q|>r) -> p|>r")));
  // J5 is trivially valid: no world has an R-successor with one of its own
  CHECK(gen_valid_in_frame(m.frame, char_instance(SchemeId::J5)));
}

TEST_CASE("icp2 frame evaluation") {
  GenModel m = load_icp(2);
  REQUIRE(check_gen_frame(m.frame).empty());
  m.val = {{"p", 0b0010}, {"q", 0b1100}, {"r", 0b0100}};
  CHECK(gen_eval(m, 0, parse("[](q->r)")));
  CHECK(gen_eval(m, 0, parse("p |> q")));
  CHECK(!gen_eval(m, 0, parse("p |> r")));
  // J1 via the singleton generators y0 S_x {y0}, y1 S_x {y1}
  CHECK(gen_valid_in_frame(m.frame, char_instance(SchemeId::J1)));
  CHECK(gen_valid_in_frame(m.frame, rhd(var("p"), var("p"))));
}

TEST_CASE("worlds without successors interpret |> trivially") {
  GenModel m{make_gen_frame(1), {}};
  CHECK(gen_eval(m, 0, parse("p |> #f")));
  CHECK(gen_eval(m, 0, parse("#t |> q")));
}

TEST_CASE("axiom soundness on random gen models") {
  std::mt19937 rng(91);
  std::vector<Formula> axioms;
  for (SchemeId s : {SchemeId::G2, SchemeId::G3, SchemeId::J3, SchemeId::J6})
    axioms.push_back(char_instance(s));
  for (int it = 0; it < 300; ++it) {
    GenFrame f = random_gen_frame(rng, 1 + it % 5);
    REQUIRE(check_gen_frame(f).empty());
    GenModel m{f, random_valuation(rng, f.size(), {"p", "q", "r"})};
    for (const auto &a : axioms) CHECK(gen_valid_in_model(m, a));
    Formula a = random_formula(rng, 3);
    CHECK(gen_eval_set(m, box(a)) == gen_eval_set(m, rhd(neg(a), bot())));
  }
}

TEST_CASE("embedding agreement") {
  std::mt19937 rng(2024);
  for (int it = 0; it < 300; ++it) {
    VeltmanFrame f = random_veltman_frame(rng, 1 + it % 5);
    VeltmanModel m{f, random_valuation(rng, f.size(), {"p", "q", "r"})};
    GenModel g = embed_veltman(m);
    REQUIRE(check_gen_frame(g.frame).empty());
    for (int i = 0; i < 10; ++i) {
      Formula a = random_formula(rng, 4);
      CHECK(eval_set(m, a) == gen_eval_set(g, a));
    }
  }
}

TEST_CASE("superset generators never change evaluation") {
  std::mt19937 rng(77);
  for (int it = 0; it < 150; ++it) {
    GenFrame f = random_gen_frame(rng, 4);
    GenModel m{f, random_valuation(rng, 4, {"p", "q"})};
    GenModel fat = m;
    // add one superset of an existing generator somewhere
    bool added = false;
    for (int x = 0; x < 4 && !added; ++x)
      for (int y = 0; y < 4 && !added; ++y)
        if (!fat.frame.gen[x][y].empty()) {
          WorldSet g = fat.frame.gen[x][y][0];
          WorldSet sup = g | (1u << (it % 4));
          if (sup != g) {
            fat.frame.gen[x][y].push_back(sup);
            added = true;
          }
        }
    if (!added) continue;
    for (int i = 0; i < 8; ++i) {
      Formula a = random_formula(rng, 4);
      CHECK(gen_eval_set(m, a) == gen_eval_set(fat, a));
    }
  }
}

TEST_CASE("gen json round trip and loader checks") {
  std::mt19937 rng(31);
  for (int it = 0; it < 50; ++it) {
    GenFrame f = random_gen_frame(rng, 1 + it % 5);
    GenModel m{f, random_valuation(rng, f.size(), {"p"})};
    GenModel back = gen_model_from_json(gen_model_to_json(m));
    CHECK(back.frame.worlds == m.frame.worlds);
    CHECK(back.frame.r == m.frame.r);
    CHECK(back.frame.gen == m.frame.gen);
    CHECK(back.val == m.val);
  }
  // empty generator rejected
  CHECK_THROWS(gen_model_from_json(
      R"({"worlds":["a","b"],"R":[["a","b"]],"S":{"a":{"b":[[]]}}})"));
  // non-antichain rejected without auto_reduce, accepted with
  std::string nested =
      R"({"worlds":["a","b"],"R":[["a","b"]],"S":{"a":{"b":[["b"],["a","b"]]}}})";
  CHECK_THROWS(gen_model_from_json(nested));
  GenModel ok = gen_model_from_json(nested, true);
  CHECK(ok.frame.gen[0][1] == std::vector<WorldSet>{0b10});
}
