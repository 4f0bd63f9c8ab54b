#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "il/correspondence.hpp"
#include "il/parse.hpp"
#include "random_models.hpp"

#include <fstream>
#include <sstream>

using namespace il;

namespace {

std::string slurp(const std::string &path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

GenFrame load_frame(const std::string &name) {
  return gen_model_from_json(slurp(std::string(DATA_DIR) + "/" + name)).frame;
}

} // namespace

TEST_CASE("characteristic instances") {
  CHECK(print(characteristic_instance(ConditionId::V_J1)) == "p |> p");
  CHECK(print(characteristic_instance(ConditionId::G_J5)) == "<>p |> p");
  CHECK(print(characteristic_instance(ConditionId::G_J4plus)) ==
        "[](q -> r) -> p |> q -> p |> r");
  CHECK(equal(characteristic_instance(ConditionId::V_J2),
              characteristic_instance(ConditionId::G_J2)));
}

TEST_CASE("veltman conditions on small frames") {
  VeltmanFrame f = make_veltman_frame(3); // x=0, y=1, z=2
  f.r[0] = 0b010;
  f.s[0][1] = 0b010; // y S_x y
  REQUIRE(check_frame(f).empty());
  CHECK(veltman_condition(f, ConditionId::V_J1));
  CHECK(veltman_condition(f, ConditionId::V_J4));
  CHECK(veltman_condition(f, ConditionId::V_J5));

  f.s[0][1] = 0b100; // y S_x z with z outside R[x]
  CHECK_FALSE(veltman_condition(f, ConditionId::V_J1));
  CHECK_FALSE(veltman_condition(f, ConditionId::V_J4));
  CHECK_FALSE(veltman_condition(f, ConditionId::V_J2));

  VeltmanFrame g = make_veltman_frame(3);
  g.r[0] = 0b110;
  g.r[1] = 0b100;
  g.s[0][1] = 0b110;
  g.s[0][2] = 0b100;
  g.s[1][2] = 0b100;
  REQUIRE(check_frame(g).empty());
  CHECK(veltman_condition(g, ConditionId::V_J5));
  g.s[0][1] = 0b010; // drop y S_x z
  CHECK_FALSE(veltman_condition(g, ConditionId::V_J5));

  CHECK_THROWS_AS(veltman_condition(f, ConditionId::G_J1),
                  std::invalid_argument);
}

TEST_CASE("S_x transitivity part of V_J2") {
  VeltmanFrame f = make_veltman_frame(3);
  f.r[0] = 0b110;
  f.r[1] = 0b100;
  f.s[0][1] = 0b100; // 1 S_0 2
  f.s[0][2] = 0b010; // 2 S_0 1
  REQUIRE(check_frame(f).empty());
  CHECK(veltman_condition(f, ConditionId::V_J4));
  CHECK_FALSE(veltman_condition(f, ConditionId::V_J2)); // 1 S_0 2 S_0 1, not 1 S_0 1
  f.s[0][1] = 0b110;
  f.s[0][2] = 0b110;
  CHECK(veltman_condition(f, ConditionId::V_J2));
}

TEST_CASE("exhaustive agreement, all frames with at most 3 worlds") {
  // full validity search on every frame
  SweepStats full = sweep_veltman_frames(3, false, 1);
  CHECK(full.frames == 671); // 1 + 5 + 665 over n = 1, 2, 3
  CHECK(full.disagreements == 0);
  CHECK(full.full_checks == full.frames * 6);

  // witness-shortcut run over the same frames
  SweepStats fast = sweep_veltman_frames(3, false, 0);
  CHECK(fast.frames == 671);
  CHECK(fast.disagreements == 0);
  CHECK(fast.witness_checks + fast.full_checks == fast.frames * 6);

  SweepStats par = sweep_veltman_frames(3, true, 1000);
  CHECK(par.frames == full.frames);
  CHECK(par.disagreements == 0);
}

TEST_CASE("audit reports") {
  VeltmanFrame f = make_veltman_frame(2);
  f.r[0] = 0b10;
  f.s[0][1] = 0b10;
  auto rep = correspondence_audit(f, ConditionId::V_J1);
  CHECK(rep.condition_holds);
  CHECK(rep.instance_valid);
  CHECK(rep.agree());
  CHECK(rep.separating.empty());

  f.s[0][1] = 0;
  rep = correspondence_audit(f, ConditionId::V_J1);
  CHECK_FALSE(rep.condition_holds);
  CHECK_FALSE(rep.instance_valid);
  CHECK(rep.agree());
}

TEST_CASE("generalized conditions on the counterexample frames") {
  GenFrame f1 = load_frame("icp1.json");
  CHECK(gen_condition(f1, ConditionId::G_J4));
  CHECK(gen_condition(f1, ConditionId::G_J4plus));
  CHECK(gen_condition(f1, ConditionId::G_J2));
  CHECK(gen_condition(f1, ConditionId::G_J5));
  CHECK_FALSE(gen_condition(f1, ConditionId::G_J2plus));
  CHECK_FALSE(gen_condition(f1, ConditionId::G_J1));

  GenFrame f2 = load_frame("icp2.json");
  CHECK(gen_condition(f2, ConditionId::G_J1));
  CHECK(gen_condition(f2, ConditionId::G_J4));
  CHECK(gen_condition(f2, ConditionId::G_J5));
  CHECK_FALSE(gen_condition(f2, ConditionId::G_J4plus));

  for (ConditionId c :
       {ConditionId::G_J1, ConditionId::G_J4, ConditionId::G_J4plus,
        ConditionId::G_J2, ConditionId::G_J2plus, ConditionId::G_J5}) {
    CHECK(correspondence_audit(f1, c).agree());
    CHECK(correspondence_audit(f2, c).agree());
  }
  CHECK_FALSE(correspondence_audit(f1, ConditionId::G_J2plus).instance_valid);
  CHECK_FALSE(correspondence_audit(f2, ConditionId::G_J4plus).instance_valid);

  CHECK_THROWS_AS(gen_condition(f1, ConditionId::V_J1), std::invalid_argument);
}

TEST_CASE("sampled generalized frames agree, generator and powerset") {
  // correspondence_audit cross-checks gen_condition against the
  // powerset evaluation on every frame of size 4
  SweepStats st = sample_gen_frames(150, 4, 20240817);
  CHECK(st.frames == 150);
  CHECK(st.disagreements == 0);
  SweepStats st3 = sample_gen_frames(150, 3, 7);
  CHECK(st3.disagreements == 0);
}

TEST_CASE("embedding carries each condition across frame classes") {
  std::mt19937 rng(42);
  for (int t = 0; t < 200; ++t) {
    VeltmanFrame f = il::testing::random_veltman_frame(rng, 4);
    GenFrame e = embed_veltman_frame(f);
    CHECK(gen_condition(e, ConditionId::G_J1) ==
          veltman_condition(f, ConditionId::V_J1));
    CHECK(gen_condition(e, ConditionId::G_J4) ==
          veltman_condition(f, ConditionId::V_J4));
    CHECK(gen_condition(e, ConditionId::G_J4plus) ==
          veltman_condition(f, ConditionId::V_J4));
    CHECK(gen_condition(e, ConditionId::G_J2) ==
          veltman_condition(f, ConditionId::V_J2));
    CHECK(gen_condition(e, ConditionId::G_J2plus) ==
          veltman_condition(f, ConditionId::V_J2));
    CHECK(gen_condition(e, ConditionId::G_J5) ==
          veltman_condition(f, ConditionId::V_J5));
  }
}

TEST_CASE("logic condition bundles") {
  VeltmanFrame f = make_veltman_frame(2);
  f.r[0] = 0b10;
  f.s[0][1] = 0b10;
  CHECK(satisfies_logic_conditions(f, *logic_by_name("IL")));
  CHECK(satisfies_logic_conditions(f, *logic_by_name("IL-")));
  f.s[0][1] = 0;
  CHECK_FALSE(satisfies_logic_conditions(f, *logic_by_name("IL")));
  CHECK(satisfies_logic_conditions(f, *logic_by_name("IL-(J4+)")));
  CHECK_THROWS_AS(satisfies_logic_conditions(f, *logic_by_name("IL-(J2)")),
                  std::invalid_argument);

  GenFrame e = embed_veltman_frame(f);
  CHECK(satisfies_logic_conditions(e, *logic_by_name("IL-(J4)")));
  CHECK_THROWS_AS(satisfies_logic_conditions(e, *logic_by_name("IL")),
                  std::invalid_argument);
}
