#pragma once

#include "il/veltman.hpp"

namespace il {

/// Generalized frame: S_x relates worlds to nonempty world sets,
/// upward closed under superset. Stored by minimal generators, so
/// y S_x V holds iff some generator for (x,y) is contained in V.
struct GenFrame {
  std::vector<std::string> worlds;
  std::vector<WorldSet> r;
  // gen[x][y]: antichain of nonempty generator sets
  std::vector<std::vector<std::vector<WorldSet>>> gen;

  int size() const { return static_cast<int>(worlds.size()); }
  bool has_r(int x, int y) const { return (r[x] >> y) & 1; }
  bool s(int x, int y, WorldSet v) const {
    for (WorldSet g : gen[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)])
      if ((g & ~v) == 0) return true;
    return false;
  }
  std::optional<int> world_index(const std::string &name) const;
};

GenFrame make_gen_frame(int n);

struct GenModel {
  GenFrame frame;
  std::map<std::string, WorldSet> val;
};

/// Drops generators that contain another generator for the same pair.
void antichain_reduce(GenFrame &f);

std::string check_gen_frame(const GenFrame &f);

WorldSet gen_eval_set(const GenModel &m, const Formula &f);
bool gen_eval(const GenModel &m, int w, const Formula &f);
bool gen_valid_in_model(const GenModel &m, const Formula &f);
bool gen_valid_in_frame(const GenFrame &f, const Formula &a,
                        std::uint64_t budget = 1ull << 24);
std::optional<std::map<std::string, WorldSet>>
gen_falsifying_valuation(const GenFrame &f, const Formula &a,
                         std::uint64_t budget = 1ull << 24);

/// y S'_x V iff some z in V has y S_x z: generators become the
/// singletons {z}. Evaluation is preserved at every world.
GenModel embed_veltman(const VeltmanModel &m);
GenFrame embed_veltman_frame(const VeltmanFrame &f);

// JSON round trip, format:
// {"worlds":[...], "R":[[x,y],...],
//  "S":{"x":{"y":[["z1","z2"],...],...},...}, "val":{"p":[...]}}
// Empty generators are rejected; non-antichain input is rejected
// unless auto_reduce is set.
std::string gen_model_to_json(const GenModel &m);
GenModel gen_model_from_json(const std::string &text, bool auto_reduce = false);

} // namespace il
