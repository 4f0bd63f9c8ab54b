#pragma once

#include "il/formula.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace il {

/// World sets are bitmasks, so frames are capped at 32 worlds; every
/// construction here stays far below that.
using WorldSet = std::uint32_t;

struct VeltmanFrame {
  std::vector<std::string> worlds;
  std::vector<WorldSet> r;              // r[x]: successors of x
  std::vector<std::vector<WorldSet>> s; // s[x][y]: the z with y S_x z

  int size() const { return static_cast<int>(worlds.size()); }
  bool has_r(int x, int y) const { return (r[x] >> y) & 1; }
  std::optional<int> world_index(const std::string &name) const;
};

/// Frame with all world sets empty, worlds named w0..w{n-1}.
VeltmanFrame make_veltman_frame(int n);

struct VeltmanModel {
  VeltmanFrame frame;
  std::map<std::string, WorldSet> val;
};

/// Empty string if well-formed, else a description of the violated
/// clause with a witness.
std::string check_frame(const VeltmanFrame &f);

/// Worlds satisfying f, bottom-up over subformulas.
WorldSet eval_set(const VeltmanModel &m, const Formula &f);
bool eval(const VeltmanModel &m, int w, const Formula &f);
bool valid_in_model(const VeltmanModel &m, const Formula &f);

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// True iff a holds at every world under every valuation of a's
/// variables. Throws BudgetExceeded if 2^(k*|W|) > budget.
bool valid_in_frame(const VeltmanFrame &f, const Formula &a,
                    std::uint64_t budget = 1ull << 24);

/// A valuation making a fail somewhere, if any (same budget rule).
std::optional<std::map<std::string, WorldSet>>
falsifying_valuation(const VeltmanFrame &f, const Formula &a,
                     std::uint64_t budget = 1ull << 24);

// JSON round trip, format:
// {"worlds":[...], "R":[[x,y],...], "S":{"x":[[y,z],...]}, "val":{"p":[...]}}
std::string veltman_model_to_json(const VeltmanModel &m);
VeltmanModel veltman_model_from_json(const std::string &text);

} // namespace il
