#include "il/correspondence.hpp"

#include "il/parse.hpp"

#include <bit>
#include <random>
#include <stdexcept>

namespace il {

namespace {

bool is_veltman_condition(ConditionId c) {
  switch (c) {
  case ConditionId::V_J1:
  case ConditionId::V_J4:
  case ConditionId::V_J2:
  case ConditionId::V_J5:
    return true;
  default:
    return false;
  }
}

int first_bit(WorldSet w) { return std::countr_zero(w); }

// First violation of each Veltman condition, -1 coordinates if none.
// The tuples are exactly what the witness valuations below need.
struct Viols {
  int j1x = -1, j1y = -1;           // xRy, not y S_x y
  int j4x = -1, j4y = -1, j4z = -1; // y S_x z, not xRz
  int trx = -1, tra = -1, trb = -1, trc = -1; // a S_x b S_x c, not a S_x c
  int j5x = -1, j5y = -1, j5z = -1; // xRy, yRz, not y S_x z
};

Viols find_viols(const VeltmanFrame &f) {
  Viols v;
  int n = f.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      WorldSet sy = f.s[x][y];
      if (f.has_r(x, y)) {
        if (v.j1x < 0 && !((sy >> y) & 1)) {
          v.j1x = x;
          v.j1y = y;
        }
        if (v.j5x < 0 && (f.r[y] & ~sy)) {
          v.j5x = x;
          v.j5y = y;
          v.j5z = first_bit(f.r[y] & ~sy);
        }
      }
      if (v.j4x < 0 && (sy & ~f.r[x])) {
        v.j4x = x;
        v.j4y = y;
        v.j4z = first_bit(sy & ~f.r[x]);
      }
      if (v.trx < 0 && sy) {
        for (int b = 0; b < n && v.trx < 0; ++b) {
          if (!((sy >> b) & 1))
            continue;
          WorldSet miss = f.s[x][b] & ~sy;
          if (miss) {
            v.trx = x;
            v.tra = y;
            v.trb = b;
            v.trc = first_bit(miss);
          }
        }
      }
    }
  }
  return v;
}

// --- generalized conditions, quantifiers over stored generators ---

bool g_j1(const GenFrame &f) {
  for (int x = 0; x < f.size(); ++x)
    for (int y = 0; y < f.size(); ++y)
      if (f.has_r(x, y) && !f.s(x, y, WorldSet(1) << y))
        return false;
  return true;
}

bool g_j5(const GenFrame &f) {
  for (int x = 0; x < f.size(); ++x)
    for (int y = 0; y < f.size(); ++y) {
      if (!f.has_r(x, y))
        continue;
      for (int z = 0; z < f.size(); ++z)
        if (f.has_r(y, z) && !f.s(x, y, WorldSet(1) << z))
          return false;
    }
  return true;
}

bool g_j4(const GenFrame &f) {
  for (int x = 0; x < f.size(); ++x)
    for (int y = 0; y < f.size(); ++y)
      for (WorldSet g : f.gen[x][y])
        if (!(g & f.r[x]))
          return false;
  return true;
}

bool g_j4plus(const GenFrame &f) {
  for (int x = 0; x < f.size(); ++x)
    for (int y = 0; y < f.size(); ++y)
      for (WorldSet g : f.gen[x][y])
        if (!f.s(x, y, g & f.r[x]))
          return false;
  return true;
}

// Runs fn(union of one choice per z in zs) for every choice assignment,
// where the choices for z come from pick(z). Returns true if every run
// returned true; vacuously true when some z has no choices.
template <class Pick, class Fn>
bool all_choice_unions(const std::vector<int> &zs, Pick pick, Fn fn) {
  std::vector<const std::vector<WorldSet> *> opts;
  for (int z : zs) {
    opts.push_back(pick(z));
    if (opts.back()->empty())
      return true;
  }
  std::vector<std::size_t> idx(zs.size(), 0);
  for (;;) {
    WorldSet u = 0;
    for (std::size_t k = 0; k < zs.size(); ++k)
      u |= (*opts[k])[idx[k]];
    if (!fn(u))
      return false;
    std::size_t k = 0;
    while (k < zs.size() && ++idx[k] == opts[k]->size())
      idx[k++] = 0;
    if (k == zs.size())
      break;
  }
  return true;
}

std::vector<int> bits_of(WorldSet w) {
  std::vector<int> out;
  for (; w; w &= w - 1)
    out.push_back(first_bit(w));
  return out;
}

bool g_j2(const GenFrame &f) {
  if (!g_j4(f))
    return false;
  for (int x = 0; x < f.size(); ++x)
    for (int y = 0; y < f.size(); ++y)
      for (WorldSet g : f.gen[x][y]) {
        auto zs = bits_of(g & f.r[x]);
        bool ok = all_choice_unions(
            zs, [&](int z) { return &f.gen[x][z]; },
            [&](WorldSet u) { return f.s(x, y, u); });
        if (!ok)
          return false;
      }
  return true;
}

bool g_j2plus(const GenFrame &f) {
  if (!g_j4(f))
    return false;
  for (int x = 0; x < f.size(); ++x)
    for (int y = 0; y < f.size(); ++y)
      for (WorldSet g : f.gen[x][y]) {
        // split g into the part quantified by choices and the carried part
        for (WorldSet g0 = g;; g0 = (g0 - 1) & g) {
          WorldSet g1 = g & ~g0;
          auto zs = bits_of(g0 & f.r[x]);
          bool ok = all_choice_unions(
              zs, [&](int z) { return &f.gen[x][z]; },
              [&](WorldSet u) { return f.s(x, y, u | g1); });
          if (!ok)
            return false;
          if (!g0)
            break;
        }
      }
  return true;
}

// --- literal powerset readings of the same conditions ---

bool g_j4_powerset(const GenFrame &f) {
  WorldSet all = (f.size() == 32) ? ~WorldSet(0) : (WorldSet(1) << f.size()) - 1;
  for (int x = 0; x < f.size(); ++x)
    for (int y = 0; y < f.size(); ++y)
      for (WorldSet v = all;; v = (v - 1) & all) {
        if (f.s(x, y, v) && !(v & f.r[x]))
          return false;
        if (!v)
          break;
      }
  return true;
}

bool g_j4plus_powerset(const GenFrame &f) {
  WorldSet all = (WorldSet(1) << f.size()) - 1;
  for (int x = 0; x < f.size(); ++x)
    for (int y = 0; y < f.size(); ++y)
      for (WorldSet v = all;; v = (v - 1) & all) {
        if (f.s(x, y, v) && !f.s(x, y, v & f.r[x]))
          return false;
        if (!v)
          break;
      }
  return true;
}

// Subsets u with z S_x u, for choice enumeration.
std::vector<WorldSet> s_sets(const GenFrame &f, int x, int z) {
  WorldSet all = (WorldSet(1) << f.size()) - 1;
  std::vector<WorldSet> out;
  for (WorldSet u = all;; u = (u - 1) & all) {
    if (f.s(x, z, u))
      out.push_back(u);
    if (!u)
      break;
  }
  return out;
}

bool g_j2_powerset(const GenFrame &f) {
  if (!g_j4_powerset(f))
    return false;
  WorldSet all = (WorldSet(1) << f.size()) - 1;
  for (int x = 0; x < f.size(); ++x) {
    std::vector<std::vector<WorldSet>> us(f.size());
    for (int z = 0; z < f.size(); ++z)
      us[z] = s_sets(f, x, z);
    for (int y = 0; y < f.size(); ++y)
      for (WorldSet v = all;; v = (v - 1) & all) {
        if (f.s(x, y, v)) {
          auto zs = bits_of(v & f.r[x]);
          bool ok = all_choice_unions(
              zs, [&](int z) { return &us[z]; },
              [&](WorldSet u) { return f.s(x, y, u); });
          if (!ok)
            return false;
        }
        if (!v)
          break;
      }
  }
  return true;
}

bool g_j2plus_powerset(const GenFrame &f) {
  if (!g_j4_powerset(f))
    return false;
  WorldSet all = (WorldSet(1) << f.size()) - 1;
  for (int x = 0; x < f.size(); ++x) {
    std::vector<std::vector<WorldSet>> us(f.size());
    for (int z = 0; z < f.size(); ++z)
      us[z] = s_sets(f, x, z);
    for (int y = 0; y < f.size(); ++y)
      for (WorldSet v0 = all;; v0 = (v0 - 1) & all) {
        for (WorldSet v1 = all;; v1 = (v1 - 1) & all) {
          if (f.s(x, y, v0 | v1)) {
            auto zs = bits_of(v0 & f.r[x]);
            bool ok = all_choice_unions(
                zs, [&](int z) { return &us[z]; },
                [&](WorldSet u) { return f.s(x, y, u | v1); });
            if (!ok)
              return false;
          }
          if (!v1)
            break;
        }
        if (!v0)
          break;
      }
  }
  return true;
}

} // namespace

Formula characteristic_instance(ConditionId c) {
  static const Formula j1 = parse("p |> p");
  static const Formula j2 = parse("(p |> q) & (q |> r) -> p |> r");
  static const Formula j2plus = parse("(p |> (q | r)) & (q |> r) -> p |> r");
  static const Formula j4 = parse("p |> q -> (<>p -> <>q)");
  static const Formula j4plus = parse("[](q -> r) -> (p |> q -> p |> r)");
  static const Formula j5 = parse("<>p |> p");
  switch (c) {
  case ConditionId::V_J1:
  case ConditionId::G_J1:
    return j1;
  case ConditionId::V_J2:
  case ConditionId::G_J2:
    return j2;
  case ConditionId::G_J2plus:
    return j2plus;
  case ConditionId::V_J4:
  case ConditionId::G_J4:
    return j4;
  case ConditionId::G_J4plus:
    return j4plus;
  case ConditionId::V_J5:
  case ConditionId::G_J5:
    return j5;
  }
  throw std::invalid_argument("unknown condition");
}

bool veltman_condition(const VeltmanFrame &f, ConditionId c) {
  if (!is_veltman_condition(c))
    throw std::invalid_argument(condition_name(c) +
                                " is not a Veltman frame condition");
  Viols v = find_viols(f);
  switch (c) {
  case ConditionId::V_J1:
    return v.j1x < 0;
  case ConditionId::V_J4:
    return v.j4x < 0;
  case ConditionId::V_J2:
    return v.j4x < 0 && v.trx < 0;
  default:
    return v.j5x < 0;
  }
}

bool gen_condition(const GenFrame &f, ConditionId c) {
  switch (c) {
  case ConditionId::G_J1:
    return g_j1(f);
  case ConditionId::G_J4:
    return g_j4(f);
  case ConditionId::G_J4plus:
    return g_j4plus(f);
  case ConditionId::G_J2:
    return g_j2(f);
  case ConditionId::G_J2plus:
    return g_j2plus(f);
  case ConditionId::G_J5:
    return g_j5(f);
  default:
    throw std::invalid_argument(condition_name(c) +
                                " is not a generalized frame condition");
  }
}

bool gen_condition_powerset(const GenFrame &f, ConditionId c) {
  switch (c) {
  case ConditionId::G_J1:
    return g_j1(f); // already quantifier-free over sets
  case ConditionId::G_J5:
    return g_j5(f);
  case ConditionId::G_J4:
    return g_j4_powerset(f);
  case ConditionId::G_J4plus:
    return g_j4plus_powerset(f);
  case ConditionId::G_J2:
    return g_j2_powerset(f);
  case ConditionId::G_J2plus:
    return g_j2plus_powerset(f);
  default:
    throw std::invalid_argument(condition_name(c) +
                                " is not a generalized frame condition");
  }
}

bool satisfies_logic_conditions(const VeltmanFrame &f, const Logic &l) {
  if (l.complete_class != CompleteClass::veltman)
    throw std::invalid_argument(l.name + " is not Veltman-complete");
  for (ConditionId c : l.frame_conditions)
    if (!veltman_condition(f, c))
      return false;
  return true;
}

bool satisfies_logic_conditions(const GenFrame &f, const Logic &l) {
  if (l.complete_class != CompleteClass::generalized)
    throw std::invalid_argument(l.name +
                                " is not matched to generalized frames");
  for (ConditionId c : l.frame_conditions)
    if (!gen_condition(f, c))
      return false;
  return true;
}

CorrespondenceReport correspondence_audit(const VeltmanFrame &f, ConditionId c,
                                          std::uint64_t budget) {
  CorrespondenceReport rep;
  rep.cond = c;
  rep.condition_holds = veltman_condition(f, c);
  auto fal = falsifying_valuation(f, characteristic_instance(c), budget);
  rep.instance_valid = !fal.has_value();
  if (!rep.agree() && fal)
    rep.separating = *fal;
  return rep;
}

CorrespondenceReport correspondence_audit(const GenFrame &f, ConditionId c,
                                          std::uint64_t budget) {
  CorrespondenceReport rep;
  rep.cond = c;
  rep.condition_holds = gen_condition(f, c);
  if (f.size() <= 4 && gen_condition_powerset(f, c) != rep.condition_holds)
    throw std::logic_error("generator reduction disagrees with powerset "
                           "evaluation for " +
                           condition_name(c));
  auto fal = gen_falsifying_valuation(f, characteristic_instance(c), budget);
  rep.instance_valid = !fal.has_value();
  if (!rep.agree() && fal)
    rep.separating = *fal;
  return rep;
}

namespace {

struct SweepInstance {
  Formula inst;
  int kind; // 0 J1, 1 J4, 2 J4+, 3 J2, 4 J2+, 5 J5
};

const std::vector<SweepInstance> &sweep_instances() {
  static const std::vector<SweepInstance> v = {
      {characteristic_instance(ConditionId::V_J1), 0},
      {characteristic_instance(ConditionId::V_J4), 1},
      {characteristic_instance(ConditionId::G_J4plus), 2},
      {characteristic_instance(ConditionId::V_J2), 3},
      {characteristic_instance(ConditionId::G_J2plus), 4},
      {characteristic_instance(ConditionId::V_J5), 5},
  };
  return v;
}

// True when the condition paired with the instance holds.
bool cond_of(const Viols &v, int kind) {
  switch (kind) {
  case 0:
    return v.j1x < 0;
  case 1:
  case 2:
    return v.j4x < 0;
  case 3:
  case 4:
    return v.j4x < 0 && v.trx < 0;
  default:
    return v.j5x < 0;
  }
}

// Valuation under which the instance fails at the returned world,
// built from the violating tuple per the correspondence arguments.
int witness_val(const Viols &v, int kind, WorldSet &p, WorldSet &q,
                WorldSet &r) {
  p = q = r = 0;
  switch (kind) {
  case 0:
    p = WorldSet(1) << v.j1y;
    return v.j1x;
  case 1:
  case 2:
    p = WorldSet(1) << v.j4y;
    q = WorldSet(1) << v.j4z;
    return v.j4x;
  case 3:
  case 4:
    if (v.j4x >= 0) {
      p = WorldSet(1) << v.j4y;
      q = WorldSet(1) << v.j4z;
      return v.j4x;
    }
    p = WorldSet(1) << v.tra;
    q = WorldSet(1) << v.trb;
    r = WorldSet(1) << v.trc;
    return v.trx;
  default:
    p = WorldSet(1) << v.j5z;
    return v.j5x;
  }
}

// All S assignments for a fixed R, counter-decoded n bits per R pair.
void sweep_r_block(const VeltmanFrame &base,
                   const std::vector<std::pair<int, int>> &pairs, bool parallel,
                   std::uint64_t full_every, SweepStats &st) {
  const int n = base.size();
  const auto &ins = sweep_instances();
  const std::uint64_t total = std::uint64_t(1) << (n * pairs.size());
  const WorldSet zmask = (WorldSet(1) << n) - 1;
#pragma omp parallel if (parallel)
  {
    VeltmanModel m{base, {{"p", 0}, {"q", 0}, {"r", 0}}};
    SweepStats local;
#pragma omp for schedule(dynamic, 4096)
    for (long long c = 0; c < static_cast<long long>(total); ++c) {
      for (std::size_t k = 0; k < pairs.size(); ++k)
        m.frame.s[pairs[k].first][pairs[k].second] =
            static_cast<WorldSet>(std::uint64_t(c) >> (k * n)) & zmask;
      local.frames++;
      Viols v = find_viols(m.frame);
      bool full = full_every && (std::uint64_t(c) % full_every == 0);
      for (const auto &si : ins) {
        bool cond = cond_of(v, si.kind);
        if (!cond && !full) {
          int w = witness_val(v, si.kind, m.val["p"], m.val["q"], m.val["r"]);
          local.witness_checks++;
          if (!eval(m, w, si.inst))
            continue; // invalid as predicted
          full = true; // witness failed to falsify: escalate
        }
        local.full_checks++;
        if (valid_in_frame(m.frame, si.inst) != cond)
          local.disagreements++;
      }
    }
#pragma omp critical
    {
      st.frames += local.frames;
      st.witness_checks += local.witness_checks;
      st.full_checks += local.full_checks;
      st.disagreements += local.disagreements;
    }
  }
}

} // namespace

SweepStats sweep_veltman_frames(int max_n, bool parallel,
                                std::uint64_t full_every) {
  SweepStats st;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::pair<int, int>> all_pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        all_pairs.emplace_back(i, j);
    for (std::uint32_t mask = 0; mask < (1u << all_pairs.size()); ++mask) {
      VeltmanFrame f = make_veltman_frame(n);
      std::vector<std::pair<int, int>> pairs;
      for (std::size_t k = 0; k < all_pairs.size(); ++k)
        if ((mask >> k) & 1) {
          pairs.push_back(all_pairs[k]);
          f.r[all_pairs[k].first] |= WorldSet(1) << all_pairs[k].second;
        }
      bool transitive = true;
      for (int x = 0; x < n && transitive; ++x)
        for (int y = 0; y < n; ++y)
          if (f.has_r(x, y) && (f.r[y] & ~f.r[x])) {
            transitive = false;
            break;
          }
      if (!transitive)
        continue;
      sweep_r_block(f, pairs, parallel, full_every, st);
    }
  }
  return st;
}

SweepStats sample_gen_frames(int count, int n, unsigned seed) {
  static const ConditionId conds[] = {
      ConditionId::G_J1, ConditionId::G_J4,     ConditionId::G_J4plus,
      ConditionId::G_J2, ConditionId::G_J2plus, ConditionId::G_J5,
  };
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coin(0, 2);
  std::uniform_int_distribution<WorldSet> subset(1, (WorldSet(1) << n) - 1);
  SweepStats st;
  for (int t = 0; t < count; ++t) {
    GenFrame f = make_gen_frame(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng) == 0)
          f.r[i] |= WorldSet(1) << j;
    // transitive closure stays within the increasing order
    for (int k = 0; k < n; ++k)
      for (int x = 0; x < n; ++x)
        if (f.has_r(x, k))
          f.r[x] |= f.r[k];
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (!f.has_r(x, y))
          continue;
        int gens = coin(rng);
        for (int g = 0; g < gens; ++g)
          f.gen[x][y].push_back(subset(rng));
      }
    antichain_reduce(f);
    st.frames++;
    for (ConditionId c : conds) {
      CorrespondenceReport rep = correspondence_audit(f, c);
      st.full_checks++;
      if (!rep.agree())
        st.disagreements++;
    }
  }
  return st;
}

} // namespace il
