#include "il/correspondence.hpp"
#include "il/decide.hpp"

#include <algorithm>

namespace il {

namespace {

struct Pair {
  int x, y;
};

std::vector<Pair> upper_pairs(int n) {
  std::vector<Pair> p;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) p.push_back({x, y});
  return p;
}

// r as bitmask rows from a subset of the i<j pairs; empty if not
// transitive. Every finite transitive irreflexive frame is isomorphic
// to one of these (relabel along a topological order).
std::optional<std::vector<WorldSet>> r_rows(const std::vector<Pair> &pairs,
                                            std::uint32_t rmask, int n) {
  std::vector<WorldSet> r(static_cast<std::size_t>(n), 0);
  for (std::size_t p = 0; p < pairs.size(); ++p)
    if ((rmask >> p) & 1)
      r[static_cast<std::size_t>(pairs[p].x)] |= 1u << pairs[p].y;
  for (const auto &[x, y] : pairs)
    if (((r[static_cast<std::size_t>(x)] >> y) & 1) &&
        (r[static_cast<std::size_t>(y)] &
         ~r[static_cast<std::size_t>(x)]))
      return std::nullopt;
  return r;
}

std::optional<Countermodel> veltman_hit(const VeltmanFrame &f,
                                        const Formula &a) {
  auto val = falsifying_valuation(f, a);
  if (!val) return std::nullopt;
  VeltmanModel m{f, *val};
  WorldSet holds = eval_set(m, a);
  for (int w = 0; w < f.size(); ++w)
    if (!((holds >> w) & 1)) {
      if (!check_frame(f).empty() || eval(m, w, a))
        throw std::logic_error("countermodel failed re-verification");
      Countermodel cm;
      cm.vmodel = std::move(m);
      cm.world = w;
      return cm;
    }
  throw std::logic_error("falsifying valuation refuted nothing");
}

std::optional<Countermodel> gen_hit(const GenFrame &f, const Formula &a) {
  auto val = gen_falsifying_valuation(f, a);
  if (!val) return std::nullopt;
  GenModel m{f, *val};
  WorldSet holds = gen_eval_set(m, a);
  for (int w = 0; w < f.size(); ++w)
    if (!((holds >> w) & 1)) {
      if (!check_gen_frame(f).empty() || gen_eval(m, w, a))
        throw std::logic_error("countermodel failed re-verification");
      Countermodel cm;
      cm.gmodel = std::move(m);
      cm.world = w;
      return cm;
    }
  throw std::logic_error("falsifying valuation refuted nothing");
}

std::optional<Countermodel> refute_veltman(const Logic &l, const Formula &a,
                                           int max_worlds,
                                           std::uint64_t &budget,
                                           bool &exhausted) {
  const auto &conds = l.frame_conditions;
  bool vj1 = false, vj4 = false, vj2 = false, vj5 = false;
  for (ConditionId c : conds) {
    vj1 |= c == ConditionId::V_J1;
    vj4 |= c == ConditionId::V_J4 || c == ConditionId::V_J2;
    vj2 |= c == ConditionId::V_J2;
    vj5 |= c == ConditionId::V_J5;
  }
  for (int n = 1; n <= max_worlds; ++n) {
    auto pairs = upper_pairs(n);
    WorldSet full = (n == 32) ? ~0u : ((1u << n) - 1);
    for (std::uint32_t rmask = 0; rmask < (1u << pairs.size()); ++rmask) {
      auto rr = r_rows(pairs, rmask, n);
      if (!rr) continue;
      const auto &r = *rr;
      std::vector<Pair> rp;
      for (std::size_t p = 0; p < pairs.size(); ++p)
        if ((rmask >> p) & 1) rp.push_back(pairs[p]);
      // forced / free S bits per R-pair, from l's conditions
      std::vector<WorldSet> forced(rp.size());
      std::vector<std::vector<int>> freebits(rp.size());
      for (std::size_t p = 0; p < rp.size(); ++p) {
        WorldSet allowed = vj4 ? r[static_cast<std::size_t>(rp[p].x)] : full;
        forced[p] = (vj1 ? (1u << rp[p].y) : 0u) |
                    (vj5 ? r[static_cast<std::size_t>(rp[p].y)] : 0u);
        WorldSet fr = allowed & ~forced[p];
        for (int z = 0; z < n; ++z)
          if ((fr >> z) & 1) freebits[p].push_back(z);
      }
      VeltmanFrame f = make_veltman_frame(n);
      f.r = r;
      std::vector<std::uint32_t> counter(rp.size(), 0);
      for (;;) {
        if (budget == 0) {
          exhausted = false;
          return std::nullopt;
        }
        --budget;
        for (std::size_t p = 0; p < rp.size(); ++p) {
          WorldSet s = forced[p];
          for (std::size_t b = 0; b < freebits[p].size(); ++b)
            if ((counter[p] >> b) & 1) s |= 1u << freebits[p][b];
          f.s[static_cast<std::size_t>(rp[p].x)]
             [static_cast<std::size_t>(rp[p].y)] = s;
        }
        bool ok = true;
        if (vj2) {
          for (int x = 0; x < n && ok; ++x)
            for (int y = 0; y < n && ok; ++y) {
              if (!f.has_r(x, y)) continue;
              WorldSet sy = f.s[static_cast<std::size_t>(x)]
                              [static_cast<std::size_t>(y)];
              for (int z = 0; z < n && ok; ++z)
                if (((sy >> z) & 1) && f.has_r(x, z) &&
                    (f.s[static_cast<std::size_t>(x)]
                        [static_cast<std::size_t>(z)] &
                     ~sy))
                  ok = false;
            }
        }
        for (ConditionId c : conds)
          if (ok && !veltman_condition(f, c)) ok = false;
        if (ok)
          if (auto cm = veltman_hit(f, a)) return cm;
        // advance the odometer, first pair least significant
        std::size_t p = 0;
        for (; p < rp.size(); ++p) {
          if (++counter[p] < (1u << freebits[p].size())) break;
          counter[p] = 0;
        }
        if (p == rp.size()) break;
      }
    }
  }
  return std::nullopt;
}

std::optional<Countermodel> refute_gen(const Logic &l, const Formula &a,
                                       int max_worlds, std::uint64_t &budget,
                                       bool &exhausted) {
  const auto &conds = l.frame_conditions;
  bool gj1 = false, gj4 = false, gj5 = false;
  for (ConditionId c : conds) {
    gj1 |= c == ConditionId::G_J1;
    gj4 |= c == ConditionId::G_J4 || c == ConditionId::G_J2 ||
           c == ConditionId::G_J2plus;
    gj5 |= c == ConditionId::G_J5;
  }
  for (int n = 1; n <= max_worlds; ++n) {
    auto pairs = upper_pairs(n);
    WorldSet full = (1u << n) - 1;
    for (std::uint32_t rmask = 0; rmask < (1u << pairs.size()); ++rmask) {
      auto rr = r_rows(pairs, rmask, n);
      if (!rr) continue;
      const auto &r = *rr;
      std::vector<Pair> rp;
      for (std::size_t p = 0; p < pairs.size(); ++p)
        if ((rmask >> p) & 1) rp.push_back(pairs[p]);
      // per pair: forced singleton generators plus capped extras
      std::vector<std::vector<std::vector<WorldSet>>> options(rp.size());
      for (std::size_t p = 0; p < rp.size(); ++p) {
        auto [x, y] = rp[p];
        std::vector<WorldSet> fg;
        if (gj1) fg.push_back(1u << y);
        if (gj5)
          for (int z = 0; z < n; ++z)
            if ((r[static_cast<std::size_t>(y)] >> z) & 1)
              fg.push_back(1u << z);
        std::sort(fg.begin(), fg.end());
        fg.erase(std::unique(fg.begin(), fg.end()), fg.end());
        std::vector<WorldSet> pool;
        for (WorldSet g = 1; g <= full; ++g) {
          if (gj4 && !(g & r[static_cast<std::size_t>(x)])) continue;
          bool redundant = false;
          for (WorldSet fgm : fg)
            if ((fgm & ~g) == 0) redundant = true;
          if (!redundant) pool.push_back(g);
        }
        std::size_t extra = fg.size() >= 2 ? 0 : 2 - fg.size();
        auto &opt = options[p];
        opt.push_back(fg);
        if (extra >= 1)
          for (WorldSet g : pool) {
            auto v = fg;
            v.push_back(g);
            opt.push_back(std::move(v));
          }
        if (extra >= 2)
          for (std::size_t i = 0; i < pool.size(); ++i)
            for (std::size_t j = i + 1; j < pool.size(); ++j) {
              if ((pool[i] & ~pool[j]) == 0 || (pool[j] & ~pool[i]) == 0)
                continue; // comparable: not an antichain
              auto v = fg;
              v.push_back(pool[i]);
              v.push_back(pool[j]);
              opt.push_back(std::move(v));
            }
      }
      GenFrame f = make_gen_frame(n);
      f.r = r;
      std::vector<std::size_t> counter(rp.size(), 0);
      for (;;) {
        if (budget == 0) {
          exhausted = false;
          return std::nullopt;
        }
        --budget;
        for (std::size_t p = 0; p < rp.size(); ++p)
          f.gen[static_cast<std::size_t>(rp[p].x)]
               [static_cast<std::size_t>(rp[p].y)] = options[p][counter[p]];
        bool ok = true;
        for (ConditionId c : conds)
          if (!gen_condition(f, c)) {
            ok = false;
            break;
          }
        if (ok)
          if (auto cm = gen_hit(f, a)) return cm;
        std::size_t p = 0;
        for (; p < rp.size(); ++p) {
          if (++counter[p] < options[p].size()) break;
          counter[p] = 0;
        }
        if (p == rp.size()) break;
      }
    }
  }
  return std::nullopt;
}

} // namespace

std::optional<Countermodel> bounded_refute(const Logic &l, const Formula &a,
                                           int max_worlds,
                                           std::uint64_t frame_budget,
                                           bool *exhausted) {
  if (max_worlds < 1) throw std::invalid_argument("max_worlds must be >= 1");
  if (max_worlds > 6) max_worlds = 6; // frame space is hopeless beyond this
  bool full = true;
  auto cm = l.complete_class == CompleteClass::veltman
                ? refute_veltman(l, a, max_worlds, frame_budget, full)
                : refute_gen(l, a, max_worlds, frame_budget, full);
  if (exhausted) *exhausted = !cm && full;
  return cm;
}

} // namespace il
