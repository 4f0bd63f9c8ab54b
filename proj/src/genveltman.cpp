#include "il/genveltman.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace il {

std::optional<int> GenFrame::world_index(const std::string &name) const {
  for (int i = 0; i < size(); ++i)
    if (worlds[static_cast<std::size_t>(i)] == name) return i;
  return std::nullopt;
}

GenFrame make_gen_frame(int n) {
  GenFrame f;
  for (int i = 0; i < n; ++i) f.worlds.push_back("w" + std::to_string(i));
  f.r.assign(static_cast<std::size_t>(n), 0);
  f.gen.assign(static_cast<std::size_t>(n),
               std::vector<std::vector<WorldSet>>(static_cast<std::size_t>(n)));
  return f;
}

void antichain_reduce(GenFrame &f) {
  for (auto &row : f.gen)
    for (auto &gs : row) {
      std::vector<WorldSet> keep;
      for (WorldSet g : gs) {
        bool drop = std::find(keep.begin(), keep.end(), g) != keep.end();
        for (WorldSet h : gs)
          if (h != g && (h & ~g) == 0) drop = true; // strict subset exists
        if (!drop) keep.push_back(g);
      }
      gs = std::move(keep);
    }
}

std::string check_gen_frame(const GenFrame &f) {
  int n = f.size();
  if (n == 0) return "empty world set";
  if (n > 32) return "more than 32 worlds";
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (f.has_r(x, y) && f.has_r(y, x))
        return "R has a cycle through (" + f.worlds[x] + "," + f.worlds[y] +
               ")";
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (f.has_r(x, y) && (f.r[y] & ~f.r[x]))
        return "R not transitive at (" + f.worlds[x] + "," + f.worlds[y] + ")";
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const auto &gs = f.gen[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
      if (!gs.empty() && !f.has_r(x, y))
        return "S_" + f.worlds[x] + " relates non-successor " + f.worlds[y];
      for (WorldSet g : gs)
        if (g == 0) return "empty generator at (" + f.worlds[x] + "," +
                           f.worlds[y] + ")";
      for (std::size_t i = 0; i < gs.size(); ++i)
        for (std::size_t j = 0; j < gs.size(); ++j)
          if (i != j && (gs[i] & ~gs[j]) == 0)
            return "generators for (" + f.worlds[x] + "," + f.worlds[y] +
                   ") are not an antichain";
    }
  }
  return "";
}

namespace {

WorldSet full_mask(int n) { return n >= 32 ? ~0u : (1u << n) - 1; }

WorldSet gen_eval_rec(const GenModel &m, const Formula &f) {
  const GenFrame &fr = m.frame;
  int n = fr.size();
  switch (f->kind()) {
  case Kind::Var: {
    auto it = m.val.find(f->name());
    return it == m.val.end() ? 0 : it->second;
  }
  case Kind::Top:
    return full_mask(n);
  case Kind::Bot:
    return 0;
  case Kind::Neg:
    return full_mask(n) & ~gen_eval_rec(m, f->left());
  case Kind::And:
    return gen_eval_rec(m, f->left()) & gen_eval_rec(m, f->right());
  case Kind::Or:
    return gen_eval_rec(m, f->left()) | gen_eval_rec(m, f->right());
  case Kind::Imp:
    return full_mask(n) &
           (~gen_eval_rec(m, f->left()) | gen_eval_rec(m, f->right()));
  case Kind::Box: {
    WorldSet a = gen_eval_rec(m, f->left());
    WorldSet out = 0;
    for (int x = 0; x < n; ++x)
      if ((fr.r[x] & ~a) == 0) out |= 1u << x;
    return out;
  }
  case Kind::Rhd: {
    WorldSet a = gen_eval_rec(m, f->left());
    WorldSet b = gen_eval_rec(m, f->right());
    WorldSet out = 0;
    for (int x = 0; x < n; ++x) {
      bool ok = true;
      WorldSet ys = fr.r[x] & a;
      while (ys) {
        int y = __builtin_ctz(ys);
        ys &= ys - 1;
        if (!fr.s(x, y, b)) {
          ok = false;
          break;
        }
      }
      if (ok) out |= 1u << x;
    }
    return out;
  }
  }
  throw std::logic_error("unknown kind");
}

} // namespace

WorldSet gen_eval_set(const GenModel &m, const Formula &f) {
  return gen_eval_rec(m, f);
}

bool gen_eval(const GenModel &m, int w, const Formula &f) {
  if (w < 0 || w >= m.frame.size()) throw std::out_of_range("unknown world");
  return (gen_eval_set(m, f) >> w) & 1;
}

bool gen_valid_in_model(const GenModel &m, const Formula &f) {
  return gen_eval_set(m, f) == full_mask(m.frame.size());
}

std::optional<std::map<std::string, WorldSet>>
gen_falsifying_valuation(const GenFrame &f, const Formula &a,
                         std::uint64_t budget) {
  auto vars = variables(a);
  int n = f.size();
  int k = static_cast<int>(vars.size());
  if (k * n >= 63 || (1ull << (k * n)) > budget)
    throw BudgetExceeded("valuation space exceeds budget");
  GenModel m{f, {}};
  WorldSet full = full_mask(n);
  for (std::uint64_t v = 0; v < (1ull << (k * n)); ++v) {
    for (int i = 0; i < k; ++i)
      m.val[vars[static_cast<std::size_t>(i)]] =
          static_cast<WorldSet>((v >> (i * n)) & full);
    if (gen_eval_set(m, a) != full) return m.val;
  }
  return std::nullopt;
}

bool gen_valid_in_frame(const GenFrame &f, const Formula &a,
                        std::uint64_t budget) {
  return !gen_falsifying_valuation(f, a, budget).has_value();
}

GenFrame embed_veltman_frame(const VeltmanFrame &f) {
  GenFrame g = make_gen_frame(f.size());
  g.worlds = f.worlds;
  g.r = f.r;
  for (int x = 0; x < f.size(); ++x)
    for (int y = 0; y < f.size(); ++y) {
      WorldSet zs = f.s[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
      while (zs) {
        int z = __builtin_ctz(zs);
        zs &= zs - 1;
        g.gen[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]
            .push_back(1u << z);
      }
    }
  return g;
}

GenModel embed_veltman(const VeltmanModel &m) {
  return {embed_veltman_frame(m.frame), m.val};
}

std::string gen_model_to_json(const GenModel &m) {
  nlohmann::json j;
  j["worlds"] = m.frame.worlds;
  int n = m.frame.size();
  auto name = [&](int i) { return m.frame.worlds[static_cast<std::size_t>(i)]; };
  j["R"] = nlohmann::json::array();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (m.frame.has_r(x, y)) j["R"].push_back({name(x), name(y)});
  j["S"] = nlohmann::json::object();
  for (int x = 0; x < n; ++x) {
    nlohmann::json row = nlohmann::json::object();
    for (int y = 0; y < n; ++y) {
      const auto &gs = m.frame.gen[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
      if (gs.empty()) continue;
      nlohmann::json lst = nlohmann::json::array();
      for (WorldSet g : gs) {
        nlohmann::json one = nlohmann::json::array();
        for (int z = 0; z < n; ++z)
          if ((g >> z) & 1) one.push_back(name(z));
        lst.push_back(one);
      }
      row[name(y)] = lst;
    }
    if (!row.empty()) j["S"][name(x)] = row;
  }
  j["val"] = nlohmann::json::object();
  for (const auto &[p, ws] : m.val) {
    nlohmann::json lst = nlohmann::json::array();
    for (int x = 0; x < n; ++x)
      if ((ws >> x) & 1) lst.push_back(name(x));
    j["val"][p] = lst;
  }
  return j.dump(2);
}

GenModel gen_model_from_json(const std::string &text, bool auto_reduce) {
  nlohmann::json j = nlohmann::json::parse(text);
  GenModel m;
  m.frame.worlds = j.at("worlds").get<std::vector<std::string>>();
  int n = m.frame.size();
  if (n == 0 || n > 32) throw std::runtime_error("bad world count");
  m.frame.r.assign(static_cast<std::size_t>(n), 0);
  m.frame.gen.assign(
      static_cast<std::size_t>(n),
      std::vector<std::vector<WorldSet>>(static_cast<std::size_t>(n)));
  auto idx = [&](const std::string &w) {
    auto i = m.frame.world_index(w);
    if (!i) throw std::runtime_error("unknown world: " + w);
    return *i;
  };
  const nlohmann::json rj = j.value("R", nlohmann::json::array());
  const nlohmann::json sj = j.value("S", nlohmann::json::object());
  const nlohmann::json vj = j.value("val", nlohmann::json::object());
  for (const auto &pr : rj)
    m.frame.r[static_cast<std::size_t>(idx(pr.at(0)))] |= 1u << idx(pr.at(1));
  for (const auto &[xname, row] : sj.items()) {
    int x = idx(xname);
    for (const auto &[yname, lst] : row.items()) {
      int y = idx(yname);
      for (const auto &one : lst) {
        WorldSet g = 0;
        for (const auto &z : one) g |= 1u << idx(z);
        if (g == 0)
          throw std::runtime_error("empty generator at (" + xname + "," +
                                   yname + ")");
        m.frame.gen[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]
            .push_back(g);
      }
    }
  }
  if (auto_reduce) antichain_reduce(m.frame);
  for (const auto &[p, lst] : vj.items()) {
    WorldSet ws = 0;
    for (const auto &w : lst) ws |= 1u << idx(w);
    m.val[p] = ws;
  }
  std::string err = check_gen_frame(m.frame);
  if (!err.empty()) throw std::runtime_error(err);
  return m;
}

} // namespace il
