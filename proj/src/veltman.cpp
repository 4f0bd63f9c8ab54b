#include "il/veltman.hpp"

#include <json.hpp>

#include <stdexcept>

namespace il {

std::optional<int> VeltmanFrame::world_index(const std::string &name) const {
  for (int i = 0; i < size(); ++i)
    if (worlds[static_cast<std::size_t>(i)] == name) return i;
  return std::nullopt;
}

VeltmanFrame make_veltman_frame(int n) {
  VeltmanFrame f;
  for (int i = 0; i < n; ++i) f.worlds.push_back("w" + std::to_string(i));
  f.r.assign(static_cast<std::size_t>(n), 0);
  f.s.assign(static_cast<std::size_t>(n),
             std::vector<WorldSet>(static_cast<std::size_t>(n), 0));
  return f;
}

std::string check_frame(const VeltmanFrame &f) {
  int n = f.size();
  if (n == 0) return "empty world set";
  if (n > 32) return "more than 32 worlds";
  if (static_cast<int>(f.r.size()) != n || static_cast<int>(f.s.size()) != n)
    return "relation tables do not match the world count";
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
    for (int y = 0; y < n; ++y)
      if (f.s[x][y] && !f.has_r(x, y))
        return "S_" + f.worlds[x] + " relates non-successor " + f.worlds[y];
  }
  return "";
}

namespace {

WorldSet full_mask(int n) {
  return n >= 32 ? ~0u : (1u << n) - 1;
}

WorldSet eval_rec(const VeltmanModel &m, const Formula &f) {
  const VeltmanFrame &fr = m.frame;
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
    return full_mask(n) & ~eval_rec(m, f->left());
  case Kind::And:
    return eval_rec(m, f->left()) & eval_rec(m, f->right());
  case Kind::Or:
    return eval_rec(m, f->left()) | eval_rec(m, f->right());
  case Kind::Imp:
    return full_mask(n) & (~eval_rec(m, f->left()) | eval_rec(m, f->right()));
  case Kind::Box: {
    WorldSet a = eval_rec(m, f->left());
    WorldSet out = 0;
    for (int x = 0; x < n; ++x)
      if ((fr.r[x] & ~a) == 0) out |= 1u << x;
    return out;
  }
  case Kind::Rhd: {
    WorldSet a = eval_rec(m, f->left());
    WorldSet b = eval_rec(m, f->right());
    WorldSet out = 0;
    for (int x = 0; x < n; ++x) {
      bool ok = true;
      WorldSet ys = fr.r[x] & a;
      while (ys) {
        int y = __builtin_ctz(ys);
        ys &= ys - 1;
        if ((fr.s[x][y] & b) == 0) {
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

WorldSet eval_set(const VeltmanModel &m, const Formula &f) {
  return eval_rec(m, f);
}

bool eval(const VeltmanModel &m, int w, const Formula &f) {
  if (w < 0 || w >= m.frame.size()) throw std::out_of_range("unknown world");
  return (eval_set(m, f) >> w) & 1;
}

bool valid_in_model(const VeltmanModel &m, const Formula &f) {
  return eval_set(m, f) == full_mask(m.frame.size());
}

std::optional<std::map<std::string, WorldSet>>
falsifying_valuation(const VeltmanFrame &f, const Formula &a,
                     std::uint64_t budget) {
  auto vars = variables(a);
  int n = f.size();
  int k = static_cast<int>(vars.size());
  if (k * n >= 63 || (1ull << (k * n)) > budget)
    throw BudgetExceeded("valuation space exceeds budget");
  VeltmanModel m{f, {}};
  WorldSet full = full_mask(n);
  for (std::uint64_t v = 0; v < (1ull << (k * n)); ++v) {
    for (int i = 0; i < k; ++i)
      m.val[vars[static_cast<std::size_t>(i)]] =
          static_cast<WorldSet>((v >> (i * n)) & full);
    if (eval_set(m, a) != full) return m.val;
  }
  return std::nullopt;
}

bool valid_in_frame(const VeltmanFrame &f, const Formula &a,
                    std::uint64_t budget) {
  return !falsifying_valuation(f, a, budget).has_value();
}

std::string veltman_model_to_json(const VeltmanModel &m) {
  nlohmann::json j;
  j["worlds"] = m.frame.worlds;
  auto name = [&](int i) { return m.frame.worlds[static_cast<std::size_t>(i)]; };
  j["R"] = nlohmann::json::array();
  int n = m.frame.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (m.frame.has_r(x, y)) j["R"].push_back({name(x), name(y)});
  j["S"] = nlohmann::json::object();
  for (int x = 0; x < n; ++x) {
    nlohmann::json pairs = nlohmann::json::array();
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if ((m.frame.s[x][y] >> z) & 1) pairs.push_back({name(y), name(z)});
    if (!pairs.empty()) j["S"][name(x)] = pairs;
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

VeltmanModel veltman_model_from_json(const std::string &text) {
  nlohmann::json j = nlohmann::json::parse(text);
  VeltmanModel m;
  m.frame.worlds = j.at("worlds").get<std::vector<std::string>>();
  int n = m.frame.size();
  if (n == 0 || n > 32) throw std::runtime_error("bad world count");
  m.frame.r.assign(static_cast<std::size_t>(n), 0);
  m.frame.s.assign(static_cast<std::size_t>(n),
                   std::vector<WorldSet>(static_cast<std::size_t>(n), 0));
  auto idx = [&](const std::string &w) {
    auto i = m.frame.world_index(w);
    if (!i) throw std::runtime_error("unknown world: " + w);
    return *i;
  };
  const nlohmann::json rj = j.value("R", nlohmann::json::array());
  const nlohmann::json sj = j.value("S", nlohmann::json::object());
  const nlohmann::json vj = j.value("val", nlohmann::json::object());
  for (const auto &pr : rj)
    m.frame.r[static_cast<std::size_t>(idx(pr.at(0)))] |=
        1u << idx(pr.at(1));
  for (const auto &[xname, pairs] : sj.items()) {
    int x = idx(xname);
    for (const auto &pr : pairs)
      m.frame.s[static_cast<std::size_t>(x)]
               [static_cast<std::size_t>(idx(pr.at(0)))] |=
          1u << idx(pr.at(1));
  }
  for (const auto &[p, lst] : vj.items()) {
    WorldSet ws = 0;
    for (const auto &w : lst) ws |= 1u << idx(w);
    m.val[p] = ws;
  }
  return m;
}

} // namespace il
