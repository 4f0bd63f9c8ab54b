#include "il/decide.hpp"

#include "il/scheme.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace il {

namespace {

int require_index(const AdequateContext &ctx, const Formula &f) {
  auto i = ctx.index_of(f);
  if (!i) throw std::invalid_argument("formula not in Phi: " + f->name());
  return *i;
}

void check_same_ctx(const MCSet &a, const MCSet &b) {
  if (a.ctx.get() == b.ctx.get()) return;
  if (!a.ctx || !b.ctx || a.ctx->size() != b.ctx->size())
    throw std::invalid_argument("MCSet context mismatch");
}

} // namespace

bool MCSet::member(int phi_index) const {
  return (bits[static_cast<std::size_t>(phi_index) >> 6] >>
          (static_cast<std::size_t>(phi_index) & 63)) &
         1;
}

bool MCSet::member(const Formula &f) const {
  if (auto i = ctx->index_of(f)) return member(*i);
  switch (f->kind()) {
  case Kind::Top: return true;
  case Kind::Bot: return false;
  case Kind::Neg: return !member(f->left());
  default: break;
  }
  throw std::invalid_argument("membership query outside Phi");
}

bool MCSet::operator<(const MCSet &o) const {
  for (std::size_t w = 0; w < bits.size(); ++w) {
    if (bits[w] == o.bits[w]) continue;
    // lower set bit first: compare the lowest differing position
    std::uint64_t diff = bits[w] ^ o.bits[w];
    std::uint64_t low = diff & (~diff + 1);
    return (o.bits[w] & low) != 0;
  }
  return false;
}

bool prec(const MCSet &gamma, const MCSet &delta) {
  check_same_ctx(gamma, delta);
  const AdequateContext &ctx = *gamma.ctx;
  bool gained = false;
  for (int i = 0; i < ctx.size(); ++i) {
    if (ctx.at(i)->kind() != Kind::Box) continue;
    if (gamma.member(i)) {
      if (!delta.member(i)) return false;
      if (!delta.member(require_index(ctx, ctx.at(i)->left()))) return false;
    } else if (delta.member(i)) {
      gained = true;
    }
  }
  return gained;
}

namespace {

bool critical_part(const MCSet &gamma, const MCSet &delta, const Formula &c,
                   bool with_box) {
  const AdequateContext &ctx = *gamma.ctx;
  for (int i = 0; i < ctx.size(); ++i) {
    const Formula &f = ctx.at(i);
    if (f->kind() != Kind::Rhd || !equal(f->right(), c)) continue;
    if (!gamma.member(i)) continue;
    Formula nb = simneg(f->left());
    if (!delta.member(require_index(ctx, nb))) return false;
    if (with_box && !delta.member(require_index(ctx, box(nb)))) return false;
  }
  return true;
}

} // namespace

bool prec_C(const MCSet &gamma, const MCSet &delta, const Formula &c) {
  return prec(gamma, delta) && critical_part(gamma, delta, c, false);
}

bool prec_C_star(const MCSet &gamma, const MCSet &delta, const Formula &c) {
  return prec(gamma, delta) && critical_part(gamma, delta, c, true);
}

std::uint64_t fmp_world_bound(const Formula &a) {
  AdequateContext ctx = adequate_closure({a});
  std::uint64_t m = ctx.phi_rhd().size();
  if (ctx.size() >= 63) return ~0ull;
  std::uint64_t b = 1ull << ctx.size();
  if (m != 0 && b > ~0ull / m) return ~0ull;
  return b * m;
}

// ---------------------------------------------------------------------------
// ConsequenceEngine

ConsequenceEngine::ConsequenceEngine(
    const Logic &l, std::shared_ptr<const AdequateContext> ctx)
    : logic_(&l), ctx_(std::move(ctx)) {
  const AdequateContext &c = *ctx_;
  atom_of_.assign(static_cast<std::size_t>(c.size()), -1);
  for (int i = 0; i < c.size(); ++i) {
    Kind k = c.at(i)->kind();
    if (k == Kind::Var || k == Kind::Box || k == Kind::Rhd) {
      atom_of_[static_cast<std::size_t>(i)] = static_cast<int>(atoms_.size());
      atoms_.push_back(i);
    }
  }

  struct BoxAt {
    int idx;
    Formula body;
  };
  struct RhdAt {
    int idx;
    Formula b, e;
  };
  std::vector<BoxAt> boxes;
  std::vector<RhdAt> rhds;
  for (int i = 0; i < c.size(); ++i) {
    const Formula &f = c.at(i);
    if (f->kind() == Kind::Box) boxes.push_back({i, f->left()});
    if (f->kind() == Kind::Rhd) rhds.push_back({i, f->left(), f->right()});
  }

  std::set<std::vector<int>> seen;
  auto add = [&](std::vector<int> cl) {
    std::sort(cl.begin(), cl.end());
    cl.erase(std::unique(cl.begin(), cl.end()), cl.end());
    for (int lit : cl)
      if (std::binary_search(cl.begin(), cl.end(), -lit)) return;
    if (seen.insert(cl).second) clauses_.push_back(std::move(cl));
  };
  auto pos = [&](int phi_idx) {
    return atom_of_[static_cast<std::size_t>(phi_idx)] + 1;
  };
  auto tt = [](const Formula &f) {
    try {
      return taut(f);
    } catch (const std::exception &) {
      return false; // too many atoms: just skip the clause
    }
  };

  const bool dj1 = l.proves_scheme(SchemeId::J1);
  const bool dj2 = l.proves_scheme(SchemeId::J2);
  const bool dj2p = l.proves_scheme(SchemeId::J2plus);
  const bool dj4 = l.proves_scheme(SchemeId::J4);
  const bool dj4p = l.proves_scheme(SchemeId::J4plus);
  const bool dj5 = l.proves_scheme(SchemeId::J5);

  for (const auto &bx : boxes) {
    // necessitation of tautologies
    if (tt(bx.body)) add({pos(bx.idx)});
    // box monotonicity over provable implications (Nec + G2)
    for (const auto &by : boxes) {
      if (bx.idx == by.idx) continue;
      if (tt(imp(bx.body, by.body))) add({-pos(bx.idx), pos(by.idx)});
      // Lob: [](([]B -> B)-like) -> []B
      if (tt(iff(bx.body, imp(c.at(by.idx), by.body))))
        add({-pos(bx.idx), pos(by.idx)});
    }
  }
  for (const auto &r : rhds) {
    // J6 in both directions: []D equivalent to ~D |> #f
    for (const auto &bx : boxes) {
      if (tt(iff(r.b, neg(bx.body))) && tt(iff(r.e, bot()))) {
        add({-pos(bx.idx), pos(r.idx)});
        add({pos(bx.idx), -pos(r.idx)});
      }
    }
    // |>-monotonicity in both arguments (R1, R2)
    for (const auto &r2 : rhds) {
      if (r.idx == r2.idx) continue;
      if (tt(imp(r2.b, r.b)) && tt(imp(r.e, r2.e)))
        add({-pos(r.idx), pos(r2.idx)});
    }
    if (dj1 && tt(imp(r.b, r.e))) add({pos(r.idx)});
    if (dj5 && is_dia(r.b) && tt(imp(dia_operand(r.b), r.e)))
      add({pos(r.idx)});
    if (dj4) {
      // B |> E -> ([]~E -> []~B)
      for (const auto &bx : boxes)
        for (const auto &by : boxes)
          if (tt(iff(bx.body, neg(r.e))) && tt(iff(by.body, neg(r.b))))
            add({-pos(r.idx), -pos(bx.idx), pos(by.idx)});
    }
  }
  // J3: from D -> B \/ B', (B|>E) and (B'|>E) give D|>E
  for (std::size_t i = 0; i < rhds.size(); ++i)
    for (std::size_t j = i; j < rhds.size(); ++j) {
      if (!equal(rhds[i].e, rhds[j].e)) continue;
      for (const auto &rk : rhds) {
        if (!equal(rk.e, rhds[i].e)) continue;
        if (rk.idx == rhds[i].idx || rk.idx == rhds[j].idx) continue;
        if (tt(imp(rk.b, disj(rhds[i].b, rhds[j].b))))
          add({-pos(rhds[i].idx), -pos(rhds[j].idx), pos(rk.idx)});
      }
    }
  if (dj2 || dj2p) {
    for (const auto &ri : rhds)
      for (const auto &rj : rhds)
        for (const auto &rk : rhds) {
          if (!equal(ri.b, rk.b) || !equal(rj.e, rk.e)) continue;
          bool fires = dj2p ? tt(imp(ri.e, disj(rj.b, rj.e)))
                            : equal(ri.e, rj.b);
          if (fires) add({-pos(ri.idx), -pos(rj.idx), pos(rk.idx)});
        }
  }
  if (dj4p) {
    for (const auto &bx : boxes)
      for (const auto &ri : rhds)
        for (const auto &rj : rhds) {
          if (ri.idx == rj.idx || !equal(ri.b, rj.b)) continue;
          if (tt(imp(bx.body, imp(ri.e, rj.e))))
            add({-pos(bx.idx), -pos(ri.idx), pos(rj.idx)});
        }
  }
}

bool ConsequenceEngine::eval3(int phi_index, const std::vector<signed char> &val,
                              std::vector<signed char> &memo) const {
  // three-valued evaluation; memo entries: -2 unset, else -1/0/1
  std::function<signed char(int)> go = [&](int i) -> signed char {
    signed char &m = memo[static_cast<std::size_t>(i)];
    if (m != -2) return m;
    const Formula &f = ctx_->at(i);
    signed char v = -1;
    switch (f->kind()) {
    case Kind::Bot: v = 0; break;
    case Kind::Top: v = 1; break;
    case Kind::Var:
    case Kind::Box:
    case Kind::Rhd:
      v = val[static_cast<std::size_t>(
          atom_of_[static_cast<std::size_t>(i)])];
      break;
    case Kind::Neg: {
      signed char a = go(require_index(*ctx_, f->left()));
      v = a < 0 ? a : static_cast<signed char>(1 - a);
      break;
    }
    case Kind::And: {
      signed char a = go(require_index(*ctx_, f->left()));
      signed char b = go(require_index(*ctx_, f->right()));
      v = (a == 0 || b == 0) ? 0 : (a == 1 && b == 1) ? 1 : -1;
      break;
    }
    case Kind::Or: {
      signed char a = go(require_index(*ctx_, f->left()));
      signed char b = go(require_index(*ctx_, f->right()));
      v = (a == 1 || b == 1) ? 1 : (a == 0 && b == 0) ? 0 : -1;
      break;
    }
    case Kind::Imp: {
      signed char a = go(require_index(*ctx_, f->left()));
      signed char b = go(require_index(*ctx_, f->right()));
      v = (a == 0 || b == 1) ? 1 : (a == 1 && b == 0) ? 0 : -1;
      break;
    }
    }
    m = v;
    return v;
  };
  return go(phi_index);
}

bool ConsequenceEngine::solve(std::vector<signed char> &val,
                              const std::vector<std::pair<int, bool>> &targets,
                              std::vector<MCSet> *out, std::size_t cap) const {
  bool found = false;
  std::function<void(std::vector<signed char>)> go =
      [&](std::vector<signed char> v) {
        if (found && !out) return;
        // unit propagation to fixpoint
        for (;;) {
          bool changed = false;
          for (const auto &cl : clauses_) {
            bool sat = false;
            int unknowns = 0, last = 0;
            for (int lit : cl) {
              signed char pv = v[static_cast<std::size_t>(std::abs(lit) - 1)];
              if (pv < 0) {
                ++unknowns;
                last = lit;
              } else if ((pv == 1) == (lit > 0)) {
                sat = true;
                break;
              }
            }
            if (sat) continue;
            if (unknowns == 0) return; // conflict
            if (unknowns == 1) {
              v[static_cast<std::size_t>(std::abs(last) - 1)] = last > 0;
              changed = true;
            }
          }
          std::vector<signed char> memo(
              static_cast<std::size_t>(ctx_->size()), -2);
          for (const auto &[pi, want] : targets) {
            (void)eval3(pi, v, memo);
            signed char t = memo[static_cast<std::size_t>(pi)];
            if (t >= 0 && (t == 1) != want) return; // target violated
          }
          if (!changed) break;
        }
        int free = -1;
        for (std::size_t i = 0; i < atoms_.size(); ++i)
          if (v[i] < 0) {
            free = static_cast<int>(i);
            break;
          }
        if (free < 0) {
          found = true;
          if (out) {
            MCSet s;
            s.ctx = ctx_;
            s.bits.assign((static_cast<std::size_t>(ctx_->size()) + 63) / 64,
                          0);
            std::vector<signed char> memo(
                static_cast<std::size_t>(ctx_->size()), -2);
            for (int i = 0; i < ctx_->size(); ++i)
              if (eval3(i, v, memo))
                s.bits[static_cast<std::size_t>(i) >> 6] |=
                    1ull << (static_cast<std::size_t>(i) & 63);
            out->push_back(std::move(s));
            if (out->size() > cap)
              throw std::runtime_error(
                  "candidate enumeration exceeded its cap");
          }
          return;
        }
        auto v2 = v;
        v2[static_cast<std::size_t>(free)] = 0;
        go(std::move(v2));
        if (found && !out) return;
        v[static_cast<std::size_t>(free)] = 1;
        go(std::move(v));
      };
  go(val);
  return found;
}

bool ConsequenceEngine::proves(const Formula &a) const {
  int idx = require_index(*ctx_, a);
  std::vector<signed char> val(atoms_.size(), -1);
  return !solve(val, {{idx, false}}, nullptr, 0);
}

std::vector<MCSet> ConsequenceEngine::candidates(std::size_t cap) const {
  std::vector<MCSet> out;
  std::vector<signed char> val(atoms_.size(), -1);
  solve(val, {}, &out, cap);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Oracles and K_L

OracleResult BoundedOracle::query(const Logic &l, const Formula &a) {
  OracleResult r;
  if (auto cm = bounded_refute(l, a, max_worlds_)) {
    r.status = OracleResult::Status::refuted;
    r.cm = std::move(cm);
  } else {
    r.note = "no countermodel within the world budget";
  }
  return r;
}

OracleResult ExactOracle::query(const Logic &l, const Formula &a) {
  OracleResult r;
  std::uint64_t bound = fmp_world_bound(a);
  int max_n = static_cast<int>(
      std::min<std::uint64_t>(bound, static_cast<std::uint64_t>(ceiling_)));
  bool exhausted = false;
  if (auto cm = bounded_refute(l, a, max_n, ~0ull >> 16, &exhausted)) {
    r.status = OracleResult::Status::refuted;
    r.cm = std::move(cm);
    return r;
  }
  if (l.complete_class == CompleteClass::veltman && exhausted &&
      bound <= static_cast<std::uint64_t>(ceiling_)) {
    r.status = OracleResult::Status::proved;
    return r;
  }
  r.note = "search ceiling below the FMP bound " + std::to_string(bound);
  return r;
}

std::vector<MCSet> enumerate_KL(const Logic &l,
                                std::shared_ptr<const AdequateContext> ctx,
                                Oracle &o, std::vector<OracleResult> *status) {
  ConsequenceEngine engine(l, ctx);
  std::vector<MCSet> kl;
  if (status) status->clear();
  for (auto &s : engine.candidates()) {
    FormulaSet members;
    for (int i = 0; i < ctx->size(); ++i)
      if (s.member(i)) members.insert(ctx->at(i));
    OracleResult r = o.query(l, imp(big_and(members), bot()));
    if (r.status == OracleResult::Status::proved) continue;
    kl.push_back(std::move(s));
    if (status) status->push_back(std::move(r));
  }
  return kl;
}

std::vector<MCSet> enumerate_KL(const Logic &l, const AdequateContext &ctx,
                                Oracle &o, std::vector<OracleResult> *status) {
  return enumerate_KL(l, std::make_shared<AdequateContext>(ctx), o, status);
}

std::vector<int> prec_ranks(const std::vector<MCSet> &kl) {
  int n = static_cast<int>(kl.size());
  std::vector<int> rank(static_cast<std::size_t>(n), -1);
  // prec strictly grows the box set, so the recursion terminates
  std::function<int(int)> go = [&](int i) -> int {
    int &r = rank[static_cast<std::size_t>(i)];
    if (r >= 0) return r;
    int best = 0;
    for (int j = 0; j < n; ++j)
      if (prec(kl[static_cast<std::size_t>(i)],
               kl[static_cast<std::size_t>(j)]))
        best = std::max(best, go(j) + 1);
    return r = best;
  };
  for (int i = 0; i < n; ++i) go(i);
  return rank;
}

// ---------------------------------------------------------------------------
// PL witness searches

namespace {

std::vector<MCSet> kl_for(const Logic &l, const MCSet &gamma, Oracle &o) {
  return enumerate_KL(l, gamma.ctx, o, nullptr);
}

[[noreturn]] void no_witness(const char *which) {
  throw std::runtime_error(std::string(which) +
                           ": no witness in K_L (oracle or bound defect)");
}

} // namespace

MCSet lemma_pl3(const Logic &l, const MCSet &gamma, const Formula &d,
                const Formula &e, Oracle &o) {
  if (gamma.member(rhd(d, e)))
    throw std::invalid_argument("PL3 needs D |> E outside Gamma");
  bool j5 = l.proves_scheme(SchemeId::J5);
  bool j2 = l.proves_scheme(SchemeId::J2);
  for (const auto &delta : kl_for(l, gamma, o)) {
    if (!delta.member(d)) continue;
    if (j2 && j5) {
      if (prec_C_star(gamma, delta, e) && delta.member(box(simneg(e))))
        return delta;
    } else if (j5) {
      if (prec_C(gamma, delta, e) && delta.member(box(simneg(e))))
        return delta;
    } else if (prec_C(gamma, delta, e)) {
      return delta;
    }
  }
  no_witness("PL3");
}

MCSet lemma_pl4(const Logic &l, const MCSet &gamma, const MCSet &delta,
                const Formula &d, const Formula &e, const Formula &f,
                Oracle &o) {
  if (!gamma.member(rhd(d, e)) || !prec_C(gamma, delta, f) ||
      !delta.member(d))
    throw std::invalid_argument("PL4 hypotheses violated");
  bool j2p = l.proves_scheme(SchemeId::J2plus);
  bool j4p = l.proves_scheme(SchemeId::J4plus);
  bool j5 = l.proves_scheme(SchemeId::J5);
  for (const auto &theta : kl_for(l, gamma, o)) {
    if (!theta.member(e) || !theta.member(simneg(f))) continue;
    if (j2p && j5) {
      if (prec_C_star(gamma, theta, f) && theta.member(box(simneg(f))))
        return theta;
    } else if (j2p) {
      if (prec_C(gamma, theta, f)) return theta;
    } else if (j4p) {
      if (prec(gamma, theta)) return theta;
    } else {
      return theta;
    }
  }
  no_witness("PL4");
}

MCSet lemma_pl5(const Logic &l, const MCSet &gamma, const MCSet &delta,
                const Formula &d, const Formula &e, Oracle &o) {
  if (!l.proves_scheme(SchemeId::J4))
    throw std::invalid_argument("PL5 needs a logic with J4");
  if (!gamma.member(rhd(d, e)) || !prec(gamma, delta) || !delta.member(d))
    throw std::invalid_argument("PL5 hypotheses violated");
  for (const auto &theta : kl_for(l, gamma, o))
    if (theta.member(e) && prec(gamma, theta)) return theta;
  no_witness("PL5");
}

MCSet lemma_pl6(const Logic &l, const MCSet &gamma, const MCSet &delta,
                const Formula &d, const Formula &e, const Formula &f,
                Oracle &o) {
  if (!l.proves_scheme(SchemeId::J2))
    throw std::invalid_argument("PL6 needs a logic with J2");
  if (!gamma.member(rhd(d, e)) || !prec_C(gamma, delta, f) ||
      !delta.member(d))
    throw std::invalid_argument("PL6 hypotheses violated");
  bool j5 = l.proves_scheme(SchemeId::J5);
  for (const auto &theta : kl_for(l, gamma, o)) {
    if (!theta.member(e)) continue;
    if (j5) {
      if (prec_C_star(gamma, theta, f) && theta.member(box(simneg(f))))
        return theta;
    } else if (prec_C(gamma, theta, f)) {
      return theta;
    }
  }
  no_witness("PL6");
}

std::vector<std::pair<const Logic *, const Logic *>>
covering_edges(CompleteClass cls) {
  std::vector<const Logic *> in_class;
  for (const auto &l : registry())
    if (l.complete_class == cls) in_class.push_back(&l);
  auto below = [](const Logic *a, const Logic *b) { // a strictly weaker
    return a->derived != b->derived &&
           std::includes(b->derived.begin(), b->derived.end(),
                         a->derived.begin(), a->derived.end());
  };
  std::vector<std::pair<const Logic *, const Logic *>> edges;
  for (const Logic *big : in_class)
    for (const Logic *small : in_class) {
      if (!below(small, big)) continue;
      bool covering = true;
      for (const Logic *mid : in_class)
        if (mid != big && mid != small && below(small, mid) &&
            below(mid, big))
          covering = false;
      if (covering) edges.emplace_back(big, small);
    }
  return edges;
}

} // namespace il
