#include "il/correspondence.hpp"
#include "il/decide.hpp"

#include <algorithm>

namespace il {

namespace {

struct Base {
  std::shared_ptr<const AdequateContext> ctx;
  std::vector<MCSet> kl;
  bool all_confirmed = false;
  int gamma0 = -1; // order-minimal member refuting a
  // per-index caches over kl and phi_rhd
  std::vector<std::vector<char>> P;                 // prec
  std::vector<std::vector<std::vector<char>>> PC;   // prec_C
  std::vector<std::vector<std::vector<char>>> PCS;  // prec_C_star
  std::vector<std::vector<char>> NEG;               // ~C in Gamma
  std::vector<std::vector<char>> BNEG;              // []~C in Gamma
  int bot_tag = -1;
};

Base build_base(const Logic &l, const Formula &a, Oracle &o) {
  Base b;
  b.ctx = std::make_shared<AdequateContext>(adequate_closure({a}));
  std::vector<OracleResult> status;
  b.kl = enumerate_KL(l, b.ctx, o, &status);
  // Unconfirmed candidates keep the universe a superset of K_L, which
  // preserves both verdicts: a countermodel is checked by the audit,
  // and a shortage of refuting sets in the superset is a shortage in
  // K_L. Only a failed audit is then attributable to the slack.
  b.all_confirmed = true;
  for (const auto &s : status)
    b.all_confirmed &= s.status == OracleResult::Status::refuted;
  std::sort(b.kl.begin(), b.kl.end());
  for (std::size_t i = 0; i < b.kl.size(); ++i)
    if (!b.kl[i].member(a)) {
      b.gamma0 = static_cast<int>(i);
      break;
    }
  if (b.gamma0 < 0)
    throw ProvedError("no refuting set in K_L: the formula is provable");

  int nk = static_cast<int>(b.kl.size());
  const auto &rhs = b.ctx->phi_rhd();
  int m = static_cast<int>(rhs.size());
  b.P.assign(nk, std::vector<char>(nk, 0));
  b.PC.assign(nk, std::vector<std::vector<char>>(
                      nk, std::vector<char>(static_cast<std::size_t>(m), 0)));
  b.PCS = b.PC;
  b.NEG.assign(nk, std::vector<char>(static_cast<std::size_t>(m), 0));
  b.BNEG = b.NEG;
  for (int i = 0; i < nk; ++i) {
    for (int c = 0; c < m; ++c) {
      Formula nc = simneg(rhs[static_cast<std::size_t>(c)]);
      b.NEG[i][static_cast<std::size_t>(c)] = b.kl[i].member(nc);
      b.BNEG[i][static_cast<std::size_t>(c)] = b.kl[i].member(box(nc));
      if (equal(rhs[static_cast<std::size_t>(c)], bot())) b.bot_tag = c;
    }
    for (int j = 0; j < nk; ++j) {
      b.P[i][j] = prec(b.kl[i], b.kl[j]);
      for (int c = 0; c < m; ++c) {
        b.PC[i][j][static_cast<std::size_t>(c)] =
            b.P[i][j] &&
            prec_C(b.kl[i], b.kl[j], rhs[static_cast<std::size_t>(c)]);
        b.PCS[i][j][static_cast<std::size_t>(c)] =
            b.P[i][j] &&
            prec_C_star(b.kl[i], b.kl[j], rhs[static_cast<std::size_t>(c)]);
      }
    }
  }
  if (b.bot_tag < 0) throw std::logic_error("#f missing from Phi_rhd");
  return b;
}

template <typename FrameT>
void fill_valuation(const Base &b, const std::vector<int> &world_gamma,
                    const FrameT &, std::map<std::string, WorldSet> &val) {
  for (int i = 0; i < b.ctx->size(); ++i) {
    const Formula &f = b.ctx->at(i);
    if (f->kind() != Kind::Var) continue;
    WorldSet &bitsv = val[f->name()];
    for (std::size_t w = 0; w < world_gamma.size(); ++w)
      if (b.kl[static_cast<std::size_t>(world_gamma[w])].member(i))
        bitsv |= 1u << w;
    (void)bitsv;
  }
}

void cap_worlds(std::size_t count, const Formula &a) {
  if (count > 32)
    throw ExactBoundError("canonical model exceeds the 32-world frame cap",
                          fmp_world_bound(a));
}

void finish(const Logic &l, const CanonicalModel &m, const Formula &a,
            bool all_confirmed) {
  CanonicalAudit audit = audit_canonical(l, m, a);
  if (audit.all()) return;
  if (!all_confirmed)
    throw ExactBoundError("canonical audit failed over uncertified K_L "
                          "candidates: " +
                              audit.detail,
                          fmp_world_bound(a));
  throw std::logic_error("canonical model audit failed: " + audit.detail);
}

// Sequences over phi_rhd indices with rank(Gamma) + |tau| <= bound,
// enumerated kl-major, then by length, then lexicographically.
void sequence_worlds(const Base &b, const std::vector<int> &rank, int bound,
                     std::vector<int> &world_gamma,
                     std::vector<std::vector<int>> &world_tag) {
  int m = static_cast<int>(b.ctx->phi_rhd().size());
  for (std::size_t g = 0; g < b.kl.size(); ++g) {
    int maxlen = bound - rank[g];
    for (int len = 0; len <= maxlen; ++len) {
      std::vector<int> tau(static_cast<std::size_t>(len), 0);
      for (;;) {
        world_gamma.push_back(static_cast<int>(g));
        world_tag.push_back(tau);
        int p = len - 1;
        for (; p >= 0; --p) {
          if (++tau[static_cast<std::size_t>(p)] < m) break;
          tau[static_cast<std::size_t>(p)] = 0;
        }
        if (p < 0) break;
      }
      if (world_gamma.size() > 64) return; // caller's cap will reject
    }
  }
}

bool proper_prefix(const std::vector<int> &tau, const std::vector<int> &sigma) {
  return tau.size() < sigma.size() &&
         std::equal(tau.begin(), tau.end(), sigma.begin());
}

// extends == tau * <c> is an initial segment of rho
bool extends(const std::vector<int> &tau, int c, const std::vector<int> &rho) {
  if (rho.size() < tau.size() + 1) return false;
  return std::equal(tau.begin(), tau.end(), rho.begin()) &&
         rho[tau.size()] == c;
}

} // namespace

CanonicalModel canonical_ct1(const Logic &l, const Formula &a, Oracle &o) {
  bool j2p = l.proves_scheme(SchemeId::J2plus);
  bool j4p = l.proves_scheme(SchemeId::J4plus);
  bool j5 = l.proves_scheme(SchemeId::J5);
  if (l.complete_class != CompleteClass::veltman || (j2p && j5))
    throw std::invalid_argument("canonical_ct1 does not cover " + l.name);

  Base b = build_base(l, a, o);
  int m = static_cast<int>(b.ctx->phi_rhd().size());

  CanonicalModel cm;
  cm.ctx = b.ctx;
  cm.kl = b.kl;
  for (std::size_t g = 0; g < b.kl.size(); ++g)
    for (int t = 0; t < m; ++t) {
      cm.world_gamma.push_back(static_cast<int>(g));
      cm.world_tag.push_back({t});
    }
  cap_worlds(cm.world_gamma.size(), a);
  int W = static_cast<int>(cm.world_gamma.size());

  VeltmanFrame f = make_veltman_frame(W);
  auto G = [&](int w) { return cm.world_gamma[static_cast<std::size_t>(w)]; };
  auto T = [&](int w) {
    return cm.world_tag[static_cast<std::size_t>(w)][0];
  };
  for (int x = 0; x < W; ++x)
    for (int y = 0; y < W; ++y)
      if (b.P[G(x)][G(y)]) f.r[static_cast<std::size_t>(x)] |= 1u << y;
  for (int x = 0; x < W; ++x)
    for (int y = 0; y < W; ++y) {
      if (!f.has_r(x, y)) continue;
      int gx = G(x), gy = G(y), c = T(y);
      for (int z = 0; z < W; ++z) {
        int gz = G(z), d = T(z);
        bool in;
        if (j2p) {
          in = b.P[gx][gz] &&
               (!b.PC[gx][gy][static_cast<std::size_t>(c)] ||
                (d == c && b.PC[gx][gz][static_cast<std::size_t>(c)] &&
                 b.NEG[gz][static_cast<std::size_t>(c)]));
        } else {
          bool hyp = b.PC[gx][gy][static_cast<std::size_t>(c)] &&
                     (!j5 || b.BNEG[gy][static_cast<std::size_t>(c)]);
          in = (!hyp || b.NEG[gz][static_cast<std::size_t>(c)]) &&
               (!j4p || b.P[gx][gz]);
        }
        if (in)
          f.s[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] |=
              1u << z;
      }
    }

  VeltmanModel model{std::move(f), {}};
  fill_valuation(b, cm.world_gamma, model.frame, model.val);
  cm.vmodel = std::move(model);
  for (int w = 0; w < W; ++w)
    if (G(w) == b.gamma0 && T(w) == b.bot_tag) cm.root = w;
  finish(l, cm, a, b.all_confirmed);
  return cm;
}

CanonicalModel canonical_ct2(const Logic &l, const Formula &a, Oracle &o) {
  bool j2p = l.proves_scheme(SchemeId::J2plus);
  bool j5 = l.proves_scheme(SchemeId::J5);
  if (l.complete_class != CompleteClass::veltman || !(j2p && j5))
    throw std::invalid_argument("canonical_ct2 does not cover " + l.name);

  Base b = build_base(l, a, o);
  std::vector<int> rank = prec_ranks(b.kl);

  CanonicalModel cm;
  cm.ctx = b.ctx;
  cm.kl = b.kl;
  sequence_worlds(b, rank, rank[static_cast<std::size_t>(b.gamma0)],
                  cm.world_gamma, cm.world_tag);
  cap_worlds(cm.world_gamma.size(), a);
  int W = static_cast<int>(cm.world_gamma.size());

  VeltmanFrame f = make_veltman_frame(W);
  auto G = [&](int w) { return cm.world_gamma[static_cast<std::size_t>(w)]; };
  auto T = [&](int w) -> const std::vector<int> & {
    return cm.world_tag[static_cast<std::size_t>(w)];
  };
  for (int x = 0; x < W; ++x)
    for (int y = 0; y < W; ++y)
      if (b.P[G(x)][G(y)] && proper_prefix(T(x), T(y)))
        f.r[static_cast<std::size_t>(x)] |= 1u << y;
  for (int x = 0; x < W; ++x)
    for (int y = 0; y < W; ++y) {
      if (!f.has_r(x, y)) continue;
      int gx = G(x), gy = G(y);
      int c = T(y)[T(x).size()]; // the tag extending tau in sigma
      bool hyp = b.PCS[gx][gy][static_cast<std::size_t>(c)] &&
                 b.BNEG[gy][static_cast<std::size_t>(c)];
      for (int z = 0; z < W; ++z) {
        if (!f.has_r(x, z)) continue;
        int gz = G(z);
        bool concl = extends(T(x), c, T(z)) &&
                     b.PCS[gx][gz][static_cast<std::size_t>(c)] &&
                     b.NEG[gz][static_cast<std::size_t>(c)] &&
                     b.BNEG[gz][static_cast<std::size_t>(c)];
        if (!hyp || concl)
          f.s[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] |=
              1u << z;
      }
    }

  VeltmanModel model{std::move(f), {}};
  fill_valuation(b, cm.world_gamma, model.frame, model.val);
  cm.vmodel = std::move(model);
  for (int w = 0; w < W; ++w)
    if (G(w) == b.gamma0 && T(w).empty()) cm.root = w;
  finish(l, cm, a, b.all_confirmed);
  return cm;
}

CanonicalModel canonical_gct1(const Logic &l, const Formula &a, Oracle &o) {
  bool j2 = l.proves_scheme(SchemeId::J2);
  bool j4p = l.proves_scheme(SchemeId::J4plus);
  bool j5 = l.proves_scheme(SchemeId::J5);
  if (l.complete_class != CompleteClass::generalized || (j2 && j5))
    throw std::invalid_argument("canonical_gct1 does not cover " + l.name);

  Base b = build_base(l, a, o);
  int m = static_cast<int>(b.ctx->phi_rhd().size());

  CanonicalModel cm;
  cm.ctx = b.ctx;
  cm.kl = b.kl;
  for (std::size_t g = 0; g < b.kl.size(); ++g)
    for (int t = 0; t < m; ++t) {
      cm.world_gamma.push_back(static_cast<int>(g));
      cm.world_tag.push_back({t});
    }
  cap_worlds(cm.world_gamma.size(), a);
  int W = static_cast<int>(cm.world_gamma.size());

  GenFrame f = make_gen_frame(W);
  auto G = [&](int w) { return cm.world_gamma[static_cast<std::size_t>(w)]; };
  auto T = [&](int w) {
    return cm.world_tag[static_cast<std::size_t>(w)][0];
  };
  for (int x = 0; x < W; ++x)
    for (int y = 0; y < W; ++y)
      if (b.P[G(x)][G(y)]) f.r[static_cast<std::size_t>(x)] |= 1u << y;

  auto sat = [&](int x, int y, const std::vector<int> &v) {
    int gx = G(x), gy = G(y), c = T(y);
    bool has_succ = false;
    for (int z : v) has_succ |= static_cast<bool>(b.P[gx][G(z)]);
    if (!has_succ) return false;
    bool hyp = b.PC[gx][gy][static_cast<std::size_t>(c)];
    // the J5 variants weaken the hypothesis by []~C in Delta
    if (!j2 && j5) hyp = hyp && b.BNEG[gy][static_cast<std::size_t>(c)];
    if (!hyp) return true;
    if (!j2) {
      for (int z : v)
        if (b.NEG[G(z)][static_cast<std::size_t>(c)]) return true;
      return false;
    }
    bool l0 = false, l1 = false;
    for (int z : v) {
      if (b.NEG[G(z)][static_cast<std::size_t>(c)] &&
          (!j4p || b.P[gx][G(z)]))
        l0 = true;
      if (T(z) == c && b.PC[gx][G(z)][static_cast<std::size_t>(c)]) l1 = true;
    }
    return l0 && l1;
  };

  for (int x = 0; x < W; ++x)
    for (int y = 0; y < W; ++y) {
      if (!f.has_r(x, y)) continue;
      auto &gens = f.gen[static_cast<std::size_t>(x)]
                        [static_cast<std::size_t>(y)];
      // minimal satisfying sets have at most three members (one per
      // existential clause), so size <= 3 enumeration is exhaustive
      for (int z1 = 0; z1 < W; ++z1) {
        if (sat(x, y, {z1})) {
          gens.push_back(1u << z1);
          continue;
        }
        for (int z2 = z1 + 1; z2 < W; ++z2) {
          if (sat(x, y, {z1, z2})) {
            gens.push_back((1u << z1) | (1u << z2));
            continue;
          }
          for (int z3 = z2 + 1; z3 < W; ++z3)
            if (sat(x, y, {z1, z2, z3}))
              gens.push_back((1u << z1) | (1u << z2) | (1u << z3));
        }
      }
    }
  antichain_reduce(f);

  GenModel model{std::move(f), {}};
  fill_valuation(b, cm.world_gamma, model.frame, model.val);
  cm.gmodel = std::move(model);
  for (int w = 0; w < W; ++w)
    if (G(w) == b.gamma0 && T(w) == b.bot_tag) cm.root = w;
  finish(l, cm, a, b.all_confirmed);
  return cm;
}

CanonicalModel canonical_gct2(const Logic &l, const Formula &a, Oracle &o) {
  bool j2 = l.proves_scheme(SchemeId::J2);
  bool j4p = l.proves_scheme(SchemeId::J4plus);
  bool j5 = l.proves_scheme(SchemeId::J5);
  if (l.complete_class != CompleteClass::generalized || !(j2 && j5))
    throw std::invalid_argument("canonical_gct2 does not cover " + l.name);

  Base b = build_base(l, a, o);
  std::vector<int> rank = prec_ranks(b.kl);
  int k = 0;
  for (int r : rank) k = std::max(k, r);

  CanonicalModel cm;
  cm.ctx = b.ctx;
  cm.kl = b.kl;
  sequence_worlds(b, rank, k, cm.world_gamma, cm.world_tag);
  cap_worlds(cm.world_gamma.size(), a);
  int W = static_cast<int>(cm.world_gamma.size());

  GenFrame f = make_gen_frame(W);
  auto G = [&](int w) { return cm.world_gamma[static_cast<std::size_t>(w)]; };
  auto T = [&](int w) -> const std::vector<int> & {
    return cm.world_tag[static_cast<std::size_t>(w)];
  };
  for (int x = 0; x < W; ++x)
    for (int y = 0; y < W; ++y)
      if (b.P[G(x)][G(y)] && proper_prefix(T(x), T(y)))
        f.r[static_cast<std::size_t>(x)] |= 1u << y;

  auto sat = [&](int x, int y, const std::vector<int> &v) {
    int gx = G(x), gy = G(y);
    int c = T(y)[T(x).size()];
    bool has_succ = false;
    for (int z : v) has_succ |= f.has_r(x, z);
    if (!has_succ) return false;
    bool hyp = b.PCS[gx][gy][static_cast<std::size_t>(c)] &&
               b.BNEG[gy][static_cast<std::size_t>(c)];
    if (!hyp) return true;
    bool l1 = false, l2 = false;
    for (int z : v) {
      int gz = G(z);
      if (b.NEG[gz][static_cast<std::size_t>(c)] &&
          (!j4p || (extends(T(x), c, T(z)) && b.P[gx][gz])))
        l1 = true;
      if (extends(T(x), c, T(z)) &&
          b.PCS[gx][gz][static_cast<std::size_t>(c)] &&
          b.BNEG[gz][static_cast<std::size_t>(c)])
        l2 = true;
    }
    return l1 && l2;
  };

  for (int x = 0; x < W; ++x)
    for (int y = 0; y < W; ++y) {
      if (!f.has_r(x, y)) continue;
      auto &gens = f.gen[static_cast<std::size_t>(x)]
                        [static_cast<std::size_t>(y)];
      for (int z1 = 0; z1 < W; ++z1) {
        if (sat(x, y, {z1})) {
          gens.push_back(1u << z1);
          continue;
        }
        for (int z2 = z1 + 1; z2 < W; ++z2) {
          if (sat(x, y, {z1, z2})) {
            gens.push_back((1u << z1) | (1u << z2));
            continue;
          }
          for (int z3 = z2 + 1; z3 < W; ++z3)
            if (sat(x, y, {z1, z2, z3}))
              gens.push_back((1u << z1) | (1u << z2) | (1u << z3));
        }
      }
    }
  antichain_reduce(f);

  GenModel model{std::move(f), {}};
  fill_valuation(b, cm.world_gamma, model.frame, model.val);
  cm.gmodel = std::move(model);
  for (int w = 0; w < W; ++w)
    if (G(w) == b.gamma0 && T(w).empty()) cm.root = w;
  finish(l, cm, a, b.all_confirmed);
  return cm;
}

CanonicalModel canonical_model(const Logic &l, const Formula &a, Oracle &o) {
  if (l.complete_class == CompleteClass::veltman) {
    if (l.proves_scheme(SchemeId::J2plus) && l.proves_scheme(SchemeId::J5))
      return canonical_ct2(l, a, o);
    return canonical_ct1(l, a, o);
  }
  if (l.proves_scheme(SchemeId::J2) && l.proves_scheme(SchemeId::J5))
    return canonical_gct2(l, a, o);
  return canonical_gct1(l, a, o);
}

CanonicalAudit audit_canonical(const Logic &l, const CanonicalModel &m,
                               const Formula &a) {
  CanonicalAudit audit;
  bool gen = m.gmodel.has_value();
  std::string frame_err =
      gen ? check_gen_frame(m.gmodel->frame) : check_frame(m.vmodel->frame);
  audit.frame_ok = frame_err.empty();
  if (!audit.frame_ok) {
    audit.detail = "frame: " + frame_err;
    return audit;
  }
  audit.conditions_ok =
      gen ? satisfies_logic_conditions(m.gmodel->frame, l)
          : satisfies_logic_conditions(m.vmodel->frame, l);
  if (!audit.conditions_ok) {
    audit.detail = "a frame condition of " + l.name + " fails";
    return audit;
  }
  audit.truth_ok = true;
  int W = static_cast<int>(m.world_gamma.size());
  for (int i = 0; i < m.ctx->size() && audit.truth_ok; ++i) {
    const Formula &f = m.ctx->at(i);
    WorldSet holds =
        gen ? gen_eval_set(*m.gmodel, f) : eval_set(*m.vmodel, f);
    for (int w = 0; w < W; ++w) {
      bool in = m.kl[static_cast<std::size_t>(
                         m.world_gamma[static_cast<std::size_t>(w)])]
                    .member(i);
      if (in != static_cast<bool>((holds >> w) & 1)) {
        audit.truth_ok = false;
        audit.detail = "truth lemma fails at world " + std::to_string(w);
        break;
      }
    }
  }
  if (!audit.truth_ok) return audit;
  audit.root_refutes = gen ? !gen_eval(*m.gmodel, m.root, a)
                           : !eval(*m.vmodel, m.root, a);
  if (!audit.root_refutes) audit.detail = "root does not refute the target";
  return audit;
}

} // namespace il
