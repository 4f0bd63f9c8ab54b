#include "il/library.hpp"

#include "il/parse.hpp"

#include <stdexcept>

namespace il {

int ProofBuilder::push(ProofLine ln) {
  proof_.lines.push_back(std::move(ln));
  return last();
}

int ProofBuilder::taut_line(const Formula &f) {
  if (!taut(f))
    throw std::logic_error("not a tautology: " + print(f));
  ProofLine ln;
  ln.formula = f;
  ln.just = ProofLine::Just::Ax;
  ln.scheme = SchemeId::G1;
  return push(std::move(ln));
}

int ProofBuilder::ax(SchemeId s, const Subst &sub) {
  ProofLine ln;
  ln.formula = substitute(scheme_pattern(s), sub);
  ln.just = ProofLine::Just::Ax;
  ln.scheme = s;
  ln.subst = sub;
  return push(std::move(ln));
}

int ProofBuilder::mp(int minor, int major) {
  const Formula &maj = formula(major);
  if (maj->kind() != Kind::Imp || !equal(maj->left(), formula(minor)))
    throw std::logic_error("bad MP in builder");
  ProofLine ln;
  ln.formula = maj->right();
  ln.just = ProofLine::Just::MP;
  ln.i = minor;
  ln.j = major;
  return push(std::move(ln));
}

int ProofBuilder::nec(int i) {
  ProofLine ln;
  ln.formula = box(formula(i));
  ln.just = ProofLine::Just::Nec;
  ln.i = i;
  return push(std::move(ln));
}

int ProofBuilder::r1(int i, const Formula &c) {
  const Formula &prem = formula(i);
  if (prem->kind() != Kind::Imp) throw std::logic_error("bad R1 premise");
  ProofLine ln;
  ln.formula = imp(rhd(c, prem->left()), rhd(c, prem->right()));
  ln.just = ProofLine::Just::R1;
  ln.i = i;
  ln.side = c;
  return push(std::move(ln));
}

int ProofBuilder::r2(int i, const Formula &c) {
  const Formula &prem = formula(i);
  if (prem->kind() != Kind::Imp) throw std::logic_error("bad R2 premise");
  ProofLine ln;
  ln.formula = imp(rhd(prem->right(), c), rhd(prem->left(), c));
  ln.just = ProofLine::Just::R2;
  ln.i = i;
  ln.side = c;
  return push(std::move(ln));
}

int ProofBuilder::from(const Formula &target,
                       const std::vector<int> &premises) {
  Formula chain = target;
  for (auto it = premises.rbegin(); it != premises.rend(); ++it)
    chain = imp(formula(*it), chain);
  int cur = taut_line(chain);
  for (int prem : premises) cur = mp(prem, cur);
  return cur;
}

int ProofBuilder::box_mono(const Formula &x, const Formula &y) {
  int t = taut_line(imp(x, y));
  int n = nec(t);
  int g2 = ax(SchemeId::G2, {{"A", x}, {"B", y}});
  return mp(n, g2);
}

const Formula &ProofBuilder::formula(int i) const {
  return proof_.lines.at(static_cast<std::size_t>(i)).formula;
}

namespace {

// The three lines relating []~A and A|>#f: the J6 instance at ~A plus
// the two R2 conversions between (~~A)|>#f and A|>#f. With these as
// premises, []~A <-> A|>#f is a propositional consequence.
std::vector<int> dia_link(ProofBuilder &b, const Formula &A) {
  int j6 = b.ax(SchemeId::J6, {{"A", neg(A)}});
  int to = b.r2(b.taut_line(imp(A, neg(neg(A)))), bot());
  int from = b.r2(b.taut_line(imp(neg(neg(A)), A)), bot());
  return {j6, to, from};
}

void append_with(std::vector<int> &into, const std::vector<int> &more) {
  into.insert(into.end(), more.begin(), more.end());
}

} // namespace

int box_neg_rhd(ProofBuilder &b, const Formula &A, const Formula &B) {
  int lift = b.r1(b.taut_line(imp(bot(), B)), A); // A|>#f -> A|>B
  std::vector<int> prem = dia_link(b, A);
  prem.push_back(lift);
  return b.from(imp(box(neg(A)), rhd(A, B)), prem);
}

int strong_r2(ProofBuilder &b, const Formula &A, const Formula &B,
              const Formula &C) {
  Formula D = conj(A, neg(B));
  int p1 = box_neg_rhd(b, D, C);
  int bm = b.box_mono(imp(A, B), neg(D));
  int j3 = b.ax(SchemeId::J3, {{"A", D}, {"B", B}, {"C", C}});
  int r = b.r2(b.taut_line(imp(A, disj(D, B))), C);
  return b.from(imp(box(imp(A, B)), imp(rhd(B, C), rhd(A, C))),
                {bm, p1, j3, r});
}

int inst_j1(ProofBuilder &b, const Logic &l, const Formula &A,
            const Formula &B) {
  if (l.has_axiom(SchemeId::J1)) return b.ax(SchemeId::J1, {{"A", A}, {"B", B}});
  if (l.has_axiom(SchemeId::J1p)) {
    int s = strong_r2(b, A, B, B);
    int jp = b.ax(SchemeId::J1p, {{"A", B}});
    return b.from(imp(box(imp(A, B)), rhd(A, B)), {s, jp});
  }
  throw std::logic_error("no J1 route in " + l.name);
}

int inst_j1p(ProofBuilder &b, const Logic &l, const Formula &A) {
  if (l.has_axiom(SchemeId::J1p)) return b.ax(SchemeId::J1p, {{"A", A}});
  if (l.has_axiom(SchemeId::J1)) {
    int n = b.nec(b.taut_line(imp(A, A)));
    int j1 = b.ax(SchemeId::J1, {{"A", A}, {"B", A}});
    return b.mp(n, j1);
  }
  throw std::logic_error("no J1' route in " + l.name);
}

int inst_j2plus(ProofBuilder &b, const Logic &l, const Formula &A,
                const Formula &B, const Formula &C) {
  if (l.has_axiom(SchemeId::J2plus))
    return b.ax(SchemeId::J2plus, {{"A", A}, {"B", B}, {"C", C}});
  Formula target = imp(conj(rhd(A, disj(B, C)), rhd(B, C)), rhd(A, C));
  if (l.has_axiom(SchemeId::J2plusP)) {
    int r = b.r2(b.taut_line(imp(conj(disj(B, C), neg(C)), B)), C);
    int j = b.ax(SchemeId::J2plusP, {{"A", A}, {"B", disj(B, C)}, {"C", C}});
    return b.from(target, {r, j});
  }
  if (l.has_axiom(SchemeId::J1) && l.has_axiom(SchemeId::J2)) {
    int cc = inst_j1p(b, l, C);
    int j3 = b.ax(SchemeId::J3, {{"A", B}, {"B", C}, {"C", C}});
    int j2 = b.ax(SchemeId::J2, {{"A", A}, {"B", disj(B, C)}, {"C", C}});
    return b.from(target, {cc, j3, j2});
  }
  throw std::logic_error("no J2+ route in " + l.name);
}

int inst_j2plusP(ProofBuilder &b, const Logic &l, const Formula &A,
                 const Formula &B, const Formula &C) {
  if (l.has_axiom(SchemeId::J2plusP))
    return b.ax(SchemeId::J2plusP, {{"A", A}, {"B", B}, {"C", C}});
  Formula Bc = conj(B, neg(C));
  int r = b.r1(b.taut_line(imp(B, disj(Bc, C))), A);
  int j = inst_j2plus(b, l, A, Bc, C);
  return b.from(imp(conj(rhd(A, B), rhd(Bc, C)), rhd(A, C)), {r, j});
}

int inst_j2(ProofBuilder &b, const Logic &l, const Formula &A,
            const Formula &B, const Formula &C) {
  if (l.has_axiom(SchemeId::J2))
    return b.ax(SchemeId::J2, {{"A", A}, {"B", B}, {"C", C}});
  if (l.has_axiom(SchemeId::J2plus)) {
    int r = b.r1(b.taut_line(imp(B, disj(B, C))), A);
    int j = b.ax(SchemeId::J2plus, {{"A", A}, {"B", B}, {"C", C}});
    return b.from(imp(conj(rhd(A, B), rhd(B, C)), rhd(A, C)), {r, j});
  }
  throw std::logic_error("no J2 route in " + l.name);
}

int inst_j4plus(ProofBuilder &b, const Logic &l, const Formula &A,
                const Formula &B, const Formula &C) {
  if (l.has_axiom(SchemeId::J4plus))
    return b.ax(SchemeId::J4plus, {{"A", A}, {"B", B}, {"C", C}});
  Formula target = imp(box(imp(A, B)), imp(rhd(C, A), rhd(C, B)));
  if (l.has_axiom(SchemeId::J2plus) || l.has_axiom(SchemeId::J2plusP) ||
      (l.has_axiom(SchemeId::J1) && l.has_axiom(SchemeId::J2))) {
    Formula D = conj(A, neg(B));
    int bm = b.box_mono(imp(A, B), neg(D));
    int p1 = box_neg_rhd(b, D, B);
    int jp = inst_j2plusP(b, l, C, A, B);
    return b.from(target, {bm, p1, jp});
  }
  throw std::logic_error("no J4+ route in " + l.name);
}

int inst_j4p(ProofBuilder &b, const Logic &l, const Formula &A,
             const Formula &B) {
  if (l.has_axiom(SchemeId::J4p))
    return b.ax(SchemeId::J4p, {{"A", A}, {"B", B}});
  Formula target = imp(rhd(A, B), imp(rhd(B, bot()), rhd(A, bot())));
  if (l.has_axiom(SchemeId::J2)) {
    int j2 = b.ax(SchemeId::J2, {{"A", A}, {"B", B}, {"C", bot()}});
    return b.from(target, {j2});
  }
  // via J4+ (possibly itself derived): B|>#f gives []~B, hence
  // [](B -> #f), and J4+ turns A|>B into A|>#f.
  std::vector<int> prem = dia_link(b, B);
  int bm = b.box_mono(neg(B), imp(B, bot()));
  int jp = inst_j4plus(b, l, B, bot(), A);
  prem.push_back(bm);
  prem.push_back(jp);
  return b.from(target, prem);
}

int inst_j4(ProofBuilder &b, const Logic &l, const Formula &A,
            const Formula &B) {
  Formula target = imp(rhd(A, B), imp(dia(A), dia(B)));
  if (l.has_axiom(SchemeId::J4))
    return b.ax(SchemeId::J4, {{"A", A}, {"B", B}});
  int jp = inst_j4p(b, l, A, B);
  std::vector<int> prem = {jp};
  append_with(prem, dia_link(b, A));
  append_with(prem, dia_link(b, B));
  return b.from(target, prem);
}

Proof congruence_proof(const Proof &pa, const Proof &pb) {
  auto split_iff = [](const Formula &f) {
    if (f->kind() != Kind::And || f->left()->kind() != Kind::Imp)
      throw std::invalid_argument("input does not conclude an <->");
    return std::pair<Formula, Formula>(f->left()->left(), f->left()->right());
  };
  auto [a0, a1] = split_iff(pa.conclusion());
  auto [b0, b1] = split_iff(pb.conclusion());

  Proof out;
  out.lines = pa.lines;
  int offset = static_cast<int>(pa.lines.size());
  for (ProofLine ln : pb.lines) {
    if (ln.i >= 0) ln.i += offset;
    if (ln.j >= 0) ln.j += offset;
    out.lines.push_back(std::move(ln));
  }
  auto fml = [&](int i) { return out.lines[static_cast<std::size_t>(i)].formula; };
  auto push_taut = [&](const Formula &f) {
    ProofLine ln;
    ln.formula = f;
    ln.just = ProofLine::Just::Ax;
    ln.scheme = SchemeId::G1;
    out.lines.push_back(ln);
    return static_cast<int>(out.lines.size()) - 1;
  };
  auto push_mp = [&](int minor, int major) {
    ProofLine ln;
    ln.formula = fml(major)->right();
    ln.just = ProofLine::Just::MP;
    ln.i = minor;
    ln.j = major;
    out.lines.push_back(ln);
    return static_cast<int>(out.lines.size()) - 1;
  };
  auto from = [&](const Formula &target, const std::vector<int> &premises) {
    Formula chain = target;
    for (auto it = premises.rbegin(); it != premises.rend(); ++it)
      chain = imp(fml(*it), chain);
    int cur = push_taut(chain);
    for (int prem : premises) cur = push_mp(prem, cur);
    return cur;
  };
  auto push_rule = [&](ProofLine::Just j, int i, const Formula &c) {
    const Formula &prem = fml(i);
    ProofLine ln;
    ln.just = j;
    ln.i = i;
    ln.side = c;
    ln.formula = j == ProofLine::Just::R1
                     ? imp(rhd(c, prem->left()), rhd(c, prem->right()))
                     : imp(rhd(prem->right(), c), rhd(prem->left(), c));
    out.lines.push_back(ln);
    return static_cast<int>(out.lines.size()) - 1;
  };

  int ia = static_cast<int>(pa.lines.size()) - 1;
  int ib = static_cast<int>(out.lines.size()) - 1;
  int bf = from(imp(b0, b1), {ib});
  int r1f = push_rule(ProofLine::Just::R1, bf, a0); // a0|>b0 -> a0|>b1
  int ar = from(imp(a1, a0), {ia});
  int r2f = push_rule(ProofLine::Just::R2, ar, b1); // a0|>b1 -> a1|>b1
  int bb2 = from(imp(b1, b0), {ib});
  int r1b = push_rule(ProofLine::Just::R1, bb2, a1); // a1|>b1 -> a1|>b0
  int af = from(imp(a0, a1), {ia});
  int r2b = push_rule(ProofLine::Just::R2, af, b0); // a1|>b0 -> a0|>b0
  from(iff(rhd(a0, b0), rhd(a1, b1)), {r1f, r2f, r1b, r2b});
  return out;
}

Formula char_instance(SchemeId s) {
  if (s == SchemeId::G1) return imp(var("p"), var("p"));
  return substitute(scheme_pattern(s),
                    {{"A", var("p")}, {"B", var("q")}, {"C", var("r")}});
}

std::optional<Proof> derive_scheme_instance(const Logic &l, SchemeId s) {
  Formula p = var("p"), q = var("q"), r = var("r");
  ProofBuilder b;
  try {
    switch (s) {
    case SchemeId::J1: inst_j1(b, l, p, q); break;
    case SchemeId::J1p: inst_j1p(b, l, p); break;
    case SchemeId::J2: inst_j2(b, l, p, q, r); break;
    case SchemeId::J2plus: inst_j2plus(b, l, p, q, r); break;
    case SchemeId::J2plusP: inst_j2plusP(b, l, p, q, r); break;
    case SchemeId::J4: inst_j4(b, l, p, q); break;
    case SchemeId::J4p: inst_j4p(b, l, p, q); break;
    case SchemeId::J4plus: inst_j4plus(b, l, p, q, r); break;
    default:
      if (!l.has_axiom(s)) return std::nullopt;
      b.ax(s, {{"A", p}, {"B", q}, {"C", r}});
      break;
    }
  } catch (const std::logic_error &) {
    return std::nullopt;
  }
  return b.take();
}

namespace {

std::vector<LibraryEntry> build_library() {
  Formula p = var("p"), q = var("q"), r = var("r");
  std::vector<LibraryEntry> lib;
  auto entry = [&](const std::string &name, const std::string &logic,
                   ProofBuilder &b) {
    lib.push_back({name, logic, b.take()});
  };
  const Logic &j2 = *logic_by_name("IL-(J2)");
  const Logic &j2p = *logic_by_name("IL-(J2+)");
  const Logic &j4pl = *logic_by_name("IL-(J4+)");
  const Logic &cl = *logic_by_name("CL");

  { // []~p -> p|>q in IL-
    ProofBuilder b;
    box_neg_rhd(b, p, q);
    entry("0P3.1", "IL-", b);
  }
  { // [](p->q) -> (q|>r -> p|>r) in IL-
    ProofBuilder b;
    strong_r2(b, p, q, r);
    entry("0P3.2", "IL-", b);
  }
  { // p|>p from the implication form
    ProofBuilder b;
    int n = b.nec(b.taut_line(imp(p, p)));
    int j = b.ax(SchemeId::J1, {{"A", p}, {"B", p}});
    b.mp(n, j);
    entry("1P1.a", "IL-(J1)", b);
  }
  { // [](p->q) -> p|>q from p|>p
    ProofBuilder b;
    int s = strong_r2(b, p, q, q);
    int jp = b.ax(SchemeId::J1p, {{"A", q}});
    b.from(imp(box(imp(p, q)), rhd(p, q)), {s, jp});
    entry("1P1.b", "IL-(J1)", b);
  }
  { // J4' instance from the J4 axiom
    ProofBuilder b;
    int j = b.ax(SchemeId::J4, {{"A", p}, {"B", q}});
    std::vector<int> prem = {j};
    append_with(prem, dia_link(b, p));
    append_with(prem, dia_link(b, q));
    b.from(imp(rhd(p, q), imp(rhd(q, bot()), rhd(p, bot()))), prem);
    entry("4P1.a", "IL-(J4)", b);
  }
  { // J4 instance from the J4' axiom
    ProofBuilder b;
    int j = b.ax(SchemeId::J4p, {{"A", p}, {"B", q}});
    std::vector<int> prem = {j};
    append_with(prem, dia_link(b, p));
    append_with(prem, dia_link(b, q));
    b.from(imp(rhd(p, q), imp(dia(p), dia(q))), prem);
    entry("4P1.b", "IL-(J4)", b);
  }
  { // []p -> (r|>(p->q) -> r|>q) from J4+
    ProofBuilder b;
    int bm = b.box_mono(p, imp(imp(p, q), q));
    int j = b.ax(SchemeId::J4plus, {{"A", imp(p, q)}, {"B", q}, {"C", r}});
    b.from(imp(box(p), imp(rhd(r, imp(p, q)), rhd(r, q))), {bm, j});
    entry("4P2.a", "IL-(J4+)", b);
  }
  { // []p -> (r|>q -> r|>(p&q)) from J4+'
    ProofBuilder b;
    int lift = b.r1(b.taut_line(imp(q, imp(p, conj(p, q)))), r);
    int j = b.ax(SchemeId::J4plusP, {{"A", p}, {"B", conj(p, q)}, {"C", r}});
    b.from(imp(box(p), imp(rhd(r, q), rhd(r, conj(p, q)))), {lift, j});
    entry("4P2.b", "IL-(J4+)", b);
  }
  { // [](p->q) -> (r|>p -> r|>q) from J4+''
    ProofBuilder b;
    int j = b.ax(SchemeId::J4plusPP, {{"A", imp(p, q)}, {"B", p}, {"C", r}});
    int lift = b.r1(b.taut_line(imp(conj(imp(p, q), p), q)), r);
    b.from(imp(box(imp(p, q)), imp(rhd(r, p), rhd(r, q))), {j, lift});
    entry("4P2.c", "IL-(J4+)", b);
  }
  { // J4 instance in IL-(J4+)
    ProofBuilder b;
    inst_j4(b, j4pl, p, q);
    entry("4P3", "IL-(J4+)", b);
  }
  { // J2+' instance from the J2+ axiom
    ProofBuilder b;
    inst_j2plusP(b, j2p, p, q, r);
    entry("2P1.a", "IL-(J2+)", b);
  }
  { // J2+ instance from the J2+' axiom
    ProofBuilder b;
    Formula bc = disj(q, r);
    int rr = b.r2(b.taut_line(imp(conj(bc, neg(r)), q)), r);
    int j = b.ax(SchemeId::J2plusP, {{"A", p}, {"B", bc}, {"C", r}});
    b.from(imp(conj(rhd(p, bc), rhd(q, r)), rhd(p, r)), {rr, j});
    entry("2P1.b", "IL-(J2+)", b);
  }
  { // J2 instance in IL-(J2+)
    ProofBuilder b;
    inst_j2(b, j2p, p, q, r);
    entry("2P2.1", "IL-(J2+)", b);
  }
  { // J2+ instance in IL-(J1,J2)
    ProofBuilder b;
    inst_j2plus(b, cl, p, q, r);
    entry("2P2.2", "CL", b);
  }
  { // J4+ instance in IL-(J2+)
    ProofBuilder b;
    inst_j4plus(b, j2p, p, q, r);
    entry("2P3", "IL-(J2+)", b);
  }
  { // J4 instance in IL-(J2)
    ProofBuilder b;
    inst_j4(b, j2, p, q);
    entry("4C1", "IL-(J2)", b);
  }
  { // J4+ instance in IL-(J1,J2)
    ProofBuilder b;
    inst_j4plus(b, cl, p, q, r);
    entry("2C1", "CL", b);
  }
  { // []p <-> ~p|>#f with the forward half through J1
    ProofBuilder b;
    int bm = b.box_mono(p, imp(neg(p), bot()));
    int j1l = b.ax(SchemeId::J1, {{"A", neg(p)}, {"B", bot()}});
    int j6 = b.ax(SchemeId::J6, {{"A", p}});
    b.from(iff(box(p), rhd(neg(p), bot())), {bm, j1l, j6});
    entry("CLP1.1", "CL", b);
  }
  { // [](p->q) -> (r|>p -> r|>q) through J1 and J2
    ProofBuilder b;
    int j1l = b.ax(SchemeId::J1, {{"A", p}, {"B", q}});
    int j2l = b.ax(SchemeId::J2, {{"A", r}, {"B", p}, {"C", q}});
    b.from(imp(box(imp(p, q)), imp(rhd(r, p), rhd(r, q))), {j1l, j2l});
    entry("CLP1.2", "CL", b);
  }
  { // [](p->q) -> (q|>r -> p|>r) through J1 and J2
    ProofBuilder b;
    int j1l = b.ax(SchemeId::J1, {{"A", p}, {"B", q}});
    int j2l = b.ax(SchemeId::J2, {{"A", p}, {"B", q}, {"C", r}});
    b.from(imp(box(imp(p, q)), imp(rhd(q, r), rhd(p, r))), {j1l, j2l});
    entry("CLP1.3", "CL", b);
  }
  { // J4 instance in IL-(J1,J2)
    ProofBuilder b;
    inst_j4(b, cl, p, q);
    entry("CLP2", "CL", b);
  }
  { // and the same instance in IL, whose other added scheme is J5
    ProofBuilder b;
    inst_j4(b, *logic_by_name("IL"), p, q);
    entry("CLC1", "IL", b);
  }
  return lib;
}

} // namespace

const std::vector<LibraryEntry> &theorem_library() {
  static const std::vector<LibraryEntry> lib = build_library();
  return lib;
}

} // namespace il
