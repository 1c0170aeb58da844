#include "alt1/fock.hpp"

#include <sstream>

namespace alt1 {

namespace {
struct FVars {
  int B1, B2, V1, V2, x, gamma, j, k, beta, y1, y2, v1, v2;
  FVars() {
    B1 = Vars::intern("B1");
    B2 = Vars::intern("B2");
    V1 = Vars::intern("V1");
    V2 = Vars::intern("V2");
    x = Vars::intern("x");
    gamma = Vars::intern("gamma");
    j = Vars::intern("j");
    k = Vars::intern("k");
    beta = Vars::intern("beta");
    y1 = Vars::intern("y1");
    y2 = Vars::intern("y2");
    v1 = Vars::intern("v1");
    v2 = Vars::intern("v2");
  }
};
const FVars& fv() {
  static FVars v;
  return v;
}
Poly pv(int id) { return Poly::var_pow(id, 1); }
Rational binom_r(int n, int m) {
  if (m < 0 || m > n) return 0;
  return factorial(n) / (factorial(m) * factorial(n - m));
}
}  // namespace

// ---------------------------------------------------------------- weyl

WeylOp WeylOp::term(Poly c, Word w) {
  WeylOp op;
  if (!c.is_zero()) op.terms_[w] = std::move(c);
  return op;
}

void WeylOp::add(const Word& w, const Poly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_[w] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WeylOp WeylOp::operator-() const {
  WeylOp r;
  for (const auto& [w, c] : terms_) r.terms_[w] = -c;
  return r;
}
WeylOp& WeylOp::operator+=(const WeylOp& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}
WeylOp operator-(WeylOp a, const WeylOp& b) { return a += -b; }
WeylOp WeylOp::scaled(const Poly& c) const {
  WeylOp r;
  for (const auto& [w, p] : terms_) r.add(w, p * c);
  return r;
}

WeylOp operator*(const WeylOp& a, const WeylOp& b) {
  // (p q s u) . (P Q S U): reorder a1^s a1+^P and a2^u a2+^Q
  WeylOp out;
  for (const auto& [w1, c1] : a.terms())
    for (const auto& [w2, c2] : b.terms()) {
      int p = w1[0], q = w1[1], s = w1[2], u = w1[3];
      int P = w2[0], Q = w2[1], S = w2[2], U = w2[3];
      for (int m = 0; m <= std::min(s, P); ++m)
        for (int n = 0; n <= std::min(u, Q); ++n) {
          Rational c = binom_r(s, m) * binom_r(P, m) * factorial(m) * binom_r(u, n) *
                       binom_r(Q, n) * factorial(n);
          WeylOp::Word w = {p + P - m, q + Q - n, s - m + S, u - n + U};
          out.add(w, (c1 * c2).scaled(Scalar(c)));
        }
    }
  return out;
}

WeylOp weyl_commutator(const WeylOp& a, const WeylOp& b) { return a * b - b * a; }

std::string WeylOp::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  static const char* names[4] = {"a1+", "a2+", "a1", "a2"};
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (int i = 0; i < 4; ++i) {
      if (w[i] == 0) continue;
      os << "*" << names[i];
      if (w[i] > 1) os << "^" << w[i];
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- ladder rules

namespace {
Poly falling(int var, int count) {
  // v (v-1) ... (v-count+1)
  Poly r = Poly::one();
  for (int i = 0; i < count; ++i) r *= (pv(var) - Poly(i));
  return r;
}
void rule_push(LadderRule& r, int dj, int dk, const Poly& c) {
  if (c.is_zero()) return;
  for (auto& t : r)
    if (t.dj == dj && t.dk == dk) {
      t.coeff += c;
      if (t.coeff.is_zero()) {
        t = r.back();
        r.pop_back();
      }
      return;
    }
  r.push_back({dj, dk, c});
}
}  // namespace

LadderRule rule_from_weyl(const WeylOp& w) {
  LadderRule r;
  for (const auto& [word, c] : w.terms()) {
    int P = word[0], Q = word[1], S = word[2], U = word[3];
    // a1^S a2^U |j,k> = j(j-1)..(j-S+1) k..(k-U+1) |j-S, k-U>, then raise
    Poly coeff = c * falling(fv().j, S) * falling(fv().k, U);
    rule_push(r, P - S, Q - U, coeff);
  }
  return r;
}

LadderRule rule_scaled(const LadderRule& r, const Poly& c) {
  LadderRule out;
  for (const auto& t : r) rule_push(out, t.dj, t.dk, t.coeff * c);
  return out;
}

LadderRule rule_add(const LadderRule& a, const LadderRule& b) {
  LadderRule out = a;
  for (const auto& t : b) rule_push(out, t.dj, t.dk, t.coeff);
  return out;
}

LadderRule rule_compose(const LadderRule& a, const LadderRule& b) {
  LadderRule out;
  for (const auto& tb : b)
    for (const auto& ta : a) {
      // apply b first: shifts (j,k) by (tb.dj, tb.dk) before a's coefficient
      Poly shifted = ta.coeff.subst(fv().j, pv(fv().j) + Poly(tb.dj))
                         .subst(fv().k, pv(fv().k) + Poly(tb.dk));
      rule_push(out, ta.dj + tb.dj, ta.dk + tb.dk, shifted * tb.coeff);
    }
  return out;
}

LadderRule rule_commutator(const LadderRule& a, const LadderRule& b) {
  LadderRule ab = rule_compose(a, b), ba = rule_compose(b, a);
  for (const auto& t : ba) rule_push(ab, t.dj, t.dk, -t.coeff);
  return ab;
}

bool rule_equal(const LadderRule& a, const LadderRule& b) {
  LadderRule d = a;
  for (const auto& t : b) rule_push(d, t.dj, t.dk, -t.coeff);
  return d.empty();
}

std::string rule_str(const LadderRule& r) {
  if (r.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  auto sorted = r;
  std::sort(sorted.begin(), sorted.end(), [](const LadderTerm& a, const LadderTerm& b) {
    return std::make_pair(a.dj, a.dk) < std::make_pair(b.dj, b.dk);
  });
  for (const auto& t : sorted) {
    if (!first) os << " + ";
    first = false;
    os << "(" << t.coeff.str() << ")|j" << (t.dj >= 0 ? "+" : "") << t.dj << ",k"
       << (t.dk >= 0 ? "+" : "") << t.dk << ">";
  }
  return os.str();
}

FockVector vac() { return {{{0, 0}, Poly::one()}}; }

FockVector apply_rule(const LadderRule& r, const FockVector& v) {
  FockVector out;
  for (const auto& [jk, c] : v) {
    auto [j, k] = jk;
    for (const auto& t : r) {
      int nj = j + t.dj, nk = k + t.dk;
      Poly coeff = t.coeff.subst_scalar(fv().j, Scalar(j)).subst_scalar(fv().k, Scalar(k)) * c;
      if (coeff.is_zero()) continue;
      if (nj < 0 || nk < 0)
        throw Alt1Error("apply_rule: rule leaks below the vacuum (coefficient should vanish)");
      auto it = out.find({nj, nk});
      if (it == out.end())
        out[{nj, nk}] = coeff;
      else {
        it->second += coeff;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------- derivation

namespace {

// log-derivatives of the closed-form Leibniz function
// Y = D^{-2x} exp(N / D), D = 1 - B2 V2, N = 2 gamma (B1 V2 + B2 V1)
struct LeibnizForm {
  Poly D, N;
  Poly exponent;  // -2x
  RFn logderiv(int var) const {
    return RFn(exponent * D.derivative(var), D) + RFn(N, D).derivative(var);
  }
};

LeibnizForm leibniz_form() {
  LeibnizForm f;
  f.D = Poly::one() - pv(fv().B2) * pv(fv().V2);
  f.N = (pv(fv().B1) * pv(fv().V2) + pv(fv().B2) * pv(fv().V1)).scaled(Scalar(2)) *
        pv(fv().gamma);
  f.exponent = pv(fv().x).scaled(Scalar(-2));
  return f;
}

// Solve d_B log Y = sum_{p+q<=3, s} c_{pqs} V1^p V2^q Ls for polynomial
// coefficients c in (x, gamma); Ls in {1, d_V1 log Y, d_V2 log Y}.
// Returns the operator as a Weyl word via the coefficient transfer.
struct PdeOp {
  // c[s] maps (p,q) -> coefficient poly in (x, gamma)
  std::map<std::pair<int, int>, Poly> c[3];
};

bool solve_pde_op(const LeibnizForm& f, int bvar, PdeOp* out, std::string* err) {
  RFn target = f.logderiv(bvar);
  RFn L[3] = {RFn::one(), f.logderiv(fv().V1), f.logderiv(fv().V2)};

  // common denominator D^2 makes everything polynomial
  Poly D2 = f.D * f.D;
  Poly t_poly;
  {
    RFn t = target * RFn(D2);
    if (!t.is_polynomial()) {
      *err = "target log-derivative not polynomial after clearing D^2";
      return false;
    }
    t_poly = t.num();
  }
  struct Col {
    int s, p, q;
  };
  std::vector<Col> cols;
  std::vector<Poly> col_poly;
  for (int s = 0; s < 3; ++s)
    for (int p = 0; p + 0 <= 3; ++p)
      for (int q = 0; p + q <= 3; ++q) {
        RFn v = RFn(Poly::var_pow(fv().V1, p) * Poly::var_pow(fv().V2, q)) * L[s] * RFn(D2);
        if (!v.is_polynomial()) {
          *err = "ansatz column not polynomial after clearing D^2";
          return false;
        }
        cols.push_back({s, p, q});
        col_poly.push_back(v.num());
      }

  // match coefficients of every (B1, B2, V1, V2)-monomial; unknowns are
  // rational functions of (x, gamma)
  std::map<Monomial, std::map<int, Poly>> rows;  // key: BV-monomial -> col -> x-gamma poly
  std::map<Monomial, Poly> rhs;
  const int bv[4] = {fv().B1, fv().B2, fv().V1, fv().V2};
  auto split = [&](const Poly& p, int col) {
    for (const auto& [m, c] : p.terms()) {
      Monomial key, rest;
      for (const auto& fct : m.factors) {
        bool is_bv = false;
        for (int v : bv)
          if (fct.var == v) is_bv = true;
        (is_bv ? key : rest).factors.push_back(fct);
      }
      if (col < 0)
        rhs[key] += Poly::monomial(rest, c);
      else
        rows[key][col] += Poly::monomial(rest, c);
    }
  };
  split(t_poly, -1);
  for (size_t c = 0; c < col_poly.size(); ++c) split(col_poly[c], static_cast<int>(c));

  std::vector<Monomial> keys;
  for (const auto& [m, v] : rows) keys.push_back(m);
  for (const auto& [m, v] : rhs)
    if (!rows.count(m)) keys.push_back(m);
  MatQ a(static_cast<int>(keys.size()), static_cast<int>(cols.size()));
  std::vector<RFn> b;
  for (size_t r = 0; r < keys.size(); ++r) {
    auto it = rows.find(keys[r]);
    if (it != rows.end())
      for (const auto& [col, p] : it->second) a(static_cast<int>(r), col) = RFn(p);
    auto jt = rhs.find(keys[r]);
    b.push_back(jt == rhs.end() ? RFn::zero() : RFn(jt->second));
  }
  auto sol = solve_linear(a, b);
  if (sol.status != SolveStatus::unique) {
    *err = "PDE-operator ansatz is not uniquely solvable";
    return false;
  }
  for (size_t c = 0; c < cols.size(); ++c) {
    if (sol.solution[c].is_zero()) continue;
    if (!sol.solution[c].is_polynomial()) {
      *err = "PDE-operator coefficient is not polynomial in (x, gamma)";
      return false;
    }
    out->c[cols[c].s][{cols[c].p, cols[c].q}] = sol.solution[c].num();
  }
  return true;
}

WeylOp weyl_from_pde(const PdeOp& op) {
  // multiplication by V1^p V2^q -> a1^p a2^q; d_{V1} -> a1+, d_{V2} -> a2+;
  // the transfer is an anti-homomorphism, so creators land on the left
  WeylOp w;
  for (int s = 0; s < 3; ++s)
    for (const auto& [pq, c] : op.c[s]) {
      WeylOp::Word word = {s == 1 ? 1 : 0, s == 2 ? 1 : 0, pq.first, pq.second};
      w += WeylOp::term(c, word);
    }
  return w;
}

DerivedActions build_actions() {
  DerivedActions out;
  auto f = leibniz_form();
  std::string err;

  PdeOp d1, d2;
  if (!solve_pde_op(f, fv().B1, &d1, &err)) out.derivation.fail("d_B1: " + err);
  if (!solve_pde_op(f, fv().B2, &d2, &err)) out.derivation.fail("d_B2: " + err);
  if (!out.derivation.ok) return out;
  out.derivation.note("lowering operators derived uniquely from the closed-form pairing");

  // order (Y-1, Y0, Y1, X-1, X0, X1)
  out.word[2] = WeylOp::a1p();                     // Y1
  out.word[5] = WeylOp::a2p();                     // X1
  out.word[0] = weyl_from_pde(d1);                 // Y-1
  out.word[3] = weyl_from_pde(d2);                 // X-1
  // Y0 = (1/2)[X1, Y-1], X0 = (1/2)[X1, X-1] from the bracket relations
  out.word[1] = weyl_commutator(out.word[5], out.word[0]).scaled(Poly::constant(Scalar::ratio(1, 2)));
  out.word[4] = weyl_commutator(out.word[5], out.word[3]).scaled(Poly::constant(Scalar::ratio(1, 2)));

  for (int i = 0; i < 6; ++i) out.action.rule[i] = rule_from_weyl(out.word[i]);

  // 15 bracket pairs, symbolically in (j, k, gamma, x)
  auto alt1 = make_alt1();
  std::vector<std::pair<int, Poly>> terms;
  for (int i = 0; i < 6; ++i)
    for (int jdx = i + 1; jdx < 6; ++jdx) {
      alt1.bracket_terms(i, jdx, terms);
      LadderRule expect;
      for (const auto& [l, c] : terms) expect = rule_add(expect, rule_scaled(out.action.rule[l], c));
      LadderRule got = rule_commutator(out.action.rule[i], out.action.rule[jdx]);
      if (!rule_equal(got, expect))
        out.brackets.fail("[" + alt1.label(i) + ", " + alt1.label(jdx) + "] fails on |j,k>");
      // and in the Weyl algebra itself
      WeylOp wexpect;
      for (const auto& [l, c] : terms) wexpect += out.word[l].scaled(c);
      if (!(weyl_commutator(out.word[i], out.word[jdx]) == wexpect))
        out.brackets.fail("[" + alt1.label(i) + ", " + alt1.label(jdx) + "] fails in the Weyl algebra");
    }
  if (out.brackets.ok) out.brackets.note("all 15 pairs hold symbolically in (j,k,gamma,x)");

  // vacuum axioms
  auto apply0 = [&](int i) { return apply_rule(out.action.rule[i], vac()); };
  auto expect_vec = [&](int j, int k, const Poly& c) {
    FockVector v;
    if (!c.is_zero()) v[{j, k}] = c;
    return v;
  };
  if (apply0(2) != expect_vec(1, 0, Poly::one())) out.vacuum.fail("Y1 Omega != |10>");
  if (apply0(5) != expect_vec(0, 1, Poly::one())) out.vacuum.fail("X1 Omega != |01>");
  if (!apply0(0).empty()) out.vacuum.fail("Y-1 Omega != 0");
  if (!apply0(3).empty()) out.vacuum.fail("X-1 Omega != 0");
  if (apply0(1) != expect_vec(0, 0, -pv(fv().gamma))) out.vacuum.fail("Y0 Omega != -gamma Omega");
  if (apply0(4) != expect_vec(0, 0, -pv(fv().x))) out.vacuum.fail("X0 Omega != -x Omega");
  if (out.vacuum.ok) out.vacuum.note("vacuum axioms hold");

  // (imres) words for Y-1 and X-1
  Poly g = pv(fv().gamma), x = pv(fv().x);
  WeylOp imres_ym1 = WeylOp::term(g.scaled(Scalar(2)), {0, 0, 0, 1}) +
                     WeylOp::term(Poly::one(), {1, 0, 0, 2});
  WeylOp imres_xm1 = WeylOp::term(Poly::one(), {0, 1, 0, 2}) +
                     WeylOp::term(Poly(2), {1, 0, 1, 1}) +
                     WeylOp::term(g.scaled(Scalar(2)), {0, 0, 1, 0}) +
                     WeylOp::term(x.scaled(Scalar(2)), {0, 0, 0, 1});
  if (!(out.word[0] == imres_ym1)) out.imres_match.fail("derived Y-1 differs from (imres)");
  if (!(out.word[3] == imres_xm1)) out.imres_match.fail("derived X-1 differs from (imres)");
  if (out.imres_match.ok) out.imres_match.note("derived lowering words equal the (imres) display");

  // printed action table; the Y-1 row as printed is
  // k(k-1)|j+1,k-1> + 2 gamma |j,k-1>
  {
    Poly jj = pv(fv().j), kk = pv(fv().k);
    auto mk = [&](std::initializer_list<LadderTerm> ts) { return LadderRule(ts); };
    LadderRule printed[6];
    printed[2] = mk({{1, 0, Poly::one()}});
    printed[5] = mk({{0, 1, Poly::one()}});
    printed[1] = mk({{1, -1, -kk}, {0, 0, -g}});
    printed[4] = mk({{0, 0, -(jj + kk + x)}});
    printed[0] = mk({{1, -1, kk * (kk - Poly::one())}, {0, -1, g.scaled(Scalar(2))}});
    printed[3] = mk({{0, -1, kk * (kk + jj.scaled(Scalar(2)) + x.scaled(Scalar(2)) - Poly::one())},
                     {-1, 0, jj * g.scaled(Scalar(2))}});
    static const char* names[6] = {"Y-1", "Y0", "Y1", "X-1", "X0", "X1"};
    for (int i = 0; i < 6; ++i)
      if (!rule_equal(printed[i], out.action.rule[i]))
        out.acti_mismatches.push_back(std::string(names[i]) + ": printed " +
                                      rule_str(printed[i]) + " vs derived " +
                                      rule_str(out.action.rule[i]));
  }

  // printed (bosre) word table; X-1 first term as printed is a2+ a1^2
  {
    WeylOp printed[6];
    printed[2] = WeylOp::a1p();
    printed[5] = WeylOp::a2p();
    printed[1] = WeylOp::term(Poly(-1), {1, 0, 0, 1}) + WeylOp::term(-g, {0, 0, 0, 0});
    printed[4] = WeylOp::term(Poly(-1), {1, 0, 1, 0}) + WeylOp::term(Poly(-1), {0, 1, 0, 1}) +
                 WeylOp::term(-x, {0, 0, 0, 0});
    printed[0] = imres_ym1;
    printed[3] = WeylOp::term(Poly::one(), {0, 1, 2, 0}) + WeylOp::term(Poly(2), {1, 0, 1, 1}) +
                 WeylOp::term(g.scaled(Scalar(2)), {0, 0, 1, 0}) +
                 WeylOp::term(x.scaled(Scalar(2)), {0, 0, 0, 1});
    static const char* names[6] = {"Y-1", "Y0", "Y1", "X-1", "X0", "X1"};
    for (int i = 0; i < 6; ++i)
      if (!(printed[i] == out.word[i]))
        out.bosre_mismatches.push_back(std::string(names[i]) + ": printed " + printed[i].str() +
                                       " vs derived " + out.word[i].str());
  }

  // printed (detlf) second line: V2^2 d_V2 + V1 V2 d_V1 + 2x V2 + 2 gamma V1
  {
    PdeOp printed;
    printed.c[2][{0, 2}] = Poly::one();
    printed.c[1][{1, 1}] = Poly::one();
    printed.c[0][{0, 1}] = x.scaled(Scalar(2));
    printed.c[0][{1, 0}] = g.scaled(Scalar(2));
    WeylOp w_printed = weyl_from_pde(printed);
    if (w_printed == out.word[3]) {
      out.detlf.fail("printed (detlf) second line unexpectedly matches");
    } else {
      WeylOp diff = out.word[3] - w_printed;
      out.detlf.note("printed second PDE lacks the factor 2 on V1 V2 d_V1: derived - printed = " +
                     diff.str());
    }
  }
  return out;
}

}  // namespace

const DerivedActions& derive_ladder_actions() {
  static DerivedActions actions = build_actions();
  return actions;
}

// ---------------------------------------------------------------- gram

namespace {
Poly vac_component(const FockVector& v) {
  auto it = v.find({0, 0});
  return it == v.end() ? Poly::zero() : it->second;
}
}  // namespace

Poly gram(int j, int k, int jp, int kp) {
  const auto& act = derive_ladder_actions();
  // <Y1^j X1^k Omega, |j'k'>> = vac-component of X-1^k Y-1^j |j'k'>
  FockVector v;
  v[{jp, kp}] = Poly::one();
  for (int s = 0; s < j; ++s) v = apply_rule(act.action.rule[0], v);
  for (int s = 0; s < k; ++s) v = apply_rule(act.action.rule[3], v);
  return vac_component(v);
}

Report leibniz_function_check(int order) {
  Report rep;
  // closed form as a truncated series in (B1, B2, V1, V2)
  std::vector<int> vars = {fv().B1, fv().B2, fv().V1, fv().V2};
  std::vector<int> caps(4, order);
  Poly D = Poly::one() - pv(fv().B2) * pv(fv().V2);
  Poly N = (pv(fv().B1) * pv(fv().V2) + pv(fv().B2) * pv(fv().V1)).scaled(Scalar(2)) *
           pv(fv().gamma);
  auto closed = SExpr::prod(
      {SExpr::fpow(SExpr::poly(D), pv(fv().x).scaled(Scalar(-2))),
       SExpr::exp(SExpr::prod({SExpr::poly(N), SExpr::fpow(SExpr::poly(D), Poly(-1))}))});
  Series s = closed->expand(vars, caps);

  for (int j = 0; j + 0 <= order; ++j)
    for (int k = 0; j + k <= order; ++k)
      for (int jp = 0; jp <= order; ++jp)
        for (int kp = 0; jp + kp <= order; ++kp) {
          if (j + k > order || jp + kp > order) continue;
          Poly lhs = gram(j, k, jp, kp);
          // coefficient of B1^j B2^k V1^jp V2^kp times j! k! jp! kp!
          Poly rhs = s.coeff({j, k, jp, kp})
                         .scaled(Scalar(factorial(j) * factorial(k) * factorial(jp) *
                                        factorial(kp)));
          if (lhs != rhs) {
            std::ostringstream os;
            os << "gram(" << j << "," << k << ";" << jp << "," << kp << ") = " << lhs.str()
               << " but series gives " << rhs.str();
            rep.fail(os.str());
          }
        }
  if (rep.ok)
    rep.note("ladder Gram matrix equals the closed-form coefficients through total order " +
             std::to_string(order));

  // spot values of the examples
  if (gram(0, 1, 0, 1) != pv(fv().x).scaled(Scalar(2))) rep.fail("<01|01> != 2x");
  if (!gram(1, 0, 1, 0).is_zero()) rep.fail("<10|10> != 0 (Y-direction must be null)");
  if (gram(1, 0, 0, 1) != pv(fv().gamma).scaled(Scalar(2))) rep.fail("<10|01> != 2 gamma");
  return rep;
}

Report adjointness_check(int level) {
  Report rep;
  const auto& act = derive_ladder_actions();
  // <A u, v> = <u, A+ v> for (A, A+) in {(Y1, Y-1), (X1, X-1)} and basis
  // vectors u, v with j + k <= level; also symmetry of the pairing
  auto pair_vec = [&](const FockVector& u, const FockVector& v) {
    Poly total;
    for (const auto& [jk, cu] : u)
      for (const auto& [pq, cv] : v)
        total += cu * cv * gram(jk.first, jk.second, pq.first, pq.second);
    return total;
  };
  for (int j = 0; j <= level; ++j)
    for (int k = 0; j + k <= level; ++k)
      for (int jp = 0; jp <= level; ++jp)
        for (int kp = 0; jp + kp <= level; ++kp) {
          FockVector u, v;
          u[{j, k}] = Poly::one();
          v[{jp, kp}] = Poly::one();
          if (gram(j, k, jp, kp) != gram(jp, kp, j, k)) rep.fail("pairing not symmetric");
          Poly lhs = pair_vec(apply_rule(act.action.rule[2], u), v);
          Poly rhs = pair_vec(u, apply_rule(act.action.rule[0], v));
          if (lhs != rhs) rep.fail("<Y1 u, v> != <u, Y-1 v>");
          lhs = pair_vec(apply_rule(act.action.rule[5], u), v);
          rhs = pair_vec(u, apply_rule(act.action.rule[3], v));
          if (lhs != rhs) rep.fail("<X1 u, v> != <u, X-1 v>");
        }
  if (rep.ok)
    rep.note("pairing is symmetric and beta = 1 adjointness holds to level " +
             std::to_string(level));
  return rep;
}

Report leibniz_from_grouplaw_check() {
  Report rep;
  // Y = <Omega, g(A) Omega> = exp(-gamma A3) * E^{-2x} with the derived
  // coordinates A3 = -2(B1 V2 + B2 V1)/D and E = e^{A4/2} = D.
  Poly D = Poly::one() - pv(fv().B2) * pv(fv().V2);
  RFn a3_expected(((pv(fv().B1) * pv(fv().V2) + pv(fv().B2) * pv(fv().V1)).scaled(Scalar(-2))),
                  D);
  // closed form exp-argument is -gamma * A3 and the power base is E = D
  RFn exp_arg_closed(
      (pv(fv().B1) * pv(fv().V2) + pv(fv().B2) * pv(fv().V1)).scaled(Scalar(2)) *
          pv(fv().gamma),
      D);
  if (!(RFn(-pv(fv().gamma)) * a3_expected == exp_arg_closed))
    rep.fail("-gamma A3 does not reproduce the closed-form exponential argument");
  rep.note("pairing closed form = exp(-gamma A3) E^{-2x} with E = 1 - B2 V2 (derived Prop 7 "
           "coordinates; the printed A4 = ln(1-B2V2) would give the power -x instead of -2x)");
  return rep;
}

// ---------------------------------------------------------------- tilted plane

Report tilted_plane_check() {
  Report rep;
  auto alt1 = make_alt1();
  Poly beta = pv(fv().beta);
  // adjoint series e^{beta ad X-1} terminates: ad X-1 is nilpotent on the basis
  auto ad_exp = [&](const LieAlgebraDef::Element& v) {
    auto xm1 = alt1.basis_element(alt1.index_of("X-1"));
    auto acc = v;
    auto cur = v;
    Rational fact = 1;
    for (int n = 1; n <= 6; ++n) {
      cur = alt1.bracket(xm1, cur);
      bool zero = true;
      for (const auto& c : cur)
        if (!c.is_zero()) zero = false;
      if (zero) break;
      fact *= n;
      for (int i = 0; i < alt1.dim(); ++i)
        acc[i] += cur[i] * beta.pow(n).scaled(Scalar(Rational(1) / fact));
    }
    return acc;
  };
  auto y1 = alt1.basis_element(alt1.index_of("Y1"));
  auto x1 = alt1.basis_element(alt1.index_of("X1"));
  auto ybar = ad_exp(y1);
  auto xbar = ad_exp(x1);

  auto expect_y = alt1.zero_element();
  expect_y[alt1.index_of("Y1")] = Poly::one();
  expect_y[alt1.index_of("Y0")] = beta.scaled(Scalar(-2));
  expect_y[alt1.index_of("Y-1")] = beta * beta;
  if (ybar != expect_y) rep.fail("Ybar1 != Y1 - 2 beta Y0 + beta^2 Y-1");

  auto expect_x = alt1.zero_element();
  expect_x[alt1.index_of("X1")] = Poly::one();
  expect_x[alt1.index_of("X0")] = beta.scaled(Scalar(-2));
  expect_x[alt1.index_of("X-1")] = beta * beta;
  if (xbar != expect_x) rep.fail("Xbar1 != X1 - 2 beta X0 + beta^2 X-1");

  auto br = alt1.bracket(ybar, xbar);
  for (const auto& c : br)
    if (!c.is_zero()) rep.fail("[Ybar1, Xbar1] != 0: tilted plane is not abelian");

  // ad(X-1)^2 Y1 = 2 Y-1 (series terminates at order 2)
  auto xm1 = alt1.basis_element(alt1.index_of("X-1"));
  auto twice = alt1.bracket(xm1, alt1.bracket(xm1, y1));
  auto expect2 = alt1.zero_element();
  expect2[alt1.index_of("Y-1")] = Poly(2);
  if (twice != expect2) rep.fail("ad(X-1)^2 Y1 != 2 Y-1");
  auto thrice = alt1.bracket(xm1, twice);
  for (const auto& c : thrice)
    if (!c.is_zero()) rep.fail("adjoint series does not terminate at order 2");

  // beta = 0 is the identity map
  auto at0 = ybar;
  for (auto& c : at0) c = c.subst_scalar(fv().beta, Scalar(0));
  if (at0 != y1) rep.fail("beta = 0 does not reduce to the identity");
  if (rep.ok) rep.note("tilted abelian plane verified with beta formal");
  return rep;
}

// ---------------------------------------------------------------- prop 8

namespace {

// tilted ladder rules with formal beta
LadderRule tilted_rule(int top, int mid, int bottom) {
  const auto& act = derive_ladder_actions();
  Poly beta = pv(fv().beta);
  return rule_add(
      act.action.rule[top],
      rule_add(rule_scaled(act.action.rule[mid], beta.scaled(Scalar(-2))),
               rule_scaled(act.action.rule[bottom], beta * beta)));
}

Prop8Result prop8_run(int order, bool corrected_third_factor) {
  Prop8Result res;
  Report& rep = res.corrected;
  // RHS of the generating identity, expanded in (v1, v2)
  std::vector<int> vars = {fv().v1, fv().v2};
  std::vector<int> caps = {order, order};
  Poly v1 = pv(fv().v1), v2 = pv(fv().v2), beta = pv(fv().beta);
  Poly u = beta * v2;
  auto one_plus_u = SExpr::poly(Poly::one() + u);
  auto inv2 = SExpr::fpow(one_plus_u, Poly(-2));
  auto inv1 = SExpr::fpow(one_plus_u, Poly(-1));
  auto third_den = corrected_third_factor ? SExpr::fpow(one_plus_u, Poly(-1))
                                          : SExpr::fpow(SExpr::poly(Poly::one() - u), Poly(-1));
  auto rhs_expr = SExpr::prod(
      {SExpr::exp(SExpr::prod({SExpr::poly(pv(fv().y1) * v1), inv2})),
       SExpr::exp(SExpr::prod({SExpr::poly(pv(fv().y2) * v2), inv1})),
       SExpr::exp(SExpr::prod(
           {SExpr::poly((pv(fv().gamma) * beta * v1).scaled(Scalar(-2))), third_den})),
       SExpr::fpow(one_plus_u, pv(fv().x).scaled(Scalar(-2)))});
  Series rhs = rhs_expr->expand(vars, caps);

  LadderRule ybar = tilted_rule(2, 1, 0);
  LadderRule xbar = tilted_rule(5, 4, 3);

  for (int p = 0; p <= order; ++p)
    for (int q = 0; p + q <= order; ++q) {
      // LHS coefficient of v1^p v2^q: |p,q> / (p! q!)
      FockVector lhs;
      lhs[{p, q}] = Poly::constant(Scalar(Rational(1) / (factorial(p) * factorial(q))));
      // RHS: realize y1^a y2^b as Ybar1^a Xbar1^b Omega
      Poly coeff = rhs.coeff({p, q});
      FockVector acc;
      for (const auto& [m, c] : coeff.terms()) {
        int a = m.exponent(fv().y1), b = m.exponent(fv().y2);
        Monomial rest;
        for (const auto& f : m.factors)
          if (f.var != fv().y1 && f.var != fv().y2) rest.factors.push_back(f);
        FockVector v = vac();
        for (int s = 0; s < b; ++s) v = apply_rule(xbar, v);
        for (int s = 0; s < a; ++s) v = apply_rule(ybar, v);
        Poly factor = Poly::monomial(rest, c);
        for (const auto& [jk, cv] : v) {
          Poly add = cv * factor;
          auto it = acc.find(jk);
          if (it == acc.end())
            acc[jk] = add;
          else {
            it->second += add;
            if (it->second.is_zero()) acc.erase(it);
          }
        }
      }
      if (acc != lhs) {
        std::ostringstream os;
        os << "mismatch at v1^" << p << " v2^" << q;
        rep.fail(os.str());
      }
    }
  if (rep.ok) rep.note("generating identity holds through total order " + std::to_string(order));
  return res;
}

}  // namespace

Prop8Result prop8_check(int order) {
  Prop8Result good = prop8_run(order, true);
  Prop8Result bad = prop8_run(order, false);
  good.printed_fails = !bad.corrected.ok;
  return good;
}

// ---------------------------------------------------------------- coherent

FockVector coherent_state(const Poly& v1, const Poly& v2, int order) {
  FockVector out;
  for (int j = 0; j <= order; ++j)
    for (int k = 0; j + k <= order; ++k) {
      Poly c = v1.pow(j) * v2.pow(k);
      c = c.scaled(Scalar(Rational(1) / (factorial(j) * factorial(k))));
      if (!c.is_zero()) out[{j, k}] = c;
    }
  return out;
}

Report coherent_state_check(int order) {
  Report rep;
  const auto& act = derive_ladder_actions();
  // V = 0 gives the vacuum
  if (coherent_state(Poly::zero(), Poly::zero(), order) != vac())
    rep.fail("coherent state at V = 0 is not the vacuum");

  // <Psi_{(0,B2)}, Psi_{(0,V2)}> = (1 - B2 V2)^{-2x} through the order
  Poly b2 = pv(fv().B2), v2 = pv(fv().V2);
  auto psi_b = coherent_state(Poly::zero(), b2, order);
  auto psi_v = coherent_state(Poly::zero(), v2, order);
  Poly pairing;
  for (const auto& [jk, cu] : psi_b)
    for (const auto& [pq, cv] : psi_v)
      pairing += cu * cv * gram(jk.first, jk.second, pq.first, pq.second);
  std::vector<int> vars = {fv().B2, fv().V2};
  Series closed = SExpr::fpow(SExpr::poly(Poly::one() - b2 * v2), pv(fv().x).scaled(Scalar(-2)))
                      ->expand(vars, {order, order});
  for (int a = 0; a + a <= 2 * order; ++a) {
    // diagonal coefficients B2^a V2^a up to the truncation
    if (a > order) break;
    Poly got;
    for (const auto& [m, c] : pairing.terms())
      if (m.exponent(fv().B2) == a && m.exponent(fv().V2) == a) {
        Monomial rest;
        for (const auto& f : m.factors)
          if (f.var != fv().B2 && f.var != fv().V2) rest.factors.push_back(f);
        got += Poly::monomial(rest, c);
      }
    if (got != closed.coeff({a, a})) rep.fail("coherent pairing coefficient mismatch at order " +
                                              std::to_string(a));
  }

  // X0 on Psi_{(0,V2)}: the V2-coefficient is -(1+x)|01>
  auto x0psi = apply_rule(act.action.rule[4], psi_v);
  Poly c01 = Poly::zero();
  auto it = x0psi.find({0, 1});
  if (it != x0psi.end()) c01 = it->second;
  Poly expected = -(Poly::one() + pv(fv().x)) * v2;
  if (c01 != expected) rep.fail("X0 coherent-state coefficient mismatch");
  if (rep.ok) rep.note("coherent-state inner products match the Leibniz function");
  return rep;
}

}  // namespace alt1
