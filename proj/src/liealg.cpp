#include "alt1/liealg.hpp"

#include <sstream>

namespace alt1 {

std::string Report::summary() const {
  std::ostringstream os;
  os << (ok ? "ok" : "FAIL");
  for (const auto& n : notes) os << "; " << n;
  return os.str();
}

// ---------------------------------------------------------------- def

LieAlgebraDef::LieAlgebraDef(std::vector<std::string> basis) : basis_(std::move(basis)) {
  std::map<std::string, int> seen;
  for (size_t i = 0; i < basis_.size(); ++i)
    if (!seen.emplace(basis_[i], i).second)
      throw Alt1Error("LieAlgebraDef: duplicate label " + basis_[i]);
}

int LieAlgebraDef::index_of(const std::string& label) const {
  for (size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i] == label) return static_cast<int>(i);
  throw Alt1Error("LieAlgebraDef: unknown label " + label);
}

void LieAlgebraDef::set_bracket(int i, int j, std::vector<std::pair<int, Poly>> terms) {
  if (i == j) throw Alt1Error("set_bracket: [x,x] is structurally zero");
  std::erase_if(terms, [](const auto& t) { return t.second.is_zero(); });
  if (i > j) {
    for (auto& [k, c] : terms) c = -c;
    std::swap(i, j);
  }
  BracketEntry e;
  e.terms = std::move(terms);
  table_[{i, j}] = std::move(e);
}

void LieAlgebraDef::set_truncated(int i, int j) {
  if (i > j) std::swap(i, j);
  BracketEntry e;
  e.truncated = true;
  table_[{i, j}] = std::move(e);
}

bool LieAlgebraDef::is_truncated(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = table_.find({i, j});
  return it != table_.end() && it->second.truncated;
}

bool LieAlgebraDef::bracket_terms(int i, int j, std::vector<std::pair<int, Poly>>& out) const {
  out.clear();
  if (i == j) return true;
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = table_.find({i, j});
  if (it == table_.end()) return true;  // zero bracket
  if (it->second.truncated) return false;
  out = it->second.terms;
  if (flip)
    for (auto& [k, c] : out) c = -c;
  return true;
}

LieAlgebraDef::Element LieAlgebraDef::basis_element(int i) const {
  Element e = zero_element();
  e.at(i) = Poly::one();
  return e;
}

LieAlgebraDef::Element LieAlgebraDef::bracket(const Element& x, const Element& y,
                                              bool* truncated) const {
  if (truncated) *truncated = false;
  Element r = zero_element();
  std::vector<std::pair<int, Poly>> terms;
  for (int i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim(); ++j) {
      if (y[j].is_zero()) continue;
      if (!bracket_terms(i, j, terms)) {
        if (truncated) *truncated = true;
        continue;
      }
      Poly f = x[i] * y[j];
      for (const auto& [k, c] : terms) r[k] += f * c;
    }
  }
  return r;
}

MatPoly LieAlgebraDef::adjoint_matrix(int i) const {
  MatPoly m(dim(), dim());
  std::vector<std::pair<int, Poly>> terms;
  for (int j = 0; j < dim(); ++j) {
    if (!bracket_terms(i, j, terms))
      throw Alt1Error("adjoint_matrix: truncated bracket");
    for (const auto& [k, c] : terms) m(k, j) += c;
  }
  return m;
}

LieAlgebraDef LieAlgebraDef::change_of_basis(const MatQ& q, const MatQ& qinv) const {
  const int n = dim();
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("f" + std::to_string(i));
  LieAlgebraDef out(names);
  std::vector<std::pair<int, Poly>> terms;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      // [f_a, f_b] = sum_{i,j} Q_{ia} Q_{jb} [e_i, e_j]
      std::vector<RFn> res(n, RFn::zero());
      for (int i = 0; i < n; ++i) {
        if (q(i, a).is_zero()) continue;
        for (int j = 0; j < n; ++j) {
          if (q(j, b).is_zero()) continue;
          if (!bracket_terms(i, j, terms)) throw Alt1Error("change_of_basis: truncated");
          for (const auto& [k, c] : terms) res[k] += q(i, a) * q(j, b) * RFn(c);
        }
      }
      // express in f-basis: coefficients Qinv * res
      std::vector<std::pair<int, Poly>> out_terms;
      for (int k = 0; k < n; ++k) {
        RFn v = RFn::zero();
        for (int l = 0; l < n; ++l) v += qinv(k, l) * res[l];
        if (!v.is_zero()) {
          if (!v.is_polynomial()) throw Alt1Error("change_of_basis: non-polynomial constant");
          out_terms.push_back({k, v.num()});
        }
      }
      out.set_bracket(a, b, std::move(out_terms));
    }
  }
  return out;
}

std::string LieAlgebraDef::element_str(const LieAlgebraDef& alg, const Element& e) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < alg.dim(); ++i) {
    if (e[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << e[i].str() << ")*" << alg.label(i);
  }
  return first ? "0" : os.str();
}

// ---------------------------------------------------------------- checks

JacobiReport jacobi_check(const LieAlgebraDef& alg) {
  JacobiReport rep;
  const int n = alg.dim();
  std::vector<std::pair<int, Poly>> t_ij, t_jk, t_ki, inner;

  auto truncated_pair = [&](int a, int b) { return alg.is_truncated(a, b); };

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        if (truncated_pair(i, j) || truncated_pair(j, k) || truncated_pair(k, i)) {
          ++rep.skipped;
          continue;
        }
        alg.bracket_terms(i, j, t_ij);
        alg.bracket_terms(j, k, t_jk);
        alg.bracket_terms(k, i, t_ki);
        bool nested_trunc = false;
        auto accumulate = [&](const std::vector<std::pair<int, Poly>>& terms, int other,
                              LieAlgebraDef::Element& acc) {
          for (const auto& [l, c] : terms) {
            if (!alg.bracket_terms(l, other, inner)) {
              nested_trunc = true;
              return;
            }
            for (const auto& [m, d] : inner) acc[m] += c * d;
          }
        };
        LieAlgebraDef::Element acc = alg.zero_element();
        accumulate(t_ij, k, acc);
        if (!nested_trunc) accumulate(t_jk, i, acc);
        if (!nested_trunc) accumulate(t_ki, j, acc);
        if (nested_trunc) {
          ++rep.skipped;
          continue;
        }
        ++rep.checked;
        bool zero = true;
        for (const auto& c : acc)
          if (!c.is_zero()) {
            zero = false;
            break;
          }
        if (!zero)
          rep.violations.push_back(
              {i, j, k, LieAlgebraDef::element_str(alg, acc)});
      }
  return rep;
}

bool antisymmetry_check(const LieAlgebraDef& alg) {
  std::vector<std::pair<int, Poly>> t1, t2;
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = 0; j < alg.dim(); ++j) {
      if (alg.is_truncated(i, j)) continue;
      alg.bracket_terms(i, j, t1);
      alg.bracket_terms(j, i, t2);
      LieAlgebraDef::Element a = alg.zero_element();
      for (const auto& [k, c] : t1) a[k] += c;
      for (const auto& [k, c] : t2) a[k] += c;
      for (const auto& c : a)
        if (!c.is_zero()) return false;
    }
  return true;
}

Report adjoint_rep_check(const LieAlgebraDef& alg) {
  Report rep;
  const int n = alg.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (alg.is_truncated(i, j)) continue;
      std::vector<std::pair<int, Poly>> terms;
      alg.bracket_terms(i, j, terms);
      MatPoly lhs(n, n);
      for (const auto& [k, c] : terms) {
        MatPoly adk = alg.adjoint_matrix(k);
        lhs = lhs + adk.map([&](const Poly& p) { return p * c; });
      }
      MatPoly a = alg.adjoint_matrix(i), b = alg.adjoint_matrix(j);
      MatPoly rhs = a * b - b * a;
      if (!(lhs == rhs))
        rep.fail("ad[x,y] != [ad x, ad y] for (" + alg.label(i) + "," + alg.label(j) + ")");
    }
  return rep;
}

// ---------------------------------------------------------------- constructors

namespace {
std::string mode_label(const std::string& head, int n) {
  return head + std::to_string(n);
}
Poly num(long k) { return Poly(k); }
}  // namespace

LieAlgebraDef make_alt1() {
  LieAlgebraDef alg({"Y-1", "Y0", "Y1", "X-1", "X0", "X1"});
  auto Y = [&](int n) { return n == -1 ? 0 : (n == 0 ? 1 : 2); };
  auto X = [&](int n) { return n == -1 ? 3 : (n == 0 ? 4 : 5); };
  for (int n = -1; n <= 1; ++n)
    for (int m = -1; m <= 1; ++m) {
      if (n != m && std::abs(n + m) <= 1) {
        if (X(n) < X(m)) alg.set_bracket(X(n), X(m), {{X(n + m), num(n - m)}});
        alg.set_bracket(X(n), Y(m), {{Y(n + m), num(n - m)}});
      }
    }
  return alg;
}

LieAlgebraDef make_sl2() {
  LieAlgebraDef alg({"L1", "L0", "L-1"});
  alg.set_bracket(1, 0, {{0, num(-1)}});   // [L0, L1] = -L1
  alg.set_bracket(1, 2, {{2, num(1)}});    // [L0, L-1] = L-1
  alg.set_bracket(0, 2, {{1, num(2)}});    // [L1, L-1] = 2 L0
  return alg;
}

LieAlgebraDef make_abelian(int n) {
  std::vector<std::string> basis;
  for (int i = 0; i < n; ++i) basis.push_back("e" + std::to_string(i));
  return LieAlgebraDef(basis);
}

LieAlgebraDef make_W(int N) {
  if (N < 1) throw Alt1Error("make_W: N >= 1 required");
  std::vector<std::string> basis;
  for (int n = -N; n <= N; ++n) basis.push_back(mode_label("L", n));
  for (int n = -N; n <= N; ++n) basis.push_back(mode_label("Leps", n));
  LieAlgebraDef alg(basis);
  auto L = [&](int n) { return n + N; };
  auto Le = [&](int n) { return 2 * N + 1 + n + N; };
  for (int n = -N; n <= N; ++n)
    for (int m = -N; m <= N; ++m) {
      if (n < m) {
        if (n == m) continue;
        if (std::abs(n + m) <= N)
          alg.set_bracket(L(n), L(m), {{L(n + m), num(n - m)}});
        else
          alg.set_truncated(L(n), L(m));
      }
      if (n != m) {
        if (std::abs(n + m) <= N)
          alg.set_bracket(L(n), Le(m), {{Le(n + m), num(n - m)}});
        else
          alg.set_truncated(L(n), Le(m));
      }
      // [Leps, Leps] = 0: nothing stored
    }
  return alg;
}

LieAlgebraDef make_sv(int N) {
  if (N < 1) throw Alt1Error("make_sv: N >= 1 required");
  std::vector<std::string> basis;
  std::vector<int> y_modes;  // doubled (odd) indices
  for (int n = -N; n <= N; ++n) basis.push_back(mode_label("L", n));
  for (int m2 = -(2 * N - 1); m2 <= 2 * N - 1; m2 += 2)
    basis.push_back("Y" + std::to_string(m2) + "/2"), y_modes.push_back(m2);
  for (int n = -N; n <= N; ++n) basis.push_back(mode_label("M", n));
  LieAlgebraDef alg(basis);
  const int nL = 2 * N + 1, nY = static_cast<int>(y_modes.size());
  auto L = [&](int n) { return n + N; };
  auto Y = [&](int m2) { return nL + (m2 + 2 * N - 1) / 2; };
  auto M = [&](int n) { return nL + nY + n + N; };
  auto in_y = [&](int m2) { return std::abs(m2) <= 2 * N - 1; };

  for (int n = -N; n <= N; ++n) {
    for (int p = n + 1; p <= N; ++p) {
      if (std::abs(n + p) <= N)
        alg.set_bracket(L(n), L(p), {{L(n + p), num(n - p)}});
      else
        alg.set_truncated(L(n), L(p));
    }
    for (int m2 : y_modes) {
      // [L_n, Y_m] = (n/2 - m) Y_{n+m}
      Scalar c(Rational(n - m2, 2));
      if (c.is_zero()) continue;
      if (in_y(2 * n + m2))
        alg.set_bracket(L(n), Y(m2), {{Y(2 * n + m2), Poly::constant(c)}});
      else
        alg.set_truncated(L(n), Y(m2));
    }
    for (int p = -N; p <= N; ++p) {
      // [L_n, M_p] = -p M_{n+p}
      if (p == 0) continue;
      if (std::abs(n + p) <= N)
        alg.set_bracket(L(n), M(p), {{M(n + p), num(-p)}});
      else
        alg.set_truncated(L(n), M(p));
    }
  }
  for (size_t a = 0; a < y_modes.size(); ++a)
    for (size_t b = a + 1; b < y_modes.size(); ++b) {
      int m2 = y_modes[a], p2 = y_modes[b];
      // [Y_m, Y_m'] = (m - m') M_{m+m'}
      Scalar c(Rational(m2 - p2, 2));
      int sum = (m2 + p2) / 2;
      if (std::abs(sum) <= N)
        alg.set_bracket(Y(m2), Y(p2), {{M(sum), Poly::constant(c)}});
      else
        alg.set_truncated(Y(m2), Y(p2));
    }
  return alg;
}

// ---------------------------------------------------------------- grassmann

GrassmannResult grassmann_tensor(const LieAlgebraDef& base) {
  const int n = base.dim();
  std::vector<std::string> basis;
  for (int i = 0; i < n; ++i) basis.push_back(base.label(i));
  for (int i = 0; i < n; ++i) basis.push_back(base.label(i) + "eps");
  LieAlgebraDef alg(basis);
  std::vector<std::pair<int, Poly>> terms;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!base.bracket_terms(i, j, terms))
        throw Alt1Error("grassmann_tensor: base has truncated brackets");
      if (terms.empty()) continue;
      if (i < j) alg.set_bracket(i, j, terms);
      if (i != j) {
        std::vector<std::pair<int, Poly>> eps_terms;
        for (const auto& [k, c] : terms) eps_terms.push_back({k + n, c});
        alg.set_bracket(i, j + n, eps_terms);
      }
    }
  GrassmannResult res{std::move(alg), {}};
  for (int i = 0; i < n; ++i)
    res.dictionary.push_back(base.label(i) + " -> " + base.label(i) + ", " + base.label(i) +
                             "eps");
  return res;
}

Report prop1_isomorphism_check() {
  Report rep;
  auto g = grassmann_tensor(make_sl2());
  auto alt1 = make_alt1();
  // dictionary, in the section-3 naming: X_n -> L_n, Y_n -> L_n^eps
  // (conformal names: V+ -> L1, D -> L0, Y_{-1/2} -> L-1, 2*X1 -> L1eps,
  //  Y_{1/2} -> L0eps, M0 -> L-1eps)
  std::map<std::string, std::string> phi = {
      {"X1", "L1"},   {"X0", "L0"},   {"X-1", "L-1"},
      {"Y1", "L1eps"}, {"Y0", "L0eps"}, {"Y-1", "L-1eps"}};
  const auto& ga = g.algebra;
  std::vector<std::pair<int, Poly>> lhs_terms, rhs_terms;
  std::map<int, int> to_g;   // alt1 index -> grassmann index
  std::map<int, int> from_g;
  for (const auto& [a, l] : phi) {
    to_g[alt1.index_of(a)] = ga.index_of(l);
    from_g[ga.index_of(l)] = alt1.index_of(a);
  }
  for (int i = 0; i < alt1.dim(); ++i)
    for (int j = i + 1; j < alt1.dim(); ++j) {
      alt1.bracket_terms(i, j, lhs_terms);
      ga.bracket_terms(to_g[i], to_g[j], rhs_terms);
      LieAlgebraDef::Element diff = alt1.zero_element();
      for (const auto& [k, c] : lhs_terms) diff[k] += c;
      for (const auto& [k, c] : rhs_terms) diff[from_g.at(k)] -= c;
      for (const auto& c : diff)
        if (!c.is_zero()) {
          rep.fail("Phi is not a bracket homomorphism on (" + alt1.label(i) + "," +
                   alt1.label(j) + ")");
          break;
        }
    }
  if (rep.ok) rep.note("grassmann_tensor(sl2) constant table equals alt1 under Phi");
  return rep;
}

// ---------------------------------------------------------------- contraction

Report contraction_check(int N) {
  Report rep;
  if (N < 2) throw Alt1Error("contraction_check: N >= 2 required");
  Poly a = Poly::var("a");
  // double loop algebra on the window: basis l_n, lbar_n
  std::vector<std::string> basis;
  for (int n = -N; n <= N; ++n) basis.push_back(mode_label("l", n));
  for (int n = -N; n <= N; ++n) basis.push_back(mode_label("lbar", n));
  LieAlgebraDef dl(basis);
  auto l = [&](int n) { return n + N; };
  auto lb = [&](int n) { return 2 * N + 1 + n + N; };
  for (int n = -N; n <= N; ++n)
    for (int m = n + 1; m <= N; ++m) {
      if (std::abs(n + m) <= N) {
        dl.set_bracket(l(n), l(m), {{l(n + m), num(n - m)}});
        dl.set_bracket(lb(n), lb(m), {{lb(n + m), num(n - m)}});
      } else {
        dl.set_truncated(l(n), l(m));
        dl.set_truncated(lb(n), lb(m));
      }
    }

  auto X = [&](int n) {
    auto e = dl.zero_element();
    e[l(n)] = Poly::one();
    e[lb(n)] = Poly::one();
    return e;
  };
  auto Y = [&](int n) {
    auto e = dl.zero_element();
    e[lb(n)] = a;
    return e;
  };

  bool trunc = false;
  for (int n = -N; n <= N; ++n)
    for (int m = -N; m <= N; ++m) {
      if (n == m || std::abs(n + m) > N) continue;
      auto xx = dl.bracket(X(n), X(m), &trunc);
      auto expect = X(n + m);
      for (auto& c : expect) c = c.scaled(Scalar(n - m));
      if (xx != expect) rep.fail("[X,X] mismatch at (" + std::to_string(n) + "," + std::to_string(m) + ")");

      auto xy = dl.bracket(X(n), Y(m), &trunc);
      expect = Y(n + m);
      for (auto& c : expect) c = c.scaled(Scalar(n - m));
      if (xy != expect) rep.fail("[X,Y] mismatch at (" + std::to_string(n) + "," + std::to_string(m) + ")");

      auto yy = dl.bracket(Y(n), Y(m), &trunc);
      expect = Y(n + m);
      for (auto& c : expect) c = a * c.scaled(Scalar(n - m));
      if (yy != expect) rep.fail("[Y,Y] != a(n-m)Y at (" + std::to_string(n) + "," + std::to_string(m) + ")");
    }

  // a -> 0 specialization of the (X, Y)-basis constants equals make_W
  auto W = make_W(N);
  int aid = Vars::id("a");
  for (int n = -N; n <= N; ++n)
    for (int m = -N; m <= N; ++m) {
      if (n == m) continue;
      bool in_window = std::abs(n + m) <= N;
      if (!in_window) continue;
      // [X_n, X_m] = (n-m) X_{n+m}: matches [L_n, L_m] constants exactly
      // [X_n, Y_m] = (n-m) Y_{n+m}: matches [L_n, Leps_m]
      // [Y_n, Y_m] = a (n-m) Y_{n+m} -> 0 = [Leps, Leps]
      Poly c_yy = Poly(n - m) * a;
      if (!c_yy.subst_scalar(aid, Scalar(0)).is_zero())
        rep.fail("[Y,Y] constant does not vanish at a=0");
      std::vector<std::pair<int, Poly>> wt;
      W.bracket_terms(W.index_of(mode_label("L", n)), W.index_of(mode_label("Leps", m)), wt);
      if (wt.size() != 1 || wt[0].second != Poly(n - m))
        rep.fail("W table mismatch for [L,Leps] at (" + std::to_string(n) + "," +
                 std::to_string(m) + ")");
    }
  if (rep.ok)
    rep.note("a-parametric brackets verified; a->0 constants equal make_W(" +
             std::to_string(N) + ")");
  return rep;
}

// ---------------------------------------------------------------- density

Poly density_action(const Poly& f, const Poly& u, const Poly& alpha) {
  int z = Vars::intern("z", true);
  return f * u.derivative(z) + alpha * f.derivative(z) * u;
}

Report density_action_check(int N) {
  Report rep;
  if (N < 2) throw Alt1Error("density_action_check: N >= 2 required");
  int zid = Vars::intern("z", true);
  Poly z = Poly::var_pow(zid, 1);
  Poly alpha = Poly(-1);
  auto fvec = [&](int n) { return -Poly::var_pow(zid, n + 1); };  // l_n = -z^{n+1} d/dz
  auto umod = [&](int n) { return -Poly::var_pow(zid, n + 1); };  // Leps_n = -z^{n+1} (dz)^-1

  // [l_n, l_m] = (n-m) l_{n+m} as vector fields: f g' - g f'
  for (int n = -N; n <= N; ++n)
    for (int m = -N; m <= N; ++m) {
      if (n == m || std::abs(n + m) > N) continue;
      Poly f = fvec(n), g = fvec(m);
      Poly lie = f * g.derivative(zid) - g * f.derivative(zid);
      if (lie != fvec(n + m).scaled(Scalar(n - m)))
        rep.fail("vector-field bracket mismatch");
      Poly act = density_action(fvec(n), umod(m), alpha);
      if (act != umod(n + m).scaled(Scalar(n - m)))
        rep.fail("density action does not reproduce (n-m)Leps_{n+m} at (" +
                 std::to_string(n) + "," + std::to_string(m) + ")");
    }
  // spot identities from the module definition
  if (!density_action(-z, z, alpha).is_zero()) rep.fail("l0 . z(dz)^-1 != 0");
  if (!density_action(-z, Poly::one(), Poly::zero()).is_zero())
    rep.fail("alpha = 0 action on constants != 0");
  if (rep.ok)
    rep.note("Vect |x F_{-1} window constants equal W window " + std::to_string(N));
  return rep;
}

// ---------------------------------------------------------------- two-virasoro

Report two_virasoro_check(int N) {
  Report rep;
  if (N < 2) throw Alt1Error("two_virasoro_check: N >= 2 required");
  Poly c = Poly::var("c"), cp = Poly::var("cp");
  // basis: diagonal copies D(V_n), D(V'_n), D(unit)=K and the eps-slot copies
  std::vector<std::string> basis;
  for (int n = -N; n <= N; ++n) basis.push_back(mode_label("DV", n));
  for (int n = -N; n <= N; ++n) basis.push_back(mode_label("DVp", n));
  basis.push_back("K");
  for (int n = -N; n <= N; ++n) basis.push_back(mode_label("OV", n));
  for (int n = -N; n <= N; ++n) basis.push_back(mode_label("OVp", n));
  basis.push_back("Keps");
  LieAlgebraDef alg(basis);
  const int nb = 2 * N + 1;
  auto DV = [&](int n) { return n + N; };
  auto DVp = [&](int n) { return nb + n + N; };
  const int K = 2 * nb;
  auto OV = [&](int n) { return 2 * nb + 1 + n + N; };
  auto OVp = [&](int n) { return 3 * nb + 1 + n + N; };
  const int Keps = 4 * nb + 1;

  auto vir_terms = [&](int n, int m, auto tgt, int center, const Poly& charge)
      -> std::vector<std::pair<int, Poly>> {
    std::vector<std::pair<int, Poly>> t;
    if (std::abs(n + m) <= N && n != m) t.push_back({tgt(n + m), num(n - m)});
    if (n + m == 0) {
      Poly coeff = charge.scaled(Scalar(Rational(static_cast<long>(n) * (static_cast<long>(n) * n - 1), 12)));
      if (!coeff.is_zero()) t.push_back({center, coeff});
    }
    return t;
  };

  for (int n = -N; n <= N; ++n)
    for (int m = n + 1; m <= N; ++m) {
      if (std::abs(n + m) > N && n + m != 0) {
        alg.set_truncated(DV(n), DV(m));
        alg.set_truncated(DVp(n), DVp(m));
      } else {
        alg.set_bracket(DV(n), DV(m), vir_terms(n, m, DV, K, c));
        alg.set_bracket(DVp(n), DVp(m), vir_terms(n, m, DVp, K, cp));
      }
    }
  for (int n = -N; n <= N; ++n)
    for (int m = -N; m <= N; ++m) {
      if (n == m && n + m != 0) continue;
      if (std::abs(n + m) > N && n + m != 0) {
        alg.set_truncated(DV(n), OV(m));
        alg.set_truncated(DVp(n), OVp(m));
        continue;
      }
      if (n != m || n + m == 0) {
        auto t1 = vir_terms(n, m, OV, Keps, c);
        if (!t1.empty()) alg.set_bracket(DV(n), OV(m), t1);
        auto t2 = vir_terms(n, m, OVp, Keps, cp);
        if (!t2.empty()) alg.set_bracket(DVp(n), OVp(m), t2);
      }
    }

  // L_n = DV_n + DVp_n, Leps_n = OV_n
  auto L = [&](int n) {
    auto e = alg.zero_element();
    e[DV(n)] = Poly::one();
    e[DVp(n)] = Poly::one();
    return e;
  };
  auto Le = [&](int n) {
    auto e = alg.zero_element();
    e[OV(n)] = Poly::one();
    return e;
  };

  bool trunc = false;
  for (int n = -N; n <= N; ++n)
    for (int m = -N; m <= N; ++m) {
      if (n == m) continue;
      bool inw = std::abs(n + m) <= N;
      if (!inw && n + m != 0) continue;
      auto got = alg.bracket(L(n), L(m), &trunc);
      auto expect = alg.zero_element();
      if (n != m) {
        expect[DV(n + m)] += Poly(n - m);
        expect[DVp(n + m)] += Poly(n - m);
      }
      if (n + m == 0)
        expect[K] += (c + cp).scaled(Scalar(Rational(static_cast<long>(n) * (static_cast<long>(n) * n - 1), 12)));
      if (got != expect)
        rep.fail("[L_n, L_m] central term mismatch at (" + std::to_string(n) + "," +
                 std::to_string(m) + ")");

      got = alg.bracket(L(n), Le(m), &trunc);
      expect = alg.zero_element();
      expect[OV(n + m)] += Poly(n - m);
      if (n + m == 0)
        expect[Keps] += c.scaled(Scalar(Rational(static_cast<long>(n) * (static_cast<long>(n) * n - 1), 12)));
      if (got != expect)
        rep.fail("[L_n, Leps_m] central term mismatch at (" + std::to_string(n) + "," +
                 std::to_string(m) + ")");
    }

  // the printed spot values
  {
    auto got = alg.bracket(L(2), L(-2), &trunc);
    auto expect = alg.zero_element();
    expect[DV(0)] = Poly(4);
    expect[DVp(0)] = Poly(4);
    expect[K] = (c + cp).scaled(Scalar(Rational(1, 2)));  // (c+c')/12 * 6
    if (got != expect) rep.fail("[L2, L-2] != 4 L0 + (c+c')/2 K");
    got = alg.bracket(L(2), Le(-2), &trunc);
    expect = alg.zero_element();
    expect[OV(0)] = Poly(4);
    expect[Keps] = c.scaled(Scalar(Rational(1, 2)));
    if (got != expect) rep.fail("[L2, Leps-2] != 4 Leps0 + (c/2) Keps");
    got = alg.bracket(L(1), L(-1), &trunc);
    expect = alg.zero_element();
    expect[DV(0)] = Poly(2);
    expect[DVp(0)] = Poly(2);
    if (got != expect) rep.fail("[L1, L-1] has a central term (should vanish)");
  }
  if (rep.ok)
    rep.note("two-Virasoro construction reproduces the (c+c')/12 and c/12 central terms");
  return rep;
}

// ---------------------------------------------------------------- printed 6x6

Report adjoint6_convention_check() {
  Report rep;
  auto alg = make_alt1();
  auto mat_from = [&](std::initializer_list<std::initializer_list<long>> rows) {
    MatPoly m(6, 6);
    int i = 0;
    for (auto& r : rows) {
      int j = 0;
      for (long v : r) m(i, j++) = Poly(v);
      ++i;
    }
    return m;
  };
  // the six printed matrices, in the basis order (Y-1, Y0, Y1, X-1, X0, X1)
  std::map<std::string, MatPoly> printed;
  printed["Y-1"] = mat_from({{0, 0, 0, 0, -1, 0},
                             {0, 0, 0, 0, 0, -2},
                             {0, 0, 0, 0, 0, 0},
                             {0, 0, 0, 0, 0, 0},
                             {0, 0, 0, 0, 0, 0},
                             {0, 0, 0, 0, 0, 0}});
  printed["Y0"] = mat_from({{0, 0, 0, 1, 0, 0},
                            {0, 0, 0, 0, 0, 0},
                            {0, 0, 0, 0, 0, -1},
                            {0, 0, 0, 0, 0, 0},
                            {0, 0, 0, 0, 0, 0},
                            {0, 0, 0, 0, 0, 0}});
  printed["Y1"] = mat_from({{0, 0, 0, 0, 0, 0},
                            {0, 0, 0, 0, 2, 0},
                            {0, 0, 0, 0, 0, 1},
                            {0, 0, 0, 0, 0, 0},
                            {0, 0, 0, 0, 0, 0},
                            {0, 0, 0, 0, 0, 0}});
  printed["X-1"] = mat_from({{0, 0, 0, 0, 0, 0},
                             {0, -1, 0, 0, 0, 0},
                             {0, 0, -2, 0, 0, 0},
                             {0, 0, 0, 0, 0, 0},
                             {0, 0, 0, 0, -1, 0},
                             {0, 0, 0, 0, 0, -2}});
  printed["X0"] = mat_from({{1, 0, 0, 0, 0, 0},
                            {0, 0, 0, 0, 0, 0},
                            {0, 0, -1, 0, 0, 0},
                            {0, 0, 0, 1, 0, 0},
                            {0, 0, 0, 0, 0, 0},
                            {0, 0, 0, 0, 0, -1}});
  printed["X1"] = mat_from({{0, 2, 0, 0, 0, 0},
                            {0, 0, 1, 0, 0, 0},
                            {0, 0, 0, 0, 0, 0},
                            {0, 0, 0, 0, 2, 0},
                            {0, 0, 0, 0, 0, 1},
                            {0, 0, 0, 0, 0, 0}});

  auto transpose = [](const MatPoly& m) {
    MatPoly t(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    return t;
  };
  for (const auto& [label, pm] : printed) {
    MatPoly ad = alg.adjoint_matrix(alg.index_of(label));
    std::string match;
    if (pm == ad) match = "ad";
    else if (pm == ad.map([](const Poly& p) { return -p; })) match = "-ad";
    else if (pm == transpose(ad)) match = "ad^T";
    else if (pm == transpose(ad).map([](const Poly& p) { return -p; })) match = "-ad^T";
    if (match.empty())
      rep.note("printed " + label + " matches no convention (paper discrepancy)");
    else
      rep.note("printed " + label + " = " + match);
  }
  return rep;
}

}  // namespace alt1
