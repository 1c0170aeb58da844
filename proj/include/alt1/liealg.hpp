#pragma once

#include "alt1/matrix.hpp"

namespace alt1 {

struct Report {
  bool ok = true;
  std::vector<std::string> notes;
  void fail(std::string why) {
    ok = false;
    notes.push_back(std::move(why));
  }
  void note(std::string s) { notes.push_back(std::move(s)); }
  std::string summary() const;
};

struct BracketEntry {
  bool truncated = false;
  std::vector<std::pair<int, Poly>> terms;  // (basis index, coefficient)
};

/// Structure-constant Lie algebra over exact coefficients. Brackets are
/// stored for i < j; antisymmetry supplies the rest. A window-escaping
/// bracket is flagged truncated, never silently zeroed.
class LieAlgebraDef {
public:
  using Element = std::vector<Poly>;

  explicit LieAlgebraDef(std::vector<std::string> basis);

  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<std::string>& basis() const { return basis_; }
  const std::string& label(int i) const { return basis_.at(i); }
  int index_of(const std::string& label) const;

  void set_bracket(int i, int j, std::vector<std::pair<int, Poly>> terms);
  void set_truncated(int i, int j);

  bool is_truncated(int i, int j) const;
  /// [e_i, e_j] as sparse terms; false when the entry is truncated.
  bool bracket_terms(int i, int j, std::vector<std::pair<int, Poly>>& out) const;

  Element zero_element() const { return Element(dim(), Poly::zero()); }
  Element basis_element(int i) const;
  /// [x, y]; sets *truncated when a flagged entry participates.
  Element bracket(const Element& x, const Element& y, bool* truncated = nullptr) const;

  /// ad(e_i) with convention [e_i, e_j] = sum_k (ad e_i)_{kj} e_k.
  MatPoly adjoint_matrix(int i) const;

  /// Rebuild constants under new basis f_j = sum_i Q_{ij} e_i (needs Qinv).
  LieAlgebraDef change_of_basis(const MatQ& q, const MatQ& qinv) const;

  static std::string element_str(const LieAlgebraDef& alg, const Element& e);

private:
  std::vector<std::string> basis_;
  std::map<std::pair<int, int>, BracketEntry> table_;
};

struct JacobiViolation {
  int i, j, k;
  std::string residual;
};

struct JacobiReport {
  std::vector<JacobiViolation> violations;
  int checked = 0;
  int skipped = 0;  // triples touching truncated brackets
  bool ok() const { return violations.empty(); }
};

JacobiReport jacobi_check(const LieAlgebraDef& alg);

/// Antisymmetry is structural for i != j; this verifies [e_i, e_i] = 0 and
/// well-formedness of the stored table.
bool antisymmetry_check(const LieAlgebraDef& alg);

/// ad[x,y] = [ad x, ad y] on all non-truncated basis pairs.
Report adjoint_rep_check(const LieAlgebraDef& alg);

// ---- constructors ------------------------------------------------------

/// Basis (Y-1, Y0, Y1, X-1, X0, X1); [Xn,Xm]=(n-m)X_{n+m},
/// [Xn,Ym]=(n-m)Y_{n+m}, [Y,Y]=0. Closed (all escaping coefficients vanish).
LieAlgebraDef make_alt1();

/// Basis (L1, L0, L-1): [L0,L1]=-L1, [L0,L-1]=L-1, [L1,L-1]=2L0.
LieAlgebraDef make_sl2();

LieAlgebraDef make_abelian(int n);

/// W = Vect(S^1) (x) R[eps]/eps^2 on the mode window |n| <= N.
LieAlgebraDef make_W(int N);

/// Schrodinger-Virasoro algebra on the window: L_n, M_n (|n| <= N) and
/// half-integer Y_m (|m| <= N - 1/2).
LieAlgebraDef make_sv(int N);

// ---- operations --------------------------------------------------------

struct GrassmannResult {
  LieAlgebraDef algebra;
  std::vector<std::string> dictionary;  // human-readable Phi entries
};

/// base (x) R[eps]/eps^2: doubled basis {Z, Z^eps}, [Z^eps, W^eps] = 0,
/// [Z, W^eps] = [Z,W]^eps.
GrassmannResult grassmann_tensor(const LieAlgebraDef& base);

/// Prop 1: grassmann_tensor(sl2) is isomorphic to alt1 under
/// X_n -> L_n, Y_n -> L_n^eps.
Report prop1_isomorphism_check();

/// Prop 6: X_n = l_n + lbar_n, Y_n = a lbar_n in Vect + Vect-bar; verifies
/// the a-parametric brackets and that the a->0 constants equal make_W(N).
Report contraction_check(int N);

/// u(z)(dz)^alpha with the action f u' + alpha f' u.
Poly density_action(const Poly& f, const Poly& u, const Poly& alpha);

/// Prop 3: Vect(S^1) |x F_{-1} has the same window constants as W.
Report density_action_check(int N);

/// Two commuting Virasoro algebras with charges c and c' reproduce the
/// centrally extended brackets of W (the (c+c')/12 and c/12 terms).
Report two_virasoro_check(int N);

/// Compares the printed 6x6 adjoint-representation matrices against the
/// structure-constant ad matrices under the four sign/transpose conventions.
Report adjoint6_convention_check();

}  // namespace alt1
