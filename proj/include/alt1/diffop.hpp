#pragma once

#include <array>
#include <functional>

#include "alt1/liealg.hpp"

namespace alt1 {

/// Exact differential operator in (t, r, zeta, M) with Laurent-polynomial
/// coefficients; normal form keeps all derivatives to the right.
class DiffOp {
public:
  using Idx = std::array<int, 4>;  // (d_t, d_r, d_zeta, d_M) powers

  DiffOp() = default;
  static DiffOp zero() { return DiffOp(); }
  static DiffOp term(Poly coeff, Idx idx);
  static DiffOp multiplication(Poly coeff) { return term(std::move(coeff), {0, 0, 0, 0}); }
  static DiffOp d_t(), d_r(), d_zeta(), d_M();

  const std::map<Idx, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int max_order() const;

  DiffOp operator-() const;
  friend DiffOp operator+(DiffOp a, const DiffOp& b);
  friend DiffOp operator-(DiffOp a, const DiffOp& b);
  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  DiffOp scaled(const Scalar& c) const;
  DiffOp scaled(const Poly& c) const;

  /// Operator composition (Leibniz rule), normal ordered.
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b);

  friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

  /// Canonical text: variables ordered (t, r, zeta, M), terms by multi-index.
  std::string str() const;

  static int var_t();
  static int var_r();
  static int var_zeta();
  static int var_M();

private:
  void add_term(const Idx& idx, const Poly& c);
  std::map<Idx, Poly> terms_;
};

DiffOp commutator(const DiffOp& p, const DiffOp& q);

// ---- generator families --------------------------------------------------

/// A generator of the abstract family: fam 'X' is the Vect-type row (L_n /
/// X_n), fam 'Y' the eps-type row (L_n^eps / Y_n). Half-integer families use
/// doubled indices with fam 'y'.
struct Gen {
  char fam;
  int n;
  friend auto operator<=>(const Gen&, const Gen&) = default;
};

struct Realization {
  std::string name;
  std::function<DiffOp(Gen)> image;
  DiffOp operator()(char fam, int n) const { return image({fam, n}); }
};

/// The standard (variable-mass) conformal generators of the introduction.
DiffOp zeta_X(int n);      // X_{-1}, X_0, X_1
DiffOp zeta_Y2(int m2);    // Y_{m2/2} for m2 in {-1, +1}
DiffOp zeta_M0();
DiffOp zeta_N();
DiffOp zeta_Vplus();
DiffOp zeta_Vminus();
DiffOp zeta_Wgen();
DiffOp zeta_D();

/// Abstract alt1 basis realized in the zeta coordinates:
/// X_n -> (Y_{-1/2}, D, V+), Y_n -> (M0, Y_{1/2}, 2 X_1).
Realization zeta_standard();
/// Contact-form realization, all modes n (Laurent in r).
Realization contact_J();
/// Fixed-mass realization, all modes n (parameters x, gamma).
Realization fixed_mass();

/// Bracket rule of W / alt1: [X_n, X_m] = (n-m)X_{n+m},
/// [X_n, Y_m] = (n-m)Y_{n+m}, [Y, Y] = 0.
std::vector<std::pair<Gen, Scalar>> w_rule(Gen a, Gen b);

/// verify [real(a), real(b)] = real(rule(a,b)) for all pairs with |n| <= window.
Report verify_realization(const Realization& real, int window);

/// Same pair check for the restriction of the zeta generators to alt1.
Report verify_zeta_alt1();
/// Closure of sch1 = {X_-1, X_0, X_1, Y_{+-1/2}, M_0} in the zeta realization.
Report verify_zeta_sch1();

/// S_hat = A*S0 + S1 with S0 = X_-1 Y_1 + X_1 Y_-1 - 2 X_0 Y_0 and
/// S1 = Y_-1 Y_1 - Y_0^2, realized through `real`.
struct CasimirResult {
  DiffOp op;
  Report commutes;  // [S_hat, image] = 0 for all six generators
};
CasimirResult casimir_image(const Realization& real, const std::string& a_param = "A");

/// S = 2 M_0 X_{-1} - Y_{-1/2}^2 in the zeta realization.
DiffOp schrodinger_operator();

// ---- Prop 4 no-go --------------------------------------------------------

struct NogoResult {
  SolveStatus status;
  int n_free = 0;        // for the relaxed/parametric case
  std::string witness;   // the incompatible constraint pair
  std::string detail;
};

/// Ansatz L_2^eps = f dt + g dr + h dz (+ optional multiplication term) with
/// polynomial coefficients of total degree <= max_degree; imposes
/// [L2e, L_-1] = 3 L1e, [L2e, L_-1^eps] = 0, [L2e, L_0^eps] = 0 under the
/// Prop-1 dictionary into the zeta realization.
NogoResult nogo_solve(int max_degree, bool include_order_zero);
/// Same system without the third relation; expected parametric.
NogoResult nogo_solve_relaxed(int max_degree, bool include_order_zero);

// ---- Prop 5 contact form -------------------------------------------------

struct OneForm {
  Poly c_t, c_r, c_z;  // coefficients of dt, dr, dzeta
};

/// alpha = r dr - 2 i zeta dt.
OneForm contact_alpha();

/// L_X alpha via Cartan's formula, for a vector field with the given
/// components (no d_M component).
OneForm lie_derivative(const Poly& xt, const Poly& xr, const Poly& xz, const OneForm& alpha);

/// Conditions (i)-(iii) for every L_n, L_n^eps with |n| <= n_window.
Report contact_check(int n_window);

// ---- Fourier transport ---------------------------------------------------

/// zeta -> mass: d_zeta -> i M, (zeta .) -> i d_M; acts on (t, r, M).
DiffOp fourier_transport(const DiffOp& op);
Realization fourier_transport(const Realization& real);

}  // namespace alt1
