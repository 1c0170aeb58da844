#pragma once

#include "alt1/matrix.hpp"
#include "alt1/liealg.hpp"

namespace alt1 {

/// The six 4x4 matrices of the finite-dimensional representation, in the
/// order (Y-1, Y0, Y1, X-1, X0, X1).
struct MatrixRep4 {
  Mat<Poly> m[6];
  Mat<Poly>& Ym1() { return m[0]; }
  Mat<Poly>& Y0() { return m[1]; }
  Mat<Poly>& Y1() { return m[2]; }
  Mat<Poly>& Xm1() { return m[3]; }
  Mat<Poly>& X0() { return m[4]; }
  Mat<Poly>& X1() { return m[5]; }
  const Mat<Poly>& at(int i) const { return m[i]; }
};

/// The matrices as printed (X-1 with entries at (2,2) and (4,3)).
MatrixRep4 printed_rep4();
/// The repaired set: X-1 = -(E21 + E43).
MatrixRep4 repaired_rep4();

/// Checks all 15 bracket pairs against the alt1 constants; failing pairs are
/// listed by name.
struct RepCheck {
  bool ok = true;
  std::vector<std::string> failing_pairs;
};
RepCheck verify_matrix_rep(const MatrixRep4& rep);

/// Solves the exact linear system for an X-1 making all brackets hold, with
/// the other five matrices fixed. Reports uniqueness.
struct RepairResult {
  Mat<Poly> xm1;
  bool unique = false;
  bool all_pass = false;
};
RepairResult repair_matrix_rep();

/// Casimir matrices of the repaired representation.
struct MatrixCasimir {
  Mat<Poly> s0, s1, s_hat;  // s_hat = A s0 + s1
  bool commutes = false;
};
MatrixCasimir matrix_casimir();

// ---- exact exponentials and the group element -----------------------------

/// exp of a nilpotent matrix (finite series); throws if not nilpotent.
Mat<Poly> exact_exp_nilpotent(const Mat<Poly>& m);
/// exp(c X0-type diagonal): entries must be half-integers k/2; the result has
/// entries E^k with E = e^{A4/2}. Throws otherwise.
Mat<Poly> exact_exp_diag_half(const Mat<Poly>& m);
/// Dispatches between the two admissible shapes.
Mat<Poly> exact_exp(const Mat<Poly>& m);

/// g(A) = e^{A1 Y1} e^{A2 X1} e^{A3 Y0} e^{A4 X0} e^{A5 Y-1} e^{A6 X-1},
/// entries polynomial in A1, A2, A3, A5, A6 and E^{+-1}.
Mat<Poly> group_element_general();

/// e^{B1 Y-1 + B2 X-1} e^{V1 Y1 + V2 X1}, exactly.
Mat<Poly> group_product();
/// Entrywise comparison with the printed product matrix.
Report group_product_check();

// ---- coordinates of the second kind ----------------------------------------

struct Coordinates {
  RFn a1, a2, a3, a5, a6;
  RFn e_a4_half;  // the value of E = e^{A4/2}, i.e. g22
};

/// The coordinate-extraction formulas (A5 with the sign that makes
/// extract(build(A)) = A; the printed A5 formula is off by that sign).
Coordinates extract_coordinates(const Mat<RFn>& g);

/// Builds g from coordinate values by substitution into the general element.
Mat<RFn> build_group_element(const Coordinates& c);

struct Prop7Slot {
  std::string name;
  RFn derived;
  RFn printed;
  bool match;
};

struct Prop7Result {
  std::vector<Prop7Slot> slots;   // a1..a6 (a4 compared as e^{A4})
  bool identity_ok = false;       // g(derived coordinates) == product
  int discrepancies = 0;
};

/// Prop 7: extracts the exact coordinates of the product, compares each slot
/// with the printed formula, and verifies g(derived) reproduces the product.
Prop7Result leibniz_group_law();

/// The printed A5 extraction formula (-g23/g22 - g24 g21 / g22^2) versus the
/// consistent one; returns the discrepancy report.
Report extract_a5_formula_check();

// ---- pi matrices -----------------------------------------------------------

struct PiResult {
  MatQ pi_dagger, pi_star;       // rows j = eta_j, columns mu = d/dA_mu
  Report identity;               // eta_j g = sum pi premultiplied derivatives
  std::vector<std::string> dagger_mismatches;  // printed-vs-derived, if any
  std::vector<std::string> star_mismatches;
};

PiResult pi_matrices();

/// d/dA4 on the E-ring: E^k picks up the factor k/2.
Poly d_dA4(const Poly& p);

// ---- numeric splitting-lemma flow ------------------------------------------

/// Integrates A' = alpha * pi(A) from A(0)=0 to s=1 with a classical
/// fourth-order one-step method and compares g(A(1)) with exp(sum alpha eta)
/// summed numerically; returns the max entrywise deviation.
double splitting_flow_max_deviation(const std::array<double, 6>& alpha, int steps,
                                    bool use_star);

}  // namespace alt1
