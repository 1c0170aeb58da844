#pragma once

#include "alt1/liealg.hpp"

namespace alt1 {

/// Chevalley-Eilenberg degree-2 cohomology data for a finite-dimensional
/// algebra: d2: Lambda^2 g* -> Lambda^3 g* and d1: g* -> Lambda^2 g* in the
/// elementary alternating-form bases (sorted index pairs/triples).
struct CochainSpace {
  std::vector<std::pair<int, int>> pairs;        // basis of Lambda^2
  std::vector<std::array<int, 3>> triples;       // basis of Lambda^3
  int pair_index(int i, int j, int* sign) const;
};

CochainSpace cochain_space(const LieAlgebraDef& alg);

/// Matrix of d: Lambda^2 -> Lambda^3, (d a)(x,y,z) = a([x,y],z) + a([y,z],x)
/// + a([z,x],y); rows = triples, columns = pairs.
MatQ d2_matrix(const LieAlgebraDef& alg);

/// Matrix of d: Lambda^1 -> Lambda^2, (d l)(x,y) = l([x,y]).
MatQ d1_matrix(const LieAlgebraDef& alg);

struct H2Result {
  int dim_z2 = 0;
  int dim_b2 = 0;
  int dim_h2 = 0;
  std::vector<std::vector<RFn>> cocycle_basis;     // kernel of d2
  std::vector<std::vector<RFn>> coboundary_basis;  // image of d1
  /// representatives of nonzero classes (cocycles independent of B^2)
  std::vector<std::vector<RFn>> representatives;
};

H2Result h2(const LieAlgebraDef& alg);

/// d o d = 0 on Lambda^1.
bool dd_zero_check(const LieAlgebraDef& alg);

/// The Prop 2 hand computation: every cocycle on alt1 has
/// c = alpha(X0, Y0) = 0, a^eps = alpha(Y1, Y-1) = 0 and
/// alpha(X1, Y-1) = alpha(Y1, X-1), and is the coboundary of a form
/// supported on the X0*, Y0* duals.
Report prop2_structure_check();

// ---- windowed graded cocycles of W ----------------------------------------

struct Gen2 {
  bool eps;
  int n;
};

/// Value of the Virasoro cocycle extended by zero: alpha(L_n, L_m) =
/// delta_{n+m,0} n (n^2 - 1), zero when an eps generator is involved.
Rational vir_cocycle(Gen2 a, Gen2 b);
/// omega(L_n, Leps_m) = delta_{n+m,0} n (n^2 - 1); zero on L,L and eps,eps.
Rational omega_cocycle(Gen2 a, Gen2 b);

struct GradedCocycleReport {
  Report vir_closed;        // d alpha = 0 on all window triples
  Report omega_closed;      // d omega = 0 on all window triples
  Report vir_noncoboundary; // the restricted d lambda = alpha system is infeasible
  Report omega_noncoboundary;
  bool ok() const {
    return vir_closed.ok && omega_closed.ok && vir_noncoboundary.ok && omega_noncoboundary.ok;
  }
};

GradedCocycleReport graded_cocycle_check(int N);

// ---- central extensions ----------------------------------------------------

/// Extend `alg` by one central element via the given 2-cocycle (values on
/// basis pairs i < j). Throws when the form is not a cocycle on the closed
/// part of the table.
LieAlgebraDef central_extension_build(const LieAlgebraDef& alg,
                                      const std::map<std::pair<int, int>, Poly>& cocycle,
                                      const std::string& central_label = "K");

/// Builds the omega extension of make_W(N) and verifies the printed spot
/// value [L2, Leps-2] = 4 Leps0 + 6 Keps, plus jacobi on the closed part.
Report omega_extension_check(int N);

}  // namespace alt1
