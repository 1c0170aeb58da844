#pragma once

#include <optional>

#include "alt1/diffop.hpp"

namespace alt1 {

/// Structured two-point expression: a product of formal powers and
/// exponential factors, optionally times an uninterpreted f(u). Variables are
/// (t1, r1, zeta1, M1, t2, r2, zeta2, M2); parameters (x1, x2, gamma1,
/// gamma2) live inside the power exponents and coefficients.
struct TwoPointForm {
  struct PowFactor {
    RFn base;       // rational in the particle variables
    Poly exponent;  // polynomial in the parameters (e.g. -(x1+x2)/2)
  };
  std::vector<PowFactor> factors;
  std::vector<RFn> exp_args;
  std::optional<RFn> f_arg;
  std::vector<std::string> assumptions;
};

/// First-order two-particle operator: sum of coefficient * d/d(var) terms
/// plus multiplication terms (var < 0).
struct TwoParticleOp {
  struct Term {
    RFn coeff;
    int dvar;  // variable id, or -1 for a multiplication term
  };
  std::vector<Term> terms;
  std::string name;
};

/// Instantiate a single-particle generator on particle 1 or 2. The optional
/// mass ties substitute M by a polynomial in the particle-1 mass.
TwoParticleOp instantiate(const DiffOp& op, int particle, const std::string& name,
                          std::optional<Poly> mass_value = std::nullopt);
TwoParticleOp pair_sum(const DiffOp& op, const std::string& name);
TwoParticleOp op_sum(const TwoParticleOp& a, const TwoParticleOp& b);

/// Residual of applying an operator to a form, collected on the {f, f'}
/// module basis: X F = P * (c0 f + c1 f'), with P the form's own prefactor.
struct FBasisResidual {
  RFn c0, c1;
  enum class Kind { zero, ode_constraint, other } kind = Kind::other;
  RFn ode_s;  // classification "u f' + s f = 0" when kind == ode_constraint
  std::string str() const;
};

FBasisResidual apply_two_particle(const TwoParticleOp& op, const TwoPointForm& form);

/// Exact numeric confirmation: fold f = exp(lambda u) into the form and
/// evaluate the residual at random rational points; returns true when every
/// sample vanishes exactly.
bool spot_check_zero(const TwoParticleOp& op, const TwoPointForm& form, int n_points,
                     unsigned seed);

// ---- the concrete forms ----------------------------------------------------

TwoPointForm phi_st_form();
TwoPointForm phi_j_form();
TwoPointForm fixed_mass_form1();
TwoPointForm fixed_mass_form2();
TwoPointForm fixed_mass_form3();

/// Per-generator covariance scan. Generators are named by family and index.
struct ScanEntry {
  std::string generator;
  FBasisResidual residual;
};
struct ScanReport {
  std::vector<ScanEntry> entries;
  std::vector<std::string> assumptions;
  bool all_zero() const {
    for (const auto& e : entries)
      if (e.residual.kind != FBasisResidual::Kind::zero) return false;
    return true;
  }
};

/// phi_st under the zeta realization generators (translations, phases, the
/// dilation constraint, ...).
ScanReport scan_phi_st();
/// phi_j under the contact realization generators.
ScanReport scan_phi_j();
/// The three fixed-mass forms under the transported / fixed-mass generators.
ScanReport scan_fixed_mass();

/// Fourier transport spot checks (M0 -> -M, Y_{1/2} -> -t d_r - M r, ...).
Report fourier_transport_check();

/// Derivation (Leibniz) property of apply_two_particle on product forms.
Report derivation_property_check();

}  // namespace alt1
