#pragma once

#include "alt1/series.hpp"
#include "alt1/liealg.hpp"

namespace alt1 {

/// Normal-ordered element of the two-mode Weyl algebra, [a_i, a_g+] =
/// delta_{ig}. Keys are (a1+ power, a2+ power, a1 power, a2 power);
/// coefficients are polynomials in the parameters (gamma, x, ...).
class WeylOp {
public:
  using Word = std::array<int, 4>;

  WeylOp() = default;
  static WeylOp term(Poly c, Word w);
  static WeylOp a1p() { return term(Poly::one(), {1, 0, 0, 0}); }
  static WeylOp a2p() { return term(Poly::one(), {0, 1, 0, 0}); }
  static WeylOp a1() { return term(Poly::one(), {0, 0, 1, 0}); }
  static WeylOp a2() { return term(Poly::one(), {0, 0, 0, 1}); }

  const std::map<Word, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  WeylOp operator-() const;
  WeylOp& operator+=(const WeylOp& o);
  friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
  friend WeylOp operator-(WeylOp a, const WeylOp& b);
  WeylOp scaled(const Poly& c) const;
  friend WeylOp operator*(const WeylOp& a, const WeylOp& b);
  friend bool operator==(const WeylOp& a, const WeylOp& b) { return a.terms_ == b.terms_; }

  std::string str() const;

private:
  void add(const Word& w, const Poly& c);
  std::map<Word, Poly> terms_;
};

WeylOp weyl_commutator(const WeylOp& a, const WeylOp& b);

/// Ladder rule: |j,k> -> sum coeff(j,k,...) |j+dj, k+dk>, with the
/// coefficient a polynomial in the formal mode numbers j, k.
struct LadderTerm {
  int dj, dk;
  Poly coeff;
};
using LadderRule = std::vector<LadderTerm>;

LadderRule rule_from_weyl(const WeylOp& w);
LadderRule rule_scaled(const LadderRule& r, const Poly& c);
LadderRule rule_add(const LadderRule& a, const LadderRule& b);
/// Symbolic composition (apply b first, then a) and commutator.
LadderRule rule_compose(const LadderRule& a, const LadderRule& b);
LadderRule rule_commutator(const LadderRule& a, const LadderRule& b);
bool rule_equal(const LadderRule& a, const LadderRule& b);
std::string rule_str(const LadderRule& r);

/// Finitely supported vector sum coeff_{jk} |j,k>.
using FockVector = std::map<std::pair<int, int>, Poly>;

FockVector apply_rule(const LadderRule& r, const FockVector& v);
FockVector vac();

/// Generator order follows liealg: (Y-1, Y0, Y1, X-1, X0, X1).
struct LadderAction {
  LadderRule rule[6];
  const LadderRule& at(int i) const { return rule[i]; }
};

struct DerivedActions {
  WeylOp word[6];
  LadderAction action;
  Report derivation;          // the PDE-operator solve from the closed form
  Report brackets;            // all 15 pairs, symbolically in (j,k,gamma,x)
  Report vacuum;              // the (fock) axioms
  Report imres_match;         // derived Y-1, X-1 words equal the (imres) words
  std::vector<std::string> acti_mismatches;   // printed action table rows
  std::vector<std::string> bosre_mismatches;  // printed word table entries
  Report detlf;               // printed PDE (second line) vs derived
};

/// Re-derives the lowering operators from the closed-form Leibniz function
/// by an exact ansatz solve, builds all six generators, verifies brackets
/// and vacuum axioms, and diffs against the printed tables.
const DerivedActions& derive_ladder_actions();

// ---- inner product ---------------------------------------------------------

/// Gram pairing <|j,k>, |j',k'>> built from the vacuum normalization and the
/// beta = 1 adjointness pairs (Y1+ = Y-1, X1+ = X-1). Exact in (gamma, x).
Poly gram(int j, int k, int jp, int kp);

/// Closed-form Leibniz coefficients vs the ladder Gram matrix through the
/// given total order, plus the spot values of the examples.
Report leibniz_function_check(int order);

/// Symmetry and adjointness of the pairing up to the given level.
Report adjointness_check(int level);

/// The Leibniz closed form follows from the corrected group law plus the
/// vacuum axioms: Y = exp(-gamma A3) (e^{A4/2})^{-2x} with the derived
/// coordinates of Prop 7.
Report leibniz_from_grouplaw_check();

// ---- tilted plane and Appell system ----------------------------------------

/// e^{beta X-1} Y1 e^{-beta X-1} = Y1 - 2 beta Y0 + beta^2 Y-1 (and X-case),
/// via the terminating adjoint series in the abstract algebra; also checks
/// that the tilted plane is abelian.
Report tilted_plane_check();

/// Prop 8 generating function through the given total order in (v1, v2),
/// with the corrected third factor; the printed third factor is re-run and
/// reported as a discrepancy.
struct Prop8Result {
  Report corrected;   // identity holds with exp(-2 gamma beta v1 / (1 + beta v2))
  bool printed_fails = false;  // the printed (1 - beta v2) slot breaks it
};
Prop8Result prop8_check(int order);

/// Truncated coherent state e^{V1 Y1} e^{V2 X1} Omega with polynomial slots.
FockVector coherent_state(const Poly& v1, const Poly& v2, int order);

/// Coherent-state inner products match the Leibniz function (example spots).
Report coherent_state_check(int order);

}  // namespace alt1
