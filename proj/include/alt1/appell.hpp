#pragma once

#include "alt1/poly.hpp"

#include <optional>

namespace alt1 {

/// Moment data: single-sequence moments m_1..m_N (m_0 = 1 implicit) plus an
/// optional joint-moment table for multilinear Wick products. When an entry
/// is absent the moment is a formal parameter.
class MomentSequence {
public:
  /// all moments formal: m_g -> variable "m<g>", joint moments formal too
  static MomentSequence formal(int n_max);
  /// formal moments with single-sequence joints: E[x_S] = m_{|S|}
  static MomentSequence formal_single(int n_max);
  /// concrete sequence; joint moments default to E[x^{|S|}] = m_{|S|}
  static MomentSequence from_values(const std::vector<Rational>& m);
  /// standard gaussian: m_{2g} = (2g-1)!!, odd moments zero
  static MomentSequence gaussian(int n_max);

  /// E[prod_{i in S} X_i] for a multiset S of variable indices (sorted).
  Poly joint(const std::vector<int>& indices) const;
  /// E[X^g]
  Poly moment(int g) const;

  void set_joint(const std::vector<int>& indices, Poly value);
  int size() const { return n_max_; }

private:
  int n_max_ = 0;
  bool formal_ = true;
  bool single_ = false;
  std::vector<Poly> values_;                       // 1-based when concrete
  std::map<std::vector<int>, Poly> joint_;         // explicit joint entries
  mutable std::map<std::vector<int>, Poly> cache_;
};

/// Multilinear Wick polynomial in variables x_1..x_k: coefficients over
/// subsets of {1..k}, the full set having coefficient 1.
struct WickPolynomial {
  int k = 0;
  std::map<unsigned, Poly> coeff;  // bitmask -> coefficient

  Poly coefficient(unsigned subset) const {
    auto it = coeff.find(subset);
    return it == coeff.end() ? Poly::zero() : it->second;
  }
  /// the expectation functional applied to this polynomial
  Poly expectation(const MomentSequence& m) const;
  /// partial derivative in variable i (1-based) as a (k-variable) polynomial
  WickPolynomial derivative(int i) const;
  /// substitute every variable by the single variable x
  Poly specialize_single() const;
  std::string str() const;
};

/// <X_1,...,X_k>: the unique multilinear polynomial with zero expectation
/// whose i-th partial is the Wick product of the remaining variables.
WickPolynomial wick_product(int k, const MomentSequence& m);

/// Appell polynomials P_0..P_n: monic, P_n' = n P_{n-1}, E P_n = 0.
std::vector<Poly> appell_polynomials(int n_max, const MomentSequence& m);

/// Shifted moment system P_n(x) = sum_g C(n,g) x^{n-g} mu_g; satisfies only
/// the derivative condition.
std::vector<Poly> shifted_moment_system(int n_max, const MomentSequence& mu);

/// Hermite specialization: gaussian moments give He_n with the recursion
/// He_{n+1} = x He_n - n He_{n-1}.
struct HermiteReport {
  bool ok = true;
  std::vector<Poly> p;   // appell polynomials at gaussian moments
  std::vector<Poly> he;  // recursion values
};
HermiteReport hermite_check(int n_max);

/// Example-2 comparison: P0..P3 match the printed rows; P4/P5 printed rows
/// are the duplicated pair, with derived corrections returned.
struct Example2Report {
  bool p0_p3_ok = false;
  bool printed_p4_wrong = false;
  bool printed_p5_matches_derived = false;
  bool printed_pair_breaks_recursion = false;
  Poly derived_p4, derived_p5;
};
Example2Report example2_check();

/// Moment input file: {"moments": ["0","1",...], "joint": [{"indices": [...],
/// "value": "..."}]} with exact rational strings.
MomentSequence parse_moment_json(const std::string& text);

}  // namespace alt1
