#pragma once

#include <memory>

#include "alt1/rational.hpp"

namespace alt1 {

/// Truncated multivariate power series in a designated set of series
/// variables, with PolyExp coefficients in everything else. All arithmetic
/// truncates to the per-variable caps given at construction.
class Series {
public:
  Series() = default;
  Series(std::vector<int> vars, std::vector<int> caps);

  static Series constant(const Series& like, const Poly& c);

  const std::vector<int>& vars() const { return vars_; }
  const std::vector<int>& caps() const { return caps_; }
  const std::map<std::vector<int>, Poly>& coeffs() const { return coeffs_; }

  /// coefficient of prod vars[i]^exps[i]
  Poly coeff(const std::vector<int>& exps) const;
  void set_coeff(std::vector<int> exps, Poly c);

  bool is_zero() const { return coeffs_.empty(); }

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  Series scaled(const Poly& c) const;
  Series operator-() const;
  friend bool operator==(const Series& a, const Series& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Drops every term of total degree > n (for total-order comparisons).
  Series truncated_total(int n) const;

  std::string str() const;

private:
  bool compatible(const Series& o) const { return vars_ == o.vars_ && caps_ == o.caps_; }
  std::vector<int> vars_;
  std::vector<int> caps_;
  std::map<std::vector<int>, Poly> coeffs_;
};

/// Closed-form token tree for series_expand. Arguments of exp/log/fpow must
/// have the right constant term (0 for exp and the u of (1+u)-type bases).
class SExpr {
public:
  using Ptr = std::shared_ptr<const SExpr>;

  /// a polynomial in series variables and parameters
  static Ptr poly(Poly p);
  static Ptr sum(std::vector<Ptr> kids);
  static Ptr prod(std::vector<Ptr> kids);
  /// integer power, e >= 0
  static Ptr ipow(Ptr base, int e);
  /// (1 + u)^a with a formal polynomial exponent a (e.g. -2x); base must
  /// have constant term 1
  static Ptr fpow(Ptr base, Poly exponent);
  static Ptr exp(Ptr arg);
  /// log(1 + u); base must have constant term 1
  static Ptr log(Ptr arg);

  /// Expand to a Series in `vars` truncated at `caps` (exact coefficients).
  Series expand(const std::vector<int>& vars, const std::vector<int>& caps) const;

private:
  enum class Kind { poly, sum, prod, ipow, fpow, exp_, log_ };
  Kind kind_;
  Poly payload_;  // poly node value, or fpow exponent
  int ipow_ = 0;
  std::vector<Ptr> kids_;
};

}  // namespace alt1
