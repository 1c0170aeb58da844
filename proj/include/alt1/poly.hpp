#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "alt1/scalar.hpp"

namespace alt1 {

/// Global interned variable table. Variables are created once, by name; the
/// laurent flag decides whether negative exponents are legal for them.
class Vars {
public:
  static int intern(const std::string& name, bool laurent = false);
  static int id(const std::string& name);  // throws if unknown
  static const std::string& name(int id);
  static bool laurent(int id);
};

struct VarPow {
  int var = 0;
  int exp = 0;
  friend auto operator<=>(const VarPow&, const VarPow&) = default;
};

/// Sorted-by-variable product of variable powers; no zero exponents stored.
struct Monomial {
  std::vector<VarPow> factors;

  bool empty() const { return factors.empty(); }
  int exponent(int var) const {
    for (const auto& f : factors)
      if (f.var == var) return f.exp;
    return 0;
  }
  int total_degree() const {
    int d = 0;
    for (const auto& f : factors) d += f.exp;
    return d;
  }
  Monomial times(const Monomial& o) const;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Exact multivariate Laurent polynomial over Gaussian rationals. The formal
/// exponential unit E = e^{A4/2} is an ordinary laurent variable here, so
/// E * E^{-1} = 1 falls out of the additive exponent bookkeeping.
class Poly {
public:
  Poly() = default;
  Poly(long n) { *this = constant(Scalar(n)); }
  Poly(const Scalar& s) { *this = constant(s); }

  static Poly zero() { return Poly(); }
  static Poly one() { return constant(Scalar(1)); }
  static Poly constant(const Scalar& c);
  static Poly i() { return constant(Scalar::i()); }
  static Poly var(const std::string& name) { return var_pow(name, 1); }
  static Poly var_pow(const std::string& name, int e);
  static Poly var_pow(int var_id, int e);
  static Poly monomial(Monomial m, Scalar c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
  }
  Scalar constant_value() const {
    if (terms_.empty()) return Scalar(0);
    if (!is_constant()) throw Alt1Error("Poly: not a constant");
    return terms_.begin()->second;
  }
  size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const;
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  friend bool operator<(const Poly& a, const Poly& b) { return a.terms_ < b.terms_; }

  Poly scaled(const Scalar& c) const;
  Poly pow(int e) const;

  /// d/d(var). Laurent exponents differentiate as usual (n x^{n-1}).
  Poly derivative(int var_id) const;
  Poly derivative(const std::string& name) const { return derivative(Vars::id(name)); }

  /// Substitute a polynomial for a variable (requires exponents >= 0 there).
  Poly subst(int var_id, const Poly& value) const;
  Poly subst(const std::string& name, const Poly& value) const {
    return subst(Vars::id(name), value);
  }
  /// Substitute an exact scalar; negative exponents need a nonzero value.
  Poly subst_scalar(int var_id, const Scalar& value) const;

  Scalar eval(const std::map<int, Scalar>& point) const;

  int degree(int var_id) const;       // max exponent, 0 for absent/zero poly
  int low_degree(int var_id) const;   // min exponent
  int max_total_degree() const;
  bool depends_on(int var_id) const;

  /// Collect coefficients of var^k for k in [lo, hi].
  Poly coefficient_of(int var_id, int k) const;

  /// Exact division; nullopt when o does not divide *this in the Laurent ring
  /// (negative leftover exponents on non-laurent variables also fail).
  std::optional<Poly> divide_exact(const Poly& o) const;

  std::string str() const;

private:
  void add_term(const Monomial& m, const Scalar& c);
  std::map<Monomial, Scalar> terms_;
};

inline Poly operator*(const Scalar& c, const Poly& p) { return p.scaled(c); }

/// Generalized binomial coefficient C(e, k) = e(e-1)...(e-k+1)/k! with a
/// polynomial exponent e; a polynomial in the parameters of e.
Poly binomial_poly(const Poly& e, int k);

Rational factorial(int n);

}  // namespace alt1
