#pragma once

#include "alt1/poly.hpp"

namespace alt1 {

/// Quotient of two PolyExp values. Canonical form is best-effort (monomial
/// content and exact-division cancellation); equality is decided by
/// cross-multiplication, which is exact regardless.
class RFn {
public:
  RFn() : num_(Poly::zero()), den_(Poly::one()) {}
  RFn(Poly p) : num_(std::move(p)), den_(Poly::one()) {}
  RFn(long n) : num_(Poly(n)), den_(Poly::one()) {}
  RFn(Poly num, Poly den);

  static RFn zero() { return RFn(); }
  static RFn one() { return RFn(Poly::one()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == Poly::one(); }

  RFn operator-() const;
  friend RFn operator+(const RFn& a, const RFn& b);
  friend RFn operator-(const RFn& a, const RFn& b);
  friend RFn operator*(const RFn& a, const RFn& b);
  friend RFn operator/(const RFn& a, const RFn& b);
  RFn& operator+=(const RFn& o) { return *this = *this + o; }
  RFn& operator-=(const RFn& o) { return *this = *this - o; }
  RFn& operator*=(const RFn& o) { return *this = *this * o; }
  RFn& operator/=(const RFn& o) { return *this = *this / o; }

  RFn inverse() const;
  RFn derivative(int var_id) const;
  RFn derivative(const std::string& v) const { return derivative(Vars::id(v)); }
  RFn subst(int var_id, const Poly& value) const { return RFn(num_.subst(var_id, value), den_.subst(var_id, value)); }

  /// Exact equality as rational functions (cross-multiplication).
  friend bool operator==(const RFn& a, const RFn& b) {
    return (a.num_ * b.den_) == (b.num_ * a.den_);
  }
  friend bool operator!=(const RFn& a, const RFn& b) { return !(a == b); }

  Scalar eval(const std::map<int, Scalar>& point) const;

  std::string str() const;

private:
  void normalize();
  Poly num_, den_;
};

inline RFn rfn_var(const std::string& name) { return RFn(Poly::var(name)); }

}  // namespace alt1
