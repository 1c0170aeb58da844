#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace alt1 {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Alt1Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Gaussian rational p/q + (u/v)*i. cpp_rational keeps fractions in lowest
/// terms with positive denominator, so equality is structural.
class Scalar {
public:
  Scalar() = default;
  Scalar(long n) : re_(n) {}
  Scalar(const Rational& re) : re_(re) {}
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
  static Scalar i() { return Scalar(Rational(0), Rational(1)); }
  static Scalar ratio(long num, long den) {
    if (den == 0) throw Alt1Error("Scalar: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Scalar(Rational(num, den));
  }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
  }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

  Scalar inverse() const {
    Rational n = re_ * re_ + im_ * im_;
    if (n == 0) throw Alt1Error("Scalar: division by zero");
    return Scalar(re_ / n, -im_ / n);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  Scalar pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r(1), b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

  double to_double() const {
    if (im_ != 0) throw Alt1Error("Scalar: complex value has no double image");
    return static_cast<double>(re_);
  }
  /// (re, im) as doubles, for the numeric flow test.
  std::pair<double, double> to_complex_double() const {
    return {static_cast<double>(re_), static_cast<double>(im_)};
  }

  std::string str() const;

private:
  Rational re_ = 0;
  Rational im_ = 0;
};

std::string rational_str(const Rational& r);

/// Parses "p/q" or "p" (exact, arbitrary precision).
Rational parse_rational(const std::string& s);

}  // namespace alt1
