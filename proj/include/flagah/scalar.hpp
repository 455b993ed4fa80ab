#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "flagah/rational.hpp"

namespace flagah {

// Element of the field Q(sqrt(m1), sqrt(m2), ...): a finite sum of terms
// q * sqrt(m) with q rational and m a square-free positive integer. The
// radicand m = 1 carries the rational part. Terms are kept sorted by
// radicand with no zero coefficients, so equality is structural.
class Scalar {
 public:
  using Term = std::pair<std::int64_t, Rational>;

  Scalar() = default;
  Scalar(const Rational& q);  // NOLINT(google-explicit-constructor)
  Scalar(long n) : Scalar(Rational(n)) {}  // NOLINT(google-explicit-constructor)
  Scalar(int n) : Scalar(Rational(n)) {}   // NOLINT(google-explicit-constructor)

  // q * sqrt(m); m is reduced to square-free form.
  static Scalar radical(const Rational& q, std::int64_t m);

  // The positive square root of q > 0, as (k/den)*sqrt(d) with d square-free.
  static Scalar sqrt_rational(const Rational& q);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  bool is_single_term() const { return terms_.size() == 1; }

  // rational part (coefficient of sqrt(1))
  Rational rational_part() const;

  // throws unless *this is rational
  Rational as_rational() const;

  const std::vector<Term>& terms() const { return terms_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  // 1/x for a single-term scalar q*sqrt(m); throws std::domain_error else.
  Scalar reciprocal() const;
  Scalar& operator/=(const Scalar& o) { return *this = *this * o.reciprocal(); }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // "a/b", "a/b*sqrt(m)", terms joined with "+" / "-"; "0" when empty.
  std::string str() const;

  // display-only decimal approximation, never used in computations
  double approx() const;

 private:
  void add_term(std::int64_t radicand, const Rational& coeff);

  std::vector<Term> terms_;
};

// square-free decomposition n = square * sqfree (n > 0)
struct SqfreeSplit {
  std::int64_t square_root;  // k with n = k^2 * sqfree
  std::int64_t sqfree;
};
SqfreeSplit squarefree_split(std::int64_t n);

// Complexified scalar re + i*im. Arithmetic is exact; equality structural.
class CScalar {
 public:
  CScalar() = default;
  CScalar(Scalar re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  CScalar(const Rational& q) : re_(q) {}      // NOLINT(google-explicit-constructor)
  CScalar(long n) : re_(Scalar(n)) {}         // NOLINT(google-explicit-constructor)
  CScalar(int n) : re_(Scalar(n)) {}          // NOLINT(google-explicit-constructor)
  CScalar(Scalar re, Scalar im) : re_(std::move(re)), im_(std::move(im)) {}

  static CScalar i() { return CScalar(Scalar(), Scalar(Rational(1))); }

  const Scalar& re() const { return re_; }
  const Scalar& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  CScalar conj() const { return CScalar(re_, -im_); }

  CScalar operator-() const { return CScalar(-re_, -im_); }
  CScalar& operator+=(const CScalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  CScalar& operator-=(const CScalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  friend CScalar operator+(CScalar a, const CScalar& b) { return a += b; }
  friend CScalar operator-(CScalar a, const CScalar& b) { return a -= b; }
  friend CScalar operator*(const CScalar& a, const CScalar& b) {
    return CScalar(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
  }
  CScalar& operator*=(const CScalar& o) { return *this = *this * o; }

  // defined whenever re^2 + im^2 is a single-term scalar
  CScalar reciprocal() const;
  CScalar& operator/=(const CScalar& o) { return *this = *this * o.reciprocal(); }
  friend CScalar operator/(CScalar a, const CScalar& b) { return a /= b; }

  friend bool operator==(const CScalar& a, const CScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const CScalar& a, const CScalar& b) { return !(a == b); }

  std::string str() const;

 private:
  Scalar re_, im_;
};

}  // namespace flagah
