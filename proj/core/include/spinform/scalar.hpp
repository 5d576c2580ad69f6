#pragma once

#include <gmpxx.h>

#include <string>

namespace spinform {

using Rational = mpq_class;

// Canonical rational from a num/den pair.
Rational rat(long num, long den = 1);

// Element of the field Q(i, sqrt2), stored as a rank-4 module over Q with
// fixed basis (1, i, sqrt2, i*sqrt2). Equality is componentwise; every
// arithmetic result is kept canonical (reduced fractions, positive
// denominators), so values compare exactly.
struct Scalar {
  Rational a, b, c, d;  // a + b*i + c*sqrt2 + d*i*sqrt2

  Scalar() : a(0), b(0), c(0), d(0) {}
  Scalar(Rational a_, Rational b_, Rational c_, Rational d_);

  static Scalar ofInt(long v);
  static Scalar ofRational(const Rational& v);
  static Scalar zero() { return Scalar(); }
  static Scalar one() { return ofInt(1); }
  static Scalar i();
  static Scalar sqrt2();
  static Scalar iSqrt2();
  static Scalar invSqrt2();  // sqrt2 / 2

  bool isZero() const;
  bool isReal() const;      // b = d = 0
  bool isRational() const;  // b = c = d = 0
};

bool operator==(const Scalar& x, const Scalar& y);
bool operator!=(const Scalar& x, const Scalar& y);

Scalar operator+(const Scalar& x, const Scalar& y);
Scalar operator-(const Scalar& x, const Scalar& y);
Scalar operator-(const Scalar& x);
Scalar operator*(const Scalar& x, const Scalar& y);
Scalar operator/(const Scalar& x, const Scalar& y);

Scalar& operator+=(Scalar& x, const Scalar& y);
Scalar& operator-=(Scalar& x, const Scalar& y);
Scalar& operator*=(Scalar& x, const Scalar& y);

// Complex conjugation a + bi + c*sqrt2 + d*i*sqrt2 -> a - bi + c*sqrt2 - d*i*sqrt2.
// A field automorphism fixing sqrt2.
Scalar conj(const Scalar& x);

// Real part a + c*sqrt2 and imaginary part b + d*sqrt2, both returned with
// zero i-components.
Scalar re(const Scalar& x);
Scalar im(const Scalar& x);

// Multiplicative inverse via the norm tower Q(i,sqrt2) -> Q(sqrt2) -> Q.
// Throws std::domain_error on zero input.
Scalar inv(const Scalar& x);

std::string toString(const Rational& q);
std::string toString(const Scalar& x);

}  // namespace spinform
