#include "spinform/scalar.hpp"

#include <stdexcept>
#include <utility>

namespace spinform {

Rational rat(long num, long den) {
  if (den == 0) throw std::domain_error("rat: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Scalar::Scalar(Rational a_, Rational b_, Rational c_, Rational d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

Scalar Scalar::ofInt(long v) { return Scalar(Rational(v), 0, 0, 0); }
Scalar Scalar::ofRational(const Rational& v) { return Scalar(v, 0, 0, 0); }
Scalar Scalar::i() { return Scalar(0, 1, 0, 0); }
Scalar Scalar::sqrt2() { return Scalar(0, 0, 1, 0); }
Scalar Scalar::iSqrt2() { return Scalar(0, 0, 0, 1); }
Scalar Scalar::invSqrt2() { return Scalar(0, 0, rat(1, 2), 0); }

bool Scalar::isZero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
bool Scalar::isReal() const { return b == 0 && d == 0; }
bool Scalar::isRational() const { return b == 0 && c == 0 && d == 0; }

bool operator==(const Scalar& x, const Scalar& y) {
  return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}
bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

Scalar operator+(const Scalar& x, const Scalar& y) {
  return Scalar(x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d);
}
Scalar operator-(const Scalar& x, const Scalar& y) {
  return Scalar(x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d);
}
Scalar operator-(const Scalar& x) { return Scalar(-x.a, -x.b, -x.c, -x.d); }

// Basis products: i*i = -1, sqrt2*sqrt2 = 2, (i*sqrt2)^2 = -2,
// i*sqrt2 = (i*sqrt2), sqrt2*(i*sqrt2) = 2i, i*(i*sqrt2) = -sqrt2.
Scalar operator*(const Scalar& x, const Scalar& y) {
  return Scalar(
      x.a * y.a - x.b * y.b + 2 * x.c * y.c - 2 * x.d * y.d,
      x.a * y.b + x.b * y.a + 2 * x.c * y.d + 2 * x.d * y.c,
      x.a * y.c + x.c * y.a - x.b * y.d - x.d * y.b,
      x.a * y.d + x.d * y.a + x.b * y.c + x.c * y.b);
}

Scalar operator/(const Scalar& x, const Scalar& y) { return x * inv(y); }

Scalar& operator+=(Scalar& x, const Scalar& y) { x = x + y; return x; }
Scalar& operator-=(Scalar& x, const Scalar& y) { x = x - y; return x; }
Scalar& operator*=(Scalar& x, const Scalar& y) { x = x * y; return x; }

Scalar conj(const Scalar& x) { return Scalar(x.a, -x.b, x.c, -x.d); }
Scalar re(const Scalar& x) { return Scalar(x.a, 0, x.c, 0); }
Scalar im(const Scalar& x) { return Scalar(x.b, 0, x.d, 0); }

Scalar inv(const Scalar& x) {
  if (x.isZero()) throw std::domain_error("inv: zero scalar");
  // x * conj(x) lands in Q(sqrt2): u + v*sqrt2.
  Scalar m = x * conj(x);
  const Rational& u = m.a;
  const Rational& v = m.c;
  // (u + v*sqrt2)(u - v*sqrt2) = u^2 - 2v^2 is a nonzero rational.
  Rational norm = u * u - 2 * v * v;
  Scalar s = conj(x) * Scalar(u, 0, -v, 0);
  Rational ninv = 1 / norm;
  return Scalar(s.a * ninv, s.b * ninv, s.c * ninv, s.d * ninv);
}

std::string toString(const Rational& q) { return q.get_str(); }

namespace {

// Appends "+ coeff unit" with rational pretty-printing; empty coeff parts skipped.
void appendTerm(std::string& out, const Rational& q, const char* unit) {
  if (q == 0) return;
  Rational aq = abs(q);
  if (out.empty()) {
    if (q < 0) out += "-";
  } else {
    out += (q < 0) ? " - " : " + ";
  }
  bool coeffIsOne = (aq == 1) && unit[0] != '\0';
  if (!coeffIsOne) out += aq.get_str();
  if (unit[0] != '\0') {
    if (!coeffIsOne) out += "*";
    out += unit;
  }
}

}  // namespace

std::string toString(const Scalar& x) {
  std::string out;
  appendTerm(out, x.a, "");
  appendTerm(out, x.b, "i");
  appendTerm(out, x.c, "sqrt2");
  appendTerm(out, x.d, "i*sqrt2");
  if (out.empty()) out = "0";
  return out;
}

}  // namespace spinform
