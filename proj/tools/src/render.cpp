#include "render.hpp"

namespace spinform {

namespace {

// Monomial of the first k omega blocks y_2^y_3 ^ ... ^ y_{2k}^y_{2k+1}:
// generator bits 1..2k. omega^k carries coefficient k! on it.
Monomial blockMono(int k) { return (1u << (2 * k + 1)) - 2u; }

Rational factorial(int k) {
  Rational f(1);
  for (int j = 2; j <= k; ++j) f *= j;
  return f;
}

std::string omegaName(int k) {
  if (k == 0) return "1";
  if (k == 1) return "ω";
  return "ω^" + std::to_string(k);
}

std::string y1OmegaName(int k) {
  if (k == 0) return "y_1";
  if (k == 1) return "y_1∧ω";
  return "y_1∧ω^" + std::to_string(k);
}

// Appends "coeff name" with sign pulled out front. Rational and purely
// imaginary rational coefficients render as "3/2" / "3/2 i"; anything with a
// sqrt2 part falls back to a parenthesized scalar.
void appendTerm(std::string& out, const Scalar& coeff, const std::string& name,
                bool& first) {
  Scalar mag = coeff;
  std::string unit;
  bool negative = false;
  if (coeff.isRational()) {
    if (coeff.a < 0) {
      negative = true;
      mag = -coeff;
    }
  } else if (coeff.a == 0 && coeff.c == 0 && coeff.d == 0) {
    unit = "i";
    mag = Scalar::ofRational(coeff.b);
    if (coeff.b < 0) {
      negative = true;
      mag = -mag;
    }
  } else {
    unit = "(" + toString(coeff) + ")";
    mag = Scalar::one();
  }

  out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
  first = false;

  std::string pieces;
  if (mag != Scalar::one()) pieces = toString(mag.a);
  if (!unit.empty()) {
    if (!pieces.empty()) pieces += " ";
    pieces += unit;
  }
  if (name != "1") {
    if (!pieces.empty()) pieces += " ";
    pieces += name;
  }
  out += pieces.empty() ? "1" : pieces;
}

}  // namespace

std::optional<OmegaDecomp> decomposeOmega(const SpinParams& p,
                                          const Spinor& s) {
  OmegaDecomp dec;
  dec.c.resize(static_cast<std::size_t>(p.n));
  dec.d.resize(static_cast<std::size_t>(p.n));
  Spinor rebuilt;
  for (int k = 0; k < p.n; ++k) {
    const Scalar kFactInv = Scalar::ofRational(1 / factorial(k));
    dec.c[static_cast<std::size_t>(k)] = kFactInv * s.coeff(blockMono(k));
    dec.d[static_cast<std::size_t>(k)] = kFactInv * s.coeff(blockMono(k) | 1u);
    rebuilt = rebuilt + dec.c[static_cast<std::size_t>(k)] * omegaPower(p, k) +
              dec.d[static_cast<std::size_t>(k)] * wedge(p, 1, omegaPower(p, k));
  }
  if (rebuilt != s) return std::nullopt;
  return dec;
}

std::string renderOmega(const SpinParams& p, const Spinor& s) {
  if (s.isZero()) return "0";
  auto dec = decomposeOmega(p, s);
  if (!dec) return toString(s);
  std::string out;
  bool first = true;
  for (int k = 0; k < p.n; ++k)
    if (!dec->c[static_cast<std::size_t>(k)].isZero())
      appendTerm(out, dec->c[static_cast<std::size_t>(k)], omegaName(k), first);
  for (int k = 0; k < p.n; ++k)
    if (!dec->d[static_cast<std::size_t>(k)].isZero())
      appendTerm(out, dec->d[static_cast<std::size_t>(k)], y1OmegaName(k), first);
  return out;
}

}  // namespace spinform
