#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "spinform/scalar.hpp"

namespace spinform {

// Model size parameter. n >= 1 is the quaternionic parameter: the underlying
// space has dimension 4n-1, the exterior module is generated by y_1..y_{2n-1},
// and the spinor space has complex dimension 2^(2n-1).
struct SpinParams {
  int n;

  explicit SpinParams(int n_);

  int m() const { return 2 * n; }
  int genCount() const { return 2 * n - 1; }
  int dimV() const { return 4 * n - 1; }
  std::uint32_t spinorDim() const { return 1u << genCount(); }
};

// Wedge monomial over the generators: bit j-1 set means y_j is present.
// The bitset value doubles as the deterministic ordering key.
using Monomial = std::uint32_t;

int grade(Monomial m);
std::string monomialName(Monomial m);  // "1", "y_1", "y_1^y_3", ...

// Finitely supported Scalar combination of monomials. Canonical sparse form:
// zero coefficients are never stored, so equality is map equality. Monomial
// bitsets carry no model size; operations that need one take SpinParams.
struct Spinor {
  std::map<Monomial, Scalar> terms;

  static Spinor zero() { return Spinor{}; }
  static Spinor basis(Monomial m);
  static Spinor unit() { return basis(0); }

  bool isZero() const { return terms.empty(); }
  Scalar coeff(Monomial m) const;
  void addTerm(Monomial m, const Scalar& s);  // accumulate, dropping zeros
};

bool operator==(const Spinor& x, const Spinor& y);
bool operator!=(const Spinor& x, const Spinor& y);
Spinor operator+(const Spinor& x, const Spinor& y);
Spinor operator-(const Spinor& x, const Spinor& y);
Spinor operator-(const Spinor& x);
Spinor operator*(const Scalar& s, const Spinor& x);

// Creation operator y_j ^ psi. Sign: (-1)^(number of present generators < j).
Spinor wedge(const SpinParams& p, int j, const Spinor& psi);
// Annihilation operator x_j _| psi, the adjoint of wedge(j).
Spinor contract(const SpinParams& p, int j, const Spinor& psi);

// Hermitian inner product with the monomials orthonormal; linear in the
// first slot, conjugate-linear in the second.
Scalar inner(const Spinor& x, const Spinor& y);

Spinor evenPart(const Spinor& x);
Spinor oddPart(const Spinor& x);

// Exterior product of two spinors read as forms in the y-generators.
Spinor wedgeProduct(const Spinor& x, const Spinor& y);

// omega = sum_{p=1}^{n-1} y_{2p} ^ y_{2p+1}; omegaPower(k) = omega^k with the
// conventions omega^{-1} = 0 and omega^0 = 1. Vanishes for k >= n.
Spinor omegaSpinor(const SpinParams& p);
Spinor omegaPower(const SpinParams& p, int k);

// psi_k = omega^{k+1} - i(k+1) y_1 ^ omega^k for -1 <= k <= n-1.
// For n = 1 the fixed convention is psi_{-1} = 1, psi_0 = y_1.
Spinor psiK(const SpinParams& p, int k);

std::string toString(const Spinor& x);

}  // namespace spinform
