#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spinform/scalar.hpp"
#include "spinform/spinor.hpp"

namespace spinform {

// Complexified tangent vector over the adapted orthonormal basis e_1..e_{4n-1};
// coeffs[i-1] is the coefficient of e_i. Real vectors have b = d = 0 in every
// coefficient.
struct CVector {
  std::vector<Scalar> coeffs;

  static CVector zero(const SpinParams& p);
  bool isZero() const;
  bool isReal() const;
};

CVector basisVec(const SpinParams& p, int i);
// x_j = (e_{2j} - i e_{2j+1}) / sqrt2 and y_j = (e_{2j} + i e_{2j+1}) / sqrt2.
CVector xVec(const SpinParams& p, int j);
CVector yVec(const SpinParams& p, int j);

CVector operator+(const CVector& v, const CVector& w);
CVector operator-(const CVector& v, const CVector& w);
CVector operator*(const Scalar& s, const CVector& v);
bool operator==(const CVector& v, const CVector& w);

// Bilinear extension of the metric (not Hermitian): g(e_i, e_j) = delta_ij.
Scalar gMetric(const CVector& v, const CVector& w);

// Exterior form over the adapted basis, homogeneous of fixed degree.
// Term keys are bitsets: bit i-1 set means e_i is a factor; the factors of a
// monomial key are read in ascending index order.
struct Form {
  int degree = 0;
  std::map<std::uint64_t, Scalar> terms;

  static Form zero(int degree);
  static Form unit();  // degree 0, coefficient 1
  bool isZero() const { return terms.empty(); }
  Scalar coeff(std::uint64_t key) const;
  void addTerm(std::uint64_t key, const Scalar& s);
};

bool operator==(const Form& a, const Form& b);
bool operator!=(const Form& a, const Form& b);
Form operator+(const Form& a, const Form& b);
Form operator-(const Form& a, const Form& b);
Form operator*(const Scalar& s, const Form& a);

// Degree-1 form dual to e_i.
Form basisForm(const SpinParams& p, int i);
Form wedge(const Form& a, const Form& b);
Form wedgePower(const Form& a, int k);
// Coefficient-wise complex conjugation (the basis is real).
Form conjForm(const Form& a);

// Interior products against the metric, bilinear in the vector.
Form contractBasis(int i, const Form& a);
Form contractVec(const CVector& v, const Form& a);

// Clifford multiplication by the basis vector e_i. e_1 acts by +i on even
// grades and -i on odd grades; under the generator map j = floor(i/2),
// e_{2j} acts by i(x_j contraction + y_j wedge) and e_{2j+1} by
// (y_j wedge - x_j contraction).
Spinor cliffE(const SpinParams& p, int i, const Spinor& psi);
Spinor cliffVec(const SpinParams& p, const CVector& v, const Spinor& psi);
// A monomial e_{i1}^...^e_{ik} (ascending) acts as e_{i1}. ... .e_{ik}.
Spinor cliffForm(const SpinParams& p, const Form& theta, const Spinor& psi);

// Matrix of a linear map on the tangent space: m[r][c] is the e_{r+1}
// coefficient of the image of e_{c+1}.
struct Endo {
  std::vector<std::vector<Scalar>> m;

  static Endo zero(int dim);
  static Endo identity(int dim);
  int dim() const { return static_cast<int>(m.size()); }
};

bool operator==(const Endo& a, const Endo& b);
Endo operator+(const Endo& a, const Endo& b);
Endo operator-(const Endo& a, const Endo& b);
Endo operator*(const Scalar& s, const Endo& a);
Endo compose(const Endo& a, const Endo& b);  // a after b
Endo commutator(const Endo& a, const Endo& b);
bool isSkew(const Endo& a);
CVector applyEndo(const Endo& t, const CVector& v);

// Fixed identification of 2-forms with skew maps: (a^b)(Y) = g(a,Y)b - g(b,Y)a,
// so the form coefficient on e_i^e_j (i<j) is the matrix entry m[j][i].
Form formFromSkew(const Endo& t);
Endo skewFromForm(const SpinParams& p, const Form& theta);

// Spin lift of a skew map: psi -> 1/2 sum_{i<j} theta_ij e_i.e_j.psi.
// Throws std::invalid_argument if t is not skew.
Spinor spinLift(const SpinParams& p, const Endo& t, const Spinor& psi);

// Derivation extension of a linear map to exterior forms:
// t(a^b) = t(a)^b + a^t(b).
Form soActionOnForm(const Endo& t, const Form& theta);

std::string toString(const Form& a);

}  // namespace spinform
