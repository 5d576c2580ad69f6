#pragma once

#include <vector>

#include "spinform/clifford.hpp"
#include "spinform/report.hpp"
#include "spinform/spinor.hpp"

namespace spinform {

// Structure tensors of the model quaternionic contact tangent space at a
// point, over the adapted orthonormal basis: the three Reeb directions are
// e_1, e_2, e_3 and each horizontal block (e_{4p}, e_{4p+1}, e_{4p+2},
// e_{4p+3}) is identified with the quaternions (1, i, j, k). The phi_i act on
// blocks as left multiplication by i, j, k; Phi_i(X, Y) = g(X, phi_i(Y)).
struct SasakiFrame {
  SpinParams params;
  std::vector<CVector> xi;    // xi_1..xi_3 = e_1..e_3
  std::vector<Form> eta;      // degree-1 duals
  std::vector<Endo> phi;      // structure endomorphisms
  std::vector<Form> Phi;      // fundamental 2-forms
  Form Phi0;                  // sum_p (e_{4p}^e_{4p+1} - e_{4p+2}^e_{4p+3})
  std::vector<Form> dEta;     // 2 Phi_i
  Form torsion;               // sum_i eta_i ^ dEta_i
};

SasakiFrame buildFrame(int n);

bool isVerticalIndex(int i);                    // i in {1, 2, 3}
bool isHorizontal(const CVector& v);            // supported on e_4..e_{4n-1}
Form horizontalPart(const Form& a);             // drop terms touching e_1..e_3

// The spinor y_1 and the 2-form sum read back as forms over the e-basis:
// y_j as a 1-form is (e_{2j} + i e_{2j+1}) / sqrt2.
Form yBasisForm(const SpinParams& p, int j);

// All frame identities: adapted-basis columns, phi_i^2 = -Id + eta_i (x) xi_i,
// quaternionic composition rules, Reeb cross-action, skewness, vertical
// orthogonality, and the dEta_1(e_4, e_5) = -2 sign pin.
CheckReport frameInvariantChecks(const SasakiFrame& f);

// -1/2 (Phi_2|_H + i Phi_3|_H) equals sum_p y_{2p}^y_{2p+1} as forms;
// (1/sqrt2)(eta_2 + i eta_3) equals y_1 as a form; the conjugate pairing of
// the two mixed-type combinations. Requires n >= 2.
CheckReport omegaFormIdentityCheck(const SasakiFrame& f);

// 1/4 (X _| torsion) acts on spinors exactly as
// 1/2 sum_i xi_i . phi_i(X) . for every horizontal basis X. Requires n >= 2.
CheckReport horizontalTorsionCheck(const SasakiFrame& f);

// Shared probe set for operator-equality checks: all monomials up to grade 3
// (every monomial when the generator count is small) plus a few dense
// pseudo-random spinors from a fixed seed.
std::vector<Spinor> probeSpinors(const SpinParams& p);

}  // namespace spinform
