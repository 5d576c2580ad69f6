#pragma once

#include "spinform/frame.hpp"
#include "spinform/report.hpp"

namespace spinform {

// 1-form X -> Re<psi1, X.psi2> over the adapted basis.
Form etaBilinear(const SasakiFrame& f, const Spinor& psi1, const Spinor& psi2);

// Exterior derivative of that 1-form when (psi1, psi2) is a Killing pair:
// (X, Y) -> 2 lambda Re<psi1, (Y.X - X.Y).psi2>.
Form dEtaBilinear(const SasakiFrame& f, const Scalar& lambda,
                  const Spinor& psi1, const Spinor& psi2);

// Degree-k squaring form (X_1, ..., X_k) -> Re<(X_1^...^X_k).psi1, psi2>,
// the Clifford product acting on the first slot.
Form squaring(const SasakiFrame& f, int k, const Spinor& psi1,
              const Spinor& psi2);

// X -> -1/2 (X _| theta)^sharp for a 2-form theta, as an endomorphism.
Endo phiFromDEta(const SasakiFrame& f, const Form& theta);

// Structure tensors rebuilt from the bilinears of the pair (psi, -xi_i.psi)
// for psi in the i-th rank-2 subspace, together with the exact comparisons
// against normSq-scaled frame tensors. structureIndex echoes i when every
// comparison holds and is 0 otherwise.
struct SasakiRecovery {
  int structureIndex = 0;
  Scalar normSq;
  Form eta = Form::zero(1);
  Form dEta = Form::zero(2);
  Endo phi;
  CheckReport report;
};

SasakiRecovery recoverSasaki(const SasakiFrame& f, const Scalar& lambda, int i,
                             const Spinor& psi);

}  // namespace spinform
