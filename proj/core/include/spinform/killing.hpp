#pragma once

#include <vector>

#include "spinform/frame.hpp"
#include "spinform/linalg.hpp"
#include "spinform/report.hpp"

namespace spinform {

// Frame plus the Killing number lambda. Constructors accept +1/2 or -1/2;
// every shipped verification uses +1/2, the value forced by the vertical
// direction checks under this basis convention.
struct KillingConfig {
  SasakiFrame frame;
  Scalar lambda;
};

KillingConfig makeKillingConfig(int n);
KillingConfig makeKillingConfig(int n, const Scalar& lambda);

// Exact kernel basis in reduced echelon form over ascending monomials.
struct KernelBasis {
  std::vector<Spinor> spinors;
  int rank = 0;
};

// lambda X.psi + 1/2 sum_i xi_i.phi_i(X).psi for horizontal X; zero exactly
// on spinors satisfying the Killing equation in the direction X.
Spinor horizontalKillingOp(const KillingConfig& cfg, const CVector& X,
                           const Spinor& psi);
Spinor horizontalKillingOp(const KillingConfig& cfg, int basisIdx,
                           const Spinor& psi);

// 1/2 xi_j.xi_k.psi - lambda xi_i.psi for the even permutation (i, j, k);
// zero exactly on spinors satisfying the Killing equation in direction xi_i.
Spinor verticalKillingOp(const KillingConfig& cfg, int i, const Spinor& psi);

// Joint kernel of all horizontal and vertical Killing operators on the full
// 2^(2n-1)-dimensional spinor space. Rank n+1 for n >= 2 and 2 for n = 1.
KernelBasis killingKernel(const KillingConfig& cfg);

// (-2 phi_i(X) + xi_i.X - X.xi_i).psi; the joint kernel over all X cuts out
// the rank-2 subspace attached to the i-th structure.
Spinor eMinusOp(const SasakiFrame& f, int i, const CVector& X,
                const Spinor& psi);
KernelBasis eMinusKernel(const SasakiFrame& f, int i);

// Closed-form kernel bases: psi_{-1} and (i/n) psi_{n-1} for i = 1, and the
// factorial-weighted psi_k sums for i = 2, 3; which selects the 0 or 1 slot.
Spinor eMinusClosedForm(const SpinParams& p, int i, int which);

// xi_2 . Psi_{2,0} = Psi_{2,1}; xi_3 . Psi_{3,0} = i Psi_{3,1};
// xi_1 . Psi_{1,0} = i Psi_{1,0}; plus the dimension-3 pinning relations.
CheckReport xiShiftRelations(const SasakiFrame& f);

}  // namespace spinform
