#pragma once

#include <vector>

#include "spinform/frame.hpp"
#include "spinform/linalg.hpp"
#include "spinform/report.hpp"

namespace spinform {

// Basis of sp(n-1) inside so(4n-1): quaternionic anti-Hermitian matrices over
// the horizontal blocks, acting by right quaternion multiplication so the
// action commutes with the left-multiplication phi_i. Deterministic order:
// off-diagonal E_{st}^u for s < t with u running over (1, i, j, k), then
// diagonal D_s^u with u over (i, j, k); (n-1)(2n-1) generators in total.
// Requires n >= 2.
std::vector<Endo> spBasis(const SpinParams& p);

// Skewness, vanishing on the vertical directions, commutation with every
// phi_i, right-multiplication composition rules on the diagonal blocks,
// nonpositive squares, annihilation of omega and y_1 under the spin lift,
// and Lie closure inside the span.
CheckReport isotropyAlgebraChecks(const SasakiFrame& f);

// Joint kernel of the lifted generators on the spinor space: rank 2n,
// spanned by omega^k and y_1 ^ omega^k for k = 0..n-1. The lifts are checked
// to preserve grade and y_1-degree, then the kernel is assembled per sector.
std::vector<Spinor> invariantSpinors(const SpinParams& p);

// Joint kernel of the derivation action on degree-k forms over the full
// adapted basis or the horizontal one. Degree caps keep the exterior space
// enumerable: k <= 4 for the full space, k <= 2(n-1) horizontal; oversized
// degrees throw with the limit in the message.
std::vector<Form> invariantForms(const SpinParams& p, int k,
                                 bool horizontalOnly);

// Wedge family eta_1^e1 ^ eta_2^e2 ^ eta_3^e3 ^ (Phi_1|_H)^a1 ^ (Phi_2|_H)^a2
// ^ (Phi_3|_H)^a3 of total degree k, nonzero members only, in lexicographic
// (e, a) order.
std::vector<Form> tauFamily(const SasakiFrame& f, int k);

// span{tau family of degree k} equals invariantForms(k, full), both
// inclusions exact.
CheckReport tauSpanCheck(const SasakiFrame& f, int k);

// Graded invariants among the y_1-free monomials: dimension 1 in even grades
// up to 2(n-1), spanned by omega^(grade/2), and 0 in odd grades.
CheckReport antiHolomorphicDims(const SpinParams& p);

// (a) Clifford products of invariant forms with invariant spinors stay
// invariant; (b) iterated Phi_2|_H products on 1 span {omega^k}, their xi_2
// translates span {y_1 ^ omega^k}, and Phi_1|_H products on 1 stay in
// span{1}; (c) tau products with 1 span the invariant spinor space.
CheckReport invariantProductCheck(const SasakiFrame& f);

}  // namespace spinform
