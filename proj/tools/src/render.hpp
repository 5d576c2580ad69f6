#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinform/spinor.hpp"

namespace spinform {

// Coordinates of a spinor in the basis {omega^k, y_1 ^ omega^k}, k = 0..n-1;
// empty when the spinor lies outside that span.
struct OmegaDecomp {
  std::vector<Scalar> c;  // omega^k coefficients
  std::vector<Scalar> d;  // y_1 ^ omega^k coefficients
};

std::optional<OmegaDecomp> decomposeOmega(const SpinParams& p,
                                          const Spinor& s);

// Renders in the omega notation with all omega^k terms first (ascending k),
// then the y_1 ^ omega^k terms: "1 - 1/2 ω^2 + i y_1∧ω". Falls back to the
// monomial expansion for spinors outside the invariant span.
std::string renderOmega(const SpinParams& p, const Spinor& s);

}  // namespace spinform
