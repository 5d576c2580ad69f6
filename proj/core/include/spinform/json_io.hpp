#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "spinform/bilinear.hpp"
#include "spinform/frame.hpp"
#include "spinform/killing.hpp"

namespace spinform {

// Ordered JSON keeps every report byte-stable across runs.
using Json = nlohmann::ordered_json;

// Scalar: 4-tuple of "p/q" strings in basis order (1, i, sqrt2, i*sqrt2).
Json toJson(const Scalar& s);
// Spinor: [{indices: [generator indices], scalar: 4-tuple}], ascending bitset.
Json toJson(const Spinor& s);
// Form: {degree, terms: [{indices: [basis indices], scalar: 4-tuple}]}.
Json toJson(const Form& a);
// Endo: {dim, rows: dim x dim array of scalar 4-tuples}.
Json toJson(const Endo& t);

Json frameToJson(const SasakiFrame& f);
Json kernelToJson(int n, const std::string& opName, const KernelBasis& kb);
Json isotropyReportJson(int n, const std::string& space, int rank,
                        int expectedRank);
// matchedIndex is null when the recovery did not match any structure.
Json bilinearReportJson(const SasakiRecovery& rec, int n);

Scalar scalarFromJson(const Json& j);
Spinor spinorFromJson(const Json& j);

}  // namespace spinform
