#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "spinform/scalar.hpp"
#include "spinform/spinor.hpp"

namespace spinform {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;  // row-major, rectangular

// In-place reduced row echelon form with leading coefficients normalized to 1.
// Columns are processed in ascending order and the pivot is the first row with
// a nonzero entry, so the result is canonical for a fixed row order.
// Returns the pivot column of each pivot row.
std::vector<int> rref(Mat& m);

int rankOf(Mat m);

// Basis of the right nullspace, one vector per row, one per free column in
// ascending column order (entry 1 at the free column).
Mat kernelBasisOf(const Mat& m);

// Row space membership tests against a fixed echelonized basis.
struct Echelon {
  Mat rows;
  std::vector<int> pivots;
};
Echelon makeEchelon(Mat m);
// Residual of v after eliminating all pivot coordinates; zero iff v lies in
// the row span.
Vec reduceAgainst(const Echelon& e, Vec v);
bool inSpan(const Echelon& e, const Vec& v);
bool spanEquals(const Mat& a, const Mat& b);

// Sparse exact vectors keyed by basis labels (monomial bitsets).
using Key = std::uint64_t;
using SparseVec = std::map<Key, Scalar>;
using SparseOp = std::function<SparseVec(const SparseVec&)>;

void sparseAdd(SparseVec& into, const SparseVec& v, const Scalar& scale);

// Joint kernel of linear operators on span{basisKeys}, computed incrementally:
// the candidate basis starts as all of basisKeys and is cut down by the
// kernel of each operator in turn. The returned basis is in reduced echelon
// form over ascending keys with leading coefficient 1.
std::vector<SparseVec> jointKernelSparse(const std::vector<Key>& basisKeys,
                                         const std::vector<SparseOp>& ops);

bool sparseInSpan(const std::vector<SparseVec>& basis, const SparseVec& v);
bool sparseSpanEquals(const std::vector<SparseVec>& a,
                      const std::vector<SparseVec>& b);

// Spinor front end: the sparse keys are the monomial bitsets.
SparseVec toSparse(const Spinor& s);
Spinor fromSparse(const SparseVec& v);

using SpinorOp = std::function<Spinor(const Spinor&)>;

// Joint kernel on the full 2^(2n-1)-dimensional spinor space.
std::vector<Spinor> jointKernel(const SpinParams& p,
                                const std::vector<SpinorOp>& ops);
// Joint kernel on the span of the given monomials (the operators must
// preserve that span).
std::vector<Spinor> jointKernelOn(const std::vector<Monomial>& monomials,
                                  const std::vector<SpinorOp>& ops);

bool spinorInSpan(const std::vector<Spinor>& basis, const Spinor& v);
bool spinorSpanEquals(const std::vector<Spinor>& a,
                      const std::vector<Spinor>& b);

}  // namespace spinform
