#include "spinform/spinor.hpp"

#include <bit>
#include <stdexcept>

namespace spinform {

SpinParams::SpinParams(int n_) : n(n_) {
  if (n < 1) throw std::invalid_argument("SpinParams: n must be >= 1");
  if (n > 15) throw std::invalid_argument("SpinParams: n too large for 32-bit monomials");
}

int grade(Monomial m) { return std::popcount(m); }

std::string monomialName(Monomial m) {
  if (m == 0) return "1";
  std::string out;
  for (int j = 1; m != 0; ++j, m >>= 1) {
    if (m & 1u) {
      if (!out.empty()) out += "^";
      out += "y_" + std::to_string(j);
    }
  }
  return out;
}

Spinor Spinor::basis(Monomial m) {
  Spinor s;
  s.terms.emplace(m, Scalar::one());
  return s;
}

Scalar Spinor::coeff(Monomial m) const {
  auto it = terms.find(m);
  return it == terms.end() ? Scalar::zero() : it->second;
}

void Spinor::addTerm(Monomial m, const Scalar& s) {
  if (s.isZero()) return;
  auto [it, inserted] = terms.emplace(m, s);
  if (!inserted) {
    it->second += s;
    if (it->second.isZero()) terms.erase(it);
  }
}

bool operator==(const Spinor& x, const Spinor& y) { return x.terms == y.terms; }
bool operator!=(const Spinor& x, const Spinor& y) { return !(x == y); }

Spinor operator+(const Spinor& x, const Spinor& y) {
  Spinor out = x;
  for (const auto& [m, s] : y.terms) out.addTerm(m, s);
  return out;
}

Spinor operator-(const Spinor& x, const Spinor& y) {
  Spinor out = x;
  for (const auto& [m, s] : y.terms) out.addTerm(m, -s);
  return out;
}

Spinor operator-(const Spinor& x) {
  Spinor out;
  for (const auto& [m, s] : x.terms) out.terms.emplace(m, -s);
  return out;
}

Spinor operator*(const Scalar& s, const Spinor& x) {
  Spinor out;
  if (s.isZero()) return out;
  for (const auto& [m, t] : x.terms) out.terms.emplace(m, s * t);
  return out;
}

namespace {

void checkGenerator(const SpinParams& p, int j) {
  if (j < 1 || j > p.genCount())
    throw std::out_of_range("generator index out of range");
}

// Parity of the number of generators in m below index j.
int signBelow(Monomial m, int j) {
  Monomial below = m & ((1u << (j - 1)) - 1u);
  return (std::popcount(below) % 2 == 0) ? 1 : -1;
}

}  // namespace

Spinor wedge(const SpinParams& p, int j, const Spinor& psi) {
  checkGenerator(p, j);
  Monomial bit = 1u << (j - 1);
  Spinor out;
  for (const auto& [m, s] : psi.terms) {
    if (m & bit) continue;
    Scalar v = (signBelow(m, j) > 0) ? s : -s;
    out.terms.emplace(m | bit, v);
  }
  return out;
}

Spinor contract(const SpinParams& p, int j, const Spinor& psi) {
  checkGenerator(p, j);
  Monomial bit = 1u << (j - 1);
  Spinor out;
  for (const auto& [m, s] : psi.terms) {
    if (!(m & bit)) continue;
    Scalar v = (signBelow(m, j) > 0) ? s : -s;
    out.terms.emplace(m & ~bit, v);
  }
  return out;
}

Scalar inner(const Spinor& x, const Spinor& y) {
  // Iterate the smaller support.
  const Spinor& small = (x.terms.size() <= y.terms.size()) ? x : y;
  const Spinor& large = (&small == &x) ? y : x;
  Scalar out = Scalar::zero();
  for (const auto& [m, s] : small.terms) {
    auto it = large.terms.find(m);
    if (it == large.terms.end()) continue;
    out += (&small == &x) ? s * conj(it->second) : it->second * conj(s);
  }
  return out;
}

Spinor evenPart(const Spinor& x) {
  Spinor out;
  for (const auto& [m, s] : x.terms)
    if (grade(m) % 2 == 0) out.terms.emplace(m, s);
  return out;
}

Spinor oddPart(const Spinor& x) {
  Spinor out;
  for (const auto& [m, s] : x.terms)
    if (grade(m) % 2 == 1) out.terms.emplace(m, s);
  return out;
}

namespace {

// Sign of merging two disjoint ascending index sets: (-1)^(inversions).
int mergeSign(Monomial a, Monomial b) {
  int inversions = 0;
  for (Monomial t = b; t != 0; t &= t - 1) {
    int bitIdx = std::countr_zero(t);
    Monomial above = a >> (bitIdx + 1);
    inversions += std::popcount(above);
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace

Spinor wedgeProduct(const Spinor& x, const Spinor& y) {
  Spinor out;
  for (const auto& [ma, sa] : x.terms) {
    for (const auto& [mb, sb] : y.terms) {
      if (ma & mb) continue;
      Scalar v = sa * sb;
      if (mergeSign(ma, mb) < 0) v = -v;
      out.addTerm(ma | mb, v);
    }
  }
  return out;
}

Spinor omegaSpinor(const SpinParams& p) {
  Spinor out;
  for (int blk = 1; blk <= p.n - 1; ++blk) {
    Monomial m = (1u << (2 * blk - 1)) | (1u << (2 * blk));  // y_{2blk} ^ y_{2blk+1}
    out.terms.emplace(m, Scalar::one());
  }
  return out;
}

Spinor omegaPower(const SpinParams& p, int k) {
  if (k < -1) throw std::invalid_argument("omegaPower: k < -1");
  if (k == -1) return Spinor::zero();
  Spinor out = Spinor::unit();
  if (k == 0) return out;
  if (k >= p.n) return Spinor::zero();
  Spinor om = omegaSpinor(p);
  for (int t = 0; t < k; ++t) out = wedgeProduct(out, om);
  return out;
}

Spinor psiK(const SpinParams& p, int k) {
  if (k < -1 || k > p.n - 1) throw std::out_of_range("psiK: k out of range");
  if (p.n == 1) return (k == -1) ? Spinor::unit() : Spinor::basis(1u);
  Spinor hi = omegaPower(p, k + 1);
  Spinor lo = wedge(p, 1, omegaPower(p, k));
  return hi - Scalar(0, rat(k + 1), 0, 0) * lo;
}

std::string toString(const Spinor& x) {
  if (x.terms.empty()) return "0";
  std::string out;
  for (const auto& [m, s] : x.terms) {
    if (!out.empty()) out += " + ";
    out += "(" + toString(s) + ")";
    if (m != 0) out += "*" + monomialName(m);
  }
  return out;
}

}  // namespace spinform
