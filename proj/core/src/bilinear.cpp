#include "spinform/bilinear.hpp"

#include <stdexcept>

#include "spinform/killing.hpp"

namespace spinform {

namespace {

Scalar minusHalf() { return Scalar::ofRational(rat(-1, 2)); }

CVector sharpForm(const SpinParams& p, const Form& a) {
  if (a.degree != 1) {
    throw std::invalid_argument("sharpForm: degree-1 form required");
  }
  CVector v = CVector::zero(p);
  for (const auto& [key, s] : a.terms) {
    int idx = 0;
    std::uint64_t k = key;
    while (!(k & 1)) {
      k >>= 1;
      ++idx;
    }
    v.coeffs[idx] = s;
  }
  return v;
}

// Next bitset with the same popcount (Gosper).
std::uint64_t nextSubset(std::uint64_t v) {
  const std::uint64_t u = v & (~v + 1);
  const std::uint64_t w = v + u;
  return w | (((v ^ w) >> 2) / u);
}

}  // namespace

Form etaBilinear(const SasakiFrame& f, const Spinor& psi1, const Spinor& psi2) {
  const SpinParams& p = f.params;
  Form out = Form::zero(1);
  for (int t = 1; t <= p.dimV(); ++t) {
    const Scalar val = re(inner(psi1, cliffE(p, t, psi2)));
    if (!val.isZero()) out.addTerm(1ull << (t - 1), val);
  }
  return out;
}

Form dEtaBilinear(const SasakiFrame& f, const Scalar& lambda,
                  const Spinor& psi1, const Spinor& psi2) {
  const SpinParams& p = f.params;
  const Scalar twoLambda = Scalar::ofInt(2) * lambda;
  Form out = Form::zero(2);
  for (int t = 1; t <= p.dimV(); ++t) {
    const Spinor tPsi = cliffE(p, t, psi2);
    for (int s = t + 1; s <= p.dimV(); ++s) {
      const Spinor comm = cliffE(p, s, tPsi) - cliffE(p, t, cliffE(p, s, psi2));
      const Scalar val = twoLambda * re(inner(psi1, comm));
      if (!val.isZero()) {
        out.addTerm((1ull << (t - 1)) | (1ull << (s - 1)), val);
      }
    }
  }
  return out;
}

Form squaring(const SasakiFrame& f, int k, const Spinor& psi1,
              const Spinor& psi2) {
  const SpinParams& p = f.params;
  if (k < 0) throw std::invalid_argument("squaring: negative degree");
  Form out = Form::zero(k);
  if (k == 0) {
    out.addTerm(0, re(inner(psi1, psi2)));
    return out;
  }
  const std::uint64_t limit = 1ull << p.dimV();
  for (std::uint64_t key = (1ull << k) - 1; key < limit; key = nextSubset(key)) {
    Form mono = Form::zero(k);
    mono.addTerm(key, Scalar::one());
    const Scalar val = re(inner(cliffForm(p, mono, psi1), psi2));
    if (!val.isZero()) out.addTerm(key, val);
  }
  return out;
}

Endo phiFromDEta(const SasakiFrame& f, const Form& theta) {
  if (theta.degree != 2) {
    throw std::invalid_argument("phiFromDEta: degree-2 form required");
  }
  const SpinParams& p = f.params;
  Endo out = Endo::zero(p.dimV());
  for (int t = 1; t <= p.dimV(); ++t) {
    const Form col = contractBasis(t, theta);
    for (const auto& [key, s] : col.terms) {
      int r = 0;
      std::uint64_t k = key;
      while (!(k & 1)) {
        k >>= 1;
        ++r;
      }
      out.m[r][t - 1] = minusHalf() * s;
    }
  }
  return out;
}

SasakiRecovery recoverSasaki(const SasakiFrame& f, const Scalar& lambda, int i,
                             const Spinor& psi) {
  if (i < 1 || i > 3) {
    throw std::out_of_range("structure index must be 1, 2 or 3");
  }
  const SpinParams& p = f.params;
  SasakiRecovery rec;
  rec.normSq = inner(psi, psi);
  rec.report.expect(!rec.normSq.isZero(), "input spinor is nonzero");

  bool member = true;
  for (int t = 1; t <= p.dimV(); ++t) {
    if (!eMinusOp(f, i, basisVec(p, t), psi).isZero()) {
      member = false;
      break;
    }
  }
  rec.report.expect(member, "input lies in the rank-2 subspace");

  const Spinor psi2 = -cliffVec(p, f.xi[i - 1], psi);
  rec.eta = etaBilinear(f, psi, psi2);
  rec.dEta = dEtaBilinear(f, lambda, psi, psi2);
  rec.phi = phiFromDEta(f, rec.dEta);

  rec.report.expect(rec.eta == rec.normSq * f.eta[i - 1],
                    "1-form equals normSq * eta_i");
  rec.report.expect(rec.dEta == rec.normSq * f.dEta[i - 1],
                    "2-form equals normSq * dEta_i");
  rec.report.expect(rec.phi == rec.normSq * f.phi[i - 1],
                    "endomorphism equals normSq * phi_i");
  // The squaring forms take the translated spinor in the first slot.
  rec.report.expect(squaring(f, 2, psi2, psi) == (-rec.normSq) * f.Phi[i - 1],
                    "degree-2 squaring form equals -normSq * Phi_i");
  rec.report.expect(squaring(f, 1, psi2, psi) == rec.normSq * f.eta[i - 1],
                    "degree-1 squaring form recovers the Reeb dual");
  rec.report.expect(squaring(f, 1, psi, psi2) == (-Scalar::one()) * rec.eta,
                    "degree-1 squaring form equals -eta in the same slots");

  if (!rec.normSq.isZero()) {
    const CVector reeb =
        inv(rec.normSq) * sharpForm(p, rec.eta);
    rec.report.expect(reeb == f.xi[i - 1], "recovered Reeb field is xi_i");
    rec.report.expect(contractVec(reeb, rec.dEta).isZero(),
                      "Reeb contraction of the 2-form vanishes");
  }

  rec.structureIndex = rec.report.ok ? i : 0;
  return rec;
}

}  // namespace spinform
