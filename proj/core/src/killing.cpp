#include "spinform/killing.hpp"

#include <stdexcept>
#include <utility>

namespace spinform {

namespace {

Scalar half() { return Scalar::ofRational(rat(1, 2)); }

void requireStructureIndex(int i) {
  if (i < 1 || i > 3) {
    throw std::out_of_range("structure index must be 1, 2 or 3");
  }
}

long factorial(int m) {
  long f = 1;
  for (int t = 2; t <= m; ++t) {
    f *= t;
  }
  return f;
}

}  // namespace

KillingConfig makeKillingConfig(int n) { return makeKillingConfig(n, half()); }

KillingConfig makeKillingConfig(int n, const Scalar& lambda) {
  return KillingConfig{buildFrame(n), lambda};
}

Spinor horizontalKillingOp(const KillingConfig& cfg, const CVector& X,
                           const Spinor& psi) {
  if (!isHorizontal(X)) {
    throw std::invalid_argument("horizontalKillingOp: direction not horizontal");
  }
  const SpinParams& p = cfg.frame.params;
  Spinor out = cfg.lambda * cliffVec(p, X, psi);
  for (int i = 0; i < 3; ++i) {
    CVector phiX = applyEndo(cfg.frame.phi[i], X);
    if (phiX.isZero()) continue;
    out = out + half() * cliffVec(p, cfg.frame.xi[i], cliffVec(p, phiX, psi));
  }
  return out;
}

Spinor horizontalKillingOp(const KillingConfig& cfg, int basisIdx,
                           const Spinor& psi) {
  return horizontalKillingOp(cfg, basisVec(cfg.frame.params, basisIdx), psi);
}

Spinor verticalKillingOp(const KillingConfig& cfg, int i, const Spinor& psi) {
  requireStructureIndex(i);
  const int j = i % 3 + 1;
  const int k = j % 3 + 1;
  const SpinParams& p = cfg.frame.params;
  const auto& xi = cfg.frame.xi;
  Spinor out = half() * cliffVec(p, xi[j - 1], cliffVec(p, xi[k - 1], psi));
  return out - cfg.lambda * cliffVec(p, xi[i - 1], psi);
}

KernelBasis killingKernel(const KillingConfig& cfg) {
  const SpinParams& p = cfg.frame.params;
  std::vector<SpinorOp> ops;
  for (int i = 1; i <= 3; ++i) {
    ops.push_back(
        [&cfg, i](const Spinor& s) { return verticalKillingOp(cfg, i, s); });
  }
  for (int h = 4; h <= p.dimV(); ++h) {
    ops.push_back(
        [&cfg, h](const Spinor& s) { return horizontalKillingOp(cfg, h, s); });
  }
  std::vector<Spinor> basis = jointKernel(p, ops);
  const int rank = static_cast<int>(basis.size());
  return KernelBasis{std::move(basis), rank};
}

Spinor eMinusOp(const SasakiFrame& f, int i, const CVector& X,
                const Spinor& psi) {
  requireStructureIndex(i);
  const SpinParams& p = f.params;
  const CVector phiX = applyEndo(f.phi[i - 1], X);
  Spinor out = Scalar::ofInt(-2) * cliffVec(p, phiX, psi);
  out = out + cliffVec(p, f.xi[i - 1], cliffVec(p, X, psi));
  return out - cliffVec(p, X, cliffVec(p, f.xi[i - 1], psi));
}

KernelBasis eMinusKernel(const SasakiFrame& f, int i) {
  requireStructureIndex(i);
  const SpinParams& p = f.params;
  std::vector<SpinorOp> ops;
  for (int t = 1; t <= p.dimV(); ++t) {
    CVector X = basisVec(p, t);
    ops.push_back([&f, i, X](const Spinor& s) { return eMinusOp(f, i, X, s); });
  }
  std::vector<Spinor> basis = jointKernel(p, ops);
  const int rank = static_cast<int>(basis.size());
  return KernelBasis{std::move(basis), rank};
}

Spinor eMinusClosedForm(const SpinParams& p, int i, int which) {
  requireStructureIndex(i);
  if (which != 0 && which != 1) {
    throw std::invalid_argument("eMinusClosedForm: which must be 0 or 1");
  }
  if (i == 1) {
    if (which == 0) return psiK(p, -1);
    return wedge(p, 1, omegaPower(p, p.n - 1));
  }
  Spinor out;
  if (which == 0) {
    for (int k = 0; 2 * k <= p.n - 1; ++k) {
      const long sign = (i == 2 && k % 2 == 1) ? -1 : 1;
      out = out +
            Scalar::ofRational(rat(sign, factorial(2 * k + 1))) * psiK(p, 2 * k);
    }
  } else {
    for (int k = 0; 2 * k <= p.n; ++k) {
      const long sign = (i == 2 && k % 2 == 1) ? -1 : 1;
      out = out +
            Scalar::ofRational(rat(sign, factorial(2 * k))) * psiK(p, 2 * k - 1);
    }
  }
  return out;
}

CheckReport xiShiftRelations(const SasakiFrame& f) {
  CheckReport rep;
  const SpinParams& p = f.params;
  const Scalar I = Scalar::i();
  auto xiAct = [&](int i, const Spinor& s) {
    return cliffVec(p, f.xi[i - 1], s);
  };
  if (p.n == 1) {
    const Spinor psiM1 = psiK(p, -1);
    const Spinor psi0 = psiK(p, 0);
    rep.expect(xiAct(1, psiM1) == I * psiM1, "xi_1.psi_{-1} = i psi_{-1}");
    rep.expect(xiAct(1, psi0) == (-I) * psi0, "xi_1.psi_0 = -i psi_0");
    rep.expect(xiAct(2, psiM1) == I * psi0, "xi_2.psi_{-1} = i psi_0");
    rep.expect(xiAct(3, psiM1) == psi0, "xi_3.psi_{-1} = psi_0");
    return rep;
  }
  const Spinor p10 = eMinusClosedForm(p, 1, 0);
  const Spinor p11 = eMinusClosedForm(p, 1, 1);
  rep.expect(xiAct(1, p10) == I * p10, "xi_1.Psi_{1,0} = i Psi_{1,0}");
  rep.expect(xiAct(1, p11) == (-I) * p11, "xi_1.Psi_{1,1} = -i Psi_{1,1}");
  rep.expect(xiAct(2, eMinusClosedForm(p, 2, 0)) == eMinusClosedForm(p, 2, 1),
             "xi_2.Psi_{2,0} = Psi_{2,1}");
  rep.expect(
      xiAct(3, eMinusClosedForm(p, 3, 0)) == I * eMinusClosedForm(p, 3, 1),
      "xi_3.Psi_{3,0} = i Psi_{3,1}");
  return rep;
}

}  // namespace spinform
