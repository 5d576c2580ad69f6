#include "spinform/frame.hpp"

#include <random>
#include <stdexcept>

namespace spinform {

namespace {

// Columns of the left-multiplication maps L_i, L_j, L_k on one quaternionic
// block under (1, i, j, k); entry [r][c] is the e-basis coefficient.
constexpr int kLeftI[4][4] = {{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}};
constexpr int kLeftJ[4][4] = {{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}};
constexpr int kLeftK[4][4] = {{0, 0, 0, -1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}};

void fillBlock(Endo& t, int base, const int block[4][4]) {
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (block[r][c] != 0)
        t.m[static_cast<std::size_t>(base + r)][static_cast<std::size_t>(base + c)] =
            Scalar::ofInt(block[r][c]);
}

}  // namespace

SasakiFrame buildFrame(int n) {
  SpinParams p(n);
  const int dim = p.dimV();
  SasakiFrame f{p, {}, {}, {}, {}, Form::zero(2), {}, Form::zero(3)};

  for (int i = 1; i <= 3; ++i) {
    f.xi.push_back(basisVec(p, i));
    f.eta.push_back(basisForm(p, i));
  }

  // Vertical action: phi_i(xi_j) = xi_k and phi_i(xi_k) = -xi_j for even
  // permutations (i, j, k); phi_i(xi_i) = 0.
  for (int i = 1; i <= 3; ++i) {
    Endo t = Endo::zero(dim);
    int j = i % 3 + 1, k = j % 3 + 1;
    t.m[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)] = Scalar::one();
    t.m[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)] = -Scalar::one();
    f.phi.push_back(std::move(t));
  }

  for (int blk = 1; blk <= n - 1; ++blk) {
    int base = 4 * blk - 1;  // 0-based column of e_{4 blk}
    fillBlock(f.phi[0], base, kLeftI);
    fillBlock(f.phi[1], base, kLeftJ);
    fillBlock(f.phi[2], base, kLeftK);
  }

  for (int i = 0; i < 3; ++i) {
    Form Phi = Form::zero(2);
    for (int r = 0; r < dim; ++r)
      for (int c = r + 1; c < dim; ++c)
        Phi.addTerm((std::uint64_t{1} << r) | (std::uint64_t{1} << c),
                    f.phi[static_cast<std::size_t>(i)].m[static_cast<std::size_t>(r)]
                                                        [static_cast<std::size_t>(c)]);
    f.Phi.push_back(Phi);
    f.dEta.push_back(Scalar::ofInt(2) * Phi);
  }

  for (int blk = 1; blk <= n - 1; ++blk) {
    int base = 4 * blk - 1;
    f.Phi0.addTerm((std::uint64_t{1} << base) | (std::uint64_t{1} << (base + 1)),
                   Scalar::one());
    f.Phi0.addTerm((std::uint64_t{1} << (base + 2)) | (std::uint64_t{1} << (base + 3)),
                   -Scalar::one());
  }

  for (int i = 0; i < 3; ++i)
    f.torsion = f.torsion + wedge(f.eta[static_cast<std::size_t>(i)],
                                  f.dEta[static_cast<std::size_t>(i)]);
  return f;
}

bool isVerticalIndex(int i) { return i >= 1 && i <= 3; }

bool isHorizontal(const CVector& v) {
  for (int i = 0; i < 3 && i < static_cast<int>(v.coeffs.size()); ++i)
    if (!v.coeffs[static_cast<std::size_t>(i)].isZero()) return false;
  return true;
}

Form horizontalPart(const Form& a) {
  Form out = Form::zero(a.degree);
  for (const auto& [k, s] : a.terms)
    if ((k & 0x7u) == 0) out.terms.emplace(k, s);
  return out;
}

Form yBasisForm(const SpinParams& p, int j) {
  Form out = Form::zero(1);
  out.addTerm(std::uint64_t{1} << (2 * j - 1), Scalar(0, 0, rat(1, 2), 0));
  out.addTerm(std::uint64_t{1} << (2 * j), Scalar(0, 0, 0, rat(1, 2)));
  return out;
}

CheckReport frameInvariantChecks(const SasakiFrame& f) {
  CheckReport rep;
  const SpinParams& p = f.params;
  const int dim = p.dimV();

  for (int i = 1; i <= 3; ++i)
    rep.expect(f.xi[static_cast<std::size_t>(i - 1)] == basisVec(p, i),
               "xi_" + std::to_string(i) + " is e_" + std::to_string(i));

  // Adapted-basis columns e_{4p+i} = phi_i(e_{4p}).
  for (int blk = 1; blk <= p.n - 1; ++blk)
    for (int i = 1; i <= 3; ++i) {
      CVector img = applyEndo(f.phi[static_cast<std::size_t>(i - 1)], basisVec(p, 4 * blk));
      rep.expect(img == basisVec(p, 4 * blk + i),
                 "phi_" + std::to_string(i) + "(e_" + std::to_string(4 * blk) +
                     ") = e_" + std::to_string(4 * blk + i));
    }

  for (int i = 1; i <= 3; ++i) {
    const Endo& phi = f.phi[static_cast<std::size_t>(i - 1)];
    Endo sq = compose(phi, phi);
    Endo expected = -Scalar::one() * Endo::identity(dim);
    expected.m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i - 1)] +=
        Scalar::one();  // eta_i (x) xi_i
    rep.expect(sq == expected, "phi_" + std::to_string(i) + "^2 = -Id + eta (x) xi");
    rep.expect(isSkew(phi), "phi_" + std::to_string(i) + " skew");

    bool imageOrthogonal = true;
    for (int c = 0; c < dim; ++c)
      if (!phi.m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(c)].isZero())
        imageOrthogonal = false;
    rep.expect(imageOrthogonal, "Im(phi_" + std::to_string(i) + ") orthogonal to xi");
  }

  // phi_i = phi_j phi_k - eta_k (x) xi_j for even permutations.
  for (int i = 1; i <= 3; ++i) {
    int j = i % 3 + 1, k = j % 3 + 1;
    Endo rhs = compose(f.phi[static_cast<std::size_t>(j - 1)],
                       f.phi[static_cast<std::size_t>(k - 1)]);
    rhs.m[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)] -= Scalar::one();
    rep.expect(f.phi[static_cast<std::size_t>(i - 1)] == rhs,
               "phi_" + std::to_string(i) + " = phi_" + std::to_string(j) + " phi_" +
                   std::to_string(k) + " - eta (x) xi");
  }

  // Reeb cross-action and eta(xi) pairing.
  for (int i = 1; i <= 3; ++i) {
    int j = i % 3 + 1, k = j % 3 + 1;
    const Endo& phi = f.phi[static_cast<std::size_t>(i - 1)];
    rep.expect(applyEndo(phi, f.xi[static_cast<std::size_t>(i - 1)]).isZero(),
               "phi_i(xi_i) = 0");
    rep.expect(applyEndo(phi, f.xi[static_cast<std::size_t>(j - 1)]) ==
                   f.xi[static_cast<std::size_t>(k - 1)],
               "phi_i(xi_j) = xi_k");
    rep.expect(applyEndo(phi, f.xi[static_cast<std::size_t>(k - 1)]) ==
                   -Scalar::one() * f.xi[static_cast<std::size_t>(j - 1)],
               "phi_i(xi_k) = -xi_j");
    for (int t = 1; t <= 3; ++t) {
      Scalar pairing = f.eta[static_cast<std::size_t>(i - 1)].coeff(std::uint64_t{1} << (t - 1));
      rep.expect(pairing == (i == t ? Scalar::one() : Scalar::zero()), "eta_i(xi_j) = delta");
    }
  }

  if (p.n >= 2) {
    Scalar v = f.dEta[0].coeff((std::uint64_t{1} << 3) | (std::uint64_t{1} << 4));
    rep.expect(v == Scalar::ofInt(-2), "dEta_1(e_4, e_5) = -2");
  }
  return rep;
}

CheckReport omegaFormIdentityCheck(const SasakiFrame& f) {
  CheckReport rep;
  const SpinParams& p = f.params;
  if (p.n < 2) {
    rep.expect(false, "omega form identity needs n >= 2");
    return rep;
  }

  Form phi2H = horizontalPart(f.Phi[1]);
  Form phi3H = horizontalPart(f.Phi[2]);
  Form lhs = Scalar(rat(-1, 2), 0, 0, 0) * (phi2H + Scalar::i() * phi3H);

  Form omegaAsForm = Form::zero(2);
  for (int blk = 1; blk <= p.n - 1; ++blk)
    omegaAsForm = omegaAsForm +
                  wedge(yBasisForm(p, 2 * blk), yBasisForm(p, 2 * blk + 1));
  rep.expect(lhs == omegaAsForm, "-1/2 (Phi_2|_H + i Phi_3|_H) = omega");

  Form y1 = yBasisForm(p, 1);
  Form vertical = Scalar::invSqrt2() * (f.eta[1] + Scalar::i() * f.eta[2]);
  rep.expect(vertical == y1, "(eta_2 + i eta_3) / sqrt2 = y_1");

  Form type01 = phi2H + Scalar::i() * phi3H;
  Form type10 = phi2H - Scalar::i() * phi3H;
  rep.expect(conjForm(type01) == type10, "conjugate of the (0,1) combination");
  return rep;
}

std::vector<Spinor> probeSpinors(const SpinParams& p) {
  std::vector<Spinor> probes;
  const std::uint32_t total = p.spinorDim();
  for (std::uint32_t m = 0; m < total; ++m)
    if (grade(m) <= 3) probes.push_back(Spinor::basis(m));

  std::mt19937_64 rng(0x5317f09u);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 2);
  auto randomScalar = [&] {
    return Scalar(rat(num(rng), den(rng)), rat(num(rng), den(rng)),
                  rat(num(rng), den(rng)), rat(num(rng), den(rng)));
  };
  for (int t = 0; t < 5; ++t) {
    Spinor s;
    for (std::uint32_t m = 0; m < total; ++m) s.addTerm(m, randomScalar());
    probes.push_back(std::move(s));
  }
  return probes;
}

CheckReport horizontalTorsionCheck(const SasakiFrame& f) {
  CheckReport rep;
  const SpinParams& p = f.params;
  if (p.n < 2) {
    rep.expect(false, "horizontal torsion check needs n >= 2");
    return rep;
  }
  const Scalar quarter = Scalar::ofRational(rat(1, 4));
  const Scalar half = Scalar::ofRational(rat(1, 2));
  std::vector<Spinor> probes = probeSpinors(p);

  for (int h = 4; h <= p.dimV(); ++h) {
    CVector X = basisVec(p, h);
    Form xT = contractBasis(h, f.torsion);
    std::vector<CVector> phiX;
    for (int i = 0; i < 3; ++i)
      phiX.push_back(applyEndo(f.phi[static_cast<std::size_t>(i)], X));
    for (const Spinor& psi : probes) {
      Spinor lhs = quarter * cliffForm(p, xT, psi);
      Spinor rhs;
      for (int i = 0; i < 3; ++i)
        rhs = rhs + cliffVec(p, f.xi[static_cast<std::size_t>(i)],
                             cliffVec(p, phiX[static_cast<std::size_t>(i)], psi));
      rhs = half * rhs;
      rep.expect(lhs == rhs, "torsion contraction matches the Reeb sum at e_" +
                                 std::to_string(h));
      if (!rep.ok) return rep;
    }
  }
  return rep;
}

}  // namespace spinform
