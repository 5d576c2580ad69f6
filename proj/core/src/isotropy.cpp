#include "spinform/isotropy.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace spinform {

namespace {

// 4x4 blocks of right quaternion multiplication on (1, i, j, k); entry [r][c]
// is the e-coefficient r of the image of basis element c.
constexpr int kRight1[4][4] = {
    {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
constexpr int kRightI[4][4] = {
    {0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}};
constexpr int kRightJ[4][4] = {
    {0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}};
constexpr int kRightK[4][4] = {
    {0, 0, 0, -1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}};

using BlockTable = int[4][4];
constexpr const BlockTable* kUnits[4] = {&kRight1, &kRightI, &kRightJ,
                                         &kRightK};

// 0-based row/column where horizontal block s = 1..n-1 starts.
int blockBase(int s) { return 4 * s - 1; }

Endo diagGenerator(const SpinParams& p, int s, int u) {
  Endo g = Endo::zero(p.dimV());
  const int b = blockBase(s);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const int v = (*kUnits[u])[r][c];
      if (v != 0) g.m[b + r][b + c] = Scalar::ofInt(v);
    }
  }
  return g;
}

Endo offDiagGenerator(const SpinParams& p, int s, int t, int u) {
  Endo g = Endo::zero(p.dimV());
  const int br = blockBase(t);
  const int bc = blockBase(s);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const int v = (*kUnits[u])[r][c];
      if (v != 0) {
        g.m[br + r][bc + c] = Scalar::ofInt(v);
        g.m[bc + c][br + r] = Scalar::ofInt(-v);
      }
    }
  }
  return g;
}

Vec flatten(const Endo& g) {
  Vec v;
  v.reserve(static_cast<size_t>(g.dim()) * g.dim());
  for (const auto& row : g.m) {
    for (const auto& s : row) v.push_back(s);
  }
  return v;
}

// Spinor-side operators of the lifted generators, with the 2-forms
// precomputed once.
std::vector<SpinorOp> liftOps(const SpinParams& p,
                              const std::vector<Endo>& gens) {
  std::vector<SpinorOp> ops;
  ops.reserve(gens.size());
  const Scalar half = Scalar::ofRational(rat(1, 2));
  for (const Endo& g : gens) {
    Form theta = formFromSkew(g);
    ops.push_back([p, half, theta](const Spinor& s) {
      return half * cliffForm(p, theta, s);
    });
  }
  return ops;
}

// Every lift image of a basis monomial keeps the grade and the y_1 bit.
bool liftsPreserveSectors(const SpinParams& p,
                          const std::vector<SpinorOp>& ops) {
  for (Monomial m = 0; m < p.spinorDim(); ++m) {
    const Spinor in = Spinor::basis(m);
    for (const auto& op : ops) {
      const Spinor out = op(in);
      for (const auto& [term, s] : out.terms) {
        if (grade(term) != grade(m) || (term & 1u) != (m & 1u)) return false;
      }
    }
  }
  return true;
}

std::vector<Monomial> sectorMonomials(const SpinParams& p, int g, int y1Bit) {
  std::vector<Monomial> out;
  for (Monomial m = 0; m < p.spinorDim(); ++m) {
    if (grade(m) == g && static_cast<int>(m & 1u) == y1Bit) out.push_back(m);
  }
  return out;
}

SparseVec formToSparse(const Form& a) {
  SparseVec v;
  for (const auto& [key, s] : a.terms) v.emplace(key, s);
  return v;
}

Form formFromSparse(int degree, const SparseVec& v) {
  Form a = Form::zero(degree);
  for (const auto& [key, s] : v) a.addTerm(key, s);
  return a;
}

std::vector<Form> wedgeFamilyProducts(const SasakiFrame& f, int k) {
  const SpinParams& p = f.params;
  Form phiH[3] = {horizontalPart(f.Phi[0]), horizontalPart(f.Phi[1]),
                  horizontalPart(f.Phi[2])};
  std::vector<Form> out;
  const int aMax = 2 * (p.n - 1);
  for (int e1 = 0; e1 <= 1; ++e1) {
    for (int e2 = 0; e2 <= 1; ++e2) {
      for (int e3 = 0; e3 <= 1; ++e3) {
        const int eDeg = e1 + e2 + e3;
        for (int a1 = 0; eDeg + 2 * a1 <= k; ++a1) {
          for (int a2 = 0; eDeg + 2 * (a1 + a2) <= k; ++a2) {
            const int rest = k - eDeg - 2 * (a1 + a2);
            if (rest % 2 != 0) continue;
            const int a3 = rest / 2;
            if (a1 > aMax || a2 > aMax || a3 > aMax) continue;
            Form t = Form::unit();
            if (e1) t = wedge(t, f.eta[0]);
            if (e2) t = wedge(t, f.eta[1]);
            if (e3) t = wedge(t, f.eta[2]);
            if (a1) t = wedge(t, wedgePower(phiH[0], a1));
            if (a2) t = wedge(t, wedgePower(phiH[1], a2));
            if (a3) t = wedge(t, wedgePower(phiH[2], a3));
            if (!t.isZero()) out.push_back(t);
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Endo> spBasis(const SpinParams& p) {
  if (p.n < 2) {
    throw std::invalid_argument("spBasis: n >= 2 required");
  }
  std::vector<Endo> out;
  out.reserve(static_cast<size_t>((p.n - 1) * (2 * p.n - 1)));
  for (int s = 1; s <= p.n - 1; ++s) {
    for (int t = s + 1; t <= p.n - 1; ++t) {
      for (int u = 0; u < 4; ++u) out.push_back(offDiagGenerator(p, s, t, u));
    }
  }
  for (int s = 1; s <= p.n - 1; ++s) {
    for (int u = 1; u < 4; ++u) out.push_back(diagGenerator(p, s, u));
  }
  return out;
}

CheckReport isotropyAlgebraChecks(const SasakiFrame& f) {
  CheckReport rep;
  const SpinParams& p = f.params;
  const int dim = p.dimV();
  const std::vector<Endo> gens = spBasis(p);
  rep.expect(static_cast<int>(gens.size()) == (p.n - 1) * (2 * p.n - 1),
             "generator count is (n-1)(2n-1)");

  const Endo zero = Endo::zero(dim);
  for (size_t a = 0; a < gens.size(); ++a) {
    const Endo& g = gens[a];
    const std::string tag = "generator " + std::to_string(a);
    rep.expect(isSkew(g), tag + " is skew");
    bool vertTrivial = true;
    for (int v = 0; v < 3 && vertTrivial; ++v) {
      for (int t = 0; t < dim; ++t) {
        if (!g.m[v][t].isZero() || !g.m[t][v].isZero()) {
          vertTrivial = false;
          break;
        }
      }
    }
    rep.expect(vertTrivial, tag + " annihilates the vertical directions");
    for (int i = 0; i < 3; ++i) {
      rep.expect(commutator(g, f.phi[i]) == zero,
                 tag + " commutes with phi_" + std::to_string(i + 1));
    }
    const Endo sq = compose(g, g);
    bool diagNonpositive = true;
    for (int t = 0; t < dim; ++t) {
      const Scalar& s = sq.m[t][t];
      if (!s.isRational() || s.a > 0) {
        diagNonpositive = false;
        break;
      }
    }
    rep.expect(diagNonpositive, tag + " has a nonpositive square diagonal");
    rep.expect(spinLift(p, g, omegaSpinor(p)).isZero(),
               tag + " lift annihilates omega");
    rep.expect(spinLift(p, g, Spinor::basis(1u)).isZero(),
               tag + " lift annihilates y_1");
  }

  // Right multiplication reverses products: R_u R_v = R_{vu} on each block.
  const Scalar minusOne = -Scalar::one();
  for (int s = 1; s <= p.n - 1; ++s) {
    const Endo di = diagGenerator(p, s, 1);
    const Endo dj = diagGenerator(p, s, 2);
    const Endo dk = diagGenerator(p, s, 3);
    const Endo blockId = diagGenerator(p, s, 0);
    const std::string tag = "block " + std::to_string(s);
    rep.expect(compose(di, dj) == minusOne * dk,
               tag + ": R_i R_j = R_{ji} = -R_k");
    rep.expect(compose(dj, dk) == minusOne * di,
               tag + ": R_j R_k = R_{kj} = -R_i");
    rep.expect(compose(dk, di) == minusOne * dj,
               tag + ": R_k R_i = R_{ik} = -R_j");
    rep.expect(compose(di, di) == minusOne * blockId,
               tag + ": R_i^2 = -Id");
  }

  Mat flat;
  flat.reserve(gens.size());
  for (const Endo& g : gens) flat.push_back(flatten(g));
  const Echelon span = makeEchelon(flat);
  bool closed = true;
  for (size_t a = 0; a < gens.size() && closed; ++a) {
    for (size_t b = a + 1; b < gens.size(); ++b) {
      if (!inSpan(span, flatten(commutator(gens[a], gens[b])))) {
        closed = false;
        break;
      }
    }
  }
  rep.expect(closed, "commutators stay inside the span (Lie closure)");
  return rep;
}

std::vector<Spinor> invariantSpinors(const SpinParams& p) {
  const std::vector<Endo> gens = spBasis(p);
  const std::vector<SpinorOp> ops = liftOps(p, gens);
  if (!liftsPreserveSectors(p, ops)) {
    throw std::logic_error(
        "invariantSpinors: lifted generators do not preserve sectors");
  }
  std::vector<Spinor> out;
  for (int g = 0; g <= p.genCount(); ++g) {
    for (int y1Bit = 0; y1Bit <= 1; ++y1Bit) {
      const std::vector<Monomial> sector = sectorMonomials(p, g, y1Bit);
      if (sector.empty()) continue;
      std::vector<Spinor> part = jointKernelOn(sector, ops);
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  return out;
}

std::vector<Form> invariantForms(const SpinParams& p, int k,
                                 bool horizontalOnly) {
  const int limit = horizontalOnly ? 2 * (p.n - 1) : 4;
  if (k < 0 || k > limit) {
    throw std::invalid_argument(
        "invariantForms: degree " + std::to_string(k) + " exceeds the limit " +
        std::to_string(limit) +
        (horizontalOnly ? " (horizontal space)" : " (full space)"));
  }
  const std::vector<Endo> gens = spBasis(p);

  std::vector<int> positions;
  for (int b = horizontalOnly ? 3 : 0; b < p.dimV(); ++b) positions.push_back(b);
  std::vector<Key> keys;
  std::vector<int> idx(k);
  for (int t = 0; t < k; ++t) idx[t] = t;
  const int nPos = static_cast<int>(positions.size());
  if (k == 0) {
    keys.push_back(0);
  } else if (k <= nPos) {
    while (true) {
      Key key = 0;
      for (int t = 0; t < k; ++t) key |= 1ull << positions[idx[t]];
      keys.push_back(key);
      int t = k - 1;
      while (t >= 0 && idx[t] == nPos - k + t) --t;
      if (t < 0) break;
      ++idx[t];
      for (int r = t + 1; r < k; ++r) idx[r] = idx[r - 1] + 1;
    }
  }

  std::vector<SparseOp> ops;
  ops.reserve(gens.size());
  for (const Endo& g : gens) {
    ops.push_back([g, k](const SparseVec& v) {
      const Form image = soActionOnForm(g, formFromSparse(k, v));
      return formToSparse(image);
    });
  }
  std::vector<SparseVec> kernel = jointKernelSparse(keys, ops);
  std::vector<Form> out;
  out.reserve(kernel.size());
  for (const SparseVec& v : kernel) out.push_back(formFromSparse(k, v));
  return out;
}

std::vector<Form> tauFamily(const SasakiFrame& f, int k) {
  return wedgeFamilyProducts(f, k);
}

CheckReport tauSpanCheck(const SasakiFrame& f, int k) {
  CheckReport rep;
  const std::vector<Form> inv = invariantForms(f.params, k, false);
  const std::vector<Form> taus = tauFamily(f, k);
  std::vector<SparseVec> invS, tauS;
  invS.reserve(inv.size());
  tauS.reserve(taus.size());
  for (const Form& a : inv) invS.push_back(formToSparse(a));
  for (const Form& a : taus) tauS.push_back(formToSparse(a));
  for (size_t t = 0; t < tauS.size(); ++t) {
    rep.expect(sparseInSpan(invS, tauS[t]),
               "tau member " + std::to_string(t) + " is invariant");
  }
  rep.expect(sparseSpanEquals(invS, tauS),
             "degree-" + std::to_string(k) +
                 " invariant forms equal the tau span");
  return rep;
}

CheckReport antiHolomorphicDims(const SpinParams& p) {
  CheckReport rep;
  const std::vector<Endo> gens = spBasis(p);
  const std::vector<SpinorOp> ops = liftOps(p, gens);
  rep.expect(liftsPreserveSectors(p, ops),
             "lifts preserve grade and y_1-degree");
  for (int g = 0; g <= p.genCount() - 1; ++g) {
    const std::vector<Monomial> sector = sectorMonomials(p, g, 0);
    const std::vector<Spinor> kernel = jointKernelOn(sector, ops);
    const int expected = (g % 2 == 0 && g <= 2 * (p.n - 1)) ? 1 : 0;
    const std::string tag = "grade " + std::to_string(g);
    rep.expect(static_cast<int>(kernel.size()) == expected,
               tag + " invariant dimension");
    if (expected == 1) {
      rep.expect(spinorSpanEquals(kernel, {omegaPower(p, g / 2)}),
                 tag + " invariants spanned by the omega power");
    }
  }
  return rep;
}

CheckReport invariantProductCheck(const SasakiFrame& f) {
  CheckReport rep;
  const SpinParams& p = f.params;
  const std::vector<Endo> gens = spBasis(p);
  const std::vector<SpinorOp> ops = liftOps(p, gens);
  const std::vector<Spinor> sigma = invariantSpinors(p);

  std::vector<Form> thetas;
  for (int k = 0; k <= std::min(4, p.dimV()); ++k) {
    const std::vector<Form> fam = tauFamily(f, k);
    thetas.insert(thetas.end(), fam.begin(), fam.end());
  }
  bool productsInvariant = true;
  for (const Form& theta : thetas) {
    for (const Spinor& psi : sigma) {
      const Spinor prod = cliffForm(p, theta, psi);
      for (const auto& op : ops) {
        if (!op(prod).isZero()) {
          productsInvariant = false;
          break;
        }
      }
      if (!productsInvariant) break;
    }
    if (!productsInvariant) break;
  }
  rep.expect(productsInvariant,
             "products of invariant forms with invariant spinors are invariant");

  const Form phi2H = horizontalPart(f.Phi[1]);
  const Form phi1H = horizontalPart(f.Phi[0]);
  std::vector<Spinor> pProducts{Spinor::unit()};
  std::vector<Spinor> omegaPowers{Spinor::unit()};
  for (int k = 1; k <= p.n - 1; ++k) {
    pProducts.push_back(cliffForm(p, phi2H, pProducts.back()));
    omegaPowers.push_back(omegaPower(p, k));
  }
  for (int k = 0; k <= p.n - 1; ++k) {
    std::vector<Spinor> prefixP(pProducts.begin(), pProducts.begin() + k + 1);
    std::vector<Spinor> prefixO(omegaPowers.begin(),
                                omegaPowers.begin() + k + 1);
    rep.expect(spinorSpanEquals(prefixP, prefixO),
               "Phi_2 products up to step " + std::to_string(k) +
                   " span the omega powers");
  }
  std::vector<Spinor> shifted, expectedShifted;
  for (int k = 0; k <= p.n - 1; ++k) {
    shifted.push_back(cliffVec(p, f.xi[1], pProducts[k]));
    expectedShifted.push_back(wedge(p, 1, omegaPowers[k]));
  }
  rep.expect(spinorSpanEquals(shifted, expectedShifted),
             "xi_2 translates span the y_1 ^ omega powers");

  Spinor r = Spinor::unit();
  bool staysInLine = true;
  for (int k = 1; k <= 3; ++k) {
    r = cliffForm(p, phi1H, r);
    if (!spinorInSpan({Spinor::unit()}, r)) {
      staysInLine = false;
      break;
    }
  }
  rep.expect(staysInLine, "Phi_1 products on 1 stay in span{1}");

  std::vector<Spinor> tauProducts;
  for (int k = 0; k <= p.dimV(); ++k) {
    for (const Form& theta : wedgeFamilyProducts(f, k)) {
      const Spinor prod = cliffForm(p, theta, Spinor::unit());
      if (!prod.isZero()) tauProducts.push_back(prod);
    }
  }
  rep.expect(spinorSpanEquals(tauProducts, sigma),
             "tau products with 1 span the invariant spinors");
  return rep;
}

}  // namespace spinform
