// Acceptance gate: every criterion below must hold bit-exactly. Each criterion
// prints exactly one [PASS]/[FAIL] line; the process exits nonzero when any
// line fails. Time caps are wall-clock and part of the criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "render.hpp"
#include "spinform/bilinear.hpp"
#include "spinform/isotropy.hpp"
#include "spinform/killing.hpp"

using namespace spinform;

namespace {

const Scalar kHalf = Scalar::ofRational(rat(1, 2));

struct Rng {
  std::mt19937_64 engine{20260822ull};

  long smallInt() {
    return static_cast<long>(engine() % 7) - 3;  // -3..3
  }
  Rational q() {
    long den = 1 + static_cast<long>(engine() % 2);
    return rat(smallInt(), den);
  }
  Scalar scalar() { return Scalar(q(), q(), q(), q()); }
  Scalar realScalar() { return Scalar(q(), 0, q(), 0); }

  Spinor spinor(const SpinParams& p, int terms) {
    Spinor s;
    for (int t = 0; t < terms; ++t)
      s.addTerm(static_cast<Monomial>(engine() % p.spinorDim()), scalar());
    if (s.isZero()) s = Spinor::unit();
    return s;
  }
  CVector realVec(const SpinParams& p, int lo = 1) {
    CVector v = CVector::zero(p);
    for (int t = lo; t <= p.dimV(); ++t)
      v.coeffs[static_cast<std::size_t>(t - 1)] = realScalar();
    return v;
  }
  Endo skew(const SpinParams& p) {
    int d = p.dimV();
    Endo t = Endo::zero(d);
    for (int r = 0; r < d; ++r)
      for (int c = r + 1; c < d; ++c) {
        Scalar v = realScalar();
        t.m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
        t.m[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] = -v;
      }
    return t;
  }
  Form form(const SpinParams& p, int degree, int terms) {
    Form a = Form::zero(degree);
    std::vector<int> idx(static_cast<std::size_t>(p.dimV()));
    for (int i = 0; i < p.dimV(); ++i) idx[static_cast<std::size_t>(i)] = i;
    for (int t = 0; t < terms; ++t) {
      std::uint64_t key = 0;
      // sample `degree` distinct basis indices
      for (int d = 0; d < degree; ++d) {
        std::uint64_t bit;
        do
          bit = 1ull << (engine() % static_cast<std::uint64_t>(p.dimV()));
        while (key & bit);
        key |= bit;
      }
      a.addTerm(key, scalar());
    }
    if (a.isZero()) a.addTerm((1ull << degree) - 1, Scalar::one());
    return a;
  }
};

Form flat(const SpinParams& p, const CVector& v) {
  Form a = Form::zero(1);
  for (int t = 1; t <= p.dimV(); ++t) {
    const Scalar& c = v.coeffs[static_cast<std::size_t>(t - 1)];
    if (!c.isZero()) a.addTerm(1ull << (t - 1), c);
  }
  return a;
}

bool expect(bool cond, const std::string& what, std::string& detail) {
  if (!cond && detail.empty()) detail = what;
  return cond;
}

// ---------------------------------------------------------------------------
// criterion 1: Clifford products of the fundamental 2-forms on omega powers

bool criterion1(std::string& detail) {
  bool ok = true;
  for (int n = 2; n <= 6; ++n) {
    SpinParams p(n);
    SasakiFrame f = buildFrame(n);
    Form phi1H = horizontalPart(f.Phi[0]);
    Form phi2H = horizontalPart(f.Phi[1]);
    Form phi3H = horizontalPart(f.Phi[2]);
    for (int k = 0; k < n; ++k) {
      Spinor wk = omegaPower(p, k);
      Spinor up = omegaPower(p, k + 1);
      Spinor down = omegaPower(p, k - 1);
      Scalar kk = Scalar::ofInt(static_cast<long>(k) * (n - k));
      std::string at = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      ok &= expect(cliffForm(p, f.Phi0, wk).isZero(), "Phi_0 at " + at, detail);
      ok &= expect(cliffForm(p, phi1H, wk) ==
                       Scalar::ofInt(2 * (2 * k - n + 1)) * Scalar::i() * wk,
                   "Phi_1 at " + at, detail);
      ok &= expect(cliffForm(p, phi2H, wk) ==
                       Scalar::ofInt(2) * (up - kk * down),
                   "Phi_2 at " + at, detail);
      ok &= expect(cliffForm(p, phi3H, wk) ==
                       Scalar::ofInt(-2) * Scalar::i() * (up + kk * down),
                   "Phi_3 at " + at, detail);
    }
  }
  return ok;
}

// ---------------------------------------------------------------------------
// criterion 2: Killing kernel rank and basis

bool criterion2(std::string& detail) {
  bool ok = true;
  for (int n = 1; n <= 5; ++n) {
    SpinParams p(n);
    KernelBasis kb = killingKernel(makeKillingConfig(n));
    int expectRank = n == 1 ? 2 : n + 1;
    ok &= expect(kb.rank == expectRank,
                 "rank " + std::to_string(kb.rank) + " at n=" +
                     std::to_string(n) + ", expected " +
                     std::to_string(expectRank),
                 detail);
    std::vector<Spinor> family;
    for (int k = -1; k < n; ++k) family.push_back(psiK(p, k));
    ok &= expect(spinorSpanEquals(kb.spinors, family),
                 "kernel span differs from the psi family at n=" +
                     std::to_string(n),
                 detail);
  }
  return ok;
}

// ---------------------------------------------------------------------------
// criterion 3: rank-2 subspaces, closed forms, rendered table, translations

const char* kTable[3][6] = {
    {"1", "ω - i y_1", "ω - i y_1", "y_1∧ω", "1 + i y_1∧ω",
     "1 - i y_1∧ω"},
    {"1", "ω - i y_1 + 1/2 i y_1∧ω^2", "ω - i y_1 - 1/2 i y_1∧ω^2",
     "y_1∧ω^2", "1 - 1/2 ω^2 + i y_1∧ω", "1 + 1/2 ω^2 - i y_1∧ω"},
    {"1", "ω - 1/6 ω^3 - i y_1 + 1/2 i y_1∧ω^2",
     "ω + 1/6 ω^3 - i y_1 - 1/2 i y_1∧ω^2", "y_1∧ω^3",
     "1 - 1/2 ω^2 + i y_1∧ω - 1/6 i y_1∧ω^3",
     "1 + 1/2 ω^2 - i y_1∧ω - 1/6 i y_1∧ω^3"},
};

bool criterion3(std::string& detail) {
  bool ok = true;
  for (int n = 2; n <= 5; ++n) {
    SpinParams p(n);
    SasakiFrame f = buildFrame(n);
    for (int i = 1; i <= 3; ++i) {
      KernelBasis kb = eMinusKernel(f, i);
      ok &= expect(kb.rank == 2,
                   "rank " + std::to_string(kb.rank) + " for structure " +
                       std::to_string(i) + " at n=" + std::to_string(n),
                   detail);
      for (int which = 0; which <= 1; ++which)
        ok &= expect(
            spinorInSpan(kb.spinors, eMinusClosedForm(p, i, which)),
            "closed form " + std::to_string(which) + " outside kernel " +
                std::to_string(i) + " at n=" + std::to_string(n),
            detail);
    }
    ok &= expect(cliffVec(p, f.xi[1], eMinusClosedForm(p, 2, 0)) ==
                     eMinusClosedForm(p, 2, 1),
                 "xi_2 translation at n=" + std::to_string(n), detail);
    ok &= expect(cliffVec(p, f.xi[2], eMinusClosedForm(p, 3, 0)) ==
                     Scalar::i() * eMinusClosedForm(p, 3, 1),
                 "xi_3 translation at n=" + std::to_string(n), detail);
    if (n <= 4) {
      int row = 0;
      for (int which = 0; which <= 1; ++which)
        for (int i = 1; i <= 3; ++i) {
          std::string got = renderOmega(p, eMinusClosedForm(p, i, which));
          ok &= expect(got == kTable[n - 2][row],
                       "table row " + std::to_string(row) + " at n=" +
                           std::to_string(n) + " rendered \"" + got + "\"",
                       detail);
          ++row;
        }
    }
  }
  return ok;
}

// ---------------------------------------------------------------------------
// criterion 4: structure tensors from spinor bilinears

bool criterion4(std::string& detail) {
  bool ok = true;
  for (int n = 2; n <= 4; ++n) {
    SpinParams p(n);
    SasakiFrame f = buildFrame(n);
    for (int i = 1; i <= 3; ++i) {
      KernelBasis kb = eMinusKernel(f, i);
      ok &= expect(kb.rank == 2, "unexpected kernel rank", detail);
      for (const Spinor& psi : kb.spinors) {
        std::string at =
            "structure " + std::to_string(i) + " at n=" + std::to_string(n);
        Spinor trans = -cliffVec(p, f.xi[i - 1], psi);
        Scalar normSq = inner(psi, psi);
        ok &= expect(!normSq.isZero(), "null spinor at " + at, detail);
        Form eta = etaBilinear(f, psi, trans);
        ok &= expect(eta == normSq * f.eta[i - 1], "eta at " + at, detail);
        Form dEta = dEtaBilinear(f, kHalf, psi, trans);
        ok &= expect(phiFromDEta(f, dEta) == normSq * f.phi[i - 1],
                     "phi at " + at, detail);
        ok &= expect(squaring(f, 2, trans, psi) ==
                         (-normSq) * f.Phi[i - 1],
                     "degree-2 squaring form at " + at, detail);
        ok &= expect(contractVec(f.xi[i - 1], dEta).isZero(),
                     "Reeb contraction of d eta at " + at, detail);
      }
    }
  }
  return ok;
}

// ---------------------------------------------------------------------------
// criterion 5: invariant spaces under the reduced isotropy action

bool criterion5(std::string& detail) {
  bool ok = true;
  for (int n = 2; n <= 5; ++n) {
    SpinParams p(n);
    std::vector<Spinor> inv = invariantSpinors(p);
    ok &= expect(static_cast<int>(inv.size()) == 2 * n,
                 "invariant spinor rank " + std::to_string(inv.size()) +
                     " at n=" + std::to_string(n),
                 detail);
    std::vector<Spinor> expected;
    for (int k = 0; k < n; ++k) {
      expected.push_back(omegaPower(p, k));
      expected.push_back(wedge(p, 1, omegaPower(p, k)));
    }
    ok &= expect(spinorSpanEquals(inv, expected),
                 "invariant spinor span at n=" + std::to_string(n), detail);
    CheckReport holo = antiHolomorphicDims(p);
    ok &= expect(holo.ok,
                 "graded invariants at n=" + std::to_string(n) +
                     (holo.failures.empty() ? "" : ": " + holo.failures[0]),
                 detail);

    if (n <= 4) {
      SasakiFrame f = buildFrame(n);
      std::vector<Form> two = invariantForms(p, 2, true);
      ok &= expect(two.size() == 3,
                   "horizontal 2-form rank " + std::to_string(two.size()) +
                       " at n=" + std::to_string(n),
                   detail);
      std::vector<SparseVec> got, want;
      for (const Form& a : two) got.push_back(a.terms);
      for (int i = 0; i < 3; ++i)
        want.push_back(horizontalPart(f.Phi[static_cast<std::size_t>(i)]).terms);
      ok &= expect(sparseSpanEquals(got, want),
                   "horizontal 2-form span at n=" + std::to_string(n), detail);
    }
    if (n <= 3) {
      SasakiFrame f = buildFrame(n);
      for (int k = 0; k <= 3; ++k) {
        CheckReport rep = tauSpanCheck(f, k);
        ok &= expect(rep.ok,
                     "wedge family span at n=" + std::to_string(n) +
                         " degree " + std::to_string(k) +
                         (rep.failures.empty() ? "" : ": " + rep.failures[0]),
                     detail);
      }
    }
  }
  return ok;
}

// ---------------------------------------------------------------------------
// criterion 6: operator identities, exhaustive at n = 2 plus randomized

bool criterion6(std::string& detail) {
  bool ok = true;
  const int kWant = 100;

  SpinParams p2(2);
  SasakiFrame f2 = buildFrame(2);
  std::vector<Spinor> all2;
  for (Monomial m = 0; m < p2.spinorDim(); ++m)
    all2.push_back(Spinor::basis(m));

  SpinParams p3(3);
  SasakiFrame f3 = buildFrame(3);
  Rng rng;

  {  // Clifford relation
    for (int a = 1; a <= p2.dimV(); ++a)
      for (int b = 1; b <= p2.dimV(); ++b)
        for (const Spinor& psi : all2) {
          Spinor lhs = cliffE(p2, a, cliffE(p2, b, psi)) +
                       cliffE(p2, b, cliffE(p2, a, psi));
          ok &= expect(
              lhs == (a == b ? Scalar::ofInt(-2) * psi : Spinor::zero()),
              "relation (exhaustive)", detail);
        }
    int cases = 0;
    for (int t = 0; t < 120; ++t) {
      const SpinParams& p = t % 2 ? p3 : p2;
      CVector v = rng.realVec(p);
      CVector w = rng.realVec(p);
      Spinor psi = rng.spinor(p, 6);
      Spinor lhs = cliffVec(p, v, cliffVec(p, w, psi)) +
                   cliffVec(p, w, cliffVec(p, v, psi));
      ok &= expect(lhs == Scalar::ofInt(-2) * gMetric(v, w) * psi,
                   "relation (randomized)", detail);
      ++cases;
    }
    ok &= expect(cases >= kWant, "relation case count", detail);
  }

  {  // skew-adjointness
    for (int a = 1; a <= p2.dimV(); ++a)
      for (const Spinor& x : all2)
        for (const Spinor& y : all2)
          ok &= expect(inner(cliffE(p2, a, x), y) == -inner(x, cliffE(p2, a, y)),
                       "skew-adjointness (exhaustive)", detail);
    int cases = 0;
    for (int t = 0; t < 120; ++t) {
      const SpinParams& p = t % 2 ? p3 : p2;
      CVector v = rng.realVec(p);
      Spinor x = rng.spinor(p, 6);
      Spinor y = rng.spinor(p, 6);
      ok &= expect(inner(cliffVec(p, v, x), y) == -inner(x, cliffVec(p, v, y)),
                   "skew-adjointness (randomized)", detail);
      ++cases;
    }
    ok &= expect(cases >= kWant, "skew-adjointness case count", detail);
  }

  {  // Re<X.psi, Y.psi> = g(X, Y) |psi|^2
    for (int a = 1; a <= p2.dimV(); ++a)
      for (int b = 1; b <= p2.dimV(); ++b)
        for (const Spinor& psi : all2) {
          Scalar lhs = re(inner(cliffE(p2, a, psi), cliffE(p2, b, psi)));
          Scalar g = a == b ? Scalar::one() : Scalar::zero();
          ok &= expect(lhs == g * re(inner(psi, psi)),
                       "metric identity (exhaustive)", detail);
        }
    int cases = 0;
    for (int t = 0; t < 120; ++t) {
      const SpinParams& p = t % 2 ? p3 : p2;
      CVector v = rng.realVec(p);
      CVector w = rng.realVec(p);
      Spinor psi = rng.spinor(p, 6);
      ok &= expect(re(inner(cliffVec(p, v, psi), cliffVec(p, w, psi))) ==
                       gMetric(v, w) * re(inner(psi, psi)),
                   "metric identity (randomized)", detail);
      ++cases;
    }
    ok &= expect(cases >= kWant, "metric identity case count", detail);
  }

  {  // theta.X - X.theta on spinors
    std::vector<Form> thetas2 = {f2.eta[0], f2.eta[1],   f2.eta[2], f2.Phi[0],
                                 f2.Phi[1], f2.Phi[2],   f2.torsion};
    for (const Form& theta : thetas2) {
      int sgn = theta.degree % 2 == 0 ? 1 : -1;
      for (int a = 1; a <= p2.dimV(); ++a) {
        Form contracted = contractBasis(a, theta);
        Form wedged = wedge(basisForm(p2, a), theta);
        for (const Spinor& psi : all2) {
          Spinor lhs = cliffForm(p2, theta, cliffE(p2, a, psi)) -
                       cliffE(p2, a, cliffForm(p2, theta, psi));
          Spinor rhs = Scalar::ofInt(sgn + 1) * cliffForm(p2, contracted, psi) +
                       Scalar::ofInt(sgn - 1) * cliffForm(p2, wedged, psi);
          ok &= expect(lhs == rhs, "form commutator (exhaustive)", detail);
        }
      }
    }
    int cases = 0;
    for (int t = 0; t < 120; ++t) {
      const SpinParams& p = t % 2 ? p3 : p2;
      int degree = 1 + static_cast<int>(rng.engine() % 3);
      Form theta = rng.form(p, degree, 4);
      int sgn = degree % 2 == 0 ? 1 : -1;
      CVector v = rng.realVec(p);
      Spinor psi = rng.spinor(p, 6);
      Spinor lhs = cliffForm(p, theta, cliffVec(p, v, psi)) -
                   cliffVec(p, v, cliffForm(p, theta, psi));
      Spinor rhs =
          Scalar::ofInt(sgn + 1) * cliffForm(p, contractVec(v, theta), psi) +
          Scalar::ofInt(sgn - 1) * cliffForm(p, wedge(flat(p, v), theta), psi);
      ok &= expect(lhs == rhs, "form commutator (randomized)", detail);
      ++cases;
    }
    ok &= expect(cases >= kWant, "form commutator case count", detail);
  }

  {  // lift(T).X - X.lift(T) = T(X)
    for (int i = 0; i < 3; ++i) {
      Endo t = skewFromForm(p2, f2.Phi[static_cast<std::size_t>(i)]);
      for (int a = 1; a <= p2.dimV(); ++a) {
        CVector tx = applyEndo(t, basisVec(p2, a));
        for (const Spinor& psi : all2) {
          Spinor lhs = spinLift(p2, t, cliffE(p2, a, psi)) -
                       cliffE(p2, a, spinLift(p2, t, psi));
          ok &= expect(lhs == cliffVec(p2, tx, psi),
                       "lift-vector commutator (exhaustive)", detail);
        }
      }
    }
    int cases = 0;
    for (int t = 0; t < 120; ++t) {
      const SpinParams& p = t % 2 ? p3 : p2;
      Endo s = rng.skew(p);
      CVector v = rng.realVec(p);
      Spinor psi = rng.spinor(p, 6);
      Spinor lhs = spinLift(p, s, cliffVec(p, v, psi)) -
                   cliffVec(p, v, spinLift(p, s, psi));
      ok &= expect(lhs == cliffVec(p, applyEndo(s, v), psi),
                   "lift-vector commutator (randomized)", detail);
      ++cases;
    }
    ok &= expect(cases >= kWant, "lift-vector case count", detail);
  }

  {  // lift(T).theta - theta.lift(T) = T(theta)
    for (int i = 0; i < 3; ++i) {
      Endo t = skewFromForm(p2, f2.Phi[static_cast<std::size_t>(i)]);
      for (const Form& theta : {f2.eta[0], f2.Phi[1], f2.torsion}) {
        Form acted = soActionOnForm(t, theta);
        for (const Spinor& psi : all2) {
          Spinor lhs = spinLift(p2, t, cliffForm(p2, theta, psi)) -
                       cliffForm(p2, theta, spinLift(p2, t, psi));
          ok &= expect(lhs == cliffForm(p2, acted, psi),
                       "lift-form commutator (exhaustive)", detail);
        }
      }
    }
    int cases = 0;
    for (int t = 0; t < 120; ++t) {
      const SpinParams& p = t % 2 ? p3 : p2;
      Endo s = rng.skew(p);
      Form theta = rng.form(p, 1 + static_cast<int>(rng.engine() % 3), 4);
      Spinor psi = rng.spinor(p, 6);
      Spinor lhs = spinLift(p, s, cliffForm(p, theta, psi)) -
                   cliffForm(p, theta, spinLift(p, s, psi));
      ok &= expect(lhs == cliffForm(p, soActionOnForm(s, theta), psi),
                   "lift-form commutator (randomized)", detail);
      ++cases;
    }
    ok &= expect(cases >= kWant, "lift-form case count", detail);
  }

  {  // lift([T, S]) = [lift(T), lift(S)]
    std::vector<Endo> ts;
    for (int i = 0; i < 3; ++i)
      ts.push_back(skewFromForm(p2, f2.Phi[static_cast<std::size_t>(i)]));
    for (std::size_t u = 0; u < ts.size(); ++u)
      for (std::size_t w = u + 1; w < ts.size(); ++w) {
        Endo bracket = commutator(ts[u], ts[w]);
        for (const Spinor& psi : all2) {
          Spinor lhs = spinLift(p2, ts[u], spinLift(p2, ts[w], psi)) -
                       spinLift(p2, ts[w], spinLift(p2, ts[u], psi));
          ok &= expect(lhs == spinLift(p2, bracket, psi),
                       "lift bracket (exhaustive)", detail);
        }
      }
    int cases = 0;
    for (int t = 0; t < 120; ++t) {
      const SpinParams& p = t % 2 ? p3 : p2;
      Endo a = rng.skew(p);
      Endo b = rng.skew(p);
      Spinor psi = rng.spinor(p, 6);
      Spinor lhs = spinLift(p, a, spinLift(p, b, psi)) -
                   spinLift(p, b, spinLift(p, a, psi));
      ok &= expect(lhs == spinLift(p, commutator(a, b), psi),
                   "lift bracket (randomized)", detail);
      ++cases;
    }
    ok &= expect(cases >= kWant, "lift bracket case count", detail);
  }

  {  // d eta = 4 lambda (degree-2 squaring form) on Killing pairs
    KernelBasis kb2 = killingKernel(makeKillingConfig(2));
    for (const Spinor& a : kb2.spinors)
      for (const Spinor& b : kb2.spinors)
        ok &= expect(dEtaBilinear(f2, kHalf, a, b) ==
                         (Scalar::ofInt(4) * kHalf) * squaring(f2, 2, a, b),
                     "squaring pairing (exhaustive)", detail);
    KernelBasis kb3 = killingKernel(makeKillingConfig(3));
    int cases = 0;
    for (int t = 0; t < 120; ++t) {
      const SpinParams& p = t % 2 ? p3 : p2;
      const SasakiFrame& f = t % 2 ? f3 : f2;
      const KernelBasis& kb = t % 2 ? kb3 : kb2;
      Spinor a, b;
      for (const Spinor& base : kb.spinors) {
        a = a + rng.scalar() * base;
        b = b + rng.scalar() * base;
      }
      ok &= expect(dEtaBilinear(f, kHalf, a, b) ==
                       (Scalar::ofInt(4) * kHalf) * squaring(f, 2, a, b),
                   "squaring pairing (randomized)", detail);
      ++cases;
    }
    ok &= expect(cases >= kWant, "squaring pairing case count", detail);
  }

  {  // 1/4 (X _| torsion) = 1/2 sum_i xi_i.phi_i(X). on spinors
    const Scalar quarter = Scalar::ofRational(rat(1, 4));
    for (int h = 4; h <= p2.dimV(); ++h) {
      CVector X = basisVec(p2, h);
      Form xT = contractBasis(h, f2.torsion);
      for (const Spinor& psi : all2) {
        Spinor lhs = quarter * cliffForm(p2, xT, psi);
        Spinor rhs;
        for (int i = 0; i < 3; ++i)
          rhs = rhs +
                cliffVec(p2, f2.xi[static_cast<std::size_t>(i)],
                         cliffVec(p2,
                                  applyEndo(f2.phi[static_cast<std::size_t>(i)],
                                            X),
                                  psi));
        ok &= expect(lhs == kHalf * rhs, "torsion cross-check (exhaustive)",
                     detail);
      }
    }
    int cases = 0;
    for (int t = 0; t < 120; ++t) {
      const SpinParams& p = t % 2 ? p3 : p2;
      const SasakiFrame& f = t % 2 ? f3 : f2;
      CVector X = rng.realVec(p, 4);  // horizontal support only
      Spinor psi = rng.spinor(p, 6);
      Spinor lhs = quarter * cliffForm(p, contractVec(X, f.torsion), psi);
      Spinor rhs;
      for (int i = 0; i < 3; ++i)
        rhs = rhs + cliffVec(p, f.xi[static_cast<std::size_t>(i)],
                             cliffVec(p,
                                      applyEndo(
                                          f.phi[static_cast<std::size_t>(i)], X),
                                      psi));
      ok &= expect(lhs == kHalf * rhs, "torsion cross-check (randomized)",
                   detail);
      ++cases;
    }
    ok &= expect(cases >= kWant, "torsion cross-check case count", detail);
  }

  return ok;
}

// ---------------------------------------------------------------------------
// criterion 7: adapted frame invariants and the omega / y_1 form identity

bool criterion7(std::string& detail) {
  bool ok = true;
  for (int n = 1; n <= 6; ++n) {
    CheckReport rep = frameInvariantChecks(buildFrame(n));
    ok &= expect(rep.ok,
                 "frame invariants at n=" + std::to_string(n) +
                     (rep.failures.empty() ? "" : ": " + rep.failures[0]),
                 detail);
  }
  for (int n = 2; n <= 6; ++n) {
    CheckReport rep = omegaFormIdentityCheck(buildFrame(n));
    ok &= expect(rep.ok,
                 "form identity at n=" + std::to_string(n) +
                     (rep.failures.empty() ? "" : ": " + rep.failures[0]),
                 detail);
  }
  return ok;
}

struct Criterion {
  const char* label;
  double capSeconds;
  std::function<bool(std::string&)> fn;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"fundamental 2-form Clifford products on omega powers (n = 2..6)", 5.0,
       criterion1},
      {"Killing kernel rank and psi-family basis (n = 1..5)", 60.0,
       criterion2},
      {"rank-2 subspaces with closed-form bases, rendered table, translations "
       "(n = 2..5)",
       60.0, criterion3},
      {"structure tensors recovered from spinor bilinears (n = 2..4)", 30.0,
       criterion4},
      {"invariant spinors and forms under the reduced isotropy action "
       "(n = 2..5)",
       120.0, criterion5},
      {"operator identity suite, exhaustive at n = 2 plus randomized", 30.0,
       criterion6},
      {"adapted frame invariants and form identities (n = 1..6)", 5.0,
       criterion7},
  };

  int failures = 0;
  for (std::size_t t = 0; t < criteria.size(); ++t) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = criteria[t].fn(detail);
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (seconds > criteria[t].capSeconds) {
      ok = false;
      if (detail.empty())
        detail = "exceeded " + std::to_string(criteria[t].capSeconds) +
                 "s time cap";
    }
    if (!ok) ++failures;
    std::printf("[%s] criterion %zu: %s%s%s\n", ok ? "PASS" : "FAIL", t + 1,
                criteria[t].label, detail.empty() ? "" : " — ",
                detail.c_str());
  }
  std::printf("acceptance: %zu/%zu criteria passed\n",
              criteria.size() - static_cast<std::size_t>(failures),
              criteria.size());
  return failures == 0 ? 0 : 1;
}
