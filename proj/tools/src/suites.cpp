#include "suites.hpp"

#include <array>
#include <random>
#include <stdexcept>

#include "render.hpp"
#include "spinform/bilinear.hpp"
#include "spinform/frame.hpp"
#include "spinform/isotropy.hpp"
#include "spinform/killing.hpp"
#include "spinform/linalg.hpp"

namespace spinform::cli {

namespace {

// Accumulates one named exact check over a loop of cases; remembers the first
// failing case so the detail string stays short.
struct Tally {
  long cases = 0;
  bool ok = true;
  std::string what;

  void check(bool c, const std::string& w) {
    ++cases;
    if (ok && !c) {
      ok = false;
      what = w;
    }
  }
};

CheckResult finish(const std::string& name, const Tally& t) {
  CheckResult r{name, t.ok, {}};
  r.detail = t.ok ? std::to_string(t.cases) + " cases" : t.what;
  return r;
}

std::string joinFailures(const CheckReport& rep) {
  std::string out;
  std::size_t shown = 0;
  for (const auto& f : rep.failures) {
    if (shown == 3) {
      out += "; +" + std::to_string(rep.failures.size() - shown) + " more";
      break;
    }
    if (!out.empty()) out += "; ";
    out += f;
    ++shown;
  }
  return out;
}

CheckResult fromReport(const std::string& name, const CheckReport& rep,
                       const std::string& passDetail = "ok") {
  CheckResult r{name, rep.ok, {}};
  r.detail = rep.ok ? passDetail : joinFailures(rep);
  return r;
}

std::vector<Spinor> monomialProbes(const SpinParams& p, int maxGrade) {
  std::vector<Spinor> out;
  for (std::uint32_t m = 0; m < p.spinorDim(); ++m)
    if (grade(m) <= maxGrade) out.push_back(Spinor::basis(m));
  return out;
}

std::vector<Spinor> structuredProbes(const SpinParams& p) {
  std::vector<Spinor> out;
  for (int k = -1; k < p.n; ++k) out.push_back(psiK(p, k));
  for (int k = 0; k < p.n; ++k) out.push_back(omegaPower(p, k));
  for (int k = 0; k < p.n; ++k) out.push_back(wedge(p, 1, omegaPower(p, k)));
  return out;
}

std::vector<Spinor> randomSparseProbes(const SpinParams& p, int count) {
  std::mt19937_64 rng(0xC11F0BDULL);
  std::uniform_int_distribution<std::uint32_t> pick(0, p.spinorDim() - 1);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 2);
  std::vector<Spinor> out;
  for (int t = 0; t < count; ++t) {
    Spinor s;
    for (int j = 0; j < 8; ++j)
      s.addTerm(pick(rng), Scalar(rat(num(rng), den(rng)), rat(num(rng), den(rng)),
                                  rat(num(rng), den(rng)), rat(num(rng), den(rng))));
    if (s.isZero()) s = Spinor::unit();
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Spinor> concatProbes(std::vector<Spinor> a,
                                 const std::vector<Spinor>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Endo elementarySkew(int dim, int r, int c) {
  Endo t = Endo::zero(dim);
  t.m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = Scalar::one();
  t.m[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] =
      -Scalar::one();
  return t;
}

std::string eName(int i) { return "e_" + std::to_string(i); }

// ---------------------------------------------------------------- clifford

SuiteRun runClifford(int n) {
  SuiteRun run{"clifford", n, {}};
  SpinParams p(n);
  SasakiFrame f = buildFrame(n);
  const int dim = p.dimV();
  const int maxGrade = n <= 3 ? 3 : 2;

  std::vector<Spinor> mono = monomialProbes(p, maxGrade);
  std::vector<Spinor> probes = concatProbes(
      concatProbes(mono, structuredProbes(p)), randomSparseProbes(p, 4));

  {  // e_a.e_b + e_b.e_a = -2 delta_ab
    Tally t;
    const std::vector<Spinor>& rel = n <= 4 ? probes : mono;
    for (int a = 1; a <= dim; ++a)
      for (int b = a; b <= dim; ++b)
        for (const Spinor& psi : rel) {
          Spinor lhs = cliffE(p, a, cliffE(p, b, psi)) +
                       cliffE(p, b, cliffE(p, a, psi));
          Spinor rhs = a == b ? Scalar::ofInt(-2) * psi : Spinor::zero();
          t.check(lhs == rhs, "anticommutator at " + eName(a) + "," + eName(b));
        }
    run.checks.push_back(finish("clifford.relation", t));
  }

  {  // fundamental 2-form products against omega powers
    Tally t;
    Form phi1H = horizontalPart(f.Phi[0]);
    Form phi2H = horizontalPart(f.Phi[1]);
    Form phi3H = horizontalPart(f.Phi[2]);
    for (int k = 0; k < n; ++k) {
      Spinor wk = omegaPower(p, k);
      Spinor up = omegaPower(p, k + 1);
      Spinor down = omegaPower(p, k - 1);
      Scalar kk = Scalar::ofInt(static_cast<long>(k) * (n - k));
      t.check(cliffForm(p, f.Phi0, wk).isZero(),
              "Phi_0 product at k=" + std::to_string(k));
      t.check(cliffForm(p, phi1H, wk) ==
                  Scalar::ofInt(2 * (2 * k - n + 1)) * Scalar::i() * wk,
              "Phi_1 product at k=" + std::to_string(k));
      t.check(cliffForm(p, phi2H, wk) == Scalar::ofInt(2) * (up - kk * down),
              "Phi_2 product at k=" + std::to_string(k));
      t.check(cliffForm(p, phi3H, wk) ==
                  Scalar::ofInt(-2) * Scalar::i() * (up + kk * down),
              "Phi_3 product at k=" + std::to_string(k));
    }
    run.checks.push_back(finish("clifford.product_lemma", t));
  }

  {  // <e_a.x, y> = -<x, e_a.y>
    Tally t;
    for (int a = 1; a <= dim; ++a)
      for (std::size_t j = 0; j < probes.size(); ++j) {
        const Spinor& x = probes[j];
        const Spinor& y = probes[(j + 7) % probes.size()];
        t.check(inner(cliffE(p, a, x), y) == -inner(x, cliffE(p, a, y)),
                "skew-adjointness at " + eName(a));
      }
    run.checks.push_back(finish("clifford.skew_adjoint", t));
  }

  {  // Re<X.psi, Y.psi> = g(X, Y) |psi|^2 for real X, Y
    Tally t;
    std::vector<CVector> vecs;
    for (int a = 1; a <= dim; ++a) vecs.push_back(basisVec(p, a));
    vecs.push_back(basisVec(p, 1) + Scalar::ofInt(2) * basisVec(p, 2));
    vecs.push_back(Scalar::ofRational(rat(1, 2)) * basisVec(p, 3) -
                   basisVec(p, dim));
    std::vector<Spinor> vp =
        concatProbes(structuredProbes(p), randomSparseProbes(p, 4));
    for (std::size_t a = 0; a < vecs.size(); ++a)
      for (std::size_t b = a; b < vecs.size(); ++b) {
        Scalar g = gMetric(vecs[a], vecs[b]);
        for (const Spinor& psi : vp) {
          Scalar lhs = re(inner(cliffVec(p, vecs[a], psi),
                                cliffVec(p, vecs[b], psi)));
          t.check(lhs == g * re(inner(psi, psi)),
                  "metric identity at vector pair " + std::to_string(a) + "," +
                      std::to_string(b));
        }
      }
    run.checks.push_back(finish("clifford.vector_metric", t));
  }

  // Named form set for the commutator and lift checks.
  std::vector<std::pair<std::string, Form>> thetas;
  if (n <= 4) {
    for (int i = 1; i <= 3; ++i)
      thetas.emplace_back("eta_" + std::to_string(i), f.eta[i - 1]);
    for (int i = 1; i <= 3; ++i)
      thetas.emplace_back("Phi_" + std::to_string(i), f.Phi[i - 1]);
    for (int i = 1; i <= 3; ++i)
      thetas.emplace_back("Phi_" + std::to_string(i) + "_H",
                          horizontalPart(f.Phi[i - 1]));
  } else {
    thetas.emplace_back("eta_1", f.eta[0]);
    thetas.emplace_back("Phi_2", f.Phi[1]);
    thetas.emplace_back("Phi_2_H", horizontalPart(f.Phi[1]));
  }
  thetas.emplace_back("Phi_0", f.Phi0);
  thetas.emplace_back("torsion", f.torsion);
  thetas.emplace_back("generic_3form",
                      wedge(basisForm(p, 1), wedge(basisForm(p, 2),
                                                   basisForm(p, 3))) +
                          Scalar::ofInt(2) *
                              wedge(basisForm(p, 1),
                                    wedge(basisForm(p, 2), basisForm(p, dim))));

  {  // theta.X - X.theta = ((-1)^p + 1) X _| theta + ((-1)^p - 1) X^b ^ theta
    Tally t;
    std::vector<Spinor> cp = concatProbes(mono, structuredProbes(p));
    if (n <= 4) cp = concatProbes(cp, randomSparseProbes(p, 2));
    for (const auto& [name, theta] : thetas) {
      int sgn = theta.degree % 2 == 0 ? 1 : -1;
      Scalar plus = Scalar::ofInt(sgn + 1);
      Scalar minus = Scalar::ofInt(sgn - 1);
      for (int a = 1; a <= dim; ++a) {
        Form contracted = contractBasis(a, theta);
        Form wedged = wedge(basisForm(p, a), theta);
        for (const Spinor& psi : cp) {
          Spinor lhs = cliffForm(p, theta, cliffE(p, a, psi)) -
                       cliffE(p, a, cliffForm(p, theta, psi));
          Spinor rhs = plus * cliffForm(p, contracted, psi) +
                       minus * cliffForm(p, wedged, psi);
          t.check(lhs == rhs, "form commutator for " + name + " at " + eName(a));
        }
      }
    }
    run.checks.push_back(finish("clifford.form_commutator", t));
  }

  std::vector<Endo> lifts;
  for (int i = 0; i < 3; ++i)
    lifts.push_back(skewFromForm(p, f.Phi[static_cast<std::size_t>(i)]));
  lifts.push_back(elementarySkew(dim, 0, 1));
  lifts.push_back(dim >= 5 ? elementarySkew(dim, 3, 4)
                           : elementarySkew(dim, 1, 2));

  std::vector<Spinor> lp = concatProbes(monomialProbes(p, 2), structuredProbes(p));

  {  // lift(T).X - X.lift(T) = T(X) as operators on spinors
    Tally t;
    for (std::size_t w = 0; w < lifts.size(); ++w)
      for (int a = 1; a <= dim; ++a) {
        CVector tx = applyEndo(lifts[w], basisVec(p, a));
        for (const Spinor& psi : lp) {
          Spinor lhs = spinLift(p, lifts[w], cliffE(p, a, psi)) -
                       cliffE(p, a, spinLift(p, lifts[w], psi));
          t.check(lhs == cliffVec(p, tx, psi),
                  "vector commutator for lift " + std::to_string(w) + " at " +
                      eName(a));
        }
      }
    run.checks.push_back(finish("clifford.lift_vector_commutator", t));
  }

  {  // lift(T).theta - theta.lift(T) = (derivation action of T on theta)
    Tally t;
    std::vector<std::pair<std::string, Form>> smallThetas = {
        {"eta_1", f.eta[0]},
        {"Phi_2_H", horizontalPart(f.Phi[1])},
        {"torsion", f.torsion}};
    for (std::size_t w = 0; w < lifts.size(); ++w)
      for (const auto& [name, theta] : smallThetas) {
        Form acted = soActionOnForm(lifts[w], theta);
        for (const Spinor& psi : lp) {
          Spinor lhs = spinLift(p, lifts[w], cliffForm(p, theta, psi)) -
                       cliffForm(p, theta, spinLift(p, lifts[w], psi));
          t.check(lhs == cliffForm(p, acted, psi),
                  "form commutator for lift " + std::to_string(w) + " on " +
                      name);
        }
      }
    run.checks.push_back(finish("clifford.lift_form_commutator", t));
  }

  {  // lift([T, S]) = [lift(T), lift(S)]
    Tally t;
    for (std::size_t u = 0; u < lifts.size(); ++u)
      for (std::size_t w = u + 1; w < lifts.size(); ++w) {
        Endo bracket = commutator(lifts[u], lifts[w]);
        for (const Spinor& psi : lp) {
          Spinor lhs = spinLift(p, lifts[u], spinLift(p, lifts[w], psi)) -
                       spinLift(p, lifts[w], spinLift(p, lifts[u], psi));
          t.check(lhs == spinLift(p, bracket, psi),
                  "bracket compatibility at pair " + std::to_string(u) + "," +
                      std::to_string(w));
        }
      }
    run.checks.push_back(finish("clifford.lift_bracket", t));
  }

  return run;
}

// ------------------------------------------------------------------- frame

SuiteRun runFrame(int n) {
  SuiteRun run{"frame", n, {}};
  SasakiFrame f = buildFrame(n);
  run.checks.push_back(fromReport("frame.invariants", frameInvariantChecks(f)));
  if (n >= 2) {
    run.checks.push_back(
        fromReport("frame.omega_identity", omegaFormIdentityCheck(f)));
    run.checks.push_back(
        fromReport("frame.horizontal_torsion", horizontalTorsionCheck(f)));
  }
  return run;
}

// ----------------------------------------------------------------- killing

SuiteRun runKilling(int n) {
  SuiteRun run{"killing", n, {}};
  SpinParams p(n);
  KillingConfig cfg = makeKillingConfig(n);
  KernelBasis kb = killingKernel(cfg);

  {
    int expected = n == 1 ? 2 : n + 1;
    CheckResult r{"killing.kernel_rank", kb.rank == expected,
                  "rank " + std::to_string(kb.rank) + ", expected " +
                      std::to_string(expected)};
    run.checks.push_back(r);
  }

  {
    std::vector<Spinor> expected;
    for (int k = -1; k < n; ++k) expected.push_back(psiK(p, k));
    bool same = spinorSpanEquals(kb.spinors, expected);
    run.checks.push_back(
        {"killing.kernel_span", same,
         same ? "matches span{psi_k}" : "kernel span differs from span{psi_k}"});
  }

  {  // every psi_k solves the three vertical equations
    Tally t;
    for (int i = 1; i <= 3; ++i)
      for (int k = -1; k < n; ++k)
        t.check(verticalKillingOp(cfg, i, psiK(p, k)).isZero(),
                "vertical direction " + std::to_string(i) + " on psi_" +
                    std::to_string(k));
    run.checks.push_back(finish("killing.vertical_annihilation", t));
  }

  {  // independent re-check: kernel vectors solve every direction
    Tally t;
    for (const Spinor& psi : kb.spinors) {
      for (int i = 1; i <= 3; ++i)
        t.check(verticalKillingOp(cfg, i, psi).isZero(),
                "kernel vector fails vertical direction " + std::to_string(i));
      for (int h = 4; h <= p.dimV(); ++h)
        t.check(horizontalKillingOp(cfg, h, psi).isZero(),
                "kernel vector fails horizontal direction " + eName(h));
    }
    run.checks.push_back(finish("killing.kernel_recheck", t));
  }

  if (n >= 2) {
    {  // closed-form horizontal action on omega^k and y_1 ^ omega^k
      Tally t;
      for (int q = 1; q < n; ++q)
        for (int k = 0; k < n; ++k) {
          Spinor wk = omegaPower(p, k);
          Spinor got = horizontalKillingOp(cfg, 4 * q, wk);
          Spinor want = Scalar::i() * contract(p, 2 * q, wk) -
                        wedge(p, 1, contract(p, 2 * q + 1, wk));
          t.check(got == want, "block " + std::to_string(q) + " on omega^" +
                                   std::to_string(k));
          Spinor y1wk = wedge(p, 1, wk);
          got = horizontalKillingOp(cfg, 4 * q, y1wk);
          want = Scalar::i() * wedge(p, 2 * q, y1wk) + wedge(p, 2 * q + 1, wk);
          t.check(got == want, "block " + std::to_string(q) +
                                   " on y_1^omega^" + std::to_string(k));
        }
      run.checks.push_back(finish("killing.horizontal_action_omega", t));
    }

    {  // Reeb Clifford action on the kernel basis
      Tally t;
      SasakiFrame& f = cfg.frame;
      for (int k = -1; k < n; ++k) {
        Spinor psi = psiK(p, k);
        Scalar kp1 = Scalar::ofInt(k + 1);
        Spinor up = omegaPower(p, k + 1);
        Spinor wk = omegaPower(p, k);
        t.check(cliffVec(p, f.xi[0], psi) ==
                    Scalar::i() * up - kp1 * wedge(p, 1, wk),
                "xi_1 action on psi_" + std::to_string(k));
        t.check(cliffVec(p, f.xi[1], psi) ==
                    Scalar::i() * wedge(p, 1, up) + kp1 * wk,
                "xi_2 action on psi_" + std::to_string(k));
        t.check(cliffVec(p, f.xi[2], psi) ==
                    wedge(p, 1, up) + Scalar::i() * kp1 * wk,
                "xi_3 action on psi_" + std::to_string(k));
      }
      for (int k = 0; k < n; ++k)
        t.check(cliffE(p, 2, omegaPower(p, k)) ==
                    Scalar::i() * wedge(p, 1, omegaPower(p, k)),
                "e_2 action on omega^" + std::to_string(k));
      run.checks.push_back(finish("killing.xi_action", t));
    }
  }

  return run;
}

// ------------------------------------------------------------------ eminus

const std::array<std::array<const char*, 6>, 3> kRenderedTable = {{
    // n = 2
    {{"1", "ω - i y_1", "ω - i y_1", "y_1∧ω", "1 + i y_1∧ω", "1 - i y_1∧ω"}},
    // n = 3
    {{"1", "ω - i y_1 + 1/2 i y_1∧ω^2", "ω - i y_1 - 1/2 i y_1∧ω^2",
      "y_1∧ω^2", "1 - 1/2 ω^2 + i y_1∧ω", "1 + 1/2 ω^2 - i y_1∧ω"}},
    // n = 4
    {{"1", "ω - 1/6 ω^3 - i y_1 + 1/2 i y_1∧ω^2",
      "ω + 1/6 ω^3 - i y_1 - 1/2 i y_1∧ω^2", "y_1∧ω^3",
      "1 - 1/2 ω^2 + i y_1∧ω - 1/6 i y_1∧ω^3",
      "1 + 1/2 ω^2 - i y_1∧ω - 1/6 i y_1∧ω^3"}},
}};

SuiteRun runEminus(int n) {
  SuiteRun run{"eminus", n, {}};
  SpinParams p(n);
  SasakiFrame f = buildFrame(n);

  for (int i = 1; i <= 3; ++i) {
    KernelBasis kb = eMinusKernel(f, i);
    run.checks.push_back({"eminus.rank_E" + std::to_string(i), kb.rank == 2,
                          "rank " + std::to_string(kb.rank) + ", expected 2"});
    std::vector<Spinor> closed = {eMinusClosedForm(p, i, 0),
                                  eMinusClosedForm(p, i, 1)};
    bool same = spinorSpanEquals(kb.spinors, closed);
    run.checks.push_back({"eminus.span_E" + std::to_string(i), same,
                          same ? "closed forms span the kernel"
                               : "closed forms do not span the kernel"});
  }

  run.checks.push_back(fromReport("eminus.xi_shift", xiShiftRelations(f)));

  if (n >= 2 && n <= 4) {
    Tally t;
    const auto& expected = kRenderedTable[static_cast<std::size_t>(n - 2)];
    int row = 0;
    for (int which = 0; which <= 1; ++which)
      for (int i = 1; i <= 3; ++i) {
        std::string got = renderOmega(p, eMinusClosedForm(p, i, which));
        t.check(got == expected[static_cast<std::size_t>(row)],
                "row " + std::to_string(row) + " rendered as \"" + got + "\"");
        ++row;
      }
    run.checks.push_back(finish("eminus.rendered_table", t));
  }

  return run;
}

// ---------------------------------------------------------------- bilinear

SuiteRun runBilinear(int n) {
  SuiteRun run{"bilinear", n, {}};
  SasakiFrame f = buildFrame(n);
  const Scalar lambda = Scalar::ofRational(rat(1, 2));

  for (int i = 1; i <= 3; ++i) {
    KernelBasis kb = eMinusKernel(f, i);
    for (std::size_t w = 0; w < kb.spinors.size(); ++w) {
      SasakiRecovery rec = recoverSasaki(f, lambda, i, kb.spinors[w]);
      std::string name = "bilinear.recover_E" + std::to_string(i) + "_v" +
                         std::to_string(w);
      run.checks.push_back(fromReport(name, rec.report,
                                      "structure " + std::to_string(i) +
                                          " recovered"));
    }
  }

  {  // eta = -(degree-1 squaring), d eta = 4 lambda (degree-2 squaring)
    Tally t;
    KillingConfig cfg = makeKillingConfig(n);
    KernelBasis kb = killingKernel(cfg);
    for (const Spinor& a : kb.spinors)
      for (const Spinor& b : kb.spinors) {
        t.check(etaBilinear(f, a, b) == -Scalar::one() * squaring(f, 1, a, b),
                "degree-1 squaring pairing");
        t.check(dEtaBilinear(f, lambda, a, b) ==
                    (Scalar::ofInt(4) * lambda) * squaring(f, 2, a, b),
                "degree-2 squaring pairing");
      }
    run.checks.push_back(finish("bilinear.squaring_pairing", t));
  }

  return run;
}

// ---------------------------------------------------------------- isotropy

SuiteRun runIsotropy(int n) {
  SuiteRun run{"isotropy", n, {}};
  SpinParams p(n);
  SasakiFrame f = buildFrame(n);

  run.checks.push_back(fromReport("isotropy.algebra", isotropyAlgebraChecks(f),
                                  std::to_string(spBasis(p).size()) +
                                      " generators"));

  {
    std::vector<Spinor> inv = invariantSpinors(p);
    bool rankOk = static_cast<int>(inv.size()) == 2 * n;
    std::vector<Spinor> expected;
    for (int k = 0; k < n; ++k) {
      expected.push_back(omegaPower(p, k));
      expected.push_back(wedge(p, 1, omegaPower(p, k)));
    }
    bool spanOk = spinorSpanEquals(inv, expected);
    run.checks.push_back({"isotropy.invariant_spinors", rankOk && spanOk,
                          rankOk && spanOk
                              ? "rank " + std::to_string(inv.size()) +
                                    ", span{omega^k, y_1^omega^k}"
                              : "rank " + std::to_string(inv.size()) +
                                    ", span match: " +
                                    (spanOk ? "yes" : "no")});
  }

  run.checks.push_back(
      fromReport("isotropy.anti_holomorphic", antiHolomorphicDims(p)));

  if (n <= 4) {
    std::vector<Form> forms = invariantForms(p, 2, true);
    bool rankOk = forms.size() == 3;
    std::vector<SparseVec> got, want;
    for (const Form& a : forms) got.push_back(a.terms);
    for (int i = 0; i < 3; ++i)
      want.push_back(horizontalPart(f.Phi[static_cast<std::size_t>(i)]).terms);
    bool spanOk = sparseSpanEquals(got, want);
    run.checks.push_back({"isotropy.two_forms", rankOk && spanOk,
                          rankOk && spanOk
                              ? "rank 3, span{Phi_i restricted}"
                              : "rank " + std::to_string(forms.size()) +
                                    ", span match: " +
                                    (spanOk ? "yes" : "no")});
  }

  if (n <= 3) {
    CheckReport merged;
    for (int k = 0; k <= 3; ++k) {
      CheckReport rep = tauSpanCheck(f, k);
      if (!rep.ok) {
        merged.ok = false;
        for (const auto& what : rep.failures)
          merged.failures.push_back("degree " + std::to_string(k) + ": " + what);
      }
    }
    run.checks.push_back(
        fromReport("isotropy.tau_span", merged, "degrees 0..3"));
    run.checks.push_back(
        fromReport("isotropy.products", invariantProductCheck(f)));
  }

  return run;
}

}  // namespace

bool SuiteRun::allPass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const std::vector<std::string>& suiteNames() {
  static const std::vector<std::string> names = {
      "clifford", "frame", "killing", "eminus", "bilinear", "isotropy"};
  return names;
}

bool isSuiteName(const std::string& suite) {
  for (const auto& s : suiteNames())
    if (s == suite) return true;
  return false;
}

int suiteMinN(const std::string& suite) { return suite == "isotropy" ? 2 : 1; }

int suiteMaxN(const std::string& suite) {
  if (suite == "clifford" || suite == "frame") return 6;
  if (suite == "killing" || suite == "eminus" || suite == "isotropy") return 5;
  if (suite == "bilinear") return 4;
  throw std::invalid_argument("unknown suite: " + suite);
}

SuiteRun runSuite(const std::string& suite, int n) {
  if (suite == "clifford") return runClifford(n);
  if (suite == "frame") return runFrame(n);
  if (suite == "killing") return runKilling(n);
  if (suite == "eminus") return runEminus(n);
  if (suite == "bilinear") return runBilinear(n);
  if (suite == "isotropy") return runIsotropy(n);
  throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace spinform::cli
