#include "doctest.h"
#include "spinform/clifford.hpp"

#include <stdexcept>

using namespace spinform;

TEST_CASE("anticommutation relation, exhaustive at n = 1 and 2") {
  for (int n : {1, 2}) {
    SpinParams p(n);
    for (int a = 1; a <= p.dimV(); ++a)
      for (int b = 1; b <= p.dimV(); ++b)
        for (Monomial m = 0; m < p.spinorDim(); ++m) {
          Spinor psi = Spinor::basis(m);
          Spinor lhs = cliffE(p, a, cliffE(p, b, psi)) +
                       cliffE(p, b, cliffE(p, a, psi));
          Spinor rhs =
              a == b ? Scalar::ofInt(-2) * psi : Spinor::zero();
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("generator actions against wedge and contraction") {
  SpinParams p(2);
  CHECK(cliffE(p, 1, Spinor::unit()) == Scalar::i() * Spinor::unit());
  CHECK(cliffE(p, 1, Spinor::basis(0b1u)) ==
        -Scalar::i() * Spinor::basis(0b1u));

  for (Monomial m = 0; m < p.spinorDim(); ++m) {
    Spinor psi = Spinor::basis(m);
    for (int j = 1; j <= p.genCount(); ++j) {
      CHECK(cliffE(p, 2 * j, psi) ==
            Scalar::i() * (contract(p, j, psi) + wedge(p, j, psi)));
      CHECK(cliffE(p, 2 * j + 1, psi) ==
            wedge(p, j, psi) - contract(p, j, psi));
    }
  }
}

TEST_CASE("isotropic vectors act by scaled wedge and contraction") {
  SpinParams p(3);
  for (Monomial m = 0; m < p.spinorDim(); m += 3) {
    Spinor psi = Spinor::basis(m);
    for (int j = 1; j <= p.genCount(); ++j) {
      CHECK(cliffVec(p, yVec(p, j), psi) ==
            Scalar::iSqrt2() * wedge(p, j, psi));
      CHECK(cliffVec(p, xVec(p, j), psi) ==
            Scalar::iSqrt2() * contract(p, j, psi));
    }
  }
}

TEST_CASE("form action factor order") {
  SpinParams p(2);
  Form e12 = wedge(basisForm(p, 1), basisForm(p, 2));
  Form e245 = wedge(basisForm(p, 2), wedge(basisForm(p, 4), basisForm(p, 5)));
  for (Monomial m = 0; m < p.spinorDim(); ++m) {
    Spinor psi = Spinor::basis(m);
    CHECK(cliffForm(p, e12, psi) == cliffE(p, 1, cliffE(p, 2, psi)));
    CHECK(cliffForm(p, e245, psi) ==
          cliffE(p, 2, cliffE(p, 4, cliffE(p, 5, psi))));
  }
  // degree-0 forms act by their coefficient
  Form half = Scalar::ofRational(rat(1, 2)) * Form::unit();
  Spinor s = Spinor::basis(0b11u);
  CHECK(cliffForm(p, half, s) == Scalar::ofRational(rat(1, 2)) * s);
}

TEST_CASE("metric and vector algebra") {
  SpinParams p(2);
  CVector v = basisVec(p, 1) + Scalar::ofInt(2) * basisVec(p, 4);
  CVector w = basisVec(p, 4) - Scalar::i() * basisVec(p, 2);
  CHECK(gMetric(v, w) == Scalar::ofInt(2));
  CHECK(gMetric(v, v) == Scalar::ofInt(5));
  CHECK(gMetric(basisVec(p, 3), basisVec(p, 5)).isZero());
  // the bilinear extension is not Hermitian: isotropic directions square to 0
  CHECK(gMetric(yVec(p, 1), yVec(p, 1)).isZero());
  CHECK(gMetric(xVec(p, 1), yVec(p, 1)) == Scalar::one());
  CHECK_THROWS_AS(basisVec(p, 8), std::out_of_range);
}

TEST_CASE("form algebra") {
  SpinParams p(2);
  Form a = basisForm(p, 1);
  Form b = basisForm(p, 4);
  CHECK(wedge(a, b) == -Scalar::one() * wedge(b, a));
  CHECK(wedge(a, a).isZero());
  CHECK(wedgePower(wedge(a, b), 0) == Form::unit());
  CHECK(wedgePower(wedge(a, b), 2).isZero());

  Form ab = wedge(a, b);
  CHECK(contractBasis(1, ab) == b);
  CHECK(contractBasis(4, ab) == -Scalar::one() * a);

  // contraction is an antiderivation
  Form c = basisForm(p, 5);
  Form abc = wedge(ab, c);
  CHECK(contractBasis(4, abc) ==
        wedge(contractBasis(4, ab), c) + wedge(ab, contractBasis(4, c)));

  CVector v = Scalar::ofInt(3) * basisVec(p, 1);
  CHECK(contractVec(v, ab) == Scalar::ofInt(3) * b);

  CHECK(conjForm(Scalar::i() * ab) == -Scalar::i() * ab);
  CHECK_THROWS_AS(a + wedge(a, b), std::invalid_argument);
}

TEST_CASE("skew map and 2-form dictionary") {
  SpinParams p(2);
  Endo t = Endo::zero(p.dimV());
  t.m[4][3] = Scalar::ofInt(2);   // e_4 -> 2 e_5
  t.m[3][4] = Scalar::ofInt(-2);  // e_5 -> -2 e_4
  CHECK(isSkew(t));
  Form theta = formFromSkew(t);
  CHECK(theta.degree == 2);
  CHECK(theta.coeff((1u << 3) | (1u << 4)) == Scalar::ofInt(2));
  CHECK(skewFromForm(p, theta) == t);

  CVector image = applyEndo(t, basisVec(p, 4));
  CHECK(image == Scalar::ofInt(2) * basisVec(p, 5));

  Endo s = Endo::identity(p.dimV());
  CHECK_FALSE(isSkew(s));
  CHECK_THROWS_AS(spinLift(p, s, Spinor::unit()), std::invalid_argument);
  CHECK(commutator(t, t) == Endo::zero(p.dimV()));
}

TEST_CASE("derivation action on forms") {
  SpinParams p(2);
  Endo t = Endo::zero(p.dimV());
  t.m[0][1] = Scalar::one();
  t.m[1][0] = -Scalar::one();
  t.m[5][3] = Scalar::sqrt2();
  t.m[3][5] = -Scalar::sqrt2();
  Form a = basisForm(p, 2) + Scalar::i() * basisForm(p, 4);
  Form b = basisForm(p, 6);
  CHECK(soActionOnForm(t, wedge(a, b)) ==
        wedge(soActionOnForm(t, a), b) + wedge(a, soActionOnForm(t, b)));
}
