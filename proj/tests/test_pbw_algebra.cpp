#include <gtest/gtest.h>

#include "colhopf/pbw_algebra.hpp"
#include "colhopf/suites.hpp"

using namespace colhopf;
using AE = AlgebraElement;

namespace {

const ParamPoint kP{Scalar{1.3, 0.4}, Scalar{0.7, -0.2}};

PBWMonomial mono(int z, int h, Scalar a, Scalar b, bool plus, bool minus) {
  return PBWMonomial{z, h, a, b, plus, minus};
}

} // namespace

TEST(Straightening, PsiPlusPastH) {
  const Home h{kP};
  // psi+ H = (H - 2) psi+
  const AE lhs = AE::psi_plus(h) * AE::H(h);
  AE expected{h};
  expected.add_term(mono(0, 1, 0, 0, true, false), 1.0);
  expected.add_term(mono(0, 0, 0, 0, true, false), -2.0);
  EXPECT_LE(residual(lhs, expected), 1e-15);
}

TEST(Straightening, PsiMinusPastHSquared) {
  const Home h{kP};
  // psi- H^2 = (H + 2)^2 psi- = H^2 psi- + 4 H psi- + 4 psi-
  const AE lhs = AE::psi_minus(h) * (AE::H(h) * AE::H(h));
  AE expected{h};
  expected.add_term(mono(0, 2, 0, 0, false, true), 1.0);
  expected.add_term(mono(0, 1, 0, 0, false, true), 4.0);
  expected.add_term(mono(0, 0, 0, 0, false, true), 4.0);
  EXPECT_LE(residual(lhs, expected), 1e-15);
}

TEST(Straightening, OddSquaresVanish) {
  const Home h{kP, Scalar{0.8, 0.5}};
  EXPECT_TRUE((AE::psi_plus(h) * AE::psi_plus(h)).is_zero());
  EXPECT_TRUE((AE::psi_minus(h) * AE::psi_minus(h)).is_zero());
  const AE pm = AE::psi_plus(h) * AE::psi_minus(h);
  // psi+ psi- psi+ psi- = psi+ (C - psi+ psi-) psi- = C psi+ psi-
  EXPECT_LE(residual(pm * pm, anticommutator_value(h) * pm), 1e-14);
}

TEST(Straightening, PsiMinusPsiPlusAgainstTwoByTwo) {
  // Hand-derived: psi- psi+ = (q^{2Z} - 1)/(q^2 - 1) - psi+ psi-.
  const double q = 2.0;
  const ParamPoint p{q, 1.0};
  const Home h{p};
  const AE lhs = AE::psi_minus(h) * AE::psi_plus(h);
  AE expected{h};
  expected.add_term(mono(0, 0, 2.0, 0, false, false), 1.0 / 3.0);
  expected.add_term(mono(0, 0, 0, 0, false, false), -1.0 / 3.0);
  expected.add_term(mono(0, 0, 0, 0, true, true), -1.0);
  EXPECT_LE(residual(lhs, expected), 1e-15);

  // Evaluated on the 2-dim module at Z = 1: psi+ = E12, psi- = E21, so psi- psi+ = E22.
  // The central part then gives (q^2 - 1)/(q^2 - 1) = 1 and psi+ psi- = E11.
  const Scalar central = expected.coefficient(mono(0, 0, 2.0, 0, false, false)) * (q * q) +
                         expected.coefficient(PBWMonomial{});
  EXPECT_NEAR(std::abs(central - 1.0), 0.0, 1e-15);
}

TEST(Straightening, ColouredAnticommutator) {
  const Home h{kP, Scalar{1.6, -0.3}};
  const AE anti = AE::psi_plus(h) * AE::psi_minus(h) + AE::psi_minus(h) * AE::psi_plus(h);
  EXPECT_LE(residual(anti, anticommutator_value(h)), 1e-14);
}

TEST(Straightening, ExponentialsMultiply) {
  const Home h{kP};
  const AE e = AE::exponential(h, 0.3, -0.2) * AE::exponential(h, Scalar{0.1, 0.5}, 0.7);
  EXPECT_LE(residual(e, AE::exponential(h, Scalar{0.4, 0.5}, 0.5)), 1e-15);
}

TEST(Algebra, Associative) {
  ParamSampler rng{3};
  for (int i = 0; i < 40; ++i) {
    const ParamPoint p = rng.point();
    const Home h{p, rng.colour(p).value()};
    const AE x = random_element(h, rng);
    const AE y = random_element(h, rng);
    const AE z = random_element(h, rng);
    EXPECT_LE(residual((x * y) * z, x * (y * z)), 1e-12);
  }
}

TEST(Algebra, UnitIsNeutral) {
  ParamSampler rng{4};
  const Home h{kP};
  const AE x = random_element(h, rng);
  EXPECT_LE(residual(AE::unit(h) * x, x), 0.0);
  EXPECT_LE(residual(x * AE::unit(h), x), 0.0);
}

TEST(Grading, InvolutiveAutomorphism) {
  ParamSampler rng{8};
  const Home h{kP, 0.9};
  for (int i = 0; i < 20; ++i) {
    const AE x = random_element(h, rng);
    const AE y = random_element(h, rng);
    EXPECT_LE(residual(grading_automorphism(grading_automorphism(x)), x), 0.0);
    EXPECT_LE(residual(grading_automorphism(x * y), grading_automorphism(x) * grading_automorphism(y)), 1e-14);
  }
}

TEST(Grading, ParityIsMultiplicative) {
  const Home h{kP};
  const std::vector<AE> hs = {AE::H(h), AE::Z(h), AE::psi_plus(h), AE::psi_minus(h),
                              AE::exponential(h, 0.5, 0.5)};
  for (const auto& a : hs) {
    for (const auto& b : hs) {
      const AE ab = a * b;
      if (ab.is_zero()) continue;
      EXPECT_EQ(parity_of(ab), (parity_of(a) + parity_of(b)) % 2);
    }
  }
  EXPECT_EQ(parity_of(AE::H(h) + AE::psi_plus(h)), -1);
}

TEST(Compare, EqualUpToTol) {
  const Home h{kP};
  const AE x = 2.0 * AE::H(h);
  EXPECT_TRUE(equal_upto_tol(x, AE::H(h) + AE::H(h), 1e-15).equal);
  const auto c = equal_upto_tol(x, x + 1e-9 * AE::Z(h), 1e-10);
  EXPECT_FALSE(c.equal);
  EXPECT_NEAR(c.residual, 1e-9 / 2.0, 1e-20);
  // Scale floor at 1.
  EXPECT_NEAR(residual(1e-3 * AE::H(h), 2e-3 * AE::H(h)), 1e-3, 1e-18);
}

TEST(Compare, HomesMustAgree) {
  const Home a{kP, 1.0};
  const Home b{kP, 2.0};
  EXPECT_THROW(AE::H(a) + AE::H(b), DomainError);
  EXPECT_THROW(AE::H(a) * AE::H(b), DomainError);
  EXPECT_THROW(residual(AE::H(a), AE::H(b)), DomainError);
  EXPECT_THROW(multiply(AE::H(a), AE::H(a), ParamPoint{3.0, 1.0}), DomainError);
}
