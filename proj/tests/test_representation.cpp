#include <gtest/gtest.h>

#include "colhopf/representation.hpp"
#include "colhopf/suites.hpp"

using namespace colhopf;
using AE = AlgebraElement;
using TE = TensorElement;

namespace {

const ParamPoint kP{Scalar{1.3, 0.4}, Scalar{0.7, -0.2}};

TE pair(const AE& a, const AE& b) { return TE::product_of({a, b}); }

} // namespace

TEST(Rep, Generators) {
  const Home h{kP};
  Eigen::Matrix2cd d;
  d << 1.0, 0.0, 0.0, -1.0;
  EXPECT_LE((rep(AE::H(h)).entries - d).norm(), 0.0);
  EXPECT_LE((rep(AE::Z(h)).entries - Matrix::Identity(2, 2)).norm(), 0.0);
  d << 1.0, 0.0, 0.0, 0.0;
  EXPECT_LE((rep(AE::psi_plus(h) * AE::psi_minus(h)).entries - d).norm(), 1e-15);
  d << 0.0, 0.0, 0.0, 1.0;
  EXPECT_LE((rep(AE::psi_minus(h) * AE::psi_plus(h)).entries - d).norm(), 1e-15);
}

TEST(Rep, ExponentialEvaluatesAtZOne) {
  const Home h{kP};
  const Scalar v = kP.q_pow(0.3) * kP.s_pow(-0.7);
  EXPECT_LE((rep(AE::exponential(h, 0.3, -0.7)).entries - v * Matrix::Identity(2, 2)).norm(), 1e-15);
}

TEST(Rep, OddTensorSign) {
  const Home h{kP};
  // (psi+ (x) psi-)(v1 (x) v2) = (-1)^{|v1|} psi+ v1 (x) psi- v2; only e1 (x) e0 -> e0 (x) e1 survives, |e1| = 1.
  const Matrix m = rep_tensor(pair(AE::psi_plus(h), AE::psi_minus(h))).entries;
  Matrix expected = Matrix::Zero(4, 4);
  expected(1, 2) = -1.0;
  EXPECT_LE((m - expected).norm(), 0.0);
  EXPECT_EQ(rep_tensor(pair(AE::H(h), AE::H(h))).parity, (std::vector<int>{0, 1, 1, 0}));
}

TEST(Rep, TensorRepIsAnAlgebraMap) {
  ParamSampler rng{61};
  for (int i = 0; i < 20; ++i) {
    const ParamPoint p = rng.point();
    const Home a{p, rng.colour(p).value()};
    const Home b{p, rng.colour(p).value()};
    const TE x = pair(random_element(a, rng), random_element(b, rng)) +
                 pair(random_element(a, rng), random_element(b, rng));
    const TE y = pair(random_element(a, rng), random_element(b, rng));
    const Matrix lhs = rep_tensor(tensor_multiply(x, y)).entries;
    const Matrix rhs = rep_tensor(x).entries * rep_tensor(y).entries;
    EXPECT_LE(normalized_residual(lhs, rhs), 1e-12);
  }
}

TEST(Rep, ThreeSlotAlgebraMap) {
  ParamSampler rng{62};
  const Home h{kP};
  for (int i = 0; i < 10; ++i) {
    const TE x = TE::product_of({random_element(h, rng), random_element(h, rng), random_element(h, rng)});
    const TE y = TE::product_of({random_element(h, rng), random_element(h, rng), random_element(h, rng)});
    EXPECT_LE(normalized_residual(rep_tensor(tensor_multiply(x, y)).entries,
                                  rep_tensor(x).entries * rep_tensor(y).entries),
              1e-12);
  }
}

TEST(RMatrix, RealPoint) {
  const ParamPoint p{2.0, 1.0};
  const Matrix r = coloured_R_closed_form(p, 1.0, 1.0).entries;
  Matrix expected = Matrix::Zero(4, 4);
  expected(0, 0) = 2.0;
  expected(1, 1) = 1.0;
  expected(2, 2) = 1.0;
  expected(3, 3) = 0.5;
  expected(1, 2) = 1.5; // q^{-1} (q^2 - 1)
  EXPECT_LE((r - expected).norm(), 1e-15);
  EXPECT_LE(entrywise_relative(coloured_R_from_universal(p, 1.0, 1.0).entries, expected), 1e-15);
}

TEST(RMatrix, ComplexPointFrozenValues) {
  // Independently evaluated with principal-branch complex arithmetic.
  const ParamPoint p{Scalar{1.3, 0.4}, Scalar{0.7, -0.2}};
  const Matrix r = coloured_R_closed_form(p, Scalar{0.8, 0.5}, Scalar{1.6, -0.3}).entries;
  const Scalar expected_diag[4] = {{1.016915179771709, 0.4354862091963538},
                                   {0.8348724962463802, -0.3231835558411892},
                                   {1.0416899323428794, 0.40324367844450865},
                                   {0.8309727859557123, -0.3558577900100039}};
  for (int i = 0; i < 4; ++i) EXPECT_LE(std::abs(r(i, i) - expected_diag[i]), 1e-13) << i;
  EXPECT_LE(std::abs(r(1, 2) - Scalar{0.5761086215570598, 0.8978192437617102}), 1e-13);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j && !(i == 1 && j == 2)) EXPECT_EQ(r(i, j), Scalar{});
}

TEST(RMatrix, CrossValidation) {
  ParamSampler rng{63};
  for (int i = 0; i < 50; ++i) {
    const ParamPoint p = rng.point();
    const Colour l = rng.colour(p);
    const Colour m = rng.colour(p);
    EXPECT_LE(entrywise_relative(coloured_R_closed_form(p, l, m).entries, coloured_R_from_universal(p, l, m).entries),
              1e-12);
  }
}

TEST(RMatrix, InverseClosedForm) {
  ParamSampler rng{64};
  for (int i = 0; i < 30; ++i) {
    const ParamPoint p = rng.point();
    const RFactorisation f = factorise_r(p, rng.colour(p), rng.colour(p));
    EXPECT_LE(normalized_residual(f.compose() * f.inverse(), Matrix::Identity(4, 4)), 1e-12);
    EXPECT_LE(normalized_residual(f.inverse(), f.compose().inverse()), 1e-12);
    EXPECT_LE((f.nilpotent() * f.nilpotent()).norm(), 1e-15);
  }
}

TEST(Embed, IdentityAndOddRejection) {
  const GradedMatrix id = graded(Matrix::Identity(4, 4));
  for (Slot s : {Slot::s12, Slot::s13, Slot::s23}) {
    EXPECT_LE((embed(id, s).entries - Matrix::Identity(8, 8)).norm(), 0.0);
  }
  Matrix odd = Matrix::Zero(4, 4);
  odd(0, 1) = 1.0;
  EXPECT_THROW(embed(graded(odd), Slot::s12), DomainError);
}

TEST(Embed, MatchesRepresentedTensors) {
  // embed(rep(u)) must equal rep of u placed in the chosen slots.
  ParamSampler rng{65};
  const Home h{kP};
  for (int i = 0; i < 10; ++i) {
    const AE a = random_element(h, rng);
    const AE b = random_element(h, rng);
    // keep only the even part of a (x) b
    TE u{{h, h}};
    for (const auto& ta : a.terms())
      for (const auto& tb : b.terms())
        if ((ta.mono.parity() + tb.mono.parity()) % 2 == 0) u.add_term({ta.mono, tb.mono}, ta.coeff * tb.coeff);
    const GradedMatrix r = rep_tensor(u);
    TE u12{{h, h, h}}, u13{{h, h, h}}, u23{{h, h, h}};
    for (const auto& t : u.terms()) {
      u12.add_term({t.monos[0], t.monos[1], PBWMonomial{}}, t.coeff);
      u13.add_term({t.monos[0], PBWMonomial{}, t.monos[1]}, t.coeff);
      u23.add_term({PBWMonomial{}, t.monos[0], t.monos[1]}, t.coeff);
    }
    EXPECT_LE(normalized_residual(embed(r, Slot::s12).entries, rep_tensor(u12).entries), 1e-13);
    EXPECT_LE(normalized_residual(embed(r, Slot::s13).entries, rep_tensor(u13).entries), 1e-13);
    EXPECT_LE(normalized_residual(embed(r, Slot::s23).entries, rep_tensor(u23).entries), 1e-13);
  }
}

TEST(Ybe, HoldsOnRandomDraws) {
  ParamSampler rng{66};
  for (int i = 0; i < 50; ++i) {
    const ParamPoint p = rng.point();
    EXPECT_LE(check_coloured_graded_ybe(p, rng.colour(p), rng.colour(p), rng.colour(p)), 1e-10);
  }
}

TEST(Ybe, PerturbationIsDetected) {
  ParamSampler rng{67};
  for (int i = 0; i < 50; ++i) {
    const ParamPoint p = rng.point();
    EXPECT_GT(check_coloured_graded_ybe(p, rng.colour(p), rng.colour(p), rng.colour(p), 0.01), 1e-6);
  }
}

TEST(Quasitriangular, IntertwinerOnGenerators) {
  ParamSampler rng{68};
  for (int i = 0; i < 20; ++i) {
    const ParamPoint p = rng.point();
    const Colour l = rng.colour(p), m = rng.colour(p), n = rng.colour(p);
    for (const auto& a : standard_probes(Home{p, n.value()}, rng, 2)) {
      EXPECT_LE(check_intertwiner(p, l, m, n, a), 1e-10);
    }
  }
}

TEST(Quasitriangular, Hexagons) {
  ParamSampler rng{69};
  for (int i = 0; i < 20; ++i) {
    const ParamPoint p = rng.point();
    const Colour a = rng.colour(p), b = rng.colour(p), g = rng.colour(p), l = rng.colour(p), m = rng.colour(p);
    const HexagonResiduals r = check_hexagons(p, a, b, g, l, m);
    EXPECT_LE(r.first, 1e-10);
    EXPECT_LE(r.second, 1e-10);
  }
}
