#include <gtest/gtest.h>

#include "colhopf/suites.hpp"
#include "colhopf/tensor.hpp"

using namespace colhopf;
using AE = AlgebraElement;
using TE = TensorElement;

namespace {

const ParamPoint kP{Scalar{1.3, 0.4}, Scalar{0.7, -0.2}};

TE pair(const AE& a, const AE& b) { return TE::product_of({a, b}); }

TE random_pair(const Home& a, const Home& b, ParamSampler& rng) {
  TE out = pair(random_element(a, rng), random_element(b, rng));
  out += pair(random_element(a, rng), random_element(b, rng));
  return out;
}

} // namespace

TEST(TensorProduct, OddFactorsCrossWithSign) {
  const Home h{kP};
  const AE one = AE::unit(h);
  // (1 (x) psi+)(psi- (x) 1) = - psi- (x) psi+
  const TE lhs = tensor_multiply(pair(one, AE::psi_plus(h)), pair(AE::psi_minus(h), one));
  EXPECT_LE(residual(lhs, -1.0 * pair(AE::psi_minus(h), AE::psi_plus(h))), 0.0);
  // (psi+ (x) 1)(1 (x) psi-) = psi+ (x) psi-
  const TE rhs = tensor_multiply(pair(AE::psi_plus(h), one), pair(one, AE::psi_minus(h)));
  EXPECT_LE(residual(rhs, pair(AE::psi_plus(h), AE::psi_minus(h))), 0.0);
  // even factors never pick up a sign
  const TE even = tensor_multiply(pair(one, AE::H(h)), pair(AE::psi_minus(h), one));
  EXPECT_LE(residual(even, pair(AE::psi_minus(h), AE::H(h))), 0.0);
}

TEST(TensorProduct, ThreeSlotSign) {
  const Home h{kP};
  const AE one = AE::unit(h);
  // (1 (x) psi+ (x) psi-)(psi+ (x) 1 (x) 1): psi+ in slot 1 passes two odd factors
  const TE a = TE::product_of({one, AE::psi_plus(h), AE::psi_minus(h)});
  const TE b = TE::product_of({AE::psi_plus(h), one, one});
  EXPECT_LE(residual(tensor_multiply(a, b), TE::product_of({AE::psi_plus(h), AE::psi_plus(h), AE::psi_minus(h)})),
            0.0);
}

TEST(TensorProduct, Associative) {
  ParamSampler rng{21};
  const Home a{kP, 0.8};
  const Home b{kP, Scalar{1.2, 0.3}};
  for (int i = 0; i < 15; ++i) {
    const TE x = random_pair(a, b, rng);
    const TE y = random_pair(a, b, rng);
    const TE z = random_pair(a, b, rng);
    EXPECT_LE(residual(tensor_multiply(tensor_multiply(x, y), z), tensor_multiply(x, tensor_multiply(y, z))), 1e-12);
  }
}

TEST(Twist, Examples) {
  const Home h{kP};
  const TE odd_odd = graded_twist(pair(AE::psi_plus(h), AE::psi_minus(h)));
  EXPECT_LE(residual(odd_odd, -1.0 * pair(AE::psi_minus(h), AE::psi_plus(h))), 0.0);
  const TE even_odd = graded_twist(pair(AE::H(h), AE::psi_plus(h)));
  EXPECT_LE(residual(even_odd, pair(AE::psi_plus(h), AE::H(h))), 0.0);
  // The self-parity rule differs exactly on odd (x) even.
  const TE g = graded_twist(pair(AE::psi_plus(h), AE::H(h)), TwistConvention::Graded);
  const TE sp = graded_twist(pair(AE::psi_plus(h), AE::H(h)), TwistConvention::SelfParity);
  EXPECT_LE(residual(g, pair(AE::H(h), AE::psi_plus(h))), 0.0);
  EXPECT_LE(residual(sp, -1.0 * pair(AE::H(h), AE::psi_plus(h))), 0.0);
}

TEST(Twist, SwapsHomes) {
  const Home a{kP, 0.5};
  const Home b{kP, 2.0};
  const TE t = graded_twist(pair(AE::Z(a), AE::H(b)));
  EXPECT_TRUE(t.homes()[0].same_as(b));
  EXPECT_TRUE(t.homes()[1].same_as(a));
}

TEST(Twist, InvolutionAndAlgebraMap) {
  ParamSampler rng{22};
  const Home a{kP, 0.8};
  const Home b{kP, Scalar{1.2, 0.3}};
  for (int i = 0; i < 15; ++i) {
    const TE x = random_pair(a, b, rng);
    const TE y = random_pair(a, b, rng);
    EXPECT_LE(residual(graded_twist(graded_twist(x)), x), 0.0);
    EXPECT_LE(residual(graded_twist(tensor_multiply(x, y)), tensor_multiply(graded_twist(x), graded_twist(y))),
              1e-12);
  }
}

TEST(Slots, MultiplyAndApply) {
  const Home h{kP};
  const TE u = pair(AE::psi_minus(h), AE::psi_plus(h));
  EXPECT_LE(residual(multiply_slots(u), AE::psi_minus(h) * AE::psi_plus(h)), 0.0);
  const SlotMap id = [](const AE& x) { return TE::from(x); };
  EXPECT_LE(residual(apply_slotwise(u, {id, id}), u), 0.0);
  EXPECT_THROW(apply_slotwise(u, {id}), DomainError);
  EXPECT_THROW(multiply_slots(pair(AE::H(h), AE::H(Home{kP, 2.0}))), DomainError);
}

TEST(Scalars, OrderZero) {
  const TE s = TE::scalar(Scalar{2.0, -1.0});
  EXPECT_EQ(s.order(), 0u);
  EXPECT_EQ(s.as_scalar(), Scalar(2.0, -1.0));
  const Home h{kP};
  EXPECT_LE(residual(s.concat(TE::from(AE::H(h))).as_element(), Scalar{2.0, -1.0} * AE::H(h)), 0.0);
  EXPECT_THROW(static_cast<void>(TE::from(AE::H(h)).as_scalar()), DomainError);
}
