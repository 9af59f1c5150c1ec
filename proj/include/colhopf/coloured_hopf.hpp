#pragma once

// Coloured comultiplication, counit and antipode of U_{q,s}(gl(1/1)):
//
//   Delta^{l,m}_{q,n}(H)     = H (x) 1 + 1 (x) H
//   Delta^{l,m}_{q,n}(Z)     = (l/n) Z (x) 1 + (m/n) 1 (x) Z
//   Delta^{l,m}_{q,n}(psi^pm) = (a^l/a^n) psi^pm (x) s^{-+ m Z/2} q^{m Z}
//                             + (a^m/a^n) s^{pm l Z/2} (x) psi^pm
//   eps(X) = 0,  S^m_{q,n}(H) = -H,  S^m_{q,n}(Z) = -(m/n) Z,
//   S^m_{q,n}(psi^pm) = -(a^m/a^n) q^{-m Z} psi^pm
//
// extended multiplicatively (Delta, eps) or as a graded anti-homomorphism (S).

#include <algorithm>
#include <string>
#include <vector>

#include "colhopf/colour_group.hpp"
#include "colhopf/pbw_algebra.hpp"
#include "colhopf/tensor.hpp"

namespace colhopf {

/// Colours of a coloured map: output slots (lambda, mu) and input colour nu.
struct ColouredMapContext {
  ParamPoint p;
  Colour lambda{1.0};
  Colour mu{1.0};
  Colour nu{1.0};

  [[nodiscard]] Home input_home() const { return Home{p, nu.value()}; }
  [[nodiscard]] Home lambda_home() const { return Home{p, lambda.value()}; }
  [[nodiscard]] Home mu_home() const { return Home{p, mu.value()}; }
};

/// Images of the generators under an algebra map into a graded tensor square,
/// together with the rule for the central exponentials.
struct CoproductTable {
  std::vector<Home> homes;
  TensorElement dH;
  TensorElement dZ;
  TensorElement d_plus;
  TensorElement d_minus;
  // q^{alpha Z} s^{beta Z} -> q^{alpha l Z} s^{beta l Z} (x) q^{alpha r Z} s^{beta r Z}
  Scalar left_scale;
  Scalar right_scale;
};

namespace detail {

inline void require_home(const AlgebraElement& x, const Home& h, const char* what) {
  if (!x.home().same_as(h)) {
    throw DomainError(std::string(what) + ": element does not live in the input copy of the map");
  }
}

inline TensorElement power(const TensorElement& base, int n, const TensorElement& one) {
  TensorElement r = one;
  for (int k = 0; k < n; ++k) r = tensor_multiply(r, base);
  return r;
}

/// Multiplicative extension of a generator table to an arbitrary element.
inline TensorElement extend_coproduct(const CoproductTable& t, const AlgebraElement& x) {
  const TensorElement one = TensorElement::unit(t.homes);
  TensorElement out{t.homes};
  for (const auto& term : x.terms()) {
    const PBWMonomial& m = term.mono;
    TensorElement acc = term.coeff * one;
    acc = tensor_multiply(acc, power(t.dZ, m.z_deg, one));
    acc = tensor_multiply(acc, power(t.dH, m.h_deg, one));
    if (m.has_exponential()) {
      TensorElement e = TensorElement::product_of(
          {AlgebraElement::exponential(t.homes[0], m.alpha * t.left_scale, m.beta * t.left_scale),
           AlgebraElement::exponential(t.homes[1], m.alpha * t.right_scale, m.beta * t.right_scale)});
      acc = tensor_multiply(acc, e);
    }
    if (m.plus) acc = tensor_multiply(acc, t.d_plus);
    if (m.minus) acc = tensor_multiply(acc, t.d_minus);
    out += acc;
  }
  return out;
}

} // namespace detail

/// Generator table of Delta^{lambda,mu}_{q,nu}.
inline CoproductTable coloured_coproduct_table(const ColouredMapContext& ctx) {
  const Home hl = ctx.lambda_home();
  const Home hm = ctx.mu_home();
  const Scalar l = ctx.lambda.value();
  const Scalar m = ctx.mu.value();
  const Scalar n = ctx.nu.value();
  const Scalar q = ctx.p.q();
  const Scalar al = colour_norm(q, ctx.lambda);
  const Scalar am = colour_norm(q, ctx.mu);
  const Scalar an = colour_norm(q, ctx.nu);

  using AE = AlgebraElement;
  auto tp = [](const AE& a, const AE& b) { return TensorElement::product_of({a, b}); };

  TensorElement dH = tp(AE::H(hl), AE::unit(hm)) + tp(AE::unit(hl), AE::H(hm));
  TensorElement dZ = (l / n) * tp(AE::Z(hl), AE::unit(hm)) + (m / n) * tp(AE::unit(hl), AE::Z(hm));
  TensorElement dp = (al / an) * tp(AE::psi_plus(hl), AE::exponential(hm, m, -m / 2.0)) +
                     (am / an) * tp(AE::exponential(hl, 0.0, l / 2.0), AE::psi_plus(hm));
  TensorElement dm = (al / an) * tp(AE::psi_minus(hl), AE::exponential(hm, m, m / 2.0)) +
                     (am / an) * tp(AE::exponential(hl, 0.0, -l / 2.0), AE::psi_minus(hm));
  return CoproductTable{{hl, hm}, dH, dZ, dp, dm, l / n, m / n};
}

/// Generator table of the uncoloured coproduct of U_{q,s}(gl(1/1)) (all copies at colour 1).
inline CoproductTable standard_coproduct_table(const ParamPoint& p) {
  const Home h{p};
  using AE = AlgebraElement;
  auto tp = [](const AE& a, const AE& b) { return TensorElement::product_of({a, b}); };
  TensorElement dH = tp(AE::H(h), AE::unit(h)) + tp(AE::unit(h), AE::H(h));
  TensorElement dZ = tp(AE::Z(h), AE::unit(h)) + tp(AE::unit(h), AE::Z(h));
  TensorElement dp = tp(AE::psi_plus(h), AE::exponential(h, 1.0, -0.5)) +
                     tp(AE::exponential(h, 0.0, 0.5), AE::psi_plus(h));
  TensorElement dm = tp(AE::psi_minus(h), AE::exponential(h, 1.0, 0.5)) +
                     tp(AE::exponential(h, 0.0, -0.5), AE::psi_minus(h));
  return CoproductTable{{h, h}, dH, dZ, dp, dm, 1.0, 1.0};
}

/// Delta^{lambda,mu}_{q,nu}(x) for x in U_{q^nu,s}.
inline TensorElement coproduct(const ColouredMapContext& ctx, const AlgebraElement& x) {
  detail::require_home(x, ctx.input_home(), "coproduct");
  return detail::extend_coproduct(coloured_coproduct_table(ctx), x);
}

/// Uncoloured coproduct Delta_q on the base copy.
inline TensorElement standard_coproduct(const ParamPoint& p, const AlgebraElement& x) {
  detail::require_home(x, Home{p}, "standard_coproduct");
  return detail::extend_coproduct(standard_coproduct_table(p), x);
}

/// Delta^{lambda,mu}_{q,nu} built from its definition
/// (sigma^lambda (x) sigma^mu) o Delta_q o sigma_nu.
inline TensorElement coproduct_by_definition(const ColouredMapContext& ctx, const AlgebraElement& x) {
  detail::require_home(x, ctx.input_home(), "coproduct_by_definition");
  const AlgebraElement base = colour_transfer(Colour{1.0}, x);
  return apply_slotwise(standard_coproduct(ctx.p, base),
                        {transfer_map(ctx.lambda), transfer_map(ctx.mu)});
}

/// eps_{q,nu}(x): generators vanish, exponentials and the unit give 1.
inline Scalar counit(const ColouredMapContext& ctx, const AlgebraElement& x) {
  detail::require_home(x, ctx.input_home(), "counit");
  Scalar r{};
  for (const auto& t : x.terms()) {
    const PBWMonomial& m = t.mono;
    if (m.z_deg == 0 && m.h_deg == 0 && !m.plus && !m.minus) r += t.coeff;
  }
  return r;
}

/// Uncoloured counit of U_{q,s}(gl(1/1)).
inline Scalar standard_counit(const AlgebraElement& x) {
  Scalar r{};
  for (const auto& t : x.terms()) {
    if (t.mono.z_deg == 0 && t.mono.h_deg == 0 && !t.mono.plus && !t.mono.minus) r += t.coeff;
  }
  return r;
}

namespace detail {

struct AntipodeTable {
  Home out;
  AlgebraElement sH;
  AlgebraElement sZ;
  AlgebraElement s_plus;
  AlgebraElement s_minus;
  Scalar exp_scale; // q^{alpha Z} s^{beta Z} -> q^{-alpha r Z} s^{-beta r Z}
};

inline AlgebraElement power(const AlgebraElement& base, int n, const AlgebraElement& one) {
  AlgebraElement r = one;
  for (int k = 0; k < n; ++k) r = multiply(r, base);
  return r;
}

// Graded anti-homomorphic extension; on Z^a H^b E psi+ psi- the only odd pair is (psi+, psi-).
inline AlgebraElement extend_antipode(const AntipodeTable& t, const AlgebraElement& x) {
  const AlgebraElement one = AlgebraElement::unit(t.out);
  AlgebraElement out{t.out};
  for (const auto& term : x.terms()) {
    const PBWMonomial& m = term.mono;
    const Scalar sign = (m.plus && m.minus) ? -1.0 : 1.0;
    AlgebraElement acc = (sign * term.coeff) * one;
    if (m.minus) acc = multiply(acc, t.s_minus);
    if (m.plus) acc = multiply(acc, t.s_plus);
    if (m.has_exponential()) {
      acc = multiply(acc, AlgebraElement::exponential(t.out, -m.alpha * t.exp_scale, -m.beta * t.exp_scale));
    }
    acc = multiply(acc, power(t.sH, m.h_deg, one));
    acc = multiply(acc, power(t.sZ, m.z_deg, one));
    out += acc;
  }
  return out;
}

} // namespace detail

/// S^{mu}_{q,nu}(x) for x in U_{q^nu,s}; result in U_{q^mu,s}.
inline AlgebraElement antipode(const ColouredMapContext& ctx, const AlgebraElement& x) {
  detail::require_home(x, ctx.input_home(), "antipode");
  const Home hm = ctx.mu_home();
  const Scalar ratio = ctx.mu.value() / ctx.nu.value();
  const Scalar am = colour_norm(ctx.p.q(), ctx.mu);
  const Scalar an = colour_norm(ctx.p.q(), ctx.nu);
  using AE = AlgebraElement;
  const AE e = AE::exponential(hm, -ctx.mu.value(), 0.0);
  detail::AntipodeTable t{hm,
                          -AE::H(hm),
                          -ratio * AE::Z(hm),
                          (-am / an) * multiply(e, AE::psi_plus(hm)),
                          (-am / an) * multiply(e, AE::psi_minus(hm)),
                          ratio};
  return detail::extend_antipode(t, x);
}

/// Uncoloured antipode S_q on the base copy.
inline AlgebraElement standard_antipode(const ParamPoint& p, const AlgebraElement& x) {
  detail::require_home(x, Home{p}, "standard_antipode");
  const Home h{p};
  using AE = AlgebraElement;
  const AE e = AE::exponential(h, -1.0, 0.0);
  detail::AntipodeTable t{h, -AE::H(h), -AE::Z(h), -multiply(e, AE::psi_plus(h)),
                          -multiply(e, AE::psi_minus(h)), 1.0};
  return detail::extend_antipode(t, x);
}

// ---------------------------------------------------------------------------
// Slot maps

inline SlotMap coproduct_map(const ParamPoint& p, Colour lambda, Colour mu) {
  return [p, lambda, mu](const AlgebraElement& x) {
    return coproduct(ColouredMapContext{p, lambda, mu, Colour{x.home().colour}}, x);
  };
}

inline SlotMap counit_map(const ParamPoint& p) {
  return [p](const AlgebraElement& x) {
    return TensorElement::scalar(counit(ColouredMapContext{p, 1.0, 1.0, Colour{x.home().colour}}, x));
  };
}

inline SlotMap antipode_map(const ParamPoint& p, Colour mu) {
  return [p, mu](const AlgebraElement& x) {
    return TensorElement::from(antipode(ColouredMapContext{p, 1.0, mu, Colour{x.home().colour}}, x));
  };
}

// ---------------------------------------------------------------------------
// Verifiers. Each returns the largest residual over the probes.

struct AxiomResidual {
  std::string name;
  double residual = 0.0;
};

/// Colour-transformation laws of Delta, eps and S. `colours` holds
/// (lambda, mu, nu, alpha, beta, gamma); probes live in U_{q^nu,s}.
inline std::vector<AxiomResidual> verify_colour_transformations(const ParamPoint& p,
                                                                const std::vector<Colour>& colours,
                                                                const std::vector<AlgebraElement>& probes) {
  if (colours.size() != 6) throw DomainError("verify_colour_transformations: six colours required");
  const Colour lambda = colours[0], mu = colours[1], nu = colours[2];
  const Colour alpha = colours[3], beta = colours[4], gamma = colours[5];
  double r_delta_out = 0, r_delta_in = 0, r_eps = 0, r_s_out = 0, r_s_in = 0;
  for (const auto& x : probes) {
    const TensorElement target = coproduct({p, lambda, mu, nu}, x);
    // (sigma^lambda_alpha (x) sigma^mu_beta) o Delta^{alpha,beta}_{q,nu}
    const TensorElement out_route =
        apply_slotwise(coproduct({p, alpha, beta, nu}, x), {transfer_map(lambda), transfer_map(mu)});
    // Delta^{lambda,mu}_{q,gamma} o sigma^gamma_nu
    const TensorElement in_route = coproduct({p, lambda, mu, gamma}, colour_transfer(gamma, x));
    r_delta_out = std::max(r_delta_out, residual(target, out_route));
    r_delta_in = std::max(r_delta_in, residual(target, in_route));

    // eps_{q,alpha} o sigma^alpha_nu = eps_{q,nu}
    const Scalar e1 = counit({p, 1.0, 1.0, alpha}, colour_transfer(alpha, x));
    const Scalar e0 = counit({p, 1.0, 1.0, nu}, x);
    r_eps = std::max(r_eps, std::abs(e1 - e0) / std::max({1.0, std::abs(e0), std::abs(e1)}));

    // sigma^mu_alpha o S^alpha_{q,nu} = S^mu_{q,nu} = S^mu_{q,beta} o sigma^beta_nu
    const AlgebraElement s_target = antipode({p, 1.0, mu, nu}, x);
    const AlgebraElement s_out = colour_transfer(mu, antipode({p, 1.0, alpha, nu}, x));
    const AlgebraElement s_in = antipode({p, 1.0, mu, beta}, colour_transfer(beta, x));
    r_s_out = std::max(r_s_out, residual(s_target, s_out));
    r_s_in = std::max(r_s_in, residual(s_target, s_in));
  }
  return {{"coproduct_output_colours", r_delta_out},
          {"coproduct_input_colour", r_delta_in},
          {"counit_colour", r_eps},
          {"antipode_output_colour", r_s_out},
          {"antipode_input_colour", r_s_in}};
}

/// Generalised coassociativity. `colours` holds (alpha, beta, gamma, lambda, mu, lambda', mu', nu):
/// (Delta^{alpha,beta}_{q,lambda} (x) sigma^gamma_mu) o Delta^{lambda,mu}_{q,nu}
///   = (sigma^alpha_{lambda'} (x) Delta^{beta,gamma}_{q,mu'}) o Delta^{lambda',mu'}_{q,nu}.
inline double verify_coassociativity(const ParamPoint& p, const std::vector<Colour>& colours,
                                     const std::vector<AlgebraElement>& probes) {
  if (colours.size() != 8) throw DomainError("verify_coassociativity: eight colours required");
  const Colour alpha = colours[0], beta = colours[1], gamma = colours[2];
  const Colour lambda = colours[3], mu = colours[4], lambda2 = colours[5], mu2 = colours[6];
  const Colour nu = colours[7];
  double r = 0.0;
  for (const auto& x : probes) {
    const TensorElement lhs = apply_slotwise(coproduct({p, lambda, mu, nu}, x),
                                             {coproduct_map(p, alpha, beta), transfer_map(gamma)});
    const TensorElement rhs = apply_slotwise(coproduct({p, lambda2, mu2, nu}, x),
                                             {transfer_map(alpha), coproduct_map(p, beta, gamma)});
    r = std::max(r, residual(lhs, rhs));
  }
  return r;
}

/// Generalised counit axiom. `colours` holds (alpha, lambda, mu, lambda', mu', nu):
/// (eps_{q,lambda} (x) sigma^alpha_mu) o Delta^{lambda,mu}_{q,nu}
///   = (sigma^alpha_{lambda'} (x) eps_{q,mu'}) o Delta^{lambda',mu'}_{q,nu} = sigma^alpha_nu.
inline std::vector<AxiomResidual> verify_counit_axiom(const ParamPoint& p, const std::vector<Colour>& colours,
                                                      const std::vector<AlgebraElement>& probes) {
  if (colours.size() != 6) throw DomainError("verify_counit_axiom: six colours required");
  const Colour alpha = colours[0], lambda = colours[1], mu = colours[2];
  const Colour lambda2 = colours[3], mu2 = colours[4], nu = colours[5];
  double r_left = 0.0, r_right = 0.0;
  for (const auto& x : probes) {
    const AlgebraElement target = colour_transfer(alpha, x);
    const AlgebraElement left =
        apply_slotwise(coproduct({p, lambda, mu, nu}, x), {counit_map(p), transfer_map(alpha)}).as_element();
    const AlgebraElement right =
        apply_slotwise(coproduct({p, lambda2, mu2, nu}, x), {transfer_map(alpha), counit_map(p)}).as_element();
    r_left = std::max(r_left, residual(target, left));
    r_right = std::max(r_right, residual(target, right));
  }
  return {{"counit_left", r_left}, {"counit_right", r_right}};
}

/// Generalised antipode axiom. `colours` holds (alpha, lambda, mu, lambda', mu', nu):
/// m o (S^alpha_{q,lambda} (x) sigma^alpha_mu) o Delta^{lambda,mu}_{q,nu}
///   = m o (sigma^alpha_{lambda'} (x) S^alpha_{q,mu'}) o Delta^{lambda',mu'}_{q,nu} = iota o eps_{q,nu}.
inline std::vector<AxiomResidual> verify_antipode_axiom(const ParamPoint& p, const std::vector<Colour>& colours,
                                                        const std::vector<AlgebraElement>& probes) {
  if (colours.size() != 6) throw DomainError("verify_antipode_axiom: six colours required");
  const Colour alpha = colours[0], lambda = colours[1], mu = colours[2];
  const Colour lambda2 = colours[3], mu2 = colours[4], nu = colours[5];
  const Home out{p, alpha.value()};
  double r_left = 0.0, r_right = 0.0;
  for (const auto& x : probes) {
    const AlgebraElement target = counit({p, 1.0, 1.0, nu}, x) * AlgebraElement::unit(out);
    const AlgebraElement left = multiply_slots(
        apply_slotwise(coproduct({p, lambda, mu, nu}, x), {antipode_map(p, alpha), transfer_map(alpha)}));
    const AlgebraElement right = multiply_slots(
        apply_slotwise(coproduct({p, lambda2, mu2, nu}, x), {transfer_map(alpha), antipode_map(p, alpha)}));
    r_left = std::max(r_left, residual(target, left));
    r_right = std::max(r_right, residual(target, right));
  }
  return {{"antipode_left", r_left}, {"antipode_right", r_right}};
}

/// (m (x) m) o (id (x) tau (x) id) o (Delta x (x) Delta y), with the chosen twist sign.
inline TensorElement four_slot_product(const TensorElement& dx, const TensorElement& dy,
                                       TwistConvention conv = TwistConvention::Graded) {
  dx.check_homes(dy);
  TensorElement out{dx.homes()};
  for (const auto& a : dx.terms()) {
    for (const auto& b : dy.terms()) {
      // a1 (x) a2 (x) b1 (x) b2 -> sign a1 (x) b1 (x) a2 (x) b2 -> a1 b1 (x) a2 b2
      const int sign = twist_sign(a.monos[1].parity(), b.monos[0].parity(), conv);
      const TensorElement prod = TensorElement::product_of(
          {multiply_monomials(a.monos[0], b.monos[0], dx.homes()[0]),
           multiply_monomials(a.monos[1], b.monos[1], dx.homes()[1])});
      out += (static_cast<double>(sign) * a.coeff * b.coeff) * prod;
    }
  }
  return out;
}

struct BialgebraResidual {
  double coproduct_of_product = 0.0; // Delta o m = (m (x) m)(id (x) tau (x) id)(Delta (x) Delta)
  double coproduct_of_unit = 0.0;    // Delta o iota = iota (x) iota
  double counit_of_product = 0.0;    // eps o m = eps (x) eps
  double counit_of_unit = 0.0;       // eps o iota = 1
};

/// Generalised bialgebra axioms for Delta^{lambda,mu}_{q,nu} on pairs living in U_{q^nu,s}.
inline BialgebraResidual verify_bialgebra(const ParamPoint& p, Colour lambda, Colour mu, Colour nu,
                                          const std::vector<std::pair<AlgebraElement, AlgebraElement>>& pairs,
                                          TwistConvention conv = TwistConvention::Graded) {
  const ColouredMapContext ctx{p, lambda, mu, nu};
  BialgebraResidual r;
  for (const auto& [x, y] : pairs) {
    const TensorElement lhs = coproduct(ctx, multiply(x, y));
    const TensorElement rhs = four_slot_product(coproduct(ctx, x), coproduct(ctx, y), conv);
    r.coproduct_of_product = std::max(r.coproduct_of_product, residual(lhs, rhs));
    const Scalar e_xy = counit(ctx, multiply(x, y));
    const Scalar e_x_e_y = counit(ctx, x) * counit(ctx, y);
    r.counit_of_product = std::max(
        r.counit_of_product, std::abs(e_xy - e_x_e_y) / std::max({1.0, std::abs(e_xy), std::abs(e_x_e_y)}));
  }
  const AlgebraElement one = AlgebraElement::unit(ctx.input_home());
  r.coproduct_of_unit =
      residual(coproduct(ctx, one), TensorElement::unit({ctx.lambda_home(), ctx.mu_home()}));
  r.counit_of_unit = std::abs(counit(ctx, one) - 1.0);
  return r;
}

} // namespace colhopf
