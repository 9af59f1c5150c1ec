#pragma once

// Colour maps sigma^nu : U_{q^c,s} -> U_{q^{c nu},s},
//   H -> H,  Z -> nu Z,  psi^pm -> a^nu psi^pm,
// with a^nu taken in the source copy. The colour group is GL(1, C).

#include <string>
#include <vector>

#include "colhopf/pbw_algebra.hpp"
#include "colhopf/tensor.hpp"

namespace colhopf {

namespace detail {

// Z -> z_factor Z (so q^{alpha Z} -> q^{alpha z_factor Z}), psi^pm -> psi_factor psi^pm.
inline AlgebraElement rescale(const AlgebraElement& x, Scalar new_colour, Scalar z_factor, Scalar psi_factor) {
  AlgebraElement out{Home{x.home().point, new_colour}};
  for (const auto& t : x.terms()) {
    PBWMonomial m = t.mono;
    Scalar c = t.coeff;
    for (int k = 0; k < m.z_deg; ++k) c *= z_factor;
    for (int k = 0; k < m.odd_count(); ++k) c *= psi_factor;
    m.alpha *= z_factor;
    m.beta *= z_factor;
    out.add_term(m, c);
  }
  return out;
}

} // namespace detail

/// sigma^nu applied to an element of U_{q^c,s}; the result lives in U_{q^{c nu},s}.
inline AlgebraElement sigma(Colour nu, const AlgebraElement& x) {
  const Scalar c = x.home().colour;
  const Scalar a = colour_norm_at(x.home().point, c, nu);
  return detail::rescale(x, c * nu.value(), nu.value(), a);
}

/// sigma_nu = (sigma^nu)^{-1}: U_{q^{c nu},s} -> U_{q^c,s}.
inline AlgebraElement sigma_inverse(Colour nu, const AlgebraElement& x) {
  const Scalar target = x.home().colour / nu.value();
  const Scalar a = colour_norm_at(x.home().point, target, nu);
  return detail::rescale(x, target, 1.0 / nu.value(), 1.0 / a);
}

/// sigma^{to}_{from} = sigma^{to} o sigma_{from}, mapping the copy of x (colour
/// `from`) to colour `to`, both routed through the base copy.
inline AlgebraElement colour_transfer(Colour to, const AlgebraElement& x) {
  const ParamPoint& p = x.home().point;
  const Colour from{x.home().colour};
  const Scalar a_to = colour_norm(p.q(), to);
  const Scalar a_from = colour_norm(p.q(), from);
  return detail::rescale(x, to.value(), to.value() / from.value(), a_to / a_from);
}

/// The same map as a slot map for apply_slotwise.
inline SlotMap transfer_map(Colour to) {
  return [to](const AlgebraElement& x) { return TensorElement::from(colour_transfer(to, x)); };
}

/// Multiplies odd monomials by `sign`, used to compare maps up to the sign of a^nu.
inline AlgebraElement flip_odd(const AlgebraElement& x, double sign) {
  AlgebraElement out{x.home()};
  for (const auto& t : x.terms()) out.add_term(t.mono, t.mono.parity() ? sign * t.coeff : t.coeff);
  return out;
}

/// Signed residual and residual up to a global sign on odd monomials.
struct SignedResidual {
  double signed_residual = 0.0;
  double up_to_sign = 0.0;
  bool sign_flipped = false;
};

inline SignedResidual residual_up_to_odd_sign(const AlgebraElement& x, const AlgebraElement& y) {
  const double r = residual(x, y);
  const double rf = residual(x, flip_odd(y, -1.0));
  return {r, std::min(r, rf), rf < r};
}

struct GroupLawReport {
  double composition = 0.0;         // sigma^{nu'} o sigma^nu vs sigma^{nu' nu}, up to odd sign
  double composition_signed = 0.0;  // same, no sign freedom
  double identity = 0.0;            // sigma^1 = id
  double inverse = 0.0;             // sigma^{1/nu} o sigma^nu = id, up to odd sign
  double inverse_signed = 0.0;
  double inverse_exact = 0.0;       // sigma_nu o sigma^nu = id
  double grading = 0.0;             // sigma^nu o gamma = gamma o sigma^nu
  int composition_sign_flips = 0;   // probes where the principal branches disagree
  int inverse_sign_flips = 0;

  [[nodiscard]] double max_asserted() const {
    return std::max({composition, identity, inverse, inverse_exact, grading});
  }
};

/// Group laws and grading compatibility of the colour maps on probes living at p (colour 1).
inline GroupLawReport check_group_laws(const ParamPoint& p, Colour nu, Colour nu2,
                                       const std::vector<AlgebraElement>& probes) {
  GroupLawReport rep;
  for (const auto& x : probes) {
    if (!(x.home().point == p) || x.home().colour != Scalar{1.0}) {
      throw DomainError("check_group_laws: probe not in the base copy");
    }
    const auto comp = residual_up_to_odd_sign(sigma(nu2 * nu, x), sigma(nu2, sigma(nu, x)));
    rep.composition = std::max(rep.composition, comp.up_to_sign);
    rep.composition_signed = std::max(rep.composition_signed, comp.signed_residual);
    rep.composition_sign_flips += comp.sign_flipped ? 1 : 0;

    rep.identity = std::max(rep.identity, residual(sigma(Colour{1.0}, x), x));

    AlgebraElement back = sigma(nu.inverse(), sigma(nu, x));
    back.rehome(x.home());
    const auto inv = residual_up_to_odd_sign(x, back);
    rep.inverse = std::max(rep.inverse, inv.up_to_sign);
    rep.inverse_signed = std::max(rep.inverse_signed, inv.signed_residual);
    rep.inverse_sign_flips += inv.sign_flipped ? 1 : 0;

    AlgebraElement exact = sigma_inverse(nu, sigma(nu, x));
    exact.rehome(x.home());
    rep.inverse_exact = std::max(rep.inverse_exact, residual(x, exact));

    rep.grading = std::max(rep.grading, residual(sigma(nu, grading_automorphism(x)),
                                                 grading_automorphism(sigma(nu, x))));
  }
  return rep;
}

} // namespace colhopf
