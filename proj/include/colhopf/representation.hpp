#pragma once

// Two-dimensional representation
//   D(Z) = 1, D(H) = diag(1, -1), D(psi+) = E12, D(psi-) = E21,
// basis parities (even, odd), graded tensor representations
//   (a (x) b (x) c)(v1 (x) v2 (x) v3) = (-1)^{|b||v1| + |c|(|v1|+|v2|)} a v1 (x) b v2 (x) c v3,
// and the coloured R-matrix with its quasitriangularity and Yang-Baxter checks.

#include <Eigen/Dense>

#include <array>
#include <utility>
#include <vector>

#include "colhopf/coloured_hopf.hpp"

namespace colhopf {

using Matrix = Eigen::MatrixXcd;

/// Dense complex matrix on a tensor power of the parity-graded 2-dim space.
struct GradedMatrix {
  Matrix entries;
  std::vector<int> parity;

  [[nodiscard]] Eigen::Index dim() const { return entries.rows(); }
};

/// Parities of the product basis of the n-fold tensor power (big-endian slot order).
inline std::vector<int> tensor_parities(std::size_t order) {
  const std::size_t dim = std::size_t{1} << order;
  std::vector<int> par(dim);
  for (std::size_t i = 0; i < dim; ++i) par[i] = __builtin_popcountll(i) % 2;
  return par;
}

inline GradedMatrix graded(Matrix m) {
  std::size_t order = 0;
  while ((Eigen::Index{1} << order) < m.rows()) ++order;
  return GradedMatrix{std::move(m), tensor_parities(order)};
}

/// Homogeneous operator on the 2-dim space.
struct HomogeneousOp {
  Eigen::Matrix2cd op;
  int parity;
};

/// A term c * A_1 (x) ... (x) A_n with homogeneous factors.
struct ElementaryTensor {
  Scalar coeff;
  std::vector<HomogeneousOp> factors;
};

/// Operator of a sum of homogeneous elementary tensors under the graded action.
inline Matrix represent_elementary(const std::vector<ElementaryTensor>& terms, std::size_t order) {
  const Eigen::Index dim = Eigen::Index{1} << order;
  Matrix out = Matrix::Zero(dim, dim);
  for (const auto& t : terms) {
    if (t.factors.size() != order) throw DomainError("represent_elementary: wrong order");
    for (Eigen::Index col = 0; col < dim; ++col) {
      // Column basis vector e_{j_1} (x) ... (x) e_{j_n}; slot 0 is the most significant bit.
      std::vector<int> j(order);
      for (std::size_t k = 0; k < order; ++k) j[k] = static_cast<int>((col >> (order - 1 - k)) & 1);
      int sign_exp = 0;
      int parity_before = 0;
      for (std::size_t k = 0; k < order; ++k) {
        sign_exp += t.factors[k].parity * parity_before;
        parity_before += j[k];
      }
      const double sign = (sign_exp % 2) ? -1.0 : 1.0;
      for (Eigen::Index row = 0; row < dim; ++row) {
        Scalar v = t.coeff * sign;
        for (std::size_t k = 0; k < order && v != Scalar{}; ++k) {
          const int i = static_cast<int>((row >> (order - 1 - k)) & 1);
          v *= t.factors[k].op(i, j[k]);
        }
        out(row, col) += v;
      }
    }
  }
  return out;
}

/// D of a single monomial (Z^a acts as 1, q^{alpha Z} s^{beta Z} as q^alpha s^beta).
inline Eigen::Matrix2cd rep_monomial(const ParamPoint& p, const PBWMonomial& m) {
  Eigen::Matrix2cd r = Eigen::Matrix2cd::Identity();
  if (m.h_deg % 2 == 1) r(1, 1) = -1.0;
  if (m.has_exponential()) r *= std::exp(m.alpha * p.log_q() + m.beta * p.log_s());
  Eigen::Matrix2cd psi = Eigen::Matrix2cd::Identity();
  if (m.plus && m.minus) {
    psi << 1.0, 0.0, 0.0, 0.0;
  } else if (m.plus) {
    psi << 0.0, 1.0, 0.0, 0.0;
  } else if (m.minus) {
    psi << 0.0, 0.0, 1.0, 0.0;
  }
  return r * psi;
}

/// D(x) as a 2x2 graded matrix.
inline GradedMatrix rep(const AlgebraElement& x) {
  Matrix m = Matrix::Zero(2, 2);
  for (const auto& t : x.terms()) m += t.coeff * rep_monomial(x.home().point, t.mono);
  return GradedMatrix{m, {0, 1}};
}

/// Graded representation of a tensor element of order 1, 2 or 3.
inline GradedMatrix rep_tensor(const TensorElement& u) {
  const std::size_t n = u.order();
  if (n < 1 || n > 3) throw DomainError("rep_tensor: order must be 1, 2 or 3");
  std::vector<ElementaryTensor> terms;
  terms.reserve(u.terms().size());
  for (const auto& t : u.terms()) {
    ElementaryTensor e{t.coeff, {}};
    for (std::size_t k = 0; k < n; ++k) {
      e.factors.push_back(HomogeneousOp{rep_monomial(u.homes()[k].point, t.monos[k]), t.monos[k].parity()});
    }
    terms.push_back(std::move(e));
  }
  return GradedMatrix{represent_elementary(terms, n), tensor_parities(n)};
}

// ---------------------------------------------------------------------------
// Exponentials of bilinears in commuting even generators.

/// exp( sum_{i != j} coeff(i, j) H_i Z_j ), with H_i, Z_j acting in slots i, j.
struct BilinearExponential {
  Eigen::MatrixXcd coeff;

  [[nodiscard]] std::size_t order() const { return static_cast<std::size_t>(coeff.rows()); }

  /// Image of one old slot: new slot index, with H -> h * H_new and Z -> z * Z_new.
  struct SlotImage {
    std::size_t slot;
    Scalar h;
    Scalar z;
  };

  /// Applies even algebra maps slot-wise, where each map sends H and Z of
  /// old slot k to linear combinations of H and Z in new slots.
  [[nodiscard]] BilinearExponential transform(const std::vector<std::vector<SlotImage>>& images,
                                              std::size_t new_order) const {
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(new_order),
                                                static_cast<Eigen::Index>(new_order));
    for (std::size_t i = 0; i < order(); ++i) {
      for (std::size_t j = 0; j < order(); ++j) {
        const Scalar v = coeff(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        if (v == Scalar{}) continue;
        for (const auto& hi : images[i]) {
          for (const auto& zj : images[j]) {
            if (hi.slot == zj.slot) throw DomainError("bilinear exponential: diagonal term produced");
            c(static_cast<Eigen::Index>(hi.slot), static_cast<Eigen::Index>(zj.slot)) += v * hi.h * zj.z;
          }
        }
      }
    }
    return BilinearExponential{c};
  }

  /// Diagonal operator in the tensor-power representation.
  [[nodiscard]] GradedMatrix represent() const {
    const std::size_t n = order();
    const Eigen::Index dim = Eigen::Index{1} << n;
    Matrix m = Matrix::Zero(dim, dim);
    for (Eigen::Index b = 0; b < dim; ++b) {
      Scalar e{};
      for (std::size_t i = 0; i < n; ++i) {
        const double h = ((b >> (n - 1 - i)) & 1) ? -1.0 : 1.0;
        for (std::size_t j = 0; j < n; ++j) {
          // D(Z) = 1 in every slot.
          e += coeff(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * h;
        }
      }
      m(b, b) = std::exp(e);
    }
    return GradedMatrix{m, tensor_parities(n)};
  }
};

/// Coloured universal R-matrix
///   R^{l,m} = q^{(m H(x)Z + l Z(x)H)/2} s^{(m H(x)Z - l Z(x)H)/2}
///             { 1(x)1 - (q^2-1) a^l a^m  s^{-l Z/2} psi+ (x) s^{-m Z/2} q^{-m Z} psi- }
/// in U_{q^l,s} (x) U_{q^m,s}. The square root of (q^{2l}-1)(q^{2m}-1) is
/// taken as (q^2-1) a^l a^m.
struct UniversalR {
  ParamPoint p;
  Colour lambda;
  Colour mu;
  BilinearExponential prefactor;
  TensorElement bracket;
};

/// Off-diagonal coefficient (q^2-1) a^lambda a^mu.
inline Scalar r_coupling(const ParamPoint& p, Colour lambda, Colour mu) {
  return (p.q() * p.q() - 1.0) * colour_norm(p.q(), lambda) * colour_norm(p.q(), mu);
}

inline UniversalR universal_r(const ParamPoint& p, Colour lambda, Colour mu) {
  const Home hl{p, lambda.value()};
  const Home hm{p, mu.value()};
  const Scalar l = lambda.value();
  const Scalar m = mu.value();
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(2, 2);
  c(0, 1) = m * (p.log_q() + p.log_s()) / 2.0; // H_1 Z_2
  c(1, 0) = l * (p.log_q() - p.log_s()) / 2.0; // Z_1 H_2
  using AE = AlgebraElement;
  TensorElement odd = TensorElement::product_of(
      {multiply(AE::exponential(hl, 0.0, -l / 2.0), AE::psi_plus(hl)),
       multiply(AE::exponential(hm, -m, -m / 2.0), AE::psi_minus(hm))});
  TensorElement bracket = TensorElement::unit({hl, hm}) - r_coupling(p, lambda, mu) * odd;
  return UniversalR{p, lambda, mu, BilinearExponential{c}, bracket};
}

/// R factorised as diagonal prefactor times (1 - c * left (x) right).
struct RFactorisation {
  GradedMatrix diagonal_factor;
  HomogeneousOp odd_left;
  HomogeneousOp odd_right;
  Scalar coefficient;

  [[nodiscard]] Matrix nilpotent() const {
    return represent_elementary({ElementaryTensor{coefficient, {odd_left, odd_right}}}, 2);
  }
  [[nodiscard]] Matrix compose() const {
    return diagonal_factor.entries * (Matrix::Identity(4, 4) - nilpotent());
  }
  /// (1 - T)^{-1} = 1 + T since T^2 = 0.
  [[nodiscard]] Matrix inverse() const {
    return (Matrix::Identity(4, 4) + nilpotent()) * diagonal_factor.entries.diagonal().cwiseInverse().asDiagonal();
  }
};

inline RFactorisation factorise_r(const ParamPoint& p, Colour lambda, Colour mu) {
  const UniversalR u = universal_r(p, lambda, mu);
  const Scalar l = lambda.value();
  const Scalar m = mu.value();
  Eigen::Matrix2cd left;
  left << 0.0, p.s_pow(-l / 2.0), 0.0, 0.0;
  Eigen::Matrix2cd right;
  right << 0.0, 0.0, p.s_pow(-m / 2.0) * p.q_pow(-m), 0.0;
  return RFactorisation{u.prefactor.represent(), {left, 1}, {right, 1}, r_coupling(p, lambda, mu)};
}

/// (D (x) D)(R^{lambda,mu}) from the universal formula.
inline GradedMatrix coloured_R_from_universal(const ParamPoint& p, Colour lambda, Colour mu) {
  const UniversalR u = universal_r(p, lambda, mu);
  return GradedMatrix{u.prefactor.represent().entries * rep_tensor(u.bracket).entries, tensor_parities(2)};
}

/// The explicit 4x4 coloured R-matrix.
inline GradedMatrix coloured_R_closed_form(const ParamPoint& p, Colour lambda, Colour mu) {
  const Scalar l = lambda.value();
  const Scalar m = mu.value();
  Matrix r = Matrix::Zero(4, 4);
  r(0, 0) = p.q_pow((l + m) / 2.0) * p.s_pow((-l + m) / 2.0);
  r(1, 1) = p.q_pow((-l + m) / 2.0) * p.s_pow((l + m) / 2.0);
  r(2, 2) = p.q_pow((l - m) / 2.0) * p.s_pow(-(l + m) / 2.0);
  r(3, 3) = p.q_pow(-(l + m) / 2.0) * p.s_pow((l - m) / 2.0);
  r(1, 2) = p.q_pow(-(l + m) / 2.0) * r_coupling(p, lambda, mu);
  return GradedMatrix{r, tensor_parities(2)};
}

/// Splits a 4x4 even operator into homogeneous elementary pairs E_ij (x) E_kl.
inline std::vector<ElementaryTensor> decompose_even(const GradedMatrix& m) {
  if (m.dim() != 4) throw DomainError("decompose_even: 4x4 matrix expected");
  const double scale = std::max(1.0, m.entries.cwiseAbs().maxCoeff());
  std::vector<ElementaryTensor> out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          const Scalar v = m.entries(2 * i + k, 2 * j + l);
          if (v == Scalar{}) continue;
          const int pa = (i + j) % 2;
          const int pb = (k + l) % 2;
          if ((pa + pb) % 2 != 0) {
            if (std::abs(v) > 1e-14 * scale) throw DomainError("embed: operator is not even");
            continue;
          }
          Eigen::Matrix2cd a = Eigen::Matrix2cd::Zero();
          Eigen::Matrix2cd b = Eigen::Matrix2cd::Zero();
          a(i, j) = 1.0;
          b(k, l) = 1.0;
          // Undo the sign the graded action puts on this entry: (-1)^{|b| parity(e_j)}.
          const double sign = (pb * j) % 2 ? -1.0 : 1.0;
          out.push_back(ElementaryTensor{v * sign, {{a, pa}, {b, pb}}});
        }
  return out;
}

enum class Slot { s12, s13, s23 };

/// Graded embedding of a two-slot operator into the triple tensor power.
inline GradedMatrix embed(const GradedMatrix& r, Slot slot) {
  const HomogeneousOp id{Eigen::Matrix2cd::Identity(), 0};
  std::vector<ElementaryTensor> terms;
  for (const auto& e : decompose_even(r)) {
    const auto& a = e.factors[0];
    const auto& b = e.factors[1];
    switch (slot) {
    case Slot::s12: terms.push_back({e.coeff, {a, b, id}}); break;
    case Slot::s13: terms.push_back({e.coeff, {a, id, b}}); break;
    case Slot::s23: terms.push_back({e.coeff, {id, a, b}}); break;
    }
  }
  return GradedMatrix{represent_elementary(terms, 3), tensor_parities(3)};
}

/// ||A - B||_F / max(1, ||A||_F).
inline double normalized_residual(const Matrix& a, const Matrix& b) {
  return (a - b).norm() / std::max(1.0, a.norm());
}

/// Largest entrywise relative difference; entries zero in both count as equal.
inline double entrywise_relative(const Matrix& a, const Matrix& b) {
  double r = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const double den = std::max(std::abs(a(i, j)), std::abs(b(i, j)));
      if (den == 0.0) continue;
      r = std::max(r, std::abs(a(i, j) - b(i, j)) / den);
    }
  return r;
}

/// R^{lambda,mu}_{12} R^{lambda,nu}_{13} R^{mu,nu}_{23} vs R_{23} R_{13} R_{12}.
/// `perturb` scales the off-diagonal entry of R^{lambda,mu} by (1 + perturb).
inline double check_coloured_graded_ybe(const ParamPoint& p, Colour lambda, Colour mu, Colour nu,
                                        double perturb = 0.0) {
  GradedMatrix r_lm = coloured_R_closed_form(p, lambda, mu);
  r_lm.entries(1, 2) *= (1.0 + perturb);
  const Matrix r12 = embed(r_lm, Slot::s12).entries;
  const Matrix r13 = embed(coloured_R_closed_form(p, lambda, nu), Slot::s13).entries;
  const Matrix r23 = embed(coloured_R_closed_form(p, mu, nu), Slot::s23).entries;
  const Matrix lhs = r12 * r13 * r23;
  const Matrix rhs = r23 * r13 * r12;
  return normalized_residual(lhs, rhs);
}

/// tau o Delta^{mu,lambda}_{q,nu}(a) vs R^{lambda,mu} Delta^{lambda,mu}_{q,nu}(a) (R^{lambda,mu})^{-1}
/// for a in U_{q^nu,s}, in the 4-dim representation.
inline double check_intertwiner(const ParamPoint& p, Colour lambda, Colour mu, Colour nu, const AlgebraElement& a,
                                TwistConvention conv = TwistConvention::Graded) {
  const RFactorisation f = factorise_r(p, lambda, mu);
  const Matrix lhs = rep_tensor(graded_twist(coproduct({p, mu, lambda, nu}, a), conv)).entries;
  const Matrix rhs = f.compose() * rep_tensor(coproduct({p, lambda, mu, nu}, a)).entries * f.inverse();
  return normalized_residual(lhs, rhs);
}

struct HexagonResiduals {
  double first = 0.0;  // (Delta^{alpha,beta}_{q,lambda} (x) sigma^gamma_mu)(R^{lambda,mu}) = R^{alpha,gamma}_13 R^{beta,gamma}_23
  double second = 0.0; // (sigma^alpha_lambda (x) Delta^{beta,gamma}_{q,mu})(R^{lambda,mu}) = R^{alpha,gamma}_13 R^{alpha,beta}_12
};

inline HexagonResiduals check_hexagons(const ParamPoint& p, Colour alpha, Colour beta, Colour gamma, Colour lambda,
                                       Colour mu) {
  using Img = BilinearExponential::SlotImage;
  const UniversalR u = universal_r(p, lambda, mu);
  const Scalar l = lambda.value();
  const Scalar m = mu.value();
  HexagonResiduals out;
  {
    const BilinearExponential pre = u.prefactor.transform(
        {{Img{0, 1.0, alpha.value() / l}, Img{1, 1.0, beta.value() / l}}, {Img{2, 1.0, gamma.value() / m}}}, 3);
    const TensorElement br = apply_slotwise(u.bracket, {coproduct_map(p, alpha, beta), transfer_map(gamma)});
    const Matrix lhs = pre.represent().entries * rep_tensor(br).entries;
    const Matrix rhs = embed(coloured_R_closed_form(p, alpha, gamma), Slot::s13).entries *
                       embed(coloured_R_closed_form(p, beta, gamma), Slot::s23).entries;
    out.first = normalized_residual(lhs, rhs);
  }
  {
    const BilinearExponential pre = u.prefactor.transform(
        {{Img{0, 1.0, alpha.value() / l}}, {Img{1, 1.0, beta.value() / m}, Img{2, 1.0, gamma.value() / m}}}, 3);
    const TensorElement br = apply_slotwise(u.bracket, {transfer_map(alpha), coproduct_map(p, beta, gamma)});
    const Matrix lhs = pre.represent().entries * rep_tensor(br).entries;
    const Matrix rhs = embed(coloured_R_closed_form(p, alpha, gamma), Slot::s13).entries *
                       embed(coloured_R_closed_form(p, alpha, beta), Slot::s12).entries;
    out.second = normalized_residual(lhs, rhs);
  }
  return out;
}

} // namespace colhopf
