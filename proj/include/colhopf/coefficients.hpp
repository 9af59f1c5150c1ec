#pragma once

// Scalar field, principal-branch powers, the colour normalisation a^nu and
// deterministic sampling of admissible parameter points.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace colhopf {

using Scalar = std::complex<double>;

/// Raised when an input lies outside the domain of an operation
/// (zero colour, zero base, mismatched algebra copies, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Raised when q^2 (or a shifted q^{2nu}) is too close to 1.
class SingularityError : public DomainError {
public:
  using DomainError::DomainError;
};

inline constexpr double kDefaultSingularityGuard = 0.1;

/// Principal complex logarithm with imaginary part in (-pi, pi].
inline Scalar principal_log(Scalar z) {
  if (z == Scalar{0.0, 0.0}) {
    throw DomainError("logarithm of zero");
  }
  Scalar l = std::log(z);
  // std::log returns -pi on the negative real axis with a signed-zero imaginary part.
  if (l.imag() <= -std::numbers::pi) {
    l = {l.real(), std::numbers::pi};
  }
  return l;
}

/// base^exponent = exp(exponent * Log base), principal branch.
inline Scalar cpow(Scalar base, Scalar exponent) {
  if (base == Scalar{0.0, 0.0}) {
    throw DomainError("cpow: zero base");
  }
  return std::exp(exponent * principal_log(base));
}

/// Nonzero complex colour parameter.
class Colour {
public:
  Colour(Scalar value) : value_(value) { // NOLINT: implicit from numbers is convenient in formulas
    if (value == Scalar{0.0, 0.0}) {
      throw DomainError("colour must be nonzero");
    }
  }
  Colour(double value) : Colour(Scalar{value, 0.0}) {} // NOLINT

  [[nodiscard]] Scalar value() const noexcept { return value_; }
  [[nodiscard]] Colour inverse() const { return Colour{1.0 / value_}; }

  friend Colour operator*(Colour a, Colour b) { return Colour{a.value_ * b.value_}; }
  friend bool operator==(Colour a, Colour b) noexcept { return a.value_ == b.value_; }

private:
  Scalar value_;
};

/// Deformation-parameter point (q, s).
///
/// Every power of q or s anywhere in the library is a principal-branch power
/// of these base values; the colour-shifted parameter q^nu is never
/// re-logarithmised.
class ParamPoint {
public:
  ParamPoint(Scalar q, Scalar s, double singularity_guard = kDefaultSingularityGuard)
      : q_(q), s_(s) {
    if (std::abs(q) == 0.0 || std::abs(s) == 0.0) {
      throw DomainError("q and s must be nonzero");
    }
    if (std::abs(q * q - 1.0) < singularity_guard) {
      throw SingularityError("|q^2 - 1| below singularity guard");
    }
    log_q_ = principal_log(q);
    log_s_ = principal_log(s);
  }

  [[nodiscard]] Scalar q() const noexcept { return q_; }
  [[nodiscard]] Scalar s() const noexcept { return s_; }
  [[nodiscard]] Scalar log_q() const noexcept { return log_q_; }
  [[nodiscard]] Scalar log_s() const noexcept { return log_s_; }

  /// q^x (principal branch of the base q).
  [[nodiscard]] Scalar q_pow(Scalar x) const { return std::exp(x * log_q_); }
  /// s^x (principal branch of the base s).
  [[nodiscard]] Scalar s_pow(Scalar x) const { return std::exp(x * log_s_); }

  friend bool operator==(const ParamPoint& a, const ParamPoint& b) noexcept {
    return a.q_ == b.q_ && a.s_ == b.s_;
  }

private:
  Scalar q_;
  Scalar s_;
  Scalar log_q_;
  Scalar log_s_;
};

/// a^nu = ((q^{2nu} - 1)/(q^2 - 1))^{1/2}, principal square root.
inline Scalar colour_norm(Scalar q, Colour nu, double singularity_guard = kDefaultSingularityGuard) {
  const Scalar den = q * q - 1.0;
  if (std::abs(den) < singularity_guard) {
    throw SingularityError("colour_norm: |q^2 - 1| below singularity guard");
  }
  return cpow((cpow(q, 2.0 * nu.value()) - 1.0) / den, 0.5);
}

/// a^nu evaluated in the copy with deformation parameter q^home, i.e.
/// ((q^{2 home nu} - 1)/(q^{2 home} - 1))^{1/2}, all powers taken of the base q.
/// Coincides with colour_norm(p.q(), nu) when home = 1.
inline Scalar colour_norm_at(const ParamPoint& p, Scalar home, Colour nu) {
  const Scalar den = p.q_pow(2.0 * home) - 1.0;
  if (std::abs(den) < 1e-12) {
    throw SingularityError("colour_norm_at: q^{2 home} = 1");
  }
  return cpow((p.q_pow(2.0 * home * nu.value()) - 1.0) / den, 0.5);
}

/// A colour is usable as an algebra label when q^{2nu} stays away from 1,
/// otherwise a^nu vanishes and the coloured maps divide by it.
inline bool colour_admissible(const ParamPoint& p, Colour nu, double guard = kDefaultSingularityGuard) {
  return std::abs(p.q_pow(2.0 * nu.value()) - 1.0) >= guard;
}

struct ParamDraw {
  ParamPoint point;
  std::array<Colour, 3> colours;
};

/// Deterministic source of admissible parameter points and colours.
class ParamSampler {
public:
  explicit ParamSampler(std::uint64_t seed, double guard = kDefaultSingularityGuard)
      : rng_(seed), guard_(guard) {}

  /// |q|, |s| in [0.5, 2], phases uniform; redraws q until |q^2 - 1| >= guard.
  ParamPoint point() {
    for (;;) {
      const Scalar q = polar_draw();
      const Scalar s = polar_draw();
      if (std::abs(q * q - 1.0) >= guard_) {
        return ParamPoint{q, s, guard_};
      }
    }
  }

  /// Colour with modulus in [0.5, 2] and arbitrary phase, admissible at p.
  Colour colour(const ParamPoint& p) {
    for (;;) {
      const Colour c{polar_draw()};
      if (colour_admissible(p, c, guard_)) {
        return c;
      }
    }
  }

  /// Real colour in [0.5, 2], admissible at p.
  Colour real_colour(const ParamPoint& p) {
    for (;;) {
      const Colour c{uniform(0.5, 2.0)};
      if (colour_admissible(p, c, guard_)) {
        return c;
      }
    }
  }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>{lo, hi}(rng_); }

  Scalar unit_disc() {
    return std::polar(uniform(0.0, 1.0), uniform(-std::numbers::pi, std::numbers::pi));
  }

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>{lo, hi}(rng_); }

  std::mt19937_64& engine() noexcept { return rng_; }

private:
  Scalar polar_draw() {
    const double r = uniform(0.5, 2.0);
    const double phase = uniform(-std::numbers::pi, std::numbers::pi);
    return std::polar(r, phase);
  }

  std::mt19937_64 rng_;
  double guard_;
};

/// `count` admissible draws of (q, s) with a colour triple; same seed, same sequence.
inline std::vector<ParamDraw> sample_params(std::uint64_t seed, int count,
                                            double guard = kDefaultSingularityGuard) {
  if (count < 1) {
    throw DomainError("sample_params: count must be >= 1");
  }
  ParamSampler sampler{seed, guard};
  std::vector<ParamDraw> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    ParamPoint p = sampler.point();
    std::array<Colour, 3> cs{sampler.colour(p), sampler.colour(p), sampler.colour(p)};
    out.push_back(ParamDraw{p, cs});
  }
  return out;
}

} // namespace colhopf
