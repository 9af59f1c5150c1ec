#pragma once

// Graded tensor powers of the algebra copies:
//   (a (x) b)(c (x) d) = (-1)^{deg b deg c} ac (x) bd,
//   tau(a (x) b) = (-1)^{deg a deg b} b (x) a.

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "colhopf/pbw_algebra.hpp"

namespace colhopf {

struct TensorTerm {
  std::vector<PBWMonomial> monos;
  Scalar coeff;

  [[nodiscard]] int parity() const {
    int p = 0;
    for (const auto& m : monos) p += m.parity();
    return p % 2;
  }
};

/// Finite linear combination of n-fold tensors of PBW monomials; slot k lives in homes()[k].
/// Order 0 is a scalar, order 1 an algebra element.
class TensorElement {
public:
  explicit TensorElement(std::vector<Home> homes) : homes_(std::move(homes)) {}

  static TensorElement scalar(Scalar c) {
    TensorElement t{std::vector<Home>{}};
    t.add_term({}, c);
    return t;
  }
  static TensorElement from(const AlgebraElement& x) {
    TensorElement t{{x.home()}};
    for (const auto& term : x.terms()) t.add_term({term.mono}, term.coeff);
    return t;
  }
  /// x_1 (x) ... (x) x_n expanded over monomials.
  static TensorElement product_of(const std::vector<AlgebraElement>& factors) {
    TensorElement t = scalar(1.0);
    for (const auto& f : factors) t = t.concat(from(f));
    return t;
  }
  static TensorElement unit(const std::vector<Home>& homes) {
    std::vector<AlgebraElement> ones;
    for (const auto& h : homes) ones.push_back(AlgebraElement::unit(h));
    return product_of(ones);
  }

  [[nodiscard]] std::size_t order() const noexcept { return homes_.size(); }
  [[nodiscard]] const std::vector<Home>& homes() const noexcept { return homes_; }
  [[nodiscard]] const std::vector<TensorTerm>& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const std::vector<PBWMonomial>& monos, Scalar c) {
    if (monos.size() != homes_.size()) {
      throw DomainError("tensor term of the wrong order");
    }
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
      if (same_key(it->monos, monos)) {
        it->coeff += c;
        if (std::abs(it->coeff) < kPruneTolerance) terms_.erase(it);
        return;
      }
    }
    if (std::abs(c) >= kPruneTolerance) terms_.push_back(TensorTerm{monos, c});
  }

  [[nodiscard]] Scalar coefficient(const std::vector<PBWMonomial>& monos) const {
    for (const auto& t : terms_) {
      if (same_key(t.monos, monos)) return t.coeff;
    }
    return {};
  }

  [[nodiscard]] double max_abs_coeff() const {
    double r = 0.0;
    for (const auto& t : terms_) r = std::max(r, std::abs(t.coeff));
    return r;
  }

  /// Value of an order-0 tensor.
  [[nodiscard]] Scalar as_scalar() const {
    if (order() != 0) throw DomainError("as_scalar on a tensor of positive order");
    return terms_.empty() ? Scalar{} : terms_.front().coeff;
  }

  /// Value of an order-1 tensor.
  [[nodiscard]] AlgebraElement as_element() const {
    if (order() != 1) throw DomainError("as_element on a tensor of order != 1");
    AlgebraElement x{homes_[0]};
    for (const auto& t : terms_) x.add_term(t.monos[0], t.coeff);
    return x;
  }

  /// Plain juxtaposition u (x) v (no reordering, no sign).
  [[nodiscard]] TensorElement concat(const TensorElement& v) const {
    std::vector<Home> hs = homes_;
    hs.insert(hs.end(), v.homes_.begin(), v.homes_.end());
    TensorElement out{hs};
    for (const auto& a : terms_) {
      for (const auto& b : v.terms_) {
        std::vector<PBWMonomial> ms = a.monos;
        ms.insert(ms.end(), b.monos.begin(), b.monos.end());
        out.add_term(ms, a.coeff * b.coeff);
      }
    }
    return out;
  }

  TensorElement& operator+=(const TensorElement& o) {
    check_homes(o);
    for (const auto& t : o.terms_) add_term(t.monos, t.coeff);
    return *this;
  }
  TensorElement& operator-=(const TensorElement& o) {
    check_homes(o);
    for (const auto& t : o.terms_) add_term(t.monos, -t.coeff);
    return *this;
  }
  TensorElement& operator*=(Scalar c) {
    TensorElement r{homes_};
    for (const auto& t : terms_) r.add_term(t.monos, t.coeff * c);
    *this = std::move(r);
    return *this;
  }
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(Scalar c, TensorElement a) { return a *= c; }

  void check_homes(const TensorElement& o) const {
    if (o.homes_.size() != homes_.size()) throw DomainError("tensor order mismatch");
    for (std::size_t k = 0; k < homes_.size(); ++k) {
      if (!homes_[k].same_as(o.homes_[k])) throw DomainError("tensor slot homes differ");
    }
  }

private:
  static bool same_key(const std::vector<PBWMonomial>& a, const std::vector<PBWMonomial>& b) {
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (!a[k].matches(b[k])) return false;
    }
    return true;
  }

  std::vector<Home> homes_;
  std::vector<TensorTerm> terms_;
};

/// Graded product in the tensor power: slot-wise products with the sign of
/// every odd factor of v crossing odd factors of u to its right.
inline TensorElement tensor_multiply(const TensorElement& u, const TensorElement& v) {
  if (u.order() != v.order()) throw DomainError("tensor_multiply: order mismatch");
  u.check_homes(v);
  const std::size_t n = u.order();
  TensorElement out{u.homes()};
  for (const auto& a : u.terms()) {
    for (const auto& b : v.terms()) {
      int crossings = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (!b.monos[j].parity()) continue;
        for (std::size_t i = j + 1; i < n; ++i) crossings += a.monos[i].parity();
      }
      const Scalar sign = (crossings % 2) ? -1.0 : 1.0;
      // Expand slot-wise products.
      TensorElement acc = TensorElement::scalar(a.coeff * b.coeff * sign);
      for (std::size_t k = 0; k < n; ++k) {
        acc = acc.concat(TensorElement::from(multiply_monomials(a.monos[k], b.monos[k], u.homes()[k])));
      }
      for (const auto& t : acc.terms()) out.add_term(t.monos, t.coeff);
    }
  }
  return out;
}

/// Sign convention for the twist map. `Graded` is (-1)^{deg a deg b};
/// `SelfParity` is (-1)^{deg a deg a}, kept only to demonstrate that it breaks
/// the bialgebra compatibility.
enum class TwistConvention { Graded, SelfParity };

inline int twist_sign(int parity_a, int parity_b, TwistConvention conv) {
  const int e = conv == TwistConvention::Graded ? parity_a * parity_b : parity_a * parity_a;
  return (e % 2) ? -1 : 1;
}

inline TensorElement graded_twist(const TensorElement& u, TwistConvention conv = TwistConvention::Graded) {
  if (u.order() != 2) throw DomainError("graded_twist needs an order-2 tensor");
  TensorElement out{{u.homes()[1], u.homes()[0]}};
  for (const auto& t : u.terms()) {
    const int sign = twist_sign(t.monos[0].parity(), t.monos[1].parity(), conv);
    out.add_term({t.monos[1], t.monos[0]}, static_cast<double>(sign) * t.coeff);
  }
  return out;
}

/// m(a (x) b) = ab, both slots in the same copy.
inline AlgebraElement multiply_slots(const TensorElement& u) {
  if (u.order() != 2) throw DomainError("multiply_slots needs an order-2 tensor");
  if (!u.homes()[0].same_as(u.homes()[1])) throw DomainError("multiply_slots: slot homes differ");
  AlgebraElement out{u.homes()[0]};
  for (const auto& t : u.terms()) {
    const AlgebraElement p = multiply_monomials(t.monos[0], t.monos[1], u.homes()[0]);
    for (const auto& pt : p.terms()) out.add_term(pt.mono, t.coeff * pt.coeff);
  }
  return out;
}

/// Even linear map on one slot, returning a tensor of any order
/// (order 0 for counits, 1 for algebra maps, 2 for coproducts).
using SlotMap = std::function<TensorElement(const AlgebraElement&)>;

/// (f_1 (x) ... (x) f_n)(u) for even maps f_k; no Koszul signs arise.
inline TensorElement apply_slotwise(const TensorElement& u, const std::vector<SlotMap>& maps) {
  if (maps.size() != u.order()) throw DomainError("apply_slotwise: one map per slot required");
  std::optional<TensorElement> out;
  for (const auto& t : u.terms()) {
    TensorElement acc = TensorElement::scalar(t.coeff);
    for (std::size_t k = 0; k < maps.size(); ++k) {
      acc = acc.concat(maps[k](AlgebraElement::monomial(u.homes()[k], t.monos[k])));
    }
    if (!out) {
      out = std::move(acc);
    } else {
      *out += acc;
    }
  }
  if (!out) {
    // Zero input: evaluate the maps on zero elements to learn the output homes.
    TensorElement acc = TensorElement::scalar(1.0);
    for (std::size_t k = 0; k < maps.size(); ++k) {
      acc = acc.concat(maps[k](AlgebraElement::unit(u.homes()[k])));
    }
    return TensorElement{acc.homes()};
  }
  return *out;
}

inline double residual(const TensorElement& x, const TensorElement& y) {
  x.check_homes(y);
  double worst = 0.0;
  for (const auto& t : x.terms()) worst = std::max(worst, std::abs(t.coeff - y.coefficient(t.monos)));
  for (const auto& t : y.terms()) worst = std::max(worst, std::abs(x.coefficient(t.monos) - t.coeff));
  const double scale = std::max({1.0, x.max_abs_coeff(), y.max_abs_coeff()});
  return worst / scale;
}

inline Comparison equal_upto_tol(const TensorElement& x, const TensorElement& y, double tol) {
  const double r = residual(x, y);
  return {r <= tol, r};
}

inline std::ostream& operator<<(std::ostream& os, const TensorElement& u) {
  if (u.is_zero()) return os << '0';
  bool first = true;
  for (const auto& t : u.terms()) {
    if (!first) os << " + ";
    first = false;
    os << t.coeff << "*[";
    for (std::size_t k = 0; k < t.monos.size(); ++k) {
      if (k) os << " (x) ";
      os << t.monos[k];
    }
    os << ']';
  }
  return os;
}

} // namespace colhopf
