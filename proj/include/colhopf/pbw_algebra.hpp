#pragma once

// Elements of U_{q,s}(gl(1/1)) and its colour-shifted copies in PBW normal form
//
//   Z^a H^b q^{alpha Z} s^{beta Z} (psi+)^eps (psi-)^delta,   eps, delta in {0, 1}.
//
// The exponents alpha, beta always refer to the base parameters (q, s) of the
// element's ParamPoint, so q^{alpha Z} = exp(alpha Log(q) Z) in every copy.
// The copy U_{q^c, s} an element lives in is recorded by its Home colour c.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "colhopf/coefficients.hpp"

namespace colhopf {

inline constexpr double kPruneTolerance = 1e-14;
inline constexpr double kExponentMatchTolerance = 1e-10;

/// The algebra copy U_{q^colour, s} over a base parameter point.
struct Home {
  ParamPoint point;
  Scalar colour{1.0, 0.0};

  Home(ParamPoint p, Scalar c = Scalar{1.0, 0.0}) : point(p), colour(c) {} // NOLINT

  /// q^{colour}: the deformation parameter of this copy.
  [[nodiscard]] Scalar q() const { return point.q_pow(colour); }

  [[nodiscard]] bool same_as(const Home& other) const {
    return point == other.point &&
           std::abs(colour - other.colour) <= 1e-12 * std::max(1.0, std::abs(colour));
  }
};

inline bool close_exponent(Scalar a, Scalar b) {
  return std::abs(a - b) <= kExponentMatchTolerance * std::max(1.0, std::abs(a));
}

struct PBWMonomial {
  int z_deg = 0;
  int h_deg = 0;
  Scalar alpha{};
  Scalar beta{};
  bool plus = false;
  bool minus = false;

  [[nodiscard]] int parity() const noexcept { return (int{plus} + int{minus}) % 2; }
  [[nodiscard]] int odd_count() const noexcept { return int{plus} + int{minus}; }
  [[nodiscard]] bool has_exponential() const noexcept { return alpha != Scalar{} || beta != Scalar{}; }
  [[nodiscard]] bool is_unit() const noexcept {
    return z_deg == 0 && h_deg == 0 && !plus && !minus && !has_exponential();
  }

  /// Same basis element up to round-off in the exponents.
  [[nodiscard]] bool matches(const PBWMonomial& o) const {
    return z_deg == o.z_deg && h_deg == o.h_deg && plus == o.plus && minus == o.minus &&
           close_exponent(alpha, o.alpha) && close_exponent(beta, o.beta);
  }

  friend bool operator==(const PBWMonomial&, const PBWMonomial&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const PBWMonomial& m) {
  bool any = false;
  auto sep = [&] {
    if (any) os << ' ';
    any = true;
  };
  if (m.z_deg > 0) {
    sep();
    os << "Z^" << m.z_deg;
  }
  if (m.h_deg > 0) {
    sep();
    os << "H^" << m.h_deg;
  }
  if (m.alpha != Scalar{}) {
    sep();
    os << "q^{" << m.alpha << "Z}";
  }
  if (m.beta != Scalar{}) {
    sep();
    os << "s^{" << m.beta << "Z}";
  }
  if (m.plus) {
    sep();
    os << "psi+";
  }
  if (m.minus) {
    sep();
    os << "psi-";
  }
  if (!any) os << '1';
  return os;
}

struct Term {
  PBWMonomial mono;
  Scalar coeff;
};

/// Finite linear combination of PBW monomials living in one algebra copy.
class AlgebraElement {
public:
  explicit AlgebraElement(Home home) : home_(std::move(home)) {}

  static AlgebraElement zero(const Home& h) { return AlgebraElement{h}; }
  static AlgebraElement monomial(const Home& h, const PBWMonomial& m, Scalar c = 1.0) {
    AlgebraElement e{h};
    e.add_term(m, c);
    return e;
  }
  static AlgebraElement unit(const Home& h) { return monomial(h, PBWMonomial{}); }
  static AlgebraElement H(const Home& h) { return monomial(h, PBWMonomial{.h_deg = 1}); }
  static AlgebraElement Z(const Home& h) { return monomial(h, PBWMonomial{.z_deg = 1}); }
  static AlgebraElement psi_plus(const Home& h) { return monomial(h, PBWMonomial{.plus = true}); }
  static AlgebraElement psi_minus(const Home& h) { return monomial(h, PBWMonomial{.minus = true}); }
  /// q^{alpha Z} s^{beta Z}
  static AlgebraElement exponential(const Home& h, Scalar alpha, Scalar beta) {
    return monomial(h, PBWMonomial{.alpha = alpha, .beta = beta});
  }

  [[nodiscard]] const Home& home() const noexcept { return home_; }
  [[nodiscard]] const std::vector<Term>& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds c * m, merging with an existing matching monomial.
  void add_term(const PBWMonomial& m, Scalar c) {
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
      if (it->mono.matches(m)) {
        it->coeff += c;
        if (std::abs(it->coeff) < kPruneTolerance) {
          terms_.erase(it);
        }
        return;
      }
    }
    if (std::abs(c) >= kPruneTolerance) {
      terms_.push_back(Term{m, c});
    }
  }

  /// Coefficient of the basis element matching m (0 if absent).
  [[nodiscard]] Scalar coefficient(const PBWMonomial& m) const {
    for (const auto& t : terms_) {
      if (t.mono.matches(m)) return t.coeff;
    }
    return {};
  }

  [[nodiscard]] double max_abs_coeff() const {
    double r = 0.0;
    for (const auto& t : terms_) r = std::max(r, std::abs(t.coeff));
    return r;
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    check_home(o);
    for (const auto& t : o.terms_) add_term(t.mono, t.coeff);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    check_home(o);
    for (const auto& t : o.terms_) add_term(t.mono, -t.coeff);
    return *this;
  }
  AlgebraElement& operator*=(Scalar c) {
    AlgebraElement r{home_};
    for (const auto& t : terms_) r.add_term(t.mono, t.coeff * c);
    *this = std::move(r);
    return *this;
  }

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(Scalar c, AlgebraElement a) { return a *= c; }
  friend AlgebraElement operator*(AlgebraElement a, Scalar c) { return a *= c; }
  friend AlgebraElement operator-(AlgebraElement a) { return a *= -1.0; }

  void check_home(const AlgebraElement& o) const {
    if (!home_.same_as(o.home_)) {
      throw DomainError("algebra elements live in different copies U_{q^c,s}");
    }
  }

  /// Replaces the home tag (used by maps between copies).
  void rehome(Home h) { home_ = std::move(h); }

private:
  Home home_;
  std::vector<Term> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const AlgebraElement& x) {
  if (x.is_zero()) return os << '0';
  bool first = true;
  for (const auto& t : x.terms()) {
    if (!first) os << " + ";
    first = false;
    os << t.coeff << "*[" << t.mono << ']';
  }
  return os;
}

namespace detail {

struct OrderedWord {
  Scalar coeff;
  Scalar alpha_shift; // central factor q^{alpha_shift Z}
  bool plus;
  bool minus;
};

// Normal-orders a word in psi+ (+1) and psi- (-1) using (psi^pm)^2 = 0 and
// psi- psi+ = C - psi+ psi-, with C = (q'^{2Z} - 1)/(q'^2 - 1), q' = q^home.
inline void order_psi_word(const std::vector<int>& word, Scalar coeff, Scalar alpha_shift,
                           Scalar home, Scalar c0, std::vector<OrderedWord>& out) {
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (word[i] == word[i + 1]) return;
  }
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (word[i] == -1 && word[i + 1] == 1) {
      std::vector<int> rest;
      rest.reserve(word.size() - 2);
      for (std::size_t k = 0; k < word.size(); ++k) {
        if (k != i && k != i + 1) rest.push_back(word[k]);
      }
      order_psi_word(rest, coeff * c0, alpha_shift + 2.0 * home, home, c0, out);
      order_psi_word(rest, -coeff * c0, alpha_shift, home, c0, out);
      std::vector<int> swapped = word;
      std::swap(swapped[i], swapped[i + 1]);
      order_psi_word(swapped, -coeff, alpha_shift, home, c0, out);
      return;
    }
  }
  // Remaining words: empty, +, -, +-.
  out.push_back(OrderedWord{coeff, alpha_shift,
                            std::find(word.begin(), word.end(), 1) != word.end(),
                            std::find(word.begin(), word.end(), -1) != word.end()});
}

inline Scalar binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

} // namespace detail

/// Product of two monomials of the copy `home`, in normal form.
inline AlgebraElement multiply_monomials(const PBWMonomial& a, const PBWMonomial& b, const Home& home) {
  AlgebraElement out{home};
  // Z and the exponentials are central; only H^{b.h_deg} has to cross the psi part of a:
  // psi+ f(H) = f(H - 2) psi+, psi- f(H) = f(H + 2) psi-.
  const int shift = 2 * (int{a.minus} - int{a.plus});
  std::vector<int> word;
  if (a.plus) word.push_back(1);
  if (a.minus) word.push_back(-1);
  if (b.plus) word.push_back(1);
  if (b.minus) word.push_back(-1);

  const Scalar qh2 = home.point.q_pow(2.0 * home.colour);
  const Scalar c0 = 1.0 / (qh2 - 1.0);
  std::vector<detail::OrderedWord> ordered;
  detail::order_psi_word(word, 1.0, 0.0, home.colour, c0, ordered);
  if (ordered.empty()) return out;

  for (int j = 0; j <= b.h_deg; ++j) {
    Scalar hcoef = detail::binomial(b.h_deg, j);
    if (b.h_deg - j > 0) hcoef *= std::pow(static_cast<double>(shift), b.h_deg - j);
    if (hcoef == Scalar{}) continue;
    for (const auto& w : ordered) {
      PBWMonomial m;
      m.z_deg = a.z_deg + b.z_deg;
      m.h_deg = a.h_deg + j;
      m.alpha = a.alpha + b.alpha + w.alpha_shift;
      m.beta = a.beta + b.beta;
      m.plus = w.plus;
      m.minus = w.minus;
      out.add_term(m, hcoef * w.coeff);
    }
  }
  return out;
}

/// Graded associative product with PBW straightening.
inline AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
  x.check_home(y);
  AlgebraElement out{x.home()};
  for (const auto& tx : x.terms()) {
    for (const auto& ty : y.terms()) {
      const AlgebraElement p = multiply_monomials(tx.mono, ty.mono, x.home());
      for (const auto& tp : p.terms()) out.add_term(tp.mono, tx.coeff * ty.coeff * tp.coeff);
    }
  }
  return out;
}

/// multiply(x, y) after checking that both live over the parameter point p.
inline AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y, const ParamPoint& p) {
  if (!(x.home().point == p)) {
    throw DomainError("multiply: element not defined over the given parameter point");
  }
  return multiply(x, y);
}

inline AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) { return multiply(x, y); }

/// gamma(a) = (-1)^{deg a} a on homogeneous terms.
inline AlgebraElement grading_automorphism(const AlgebraElement& x) {
  AlgebraElement out{x.home()};
  for (const auto& t : x.terms()) out.add_term(t.mono, t.mono.parity() ? -t.coeff : t.coeff);
  return out;
}

/// Parity of a homogeneous element; -1 if the element mixes parities or is zero.
inline int parity_of(const AlgebraElement& x) {
  int p = -1;
  for (const auto& t : x.terms()) {
    if (p == -1) {
      p = t.mono.parity();
    } else if (p != t.mono.parity()) {
      return -1;
    }
  }
  return p;
}

struct Comparison {
  bool equal;
  double residual;
};

/// max |coeff_x - coeff_y| over all basis elements, normalised by
/// max(1, largest coefficient modulus of x or y).
/// Differences are taken term by term without pruning, so round-off is reported as is.
inline double residual(const AlgebraElement& x, const AlgebraElement& y) {
  x.check_home(y);
  double worst = 0.0;
  for (const auto& t : x.terms()) worst = std::max(worst, std::abs(t.coeff - y.coefficient(t.mono)));
  for (const auto& t : y.terms()) worst = std::max(worst, std::abs(x.coefficient(t.mono) - t.coeff));
  const double scale = std::max({1.0, x.max_abs_coeff(), y.max_abs_coeff()});
  return worst / scale;
}

inline Comparison equal_upto_tol(const AlgebraElement& x, const AlgebraElement& y, double tol) {
  const double r = residual(x, y);
  return {r <= tol, r};
}

} // namespace colhopf
