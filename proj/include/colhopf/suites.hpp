#pragma once

// Randomised verification suites shared by the CLI and the acceptance tests.
// Every suite draws from its own seeded sampler, so results depend only on
// (seed, draws).

#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "colhopf/coloured_hopf.hpp"
#include "colhopf/representation.hpp"

namespace colhopf {

/// A check passes when its statistic is <= tolerance (Bound::upper, statistic
/// is a maximum residual) or > tolerance (Bound::lower, statistic is a minimum,
/// used by negative controls).
enum class Bound { upper, lower };

struct CheckResult {
  std::string name;
  std::string identity;
  double statistic = 0.0;
  double tolerance = 0.0;
  Bound bound = Bound::upper;
  nlohmann::json details = nlohmann::json::object();

  [[nodiscard]] bool pass() const {
    return bound == Bound::upper ? statistic <= tolerance : statistic > tolerance;
  }
};

/// Default thresholds, keyed by check name.
inline std::map<std::string, double> default_tolerances() {
  return {
      {"rmatrix_crossval", 1e-12},
      {"ybe", 1e-10},
      {"ybe_negative_control", 1e-6},
      {"hopf_colour_transformations", 1e-10},
      {"hopf_coassociativity", 1e-10},
      {"hopf_counit", 1e-10},
      {"hopf_antipode", 1e-10},
      {"hopf_bialgebra", 1e-10},
      {"group_composition", 1e-11},
      {"group_identity", 1e-11},
      {"group_inverse", 1e-11},
      {"group_grading", 1e-11},
      {"r_inverse", 1e-12},
      {"intertwiner", 1e-10},
      {"hexagon_first", 1e-10},
      {"hexagon_second", 1e-10},
      {"reduction_maps", 1e-11},
      {"reduction_ybe", 1e-11},
      {"coproduct_definition_route", 1e-11},
      {"relation_coproduct", 1e-11},
      {"relation_representation", 1e-11},
      {"twist_sign_sensitivity", 1e-3},
      {"twist_sign_per_draw", 1e-10},
  };
}

class Tolerances {
public:
  Tolerances() : values_(default_tolerances()) {}

  [[nodiscard]] double get(const std::string& name) const {
    auto it = values_.find(name);
    if (it == values_.end()) throw DomainError("unknown check name: " + name);
    return it->second;
  }

  /// Sets the check called `name`; if there is none, every check whose name
  /// starts with `name_`. Returns false if nothing matched.
  bool set(const std::string& name, double value) {
    if (auto it = values_.find(name); it != values_.end()) {
      it->second = value;
      return true;
    }
    bool matched = false;
    for (auto& [k, v] : values_) {
      if (k == name || k.rfind(name + "_", 0) == 0) {
        v = value;
        matched = true;
      }
    }
    return matched;
  }

private:
  std::map<std::string, double> values_;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  int draws = 0;
  std::vector<CheckResult> checks;
  double duration_ms = 0.0;

  [[nodiscard]] bool pass() const {
    for (const auto& c : checks) {
      if (!c.pass()) return false;
    }
    return true;
  }

  [[nodiscard]] nlohmann::json to_json() const {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : checks) {
      nlohmann::json j{{"name", c.name},
                       {"paper_ref", c.identity},
                       {"max_residual", c.statistic},
                       {"tolerance", c.tolerance},
                       {"pass", c.pass()}};
      if (c.bound == Bound::lower) {
        j["bound"] = "lower";
        j["statistic"] = "min";
      }
      if (!c.details.empty()) j["details"] = c.details;
      cs.push_back(std::move(j));
    }
    return {{"suite", suite}, {"seed", seed}, {"draws", draws}, {"checks", cs},
            {"pass", pass()}, {"duration_ms", duration_ms}};
  }
};

// ---------------------------------------------------------------------------
// Probes

/// Random element of degree <= 2: a few terms, each a random complex
/// coefficient times a normal-ordered word of at most two letters from
/// {H, Z, psi+, psi-, q^{aZ} s^{bZ}}.
inline AlgebraElement random_element(const Home& h, ParamSampler& rng) {
  AlgebraElement x{h};
  const int terms = rng.integer(2, 4);
  for (int t = 0; t < terms; ++t) {
    AlgebraElement word = AlgebraElement::unit(h);
    const int len = rng.integer(0, 2);
    for (int k = 0; k < len; ++k) {
      AlgebraElement letter{h};
      switch (rng.integer(0, 4)) {
      case 0: letter = AlgebraElement::H(h); break;
      case 1: letter = AlgebraElement::Z(h); break;
      case 2: letter = AlgebraElement::psi_plus(h); break;
      case 3: letter = AlgebraElement::psi_minus(h); break;
      default: letter = AlgebraElement::exponential(h, rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)); break;
      }
      word = multiply(word, letter);
    }
    x += rng.unit_disc() * word;
  }
  return x;
}

inline std::vector<AlgebraElement> generators(const Home& h) {
  return {AlgebraElement::H(h), AlgebraElement::Z(h), AlgebraElement::psi_plus(h), AlgebraElement::psi_minus(h)};
}

/// The four generators, the unit and `random_count` random elements.
inline std::vector<AlgebraElement> standard_probes(const Home& h, ParamSampler& rng, int random_count) {
  std::vector<AlgebraElement> probes = generators(h);
  probes.push_back(AlgebraElement::unit(h));
  for (int i = 0; i < random_count; ++i) probes.push_back(random_element(h, rng));
  return probes;
}

/// (q^{2 c Z} - 1)/(q^{2c} - 1) in the copy of colour c: the anticommutator {psi+, psi-}.
inline AlgebraElement anticommutator_value(const Home& h) {
  const Scalar den = h.point.q_pow(2.0 * h.colour) - 1.0;
  return (1.0 / den) * (AlgebraElement::exponential(h, 2.0 * h.colour, 0.0) - AlgebraElement::unit(h));
}

// ---------------------------------------------------------------------------
// Suites

namespace suite_seeds {
inline constexpr std::uint64_t crossval = 0x1001;
inline constexpr std::uint64_t ybe = 0x1002;
inline constexpr std::uint64_t hopf_axioms = 0x1003;
inline constexpr std::uint64_t group = 0x1004;
inline constexpr std::uint64_t quasi = 0x1005;
inline constexpr std::uint64_t reduction = 0x1006;
inline constexpr std::uint64_t relation = 0x1007;
inline constexpr std::uint64_t sensitivity = 0x1008;
} // namespace suite_seeds

inline ParamSampler suite_sampler(std::uint64_t seed, std::uint64_t salt) {
  return ParamSampler{seed * 0x9E3779B97F4A7C15ULL + salt};
}

/// Closed-form vs universal-formula R-matrix, entrywise relative.
inline std::vector<CheckResult> run_crossval_suite(std::uint64_t seed, int draws, const Tolerances& tol) {
  auto rng = suite_sampler(seed, suite_seeds::crossval);
  double worst = 0.0;
  for (int i = 0; i < draws; ++i) {
    const ParamPoint p = rng.point();
    const Colour l = rng.colour(p);
    const Colour m = rng.colour(p);
    worst = std::max(worst, entrywise_relative(coloured_R_closed_form(p, l, m).entries,
                                               coloured_R_from_universal(p, l, m).entries));
  }
  return {{"rmatrix_crossval", "explicit 4x4 coloured R-matrix = (D (x) D) of the coloured universal R-matrix",
           worst, tol.get("rmatrix_crossval")}};
}

/// Coloured graded YBE with a perturbed negative control on every draw.
inline std::vector<CheckResult> run_ybe_suite(std::uint64_t seed, int draws, const Tolerances& tol) {
  auto rng = suite_sampler(seed, suite_seeds::ybe);
  double worst = 0.0;
  double weakest_control = std::numeric_limits<double>::infinity();
  for (int i = 0; i < draws; ++i) {
    const ParamPoint p = rng.point();
    const Colour l = rng.colour(p);
    const Colour m = rng.colour(p);
    const Colour n = rng.colour(p);
    worst = std::max(worst, check_coloured_graded_ybe(p, l, m, n));
    weakest_control = std::min(weakest_control, check_coloured_graded_ybe(p, l, m, n, 0.01));
  }
  return {{"ybe", "coloured graded YBE R12^{l,m} R13^{l,n} R23^{m,n} = R23^{m,n} R13^{l,n} R12^{l,m}", worst,
           tol.get("ybe")},
          {"ybe_negative_control", "coloured graded YBE with the off-diagonal entry perturbed by 1%",
           weakest_control, tol.get("ybe_negative_control"), Bound::lower}};
}

/// Generalised Hopf axioms on the generators, the unit and 20 random elements.
inline std::vector<CheckResult> run_hopf_axiom_suite(std::uint64_t seed, int draws, const Tolerances& tol) {
  auto rng = suite_sampler(seed, suite_seeds::hopf_axioms);
  double r_transform = 0, r_coassoc = 0, r_counit = 0, r_antipode = 0, r_bialg = 0;
  for (int i = 0; i < draws; ++i) {
    const ParamPoint p = rng.point();
    std::vector<Colour> c;
    for (int k = 0; k < 8; ++k) c.push_back(rng.colour(p));
    const Colour alpha = c[0], beta = c[1], gamma = c[2], lambda = c[3], mu = c[4], lambda2 = c[5], mu2 = c[6],
                 nu = c[7];
    const Home hn{p, nu.value()};
    const auto probes = standard_probes(hn, rng, 20);

    for (const auto& r : verify_colour_transformations(p, {lambda, mu, nu, alpha, beta, gamma}, probes)) {
      r_transform = std::max(r_transform, r.residual);
    }
    r_coassoc = std::max(r_coassoc, verify_coassociativity(p, {alpha, beta, gamma, lambda, mu, lambda2, mu2, nu}, probes));
    for (const auto& r : verify_counit_axiom(p, {alpha, lambda, mu, lambda2, mu2, nu}, probes)) {
      r_counit = std::max(r_counit, r.residual);
    }
    for (const auto& r : verify_antipode_axiom(p, {alpha, lambda, mu, lambda2, mu2, nu}, probes)) {
      r_antipode = std::max(r_antipode, r.residual);
    }
    std::vector<std::pair<AlgebraElement, AlgebraElement>> pairs;
    for (std::size_t a = 0; a < 5; ++a)
      for (std::size_t b = 0; b < 5; ++b) pairs.emplace_back(probes[a], probes[b]);
    for (std::size_t a = 5; a + 1 < probes.size(); a += 2) pairs.emplace_back(probes[a], probes[a + 1]);
    const auto br = verify_bialgebra(p, lambda, mu, nu, pairs);
    r_bialg = std::max({r_bialg, br.coproduct_of_product, br.coproduct_of_unit, br.counit_of_product,
                        br.counit_of_unit});
  }
  return {
      {"hopf_colour_transformations", "colour-group covariance of the coloured coproduct, counit and antipode",
       r_transform, tol.get("hopf_colour_transformations")},
      {"hopf_coassociativity", "generalised coassociativity", r_coassoc, tol.get("hopf_coassociativity")},
      {"hopf_counit", "generalised counit axiom", r_counit, tol.get("hopf_counit")},
      {"hopf_antipode", "generalised antipode axiom", r_antipode, tol.get("hopf_antipode")},
      {"hopf_bialgebra", "generalised bialgebra axioms with the graded twist", r_bialg, tol.get("hopf_bialgebra")},
  };
}

/// Colour-group laws and grading compatibility; the composition and inverse
/// laws are asserted up to a sign on odd monomials and the branch flips are reported.
inline std::vector<CheckResult> run_group_suite(std::uint64_t seed, int draws, const Tolerances& tol) {
  auto rng = suite_sampler(seed, suite_seeds::group);
  GroupLawReport worst;
  int flips = 0, inv_flips = 0, probes_total = 0, draws_with_flip = 0;
  for (int i = 0; i < draws; ++i) {
    const ParamPoint p = rng.point();
    const Colour nu = rng.colour(p);
    const Colour nu2 = rng.colour(p);
    const auto probes = standard_probes(Home{p}, rng, 5);
    const GroupLawReport r = check_group_laws(p, nu, nu2, probes);
    worst.composition = std::max(worst.composition, r.composition);
    worst.composition_signed = std::max(worst.composition_signed, r.composition_signed);
    worst.identity = std::max(worst.identity, r.identity);
    worst.inverse = std::max(worst.inverse, r.inverse);
    worst.inverse_signed = std::max(worst.inverse_signed, r.inverse_signed);
    worst.inverse_exact = std::max(worst.inverse_exact, r.inverse_exact);
    worst.grading = std::max(worst.grading, r.grading);
    flips += r.composition_sign_flips;
    inv_flips += r.inverse_sign_flips;
    draws_with_flip += r.composition_sign_flips > 0 ? 1 : 0;
    probes_total += static_cast<int>(probes.size());
  }
  CheckResult comp{"group_composition", "sigma^{nu'} o sigma^{nu} = sigma^{nu' nu} (up to sign on odd generators)",
                   worst.composition, tol.get("group_composition")};
  comp.details = {{"signed_max_residual", worst.composition_signed},
                  {"probes_with_branch_flip", flips},
                  {"draws_with_branch_flip", draws_with_flip},
                  {"probes", probes_total}};
  CheckResult inv{"group_inverse", "sigma^{1/nu} o sigma^{nu} = id (up to sign on odd generators); sigma_nu o sigma^nu = id",
                  std::max(worst.inverse, worst.inverse_exact), tol.get("group_inverse")};
  inv.details = {{"signed_max_residual", worst.inverse_signed},
                 {"exact_inverse_residual", worst.inverse_exact},
                 {"probes_with_branch_flip", inv_flips}};
  return {comp,
          {"group_identity", "sigma^1 = id", worst.identity, tol.get("group_identity")},
          inv,
          {"group_grading", "sigma^nu o gamma = gamma o sigma^nu", worst.grading, tol.get("group_grading")}};
}

/// Invertibility, intertwining and hexagon relations of the coloured R-matrix in the representation.
inline std::vector<CheckResult> run_quasitriangular_suite(std::uint64_t seed, int draws, const Tolerances& tol) {
  auto rng = suite_sampler(seed, suite_seeds::quasi);
  double r_inv = 0, r_int = 0, r_h1 = 0, r_h2 = 0;
  for (int i = 0; i < draws; ++i) {
    const ParamPoint p = rng.point();
    const Colour l = rng.colour(p);
    const Colour m = rng.colour(p);
    const Colour n = rng.colour(p);
    const RFactorisation f = factorise_r(p, l, m);
    const Matrix numeric = f.compose().partialPivLu().inverse();
    r_inv = std::max(r_inv, normalized_residual(numeric, f.inverse()));
    for (const auto& g : generators(Home{p, n.value()})) {
      r_int = std::max(r_int, check_intertwiner(p, l, m, n, g));
    }
    const Colour a = rng.colour(p);
    const Colour b = rng.colour(p);
    const Colour c = rng.colour(p);
    const HexagonResiduals h = check_hexagons(p, a, b, c, l, m);
    r_h1 = std::max(r_h1, h.first);
    r_h2 = std::max(r_h2, h.second);
  }
  return {
      {"r_inverse", "(R^{l,m})^{-1} = (sigma^l (x) sigma^m)(R^{-1}) via the nilpotent inverse", r_inv,
       tol.get("r_inverse")},
      {"intertwiner", "tau o Delta^{m,l}_{q,n}(a) = R^{l,m} Delta^{l,m}_{q,n}(a) (R^{l,m})^{-1}", r_int,
       tol.get("intertwiner")},
      {"hexagon_first", "(Delta^{a,b}_{q,l} (x) sigma^c_m)(R^{l,m}) = R^{a,c}_13 R^{b,c}_23", r_h1,
       tol.get("hexagon_first")},
      {"hexagon_second", "(sigma^a_l (x) Delta^{b,c}_{q,m})(R^{l,m}) = R^{a,c}_13 R^{a,b}_12", r_h2,
       tol.get("hexagon_second")},
  };
}

/// Identity colours recover the uncoloured structure; the coloured coproduct
/// equals its conjugation definition at arbitrary colours.
inline std::vector<CheckResult> run_reduction_suite(std::uint64_t seed, int draws, const Tolerances& tol) {
  auto rng = suite_sampler(seed, suite_seeds::reduction);
  double r_maps = 0, r_ybe = 0, r_def = 0;
  for (int i = 0; i < draws; ++i) {
    const ParamPoint p = rng.point();
    const Home h{p};
    const ColouredMapContext unit_ctx{p, 1.0, 1.0, 1.0};
    for (const auto& x : standard_probes(h, rng, 5)) {
      r_maps = std::max(r_maps, residual(coproduct(unit_ctx, x), standard_coproduct(p, x)));
      r_maps = std::max(r_maps, residual(antipode(unit_ctx, x), standard_antipode(p, x)));
      r_maps = std::max(r_maps, std::abs(counit(unit_ctx, x) - standard_counit(x)));
    }
    r_ybe = std::max(r_ybe, check_coloured_graded_ybe(p, 1.0, 1.0, 1.0));

    const ColouredMapContext ctx{p, rng.colour(p), rng.colour(p), rng.colour(p)};
    for (const auto& x : standard_probes(ctx.input_home(), rng, 5)) {
      r_def = std::max(r_def, residual(coproduct(ctx, x), coproduct_by_definition(ctx, x)));
    }
  }
  return {
      {"reduction_maps", "coloured maps at lambda = mu = nu = 1 equal the uncoloured Hopf superalgebra maps", r_maps,
       tol.get("reduction_maps")},
      {"reduction_ybe", "uncoloured graded YBE at lambda = mu = nu = 1", r_ybe, tol.get("reduction_ybe")},
      {"coproduct_definition_route",
       "coloured coproduct from generator formulas = (sigma^l (x) sigma^m) o Delta_q o sigma_n", r_def,
       tol.get("coproduct_definition_route")},
  };
}

/// Coproduct and representation respect {psi+, psi-} = (q^{2Z}-1)/(q^2-1) and D is multiplicative.
inline std::vector<CheckResult> run_relation_suite(std::uint64_t seed, int draws, const Tolerances& tol) {
  auto rng = suite_sampler(seed, suite_seeds::relation);
  double r_delta = 0, r_rep = 0;
  for (int i = 0; i < draws; ++i) {
    const ParamPoint p = rng.point();
    const ColouredMapContext ctx{p, rng.colour(p), rng.colour(p), rng.colour(p)};
    const Home h = ctx.input_home();
    const TensorElement dp = coproduct(ctx, AlgebraElement::psi_plus(h));
    const TensorElement dm = coproduct(ctx, AlgebraElement::psi_minus(h));
    const TensorElement lhs = tensor_multiply(dp, dm) + tensor_multiply(dm, dp);
    r_delta = std::max(r_delta, residual(lhs, coproduct(ctx, anticommutator_value(h))));
    // Squares of odd generators.
    r_delta = std::max(r_delta, tensor_multiply(dp, dp).max_abs_coeff() / std::max(1.0, dp.max_abs_coeff()));
    r_delta = std::max(r_delta, tensor_multiply(dm, dm).max_abs_coeff() / std::max(1.0, dm.max_abs_coeff()));

    const Matrix P = rep(AlgebraElement::psi_plus(h)).entries;
    const Matrix M = rep(AlgebraElement::psi_minus(h)).entries;
    r_rep = std::max(r_rep, normalized_residual(P * M + M * P, rep(anticommutator_value(h)).entries));
    const auto probes = standard_probes(h, rng, 4);
    for (const auto& x : probes) {
      for (const auto& y : probes) {
        r_rep = std::max(r_rep, normalized_residual(rep(multiply(x, y)).entries, rep(x).entries * rep(y).entries));
      }
    }
  }
  return {
      {"relation_coproduct", "Delta({psi+, psi-}) = Delta((q^{2Z}-1)/(q^2-1)) and Delta(psi^pm)^2 = 0", r_delta,
       tol.get("relation_coproduct")},
      {"relation_representation", "D({psi+, psi-}) = D((q^{2Z}-1)/(q^2-1)) and D(xy) = D(x) D(y)", r_rep,
       tol.get("relation_representation")},
  };
}

/// The bialgebra compatibility on (psi+, psi-) breaks under the (deg a)(deg a) twist sign.
/// Aggregated like the bialgebra check (largest residual over draws), and per draw
/// against the bialgebra tolerance.
inline std::vector<CheckResult> run_sensitivity_suite(std::uint64_t seed, int draws, const Tolerances& tol) {
  auto rng = suite_sampler(seed, suite_seeds::sensitivity);
  double weakest = std::numeric_limits<double>::infinity();
  double strongest = 0.0;
  double graded = 0.0;
  int above = 0;
  for (int i = 0; i < draws; ++i) {
    const ParamPoint p = rng.point();
    const Colour l = rng.colour(p), m = rng.colour(p), n = rng.colour(p);
    const Home h{p, n.value()};
    const std::vector<std::pair<AlgebraElement, AlgebraElement>> pair{
        {AlgebraElement::psi_plus(h), AlgebraElement::psi_minus(h)}};
    const double r = verify_bialgebra(p, l, m, n, pair, TwistConvention::SelfParity).coproduct_of_product;
    weakest = std::min(weakest, r);
    strongest = std::max(strongest, r);
    above += r > tol.get("twist_sign_sensitivity") ? 1 : 0;
    graded = std::max(graded, verify_bialgebra(p, l, m, n, pair, TwistConvention::Graded).coproduct_of_product);
  }
  CheckResult c{"twist_sign_sensitivity",
                "bialgebra axiom on (psi+, psi-) fails with the twist sign (-1)^{deg a deg a}", strongest,
                tol.get("twist_sign_sensitivity"), Bound::lower};
  c.details = {{"graded_twist_max_residual", graded},
               {"min_residual", weakest},
               {"draws_above_tolerance", above},
               {"draws", draws}};
  CheckResult every{"twist_sign_per_draw",
                    "the (-1)^{deg a deg a} twist violates the bialgebra axiom on (psi+, psi-) at every draw",
                    weakest, tol.get("twist_sign_per_draw"), Bound::lower};
  return {c, every};
}

using SuiteFn = std::function<std::vector<CheckResult>(std::uint64_t, int, const Tolerances&)>;

/// All suites in report order. The quasitriangularity suite runs on
/// max(1, draws / 2) draws.
inline std::vector<std::pair<std::string, SuiteFn>> all_suites() {
  return {
      {"crossval", run_crossval_suite},
      {"ybe", run_ybe_suite},
      {"hopf_axioms", run_hopf_axiom_suite},
      {"group", run_group_suite},
      {"quasitriangular",
       [](std::uint64_t seed, int draws, const Tolerances& t) {
         return run_quasitriangular_suite(seed, std::max(1, draws / 2), t);
       }},
      {"reduction", run_reduction_suite},
      {"relation", run_relation_suite},
      {"sensitivity", run_sensitivity_suite},
  };
}

inline VerificationReport run_full_verification(std::uint64_t seed, int draws, const Tolerances& tol) {
  if (draws < 1) throw DomainError("draws must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report{"full", seed, draws, {}, 0.0};
  for (const auto& [name, fn] : all_suites()) {
    auto checks = fn(seed, draws, tol);
    report.checks.insert(report.checks.end(), checks.begin(), checks.end());
  }
  report.duration_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

} // namespace colhopf
