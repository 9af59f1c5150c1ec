#pragma once

// Command implementations behind the colhopf executable. Each returns the
// process exit code: 0 pass, 1 verification or domain failure, 2 usage error.

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "colhopf/representation.hpp"
#include "colhopf/suites.hpp"

namespace colhopf::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

// Parses a real decimal starting at text[pos]; advances pos.
inline std::optional<double> parse_real(std::string_view text, std::size_t& pos) {
  std::string buf(text.substr(pos));
  const char* begin = buf.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin) return std::nullopt;
  pos += static_cast<std::size_t>(end - begin);
  return v;
}

} // namespace detail

/// Parses "a", "bi", "a+bi", "a-bi", "i", "-i", "a+i" (no spaces).
inline Scalar parse_complex(std::string_view text) {
  auto fail = [&] { return UsageError("invalid complex literal: '" + std::string(text) + "'"); };
  if (text.empty()) throw fail();
  if (text.find_first_of(" \t") != std::string_view::npos) throw fail();
  const bool imaginary = text.back() == 'i';
  if (!imaginary) {
    std::size_t pos = 0;
    const auto re = detail::parse_real(text, pos);
    if (!re || pos != text.size()) throw fail();
    return {*re, 0.0};
  }
  const std::string_view body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not the leading sign or part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto parse_imag = [&](std::string_view s) -> double {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    std::size_t pos = 0;
    const auto v = detail::parse_real(s, pos);
    if (!v || pos != s.size()) throw fail();
    return *v;
  };
  if (split == std::string_view::npos) {
    return {0.0, parse_imag(body)};
  }
  std::size_t pos = 0;
  const std::string_view re_part = body.substr(0, split);
  const auto re = detail::parse_real(re_part, pos);
  if (!re || pos != re_part.size()) throw fail();
  return {*re, parse_imag(body.substr(split))};
}

/// Shortest decimal that round-trips.
inline std::string format_real(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

/// "a+bi" / "a-bi" with round-trip precision.
inline std::string format_complex(Scalar z) {
  std::string s = format_real(z.real());
  if (std::signbit(z.imag())) {
    s += "-" + format_real(-z.imag());
  } else {
    s += "+" + format_real(z.imag());
  }
  return s + "i";
}

/// Comma-separated list of complex literals.
inline std::vector<Scalar> parse_complex_list(std::string_view text) {
  std::vector<Scalar> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    out.push_back(parse_complex(text.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

/// Applies "name=value" overrides.
inline Tolerances parse_tolerances(const std::vector<std::string>& overrides) {
  Tolerances tol;
  for (const auto& o : overrides) {
    const auto eq = o.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("tolerance override must be name=value: " + o);
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(o.substr(eq + 1), &pos);
    } catch (const std::exception&) {
      throw UsageError("invalid tolerance value: " + o);
    }
    if (pos != o.size() - eq - 1 || !(v >= 0.0)) throw UsageError("invalid tolerance value: " + o);
    if (!tol.set(o.substr(0, eq), v)) throw UsageError("unknown check name in tolerance override: " + o);
  }
  return tol;
}

/// Writes to `path`, or to `out` when path is empty.
inline bool write_output(const std::string& path, const std::string& content, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << content;
    return static_cast<bool>(out);
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "error: cannot open output file '" << path << "'\n";
    return false;
  }
  f << content;
  f.close();
  if (!f) {
    err << "error: failed writing '" << path << "'\n";
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

struct VerifyOptions {
  std::uint64_t seed = 0;
  int draws = 100;
  std::vector<std::string> tolerances;
  std::string output;
};

inline int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  Tolerances tol;
  try {
    if (o.draws < 1) throw UsageError("--draws must be >= 1");
    tol = parse_tolerances(o.tolerances);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  const VerificationReport report = run_full_verification(o.seed, o.draws, tol);
  for (const auto& c : report.checks) {
    if (!c.pass()) err << "FAIL " << c.name << ": " << format_real(c.statistic) << " vs " << c.tolerance << '\n';
  }
  if (!write_output(o.output, report.to_json().dump(2) + "\n", out, err)) return kExitFail;
  return report.pass() ? kExitPass : kExitFail;
}

struct RMatrixOptions {
  std::string q, s, lambda, mu;
  std::string format = "json";
  std::string output;
};

inline int cmd_rmatrix(const RMatrixOptions& o, std::ostream& out, std::ostream& err) {
  Scalar q, s, l, m;
  try {
    q = parse_complex(o.q);
    s = parse_complex(o.s);
    l = parse_complex(o.lambda);
    m = parse_complex(o.mu);
    if (o.format != "json" && o.format != "csv") throw UsageError("--format must be json or csv");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    const ParamPoint p{q, s};
    const Colour lambda{l};
    const Colour mu{m};
    const GradedMatrix closed = coloured_R_closed_form(p, lambda, mu);
    const GradedMatrix universal = coloured_R_from_universal(p, lambda, mu);
    std::ostringstream text;
    if (o.format == "csv") {
      for (Eigen::Index i = 0; i < 4; ++i) {
        for (Eigen::Index j = 0; j < 4; ++j) {
          if (j) text << ',';
          text << format_real(closed.entries(i, j).real()) << ',' << format_real(closed.entries(i, j).imag());
        }
        text << "\r\n";
      }
    } else {
      nlohmann::json rows = nlohmann::json::array();
      for (Eigen::Index i = 0; i < 4; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < 4; ++j) row.push_back({closed.entries(i, j).real(), closed.entries(i, j).imag()});
        rows.push_back(row);
      }
      const nlohmann::json j{
          {"parameters",
           {{"q", format_complex(q)}, {"s", format_complex(s)}, {"lambda", format_complex(l)},
            {"mu", format_complex(m)}}},
          {"branch",
           "principal branch for all powers; off-diagonal entry computed as (q^2-1) a^lambda a^mu q^{-(lambda+mu)/2}"},
          {"basis_parity", {0, 1, 1, 0}},
          {"entries", rows},
          {"crossval_residual", entrywise_relative(closed.entries, universal.entries)}};
      text << j.dump(2) << '\n';
    }
    return write_output(o.output, text.str(), out, err) ? kExitPass : kExitFail;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }
}

struct YbeOptions {
  std::string q, s, lambda, mu, nu;
  double perturb = 0.0;
  std::vector<std::string> tolerances;
};

inline int cmd_ybe(const YbeOptions& o, std::ostream& out, std::ostream& err) {
  Scalar q, s, l, m, n;
  Tolerances tol;
  try {
    q = parse_complex(o.q);
    s = parse_complex(o.s);
    l = parse_complex(o.lambda);
    m = parse_complex(o.mu);
    n = parse_complex(o.nu);
    tol = parse_tolerances(o.tolerances);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    const double r = check_coloured_graded_ybe(ParamPoint{q, s}, Colour{l}, Colour{m}, Colour{n}, o.perturb);
    out << format_real(r) << '\n';
    return r <= tol.get("ybe") ? kExitPass : kExitFail;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }
}

struct SweepOptions {
  std::string q, s, lambda, mu, nu;
  std::string output;
};

inline int cmd_sweep(const SweepOptions& o, std::ostream& out, std::ostream& err) {
  std::vector<Scalar> qs, ss, ls, ms, ns;
  try {
    qs = parse_complex_list(o.q);
    ss = parse_complex_list(o.s);
    ls = parse_complex_list(o.lambda);
    ms = parse_complex_list(o.mu);
    ns = parse_complex_list(o.nu);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  std::ostringstream csv;
  csv << "q,s,lambda,mu,nu,ybe_residual,crossval_residual\r\n";
  try {
    for (const Scalar q : qs)
      for (const Scalar s : ss) {
        const ParamPoint p{q, s};
        for (const Scalar l : ls)
          for (const Scalar m : ms)
            for (const Scalar n : ns) {
              const double ybe = check_coloured_graded_ybe(p, Colour{l}, Colour{m}, Colour{n});
              const double cv = entrywise_relative(coloured_R_closed_form(p, l, m).entries,
                                                   coloured_R_from_universal(p, l, m).entries);
              csv << format_complex(q) << ',' << format_complex(s) << ',' << format_complex(l) << ','
                  << format_complex(m) << ',' << format_complex(n) << ',' << format_real(ybe) << ','
                  << format_real(cv) << "\r\n";
            }
      }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return write_output(o.output, csv.str(), out, err) ? kExitPass : kExitFail;
}

} // namespace colhopf::cli
