#pragma once

// Closed form vs. oracle comparison over (preset, n, g) grids.

#include "hcirc/closed_form.hpp"
#include "hcirc/errors.hpp"
#include "hcirc/numeric.hpp"
#include "hcirc/sequence.hpp"
#include "hcirc/structmat.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hcirc {

enum class Check { factorization, unitarity, det, inverse, norm, sum, binet };

inline constexpr std::array<Check, 7> all_checks{Check::factorization, Check::unitarity, Check::det,
                                                 Check::inverse,       Check::norm,      Check::sum,
                                                 Check::binet};

inline std::string_view to_string(Check c) {
  switch (c) {
    case Check::factorization: return "factorization";
    case Check::unitarity: return "unitarity";
    case Check::det: return "det";
    case Check::inverse: return "inverse";
    case Check::norm: return "norm";
    case Check::sum: return "sum";
    case Check::binet: return "binet";
  }
  return "?";
}

inline std::optional<Check> parse_check(std::string_view s) {
  for (Check c : all_checks)
    if (to_string(c) == s) return c;
  return std::nullopt;
}

enum class Status { pass, fail, skipped };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

/// Anything a check can report as its closed or oracle value.
using Value = std::variant<std::monostate, Rational, double, bool, Matrix>;

struct VerifyCase {
  Preset preset;
  std::size_t n;
  std::size_t g;
  std::set<Check> checks;
};

struct CheckOutcome {
  Check check;
  Status status;
  std::string reason;  ///< Skip reason or failure detail; empty on pass.
  Value closed_value;
  Value oracle_value;
  std::optional<double> abs_error;  ///< Float checks only.
};

struct CaseResult {
  std::string preset;
  std::size_t n;
  std::size_t g;
  CheckOutcome outcome;
};

struct VerifyOptions {
  std::size_t inverse_cap = 12;
  double norm_tol = 1e-12;
  double norm_rel_threshold = 1e-8;
  double binet_rel_threshold = 1e-9;
};

struct VerifyReport {
  std::vector<CaseResult> cases;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
};

namespace detail {

inline CheckOutcome exact_compare(Check c, Value closed, Value oracle, bool equal) {
  return {c, equal ? Status::pass : Status::fail, equal ? "" : "closed form differs from oracle",
          std::move(closed), std::move(oracle), std::nullopt};
}

inline CheckOutcome skip(Check c, std::string reason, Value oracle = {}) {
  return {c, Status::skipped, std::move(reason), {}, std::move(oracle), std::nullopt};
}

inline CheckOutcome check_factorization(const VerifyCase& vc) {
  auto a = g_circulant({vc.preset.params, vc.n, vc.g});
  auto row = terms(vc.preset.params, 1, vc.n);
  auto qc = matmul(q_matrix(vc.n, vc.g), circulant(row));
  return exact_compare(Check::factorization, qc, a, qc == a);
}

// Q_g·Q_gᵀ = I must hold exactly when gcd(n, g) = 1 and fail otherwise.
inline CheckOutcome check_unitarity(const VerifyCase& vc) {
  auto q = q_matrix(vc.n, vc.g);
  bool unitary = matmul(q, transpose(q)) == Matrix::identity(vc.n);
  bool expected = std::gcd(vc.n, vc.g) == 1;
  return exact_compare(Check::unitarity, expected, unitary, unitary == expected);
}

inline CheckOutcome check_det(const VerifyCase& vc) {
  auto oracle = det_bareiss(g_circulant({vc.preset.params, vc.n, vc.g}));
  Rational closed;
  try {
    closed = det_gcirc_closed(vc.preset.params, vc.n, vc.g);
  } catch (const precondition_error& e) {
    return skip(Check::det, e.reason(), oracle);
  }
  return exact_compare(Check::det, closed, oracle, closed == oracle);
}

inline CheckOutcome check_inverse(const VerifyCase& vc, const VerifyOptions& opts) {
  if (vc.n > opts.inverse_cap) return skip(Check::inverse, reason::inverse_cap);
  const auto& p = vc.preset.params;
  Matrix closed(1, 1);
  try {
    closed = inv_gcirc_closed(p, vc.n, vc.g);
  } catch (const precondition_error& e) {
    return skip(Check::inverse, e.reason());
  } catch (const singular_matrix_error&) {
    return skip(Check::inverse, reason::singular);
  }
  auto a = g_circulant({p, vc.n, vc.g});
  Matrix oracle(1, 1);
  try {
    oracle = inverse_exact(a);
  } catch (const singular_matrix_error&) {
    return {Check::inverse, Status::fail, "closed form returned an inverse of a singular matrix",
            closed, {}, std::nullopt};
  }
  if (matmul(closed, a) != Matrix::identity(vc.n))
    return {Check::inverse, Status::fail, "closed-form inverse times matrix is not I", closed, oracle,
            std::nullopt};
  return exact_compare(Check::inverse, closed, oracle, closed == oracle);
}

inline CheckOutcome check_norm(const VerifyCase& vc, const VerifyOptions& opts) {
  const auto& p = vc.preset.params;
  auto a = g_circulant({p, vc.n, vc.g});
  double oracle = spectral_norm_float(a, {.tol = opts.norm_tol});
  if (std::gcd(vc.n, vc.g) != 1) return skip(Check::norm, reason::gcd_not_one, oracle);
  Rational closed;
  try {
    closed = norm_closed(p, vc.n);
  } catch (const precondition_error& e) {
    return skip(Check::norm, e.reason(), oracle);
  }
  double cf = closed.to_double();
  double err = std::abs(cf - oracle);
  bool ok = err <= opts.norm_rel_threshold * std::abs(cf);
  return {Check::norm, ok ? Status::pass : Status::fail, ok ? "" : "relative error above threshold",
          closed, oracle, err};
}

inline CheckOutcome check_sum(const VerifyCase& vc) {
  const auto& p = vc.preset.params;
  Rational direct;
  for (const auto& h : terms(p, 1, vc.n)) direct += h;
  Rational closed;
  try {
    closed = sum_closed(p, vc.n);
  } catch (const precondition_error& e) {
    return skip(Check::sum, e.reason(), direct);
  }
  return exact_compare(Check::sum, closed, direct, closed == direct);
}

inline CheckOutcome check_binet(const VerifyCase& vc, const VerifyOptions& opts) {
  const auto& p = vc.preset.params;
  Rational exact = term(p, vc.n);
  auto b = binet(p, vc.n);
  if (const auto* r = std::get_if<Rational>(&b)) return exact_compare(Check::binet, *r, exact, *r == exact);
  double v = std::get<double>(b);
  double e = exact.to_double();
  double err = std::abs(v - e);
  bool ok = err <= opts.binet_rel_threshold * std::abs(e);
  return {Check::binet, ok ? Status::pass : Status::fail, ok ? "" : "relative error above threshold",
          v, exact, err};
}

}  // namespace detail

/// One outcome per requested check, in the fixed order of `all_checks`.
/// Errors never escape: precondition failures become skips, anything
/// unexpected becomes a failure carrying the message.
inline std::vector<CheckOutcome> run_case(const VerifyCase& vc, const VerifyOptions& opts = {}) {
  std::vector<CheckOutcome> out;
  for (Check c : all_checks) {
    if (!vc.checks.contains(c)) continue;
    try {
      switch (c) {
        case Check::factorization: out.push_back(detail::check_factorization(vc)); break;
        case Check::unitarity: out.push_back(detail::check_unitarity(vc)); break;
        case Check::det: out.push_back(detail::check_det(vc)); break;
        case Check::inverse: out.push_back(detail::check_inverse(vc, opts)); break;
        case Check::norm: out.push_back(detail::check_norm(vc, opts)); break;
        case Check::sum: out.push_back(detail::check_sum(vc)); break;
        case Check::binet: out.push_back(detail::check_binet(vc, opts)); break;
      }
    } catch (const std::exception& e) {
      out.push_back({c, Status::fail, e.what(), {}, {}, std::nullopt});
    }
  }
  return out;
}

/// Every (preset, 1 ≤ n ≤ n_max, 0 ≤ g < n) case, in that order.
inline VerifyReport run_suite(const std::vector<Preset>& presets, std::size_t n_max,
                              const std::set<Check>& checks, const VerifyOptions& opts = {}) {
  if (n_max == 0) throw std::invalid_argument("run_suite: n_max must be >= 1");
  VerifyReport report;
  for (const auto& preset : presets)
    for (std::size_t n = 1; n <= n_max; ++n)
      for (std::size_t g = 0; g < n; ++g)
        for (auto& outcome : run_case({preset, n, g, checks}, opts)) {
          switch (outcome.status) {
            case Status::pass: ++report.passed; break;
            case Status::fail: ++report.failed; break;
            case Status::skipped: ++report.skipped; break;
          }
          report.cases.push_back({preset.name, n, g, std::move(outcome)});
        }
  return report;
}

struct HnDiagnostic {
  Rational printed_h;
  Rational corrected_h;
  Rational ratio;  ///< printed_h / corrected_h
  bool consistent() const { return ratio == Rational(1); }
};

inline HnDiagnostic hn_diagnostic(const HoradamParams& p, std::size_t n) {
  Rational printed = printed_hn(p, n);
  Rational corrected = inverse_ingredients(p, n).h;
  return {printed, corrected, printed / corrected};
}

}  // namespace hcirc
