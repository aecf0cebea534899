#pragma once

// Command-line front end. `run` is the whole program minus process setup,
// so tests can drive it with in-memory streams.

#include "hcirc/hcirc.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace hcirc::cli {

enum ExitCode : int { ok = 0, disagreement = 1, usage = 2 };

struct CliConfig {
  std::string command;
  std::optional<std::string> preset;
  std::optional<std::string> params;
  std::size_t n = 0;
  std::size_t g = 1;
  std::optional<std::size_t> from;
  std::optional<std::size_t> to;
  std::string method = "both";
  std::string output = "plain";
  double tol = 1e-12;
  // verify only
  std::vector<std::string> verify_presets;
  std::vector<std::string> checks;
  std::size_t inverse_cap = 12;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline Preset resolve_sequence(const CliConfig& cfg) {
  if (cfg.preset && cfg.params) throw UsageError("--preset and --params are mutually exclusive");
  if (!cfg.preset && !cfg.params) throw UsageError("one of --preset or --params is required");
  try {
    if (cfg.preset) return presets::parse(*cfg.preset);
    std::vector<Rational> v;
    std::stringstream ss(*cfg.params);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(Rational::parse(item));
    if (v.size() != 4) throw std::invalid_argument("--params needs exactly FK,GK,A,B");
    HoradamParams p(v[0], v[1], v[2], v[3]);
    for (auto known : {presets::fibonacci(), presets::lucas(), presets::pell(), presets::jacobsthal()})
      if (known.params == p) return known;
    return {"custom", p};
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

inline std::string named_sequence_form(const std::string& name) {
  if (name == "fibonacci") return "= F_{n+2} - 1 form";
  if (name == "lucas") return "= L_{n+2} - 3 form";
  if (name == "pell") return "= (P_{n+1} + P_n - 1)/2 form";
  if (name == "jacobsthal") return "= (J_{n+2} - 1)/2 form";
  return {};
}

inline void print_matrix(std::ostream& out, const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c);
    out << '\n';
  }
}

inline void print_value(std::ostream& out, const Value& v) {
  std::visit(
      [&out](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::monostate>) out << "unavailable\n";
        else if constexpr (std::is_same_v<T, Matrix>) print_matrix(out, x);
        else if constexpr (std::is_same_v<T, bool>) out << (x ? "true" : "false") << '\n';
        else if constexpr (std::is_same_v<T, double>) {
          std::ostringstream s;
          s.precision(17);
          s << x;
          out << s.str() << '\n';
        } else out << x << '\n';
      },
      v);
}

inline void print_labeled(std::ostream& out, const char* label, const Value& v) {
  out << label << (std::holds_alternative<Matrix>(v) ? ":\n" : ": ");
  print_value(out, v);
}

/// Shared reporting for det / inv / norm: prints one or both results and
/// decides the exit code.
inline int report(std::ostream& out, const CliConfig& cfg, const Preset& seq, const std::string& quantity,
                  const std::optional<ClosedFormResult>& closed, const std::optional<ClosedFormResult>& oracle,
                  std::optional<bool> agree, bool singular, const std::vector<std::string>& notes) {
  if (cfg.output == "json") {
    Json j{{"command", cfg.command}, {"sequence", seq.name}, {"n", cfg.n}};
    if (quantity != "norm") j["g"] = cfg.g;
    if (closed) j["closed"] = to_json(*closed);
    if (oracle) j["oracle"] = to_json(*oracle);
    if (agree) j["agree"] = *agree;
    j["notes"] = notes;
    out << j.dump(2) << '\n';
  } else if (closed && oracle) {
    print_labeled(out, "closed", closed->value);
    print_labeled(out, "oracle", oracle->value);
    if (agree) out << "agree: " << (*agree ? "true" : "false") << '\n';
    for (const auto& n : closed->notes) out << "note: " << n << '\n';
    for (const auto& n : notes) out << "note: " << n << '\n';
  } else {
    const auto& r = closed ? *closed : *oracle;
    print_value(out, r.value);
    if (closed)
      for (const auto& n : r.notes) out << "note: " << n << '\n';
    for (const auto& n : notes) out << "note: " << n << '\n';
  }
  if (singular || (agree && !*agree)) return disagreement;
  return ok;
}

inline bool want_closed(const CliConfig& c) { return c.method != "oracle"; }
inline bool want_oracle(const CliConfig& c) { return c.method != "closed"; }

inline int cmd_seq(std::ostream& out, const CliConfig& cfg) {
  auto seq = resolve_sequence(cfg);
  std::size_t lo = cfg.from.value_or(1);
  std::size_t hi = cfg.to ? *cfg.to : (cfg.n ? cfg.n : throw UsageError("seq needs --to (or --n)"));
  if (lo > hi) throw UsageError("--from must not exceed --to");
  auto v = terms(seq.params, lo, hi);
  if (cfg.output == "json") {
    out << Json{{"sequence", seq.name}, {"from", lo}, {"to", hi}, {"terms", to_json(v)}}.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
    out << '\n';
  }
  return ok;
}

inline int cmd_matrix(std::ostream& out, const CliConfig& cfg) {
  auto seq = resolve_sequence(cfg);
  auto m = g_circulant({seq.params, cfg.n, cfg.g});
  if (cfg.output == "json") out << to_json(m).dump(2) << '\n';
  else print_matrix(out, m);
  return ok;
}

inline int cmd_det(std::ostream& out, const CliConfig& cfg) {
  auto seq = resolve_sequence(cfg);
  std::vector<std::string> notes;
  std::optional<ClosedFormResult> closed, oracle;
  auto oracle_det = det_bareiss(g_circulant({seq.params, cfg.n, cfg.g}));
  bool singular = oracle_det.is_zero();
  if (want_closed(cfg)) {
    ClosedFormResult r{"det", "closed", {}, det_gcirc_preconditions(cfg.n, cfg.g), {}};
    try {
      r.value = det_gcirc_closed(seq.params, cfg.n, cfg.g);
      singular = singular || std::get<Rational>(r.value).is_zero();
    } catch (const precondition_error& e) {
      r.notes.push_back("closed form not applicable: " + e.reason() +
                        "; Q_g is singular so the determinant is 0");
      singular = true;
    }
    closed = r;
  }
  if (want_oracle(cfg)) oracle = ClosedFormResult{"det", "oracle", oracle_det, {}, {"Bareiss elimination"}};
  std::optional<bool> agree;
  if (closed && oracle && std::holds_alternative<Rational>(closed->value))
    agree = std::get<Rational>(closed->value) == oracle_det;
  if (singular) notes.push_back("matrix is singular");
  return report(out, cfg, seq, "det", closed, oracle, agree, singular, notes);
}

inline int cmd_inv(std::ostream& out, std::ostream& err, const CliConfig& cfg) {
  auto seq = resolve_sequence(cfg);
  auto a = g_circulant({seq.params, cfg.n, cfg.g});
  std::vector<std::string> notes;
  std::optional<ClosedFormResult> closed, oracle;
  std::optional<Matrix> exact;
  bool singular = false;
  try {
    exact = inverse_exact(a);
  } catch (const singular_matrix_error&) {
    singular = true;
  }

  bool use_closed = want_closed(cfg);
  if (use_closed && cfg.n <= 2) {
    notes.push_back("closed form needs n>2; using the exact oracle");
    use_closed = false;
  }
  if (use_closed) {
    ClosedFormResult r{"inverse", "closed", {}, inverse_gcirc_preconditions(seq.params, cfg.n, cfg.g), {}};
    try {
      r.value = inv_gcirc_closed(seq.params, cfg.n, cfg.g);
    } catch (const precondition_error& e) {
      r.notes.push_back("closed form not applicable: " + e.reason());
    } catch (const singular_matrix_error&) {
      r.notes.push_back("closed form not applicable: singular");
      singular = true;
    }
    closed = r;
  }
  if (want_oracle(cfg) || !use_closed) {
    ClosedFormResult r{"inverse", "oracle", {}, {}, {"Gauss-Jordan elimination"}};
    if (exact) r.value = *exact;
    oracle = r;
  }
  std::optional<bool> agree;
  if (closed && oracle)
    if (auto* c = std::get_if<Matrix>(&closed->value); c != nullptr && exact) agree = *c == *exact;
  if (singular) {
    notes.push_back("matrix is singular");
    err << "error: matrix is singular\n";
  }
  return report(out, cfg, seq, "inverse", closed, oracle, agree, singular, notes);
}

inline int cmd_norm(std::ostream& out, const CliConfig& cfg) {
  auto seq = resolve_sequence(cfg);
  std::vector<std::string> notes;
  std::optional<ClosedFormResult> closed, oracle;
  bool failed = false;
  if (want_closed(cfg)) {
    auto pre = norm_preconditions(seq.params, cfg.n);
    if (std::gcd(cfg.n, cfg.g) != 1) pre.push_back({"gcd(n,g)=1", false, reason::gcd_not_one});
    ClosedFormResult r{"norm", "closed", {}, pre, {}};
    try {
      if (std::gcd(cfg.n, cfg.g) != 1) throw precondition_error(reason::gcd_not_one);
      r.value = norm_closed(seq.params, cfg.n);
      if (auto form = named_sequence_form(seq.name); !form.empty()) notes.push_back(form);
    } catch (const precondition_error& e) {
      r.notes.push_back("closed form not applicable: " + e.reason() + "; use the oracle");
      failed = cfg.method == "closed";
    }
    closed = r;
  }
  if (want_oracle(cfg)) {
    double v = spectral_norm_float(g_circulant({seq.params, cfg.n, cfg.g}), {.tol = cfg.tol});
    oracle = ClosedFormResult{"norm", "oracle", v, {}, {"power iteration on A^T A"}};
  }
  std::optional<bool> agree;
  if (closed && oracle) {
    if (auto* c = std::get_if<Rational>(&closed->value)) {
      double cf = c->to_double();
      agree = std::abs(cf - std::get<double>(oracle->value)) <= 1e-8 * std::abs(cf);
    }
  }
  return report(out, cfg, seq, "norm", closed, oracle, agree, failed, notes);
}

inline int cmd_hn_audit(std::ostream& out, const CliConfig& cfg) {
  auto seq = resolve_sequence(cfg);
  HnDiagnostic d = [&] {
    try {
      return hn_diagnostic(seq.params, cfg.n);
    } catch (const precondition_error& e) {
      throw UsageError(std::string("hn-audit: ") + e.reason());
    }
  }();
  std::string note = d.consistent() ? "printed formula consistent here" : "printed formula inconsistent here";
  if (cfg.output == "json") {
    auto j = to_json(d);
    j["sequence"] = seq.name;
    j["n"] = cfg.n;
    j["note"] = note;
    out << j.dump(2) << '\n';
  } else {
    out << "printed_h: " << d.printed_h << '\n'
        << "corrected_h: " << d.corrected_h << '\n'
        << "ratio: " << d.ratio << '\n'
        << "note: " << note << '\n';
  }
  return ok;
}

inline int cmd_verify(std::ostream& out, const CliConfig& cfg) {
  std::vector<Preset> seqs;
  try {
    for (const auto& name : cfg.verify_presets) seqs.push_back(presets::parse(name));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (cfg.params) {
    CliConfig only_params;
    only_params.params = cfg.params;
    seqs.push_back(resolve_sequence(only_params));
  }
  if (seqs.empty()) seqs = presets::defaults();

  std::set<Check> checks;
  for (const auto& name : cfg.checks) {
    auto c = parse_check(name);
    if (!c) throw UsageError("unknown check '" + name + "'");
    checks.insert(*c);
  }
  if (checks.empty()) checks.insert(all_checks.begin(), all_checks.end());

  VerifyOptions opts;
  opts.inverse_cap = cfg.inverse_cap;
  opts.norm_tol = cfg.tol;
  auto rep = run_suite(seqs, cfg.n ? cfg.n : 8, checks, opts);

  if (cfg.output == "json") {
    out << to_json(rep).dump(2) << '\n';
  } else {
    out << "pass: " << rep.passed << '\n' << "fail: " << rep.failed << '\n' << "skip: " << rep.skipped << '\n';
    for (const auto& c : rep.cases)
      if (c.outcome.status == Status::fail)
        out << "FAIL " << c.preset << " n=" << c.n << " g=" << c.g << ' ' << to_string(c.outcome.check) << ": "
            << c.outcome.reason << '\n';
  }
  return rep.failed == 0 ? ok : disagreement;
}

}  // namespace detail

/// Runs one CLI invocation. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Exact g-circulant matrices over generalized k-Horadam numbers", "horadam-circulant"};
  app.require_subcommand(1);

  auto add_sequence = [&cfg](CLI::App* sub) {
    auto* pre = sub->add_option("--preset", cfg.preset,
                                "fibonacci | lucas | pell | jacobsthal | k_fibonacci(K) | k_lucas(K) | "
                                "horadam(P,Q,A,B)");
    auto* par = sub->add_option("--params", cfg.params, "FK,GK,A,B as rationals p/q");
    pre->excludes(par);
  };
  auto add_output = [&cfg](CLI::App* sub) {
    sub->add_option("--output", cfg.output, "json | plain")->check(CLI::IsMember({"json", "plain"}));
  };
  auto add_matrix = [&](CLI::App* sub) {
    add_sequence(sub);
    sub->add_option("--n", cfg.n, "matrix order")->required()->check(CLI::PositiveNumber);
    sub->add_option("--g", cfg.g, "row shift (default 1)");
    add_output(sub);
  };
  auto add_method = [&cfg](CLI::App* sub) {
    sub->add_option("--method", cfg.method, "closed | oracle | both")
        ->check(CLI::IsMember({"closed", "oracle", "both"}));
  };

  auto* seq = app.add_subcommand("seq", "print sequence terms H(from..to)");
  add_sequence(seq);
  seq->add_option("--from", cfg.from, "first index (default 1)");
  seq->add_option("--to", cfg.to, "last index");
  seq->add_option("--n", cfg.n, "same as --to when --to is absent")->check(CLI::PositiveNumber);
  add_output(seq);

  auto* matrix = app.add_subcommand("matrix", "print the g-circulant matrix");
  add_matrix(matrix);

  for (const char* name : {"det", "inv", "norm"}) {
    auto* sub = app.add_subcommand(name, std::string("evaluate the ") + name);
    add_matrix(sub);
    add_method(sub);
    sub->add_option("--tol", cfg.tol, "power-iteration tolerance")->check(CLI::PositiveNumber);
  }

  auto* hn = app.add_subcommand("hn-audit", "compare the printed and corrected inverse normalization");
  add_sequence(hn);
  hn->add_option("--n", cfg.n, "matrix order (> 2)")->required()->check(CLI::PositiveNumber);
  add_output(hn);

  auto* verify = app.add_subcommand("verify", "run the closed-form vs oracle suite");
  verify->add_option("--preset", cfg.verify_presets, "preset to include (repeatable; default: all five)");
  verify->add_option("--params", cfg.params, "extra custom sequence FK,GK,A,B");
  verify->add_option("--n", cfg.n, "largest order (default 8)")->check(CLI::PositiveNumber);
  verify->add_option("--checks", cfg.checks, "subset of factorization,unitarity,det,inverse,norm,sum,binet")
      ->delimiter(',');
  verify->add_option("--inverse-cap", cfg.inverse_cap, "largest order for inverse checks (default 12)");
  verify->add_option("--tol", cfg.tol, "power-iteration tolerance")->check(CLI::PositiveNumber);
  add_output(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }

  const CLI::App* sub = app.get_subcommands().front();
  cfg.command = sub->get_name();
  try {
    if (cfg.n != 0 && cfg.g >= cfg.n) {
      std::size_t reduced = cfg.g % cfg.n;
      if (sub->count("--g") > 0) err << "note: g reduced mod n from " << cfg.g << " to " << reduced << '\n';
      cfg.g = reduced;
    }
    if (cfg.command == "seq") return detail::cmd_seq(out, cfg);
    if (cfg.command == "matrix") return detail::cmd_matrix(out, cfg);
    if (cfg.command == "det") return detail::cmd_det(out, cfg);
    if (cfg.command == "inv") return detail::cmd_inv(out, err, cfg);
    if (cfg.command == "norm") return detail::cmd_norm(out, cfg);
    if (cfg.command == "hn-audit") return detail::cmd_hn_audit(out, cfg);
    return detail::cmd_verify(out, cfg);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return disagreement;
  }
}

}  // namespace hcirc::cli
