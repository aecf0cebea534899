// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Tolerances and time budgets are fixed here.

#include "hcirc/hcirc.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#ifndef HCIRC_CLI_PATH
#error "HCIRC_CLI_PATH must point at the horadam-circulant binary"
#endif

namespace {

using namespace hcirc;

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<bool(std::ostream&)> body;
};

Rational R(const char* s) { return Rational::parse(s); }

template <class F>
void for_coprime(std::size_t n_lo, std::size_t n_hi, F&& f) {
  for (std::size_t n = n_lo; n <= n_hi; ++n)
    for (std::size_t g = 0; g < n; ++g)
      if (std::gcd(n, g) == 1) f(n, g);
}

bool determinant(std::ostream& log) {
  bool ok = true;
  std::size_t count = 0;
  for (const auto& p : presets::defaults())
    for_coprime(1, 10, [&](std::size_t n, std::size_t g) {
      ++count;
      auto closed = det_gcirc_closed(p.params, n, g);
      auto oracle = det_bareiss(g_circulant({p.params, n, g}));
      if (closed != oracle) {
        ok = false;
        log << "    " << p.name << " n=" << n << " g=" << g << ": closed " << closed << " oracle " << oracle << '\n';
      }
    });
  struct Pin { HoradamParams p; std::size_t n, g; Rational v; };
  for (const auto& pin : std::vector<Pin>{{presets::fibonacci().params, 3, 1, 4},
                                          {presets::fibonacci().params, 4, 1, -35},
                                          {presets::fibonacci().params, 3, 2, -4},
                                          {presets::lucas().params, 3, 1, 56},
                                          {presets::pell().params, 3, 2, -104}}) {
    auto v = det_gcirc_closed(pin.p, pin.n, pin.g);
    if (v != pin.v || det_bareiss(g_circulant({pin.p, pin.n, pin.g})) != pin.v) {
      ok = false;
      log << "    pinned n=" << pin.n << " g=" << pin.g << " expected " << pin.v << " got " << v << '\n';
    }
  }
  log << "    " << count << " (preset, n, g) cases compared exactly\n";
  return ok;
}

bool inverse(std::ostream& log) {
  bool ok = true;
  std::size_t count = 0;
  for (const auto& p : presets::defaults())
    for_coprime(3, 10, [&](std::size_t n, std::size_t g) {
      auto a = g_circulant({p.params, n, g});
      if (det_bareiss(a).is_zero()) return;
      ++count;
      auto inv = inv_gcirc_closed(p.params, n, g);
      if (matmul(inv, a) != Matrix::identity(n) || inv != inverse_exact(a)) {
        ok = false;
        log << "    " << p.name << " n=" << n << " g=" << g << ": closed-form inverse wrong\n";
      }
    });
  auto fib = presets::fibonacci().params;
  if (inv_circ_closed(fib, 3) != std::vector<Rational>{R("-1/4"), R("3/4"), R("-1/4")}) ok = false;
  if (inv_circ_closed(fib, 4) != std::vector<Rational>{R("-11/35"), R("17/35"), R("-4/35"), R("3/35")}) ok = false;
  log << "    " << count << " nonsingular cases, product = I and entrywise equal to Gauss-Jordan\n";
  return ok;
}

bool hn_audit(std::ostream& log) {
  auto fib = presets::fibonacci().params;
  auto d3 = hn_diagnostic(fib, 3);
  auto d4 = hn_diagnostic(fib, 4);
  log << "    n=3: printed " << d3.printed_h << " corrected " << d3.corrected_h << " ratio " << d3.ratio << '\n'
      << "    n=4: printed " << d4.printed_h << " corrected " << d4.corrected_h << " ratio " << d4.ratio << '\n';
  return !d3.consistent() && !d4.consistent() && d3.printed_h == -1 && d3.corrected_h == -2 &&
         d4.printed_h == R("-3/16") && d4.corrected_h == R("-35/16");
}

bool spectral_norm(std::ostream& log) {
  constexpr double kRel = 1e-8;
  bool ok = true;
  double worst = 0.0;
  for (const auto& p : presets::defaults())
    for_coprime(1, 16, [&](std::size_t n, std::size_t g) {
      double closed = norm_closed(p.params, n).to_double();
      double oracle = spectral_norm_float(g_circulant({p.params, n, g}), {.tol = 1e-12});
      double rel = std::abs(closed - oracle) / closed;
      worst = std::max(worst, rel);
      if (rel > kRel) {
        ok = false;
        log << "    " << p.name << " n=" << n << " g=" << g << ": relative error " << rel << '\n';
      }
    });

  auto fib = presets::fibonacci().params, luc = presets::lucas().params, pell = presets::pell().params,
       jac = presets::jacobsthal().params;
  for (std::size_t n = 1; n <= 16; ++n) {
    ok = ok && norm_closed(fib, n) == term(fib, n + 2) - Rational(1);
    ok = ok && norm_closed(luc, n) == term(luc, n + 2) - Rational(3);
    ok = ok && norm_closed(pell, n) == (term(pell, n + 1) + term(pell, n) - Rational(1)) / Rational(2);
    ok = ok && norm_closed(jac, n) == (term(jac, n + 2) - Rational(1)) / Rational(2);
  }
  log << "    worst relative error vs power iteration: " << worst << " (limit " << kRel << ")\n";
  return ok;
}

bool structure_identities(std::ostream& log) {
  bool ok = true;
  for (const auto& p : presets::defaults())
    for_coprime(1, 12, [&](std::size_t n, std::size_t g) {
      if (g_circulant({p.params, n, g}) != matmul(q_matrix(n, g), circulant(terms(p.params, 1, n)))) {
        ok = false;
        log << "    factorization fails: " << p.name << " n=" << n << " g=" << g << '\n';
      }
    });
  for (std::size_t n = 1; n <= 12; ++n)
    for (std::size_t g = 0; g < n; ++g) {
      auto q = q_matrix(n, g);
      bool unitary = matmul(q, transpose(q)) == Matrix::identity(n);
      if (unitary != (std::gcd(n, g) == 1)) {
        ok = false;
        log << "    unitarity iff gcd fails: n=" << n << " g=" << g << '\n';
      }
    }
  return ok;
}

bool sequence_layer(std::ostream& log) {
  bool ok = true;
  for (const auto& p : presets::defaults()) {
    auto h = terms(p.params, 0, 66);
    Rational running;
    for (std::size_t n = 0; n <= 64; ++n) {
      ok = ok && h[n + 2] == p.params.fk() * h[n + 1] + p.params.gk() * h[n];
      auto b = binet(p.params, n);
      if (auto* r = std::get_if<Rational>(&b)) ok = ok && *r == h[n];
      else ok = ok && std::abs(std::get<double>(b) - h[n].to_double()) <= 1e-9 * std::abs(h[n].to_double());
      if (n >= 1) {
        running += h[n];
        ok = ok && sum_closed(p.params, n) == running;
      }
    }
    if (!ok) {
      log << "    sequence layer fails for " << p.name << '\n';
      return false;
    }
  }
  return ok;
}

struct Captured {
  int status;
  std::string out;
};

Captured run_binary(const std::string& args) {
  std::string cmd = std::string(HCIRC_CLI_PATH) + " " + args + " 2>/dev/null";
  Captured c{-1, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return c;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) c.out.append(buf.data(), got);
  int raw = pclose(pipe);
  c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return c;
}

bool verify_command(std::ostream& log) {
  auto first = run_binary("verify --output json");
  auto second = run_binary("verify --output json");
  auto j = Json::parse(first.out, nullptr, false);
  if (j.is_discarded()) {
    log << "    verify output is not valid JSON\n";
    return false;
  }
  log << "    exit " << first.status << ", summary " << j["summary"].dump() << ", "
      << (first.out == second.out ? "byte-identical" : "outputs differ") << " across two runs\n";
  return first.status == 0 && j["summary"]["fail"] == 0 && first.out == second.out;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "determinant closed form equals Bareiss oracle", 10, determinant},
      {2, "corrected closed-form inverse equals Gauss-Jordan oracle", 60, inverse},
      {3, "printed h_n disagrees with the true normalization", 1, hn_audit},
      {4, "spectral norm closed form vs power iteration and named-sequence forms", 10, spectral_norm},
      {5, "factorization A = Q_g C and unitarity of Q_g iff gcd(n,g)=1", 5, structure_identities},
      {6, "recurrence, Binet and partial-sum agreement for n <= 64", 1, sequence_layer},
      {7, "verify command exits 0 and is deterministic", 60, verify_command},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::ostringstream log;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.body(log);
    } catch (const std::exception& e) {
      log << "    exception: " << e.what() << '\n';
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = secs <= c.budget_seconds;
    bool pass = ok && in_budget;
    failures += pass ? 0 : 1;
    std::printf("[%s] criterion %d: %s (%.3fs, budget %.0fs%s)\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                secs, c.budget_seconds, in_budget ? "" : ", OVER BUDGET");
    std::cout << log.str();
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
