#pragma once

// Generalized k-Horadam sequences:
//   H(0) = a, H(1) = b, H(n+2) = fk·H(n+1) + gk·H(n),
// where fk = f(k) and gk = g(k) are already-evaluated scalars.

#include "hcirc/errors.hpp"
#include "hcirc/numeric.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hcirc {

class HoradamParams {
 public:
  /// Throws std::invalid_argument unless fk² + 4·gk > 0.
  HoradamParams(Rational fk, Rational gk, Rational a, Rational b)
      : fk_(std::move(fk)), gk_(std::move(gk)), a_(std::move(a)), b_(std::move(b)) {
    if (discriminant().sign() <= 0)
      throw std::invalid_argument("Horadam parameters need fk^2 + 4*gk > 0, got " +
                                  discriminant().to_string());
  }

  const Rational& fk() const { return fk_; }
  const Rational& gk() const { return gk_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  Rational discriminant() const { return fk_ * fk_ + Rational(4) * gk_; }

  friend bool operator==(const HoradamParams&, const HoradamParams&) = default;

 private:
  Rational fk_, gk_, a_, b_;
};

struct Preset {
  std::string name;
  HoradamParams params;
};

namespace presets {

inline Preset fibonacci() { return {"fibonacci", {1, 1, 0, 1}}; }
inline Preset lucas() { return {"lucas", {1, 1, 2, 1}}; }
inline Preset pell() { return {"pell", {2, 1, 0, 1}}; }
inline Preset jacobsthal() { return {"jacobsthal", {1, 2, 0, 1}}; }

inline Preset k_fibonacci(const Rational& k) {
  return {"k_fibonacci(" + k.to_string() + ")", {k, 1, 0, 1}};
}
inline Preset k_lucas(const Rational& k) {
  return {"k_lucas(" + k.to_string() + ")", {k, 1, 2, k}};
}
inline Preset horadam(const Rational& p, const Rational& q, const Rational& a, const Rational& b) {
  return {"horadam(" + p.to_string() + "," + q.to_string() + "," + a.to_string() + "," +
              b.to_string() + ")",
          {p, q, a, b}};
}

/// fibonacci, lucas, pell, jacobsthal, horadam(3,2,1,4).
inline std::vector<Preset> defaults() {
  return {fibonacci(), lucas(), pell(), jacobsthal(), horadam(3, 2, 1, 4)};
}

/// Accepts "fibonacci", "lucas", "pell", "jacobsthal", "k_fibonacci(K)",
/// "k_lucas(K)" and "horadam(P,Q,A,B)". Throws std::invalid_argument.
inline Preset parse(std::string_view text) {
  if (text == "fibonacci") return fibonacci();
  if (text == "lucas") return lucas();
  if (text == "pell") return pell();
  if (text == "jacobsthal") return jacobsthal();

  auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')')
    throw std::invalid_argument("unknown preset '" + std::string(text) + "'");
  auto head = text.substr(0, open);
  auto body = text.substr(open + 1, text.size() - open - 2);
  std::vector<Rational> args;
  std::size_t start = 0;
  while (true) {
    auto comma = body.find(',', start);
    args.push_back(Rational::parse(body.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (head == "k_fibonacci" && args.size() == 1) return k_fibonacci(args[0]);
  if (head == "k_lucas" && args.size() == 1) return k_lucas(args[0]);
  if (head == "horadam" && args.size() == 4) return horadam(args[0], args[1], args[2], args[3]);
  throw std::invalid_argument("unknown preset '" + std::string(text) + "'");
}

}  // namespace presets

/// H(n) by iterating the recurrence.
inline Rational term(const HoradamParams& p, std::size_t n) {
  if (n == 0) return p.a();
  Rational prev = p.a();
  Rational cur = p.b();
  for (std::size_t i = 1; i < n; ++i) {
    Rational next = p.fk() * cur + p.gk() * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// [H(lo), ..., H(hi)].
inline std::vector<Rational> terms(const HoradamParams& p, std::size_t lo, std::size_t hi) {
  if (lo > hi) throw std::invalid_argument("terms: lo > hi");
  std::vector<Rational> out;
  out.reserve(hi - lo + 1);
  Rational prev = p.a();
  Rational cur = p.b();
  for (std::size_t i = 0; i <= hi; ++i) {
    if (i >= lo) out.push_back(prev);
    Rational next = p.fk() * cur + p.gk() * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return out;
}

/// Roots of x² − fk·x − gk = 0 (r1 > r2) and the Binet weights
/// X = b − a·r2, Y = b − a·r1.
template <class T>
struct BinetRoots {
  T r1, r2, x, y;
};

using BinetData = std::variant<BinetRoots<Rational>, BinetRoots<double>>;

inline BinetData binet_data(const HoradamParams& p) {
  Rational disc = p.discriminant();
  if (auto root = rational_sqrt(disc)) {
    Rational r1 = (p.fk() + *root) / Rational(2);
    Rational r2 = (p.fk() - *root) / Rational(2);
    return BinetRoots<Rational>{r1, r2, p.b() - p.a() * r2, p.b() - p.a() * r1};
  }
  double fk = p.fk().to_double();
  double gk = p.gk().to_double();
  double s = std::sqrt(disc.to_double());
  // Take the root without cancellation, recover the other from r1·r2 = −gk.
  double r1 = 0.0;
  double r2 = 0.0;
  if (fk >= 0) {
    r1 = (fk + s) / 2.0;
    r2 = -gk / r1;
  } else {
    r2 = (fk - s) / 2.0;
    r1 = -gk / r2;
  }
  double a = p.a().to_double();
  double b = p.b().to_double();
  return BinetRoots<double>{r1, r2, b - a * r2, b - a * r1};
}

/// (X·r1ⁿ − Y·r2ⁿ)/(r1 − r2): exact when the roots are rational, a double
/// otherwise.
inline std::variant<Rational, double> binet(const HoradamParams& p, std::size_t n) {
  return std::visit(
      [n](const auto& d) -> std::variant<Rational, double> {
        using T = std::decay_t<decltype(d.r1)>;
        if constexpr (std::is_same_v<T, Rational>) {
          auto e = static_cast<std::int64_t>(n);
          return (d.x * rat_pow(d.r1, e) - d.y * rat_pow(d.r2, e)) / (d.r1 - d.r2);
        } else {
          double e = static_cast<double>(n);
          return (d.x * std::pow(d.r1, e) - d.y * std::pow(d.r2, e)) / (d.r1 - d.r2);
        }
      },
      binet_data(p));
}

/// Σ_{i=1}^{n} H(i) = (H(n+1) + gk·H(n) − H(1) − gk·H(0)) / (fk + gk − 1).
inline Rational sum_closed(const HoradamParams& p, std::size_t n) {
  if (n == 0) throw std::invalid_argument("sum_closed: n must be positive");
  Rational den = p.fk() + p.gk() - Rational(1);
  if (den.is_zero()) throw precondition_error(reason::sum_denominator_zero);
  auto h = terms(p, n, n + 1);
  return (h[1] + p.gk() * h[0] - p.b() - p.gk() * p.a()) / den;
}

}  // namespace hcirc
