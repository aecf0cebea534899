#pragma once

// Exact rational scalars and small numeric helpers.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace hcirc {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision fraction, always held in lowest terms with a
/// positive denominator (zero is 0/1).
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : value_(v) {}           // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& v) : value_(v) {}

  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) value_ = boost::multiprecision::cpp_rational(BigInt(-num), BigInt(-den));
    else value_ = boost::multiprecision::cpp_rational(num, den);
  }

  /// Parses "p" or "p/q" with optional leading sign on p. Throws
  /// std::invalid_argument on anything else.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_ == 0; }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  double to_double() const { return value_.convert_to<double>(); }

  /// "p/q", or just "p" when q = 1.
  std::string to_string() const {
    auto den = denominator();
    if (den == 1) return numerator().str();
    return numerator().str() + "/" + den.str();
  }

  Rational operator-() const { return Rational(Raw{}, -value_); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  struct Raw {};
  Rational(Raw, boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}

  boost::multiprecision::cpp_rational value_{0};
};

namespace detail {

inline BigInt parse_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) throw std::invalid_argument("empty integer");
  std::size_t i = 0;
  bool neg = false;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("missing digits");
  BigInt v = 0;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c < '0' || c > '9') throw std::invalid_argument("bad digit in '" + std::string(s) + "'");
    v = v * 10 + (c - '0');
  }
  return neg ? BigInt(-v) : v;
}

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(detail::parse_integer(text, true));
    BigInt num = detail::parse_integer(text.substr(0, slash), true);
    BigInt den = detail::parse_integer(text.substr(slash + 1), false);
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "': " + e.what());
  }
}

/// Σ coeffs[i]·x^i, constant term first (Horner).
inline Rational eval_poly(std::span<const Rational> coeffs, const Rational& x) {
  if (coeffs.empty()) throw std::invalid_argument("eval_poly: empty coefficient list");
  Rational acc = coeffs.back();
  for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// x^e for any signed e; 0^0 = 1.
inline Rational rat_pow(const Rational& x, std::int64_t e) {
  if (e < 0) {
    if (x.is_zero()) throw std::domain_error("rat_pow: zero to a negative power");
    return Rational(1) / rat_pow(x, -e);
  }
  Rational result(1);
  Rational base = x;
  auto k = static_cast<std::uint64_t>(e);
  while (k != 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k != 0) base *= base;
  }
  return result;
}

/// Exact square root when numerator and denominator are both perfect
/// squares, std::nullopt otherwise.
inline std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x.sign() < 0) throw std::domain_error("rational_sqrt: negative input");
  auto exact_isqrt = [](const BigInt& v) -> std::optional<BigInt> {
    BigInt r = boost::multiprecision::sqrt(v);
    if (r * r != v) return std::nullopt;
    return r;
  };
  auto num = exact_isqrt(x.numerator());
  if (!num) return std::nullopt;
  auto den = exact_isqrt(x.denominator());
  if (!den) return std::nullopt;
  return Rational(*num, *den);
}

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

}  // namespace hcirc
