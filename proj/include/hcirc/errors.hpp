#pragma once

#include <stdexcept>
#include <string>

namespace hcirc {

/// A closed-form formula was asked to evaluate outside its hypotheses.
/// `reason()` is the short, stable string used as a skip reason in reports.
class precondition_error : public std::domain_error {
 public:
  explicit precondition_error(std::string reason)
      : std::domain_error("precondition failed: " + reason), reason_(std::move(reason)) {}

  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string reason_;
};

class singular_matrix_error : public std::domain_error {
 public:
  explicit singular_matrix_error(const std::string& what = "singular matrix (determinant is 0)")
      : std::domain_error(what) {}
};

/// Floating-point routine failed to converge.
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Skip-reason strings, one per closed-form precondition.
namespace reason {
inline constexpr const char* gcd_not_one = "gcd(n,g)≠1";
inline constexpr const char* sum_denominator_zero = "fk+gk-1=0";
inline constexpr const char* negative_entries = "negative entries";
inline constexpr const char* small_n = "n≤2";
inline constexpr const char* first_term_zero = "H_{k,1}=0";
inline constexpr const char* n_zero = "N=0";
inline constexpr const char* singular = "singular";
inline constexpr const char* inverse_cap = "n>inverse cap";
}  // namespace reason

}  // namespace hcirc
