#pragma once

// JSON forms of the library's values. Rationals are always strings "p/q"
// (or "p" when q = 1) so no precision is lost.

#include "hcirc/closed_form.hpp"
#include "hcirc/numeric.hpp"
#include "hcirc/structmat.hpp"
#include "hcirc/verify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hcirc {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return r.to_string(); }

inline Json to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(r.to_string());
  return out;
}

/// {"rows": r, "cols": c, "data": [[...], ...]}
inline Json to_json(const Matrix& m) {
  Json data = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (const auto& v : m.row(r)) row.push_back(v.to_string());
    data.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

inline Matrix matrix_from_json(const Json& j) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j.at("data")) {
    auto& out = rows.emplace_back();
    for (const auto& v : row) out.push_back(Rational::parse(v.get<std::string>()));
  }
  auto m = Matrix::from_rows(rows);
  if (m.rows() != j.at("rows").get<std::size_t>() || m.cols() != j.at("cols").get<std::size_t>())
    throw std::invalid_argument("matrix JSON: declared shape does not match data");
  return m;
}

inline Json to_json(const Value& v) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::monostate>) return nullptr;
        else if constexpr (std::is_same_v<T, double> || std::is_same_v<T, bool>) return x;
        else return to_json(x);
      },
      v);
}

inline Json to_json(const std::vector<Precondition>& pre) {
  Json out = Json::array();
  for (const auto& p : pre) out.push_back(Json{{"name", p.name}, {"held", p.held}});
  return out;
}

/// A single computed quantity with the hypotheses that were checked.
struct ClosedFormResult {
  std::string quantity;  ///< "norm" | "det" | "inverse"
  std::string method;    ///< "closed" | "oracle"
  Value value;
  std::vector<Precondition> preconditions;
  std::vector<std::string> notes;
};

inline Json to_json(const ClosedFormResult& r) {
  return Json{{"quantity", r.quantity},
              {"method", r.method},
              {"value", to_json(r.value)},
              {"preconditions", to_json(r.preconditions)},
              {"notes", r.notes}};
}

inline Json to_json(const CaseResult& c) {
  const auto& o = c.outcome;
  Json j{{"preset", c.preset},
         {"n", c.n},
         {"g", c.g},
         {"check", std::string(to_string(o.check))},
         {"status", std::string(to_string(o.status))}};
  if (!o.reason.empty()) j["reason"] = o.reason;
  j["closed_value"] = to_json(o.closed_value);
  j["oracle_value"] = to_json(o.oracle_value);
  if (o.abs_error) j["abs_error"] = *o.abs_error;
  return j;
}

inline Json to_json(const VerifyReport& r) {
  Json cases = Json::array();
  for (const auto& c : r.cases) cases.push_back(to_json(c));
  return Json{{"summary", {{"pass", r.passed}, {"fail", r.failed}, {"skip", r.skipped}}},
              {"cases", std::move(cases)}};
}

inline Json to_json(const HnDiagnostic& d) {
  return Json{{"printed_h", d.printed_h.to_string()},
              {"corrected_h", d.corrected_h.to_string()},
              {"ratio", d.ratio.to_string()},
              {"consistent", d.consistent()}};
}

}  // namespace hcirc
