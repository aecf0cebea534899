#include "hcirc/serialize.hpp"
#include "hcirc/verify.hpp"

#include <gtest/gtest.h>

#include <map>

namespace hcirc {
namespace {

VerifyCase make_case(Preset p, std::size_t n, std::size_t g, std::set<Check> checks) {
  return {std::move(p), n, g, std::move(checks)};
}

TEST(RunCase, DetPasses) {
  auto out = run_case(make_case(presets::fibonacci(), 3, 2, {Check::det}));
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].status, Status::pass);
  EXPECT_EQ(std::get<Rational>(out[0].closed_value), -4);
  EXPECT_EQ(std::get<Rational>(out[0].oracle_value), -4);
}

TEST(RunCase, DetSkippedOutsideCoprimeWithZeroDiagnostic) {
  auto out = run_case(make_case(presets::fibonacci(), 4, 2, {Check::det}));
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].status, Status::skipped);
  EXPECT_EQ(out[0].reason, reason::gcd_not_one);
  EXPECT_EQ(std::get<Rational>(out[0].oracle_value), 0);
}

TEST(RunCase, InversePasses) {
  auto out = run_case(make_case(presets::jacobsthal(), 5, 2, {Check::inverse}));
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].status, Status::pass);
}

TEST(RunCase, InverseSkipReasons) {
  EXPECT_EQ(run_case(make_case(presets::fibonacci(), 2, 1, {Check::inverse}))[0].reason, reason::small_n);
  EXPECT_EQ(run_case(make_case(presets::fibonacci(), 4, 2, {Check::inverse}))[0].reason, reason::gcd_not_one);
  VerifyOptions opts;
  opts.inverse_cap = 4;
  EXPECT_EQ(run_case(make_case(presets::fibonacci(), 5, 1, {Check::inverse}), opts)[0].reason, reason::inverse_cap);
  EXPECT_EQ(run_case(make_case({"z", HoradamParams(1, 1, 1, 0)}, 4, 1, {Check::inverse}))[0].reason,
            reason::first_term_zero);
  EXPECT_EQ(run_case(make_case({"s", HoradamParams(-3, -1, -3, 1)}, 3, 1, {Check::inverse}))[0].reason,
            reason::singular);
}

TEST(RunCase, NormAndSumSkips) {
  Preset half{"half", HoradamParams(Rational::parse("1/2"), Rational::parse("1/2"), 1, 3)};
  auto out = run_case(make_case(half, 4, 1, {Check::sum, Check::norm}));
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].check, Check::norm);
  EXPECT_EQ(out[0].reason, reason::sum_denominator_zero);
  EXPECT_EQ(out[1].check, Check::sum);
  EXPECT_EQ(out[1].status, Status::skipped);
  EXPECT_EQ(out[1].reason, reason::sum_denominator_zero);
  EXPECT_EQ(std::get<Rational>(out[1].oracle_value), Rational::parse("39/4"));  // 3+2+5/2+9/4

  auto neg = run_case(make_case({"neg", HoradamParams(1, 1, -5, 1)}, 5, 1, {Check::norm}));
  EXPECT_EQ(neg[0].reason, reason::negative_entries);
}

TEST(RunCase, UnitarityAndFactorization) {
  for (std::size_t g = 0; g < 6; ++g) {
    auto out = run_case(make_case(presets::pell(), 6, g, {Check::factorization, Check::unitarity}));
    ASSERT_EQ(out.size(), 2u);
    EXPECT_EQ(out[0].status, Status::pass);
    EXPECT_EQ(out[1].status, Status::pass);
    EXPECT_EQ(std::get<bool>(out[1].oracle_value), std::gcd(std::size_t{6}, g) == 1);
  }
}

TEST(RunCase, NormCheckReportsError) {
  auto out = run_case(make_case(presets::horadam(3, 2, 1, 4), 7, 3, {Check::norm}));
  ASSERT_EQ(out[0].status, Status::pass);
  ASSERT_TRUE(out[0].abs_error.has_value());
  EXPECT_LE(*out[0].abs_error, 1e-8 * std::get<Rational>(out[0].closed_value).to_double());
}

TEST(RunSuite, EnumerationOrderAndCount) {
  auto rep = run_suite({presets::fibonacci()}, 3, {Check::factorization});
  ASSERT_EQ(rep.cases.size(), 6u);
  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (const auto& c : rep.cases) order.emplace_back(c.n, c.g);
  EXPECT_EQ(order, (std::vector<std::pair<std::size_t, std::size_t>>{{1, 0}, {2, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2}}));
  EXPECT_EQ(rep.failed, 0u);
  EXPECT_EQ(rep.passed + rep.skipped, 6u);
}

TEST(RunSuite, EveryRequestedCheckAppearsOnce) {
  std::set<Check> all(all_checks.begin(), all_checks.end());
  auto rep = run_suite(presets::defaults(), 5, all);
  std::map<std::tuple<std::string, std::size_t, std::size_t, Check>, int> seen;
  for (const auto& c : rep.cases) ++seen[{c.preset, c.n, c.g, c.outcome.check}];
  EXPECT_EQ(seen.size(), 5u * 15u * all.size());
  for (const auto& [k, count] : seen) EXPECT_EQ(count, 1);
}

TEST(RunSuite, CustomHalfHalfSumSkipped) {
  Preset half{"half", HoradamParams(Rational::parse("1/2"), Rational::parse("1/2"), 1, 3)};
  auto rep = run_suite({half}, 4, {Check::sum});
  EXPECT_EQ(rep.skipped, 10u);
  for (const auto& c : rep.cases) EXPECT_EQ(c.outcome.reason, reason::sum_denominator_zero);
}

TEST(RunSuite, DefaultGridHasNoFailuresAndIsDeterministic) {
  std::set<Check> all(all_checks.begin(), all_checks.end());
  auto a = run_suite(presets::defaults(), 8, all);
  EXPECT_EQ(a.failed, 0u);
  auto b = run_suite(presets::defaults(), 8, all);
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
}

TEST(RunSuite, RejectsZeroNMax) { EXPECT_THROW(run_suite(presets::defaults(), 0, {Check::det}), std::invalid_argument); }

TEST(HnDiagnostic, PrintedFormulaDisagrees) {
  auto f3 = hn_diagnostic(presets::fibonacci().params, 3);
  EXPECT_EQ(f3.printed_h, -1);
  EXPECT_EQ(f3.corrected_h, -2);
  EXPECT_EQ(f3.ratio, Rational::parse("1/2"));
  EXPECT_FALSE(f3.consistent());

  auto f4 = hn_diagnostic(presets::fibonacci().params, 4);
  EXPECT_EQ(f4.printed_h, Rational::parse("-3/16"));
  EXPECT_EQ(f4.corrected_h, Rational::parse("-35/16"));
  EXPECT_EQ(f4.ratio, Rational::parse("3/35"));
}

TEST(HnDiagnostic, ConsistentCaseReportsRatioOne) {
  // gk = 0 makes the sequence geometric, so H(2)·H(n)/H(1) = H(n+1) and the
  // two normalizations coincide.
  auto d = hn_diagnostic(HoradamParams(2, 0, 1, 1), 4);
  EXPECT_TRUE(d.consistent());
  EXPECT_EQ(d.ratio, 1);
}

TEST(Serialize, ReportShape) {
  auto rep = run_suite({presets::fibonacci()}, 2, {Check::det, Check::norm});
  auto j = to_json(rep);
  EXPECT_EQ(j["summary"]["pass"].get<std::size_t>() + j["summary"]["fail"].get<std::size_t>() +
                j["summary"]["skip"].get<std::size_t>(),
            j["cases"].size());
  const auto& first = j["cases"][0];
  EXPECT_EQ(first["preset"], "fibonacci");
  EXPECT_EQ(first["check"], "det");
  EXPECT_EQ(first["closed_value"], "1");
}

TEST(Serialize, MatrixRoundTrip) {
  auto m = inv_gcirc_closed(presets::fibonacci().params, 4, 3);
  auto j = to_json(m);
  EXPECT_EQ(j["rows"], 4);
  EXPECT_EQ(j["data"][0][0].get<std::string>(), m(0, 0).to_string());
  EXPECT_EQ(matrix_from_json(Json::parse(j.dump())), m);
}

}  // namespace
}  // namespace hcirc
