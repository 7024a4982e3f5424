#include <gtest/gtest.h>

#include <string>
#include <tuple>

#include "qaw/report.hpp"
#include "qaw/suites.hpp"

namespace {

nlohmann::ordered_json strip_timing(nlohmann::ordered_json doc) {
  for (auto& r : doc["reports"]) r.erase("elapsed_ms");
  return doc;
}

}  // namespace

TEST(Report, PassAndFail) {
  const auto p = qaw::sample_point(1, qaw::Profile::general);
  const auto ok = qaw::run_check("x.ok", "anchor", p, [] { return std::string(); });
  const auto bad = qaw::run_check("x.bad", "anchor", p, [] { return std::string("nonzero"); });
  const auto thrown = qaw::run_check("x.throw", "anchor", p, []() -> std::string { throw qaw::DegenerateError("boom"); });
  EXPECT_TRUE(ok.passed());
  EXPECT_FALSE(bad.passed());
  EXPECT_FALSE(thrown.passed());
  EXPECT_EQ(thrown.residual_summary, "error: boom");
  EXPECT_EQ(ok.seed, 1);
  EXPECT_EQ(ok.point_digest, qaw::digest(p));
}

TEST(Report, DocumentSchema) {
  const auto reports = qaw::run_suite(qaw::Suite::uqsl2, {1, 2});
  const auto doc = qaw::report_document({{"command", "verify"}}, reports);
  EXPECT_EQ(doc["tool_version"], qaw::kToolVersion);
  EXPECT_EQ(doc["summary"]["total"], reports.size());
  EXPECT_EQ(doc["summary"]["failed"], 0);
  const auto& first = doc["reports"][0];
  for (const char* key : {"check_name", "paper_anchor", "seed", "point_digest", "status", "residual_summary", "elapsed_ms"})
    EXPECT_TRUE(first.contains(key)) << key;
  EXPECT_EQ(first["status"], "pass");
}

TEST(Report, DeterministicModuloTiming) {
  const auto a = qaw::report_document({}, qaw::run_suite(qaw::Suite::tridiag, {3, 1}));
  const auto b = qaw::report_document({}, qaw::run_suite(qaw::Suite::tridiag, {3, 1}));
  EXPECT_EQ(strip_timing(a).dump(), strip_timing(b).dump());
}

TEST(Report, OrderedByCheckThenSeed) {
  const auto reports = qaw::run_suite(qaw::Suite::tridiag, {2, 1});
  for (std::size_t i = 1; i < reports.size(); ++i)
    EXPECT_LE(std::tie(reports[i - 1].check_name, reports[i - 1].seed), std::tie(reports[i].check_name, reports[i].seed));
}

TEST(Report, SuiteNames) {
  EXPECT_EQ(qaw::parse_suite("tridiag"), qaw::Suite::tridiag);
  EXPECT_EQ(qaw::to_string(qaw::Suite::all), "all");
  EXPECT_THROW(qaw::parse_suite("nope"), std::invalid_argument);
}

TEST(Report, PolyJson) {
  qaw::LaurentPoly f;
  f.add_term(0, 1);
  f.add_term(1, qaw::make_rational(-3839, 3760));
  const auto j = qaw::to_json(f);
  EXPECT_EQ(j.dump(), R"([{"power":0,"coeff":"1"},{"power":1,"coeff":"-3839/3760"}])");
}
