#include <gtest/gtest.h>

#include "bring/verify.hpp"

using bring::CheckStatus;
using bring::VerifyConfig;

namespace {

const bring::VerificationReport& default_report() {
  static const auto rep = bring::run_verify_all(VerifyConfig{});
  return rep;
}

}  // namespace

TEST(Verify, DefaultPassesWithEnoughChecks) {
  const auto& rep = default_report();
  EXPECT_TRUE(rep.passed()) << rep.summary();
  EXPECT_GE(rep.checks.size(), 12u);
}

TEST(Verify, ChecksSortedAndAnchored) {
  const auto& rep = default_report();
  for (std::size_t i = 1; i < rep.checks.size(); ++i) EXPECT_LT(rep.checks[i - 1].name, rep.checks[i].name);
  for (const auto& c : rep.checks) {
    EXPECT_FALSE(c.anchor.empty()) << c.name;
    EXPECT_FALSE(c.expected.empty()) << c.name;
  }
}

TEST(Verify, InfoChecksPresent) {
  const auto& rep = default_report();
  std::set<std::string> info;
  for (const auto& c : rep.checks)
    if (c.status == CheckStatus::Info) info.insert(c.name);
  EXPECT_TRUE(info.count("identify.D_iso_J_mirror_needed"));
  EXPECT_TRUE(info.count("monodromy.quartic_form"));
}

TEST(Verify, JsonSchema) {
  const auto j = default_report().to_json();
  for (const char* key : {"version", "config", "checks", "status"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["version"], bring::kVersion);
  for (const auto& c : j["checks"]) {
    for (const char* key : {"name", "status", "observed", "expected", "anchor"}) EXPECT_TRUE(c.contains(key)) << key;
    const auto s = c["status"].get<std::string>();
    EXPECT_TRUE(s == "pass" || s == "fail" || s == "info");
  }
  EXPECT_EQ(j["config"]["track"]["steps"], 256);
  EXPECT_EQ(nlohmann::json::parse(j.dump()), j);
}

TEST(Verify, StableAcrossRuns) {
  const auto again = bring::run_verify_all(VerifyConfig{});
  EXPECT_EQ(again.to_json(), default_report().to_json());
}

TEST(Verify, OnlyCells) {
  VerifyConfig cfg;
  cfg.only = {"cells"};
  const auto rep = bring::run_verify_all(cfg);
  ASSERT_FALSE(rep.checks.empty());
  for (const auto& c : rep.checks) EXPECT_EQ(c.name.rfind("cells.", 0), 0u) << c.name;
  EXPECT_TRUE(rep.passed());
}

TEST(Verify, CoarseStepsFailMonodromy) {
  VerifyConfig cfg;
  cfg.only = {"monodromy"};
  cfg.track.steps = 4;
  const auto rep = bring::run_verify_all(cfg);
  EXPECT_FALSE(rep.passed());
  bool failed_mono = false;
  for (const auto& c : rep.checks)
    if (c.status == CheckStatus::Fail && c.name.rfind("monodromy.", 0) == 0) failed_mono = true;
  EXPECT_TRUE(failed_mono);
  EXPECT_EQ(rep.to_json()["status"], "fail");
}

TEST(Verify, InfoDoesNotGate) {
  bring::VerificationReport rep;
  rep.checks.push_back({"a", CheckStatus::Pass, "", "", "x"});
  rep.checks.push_back({"b", CheckStatus::Info, "", "", "x"});
  EXPECT_TRUE(rep.passed());
  rep.checks.push_back({"c", CheckStatus::Fail, "", "", "x"});
  EXPECT_FALSE(rep.passed());
}

TEST(Config, JsonOverrides) {
  bring::TrackConfig t;
  bring::apply_json(t, {{"steps", 128}, {"base_t", {0.4, 0.1}}, {"radius0", 0.2}, {"tol_lambda", 1e-7}});
  EXPECT_EQ(t.steps, 128u);
  EXPECT_EQ(t.base_t, bring::cplx(0.4, 0.1));
  EXPECT_EQ(t.radius0, 0.2);
  EXPECT_EQ(t.tol_lambda, 1e-7);
  bring::apply_json(t, {{"base_t", 0.3}});
  EXPECT_EQ(t.base_t, bring::cplx(0.3, 0));
  EXPECT_THROW(bring::apply_json(t, {{"bogus", 1}}), std::invalid_argument);
  const auto j = bring::to_json(t);
  bring::TrackConfig back;
  bring::apply_json(back, j);
  EXPECT_EQ(bring::to_json(back), j);
}

TEST(Export, CoverSummary) {
  const auto j = bring::cover_summary(
      bring::orientation_cover(bring::surface_from_complex5(bring::build_complex5())));
  EXPECT_EQ(j, (nlohmann::json{{"faces", 24}, {"edges", 60}, {"vertices", 30},
                               {"components", 1}, {"orientable", true}, {"genus", 4}}));
}

TEST(Export, CellsJson) {
  const auto j = bring::to_json(bring::enumerate_cells(5, 1));
  ASSERT_EQ(j.size(), 30u);
  EXPECT_EQ(j[0]["n"], 5);
  EXPECT_EQ(j[0]["dimension"], 1);
  EXPECT_EQ(j[0]["diags"].size(), 1u);
  EXPECT_EQ(j[0]["text"].get<std::string>().rfind("n=5; labels=(", 0), 0u);
}

TEST(Export, MonodromyJson) {
  const auto j = bring::to_json(bring::monodromy_triple(bring::TrackConfig{}));
  EXPECT_EQ(j["pi_inf"], "(0 2)");
  EXPECT_TRUE(j["loops"]["1"].contains("lambda"));
}

namespace {
std::size_t count_lines_with(const std::string& s, const std::string& needle) {
  std::size_t n = 0, pos = 0;
  while ((pos = s.find(needle, pos)) != std::string::npos) ++n, ++pos;
  return n;
}
}  // namespace

TEST(Export, DotCounts) {
  const auto i4 = bring::to_dot(bring::build_i4(), "I4");
  EXPECT_EQ(count_lines_with(i4, "fillcolor=black"), 12u);
  EXPECT_EQ(count_lines_with(i4, "fillcolor=white"), 30u);
  EXPECT_EQ(count_lines_with(i4, " -- "), 60u);
  const auto d = bring::to_dot(bring::build_D(), "D");
  EXPECT_EQ(count_lines_with(d, "fillcolor="), 90u);
  EXPECT_EQ(count_lines_with(d, " -- "), 120u);
  EXPECT_EQ(d, bring::to_dot(bring::build_D(), "D"));
}
