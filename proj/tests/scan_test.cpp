#include <gtest/gtest.h>

#include <filesystem>

#include "ikmix/errors.hpp"
#include "ikmix/scan.hpp"
#include "test_support.hpp"

namespace ikmix {
namespace {

const std::filesystem::path kScans = std::filesystem::path(IKMIX_DATA_DIR) / "scans";

ScanConfig load(const char* name) {
  return scan_config_from_json(read_json_file(kScans / name));
}

TEST(ScanConfig, RequiresSeedAndRanges) {
  EXPECT_THROW(scan_config_from_json(json::parse(
                   R"({"theorem":"T3.10","samples":3,"ranges":{}})")),
               InvalidInput);
  EXPECT_THROW(scan_config_from_json(json::parse(
                   R"({"theorem":"T3.10","samples":3,"seed":1,"ranges":{}})")),
               InvalidInput);
  EXPECT_THROW(
      scan_config_from_json(json::parse(
          R"({"theorem":"T3.4","samples":3,"seed":1,"ranges":{"p":[0.1,1],
              "alpha":[1,2],"beta":[0.1,0.9],"omega":[0.2,1.5]}})")),
      InvalidInput);
  EXPECT_THROW(
      scan_config_from_json(json::parse(
          R"({"theorem":"T3.1","samples":3,"seed":1,"ranges":{"p":[0,1],
              "p_star":[0.1,1],"alpha":[1,2],"beta":[1,2]}})")),
      InvalidInput);
  EXPECT_THROW(scan_config_from_json(json::parse(
                   R"({"theorem":"T3.6","samples":3,"seed":1,"ranges":{}})")),
               InvalidInput);
}

TEST(Scan, DrawsDependOnlyOnSeedAndIndex) {
  auto cfg = load("t311_ex37.json");
  const auto a = draw_inputs(cfg, 17);
  EXPECT_EQ(a, draw_inputs(cfg, 17));
  EXPECT_NE(a, draw_inputs(cfg, 18));
  cfg.seed += 1;
  EXPECT_NE(a, draw_inputs(cfg, 17));
}

TEST(Scan, ResultsIndependentOfThreadCount) {
  auto cfg = load("t311_ex37.json");
  cfg.samples = 60;
  cfg.threads = 1;
  const auto one = scan_result_to_json(run_scan(cfg), true);
  cfg.threads = 4;
  const auto four = scan_result_to_json(run_scan(cfg), true);
  EXPECT_EQ(one.dump(), four.dump());
}

TEST(Scan, Theorem311AroundItsExampleHasNoAlarms) {
  const auto r = run_scan(load("t311_ex37.json"));
  EXPECT_EQ(r.samples.size(), 500u);
  EXPECT_EQ(r.alarms(), 0u);
  EXPECT_GT(r.count(ScanCategory::kConsistent), 0u);
  EXPECT_EQ(r.count(ScanCategory::kInvalid), 0u);
}

TEST(Scan, CounterexamplePointMass) {
  const auto r = run_scan(load("ce36_point.json"));
  ASSERT_EQ(r.samples.size(), 1u);
  EXPECT_EQ(r.samples[0].category, ScanCategory::kBothFail);
  EXPECT_EQ(r.alarms(), 0u);
}

TEST(Scan, ExamplePointMass) {
  const auto r = run_scan(load("ex31_point.json"));
  ASSERT_EQ(r.samples.size(), 1u);
  EXPECT_EQ(r.samples[0].category, ScanCategory::kConsistent);
  EXPECT_EQ(r.alarms(), 0u);
}

TEST(Scan, JsonListsAlarmsAndCounts) {
  auto cfg = load("t310_wide.json");
  cfg.samples = 40;
  const auto r = run_scan(cfg);
  const auto j = scan_result_to_json(r);
  EXPECT_EQ(j["counts"]["soundness_alarm"], r.alarms());
  EXPECT_EQ(j["seed"], cfg.seed);
}

}  // namespace
}  // namespace ikmix
