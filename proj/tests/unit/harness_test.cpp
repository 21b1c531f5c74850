#include <gtest/gtest.h>

#include "autobva/harness.hpp"

namespace autobva {
namespace {

OracleConfig window(std::int64_t from, std::int64_t to) {
  OracleConfig c;
  c.from = from;
  c.to = to;
  c.fixed = {SutValue::integer(std::int64_t{0})};
  return c;
}

std::vector<std::pair<std::string, std::string>> pairs(const std::vector<BoundaryCandidate>& cs) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& c : cs) out.emplace_back(render_tuple(c.i1), render_tuple(c.i2));
  return out;
}

TEST(Oracle, SmallBytecountWindow) {
  const auto found = oracle_scan(builtin_sut("bytecount"), window(0, 2000));
  const std::vector<std::pair<std::string, std::string>> expected = {
      {"9", "10"}, {"99", "100"}, {"999", "1000"}};
  EXPECT_EQ(pairs(found), expected);
}

TEST(Oracle, KiloToHundredKilo) {
  const auto found = pairs(oracle_scan(builtin_sut("bytecount"), window(99000, 100000)));
  EXPECT_NE(std::find(found.begin(), found.end(), std::pair<std::string, std::string>{"99949", "99950"}),
            found.end());
  for (const auto& [a, b] : found) EXPECT_EQ(std::stoll(b), std::stoll(a) + 1);
}

TEST(Oracle, EmptyAndReversedWindows) {
  EXPECT_TRUE(oracle_scan(builtin_sut("bytecount"), window(5, 5)).empty());
  EXPECT_THROW(oracle_scan(builtin_sut("bytecount"), window(6, 5)), ConfigError);
}

TEST(Oracle, RefusesHugeWindows) {
  auto c = window(0, 0);
  c.to = BigInt(100'000'000);
  EXPECT_THROW(oracle_scan(builtin_sut("bytecount"), c), ConfigError);
}

TEST(Oracle, ArgumentChecks) {
  auto c = window(0, 10);
  c.argument = 1;
  EXPECT_THROW(oracle_scan(builtin_sut("bytecount"), c), ConfigError);
  EXPECT_THROW(oracle_scan(builtin_sut("date"), window(0, 10)), ConfigError);
}

TEST(Oracle, DateMonthScan) {
  OracleConfig c;
  c.from = 0;
  c.to = 14;
  c.argument = 1;
  c.fixed = {SutValue::integer(std::int64_t{2021}), SutValue::integer(std::int64_t{0}),
             SutValue::integer(std::int64_t{1})};
  const auto found = pairs(oracle_scan(builtin_sut("date"), c));
  // Errors at month 0 and 13 have different lengths from valid dates.
  ASSERT_FALSE(found.empty());
  EXPECT_EQ(found.front().first, "(2021,0,1)");
}

TEST(RunSeed, DistinctPerSlotAndRepetition) {
  EXPECT_EQ(run_seed(1, 0, 0), run_seed(1, 0, 0));
  EXPECT_NE(run_seed(1, 0, 0), run_seed(1, 0, 1));
  EXPECT_NE(run_seed(1, 0, 0), run_seed(1, 1, 0));
  EXPECT_NE(run_seed(1, 0, 0), run_seed(2, 0, 0));
}

TEST(Merge, KeepsFirstAndUnionsLabels) {
  const auto a = oracle_scan(builtin_sut("bytecount"), window(0, 200));
  const auto b = oracle_scan(builtin_sut("bytecount"), window(50, 2000));
  std::vector<BoundaryCandidate> merged;
  std::vector<std::vector<std::string>> labels;
  merge_candidates(merged, labels, a, "lns");
  merge_candidates(merged, labels, b, "bcs");
  ASSERT_EQ(merged.size(), 3u);
  EXPECT_EQ(labels[0], std::vector<std::string>{"lns"});
  EXPECT_EQ(labels[1], (std::vector<std::string>{"lns", "bcs"}));
  EXPECT_EQ(labels[2], std::vector<std::string>{"bcs"});
}

TEST(Experiment, StatsAreConsistent) {
  ExperimentConfig config;
  config.repetitions = 3;
  config.detection.budget = Budget::iterations(200);
  config.summary.restarts = 5;
  config.jobs = 2;
  const auto r = run_experiment(builtin_sut("bytecount"), config);
  ASSERT_EQ(r.strategies.size(), 2u);
  std::size_t union_bound = 0;
  for (const auto& s : r.strategies) {
    EXPECT_EQ(s.found.size(), 3u);
    EXPECT_LE(s.unique, s.union_size);
    EXPECT_LE(s.clusters_covered, r.clusters_total);
    union_bound += s.union_size;
  }
  EXPECT_LE(r.union_total, union_bound);
  EXPECT_EQ(r.merged.size(), r.union_total);
  EXPECT_EQ(r.clusters_total, r.report.cluster_count());

  config.jobs = 1;
  const auto again = run_experiment(builtin_sut("bytecount"), config);
  EXPECT_EQ(again.merged.size(), r.merged.size());
  for (std::size_t i = 0; i < r.strategies.size(); ++i) {
    EXPECT_EQ(again.strategies[i].found, r.strategies[i].found);
  }
  EXPECT_NE(experiment_markdown(r, "bytecount").find("| bcs |"), std::string::npos);
}

}  // namespace
}  // namespace autobva
