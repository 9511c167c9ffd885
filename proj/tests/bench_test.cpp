#include "balseg/bench.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

namespace balseg::bench {
namespace {

BenchRecord record(std::size_t size, double per_char, Algo algo = Algo::lbsl) {
  BenchRecord r;
  r.size = size;
  r.per_char_s = per_char;
  r.wall_time_s = per_char * static_cast<double>(size);
  r.algo = algo;
  return r;
}

TEST(LinearityTest, EqualPerCharPasses) {
  const auto report =
      check_linearity({record(1'000'000, 1e-8), record(2'000'000, 1e-8), record(4'000'000, 1e-8)});
  EXPECT_DOUBLE_EQ(report.max_ratio, 1.0);
  EXPECT_TRUE(report.pass);
}

TEST(LinearityTest, QuadraticGrowthFails) {
  const auto report = check_linearity(
      {record(1, 1.0), record(2, 2.0), record(4, 4.0), record(8, 8.0)}, 3.0);
  EXPECT_DOUBLE_EQ(report.max_ratio, 8.0);
  EXPECT_FALSE(report.pass);
}

TEST(LinearityTest, SingleRecordTriviallyPasses) {
  const auto report = check_linearity({record(10'000, 3e-9)});
  EXPECT_DOUBLE_EQ(report.max_ratio, 1.0);
  EXPECT_TRUE(report.pass);
}

TEST(LinearityTest, RejectsMixedOrEmptyInput) {
  EXPECT_THROW(check_linearity({}), std::invalid_argument);
  EXPECT_THROW(check_linearity({record(1, 1.0), record(2, 1.0, Algo::lbs)}),
               std::invalid_argument);
  auto other_kind = record(2, 1.0);
  other_kind.kind = gen::Kind::adversarial_deep;
  EXPECT_THROW(check_linearity({record(1, 1.0), other_kind}), std::invalid_argument);
}

TEST(LinearityTest, FailedRecordFailsTheReport) {
  auto bad = record(2, 1.0);
  bad.ok = false;
  bad.error = "out of memory";
  EXPECT_FALSE(check_linearity({record(1, 1.0), bad}).pass);
}

TEST(BenchRunTest, ValidatesConfig) {
  EXPECT_THROW(bench_run({}), std::invalid_argument);
  BenchConfig small;
  small.sizes = {9'999};
  EXPECT_THROW(bench_run(small), std::invalid_argument);
  BenchConfig no_repeats;
  no_repeats.sizes = {10'000};
  no_repeats.repeats = 0;
  EXPECT_THROW(bench_run(no_repeats), std::invalid_argument);
}

TEST(BenchRunTest, SingleSize) {
  BenchConfig config;
  config.sizes = {10'000};
  config.repeats = 3;
  const auto records = bench_run(config);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_TRUE(records[0].ok);
  EXPECT_GT(records[0].wall_time_s, 0.0);
  EXPECT_DOUBLE_EQ(records[0].per_char_s, records[0].wall_time_s / 10'000);
}

TEST(BenchRunTest, RecordsFollowInputOrder) {
  BenchConfig config;
  config.sizes = {40'000, 10'000, 20'000};
  config.algo = Algo::lbs;
  config.kind = gen::Kind::adversarial_deep;
  config.seed = 4;
  const auto records = bench_run(config);
  ASSERT_EQ(records.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(records[i].size, config.sizes[i]);
    EXPECT_EQ(records[i].algo, Algo::lbs);
    EXPECT_EQ(records[i].kind, gen::Kind::adversarial_deep);
    EXPECT_EQ(records[i].seed, 4u);
  }
}

TEST(BenchRunTest, TimeoutMarksRecordFailed) {
  BenchConfig config;
  config.sizes = {10'000};
  config.timeout_s = 0.0;
  const auto records = bench_run(config);
  EXPECT_FALSE(records[0].ok);
  EXPECT_EQ(records[0].error, "timeout");
}

TEST(BenchOutputTest, JsonLineFields) {
  const auto j = nlohmann::json::parse(to_json_line(record(1'000'000, 5e-10)));
  EXPECT_EQ(j["size"], 1'000'000);
  EXPECT_NEAR(j["wall_time_s"].get<double>(), 5e-4, 1e-12);
  EXPECT_NEAR(j["per_char_ns"].get<double>(), 0.5, 1e-9);
  EXPECT_EQ(j["algo"], "lbsl");
  EXPECT_EQ(j["kind"], "uniform");
  EXPECT_TRUE(j.contains("seed"));
}

TEST(BenchOutputTest, TableHasOneColumnPerSize) {
  const std::string table =
      render_table({record(1'000'000, 5e-10), record(2'000'000, 5e-10)});
  EXPECT_NE(table.find("input size (M)"), std::string::npos);
  EXPECT_NE(table.find(" 1 "), std::string::npos);
  EXPECT_NE(table.find(" 2\n"), std::string::npos);
  EXPECT_EQ(std::count(table.begin(), table.end(), '\n'), 3);
}

}  // namespace
}  // namespace balseg::bench
