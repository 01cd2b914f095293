#include <gtest/gtest.h>

#include <sstream>

#include "cfcolor/bench.hpp"

using namespace cfcolor;

namespace {

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(Bench, EmptySuiteGivesHeaderOnly) {
  auto csv = to_csv(run_suite(json{{"seed", 3}, {"runs", json::array()}}));
  EXPECT_EQ(csv, std::string(bench_csv_header()) + "\n");
}

TEST(Bench, ExpandsListsAndReplicates) {
  json suite = json::parse(R"({"seed": 9, "runs": [
    {"generator": "gnp", "n": [20, 30], "p": [0.1, 0.2], "replicates": 2, "algorithm": "line-cf"}]})");
  std::uint64_t seed = 0;
  auto entries = expand_suite(suite, seed);
  EXPECT_EQ(seed, 9u);
  EXPECT_EQ(entries.size(), 8u);
  EXPECT_THROW(expand_suite(json::parse(R"({"runs":[{"generator":"tree","n":3,"algorithm":"exact"}]})"), seed),
               InputError);
}

TEST(Bench, ExactIndexOnCliquesIsNondecreasing) {
  json suite = json::parse(R"({"seed": 1, "runs": [
    {"generator": "complete", "n": [4, 5, 6], "algorithm": "exact", "mode": "edge"}]})");
  auto records = run_suite(suite);
  ASSERT_EQ(records.size(), 3u);
  for (std::size_t i = 0; i < records.size(); ++i) {
    EXPECT_TRUE(records[i].verified);
    EXPECT_EQ(records[i].algorithm, "exact-index");
    if (i) { EXPECT_GE(records[i].colors_used, records[i - 1].colors_used); }
  }
  EXPECT_EQ(records[0].colors_used, 3u);
  EXPECT_EQ(records[1].colors_used, 3u);
}

TEST(Bench, MixedSuiteVerifiesAndIsDeterministic) {
  json suite = json::parse(R"({"seed": 42, "runs": [
    {"generator": "gnp", "n": 80, "p": [0.2, 0.4], "algorithm": "line-cf"},
    {"generator": "regular", "n": 100, "d": 20, "algorithm": "near-regular"},
    {"generator": "pseudoforest", "n": 40, "algorithm": "pseudoforest", "replicates": 3},
    {"generator": "gnp", "n": 12, "p": 0.3, "line_graph": true, "algorithm": "exact", "mode": "vertex",
     "params": {"node_budget": 100000}}]})");
  std::vector<std::string> errors;
  auto a = run_suite(suite, &errors);
  auto b = run_suite(suite);
  ASSERT_EQ(a.size(), 7u);
  for (const auto& r : a) EXPECT_TRUE(r.verified) << r.algorithm;
  EXPECT_EQ(to_csv(a, false), to_csv(b, false));
  EXPECT_EQ(a[6].generator, "gnp-line");
  auto rows = lines(to_csv(a, false));
  EXPECT_EQ(rows.front(), bench_csv_header());
  // records + one summary line per algorithm
  EXPECT_EQ(rows.size(), 1 + 7 + 4u);
  EXPECT_EQ(rows[1].back(), ',');  // empty wall_time column
}

TEST(Bench, FailingRunIsRecordedAndSuiteContinues) {
  json suite = json::parse(R"({"seed": 1, "runs": [
    {"generator": "complete", "n": 5, "algorithm": "pseudoforest"},
    {"generator": "complete", "n": 3, "algorithm": "pseudoforest"}]})");
  std::vector<std::string> errors;
  auto r = run_suite(suite, &errors);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_FALSE(r[0].verified);
  EXPECT_TRUE(r[1].verified);
  ASSERT_EQ(errors.size(), 1u);
  EXPECT_NE(errors[0].find("record 0"), std::string::npos);
}

TEST(Bench, SlopeIsLeastSquares) {
  std::vector<BenchRecord> recs;
  for (std::size_t d : {10u, 100u, 1000u}) {
    BenchRecord r;
    r.algorithm = "x";
    r.delta = d;
    r.verified = true;
    r.colors_used = static_cast<std::size_t>(2.0 * std::log(static_cast<double>(d)) + 0.5) ;
    recs.push_back(r);
  }
  auto s = slope_by_algorithm(recs);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_TRUE(s[0].defined);
  EXPECT_NEAR(s[0].slope, 2.0, 0.3);
  recs.resize(1);
  EXPECT_FALSE(slope_by_algorithm(recs)[0].defined);
}

TEST(RunAlgorithm, RejectsUnknownNames) {
  EXPECT_THROW(parse_algorithm("dsatur"), InputError);
  EXPECT_EQ(algorithm_name(Algorithm::exact, ColoringMode::vertex), "exact-number");
}
