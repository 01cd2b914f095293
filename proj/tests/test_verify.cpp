#include <gtest/gtest.h>

#include "cfcolor/exact.hpp"
#include "cfcolor/generators.hpp"
#include "cfcolor/verify.hpp"
#include "oracles.hpp"

using namespace cfcolor;

namespace {

VertexColoring vc(std::vector<Color> c) { return VertexColoring{std::move(c)}; }

}  // namespace

TEST(VerifyVertex, OddCycleWithTwoColors) {
  auto c5 = cycle_graph(5);
  auto r = verify_vertex_cf(c5, vc({1, 1, 2, 1, 2}));
  EXPECT_TRUE(r.ok);
  EXPECT_TRUE(r.violators.empty());
  EXPECT_EQ(r.witnesses.size(), 5u);
}

TEST(VerifyVertex, MonochromaticCycleFailsEverywhere) {
  auto r = verify_vertex_cf(cycle_graph(5), vc({1, 1, 1, 1, 1}));
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.violators, (std::vector<std::int64_t>{0, 1, 2, 3, 4}));
}

TEST(VerifyVertex, TriangleWithOneOddColor) {
  auto r = verify_vertex_cf(cycle_graph(3), vc({1, 2, 2}));
  EXPECT_TRUE(r.ok);
  for (auto [v, w] : r.witnesses) EXPECT_EQ(w, 1);
}

TEST(VerifyVertex, IsolatedVertexIsAlwaysServed) {
  auto g = build_graph(3, {{0, 1}});
  auto r = verify_vertex_cf(g, vc({5, 6, 7}));
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.witnesses.at(2), 7);
}

TEST(VerifyVertex, SizeMismatchIsInputError) {
  EXPECT_THROW(verify_vertex_cf(cycle_graph(3), vc({1, 2})), InputError);
}

TEST(VerifyVertex, WitnessIsSmallestUniqueColor) {
  // N[0] = {0,1,2,3}: colors 4,3,3,9 -> unique colors {4,9}, witness 4
  auto g = star_graph(3);
  auto r = verify_vertex_cf(g, vc({4, 3, 3, 9}));
  EXPECT_EQ(r.witnesses.at(0), 4);
}

TEST(VerifyVertex, AgreesWithNaiveOracle) {
  Rng rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = gnp(9, 0.35, rng);
    std::uniform_int_distribution<Color> c(0, 2);
    VertexColoring col;
    for (int v = 0; v < 9; ++v) col.color.push_back(c(rng));
    auto r = verify_vertex_cf(g, col);
    auto pairs = oracle::pairs_of(g);
    EXPECT_EQ(r.ok, oracle::vertex_cf(9, pairs, col.color));
    for (auto v : r.violators) EXPECT_FALSE(oracle::vertex_ok(9, pairs, col.color, static_cast<int>(v)));
  }
}

TEST(VerifyVertex, ProperColoringIsConflictFree) {
  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = gnp(20, 0.3, rng);
    auto col = greedy_proper_vertex_coloring(g);
    ASSERT_TRUE(is_proper_vertex_coloring(g, col));
    EXPECT_TRUE(verify_vertex_cf(g, col).ok);
  }
}

TEST(VerifyEdge, PathWithAlternatingColors) {
  auto p3 = path_graph(3);
  EXPECT_TRUE(verify_edge_cf(p3, EdgeColoring::total({1, 2})).ok);
  auto r = verify_edge_cf(p3, EdgeColoring::total({1, 1}));
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.violators, (std::vector<std::int64_t>{0, 1}));
}

TEST(VerifyEdge, TriangleOneOddEdge) {
  auto tri = cycle_graph(3);
  auto f = EdgeColoring::total({1, 1, 2});
  EXPECT_TRUE(verify_edge_cf(tri, f).ok);
  for (EdgeId e = 0; e < 3; ++e) EXPECT_EQ(satisfied_with(tri, f, e), (std::vector<Color>{2}));
}

TEST(VerifyEdge, PartialColoringRejected) {
  auto tri = cycle_graph(3);
  EdgeColoring f(3);
  f.set(0, 1);
  EXPECT_THROW(verify_edge_cf(tri, f), InputError);
  EXPECT_THROW(verify_edge_cf(tri, EdgeColoring::total({1, 2})), InputError);
}

TEST(SatisfiedWith, UncoloredEdgesAreInvisible) {
  auto p4 = path_graph(4);  // edges 01, 12, 23
  EdgeColoring f(3);
  f.set(0, 7);
  EXPECT_EQ(satisfied_with(p4, f, 1), (std::vector<Color>{7}));
  EXPECT_TRUE(satisfied_with(p4, f, 2).empty());
  f.set(2, 7);
  EXPECT_TRUE(satisfied_with(p4, f, 1).empty());
  EXPECT_EQ(satisfied_with(p4, f, 0), (std::vector<Color>{7}));
  EXPECT_THROW(satisfied_with(p4, f, 3), InputError);
}

TEST(SatisfiedEdges, AgreesWithNaiveOracleOnPartialColorings) {
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    auto h = gnp(8, 0.4, rng);
    std::uniform_int_distribution<Color> c(0, 3);  // 3 means uncolored
    EdgeColoring f(h.edge_count());
    std::vector<std::optional<std::int64_t>> raw;
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
      Color x = c(rng);
      if (x < 3) f.set(static_cast<EdgeId>(e), x);
      raw.push_back(x < 3 ? std::optional<std::int64_t>(x) : std::nullopt);
    }
    auto sat = satisfied_edges(h, f);
    auto pairs = oracle::pairs_of(h);
    for (std::size_t e = 0; e < h.edge_count(); ++e)
      EXPECT_EQ(sat.contains(static_cast<EdgeId>(e)), oracle::edge_satisfied(pairs, raw, e));
  }
}

TEST(VerifyEdge, ProperEdgeColoringIsConflictFree) {
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    auto h = gnp(20, 0.3, rng);
    auto f = greedy_proper_edge_coloring(h);
    ASSERT_TRUE(is_proper_edge_coloring(h, f));
    EXPECT_TRUE(verify_edge_cf(h, f).ok);
  }
}

TEST(VerifyEdge, EquivalentToVertexCheckOnLineGraph) {
  // Exhaustive over all graphs on 5 vertices with up to 3 colors on a
  // sample of colorings per graph.
  Rng rng(53);
  for (const auto& pairs : oracle::all_graphs(5)) {
    auto h = oracle::to_graph(5, pairs);
    auto lg = line_graph(h);
    std::uniform_int_distribution<Color> c(0, 2);
    for (int s = 0; s < 5; ++s) {
      std::vector<Color> raw;
      for (std::size_t e = 0; e < h.edge_count(); ++e) raw.push_back(c(rng));
      auto f = EdgeColoring::total(raw);
      auto edge_report = verify_edge_cf(h, f);
      auto vertex_report = verify_vertex_cf(lg.graph, transport_to_line_graph(lg, f));
      EXPECT_EQ(edge_report.ok, vertex_report.ok);
      EXPECT_EQ(edge_report.violators, vertex_report.violators);
    }
  }
}
