#include "mcover/cover.hpp"

#include <gtest/gtest.h>

#include "mcover/oracle.hpp"
#include "mcover/random_graph.hpp"
#include "testing/graphs.hpp"

namespace mcover {
namespace {

using testing::complete_graph;
using testing::make_graph;
using testing::make_matching;
using testing::path_graph;
using Edges = std::vector<Edge>;

TEST(Solve, PathOnFourVerticesIsPerfect) {
  const SolveResult r = solve(path_graph(4));
  EXPECT_EQ(r.branch, CoverBranch::Perfect);
  ASSERT_EQ(r.cover.size(), 1u);
  EXPECT_EQ(r.cover.matchings[0].edges(), (Edges{{0, 1}, {2, 3}}));
}

TEST(Solve, TriangleNeedsTwo) {
  const Graph c3 = complete_graph(3);
  const SolveResult r = solve(c3);
  EXPECT_EQ(r.branch, CoverBranch::FactorCritical);
  EXPECT_EQ(r.cover.size(), 2u);
  EXPECT_TRUE(verify_cover(c3, r.cover));
}

TEST(Solve, StarNeedsOnePerLeaf) {
  const Graph k13 = testing::star_graph(3);
  const SolveResult r = solve(k13);
  EXPECT_EQ(r.branch, CoverBranch::GStar);
  EXPECT_EQ(r.cover.size(), 3u);
  EXPECT_EQ(r.md, 3);
  EXPECT_EQ(r.gstar_vertices, 4);
  EXPECT_TRUE(verify_cover(k13, r.cover));
}

TEST(Solve, PathOnThreeVertices) {
  const SolveResult r = solve(path_graph(3));
  ASSERT_EQ(r.cover.size(), 2u);
  EXPECT_EQ(r.cover.matchings[0].edges(), (Edges{{0, 1}}));
  EXPECT_EQ(r.cover.matchings[1].edges(), (Edges{{1, 2}}));
}

TEST(Solve, NoCoverWithoutEdges) {
  EXPECT_THROW(solve(Graph(1, {})), NoCoverError);
  EXPECT_THROW(solve(Graph(0, {})), NoCoverError);
  EXPECT_THROW(solve(make_graph(3, {{0, 1}})), NoCoverError);
}

TEST(Solve, DisconnectedGraphMergesLevels) {
  // K2 + K_{1,3} (vertices 2..5, center 2) + C3 (6..8).
  const Graph g = make_graph(9, {{0, 1}, {2, 3}, {2, 4}, {2, 5}, {6, 7}, {7, 8}, {6, 8}});
  const SolveResult r = solve(g);
  EXPECT_EQ(r.branch, CoverBranch::Disconnected);
  EXPECT_EQ(r.cover.size(), 3u);
  EXPECT_TRUE(verify_cover(g, r.cover));
  EXPECT_EQ(r.md, 3);
}

TEST(Solve, TraceReportsHostIds) {
  // Two components, so trace events pass through the host id mapping.
  const Graph g = make_graph(9, {{0, 1}, {2, 3}, {2, 4}, {2, 5}, {5, 6}, {5, 7}, {3, 8}, {4, 8}});
  std::vector<TransformEvent> events;
  const SolveResult r = solve(g, [&](const TransformEvent& e) { events.push_back(e); });
  EXPECT_TRUE(verify_cover(g, r.cover));
  EXPECT_EQ(static_cast<int>(events.size()), r.transforms);
  for (const auto& e : events) {
    EXPECT_GE(e.origin, 2);
    EXPECT_GE(e.terminus, 2);
    EXPECT_NE(e.origin, e.terminus);
  }
}

TEST(VerifyCover, Examples) {
  const Graph p3 = path_graph(3);
  MatchingCover good{{make_matching(p3, {{0, 1}}), make_matching(p3, {{1, 2}})}};
  EXPECT_TRUE(verify_cover(p3, good));

  MatchingCover missing{{make_matching(p3, {{0, 1}})}};
  EXPECT_FALSE(verify_cover(p3, missing));

  Matching foreign(3);
  foreign.match(0, 2);
  MatchingCover bad{{make_matching(p3, {{0, 1}}), foreign}};
  EXPECT_FALSE(verify_cover(p3, bad));
}

TEST(BranchName, AllBranches) {
  EXPECT_EQ(branch_name(CoverBranch::Perfect), "perfect");
  EXPECT_EQ(branch_name(CoverBranch::FactorCritical), "factor-critical");
  EXPECT_EQ(branch_name(CoverBranch::GStar), "gstar");
  EXPECT_EQ(branch_name(CoverBranch::Disconnected), "disconnected");
}

TEST(SolveProperty, MatchesBruteForceOnRandomGraphs) {
  Rng rng(41);
  oracle::OracleBudget budget;
  budget.max_edges = 66;
  for (int trial = 0; trial < 500; ++trial) {
    const Vertex n = 2 + static_cast<Vertex>(rng.below(9));
    const double p = 0.15 + 0.15 * (trial % 5);
    const Graph g = random_connected_gnp(n, p, rng);
    const SolveResult r = solve(g);
    const std::string text = serialize_graph(g);
    ASSERT_TRUE(verify_cover(g, r.cover)) << text;
    ASSERT_EQ(static_cast<int>(r.cover.size()), oracle::brute_mc(g, budget)) << text;

    // Size law: 1 if perfect, 2 if factor-critical or md ≤ 2, md otherwise.
    const GallaiEdmonds ge = decompose(g);
    std::size_t expected = 1;
    if (!ge.max_matching.is_perfect()) {
      expected = 2;
      if (!ge.a.empty()) {
        const GStar gs = build_gstar(g, ge);
        expected = std::max(2, oracle::brute_md(gs, budget));
      }
    }
    ASSERT_EQ(r.cover.size(), expected) << text;
  }
}

TEST(SolveProperty, DisconnectedUnionsAreOptimal) {
  Rng rng(43);
  oracle::OracleBudget budget;
  budget.max_edges = 66;
  for (int trial = 0; trial < 150; ++trial) {
    const Graph a = random_connected_gnp(2 + static_cast<Vertex>(rng.below(5)), 0.4, rng);
    const Graph b = random_connected_gnp(2 + static_cast<Vertex>(rng.below(5)), 0.4, rng);
    std::vector<Edge> edges(a.edges().begin(), a.edges().end());
    for (const Edge& e : b.edges()) edges.push_back({e.u + a.num_vertices(), e.v + a.num_vertices()});
    const Graph g(a.num_vertices() + b.num_vertices(), edges);
    const SolveResult r = solve(g);
    ASSERT_TRUE(verify_cover(g, r.cover));
    ASSERT_EQ(static_cast<int>(r.cover.size()), oracle::brute_mc(g, budget)) << serialize_graph(g);
  }
}

}  // namespace
}  // namespace mcover
