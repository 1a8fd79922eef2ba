#include "mcover/oracle.hpp"

#include <gtest/gtest.h>

#include "testing/graphs.hpp"

namespace mcover::oracle {
namespace {

using mcover::testing::complete_graph;
using mcover::testing::cycle_graph;
using mcover::testing::path_graph;
using mcover::testing::star_graph;

TEST(BruteNu, Examples) {
  EXPECT_EQ(brute_nu(Graph()), 0);
  EXPECT_EQ(brute_nu(path_graph(2)), 1);
  EXPECT_EQ(brute_nu(path_graph(5)), 2);
  EXPECT_EQ(brute_nu(complete_graph(7)), 3);
  EXPECT_EQ(brute_nu(star_graph(5)), 1);
  EXPECT_EQ(brute_nu(mcover::testing::petersen_graph()), 5);
}

TEST(BruteMc, Examples) {
  EXPECT_EQ(brute_mc(path_graph(2)), 1);
  EXPECT_EQ(brute_mc(path_graph(4)), 1);
  EXPECT_EQ(brute_mc(path_graph(3)), 2);
  EXPECT_EQ(brute_mc(complete_graph(3)), 2);
  EXPECT_EQ(brute_mc(cycle_graph(5)), 2);
  EXPECT_EQ(brute_mc(star_graph(3)), 3);
  EXPECT_EQ(brute_mc(star_graph(6)), 6);
  // Two stars K_{1,3} whose centers are adjacent still need three matchings.
  EXPECT_EQ(brute_mc(mcover::testing::make_graph(
                8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5}, {4, 6}, {4, 7}})),
            3);
}

TEST(BruteMc, RejectsIsolatedVertices) {
  EXPECT_THROW(brute_mc(Graph(1, {})), NoCoverError);
  EXPECT_THROW(brute_mc(mcover::testing::make_graph(3, {{0, 1}})), NoCoverError);
}

TEST(Budget, RefusesLargeInstances) {
  EXPECT_THROW(brute_mc(path_graph(13)), BudgetExceeded);
  OracleBudget tight;
  tight.max_edges = 2;
  EXPECT_THROW(brute_nu(complete_graph(3), tight), BudgetExceeded);
  OracleBudget wide;
  wide.max_vertices = 40;
  wide.max_edges = 100;
  EXPECT_THROW(brute_nu(path_graph(30), wide), BudgetExceeded);  // memo ceiling
}

TEST(BruteMd, Examples) {
  EXPECT_EQ(brute_md(GStar::from_bipartite(1, 3, {{0, 0}, {0, 1}, {0, 2}})), 3);
  EXPECT_EQ(brute_md(GStar::from_bipartite(2, 3, {{0, 0}, {0, 1}, {0, 2}, {1, 2}})), 2);
  EXPECT_EQ(brute_md(GStar::from_bipartite(2, 2, {{0, 0}, {1, 1}})), 1);
  EXPECT_EQ(brute_md(GStar::from_bipartite(2, 0, {})), 0);
}

TEST(BruteDSet, Examples) {
  EXPECT_EQ(brute_d_set(path_graph(3)).members(), (std::vector<Vertex>{0, 2}));
  EXPECT_TRUE(brute_d_set(path_graph(4)).empty());
  EXPECT_EQ(brute_d_set(complete_graph(3)).size(), 3u);
  EXPECT_EQ(brute_d_set(star_graph(3)).members(), (std::vector<Vertex>{1, 2, 3}));
}

}  // namespace
}  // namespace mcover::oracle
