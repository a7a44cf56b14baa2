#include "senseclust/graph_algorithms.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "senseclust/error.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace senseclust {
namespace {

// a=0 b=1 c=2 ...
WeightedGraph triangle() { return WeightedGraph(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}}); }

TEST(WeightedGraphTest, RejectsSelfLoopsAndParallelEdges) {
  EXPECT_THROW(WeightedGraph(2, {{1, 1, 1.0}}), Error);
  EXPECT_THROW(WeightedGraph(2, {{0, 1, 1.0}, {1, 0, 2.0}}), Error);
  EXPECT_THROW(WeightedGraph(2, {{0, 2, 1.0}}), LookupError);
}

TEST(WeightedGraphTest, InducedSubgraph) {
  const WeightedGraph g(4, {{0, 1, 1.0}, {1, 2, 2.0}, {2, 3, 3.0}});
  const std::vector<VertexId> kept = {1, 2, 3};
  const auto sub = g.induced_subgraph(kept);
  EXPECT_EQ(sub.vertex_count(), 3u);
  ASSERT_EQ(sub.edge_count(), 2u);
  EXPECT_EQ(sub.edges()[0], (WeightedEdge{0, 1, 2.0}));
}

TEST(ClusteringCoefficientTest, Triangle) {
  for (VertexId v = 0; v < 3; ++v) EXPECT_DOUBLE_EQ(local_clustering_coefficient(triangle(), v), 1.0);
}

TEST(ClusteringCoefficientTest, StarCenter) {
  const WeightedGraph star(4, {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}});
  EXPECT_DOUBLE_EQ(local_clustering_coefficient(star, 0), 0.0);
  EXPECT_DOUBLE_EQ(local_clustering_coefficient(star, 1), 0.0);  // degree 1
}

TEST(ClusteringCoefficientTest, OneOfThree) {
  // v=0 with neighbors x=1 y=2 z=3, only x-y linked.
  const WeightedGraph g(4, {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}, {1, 2, 1.0}});
  EXPECT_DOUBLE_EQ(local_clustering_coefficient(g, 0), 1.0 / 3.0);
}

TEST(ClusteringCoefficientTest, UnknownVertex) {
  EXPECT_THROW(local_clustering_coefficient(triangle(), 7), LookupError);
}

TEST(ClusteringCoefficientProperty, MatchesDefinition) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + testing::draw(rng, 12);
    const WeightedGraph g(n, testing::random_edges(rng, n, testing::unit(rng), false));
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const auto& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
    const auto all = local_clustering_coefficients(g);
    for (VertexId v = 0; v < n; ++v) {
      const double expected = testing::definition_clustering(adj, v);
      EXPECT_NEAR(all[v], expected, 1e-12);
      EXPECT_NEAR(local_clustering_coefficient(g, v), expected, 1e-12);
    }
  }
}

TEST(ConnectedComponentsTest, TwoPairs) {
  const WeightedGraph g(4, {{0, 1, 1.0}, {2, 3, 1.0}});
  EXPECT_EQ(connected_components(g), (std::vector<std::vector<VertexId>>{{0, 1}, {2, 3}}));
}

TEST(ConnectedComponentsTest, Empty) { EXPECT_TRUE(connected_components(WeightedGraph()).empty()); }

TEST(ConnectedComponentsTest, TrianglePlusIsolated) {
  // isolated vertex first in id order, still sorted after the triangle
  const WeightedGraph g(4, {{1, 2, 1.0}, {2, 3, 1.0}, {1, 3, 1.0}});
  EXPECT_EQ(connected_components(g), (std::vector<std::vector<VertexId>>{{1, 2, 3}, {0}}));
}

TEST(MaximumSpanningForestTest, Triangle) {
  const WeightedGraph g(3, {{0, 1, 3.0}, {1, 2, 2.0}, {0, 2, 1.0}});
  const auto forest = maximum_spanning_forest(g);
  const auto sub = g.edge_subgraph(forest);
  EXPECT_TRUE(sub.has_edge(0, 1));
  EXPECT_TRUE(sub.has_edge(1, 2));
  EXPECT_DOUBLE_EQ(total_weight(g, forest), 5.0);
}

TEST(MaximumSpanningForestTest, TreeIsReturnedWhole) {
  const WeightedGraph g(4, {{0, 1, 0.1}, {1, 2, 0.2}, {1, 3, 0.3}});
  EXPECT_EQ(maximum_spanning_forest(g).size(), 3u);
}

TEST(MaximumSpanningForestTest, OneTreePerComponent) {
  const WeightedGraph g(5, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}, {3, 4, 1.0}});
  const auto forest = maximum_spanning_forest(g);
  EXPECT_EQ(forest.size(), 3u);
  EXPECT_EQ(connected_components(g.edge_subgraph(forest)).size(), 2u);
}

TEST(MaximumSpanningForestTest, TiesPreferSmallerPair) {
  // All weights equal: (0,1) and (0,2) beat (1,2).
  const auto forest = maximum_spanning_forest(triangle());
  const auto sub = triangle().edge_subgraph(forest);
  EXPECT_TRUE(sub.has_edge(0, 1));
  EXPECT_TRUE(sub.has_edge(0, 2));
  EXPECT_FALSE(sub.has_edge(1, 2));
}

TEST(MaximumSpanningForestProperty, ScaleInvariantEdgeSet) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + testing::draw(rng, 9);
    auto edges = testing::random_edges(rng, n, 0.5, true);
    const WeightedGraph g(n, edges);
    const double factor = 0.001 + 1000.0 * testing::unit(rng);
    for (auto& e : edges) e.weight *= factor;
    EXPECT_EQ(maximum_spanning_forest(g), maximum_spanning_forest(WeightedGraph(n, edges)));
  }
}

TEST(MaximumSpanningForestProperty, MatchesBruteForceWeight) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + testing::draw(rng, 6);
    const WeightedGraph g(n, testing::random_edges(rng, n, testing::unit(rng), true));
    std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
    std::vector<std::vector<double>> weight(n, std::vector<double>(n, 0.0));
    for (const auto& e : g.edges()) {
      present[e.u][e.v] = present[e.v][e.u] = true;
      weight[e.u][e.v] = weight[e.v][e.u] = e.weight;
    }
    const auto forest = maximum_spanning_forest(g);
    EXPECT_EQ(forest.size(), n - 1);
    EXPECT_NEAR(total_weight(g, forest), testing::brute_force_max_spanning_weight(present, weight), 1e-9);
  }
}

TEST(PathLengthTest, PathGraph) {
  const WeightedGraph g(3, {{0, 1, 1.0}, {1, 2, 1.0}});
  const auto summary = average_path_length(g);
  EXPECT_DOUBLE_EQ(summary.mean, 4.0 / 3.0);
  EXPECT_TRUE(summary.exact);
  EXPECT_EQ(summary.pair_count, 6u);
}

TEST(PathLengthTest, DisconnectedPairsIgnored) {
  const WeightedGraph g(4, {{0, 1, 1.0}, {2, 3, 1.0}});
  EXPECT_DOUBLE_EQ(average_path_length(g).mean, 1.0);
}

TEST(PathLengthTest, SamplingIsThreadIndependent) {
  std::mt19937 rng(9);
  const WeightedGraph g(300, testing::random_edges(rng, 300, 0.02, true));
  const auto one = average_path_length(g, 40, 1234, 1);
  const auto four = average_path_length(g, 40, 1234, 4);
  EXPECT_FALSE(one.exact);
  EXPECT_EQ(one.source_count, 40u);
  EXPECT_EQ(one.mean, four.mean);
  EXPECT_EQ(one.pair_count, four.pair_count);
  EXPECT_EQ(average_path_length(g, std::nullopt, 0, 1).mean, average_path_length(g, std::nullopt, 0, 3).mean);
}

TEST(BruteForceOracleTest, Sanity) {
  // Triangle 3/2/1 has maximum tree weight 5.
  std::vector<std::vector<bool>> present(3, std::vector<bool>(3, true));
  std::vector<std::vector<double>> w = {{0, 3, 1}, {3, 0, 2}, {1, 2, 0}};
  EXPECT_DOUBLE_EQ(testing::brute_force_max_spanning_weight(present, w), 5.0);
}

}  // namespace
}  // namespace senseclust
