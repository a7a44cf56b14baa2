#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "senseclust/graph.hpp"

namespace senseclust {

/// Unweighted Watts-Strogatz coefficient: links among the neighbors of `v`
/// divided by deg(v)(deg(v)-1)/2. Vertices of degree < 2 get 0.
/// Throws LookupError for an unknown vertex.
double local_clustering_coefficient(const WeightedGraph& graph, VertexId v);

/// The coefficient of every vertex, in vertex order.
std::vector<double> local_clustering_coefficients(const WeightedGraph& graph);

/// Maximal connected vertex sets. Members are sorted ascending; sets are
/// ordered by descending size, ties by smallest member.
std::vector<std::vector<VertexId>> connected_components(const WeightedGraph& graph);

/// Kruskal maximum-weight spanning forest. Equal weights are resolved in
/// favour of the smaller (u, v) pair, so callers whose vertex ids follow
/// lemma order get lexicographic tie-breaking. Returns ascending edge ids.
std::vector<EdgeId> maximum_spanning_forest(const WeightedGraph& graph);

double total_weight(const WeightedGraph& graph, const std::vector<EdgeId>& edges);

struct PathLengthSummary {
  double mean = 0.0;             ///< over ordered reachable pairs (s, t), s != t
  std::uint64_t pair_count = 0;
  std::size_t source_count = 0;
  bool exact = true;
};

/// Mean BFS hop distance over connected pairs. With `sample` set (and smaller
/// than the vertex count) only that many distinct sources, drawn with `seed`,
/// are expanded. Sources are split over `threads` workers; the result does
/// not depend on the thread count.
PathLengthSummary average_path_length(const WeightedGraph& graph,
                                      std::optional<std::size_t> sample = std::nullopt,
                                      std::uint64_t seed = 0, unsigned threads = 1);

}  // namespace senseclust
