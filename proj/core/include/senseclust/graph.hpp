#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace senseclust {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct WeightedEdge {
  VertexId u = 0;
  VertexId v = 0;
  double weight = 0.0;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

struct Neighbor {
  VertexId vertex = 0;
  EdgeId edge = 0;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

/// Immutable undirected weighted graph in compressed adjacency form.
///
/// Edges are stored with u < v, sorted by (u, v); each adjacency list is
/// sorted by neighbor id. Self-loops and parallel edges are rejected.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  WeightedGraph(std::size_t vertex_count, std::vector<WeightedEdge> edges);

  std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const Neighbor> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  std::span<const WeightedEdge> edges() const noexcept { return edges_; }
  const WeightedEdge& edge(EdgeId e) const { return edges_.at(e); }

  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;
  bool has_edge(VertexId a, VertexId b) const { return find_edge(a, b).has_value(); }

  /// Subgraph on `kept` (strictly increasing ids); vertex i of the result is
  /// kept[i]. Only edges with both endpoints kept survive.
  WeightedGraph induced_subgraph(std::span<const VertexId> kept) const;

  /// Same vertex set, restricted to the listed edges.
  WeightedGraph edge_subgraph(std::span<const EdgeId> selected) const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  std::vector<WeightedEdge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
};

}  // namespace senseclust
