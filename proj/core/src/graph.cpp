#include "senseclust/graph.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "senseclust/error.hpp"

namespace senseclust {

WeightedGraph::WeightedGraph(std::size_t vertex_count, std::vector<WeightedEdge> edges)
    : edges_(std::move(edges)), offsets_(vertex_count + 1, 0) {
  if (vertex_count > std::numeric_limits<VertexId>::max() ||
      edges_.size() > std::numeric_limits<EdgeId>::max()) {
    throw Error("graph too large for 32-bit ids");
  }
  for (auto& e : edges_) {
    if (e.u >= vertex_count || e.v >= vertex_count) throw LookupError("edge endpoint out of range");
    if (e.u == e.v) throw Error("self-loop on vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
      throw Error("parallel edge " + std::to_string(edges_[i].u) + "-" + std::to_string(edges_[i].v));
    }
  }

  for (const auto& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
  adjacency_.resize(offsets_.back());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const auto& e = edges_[id];
    adjacency_[cursor[e.u]++] = Neighbor{e.v, id};
    adjacency_[cursor[e.v]++] = Neighbor{e.u, id};
  }
  // Edges are sorted by (u, v), so each list is already ordered except that
  // lower-id neighbors (where this vertex is v) arrive interleaved.
  for (std::size_t v = 0; v < vertex_count; ++v) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]),
              [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
  }
}

std::span<const Neighbor> WeightedGraph::neighbors(VertexId v) const {
  if (v >= vertex_count()) throw LookupError("vertex " + std::to_string(v) + " out of range");
  return std::span<const Neighbor>(adjacency_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

std::optional<EdgeId> WeightedGraph::find_edge(VertexId a, VertexId b) const {
  if (a >= vertex_count() || b >= vertex_count() || a == b) return std::nullopt;
  auto list = neighbors(a);
  if (list.size() > degree(b)) {
    list = neighbors(b);
    std::swap(a, b);
  }
  const auto it = std::lower_bound(list.begin(), list.end(), b,
                                   [](const Neighbor& n, VertexId x) { return n.vertex < x; });
  if (it == list.end() || it->vertex != b) return std::nullopt;
  return it->edge;
}

WeightedGraph WeightedGraph::induced_subgraph(std::span<const VertexId> kept) const {
  constexpr auto absent = std::numeric_limits<VertexId>::max();
  std::vector<VertexId> remap(vertex_count(), absent);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (kept[i] >= vertex_count()) throw LookupError("kept vertex out of range");
    if (i > 0 && kept[i] <= kept[i - 1]) throw Error("kept vertices must be strictly increasing");
    remap[kept[i]] = static_cast<VertexId>(i);
  }
  std::vector<WeightedEdge> edges;
  for (const auto& e : edges_) {
    if (remap[e.u] != absent && remap[e.v] != absent) {
      edges.push_back({remap[e.u], remap[e.v], e.weight});
    }
  }
  return WeightedGraph(kept.size(), std::move(edges));
}

WeightedGraph WeightedGraph::edge_subgraph(std::span<const EdgeId> selected) const {
  std::vector<WeightedEdge> edges;
  edges.reserve(selected.size());
  for (EdgeId id : selected) edges.push_back(edge(id));
  return WeightedGraph(vertex_count(), std::move(edges));
}

}  // namespace senseclust
