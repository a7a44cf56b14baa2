#include "senseclust/graph_algorithms.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <thread>
#include <utility>

#include "senseclust/error.hpp"

namespace senseclust {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), VertexId{0});
  }

  VertexId find(VertexId x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

 private:
  std::vector<VertexId> parent_;
  std::vector<std::uint8_t> rank_;
};

double coefficient(std::size_t links, std::size_t degree) {
  if (degree < 2) return 0.0;
  return static_cast<double>(links) / (static_cast<double>(degree) * (degree - 1) / 2.0);
}

struct SourceTotals {
  std::uint64_t distance_sum = 0;
  std::uint64_t reached = 0;
};

SourceTotals bfs_from(const WeightedGraph& graph, VertexId source, std::vector<std::uint32_t>& dist,
                      std::vector<VertexId>& queue) {
  constexpr auto unseen = std::numeric_limits<std::uint32_t>::max();
  SourceTotals totals;
  queue.clear();
  queue.push_back(source);
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId v = queue[head];
    for (const auto& n : graph.neighbors(v)) {
      if (dist[n.vertex] != unseen) continue;
      dist[n.vertex] = dist[v] + 1;
      totals.distance_sum += dist[n.vertex];
      ++totals.reached;
      queue.push_back(n.vertex);
    }
  }
  for (VertexId v : queue) dist[v] = unseen;
  return totals;
}

}  // namespace

double local_clustering_coefficient(const WeightedGraph& graph, VertexId v) {
  const auto around = graph.neighbors(v);
  std::size_t links = 0;
  for (std::size_t i = 0; i < around.size(); ++i) {
    for (std::size_t j = i + 1; j < around.size(); ++j) {
      if (graph.has_edge(around[i].vertex, around[j].vertex)) ++links;
    }
  }
  return coefficient(links, around.size());
}

std::vector<double> local_clustering_coefficients(const WeightedGraph& graph) {
  const std::size_t n = graph.vertex_count();
  std::vector<double> result(n, 0.0);
  constexpr auto unmarked = std::numeric_limits<VertexId>::max();
  std::vector<VertexId> mark(n, unmarked);
  for (VertexId v = 0; v < n; ++v) {
    const auto around = graph.neighbors(v);
    if (around.size() < 2) continue;
    for (const auto& nb : around) mark[nb.vertex] = v;
    std::size_t links = 0;
    for (const auto& nb : around) {
      for (const auto& second : graph.neighbors(nb.vertex)) {
        if (second.vertex > nb.vertex && mark[second.vertex] == v) ++links;
      }
    }
    result[v] = coefficient(links, around.size());
  }
  return result;
}

std::vector<std::vector<VertexId>> connected_components(const WeightedGraph& graph) {
  const std::size_t n = graph.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<VertexId>> components;
  std::vector<VertexId> stack;
  for (VertexId start = 0; start < n; ++start) {
    if (seen[start]) continue;
    auto& component = components.emplace_back();
    seen[start] = true;
    stack.push_back(start);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (const auto& nb : graph.neighbors(v)) {
        if (!seen[nb.vertex]) {
          seen[nb.vertex] = true;
          stack.push_back(nb.vertex);
        }
      }
    }
    std::sort(component.begin(), component.end());
  }
  std::stable_sort(components.begin(), components.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return components;
}

std::vector<EdgeId> maximum_spanning_forest(const WeightedGraph& graph) {
  const auto edges = graph.edges();
  std::vector<EdgeId> order(edges.size());
  std::iota(order.begin(), order.end(), EdgeId{0});
  // Edge ids already follow (u, v) order, so a stable sort on weight alone
  // keeps the tie rule.
  std::stable_sort(order.begin(), order.end(),
                   [&](EdgeId a, EdgeId b) { return edges[a].weight > edges[b].weight; });
  DisjointSets sets(graph.vertex_count());
  std::vector<EdgeId> forest;
  for (EdgeId id : order) {
    if (sets.unite(edges[id].u, edges[id].v)) forest.push_back(id);
  }
  std::sort(forest.begin(), forest.end());
  return forest;
}

double total_weight(const WeightedGraph& graph, const std::vector<EdgeId>& edges) {
  double sum = 0.0;
  for (EdgeId id : edges) sum += graph.edge(id).weight;
  return sum;
}

PathLengthSummary average_path_length(const WeightedGraph& graph, std::optional<std::size_t> sample,
                                      std::uint64_t seed, unsigned threads) {
  const std::size_t n = graph.vertex_count();
  PathLengthSummary summary;
  std::vector<VertexId> sources(n);
  std::iota(sources.begin(), sources.end(), VertexId{0});
  if (sample && *sample < n) {
    std::vector<VertexId> picked;
    picked.reserve(*sample);
    std::mt19937_64 rng(seed);
    std::sample(sources.begin(), sources.end(), std::back_inserter(picked), *sample, rng);
    sources = std::move(picked);
    summary.exact = false;
  }
  summary.source_count = sources.size();

  std::vector<SourceTotals> per_source(sources.size());
  auto work = [&](std::size_t first, std::size_t stride) {
    std::vector<std::uint32_t> dist(n, std::numeric_limits<std::uint32_t>::max());
    std::vector<VertexId> queue;
    queue.reserve(n);
    for (std::size_t i = first; i < sources.size(); i += stride) {
      per_source[i] = bfs_from(graph, sources[i], dist, queue);
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, sources.size()))));
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
  }

  std::uint64_t distance_sum = 0;
  for (const auto& totals : per_source) {
    distance_sum += totals.distance_sum;
    summary.pair_count += totals.reached;
  }
  if (summary.pair_count > 0) {
    summary.mean = static_cast<double>(distance_sum) / static_cast<double>(summary.pair_count);
  }
  return summary;
}

}  // namespace senseclust
