#include "senseclust/wsi.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "senseclust/error.hpp"
#include "senseclust/graph_algorithms.hpp"

namespace senseclust {

std::string_view to_string(Algorithm algorithm) noexcept {
  return algorithm == Algorithm::curvature ? "curvature" : "hyperlex";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "curvature") return Algorithm::curvature;
  if (name == "hyperlex") return Algorithm::hyperlex;
  throw Error("unknown algorithm '" + std::string(name) + "' (expected curvature or hyperlex)");
}

void order_clusters(std::vector<SenseCluster>& clusters) {
  for (auto& c : clusters) std::sort(c.lemmas.begin(), c.lemmas.end());
  std::sort(clusters.begin(), clusters.end(), [](const SenseCluster& a, const SenseCluster& b) {
    if (a.lemmas.size() != b.lemmas.size()) return a.lemmas.size() > b.lemmas.size();
    return a.lemmas.front() < b.lemmas.front();
  });
  for (std::size_t i = 0; i < clusters.size(); ++i) clusters[i].id = static_cast<int>(i);
}

void CurvatureParams::validate() const {
  if (!(min_coefficient > 0.0 && min_coefficient <= 1.0)) {
    throw Error("curvature min_coefficient must lie in (0, 1]");
  }
}

CurvaturePartition curvature_partition(const QueryGraph& gq, const CurvatureParams& params) {
  params.validate();
  if (gq.empty()) throw EmptyInputError("curvature needs a non-empty query graph");

  CurvaturePartition result;
  const std::size_t n = gq.vertex_count();
  result.coefficients = local_clustering_coefficients(gq.graph());
  result.low_coefficient.assign(n, false);
  result.survived.assign(n, false);

  std::vector<VertexId> kept;
  for (VertexId v = 0; v < n; ++v) {
    const double c = result.coefficients[v];
    if (c > 0.0 && c < params.min_coefficient) {
      result.low_coefficient[v] = true;
    } else {
      kept.push_back(v);
    }
  }
  const WeightedGraph pruned = gq.graph().induced_subgraph(kept);

  std::vector<SenseCluster> clusters;
  for (const auto& component : connected_components(pruned)) {
    if (component.size() < 2) continue;  // left without neighbors
    auto& cluster = clusters.emplace_back();
    for (VertexId local : component) {
      result.survived[kept[local]] = true;
      cluster.lemmas.push_back(gq.lemma(kept[local]));
    }
  }
  if (clusters.empty()) {
    throw EmptyInventoryError("curvature deleted every vertex of the query graph for '" + gq.query() + "'");
  }
  order_clusters(clusters);
  result.inventory = SenseInventory{gq.query(), Algorithm::curvature, {{"min_coefficient", params.min_coefficient}},
                                    std::move(clusters)};
  return result;
}

SenseInventory curvature_induce(const QueryGraph& gq, const CurvatureParams& params) {
  return curvature_partition(gq, params).inventory;
}

void HyperlexParams::validate() const {
  if (!(min_norm_degree >= 0.0 && min_norm_degree <= 1.0)) throw Error("min_norm_degree must lie in [0, 1]");
  if (!(min_avg_dice >= 0.0)) throw Error("min_avg_dice must be non-negative");
}

double normalized_degree(const QueryGraph& gq, VertexId v) {
  if (gq.vertex_count() < 2) return 0.0;
  return static_cast<double>(gq.degree(v)) / static_cast<double>(gq.vertex_count() - 1);
}

double average_dice(const QueryGraph& gq, VertexId v) {
  const auto around = gq.neighbors(v);
  if (around.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& n : around) sum += gq.graph().edge(n.edge).weight;
  return sum / static_cast<double>(around.size());
}

std::vector<Lemma> select_hubs(const QueryGraph& gq, const HyperlexParams& params) {
  params.validate();
  std::vector<VertexId> candidates(gq.vertex_count());
  std::iota(candidates.begin(), candidates.end(), VertexId{0});
  // Ids follow lemma order, so a stable sort on frequency breaks ties by lemma.
  std::stable_sort(candidates.begin(), candidates.end(), [&](VertexId a, VertexId b) {
    return gq.vertex(a).corpus_freq > gq.vertex(b).corpus_freq;
  });

  std::vector<bool> removed(gq.vertex_count(), false);
  std::vector<Lemma> hubs;
  for (VertexId v : candidates) {
    if (removed[v]) continue;
    const bool qualifies =
        normalized_degree(gq, v) >= params.min_norm_degree && average_dice(gq, v) >= params.min_avg_dice;
    if (qualifies) {
      hubs.push_back(gq.lemma(v));
      removed[v] = true;
      for (const auto& n : gq.neighbors(v)) removed[n.vertex] = true;
    } else if (hubs.size() >= params.min_hubs) {
      break;
    }
  }
  return hubs;
}

HyperlexPartition hyperlex_partition(const QueryGraph& gq, std::string_view query, const HyperlexParams& params) {
  if (gq.empty()) throw EmptyInputError("hyperlex needs a non-empty query graph");
  if (gq.find(query)) throw Error("query lemma '" + std::string(query) + "' is already a query graph vertex");

  HyperlexPartition result;
  result.hubs = select_hubs(gq, params);
  if (result.hubs.empty()) {
    throw NoHubsError("no vertex of the query graph for '" + std::string(query) + "' qualifies as a hub");
  }

  // Augmented graph: G_q vertices plus the query, all in lemma order so the
  // spanning forest tie rule stays lexicographic.
  const std::size_t n = gq.vertex_count();
  std::vector<Lemma> lemmas;
  lemmas.reserve(n + 1);
  for (const auto& v : gq.vertices()) lemmas.push_back(v.lemma);
  const auto q_pos = static_cast<VertexId>(std::lower_bound(lemmas.begin(), lemmas.end(), query) - lemmas.begin());
  lemmas.insert(lemmas.begin() + q_pos, Lemma(query));
  auto shifted = [&](VertexId v) { return v >= q_pos ? v + 1 : v; };

  double max_weight = 0.0;
  std::vector<WeightedEdge> edges;
  edges.reserve(gq.edge_count() + result.hubs.size());
  for (const auto& e : gq.graph().edges()) {
    edges.push_back({shifted(e.u), shifted(e.v), e.weight});
    max_weight = std::max(max_weight, e.weight);
  }
  result.hub_edge_weight = max_weight + 1.0;
  std::vector<bool> is_hub(n + 1, false);
  for (const auto& hub : result.hubs) {
    const VertexId h = shifted(*gq.find(hub));
    is_hub[h] = true;
    edges.push_back({q_pos, h, result.hub_edge_weight});
  }
  const WeightedGraph augmented(n + 1, std::move(edges));
  const auto forest_ids = maximum_spanning_forest(augmented);
  const WeightedGraph forest = augmented.edge_subgraph(forest_ids);
  for (const auto& e : forest.edges()) result.forest.push_back({lemmas[e.u], lemmas[e.v], e.weight});

  std::vector<VertexId> without_query;
  for (VertexId v = 0; v < n + 1; ++v) {
    if (v != q_pos) without_query.push_back(v);
  }
  const WeightedGraph cut = forest.induced_subgraph(without_query);

  std::vector<SenseCluster> clusters;
  for (const auto& component : connected_components(cut)) {
    std::optional<Lemma> hub;
    for (VertexId local : component) {
      if (is_hub[without_query[local]]) hub = lemmas[without_query[local]];
    }
    // A lone non-hub vertex became disconnected when the query left.
    if (!hub && component.size() < 2) continue;
    if (!hub && !params.keep_hubless_components) continue;
    if (params.drop_singletons && component.size() < 2) continue;
    auto& cluster = clusters.emplace_back();
    cluster.hub = hub;
    for (VertexId local : component) cluster.lemmas.push_back(lemmas[without_query[local]]);
  }
  order_clusters(clusters);
  result.inventory = SenseInventory{Lemma(query),
                                    Algorithm::hyperlex,
                                    {{"min_norm_degree", params.min_norm_degree},
                                     {"min_avg_dice", params.min_avg_dice},
                                     {"min_hubs", static_cast<double>(params.min_hubs)}},
                                    std::move(clusters)};
  return result;
}

SenseInventory hyperlex_induce(const QueryGraph& gq, std::string_view query, const HyperlexParams& params) {
  return hyperlex_partition(gq, query, params).inventory;
}

}  // namespace senseclust
