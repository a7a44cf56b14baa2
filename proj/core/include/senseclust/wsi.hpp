#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "senseclust/graph.hpp"
#include "senseclust/querygraph.hpp"
#include "senseclust/text.hpp"

namespace senseclust {

enum class Algorithm { curvature, hyperlex };

std::string_view to_string(Algorithm algorithm) noexcept;
/// Throws Error for anything other than "curvature" or "hyperlex".
Algorithm parse_algorithm(std::string_view name);

struct SenseCluster {
  int id = 0;
  std::vector<Lemma> lemmas;  ///< sorted, non-empty
  std::optional<Lemma> hub;   ///< Hyperlex root
  std::optional<std::string> label;  ///< human-assigned; never set by the algorithms

  friend bool operator==(const SenseCluster&, const SenseCluster&) = default;
};

/// Disjoint sense clusters ordered by descending size, ties broken by the
/// lexicographically smallest member; ids follow that order.
struct SenseInventory {
  Lemma query;
  Algorithm algorithm = Algorithm::curvature;
  std::vector<std::pair<std::string, double>> parameters;
  std::vector<SenseCluster> clusters;

  friend bool operator==(const SenseInventory&, const SenseInventory&) = default;
};

/// Sorts clusters into inventory order and assigns ids. Hubs are carried
/// along with their clusters.
void order_clusters(std::vector<SenseCluster>& clusters);

struct CurvatureParams {
  /// Vertices with 0 < coefficient < min_coefficient are deleted.
  double min_coefficient = 0.3;

  void validate() const;
};

struct CurvaturePartition {
  std::vector<double> coefficients;  ///< per query graph vertex
  std::vector<bool> low_coefficient; ///< deleted by the threshold rule
  std::vector<bool> survived;        ///< present in the final clusters
  SenseInventory inventory;
};

/// Deletes low-but-nonzero coefficient vertices, then vertices left without
/// neighbors; the remaining connected components are the senses.
/// Throws EmptyInventoryError when nothing survives.
CurvaturePartition curvature_partition(const QueryGraph& gq, const CurvatureParams& params);
SenseInventory curvature_induce(const QueryGraph& gq, const CurvatureParams& params);

struct HyperlexParams {
  double min_norm_degree = 0.05;
  double min_avg_dice = 0.007;
  std::size_t min_hubs = 2;
  /// Remove one-lemma clusters from the result.
  bool drop_singletons = false;
  /// Keep trees of the spanning forest that contain no hub (components of
  /// G_q unreachable from every hub) as hubless clusters.
  bool keep_hubless_components = false;

  void validate() const;
};

/// degree / (|V| - 1); 0 for graphs with fewer than two vertices.
double normalized_degree(const QueryGraph& gq, VertexId v);
/// Mean Dice over incident edges; 0 for an isolated vertex.
double average_dice(const QueryGraph& gq, VertexId v);

/// Walks vertices by descending corpus frequency (ties: lemma order). A
/// vertex passing both thresholds becomes a hub and it and its neighbors
/// leave the candidate list. A failing vertex ends the walk once at least
/// `min_hubs` hubs exist; before that it is skipped. Thresholds are always
/// evaluated on the full query graph.
std::vector<Lemma> select_hubs(const QueryGraph& gq, const HyperlexParams& params);

struct ForestEdge {
  Lemma a;
  Lemma b;
  double weight = 0.0;

  friend bool operator==(const ForestEdge&, const ForestEdge&) = default;
};

struct HyperlexPartition {
  std::vector<Lemma> hubs;
  double hub_edge_weight = 0.0;    ///< weight placed on every query-hub edge
  std::vector<ForestEdge> forest;  ///< spanning forest of the augmented graph
  SenseInventory inventory;
};

/// Attaches `query` to every hub with a weight above all Dice values, takes
/// the maximum spanning forest and cuts it at the query vertex; each hub's
/// subtree is one sense. Throws NoHubsError when no hub qualifies.
HyperlexPartition hyperlex_partition(const QueryGraph& gq, std::string_view query, const HyperlexParams& params);
SenseInventory hyperlex_induce(const QueryGraph& gq, std::string_view query, const HyperlexParams& params);

}  // namespace senseclust
