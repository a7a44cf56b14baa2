#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "senseclust/cograph.hpp"
#include "senseclust/graph.hpp"
#include "senseclust/text.hpp"

namespace senseclust {

struct SerpDocument {
  int rank = 1;
  std::string title;
  std::string snippet;
  /// Content lemmas of title + snippet, without stopwords or the query.
  std::vector<Lemma> lemmas;
};

/// One search engine results page for a single-lemma query.
struct Serp {
  Lemma query;
  std::vector<SerpDocument> documents;
};

/// Lowercases the query and every document lemma, then removes stopwords and
/// the query lemma from the documents. Throws FormatError for an empty or
/// multi-word query, an invalid lemma, or a non-positive/duplicate rank.
void normalize_serp(Serp& serp, const LemmaSet& stopwords = {});

/// Thresholds for pulling strong corpus neighbors of the query into G_q and
/// for linking G_q vertices.
struct StrongLinkParams {
  double min_cond_prob = 0.01;   ///< c(q,w) / c(q)
  double min_dice_query = 0.005; ///< Dice(q,w)
  double min_dice_edge = 0.005;  ///< Dice(w,w') for G_q edges

  /// Throws Error unless every threshold lies in (0, 1).
  void validate() const;
};

enum class Origin { serp, corpus };

std::string_view to_string(Origin origin) noexcept;

struct QueryVertex {
  Lemma lemma;
  Origin origin = Origin::serp;
  std::uint64_t corpus_freq = 0;

  friend bool operator==(const QueryVertex&, const QueryVertex&) = default;
};

/// Per-query graph G_q. Vertex ids follow lexicographic lemma order; edge
/// weights are corpus Dice values. The query lemma is never a vertex.
class QueryGraph {
 public:
  QueryGraph() = default;
  /// Edges index into `vertices` as given; vertices are re-sorted by lemma.
  QueryGraph(Lemma query, std::vector<QueryVertex> vertices, std::vector<WeightedEdge> edges);

  const Lemma& query() const noexcept { return query_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return graph_.edge_count(); }
  bool empty() const noexcept { return vertices_.empty(); }

  const QueryVertex& vertex(VertexId v) const { return vertices_.at(v); }
  const Lemma& lemma(VertexId v) const { return vertices_.at(v).lemma; }
  std::span<const QueryVertex> vertices() const noexcept { return vertices_; }
  std::optional<VertexId> find(std::string_view lemma) const;

  const WeightedGraph& graph() const noexcept { return graph_; }
  std::span<const Neighbor> neighbors(VertexId v) const { return graph_.neighbors(v); }
  std::size_t degree(VertexId v) const { return graph_.degree(v); }

  /// Dice of the edge between two lemmas, 0 when absent.
  double weight(std::string_view a, std::string_view b) const;

  friend bool operator==(const QueryGraph&, const QueryGraph&) = default;

 private:
  Lemma query_;
  std::vector<QueryVertex> vertices_;
  WeightedGraph graph_;
};

/// Corpus neighbors w of `query` with c(q,w)/c(q) >= min_cond_prob and
/// Dice(q,w) >= min_dice_query. Empty when the query is not in the graph.
LemmaSet strong_neighbors(const CoGraph& graph, std::string_view query, const StrongLinkParams& params);

/// Candidates are all SERP lemmas plus the strong neighbors of the query;
/// candidate pairs linked in the corpus with Dice >= min_dice_edge become
/// edges, and isolated candidates are dropped.
/// Throws EmptyQueryGraphError when no edge survives.
QueryGraph build_query_graph(const CoGraph& graph, const Serp& serp, const StrongLinkParams& params);

}  // namespace senseclust
