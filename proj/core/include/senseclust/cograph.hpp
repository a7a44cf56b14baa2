#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "senseclust/corpus.hpp"
#include "senseclust/graph.hpp"
#include "senseclust/text.hpp"

namespace senseclust {

/// 2 c(w,w') / (c(w) + c(w')). Zero when the pair never co-occurs.
double dice_coefficient(std::uint64_t pair_count, std::uint64_t freq_a, std::uint64_t freq_b) noexcept;

struct CoEdgeCount {
  VertexId u = 0;
  VertexId v = 0;
  std::uint64_t cooc_count = 0;
};

/// Corpus-wide co-occurrence graph.
///
/// Vertex ids follow lexicographic (byte-wise) lemma order, so two graphs
/// over the same data have identical layouts. Edge weights in `topology()`
/// are Dice values; co-occurrence counts are kept alongside by edge id.
///
/// Adjacency-event counting allows Dice above 1 when a lemma is flanked by
/// the same partner on both sides (`a b a`); otherwise 0 < dice <= 1.
class CoGraph {
 public:
  CoGraph() = default;

  /// `vertices` in any order (unique lemmas, freq >= 1); edges index into
  /// `vertices` as given. Throws on integrity violations.
  static CoGraph from_counts(std::vector<std::pair<Lemma, std::uint64_t>> vertices,
                             std::vector<CoEdgeCount> edges);

  std::size_t vertex_count() const noexcept { return lemmas_.size(); }
  std::size_t edge_count() const noexcept { return topology_.edge_count(); }
  bool empty() const noexcept { return lemmas_.empty(); }

  const Lemma& lemma(VertexId v) const { return lemmas_.at(v); }
  std::uint64_t frequency(VertexId v) const { return freqs_.at(v); }
  std::uint64_t frequency(std::string_view lemma) const;
  std::optional<VertexId> find(std::string_view lemma) const;

  std::uint64_t cooc_count(EdgeId e) const { return counts_.at(e); }
  double dice(EdgeId e) const { return topology_.edge(e).weight; }
  std::uint64_t cooc_count(std::string_view a, std::string_view b) const;

  std::span<const Neighbor> neighbors(VertexId v) const { return topology_.neighbors(v); }
  const WeightedGraph& topology() const noexcept { return topology_; }

  friend bool operator==(const CoGraph&, const CoGraph&) = default;

 private:
  std::vector<Lemma> lemmas_;
  std::vector<std::uint64_t> freqs_;
  std::vector<std::uint64_t> counts_;
  WeightedGraph topology_;
};

/// Dice of the stored edge, 0 when absent. Symmetric.
double dice(const CoGraph& graph, std::string_view a, std::string_view b);

/// Unordered adjacency counts keyed by packed (min id, max id) corpus ids.
using PairCounts = std::unordered_map<std::uint64_t, std::uint64_t>;

/// Counts adjacent distinct-lemma pairs over sentences [first, last).
PairCounts count_adjacent_pairs(const Corpus& corpus, std::size_t first, std::size_t last);

/// Adds `from` into `into`. Associative and commutative.
void merge_pair_counts(PairCounts& into, const PairCounts& from);

CoGraph graph_from_pair_counts(const Corpus& corpus, const PairCounts& counts);

/// Vertices are the corpus lemmas with c(w); edges link lemmas adjacent at
/// least once inside a sentence. Sentences are sharded over `threads`
/// workers; the result is identical for every thread count.
/// Throws EmptyInputError for an empty corpus.
CoGraph build_cooccurrence_graph(const Corpus& corpus, unsigned threads = 1);

struct GraphStats {
  std::size_t n_vertices = 0;
  std::size_t n_edges = 0;
  double avg_degree = 0.0;
  double avg_path_length = 0.0;
  double clustering_coefficient = 0.0;
  bool path_length_exact = true;
  std::optional<std::size_t> path_sample;
  std::uint64_t sample_seed = 0;
};

struct PathSampling {
  std::size_t sources = 0;
  std::uint64_t seed = 0;
};

/// Throws EmptyInputError for a graph with no vertices.
GraphStats graph_stats(const WeightedGraph& graph, std::optional<PathSampling> sampling = std::nullopt,
                       unsigned threads = 1);
GraphStats graph_stats(const CoGraph& graph, std::optional<PathSampling> sampling = std::nullopt,
                       unsigned threads = 1);

struct SmallWorldThresholds {
  double path_factor = 2.0;        ///< |L| within [baseline / f, baseline * f]
  double clustering_factor = 10.0; ///< C >= f * random baseline
};

struct SmallWorldReport {
  double expected_path_length_random = 0.0;  ///< log(N_V) / log(A_D)
  double expected_clustering_random = 0.0;   ///< 2 A_D / N_V
  bool is_small_world = false;
};

/// Throws UndefinedBaselineError when avg_degree <= 1 or n_vertices <= 1.
SmallWorldReport small_world_check(const GraphStats& stats, const SmallWorldThresholds& thresholds = {});

/// Two-section text format:
///   #vertices / lemma<TAB>freq ...
///   #edges    / lemma1<TAB>lemma2<TAB>cooc_count<TAB>dice ... (lemma1 < lemma2)
void save_graph(const CoGraph& graph, std::ostream& sink);

/// Throws FormatError with a line number on malformed or inconsistent input.
CoGraph load_graph(std::istream& source);

}  // namespace senseclust
