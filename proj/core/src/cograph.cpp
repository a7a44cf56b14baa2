#include "senseclust/cograph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

#include "senseclust/error.hpp"
#include "senseclust/graph_algorithms.hpp"

namespace senseclust {
namespace {

std::uint64_t pack(LemmaId a, LemmaId b) {
  if (a > b) std::swap(a, b);
  return (std::uint64_t{a} << 32) | b;
}

std::pair<LemmaId, LemmaId> unpack(std::uint64_t key) {
  return {static_cast<LemmaId>(key >> 32), static_cast<LemmaId>(key & 0xFFFFFFFFu)};
}

// Relative slack allowed between a stored Dice value and the one recomputed
// from the counts on load.
constexpr double kDiceLoadTolerance = 1e-9;

template <class T>
bool parse_number(std::string_view text, T& out) {
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

bool parse_double(std::string_view text, double& out) {
  // from_chars for double is missing from some standard libraries.
  std::string copy(text);
  char* end = nullptr;
  out = std::strtod(copy.c_str(), &end);
  return !copy.empty() && end == copy.c_str() + copy.size() && std::isfinite(out);
}

std::string format_dice(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

}  // namespace

double dice_coefficient(std::uint64_t pair_count, std::uint64_t freq_a, std::uint64_t freq_b) noexcept {
  if (pair_count == 0 || freq_a + freq_b == 0) return 0.0;
  return 2.0 * static_cast<double>(pair_count) / static_cast<double>(freq_a + freq_b);
}

CoGraph CoGraph::from_counts(std::vector<std::pair<Lemma, std::uint64_t>> vertices,
                             std::vector<CoEdgeCount> edges) {
  std::vector<VertexId> order(vertices.size());
  std::iota(order.begin(), order.end(), VertexId{0});
  std::sort(order.begin(), order.end(),
            [&](VertexId a, VertexId b) { return vertices[a].first < vertices[b].first; });

  CoGraph graph;
  std::vector<VertexId> rank(vertices.size());
  graph.lemmas_.reserve(vertices.size());
  graph.freqs_.reserve(vertices.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto& [lemma, freq] = vertices[order[i]];
    if (!is_valid_lemma(lemma)) throw Error("invalid lemma '" + lemma + "'");
    if (freq == 0) throw Error("vertex '" + lemma + "' has zero frequency");
    if (i > 0 && graph.lemmas_.back() == lemma) throw Error("duplicate vertex '" + lemma + "'");
    rank[order[i]] = static_cast<VertexId>(i);
    graph.lemmas_.push_back(std::move(lemma));
    graph.freqs_.push_back(freq);
  }

  for (auto& e : edges) {
    if (e.u >= rank.size() || e.v >= rank.size()) throw LookupError("edge endpoint out of range");
    if (e.cooc_count == 0) throw Error("edge with zero co-occurrence count");
    e.u = rank[e.u];
    e.v = rank[e.v];
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const CoEdgeCount& a, const CoEdgeCount& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });

  std::vector<WeightedEdge> weighted;
  weighted.reserve(edges.size());
  graph.counts_.reserve(edges.size());
  for (const auto& e : edges) {
    weighted.push_back({e.u, e.v, dice_coefficient(e.cooc_count, graph.freqs_[e.u], graph.freqs_[e.v])});
    graph.counts_.push_back(e.cooc_count);
  }
  graph.topology_ = WeightedGraph(graph.lemmas_.size(), std::move(weighted));
  return graph;
}

std::optional<VertexId> CoGraph::find(std::string_view lemma) const {
  const auto it = std::lower_bound(lemmas_.begin(), lemmas_.end(), lemma);
  if (it == lemmas_.end() || *it != lemma) return std::nullopt;
  return static_cast<VertexId>(it - lemmas_.begin());
}

std::uint64_t CoGraph::frequency(std::string_view lemma) const {
  const auto v = find(lemma);
  return v ? freqs_[*v] : 0;
}

std::uint64_t CoGraph::cooc_count(std::string_view a, std::string_view b) const {
  const auto u = find(a);
  const auto v = find(b);
  if (!u || !v) return 0;
  const auto e = topology_.find_edge(*u, *v);
  return e ? counts_[*e] : 0;
}

double dice(const CoGraph& graph, std::string_view a, std::string_view b) {
  const auto u = graph.find(a);
  const auto v = graph.find(b);
  if (!u || !v) return 0.0;
  const auto e = graph.topology().find_edge(*u, *v);
  return e ? graph.dice(*e) : 0.0;
}

PairCounts count_adjacent_pairs(const Corpus& corpus, std::size_t first, std::size_t last) {
  PairCounts counts;
  last = std::min(last, corpus.sentence_count());
  for (std::size_t s = first; s < last; ++s) {
    const auto tokens = corpus.sentence(s);
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      if (tokens[i - 1] != tokens[i]) ++counts[pack(tokens[i - 1], tokens[i])];
    }
  }
  return counts;
}

void merge_pair_counts(PairCounts& into, const PairCounts& from) {
  for (const auto& [key, count] : from) into[key] += count;
}

CoGraph graph_from_pair_counts(const Corpus& corpus, const PairCounts& counts) {
  std::vector<std::pair<Lemma, std::uint64_t>> vertices;
  vertices.reserve(corpus.vocabulary_size());
  for (LemmaId id = 0; id < corpus.vocabulary_size(); ++id) {
    vertices.emplace_back(corpus.lemma(id), corpus.frequency(id));
  }
  std::vector<CoEdgeCount> edges;
  edges.reserve(counts.size());
  for (const auto& [key, count] : counts) {
    const auto [a, b] = unpack(key);
    edges.push_back({a, b, count});
  }
  return CoGraph::from_counts(std::move(vertices), std::move(edges));
}

CoGraph build_cooccurrence_graph(const Corpus& corpus, unsigned threads) {
  if (corpus.empty()) throw EmptyInputError("cannot build a co-occurrence graph from an empty corpus");
  const std::size_t sentences = corpus.sentence_count();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::size_t>(sentences, 64))));
  if (threads == 1) return graph_from_pair_counts(corpus, count_adjacent_pairs(corpus, 0, sentences));

  std::vector<PairCounts> shards(threads);
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (sentences + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        shards[t] = count_adjacent_pairs(corpus, t * chunk, std::min(sentences, (t + 1) * chunk));
      });
    }
  }
  PairCounts total = std::move(shards.front());
  for (unsigned t = 1; t < threads; ++t) merge_pair_counts(total, shards[t]);
  return graph_from_pair_counts(corpus, total);
}

GraphStats graph_stats(const WeightedGraph& graph, std::optional<PathSampling> sampling, unsigned threads) {
  if (graph.vertex_count() == 0) throw EmptyInputError("graph statistics need at least one vertex");
  GraphStats stats;
  stats.n_vertices = graph.vertex_count();
  stats.n_edges = graph.edge_count();
  stats.avg_degree = 2.0 * static_cast<double>(stats.n_edges) / static_cast<double>(stats.n_vertices);

  const auto coefficients = local_clustering_coefficients(graph);
  stats.clustering_coefficient =
      std::accumulate(coefficients.begin(), coefficients.end(), 0.0) / static_cast<double>(coefficients.size());

  std::optional<std::size_t> sample;
  if (sampling) {
    sample = sampling->sources;
    stats.path_sample = sampling->sources;
    stats.sample_seed = sampling->seed;
  }
  const auto paths = average_path_length(graph, sample, sampling ? sampling->seed : 0, threads);
  stats.avg_path_length = paths.mean;
  stats.path_length_exact = paths.exact;
  return stats;
}

GraphStats graph_stats(const CoGraph& graph, std::optional<PathSampling> sampling, unsigned threads) {
  return graph_stats(graph.topology(), sampling, threads);
}

SmallWorldReport small_world_check(const GraphStats& stats, const SmallWorldThresholds& thresholds) {
  if (stats.n_vertices <= 1) throw UndefinedBaselineError("small-world baseline needs more than one vertex");
  if (!(stats.avg_degree > 1.0)) {
    throw UndefinedBaselineError("small-world baseline needs average degree above 1");
  }
  SmallWorldReport report;
  const double n = static_cast<double>(stats.n_vertices);
  report.expected_path_length_random = std::log(n) / std::log(stats.avg_degree);
  report.expected_clustering_random = 2.0 * stats.avg_degree / n;
  const double baseline = report.expected_path_length_random;
  const bool path_close = stats.avg_path_length >= baseline / thresholds.path_factor &&
                          stats.avg_path_length <= baseline * thresholds.path_factor;
  const bool clustered =
      stats.clustering_coefficient >= thresholds.clustering_factor * report.expected_clustering_random;
  report.is_small_world = path_close && clustered;
  return report;
}

void save_graph(const CoGraph& graph, std::ostream& sink) {
  sink << "#vertices\n";
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    sink << graph.lemma(v) << '\t' << graph.frequency(v) << '\n';
  }
  sink << "#edges\n";
  const auto edges = graph.topology().edges();
  for (EdgeId e = 0; e < edges.size(); ++e) {
    sink << graph.lemma(edges[e].u) << '\t' << graph.lemma(edges[e].v) << '\t' << graph.cooc_count(e)
         << '\t' << format_dice(edges[e].weight) << '\n';
  }
}

CoGraph load_graph(std::istream& source) {
  enum class Section { none, vertices, edges };
  Section section = Section::none;
  std::vector<std::pair<Lemma, std::uint64_t>> vertices;
  std::vector<CoEdgeCount> edges;
  std::vector<double> stored_dice;
  std::vector<std::size_t> edge_lines;
  std::unordered_map<std::string, VertexId> ids;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(source, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line == "#vertices") {
      if (section != Section::none) throw FormatError("unexpected #vertices section", line_no);
      section = Section::vertices;
      continue;
    }
    if (line == "#edges") {
      if (section != Section::vertices) throw FormatError("#edges section before #vertices", line_no);
      section = Section::edges;
      continue;
    }
    const auto fields = split(line, '\t');
    if (section == Section::vertices) {
      std::uint64_t freq = 0;
      if (fields.size() != 2 || !is_valid_lemma(fields[0]) || !parse_number(fields[1], freq) || freq == 0) {
        throw FormatError("malformed vertex line", line_no);
      }
      const auto id = static_cast<VertexId>(vertices.size());
      if (!ids.emplace(std::string(fields[0]), id).second) {
        throw FormatError("duplicate vertex '" + std::string(fields[0]) + "'", line_no);
      }
      vertices.emplace_back(std::string(fields[0]), freq);
    } else if (section == Section::edges) {
      std::uint64_t count = 0;
      double value = 0.0;
      if (fields.size() != 4 || !parse_number(fields[2], count) || count == 0 ||
          !parse_double(fields[3], value)) {
        throw FormatError("malformed edge line", line_no);
      }
      if (!(fields[0] < fields[1])) {
        throw FormatError("edge endpoints must be in increasing lexicographic order", line_no);
      }
      const auto a = ids.find(std::string(fields[0]));
      const auto b = ids.find(std::string(fields[1]));
      if (a == ids.end() || b == ids.end()) {
        throw FormatError("edge references an unknown vertex", line_no);
      }
      edges.push_back({a->second, b->second, count});
      stored_dice.push_back(value);
      edge_lines.push_back(line_no);
    } else {
      throw FormatError("content before #vertices section", line_no);
    }
  }
  if (section == Section::none) throw FormatError("missing #vertices section");

  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    const double expected = dice_coefficient(e.cooc_count, vertices[e.u].second, vertices[e.v].second);
    if (std::abs(expected - stored_dice[i]) > kDiceLoadTolerance * std::max(1.0, expected)) {
      throw FormatError("dice value inconsistent with counts", edge_lines[i]);
    }
  }
  try {
    return CoGraph::from_counts(std::move(vertices), std::move(edges));
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(e.what());
  }
}

}  // namespace senseclust
