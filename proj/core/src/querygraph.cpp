#include "senseclust/querygraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "senseclust/error.hpp"

namespace senseclust {

void normalize_serp(Serp& serp, const LemmaSet& stopwords) {
  serp.query = utf8_lowercase(trim(serp.query));
  if (!is_valid_lemma(serp.query)) {
    throw FormatError("query must be a single non-empty lemma, got '" + serp.query + "'");
  }
  std::set<int> ranks;
  for (auto& doc : serp.documents) {
    if (doc.rank < 1) throw FormatError("document rank must be >= 1");
    if (!ranks.insert(doc.rank).second) throw FormatError("duplicate document rank " + std::to_string(doc.rank));
    std::vector<Lemma> kept;
    kept.reserve(doc.lemmas.size());
    for (const auto& raw : doc.lemmas) {
      if (!is_valid_lemma(raw)) throw FormatError("invalid lemma '" + raw + "' in document " + std::to_string(doc.rank));
      Lemma lemma = utf8_lowercase(raw);
      if (lemma == serp.query || stopwords.contains(lemma)) continue;
      kept.push_back(std::move(lemma));
    }
    doc.lemmas = std::move(kept);
  }
}

void StrongLinkParams::validate() const {
  for (double t : {min_cond_prob, min_dice_query, min_dice_edge}) {
    if (!(t > 0.0 && t < 1.0)) throw Error("strong-link thresholds must lie in (0, 1)");
  }
}

std::string_view to_string(Origin origin) noexcept {
  return origin == Origin::serp ? "serp" : "corpus";
}

QueryGraph::QueryGraph(Lemma query, std::vector<QueryVertex> vertices, std::vector<WeightedEdge> edges)
    : query_(std::move(query)) {
  std::vector<VertexId> order(vertices.size());
  std::iota(order.begin(), order.end(), VertexId{0});
  std::sort(order.begin(), order.end(),
            [&](VertexId a, VertexId b) { return vertices[a].lemma < vertices[b].lemma; });
  std::vector<VertexId> rank(vertices.size());
  vertices_.reserve(vertices.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto& v = vertices[order[i]];
    if (!is_valid_lemma(v.lemma)) throw Error("invalid query graph lemma '" + v.lemma + "'");
    if (v.lemma == query_) throw Error("the query lemma cannot be a query graph vertex");
    if (!vertices_.empty() && vertices_.back().lemma == v.lemma) throw Error("duplicate vertex '" + v.lemma + "'");
    rank[order[i]] = static_cast<VertexId>(i);
    vertices_.push_back(std::move(v));
  }
  for (auto& e : edges) {
    if (e.u >= rank.size() || e.v >= rank.size()) throw LookupError("edge endpoint out of range");
    e.u = rank[e.u];
    e.v = rank[e.v];
  }
  graph_ = WeightedGraph(vertices_.size(), std::move(edges));
}

std::optional<VertexId> QueryGraph::find(std::string_view lemma) const {
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), lemma,
                                   [](const QueryVertex& v, std::string_view x) { return v.lemma < x; });
  if (it == vertices_.end() || it->lemma != lemma) return std::nullopt;
  return static_cast<VertexId>(it - vertices_.begin());
}

double QueryGraph::weight(std::string_view a, std::string_view b) const {
  const auto u = find(a);
  const auto v = find(b);
  if (!u || !v) return 0.0;
  const auto e = graph_.find_edge(*u, *v);
  return e ? graph_.edge(*e).weight : 0.0;
}

LemmaSet strong_neighbors(const CoGraph& graph, std::string_view query, const StrongLinkParams& params) {
  LemmaSet result;
  const auto q = graph.find(query);
  if (!q) return result;
  const double freq_q = static_cast<double>(graph.frequency(*q));
  for (const auto& n : graph.neighbors(*q)) {
    const double cond = static_cast<double>(graph.cooc_count(n.edge)) / freq_q;
    if (cond >= params.min_cond_prob && graph.dice(n.edge) >= params.min_dice_query) {
      result.insert(graph.lemma(n.vertex));
    }
  }
  return result;
}

QueryGraph build_query_graph(const CoGraph& graph, const Serp& serp, const StrongLinkParams& params) {
  std::map<Lemma, Origin> candidates;
  for (const auto& doc : serp.documents) {
    for (const auto& lemma : doc.lemmas) {
      if (lemma != serp.query) candidates.emplace(lemma, Origin::serp);
    }
  }
  for (auto& lemma : strong_neighbors(graph, serp.query, params)) {
    candidates.emplace(lemma, Origin::corpus);  // serp origin wins on overlap
  }

  std::vector<QueryVertex> all;
  std::vector<std::optional<VertexId>> corpus_ids;
  for (const auto& [lemma, origin] : candidates) {
    const auto id = graph.find(lemma);
    all.push_back({lemma, origin, id ? graph.frequency(*id) : 0});
    corpus_ids.push_back(id);
  }

  std::vector<WeightedEdge> edges;
  std::vector<bool> linked(all.size(), false);
  for (VertexId a = 0; a < all.size(); ++a) {
    if (!corpus_ids[a]) continue;
    for (VertexId b = a + 1; b < all.size(); ++b) {
      if (!corpus_ids[b]) continue;
      const auto e = graph.topology().find_edge(*corpus_ids[a], *corpus_ids[b]);
      if (!e || graph.dice(*e) < params.min_dice_edge) continue;
      edges.push_back({a, b, graph.dice(*e)});
      linked[a] = linked[b] = true;
    }
  }
  if (edges.empty()) {
    throw EmptyQueryGraphError("query graph for '" + serp.query + "' has no edges");
  }

  std::vector<VertexId> remap(all.size());
  std::vector<QueryVertex> kept;
  for (VertexId v = 0; v < all.size(); ++v) {
    if (!linked[v]) continue;
    remap[v] = static_cast<VertexId>(kept.size());
    kept.push_back(std::move(all[v]));
  }
  for (auto& e : edges) {
    e.u = remap[e.u];
    e.v = remap[e.v];
  }
  return QueryGraph(serp.query, std::move(kept), std::move(edges));
}

}  // namespace senseclust
