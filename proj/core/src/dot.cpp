#include "senseclust/dot.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include <string>

namespace senseclust {
namespace {

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                                 "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string quoted(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string weight_label(double w) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.4g", w);
  return buffer;
}

const char* shape(Origin origin) { return origin == Origin::serp ? "ellipse" : "triangle"; }

void header(std::ostream& out, std::string_view title) {
  out << "graph " << quoted(title) << " {\n  node [fontname=\"Helvetica\"];\n";
}

std::map<Lemma, int> cluster_of(const SenseInventory& inventory) {
  std::map<Lemma, int> index;
  for (const auto& c : inventory.clusters) {
    for (const auto& lemma : c.lemmas) index[lemma] = c.id;
  }
  return index;
}

void vertex_line(std::ostream& out, const QueryVertex& v, std::string extra) {
  out << "  " << quoted(v.lemma) << " [shape=" << shape(v.origin);
  if (!extra.empty()) out << ", " << extra;
  out << "];\n";
}

std::string colour(int cluster) {
  return std::string("color=\"") + kPalette[static_cast<std::size_t>(cluster) % kPalette.size()] + "\"";
}

}  // namespace

void write_query_graph_dot(const QueryGraph& gq, std::ostream& out) {
  header(out, gq.query());
  for (const auto& v : gq.vertices()) vertex_line(out, v, "");
  for (const auto& e : gq.graph().edges()) {
    out << "  " << quoted(gq.lemma(e.u)) << " -- " << quoted(gq.lemma(e.v)) << " [label=" << weight_label(e.weight)
        << "];\n";
  }
  out << "}\n";
}

void write_curvature_marked_dot(const QueryGraph& gq, const CurvaturePartition& partition, std::ostream& out) {
  header(out, gq.query());
  for (VertexId v = 0; v < gq.vertex_count(); ++v) {
    std::string extra = "xlabel=" + quoted(weight_label(partition.coefficients[v]));
    if (partition.low_coefficient[v]) extra += ", style=dashed, color=red";
    vertex_line(out, gq.vertex(v), extra);
  }
  for (const auto& e : gq.graph().edges()) {
    out << "  " << quoted(gq.lemma(e.u)) << " -- " << quoted(gq.lemma(e.v)) << ";\n";
  }
  out << "}\n";
}

void write_curvature_result_dot(const QueryGraph& gq, const CurvaturePartition& partition, std::ostream& out) {
  header(out, gq.query());
  const auto clusters = cluster_of(partition.inventory);
  for (VertexId v = 0; v < gq.vertex_count(); ++v) {
    if (!partition.survived[v]) continue;
    vertex_line(out, gq.vertex(v), colour(clusters.at(gq.lemma(v))));
  }
  for (const auto& e : gq.graph().edges()) {
    if (!partition.survived[e.u] || !partition.survived[e.v]) continue;
    out << "  " << quoted(gq.lemma(e.u)) << " -- " << quoted(gq.lemma(e.v)) << ";\n";
  }
  out << "}\n";
}

void write_hyperlex_forest_dot(const QueryGraph& gq, const HyperlexPartition& partition, std::ostream& out) {
  const Lemma& query = partition.inventory.query;
  header(out, query);
  out << "  " << quoted(query) << " [shape=diamond, style=filled, fillcolor=\"#dddddd\"];\n";
  for (const auto& v : gq.vertices()) {
    const bool hub = std::find(partition.hubs.begin(), partition.hubs.end(), v.lemma) != partition.hubs.end();
    vertex_line(out, v, hub ? "style=bold" : "");
  }
  for (const auto& e : partition.forest) {
    out << "  " << quoted(e.a) << " -- " << quoted(e.b);
    if (e.a == query || e.b == query) {
      out << " [style=bold];\n";
    } else {
      out << " [label=" << weight_label(e.weight) << "];\n";
    }
  }
  out << "}\n";
}

void write_hyperlex_result_dot(const QueryGraph& gq, const HyperlexPartition& partition, std::ostream& out) {
  const Lemma& query = partition.inventory.query;
  header(out, query);
  const auto clusters = cluster_of(partition.inventory);
  for (const auto& v : gq.vertices()) {
    const auto it = clusters.find(v.lemma);
    if (it == clusters.end()) continue;
    std::string extra = colour(it->second);
    if (partition.inventory.clusters[static_cast<std::size_t>(it->second)].hub == v.lemma) extra += ", style=bold";
    vertex_line(out, v, extra);
  }
  for (const auto& e : partition.forest) {
    if (e.a == query || e.b == query || !clusters.contains(e.a) || !clusters.contains(e.b)) continue;
    out << "  " << quoted(e.a) << " -- " << quoted(e.b) << " [label=" << weight_label(e.weight) << "];\n";
  }
  out << "}\n";
}

}  // namespace senseclust
