#pragma once

#include <ostream>

#include "senseclust/querygraph.hpp"
#include "senseclust/wsi.hpp"

namespace senseclust {

// Graphviz renderings of query graphs. SERP-origin vertices are ellipses,
// corpus-origin vertices triangles, the query vertex a diamond. Vertices
// deleted by a partitioning step are dashed red; hubs are drawn bold.

/// G_q before partitioning.
void write_query_graph_dot(const QueryGraph& gq, std::ostream& out);

/// G_q with the low-coefficient vertices marked (before pruning).
void write_curvature_marked_dot(const QueryGraph& gq, const CurvaturePartition& partition, std::ostream& out);

/// Surviving vertices and edges after pruning, one colour per cluster.
void write_curvature_result_dot(const QueryGraph& gq, const CurvaturePartition& partition, std::ostream& out);

/// The maximum spanning forest of the augmented graph including the query
/// vertex and its hub edges.
void write_hyperlex_forest_dot(const QueryGraph& gq, const HyperlexPartition& partition, std::ostream& out);

/// The forest after the query vertex is cut away, one colour per cluster.
void write_hyperlex_result_dot(const QueryGraph& gq, const HyperlexPartition& partition, std::ostream& out);

}  // namespace senseclust
