#pragma once

#include <istream>
#include <ostream>
#include <vector>

#include "senseclust/clusterer.hpp"
#include "senseclust/eval.hpp"
#include "senseclust/querygraph.hpp"
#include "senseclust/wsi.hpp"

namespace senseclust {

// JSON documents (UTF-8). Readers throw FormatError on malformed input.
//
// SERP:
//   {"query": "амур",
//    "documents": [{"rank": 1, "title": "...", "snippet": "...",
//                   "lemmas": ["река", "берег"]}, ...]}
// Inventory:
//   {"query": ..., "algorithm": "curvature"|"hyperlex", "params": {...},
//    "clusters": [{"id": 0, "hub": "клуб", "label": "...", "lemmas": [...]}]}
//   ("hub" and "label" are omitted when absent.)
// Clustered SERP:
//   {"query": ..., "inventory": {...},
//    "assignments": [{"rank": 1, "sense_id": 0 | null, "score": 0.5}],
//    "n_populated_clusters": 2, "n_inventory_clusters": 3}

Serp read_serp_json(std::istream& in);
void write_serp_json(const Serp& serp, std::ostream& out);

/// Tab-separated SERP: a `#query<TAB>lemma` header, then one document per
/// line as `rank<TAB>title<TAB>snippet<TAB>space-separated lemmas`.
Serp read_serp_tsv(std::istream& in);

void write_inventory(const SenseInventory& inventory, std::ostream& out);
SenseInventory read_inventory(std::istream& in);

void write_clustered(const ClusteredSerp& clustered, std::ostream& out);
ClusteredSerp read_clustered(std::istream& in);

void write_report_json(const EvalReport& report, std::ostream& out);

/// One deviation per line, either `value` or `label<TAB>value`.
struct LabelledValue {
  std::string label;
  double value = 0.0;
};
std::vector<LabelledValue> read_deviations(std::istream& in);

}  // namespace senseclust
