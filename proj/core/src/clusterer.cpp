#include "senseclust/clusterer.hpp"

#include <algorithm>
#include <set>

#include "senseclust/error.hpp"

namespace senseclust {

double similarity(const LemmaSet& result_lemmas, const LemmaSet& sense_lemmas) {
  if (result_lemmas.empty()) return 0.0;
  std::size_t common = 0;
  for (const auto& lemma : result_lemmas) {
    if (sense_lemmas.contains(lemma)) ++common;
  }
  return static_cast<double>(common) / static_cast<double>(result_lemmas.size());
}

ClusteredSerp assign_senses(const Serp& serp, const SenseInventory& inventory, const AssignOptions& options) {
  if (inventory.clusters.empty()) {
    throw EmptyInventoryError("sense inventory for '" + inventory.query + "' has no clusters");
  }
  std::vector<LemmaSet> senses;
  senses.reserve(inventory.clusters.size());
  for (const auto& cluster : inventory.clusters) senses.emplace_back(cluster.lemmas.begin(), cluster.lemmas.end());

  ClusteredSerp out{serp.query, inventory, {}, 0};
  std::set<int> populated;
  for (const auto& doc : serp.documents) {
    const LemmaSet result(doc.lemmas.begin(), doc.lemmas.end());
    Assignment assignment{doc.rank, std::nullopt, 0.0};
    std::size_t best = 0;
    for (std::size_t i = 0; i < senses.size(); ++i) {
      const double score = similarity(result, senses[i]);
      if (score > assignment.score) {
        assignment.score = score;
        best = i;
      }
    }
    if (assignment.score > 0.0 || options.force_assign) {
      assignment.sense_id = inventory.clusters[best].id;
      populated.insert(*assignment.sense_id);
    }
    out.assignments.push_back(assignment);
  }
  out.n_populated_clusters = populated.size();
  return out;
}

}  // namespace senseclust
