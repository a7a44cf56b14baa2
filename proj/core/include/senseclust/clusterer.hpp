#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "senseclust/querygraph.hpp"
#include "senseclust/text.hpp"
#include "senseclust/wsi.hpp"

namespace senseclust {

/// |result ∩ sense| / |result| over distinct lemmas; 0 for an empty result.
double similarity(const LemmaSet& result_lemmas, const LemmaSet& sense_lemmas);

struct Assignment {
  int rank = 0;
  std::optional<int> sense_id;  ///< empty means unassigned
  double score = 0.0;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct ClusteredSerp {
  Lemma query;
  SenseInventory inventory;
  std::vector<Assignment> assignments;  ///< one per document, in SERP order
  std::size_t n_populated_clusters = 0;

  friend bool operator==(const ClusteredSerp&, const ClusteredSerp&) = default;
};

struct AssignOptions {
  /// Attach zero-overlap documents to the first inventory cluster instead of
  /// leaving them unassigned.
  bool force_assign = false;
};

/// Gives every document the most similar sense; ties go to the cluster that
/// comes first in the inventory. Throws EmptyInventoryError when the
/// inventory has no clusters.
ClusteredSerp assign_senses(const Serp& serp, const SenseInventory& inventory, const AssignOptions& options = {});

}  // namespace senseclust
