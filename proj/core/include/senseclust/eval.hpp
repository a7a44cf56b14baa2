#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "senseclust/clusterer.hpp"
#include "senseclust/text.hpp"

namespace senseclust {

/// Reference number of senses present on each query's SERP.
struct GoldSenseCounts {
  std::map<Lemma, int, std::less<>> entries;

  /// Mean over all entries; 0 when empty.
  double average_senses() const;
};

/// `query<TAB>count` per line, count >= 1. Blank and '#' lines are skipped.
GoldSenseCounts load_gold(std::istream& source);

enum class CountMode { inventory, populated };

std::string_view to_string(CountMode mode) noexcept;
CountMode parse_count_mode(std::string_view name);

struct QueryDeviation {
  Lemma query;
  int produced = 0;
  int gold = 0;
  int deviation = 0;  ///< |produced - gold|
};

struct EvalReport {
  CountMode count_mode = CountMode::populated;
  std::vector<QueryDeviation> per_query;
  double average_senses = 0.0;
  double mean_deviation = 0.0;
  double mean_deviation_pct = 0.0;  ///< 100 * mean_deviation / average_senses
};

/// 100 * deviation / average_senses. Throws Error for a non-positive average.
double deviation_percent(double mean_deviation, double average_senses);

/// Throws MissingGoldError naming the first query absent from `gold`, and
/// EmptyInputError when `clustered` is empty.
EvalReport evaluate(std::span<const ClusteredSerp> clustered, const GoldSenseCounts& gold,
                    CountMode mode = CountMode::populated);

/// Aligned plain-text table of a report.
void print_report(const EvalReport& report, std::ostream& out);

}  // namespace senseclust
