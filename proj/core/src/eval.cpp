#include "senseclust/eval.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <string>

#include "senseclust/error.hpp"

namespace senseclust {

double GoldSenseCounts::average_senses() const {
  if (entries.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& [query, count] : entries) sum += count;
  return sum / static_cast<double>(entries.size());
}

GoldSenseCounts load_gold(std::istream& source) {
  GoldSenseCounts gold;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(source, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto trimmed = trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const auto fields = split(trimmed, '\t');
    int count = 0;
    if (fields.size() != 2) throw FormatError("expected query<TAB>count", line_no);
    const auto query = trim(fields[0]);
    const auto number = trim(fields[1]);
    const auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), count);
    if (!is_valid_lemma(query) || ec != std::errc{} || ptr != number.data() + number.size() || count < 1) {
      throw FormatError("malformed gold entry", line_no);
    }
    if (!gold.entries.emplace(utf8_lowercase(query), count).second) {
      throw FormatError("duplicate gold query '" + std::string(query) + "'", line_no);
    }
  }
  return gold;
}

std::string_view to_string(CountMode mode) noexcept {
  return mode == CountMode::inventory ? "inventory" : "populated";
}

CountMode parse_count_mode(std::string_view name) {
  if (name == "inventory") return CountMode::inventory;
  if (name == "populated") return CountMode::populated;
  throw Error("unknown count mode '" + std::string(name) + "' (expected inventory or populated)");
}

double deviation_percent(double mean_deviation, double average_senses) {
  if (!(average_senses > 0.0)) throw Error("average number of senses must be positive");
  return 100.0 * mean_deviation / average_senses;
}

EvalReport evaluate(std::span<const ClusteredSerp> clustered, const GoldSenseCounts& gold, CountMode mode) {
  if (clustered.empty()) throw EmptyInputError("nothing to evaluate");
  EvalReport report;
  report.count_mode = mode;
  report.average_senses = gold.average_senses();
  long total = 0;
  for (const auto& serp : clustered) {
    const auto it = gold.entries.find(serp.query);
    if (it == gold.entries.end()) throw MissingGoldError("query '" + serp.query + "' has no gold sense count");
    const int produced = static_cast<int>(mode == CountMode::inventory ? serp.inventory.clusters.size()
                                                                       : serp.n_populated_clusters);
    const int deviation = std::abs(produced - it->second);
    report.per_query.push_back({serp.query, produced, it->second, deviation});
    total += deviation;
  }
  report.mean_deviation = static_cast<double>(total) / static_cast<double>(report.per_query.size());
  report.mean_deviation_pct = deviation_percent(report.mean_deviation, report.average_senses);
  return report;
}

namespace {

std::size_t display_width(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80 ? 1 : 0;
  return n;
}

}  // namespace

void print_report(const EvalReport& report, std::ostream& out) {
  std::size_t width = 5;
  for (const auto& row : report.per_query) width = std::max(width, display_width(row.query));
  auto pad = [&](const std::string& s) { return s + std::string(width - display_width(s) + 2, ' '); };
  out << pad("query") << "produced  gold  deviation\n";
  char buffer[96];
  for (const auto& row : report.per_query) {
    std::snprintf(buffer, sizeof buffer, "%8d  %4d  %9d\n", row.produced, row.gold, row.deviation);
    out << pad(row.query) << buffer;
  }
  std::snprintf(buffer, sizeof buffer, "mean deviation %.3f (%.1f%% of %.2f senses), count mode %s\n",
                report.mean_deviation, report.mean_deviation_pct, report.average_senses,
                std::string(to_string(report.count_mode)).c_str());
  out << buffer;
}

}  // namespace senseclust
