#include "senseclust/serialization.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "senseclust/error.hpp"

namespace senseclust {
namespace {

using ordered_json = nlohmann::ordered_json;
using json = nlohmann::ordered_json;

json parse(std::istream& in, const char* what) {
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid ") + what + " JSON: " + e.what());
  }
}

template <class F>
auto guarded(const char* what, F&& body) {
  try {
    return body();
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed ") + what + ": " + e.what());
  }
}

ordered_json inventory_json(const SenseInventory& inventory) {
  ordered_json params = ordered_json::object();
  for (const auto& [name, value] : inventory.parameters) params[name] = value;
  ordered_json clusters = ordered_json::array();
  for (const auto& c : inventory.clusters) {
    ordered_json cluster;
    cluster["id"] = c.id;
    if (c.hub) cluster["hub"] = *c.hub;
    if (c.label) cluster["label"] = *c.label;
    cluster["lemmas"] = c.lemmas;
    clusters.push_back(std::move(cluster));
  }
  return ordered_json{{"query", inventory.query},
                      {"algorithm", std::string(to_string(inventory.algorithm))},
                      {"params", std::move(params)},
                      {"clusters", std::move(clusters)}};
}

SenseInventory inventory_from(const json& j) {
  SenseInventory inventory;
  inventory.query = j.at("query").get<std::string>();
  try {
    inventory.algorithm = parse_algorithm(j.at("algorithm").get<std::string>());
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(e.what());
  }
  if (j.contains("params")) {
    for (const auto& [name, value] : j.at("params").items()) {
      inventory.parameters.emplace_back(name, value.get<double>());
    }
  }
  for (const auto& c : j.at("clusters")) {
    SenseCluster cluster;
    cluster.id = c.at("id").get<int>();
    if (c.contains("hub")) cluster.hub = c.at("hub").get<std::string>();
    if (c.contains("label")) cluster.label = c.at("label").get<std::string>();
    cluster.lemmas = c.at("lemmas").get<std::vector<std::string>>();
    if (cluster.lemmas.empty()) throw FormatError("cluster " + std::to_string(cluster.id) + " has no lemmas");
    inventory.clusters.push_back(std::move(cluster));
  }
  return inventory;
}

}  // namespace

Serp read_serp_json(std::istream& in) {
  const json j = parse(in, "SERP");
  return guarded("SERP", [&] {
    Serp serp;
    serp.query = j.at("query").get<std::string>();
    for (const auto& d : j.at("documents")) {
      SerpDocument doc;
      doc.rank = d.at("rank").get<int>();
      doc.title = d.value("title", "");
      doc.snippet = d.value("snippet", "");
      doc.lemmas = d.at("lemmas").get<std::vector<std::string>>();
      serp.documents.push_back(std::move(doc));
    }
    return serp;
  });
}

void write_serp_json(const Serp& serp, std::ostream& out) {
  ordered_json docs = ordered_json::array();
  for (const auto& d : serp.documents) {
    docs.push_back(ordered_json{{"rank", d.rank}, {"title", d.title}, {"snippet", d.snippet}, {"lemmas", d.lemmas}});
  }
  out << ordered_json{{"query", serp.query}, {"documents", std::move(docs)}}.dump(2) << '\n';
}

Serp read_serp_tsv(std::istream& in) {
  Serp serp;
  bool have_query = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    const auto fields = split(line, '\t');
    if (fields[0] == "#query") {
      if (have_query || fields.size() != 2) throw FormatError("expected a single #query<TAB>lemma header", line_no);
      serp.query = std::string(trim(fields[1]));
      have_query = true;
      continue;
    }
    if (!have_query) throw FormatError("SERP TSV must start with a #query header", line_no);
    if (fields.size() != 4) throw FormatError("expected rank<TAB>title<TAB>snippet<TAB>lemmas", line_no);
    SerpDocument doc;
    char* end = nullptr;
    const std::string rank(trim(fields[0]));
    doc.rank = static_cast<int>(std::strtol(rank.c_str(), &end, 10));
    if (rank.empty() || *end != '\0') throw FormatError("malformed rank", line_no);
    doc.title = std::string(fields[1]);
    doc.snippet = std::string(fields[2]);
    for (auto lemma : split_whitespace(fields[3])) doc.lemmas.emplace_back(lemma);
    serp.documents.push_back(std::move(doc));
  }
  if (!have_query) throw FormatError("SERP TSV has no #query header");
  return serp;
}

void write_inventory(const SenseInventory& inventory, std::ostream& out) {
  out << inventory_json(inventory).dump(2) << '\n';
}

SenseInventory read_inventory(std::istream& in) {
  const json j = parse(in, "inventory");
  return guarded("inventory", [&] { return inventory_from(j); });
}

void write_clustered(const ClusteredSerp& clustered, std::ostream& out) {
  ordered_json assignments = ordered_json::array();
  for (const auto& a : clustered.assignments) {
    ordered_json item{{"rank", a.rank}};
    item["sense_id"] = a.sense_id ? ordered_json(*a.sense_id) : ordered_json(nullptr);
    item["score"] = a.score;
    assignments.push_back(std::move(item));
  }
  const ordered_json j{{"query", clustered.query},
                       {"inventory", inventory_json(clustered.inventory)},
                       {"assignments", std::move(assignments)},
                       {"n_populated_clusters", clustered.n_populated_clusters},
                       {"n_inventory_clusters", clustered.inventory.clusters.size()}};
  out << j.dump(2) << '\n';
}

ClusteredSerp read_clustered(std::istream& in) {
  const json j = parse(in, "clustered SERP");
  return guarded("clustered SERP", [&] {
    ClusteredSerp clustered;
    clustered.query = j.at("query").get<std::string>();
    clustered.inventory = inventory_from(j.at("inventory"));
    for (const auto& a : j.at("assignments")) {
      Assignment assignment;
      assignment.rank = a.at("rank").get<int>();
      if (!a.at("sense_id").is_null()) assignment.sense_id = a.at("sense_id").get<int>();
      assignment.score = a.at("score").get<double>();
      clustered.assignments.push_back(assignment);
    }
    clustered.n_populated_clusters = j.at("n_populated_clusters").get<std::size_t>();
    return clustered;
  });
}

void write_report_json(const EvalReport& report, std::ostream& out) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : report.per_query) {
    rows.push_back(ordered_json{
        {"query", row.query}, {"produced", row.produced}, {"gold", row.gold}, {"deviation", row.deviation}});
  }
  const ordered_json j{{"count_mode", std::string(to_string(report.count_mode))},
                       {"average_senses", report.average_senses},
                       {"mean_deviation", report.mean_deviation},
                       {"mean_deviation_pct", report.mean_deviation_pct},
                       {"per_query", std::move(rows)}};
  out << j.dump(2) << '\n';
}

std::vector<LabelledValue> read_deviations(std::istream& in) {
  std::vector<LabelledValue> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto trimmed = trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const auto fields = split(trimmed, '\t');
    if (fields.size() > 2) throw FormatError("expected value or label<TAB>value", line_no);
    LabelledValue item;
    if (fields.size() == 2) item.label = std::string(trim(fields[0]));
    const std::string number(trim(fields.back()));
    char* end = nullptr;
    item.value = std::strtod(number.c_str(), &end);
    if (number.empty() || *end != '\0' || !std::isfinite(item.value) || item.value < 0) {
      throw FormatError("malformed deviation value", line_no);
    }
    values.push_back(std::move(item));
  }
  return values;
}

}  // namespace senseclust
