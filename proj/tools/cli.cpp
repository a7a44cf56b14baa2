#include "cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "senseclust/corpus.hpp"
#include "senseclust/dot.hpp"
#include "senseclust/error.hpp"
#include "senseclust/eval.hpp"
#include "senseclust/serialization.hpp"

namespace senseclust::cli {
namespace {

namespace fs = std::filesystem;

struct Paths {
  std::string output;
  std::string graph;
  std::string serp;
  std::string serp_format = "auto";
  std::string dot_prefix;
  std::string gold;
  std::string count_mode = "populated";
  std::string json_output;
  std::string deviations;
  double average_senses = 0.0;
  std::vector<std::string> clustered;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  return in;
}

// Writes through a sibling temporary file and renames it into place.
void write_atomically(const std::string& path, const std::function<void(std::ostream&)>& body) {
  const fs::path target(path);
  fs::path temp = target;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + temp.string() + "'");
    body(out);
    out.flush();
    if (!out) throw Error("failed writing '" + temp.string() + "'");
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    fs::remove(temp);
    throw Error("cannot move output into '" + path + "': " + ec.message());
  }
}

LemmaSet stopwords_from(const PipelineConfig& config) {
  if (config.stopword_path.empty()) return {};
  auto in = open_input(config.stopword_path);
  return load_stopwords(in);
}

CoGraph read_graph_file(const std::string& path) {
  auto in = open_input(path);
  try {
    return load_graph(in);
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

Serp read_serp_file(const Paths& paths, const LemmaSet& stopwords) {
  auto in = open_input(paths.serp);
  std::string format = paths.serp_format;
  if (format == "auto") format = fs::path(paths.serp).extension() == ".tsv" ? "tsv" : "json";
  Serp serp = format == "tsv" ? read_serp_tsv(in) : read_serp_json(in);
  normalize_serp(serp, stopwords);
  return serp;
}

std::string fixed(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
  return buffer;
}

void print_stats(const GraphStats& stats, std::ostream& out) {
  out << "vertices            " << stats.n_vertices << '\n'
      << "edges               " << stats.n_edges << '\n'
      << "average degree      " << fixed(stats.avg_degree, 3) << '\n'
      << "average path length " << fixed(stats.avg_path_length, 3);
  if (stats.path_length_exact) {
    out << " (exact)\n";
  } else {
    out << " (sampled " << *stats.path_sample << " sources, seed " << stats.sample_seed << ")\n";
  }
  out << "clustering coeff    " << fixed(stats.clustering_coefficient, 4) << '\n';
  try {
    const auto report = small_world_check(stats);
    out << "random path length  " << fixed(report.expected_path_length_random, 3) << '\n'
        << "random clustering   " << fixed(report.expected_clustering_random, 6) << '\n'
        << "small world         " << (report.is_small_world ? "yes" : "no") << '\n';
  } catch (const UndefinedBaselineError& e) {
    out << "small world         undefined (" << e.what() << ")\n";
  }
}

GraphStats stats_for(const CoGraph& graph, const PipelineConfig& config) {
  std::optional<PathSampling> sampling;
  if (!config.exact_paths) sampling = PathSampling{config.path_sample, config.seed};
  return graph_stats(graph, sampling, config.threads);
}

int cmd_build(const PipelineConfig& config, const Paths& paths, std::ostream& out) {
  FilterConfig filter;
  filter.stopwords = stopwords_from(config);
  filter.require_cyrillic = config.require_cyrillic;
  if (config.all_pos) {
    filter.keep_pos.reset();
  } else {
    filter.keep_pos.emplace(config.keep_pos.begin(), config.keep_pos.end());
  }

  Corpus corpus;
  for (const auto& path : config.corpus_paths) {
    auto in = open_input(path);
    try {
      load_corpus(in, filter, corpus);
    } catch (const FormatError& e) {
      throw FormatError(path + ": " + e.what());
    }
  }
  if (corpus.empty()) throw EmptyInputError("the filtered corpus is empty");
  const CoGraph graph = build_cooccurrence_graph(corpus, config.threads);
  write_atomically(paths.output, [&](std::ostream& os) { save_graph(graph, os); });
  out << "corpus tokens       " << corpus.token_count() << '\n'
      << "sentences           " << corpus.sentence_count() << '\n';
  print_stats(stats_for(graph, config), out);
  return 0;
}

int cmd_stats(const PipelineConfig& config, const Paths& paths, std::ostream& out) {
  print_stats(stats_for(read_graph_file(paths.graph), config), out);
  return 0;
}

void write_dot(const std::string& path, const std::function<void(std::ostream&)>& body) {
  write_atomically(path, body);
}

SenseInventory induce(const PipelineConfig& config, const Paths& paths, const CoGraph& graph, const Serp& serp) {
  config.strong_links.validate();
  const QueryGraph gq = build_query_graph(graph, serp, config.strong_links);
  const bool dot = !paths.dot_prefix.empty();
  if (dot) write_dot(paths.dot_prefix + ".query.dot", [&](std::ostream& os) { write_query_graph_dot(gq, os); });

  if (parse_algorithm(config.algorithm) == Algorithm::curvature) {
    const auto partition = curvature_partition(gq, config.curvature);
    if (dot) {
      write_dot(paths.dot_prefix + ".marked.dot",
                [&](std::ostream& os) { write_curvature_marked_dot(gq, partition, os); });
      write_dot(paths.dot_prefix + ".senses.dot",
                [&](std::ostream& os) { write_curvature_result_dot(gq, partition, os); });
    }
    return partition.inventory;
  }
  const auto partition = hyperlex_partition(gq, serp.query, config.hyperlex);
  if (dot) {
    write_dot(paths.dot_prefix + ".forest.dot",
              [&](std::ostream& os) { write_hyperlex_forest_dot(gq, partition, os); });
    write_dot(paths.dot_prefix + ".senses.dot",
              [&](std::ostream& os) { write_hyperlex_result_dot(gq, partition, os); });
  }
  return partition.inventory;
}

void print_inventory(const SenseInventory& inventory, std::ostream& out) {
  out << inventory.query << ": " << inventory.clusters.size() << " sense(s) via " << to_string(inventory.algorithm)
      << '\n';
  for (const auto& c : inventory.clusters) {
    out << "  [" << c.id << "]";
    if (c.hub) out << " hub=" << *c.hub;
    out << ' ';
    for (std::size_t i = 0; i < c.lemmas.size(); ++i) out << (i ? ", " : "") << c.lemmas[i];
    out << '\n';
  }
}

int cmd_induce(const PipelineConfig& config, const Paths& paths, std::ostream& out) {
  const CoGraph graph = read_graph_file(paths.graph);
  const Serp serp = read_serp_file(paths, stopwords_from(config));
  const SenseInventory inventory = induce(config, paths, graph, serp);
  write_atomically(paths.output, [&](std::ostream& os) { write_inventory(inventory, os); });
  print_inventory(inventory, out);
  return 0;
}

int cmd_cluster(const PipelineConfig& config, const Paths& paths, std::ostream& out) {
  const CoGraph graph = read_graph_file(paths.graph);
  const Serp serp = read_serp_file(paths, stopwords_from(config));
  const SenseInventory inventory = induce(config, paths, graph, serp);
  const ClusteredSerp clustered = assign_senses(serp, inventory, config.assign);
  write_atomically(paths.output, [&](std::ostream& os) { write_clustered(clustered, os); });
  print_inventory(inventory, out);
  for (const auto& a : clustered.assignments) {
    out << "  result " << a.rank << " -> " << (a.sense_id ? std::to_string(*a.sense_id) : "unassigned")
        << " (score " << fixed(a.score, 3) << ")\n";
  }
  out << "populated clusters: " << clustered.n_populated_clusters << '\n';
  return 0;
}

int cmd_eval(const Paths& paths, std::ostream& out) {
  if (!paths.deviations.empty()) {
    auto in = open_input(paths.deviations);
    for (const auto& item : read_deviations(in)) {
      const double pct = deviation_percent(item.value, paths.average_senses);
      out << (item.label.empty() ? "-" : item.label) << '\t' << fixed(item.value, 3) << '\t' << fixed(pct, 1)
          << "%\t" << fixed(std::round(pct), 0) << "%\n";
    }
    return 0;
  }
  auto gold_in = open_input(paths.gold);
  const GoldSenseCounts gold = load_gold(gold_in);
  std::vector<ClusteredSerp> clustered;
  for (const auto& path : paths.clustered) {
    auto in = open_input(path);
    clustered.push_back(read_clustered(in));
  }
  const EvalReport report = evaluate(clustered, gold, parse_count_mode(paths.count_mode));
  print_report(report, out);
  if (!paths.json_output.empty()) {
    write_atomically(paths.json_output, [&](std::ostream& os) { write_report_json(report, os); });
  }
  return 0;
}

void add_filter_options(CLI::App& sub, PipelineConfig& config) {
  sub.add_option("--stopwords", config.stopword_path, "Stopword file, one lemma per line")->check(CLI::ExistingFile);
  sub.add_option("--pos", config.keep_pos, "POS tags to keep (tokens without a tag always pass)")
      ->delimiter(',')
      ->capture_default_str();
  sub.add_flag("--all-pos", config.all_pos, "Disable POS filtering");
  sub.add_flag("--require-cyrillic", config.require_cyrillic, "Drop lines without Cyrillic letters");
}

void add_stats_options(CLI::App& sub, PipelineConfig& config) {
  sub.add_option("--path-sample", config.path_sample, "BFS sources sampled for the average path length")
      ->capture_default_str();
  sub.add_flag("--exact-paths", config.exact_paths, "All-pairs BFS instead of sampling");
  sub.add_option("--seed", config.seed, "Seed for path-length sampling")->capture_default_str();
}

void add_query_options(CLI::App& sub, PipelineConfig& config, Paths& paths) {
  sub.add_option("--graph", paths.graph, "Co-occurrence graph file")->required()->check(CLI::ExistingFile);
  sub.add_option("--serp", paths.serp, "SERP file (.json or .tsv)")->required()->check(CLI::ExistingFile);
  sub.add_option("--serp-format", paths.serp_format, "auto, json or tsv")
      ->check(CLI::IsMember({"auto", "json", "tsv"}))
      ->capture_default_str();
  sub.add_option("-a,--algorithm", config.algorithm, "curvature or hyperlex")
      ->check(CLI::IsMember({"curvature", "hyperlex"}))
      ->capture_default_str();
  sub.add_option("--stopwords", config.stopword_path, "Stopwords removed from SERP lemmas")->check(CLI::ExistingFile);
  sub.add_option("--min-cond-prob", config.strong_links.min_cond_prob, "c(q,w)/c(q) threshold")->capture_default_str();
  sub.add_option("--min-dice-query", config.strong_links.min_dice_query, "Dice(q,w) threshold")->capture_default_str();
  sub.add_option("--min-dice-edge", config.strong_links.min_dice_edge, "Query graph edge threshold")
      ->capture_default_str();
  sub.add_option("--min-coefficient", config.curvature.min_coefficient, "Curvature clustering threshold")
      ->capture_default_str();
  sub.add_option("--min-norm-degree", config.hyperlex.min_norm_degree, "Hyperlex hub degree threshold")
      ->capture_default_str();
  sub.add_option("--min-avg-dice", config.hyperlex.min_avg_dice, "Hyperlex hub average Dice threshold")
      ->capture_default_str();
  sub.add_option("--min-hubs", config.hyperlex.min_hubs, "Hubs required before the walk may stop")
      ->capture_default_str();
  sub.add_flag("--drop-singletons", config.hyperlex.drop_singletons, "Drop one-lemma Hyperlex clusters");
  sub.add_flag("--keep-hubless", config.hyperlex.keep_hubless_components,
               "Keep Hyperlex components that contain no hub");
  sub.add_option("--dot", paths.dot_prefix, "Write Graphviz files with this path prefix");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  PipelineConfig config;
  Paths paths;

  CLI::App app{"Word sense induction and search result clustering over co-occurrence graphs", "senseclust"};
  app.set_config("--config", "", "TOML/INI configuration file; command-line flags take precedence");
  app.require_subcommand(1);

  auto* build = app.add_subcommand("build", "Build a co-occurrence graph from corpus files");
  build->add_option("corpus", config.corpus_paths, "Corpus files (one sentence per line)")
      ->required()
      ->check(CLI::ExistingFile);
  build->add_option("-o,--output", paths.output, "Graph file to write")->required();
  build->add_option("--threads", config.threads, "Worker threads")->capture_default_str();
  add_filter_options(*build, config);
  add_stats_options(*build, config);

  auto* stats = app.add_subcommand("stats", "Print graph statistics and the small-world check");
  stats->add_option("graph", paths.graph, "Graph file")->required()->check(CLI::ExistingFile);
  stats->add_option("--threads", config.threads, "Worker threads")->capture_default_str();
  add_stats_options(*stats, config);

  auto* induce_cmd = app.add_subcommand("induce", "Induce the sense inventory of a query");
  add_query_options(*induce_cmd, config, paths);
  induce_cmd->add_option("-o,--output", paths.output, "Inventory file to write")->required();

  auto* cluster = app.add_subcommand("cluster", "Induce senses and assign each search result to one");
  add_query_options(*cluster, config, paths);
  cluster->add_option("-o,--output", paths.output, "Clustered SERP file to write")->required();
  cluster->add_flag("--force-assign", config.assign.force_assign,
                    "Attach zero-overlap results to the first cluster");

  auto* eval = app.add_subcommand("eval", "Compare cluster counts with gold sense counts");
  eval->add_option("clustered", paths.clustered, "Clustered SERP files")->check(CLI::ExistingFile);
  auto* gold = eval->add_option("--gold", paths.gold, "Gold TSV: query<TAB>count")->check(CLI::ExistingFile);
  eval->add_option("--count-mode", paths.count_mode, "inventory or populated")
      ->check(CLI::IsMember({"inventory", "populated"}))
      ->capture_default_str();
  eval->add_option("--json", paths.json_output, "Also write the report as JSON");
  auto* deviations = eval->add_option("--deviations", paths.deviations,
                                      "Recompute percentages for a file of mean deviations")
                         ->check(CLI::ExistingFile);
  auto* average = eval->add_option("--average-senses", paths.average_senses,
                                   "Average gold senses per query (with --deviations)")
                      ->check(CLI::PositiveNumber);
  deviations->needs(average);
  average->needs(deviations);
  deviations->excludes(gold);

  try {
    app.parse(argc, argv);
    if (eval->parsed() && paths.deviations.empty() && (paths.gold.empty() || paths.clustered.empty())) {
      throw CLI::RequiredError("eval needs clustered files and --gold, or --deviations with --average-senses");
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (build->parsed()) return cmd_build(config, paths, out);
    if (stats->parsed()) return cmd_stats(config, paths, out);
    if (induce_cmd->parsed()) return cmd_induce(config, paths, out);
    if (cluster->parsed()) return cmd_cluster(config, paths, out);
    return cmd_eval(paths, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace senseclust::cli
