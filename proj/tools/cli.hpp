#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "senseclust/clusterer.hpp"
#include "senseclust/cograph.hpp"
#include "senseclust/querygraph.hpp"
#include "senseclust/wsi.hpp"

namespace senseclust::cli {

/// Everything a run of the pipeline can be configured with. Defaults are the
/// recommended thresholds.
struct PipelineConfig {
  StrongLinkParams strong_links;
  CurvatureParams curvature;
  HyperlexParams hyperlex;
  AssignOptions assign;

  std::vector<std::string> corpus_paths;
  std::string stopword_path;
  std::vector<std::string> keep_pos = {"N", "NOUN", "S"};
  bool all_pos = false;
  bool require_cyrillic = false;

  std::string algorithm = "hyperlex";
  std::size_t path_sample = 500;
  bool exact_paths = false;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

/// Entry point shared by the executable and the tests. Returns the process
/// exit code: 0 on success, 1 on a pipeline error, 2 on a usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace senseclust::cli
