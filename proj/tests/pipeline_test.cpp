#include <sstream>

#include "gtest/gtest.h"
#include "senseclust/clusterer.hpp"
#include "senseclust/cograph.hpp"
#include "senseclust/querygraph.hpp"
#include "senseclust/wsi.hpp"
#include "support/fixtures.hpp"

namespace senseclust {
namespace {

struct Outcome {
  std::size_t clusters = 0;
  int correct = 0;
};

Outcome run(const SenseInventory& inventory, const testing::PlantedSenses& planted, const Serp& serp) {
  std::vector<bool> river_cluster;
  for (const auto& c : inventory.clusters) {
    std::size_t river = 0;
    for (const auto& l : c.lemmas) river += planted.is_river(l) ? 1 : 0;
    river_cluster.push_back(2 * river > c.lemmas.size());
  }
  const auto clustered = assign_senses(serp, inventory);
  Outcome out{inventory.clusters.size(), 0};
  for (const auto& a : clustered.assignments) {
    if (a.sense_id && river_cluster[*a.sense_id] == (a.rank <= 5)) ++out.correct;
  }
  return out;
}

class PlantedSensesTest : public ::testing::Test {
 protected:
  void SetUp() override {
    std::istringstream in(testing::to_text(planted.corpus()));
    corpus = load_corpus(in, FilterConfig{});
    graph = build_cooccurrence_graph(corpus);
    serp = planted.serp();
    normalize_serp(serp);
    gq = build_query_graph(graph, serp, {});
  }

  testing::PlantedSenses planted;
  Corpus corpus;
  CoGraph graph;
  Serp serp;
  QueryGraph gq;
};

TEST_F(PlantedSensesTest, CorpusShape) {
  EXPECT_EQ(corpus.sentence_count(), 200u);
  EXPECT_FALSE(gq.find("амур"));
  EXPECT_TRUE(gq.find("город"));
}

TEST_F(PlantedSensesTest, CurvatureRecoversBothSenses) {
  const auto outcome = run(curvature_induce(gq, {}), planted, serp);
  EXPECT_EQ(outcome.clusters, 2u);
  EXPECT_GE(outcome.correct, 9);
}

TEST_F(PlantedSensesTest, HyperlexRecoversBothSenses) {
  const auto outcome = run(hyperlex_induce(gq, planted.query, {}), planted, serp);
  EXPECT_EQ(outcome.clusters, 2u);
  EXPECT_GE(outcome.correct, 9);
}

}  // namespace
}  // namespace senseclust
