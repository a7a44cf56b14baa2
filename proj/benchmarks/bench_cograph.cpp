#include <benchmark/benchmark.h>

#include <map>
#include <sstream>

#include "senseclust/cograph.hpp"
#include "senseclust/graph_algorithms.hpp"
#include "senseclust/querygraph.hpp"
#include "senseclust/wsi.hpp"
#include "support/fixtures.hpp"

namespace {

using namespace senseclust;

const Corpus& zipf_corpus(std::size_t tokens) {
  static std::map<std::size_t, Corpus> cache;
  auto it = cache.find(tokens);
  if (it == cache.end()) {
    std::istringstream in(testing::zipf_corpus_text(tokens, 30'000, 99));
    it = cache.emplace(tokens, load_corpus(in, FilterConfig{})).first;
  }
  return it->second;
}

void BM_LoadCorpus(benchmark::State& state) {
  const std::string text = testing::zipf_corpus_text(static_cast<std::size_t>(state.range(0)), 30'000, 99);
  for (auto _ : state) {
    std::istringstream in(text);
    benchmark::DoNotOptimize(load_corpus(in, FilterConfig{}));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LoadCorpus)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_BuildGraph(benchmark::State& state) {
  const Corpus& corpus = zipf_corpus(1'000'000);
  for (auto _ : state) benchmark::DoNotOptimize(build_cooccurrence_graph(corpus, static_cast<unsigned>(state.range(0))));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus.token_count()));
}
BENCHMARK(BM_BuildGraph)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ClusteringCoefficients(benchmark::State& state) {
  static const CoGraph graph = build_cooccurrence_graph(zipf_corpus(1'000'000));
  for (auto _ : state) benchmark::DoNotOptimize(local_clustering_coefficients(graph.topology()));
}
BENCHMARK(BM_ClusteringCoefficients)->Unit(benchmark::kMillisecond);

void BM_SampledPathLength(benchmark::State& state) {
  static const CoGraph graph = build_cooccurrence_graph(zipf_corpus(1'000'000));
  for (auto _ : state) {
    benchmark::DoNotOptimize(average_path_length(graph.topology(), static_cast<std::size_t>(state.range(0)), 1, 1));
  }
}
BENCHMARK(BM_SampledPathLength)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_InduceSenses(benchmark::State& state) {
  const testing::PlantedSenses planted;
  std::istringstream in(testing::to_text(planted.corpus()));
  const CoGraph graph = build_cooccurrence_graph(load_corpus(in, FilterConfig{}));
  Serp serp = planted.serp();
  normalize_serp(serp);
  for (auto _ : state) {
    const QueryGraph gq = build_query_graph(graph, serp, {});
    benchmark::DoNotOptimize(curvature_induce(gq, {}));
    benchmark::DoNotOptimize(hyperlex_induce(gq, planted.query, {}));
  }
}
BENCHMARK(BM_InduceSenses);

}  // namespace

BENCHMARK_MAIN();
