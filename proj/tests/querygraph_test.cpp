#include "senseclust/querygraph.hpp"

#include <random>

#include "gtest/gtest.h"
#include "senseclust/error.hpp"
#include "support/fixtures.hpp"

namespace senseclust {
namespace {

Serp serp_of(std::string query, std::vector<std::vector<std::string>> docs) {
  Serp serp;
  serp.query = std::move(query);
  int rank = 1;
  for (auto& lemmas : docs) serp.documents.push_back({rank++, "", "", std::move(lemmas)});
  return serp;
}

TEST(StrongNeighborsTest, BothConstraintsHold) {
  // c(q)=100, c(q,w)=5, c(w)=100: cond 0.05, Dice 0.05.
  const CoGraph g = CoGraph::from_counts({{"q", 100}, {"w", 100}}, {{0, 1, 5}});
  EXPECT_EQ(strong_neighbors(g, "q", {}), (LemmaSet{"w"}));
}

TEST(StrongNeighborsTest, ConditionalProbabilityFails) {
  // c(q)=1000, c(q,w)=5, c(w)=10: cond 0.005 < 0.01 although Dice 10/1010 passes.
  const CoGraph g = CoGraph::from_counts({{"q", 1000}, {"w", 10}}, {{0, 1, 5}});
  EXPECT_GE(dice(g, "q", "w"), 0.005);
  EXPECT_TRUE(strong_neighbors(g, "q", {}).empty());
}

TEST(StrongNeighborsTest, DiceFails) {
  // cond 0.5 but Dice 2*5/(10+5000) < 0.005
  const CoGraph g = CoGraph::from_counts({{"q", 10}, {"w", 5000}}, {{0, 1, 5}});
  EXPECT_TRUE(strong_neighbors(g, "q", {}).empty());
}

TEST(StrongNeighborsTest, AbsentQuery) {
  const CoGraph g = CoGraph::from_counts({{"a", 1}, {"b", 1}}, {{0, 1, 1}});
  EXPECT_TRUE(strong_neighbors(g, "q", {}).empty());
}

TEST(BuildQueryGraphTest, CutoffAndIsolatedPruning) {
  // Dice a-b = 4/200 = 0.02, a-c = 6/2000 = 0.003, b-c absent.
  const CoGraph g = CoGraph::from_counts({{"a", 100}, {"b", 100}, {"c", 1900}}, {{0, 1, 2}, {0, 2, 3}});
  const QueryGraph gq = build_query_graph(g, serp_of("q", {{"a", "b", "c"}}), {});
  ASSERT_EQ(gq.vertex_count(), 2u);
  EXPECT_EQ(gq.lemma(0), "a");
  EXPECT_EQ(gq.lemma(1), "b");
  EXPECT_FALSE(gq.find("c"));
  EXPECT_DOUBLE_EQ(gq.weight("a", "b"), 0.02);
  EXPECT_EQ(gq.vertex(0).corpus_freq, 100u);
  EXPECT_EQ(gq.vertex(0).origin, Origin::serp);
}

TEST(BuildQueryGraphTest, NoEdgesIsAnError) {
  const CoGraph g = CoGraph::from_counts({{"a", 1}, {"b", 1}, {"c", 1}}, {{0, 1, 1}});
  EXPECT_THROW(build_query_graph(g, serp_of("q", {{"a"}, {"c", "z"}}), {}), EmptyQueryGraphError);
}

TEST(BuildQueryGraphTest, CorpusOriginVertices) {
  // q strongly linked to s; s links to serp lemma a.
  const CoGraph g =
      CoGraph::from_counts({{"a", 10}, {"q", 10}, {"s", 10}}, {{1, 2, 5}, {0, 2, 5}});
  const QueryGraph gq = build_query_graph(g, serp_of("q", {{"a"}}), {});
  ASSERT_EQ(gq.vertex_count(), 2u);
  EXPECT_EQ(gq.vertex(*gq.find("s")).origin, Origin::corpus);
  EXPECT_EQ(gq.vertex(*gq.find("a")).origin, Origin::serp);
  EXPECT_FALSE(gq.find("q"));
}

TEST(BuildQueryGraphTest, SerpOriginWinsOnOverlap) {
  const CoGraph g = CoGraph::from_counts({{"a", 10}, {"q", 10}, {"s", 10}}, {{1, 2, 5}, {0, 2, 5}});
  const QueryGraph gq = build_query_graph(g, serp_of("q", {{"a", "s"}}), {});
  EXPECT_EQ(gq.vertex(*gq.find("s")).origin, Origin::serp);
}

TEST(NormalizeSerpTest, LowercasesAndRemovesQueryAndStopwords) {
  Serp serp = serp_of("Амур", {{"Река", "амур", "и"}, {"клуб"}});
  normalize_serp(serp, LemmaSet{"и"});
  EXPECT_EQ(serp.query, "амур");
  EXPECT_EQ(serp.documents[0].lemmas, (std::vector<Lemma>{"река"}));
}

TEST(NormalizeSerpTest, RejectsBadInput) {
  Serp multi = serp_of("два слова", {});
  EXPECT_THROW(normalize_serp(multi), FormatError);
  Serp dup = serp_of("q", {{"a"}, {"b"}});
  dup.documents[1].rank = 1;
  EXPECT_THROW(normalize_serp(dup), FormatError);
  Serp zero = serp_of("q", {{"a"}});
  zero.documents[0].rank = 0;
  EXPECT_THROW(normalize_serp(zero), FormatError);
}

TEST(StrongLinkParamsTest, Validation) {
  EXPECT_NO_THROW(StrongLinkParams{}.validate());
  EXPECT_THROW((StrongLinkParams{0.0, 0.005, 0.005}.validate()), Error);
  EXPECT_THROW((StrongLinkParams{0.01, 1.0, 0.005}.validate()), Error);
}

TEST(QueryGraphTest, RejectsQueryAsVertex) {
  EXPECT_THROW(QueryGraph("q", {{"q", Origin::serp, 1}, {"a", Origin::serp, 1}}, {{0, 1, 0.5}}), Error);
}

// Random co-occurrence graphs and SERPs: structural invariants plus
// monotonicity in every threshold.
TEST(QueryGraphProperty, InvariantsAndMonotonicity) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 3 + testing::draw(rng, 12);
    std::vector<std::pair<Lemma, std::uint64_t>> vertices;
    for (std::size_t i = 0; i < n; ++i) vertices.emplace_back("l" + std::to_string(i), 1 + testing::draw(rng, 400));
    vertices.emplace_back("q", 50 + testing::draw(rng, 400));
    std::vector<CoEdgeCount> edges;
    for (VertexId a = 0; a <= n; ++a) {
      for (VertexId b = a + 1; b <= n; ++b) {
        if (testing::unit(rng) < 0.4) {
          const auto cap = std::min(vertices[a].second, vertices[b].second);
          edges.push_back({a, b, 1 + testing::draw(rng, cap)});
        }
      }
    }
    const CoGraph g = CoGraph::from_counts(vertices, edges);
    Serp serp;
    serp.query = "q";
    for (int d = 1; d <= 4; ++d) {
      auto& doc = serp.documents.emplace_back(SerpDocument{d, "", "", {}});
      for (std::size_t k = 0; k < 3; ++k) doc.lemmas.push_back("l" + std::to_string(testing::draw(rng, n)));
    }

    StrongLinkParams params{0.01 + 0.1 * testing::unit(rng), 0.005 + 0.05 * testing::unit(rng),
                            0.005 + 0.05 * testing::unit(rng)};
    auto build = [&](const StrongLinkParams& p) -> std::optional<QueryGraph> {
      try {
        return build_query_graph(g, serp, p);
      } catch (const EmptyQueryGraphError&) {
        return std::nullopt;
      }
    };
    auto corpus_vertices = [](const std::optional<QueryGraph>& gq) {
      std::size_t count = 0;
      if (gq) {
        for (const auto& v : gq->vertices()) count += v.origin == Origin::corpus ? 1 : 0;
      }
      return count;
    };
    const auto gq = build(params);
    if (gq) {
      EXPECT_EQ(gq, build(params));
      EXPECT_FALSE(gq->find("q"));
      for (VertexId v = 0; v < gq->vertex_count(); ++v) EXPECT_GT(gq->degree(v), 0u);
      for (const auto& e : gq->graph().edges()) {
        EXPECT_EQ(e.weight, dice(g, gq->lemma(e.u), gq->lemma(e.v)));
        EXPECT_GE(e.weight, params.min_dice_edge);
      }
    }
    StrongLinkParams stricter_edge = params;
    stricter_edge.min_dice_edge *= 2.0;
    const auto tighter = build(stricter_edge);
    EXPECT_LE(tighter ? tighter->edge_count() : 0, gq ? gq->edge_count() : 0);

    StrongLinkParams stricter_cond = params;
    stricter_cond.min_cond_prob *= 2.0;
    StrongLinkParams stricter_qdice = params;
    stricter_qdice.min_dice_query *= 2.0;
    EXPECT_LE(strong_neighbors(g, "q", stricter_cond).size(), strong_neighbors(g, "q", params).size());
    EXPECT_LE(strong_neighbors(g, "q", stricter_qdice).size(), strong_neighbors(g, "q", params).size());
    EXPECT_LE(corpus_vertices(build(stricter_cond)), corpus_vertices(gq));
    EXPECT_LE(corpus_vertices(build(stricter_qdice)), corpus_vertices(gq));
  }
}

}  // namespace
}  // namespace senseclust
