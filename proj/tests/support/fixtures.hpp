#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "senseclust/graph.hpp"
#include "senseclust/querygraph.hpp"

namespace senseclust::testing {

// Portable draws: mt19937 output is fully specified, unlike the standard
// distributions.
inline std::size_t draw(std::mt19937& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }
inline double unit(std::mt19937& rng) { return static_cast<double>(rng()) / 4294967296.0; }

/// Two planted senses of "амур": a river vocabulary and a hockey-club
/// vocabulary. Every within-sense pair co-occurs, "город" bridges the two,
/// and four noise lemmas hang off the bridge only.
struct PlantedSenses {
  std::string query = "амур";
  std::vector<std::string> river = {"река",  "берег", "вода",   "рыба",  "лодка",
                                    "течение", "мост", "остров", "устье", "пристань"};
  std::vector<std::string> hockey = {"клуб",   "команда", "игра",   "болельщик", "матч",
                                     "стадион", "тренер",  "сезон", "шайба",     "хоккей"};
  std::string bridge = "город";
  std::vector<std::string> noise = {"новость", "сайт", "фото", "статья"};

  /// Exactly 200 sentences.
  std::vector<std::vector<std::string>> corpus(std::uint32_t seed = 7) const {
    std::vector<std::vector<std::string>> sentences;
    for (const auto* sense : {&river, &hockey}) {
      for (std::size_t i = 0; i < sense->size(); ++i) {
        for (std::size_t j = i + 1; j < sense->size(); ++j) sentences.push_back({(*sense)[i], (*sense)[j]});
      }
    }
    sentences.push_back({river[0], bridge, hockey[0]});
    sentences.push_back({river[1], bridge, hockey[1]});
    for (const auto& n : noise) sentences.push_back({bridge, n});

    std::mt19937 rng(seed);
    for (int s = 0; sentences.size() < 200; ++s) {
      const auto& sense = s % 2 == 0 ? river : hockey;
      const std::size_t length = 2 + draw(rng, 3);
      std::vector<std::string> sentence;
      while (sentence.size() < length) {
        const auto& word = sense[draw(rng, sense.size())];
        if (sentence.empty() || sentence.back() != word) sentence.push_back(word);
      }
      sentence.insert(sentence.begin() + static_cast<std::ptrdiff_t>(draw(rng, length + 1)), query);
      sentences.push_back(std::move(sentence));
    }
    return sentences;
  }

  /// Ten results; ranks 1-5 are about the river, 6-10 about the club.
  Serp serp() const {
    Serp s;
    s.query = query;
    auto doc = [&](int rank, std::vector<std::string> lemmas) {
      s.documents.push_back({rank, "title " + std::to_string(rank), "snippet", std::move(lemmas)});
    };
    doc(1, {"река", "берег", "новость", "карта"});
    doc(2, {"рыба", "лодка", "устье"});
    doc(3, {"мост", "город", "фото", "течение"});
    doc(4, {"остров", "пристань", "погода"});
    doc(5, {"вода", "река", "сезон", "течение"});
    doc(6, {"клуб", "матч", "сайт"});
    doc(7, {"болельщик", "стадион", "билет"});
    doc(8, {"тренер", "команда", "статья", "город"});
    doc(9, {"шайба", "хоккей", "игра"});
    doc(10, {"сезон", "клуб", "игра", "река"});
    return s;
  }

  bool is_river(const std::string& lemma) const {
    return std::find(river.begin(), river.end(), lemma) != river.end();
  }
};

/// Whitespace-joined lines for load_corpus.
inline std::string to_text(const std::vector<std::vector<std::string>>& sentences) {
  std::ostringstream out;
  for (const auto& s : sentences) {
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << '\n';
  }
  return out.str();
}

/// Zipf(s = 1) over `vocabulary` lemmas "w<rank>", sentence lengths 5..15.
inline std::string zipf_corpus_text(std::size_t tokens, std::size_t vocabulary, std::uint32_t seed) {
  std::vector<double> cdf(vocabulary);
  double total = 0.0;
  for (std::size_t r = 0; r < vocabulary; ++r) cdf[r] = (total += 1.0 / static_cast<double>(r + 1));
  for (auto& c : cdf) c /= total;

  std::mt19937 rng(seed);
  std::string text;
  text.reserve(tokens * 7);
  std::size_t emitted = 0;
  while (emitted < tokens) {
    const std::size_t length = std::min<std::size_t>(5 + draw(rng, 11), tokens - emitted);
    for (std::size_t i = 0; i < length; ++i) {
      const auto r = static_cast<std::size_t>(std::lower_bound(cdf.begin(), cdf.end(), unit(rng)) - cdf.begin());
      if (i) text.push_back(' ');
      text += 'w';
      text += std::to_string(std::min(r, vocabulary - 1));
    }
    text.push_back('\n');
    emitted += length;
  }
  return text;
}

/// Random graph on n vertices with edge probability p and weights drawn from
/// a small set so ties are common. When `connected`, a random spanning path
/// is added first.
inline std::vector<WeightedEdge> random_edges(std::mt19937& rng, std::size_t n, double p, bool connected) {
  std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
  std::vector<WeightedEdge> edges;
  auto add = [&](VertexId a, VertexId b) {
    if (a == b || present[a][b]) return;
    present[a][b] = present[b][a] = true;
    edges.push_back({std::min(a, b), std::max(a, b), 0.5 * static_cast<double>(1 + draw(rng, 6))});
  };
  if (connected && n > 1) {
    std::vector<VertexId> order(n);
    for (VertexId i = 0; i < n; ++i) order[i] = i;
    for (std::size_t i = n - 1; i > 0; --i) std::swap(order[i], order[draw(rng, i + 1)]);
    for (std::size_t i = 1; i < n; ++i) add(order[i - 1], order[i]);
  }
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (unit(rng) < p) add(a, b);
    }
  }
  return edges;
}

}  // namespace senseclust::testing
