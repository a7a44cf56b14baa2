#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "senseclust/text.hpp"

namespace senseclust {

using LemmaId = std::uint32_t;

/// Token filters applied while loading a corpus.
///
/// Tokens carrying a POS tag survive only if the tag is in `keep_pos`; tokens
/// without a tag are taken as already filtered and always pass. An empty
/// optional disables POS filtering altogether.
struct FilterConfig {
  std::set<Lemma, std::less<>> stopwords;
  std::optional<std::set<std::string, std::less<>>> keep_pos = default_noun_tags();
  /// Drop whole lines containing no Cyrillic letter.
  bool require_cyrillic = false;

  static std::set<std::string, std::less<>> default_noun_tags() { return {"N", "NOUN", "S"}; }
};

/// Lemmatized sentences with an interned vocabulary and frequency counts.
///
/// Lemma ids are assigned in order of first appearance. The corpus is
/// append-only; a fully built corpus is safe for concurrent reads.
class Corpus {
 public:
  std::size_t sentence_count() const noexcept { return offsets_.size() - 1; }
  std::size_t token_count() const noexcept { return tokens_.size(); }
  std::size_t vocabulary_size() const noexcept { return vocabulary_.size(); }
  bool empty() const noexcept { return tokens_.empty(); }

  std::span<const LemmaId> sentence(std::size_t index) const;
  const Lemma& lemma(LemmaId id) const { return vocabulary_.at(id); }
  std::optional<LemmaId> find(std::string_view lemma) const;

  /// c(w); 0 when `lemma` never occurs.
  std::uint64_t frequency(std::string_view lemma) const;
  std::uint64_t frequency(LemmaId id) const { return counts_.at(id); }

  std::map<Lemma, std::uint64_t> frequency_index() const;
  std::vector<std::vector<Lemma>> sentences() const;

  /// Appends one sentence; empty sentences are ignored. Lemmas must be valid.
  void add_sentence(std::span<const std::string_view> lemmas);
  void add_sentence(std::span<const Lemma> lemmas);

  /// Appends every sentence of `other` (frequencies add up).
  void append(const Corpus& other);

  static Corpus from_sentences(const std::vector<std::vector<Lemma>>& sentences);

  friend bool operator==(const Corpus& a, const Corpus& b) {
    return a.sentences() == b.sentences();
  }

 private:
  LemmaId intern(std::string_view lemma);

  struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };

  std::vector<Lemma> vocabulary_;
  std::unordered_map<Lemma, LemmaId, StringHash, std::equal_to<>> index_;
  std::vector<std::uint64_t> counts_;
  std::vector<LemmaId> tokens_;
  std::vector<std::size_t> offsets_{0};
};

/// Reads one sentence per line; tokens are `lemma` or `lemma/POS`.
/// Lemmas are lowercased. Lines that end up empty are dropped.
/// Throws FormatError (with the line number) for a token with an empty lemma,
/// an empty tag, or more than one '/'.
Corpus load_corpus(std::istream& source, const FilterConfig& config);

/// Same, appending into an existing corpus.
void load_corpus(std::istream& source, const FilterConfig& config, Corpus& into);

/// One lemma per line; blank lines and lines starting with '#' are skipped.
std::set<Lemma, std::less<>> load_stopwords(std::istream& source);

inline std::uint64_t frequency(const Corpus& corpus, std::string_view lemma) {
  return corpus.frequency(lemma);
}

}  // namespace senseclust
