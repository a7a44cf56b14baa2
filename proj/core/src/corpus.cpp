#include "senseclust/corpus.hpp"

#include <limits>
#include <string>

#include "senseclust/error.hpp"

namespace senseclust {

std::span<const LemmaId> Corpus::sentence(std::size_t index) const {
  if (index >= sentence_count()) throw LookupError("sentence index out of range");
  return std::span<const LemmaId>(tokens_).subspan(offsets_[index],
                                                   offsets_[index + 1] - offsets_[index]);
}

std::optional<LemmaId> Corpus::find(std::string_view lemma) const {
  const auto it = index_.find(lemma);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint64_t Corpus::frequency(std::string_view lemma) const {
  const auto id = find(lemma);
  return id ? counts_[*id] : 0;
}

std::map<Lemma, std::uint64_t> Corpus::frequency_index() const {
  std::map<Lemma, std::uint64_t> index;
  for (LemmaId id = 0; id < vocabulary_.size(); ++id) index.emplace(vocabulary_[id], counts_[id]);
  return index;
}

std::vector<std::vector<Lemma>> Corpus::sentences() const {
  std::vector<std::vector<Lemma>> out;
  out.reserve(sentence_count());
  for (std::size_t i = 0; i < sentence_count(); ++i) {
    auto& s = out.emplace_back();
    for (LemmaId id : sentence(i)) s.push_back(vocabulary_[id]);
  }
  return out;
}

LemmaId Corpus::intern(std::string_view lemma) {
  if (const auto it = index_.find(lemma); it != index_.end()) return it->second;
  if (vocabulary_.size() >= std::numeric_limits<LemmaId>::max()) {
    throw Error("corpus vocabulary exceeds lemma id range");
  }
  const auto id = static_cast<LemmaId>(vocabulary_.size());
  vocabulary_.emplace_back(lemma);
  index_.emplace(Lemma(lemma), id);
  counts_.push_back(0);
  return id;
}

void Corpus::add_sentence(std::span<const std::string_view> lemmas) {
  if (lemmas.empty()) return;
  for (auto lemma : lemmas) {
    if (!is_valid_lemma(lemma)) throw FormatError("invalid lemma '" + std::string(lemma) + "'");
  }
  for (auto lemma : lemmas) {
    const LemmaId id = intern(lemma);
    ++counts_[id];
    tokens_.push_back(id);
  }
  offsets_.push_back(tokens_.size());
}

void Corpus::add_sentence(std::span<const Lemma> lemmas) {
  std::vector<std::string_view> views(lemmas.begin(), lemmas.end());
  add_sentence(std::span<const std::string_view>(views));
}

void Corpus::append(const Corpus& other) {
  std::vector<std::string_view> buffer;
  for (std::size_t i = 0; i < other.sentence_count(); ++i) {
    buffer.clear();
    for (LemmaId id : other.sentence(i)) buffer.push_back(other.lemma(id));
    add_sentence(std::span<const std::string_view>(buffer));
  }
}

Corpus Corpus::from_sentences(const std::vector<std::vector<Lemma>>& sentences) {
  Corpus corpus;
  for (const auto& s : sentences) corpus.add_sentence(std::span<const Lemma>(s));
  return corpus;
}

void load_corpus(std::istream& source, const FilterConfig& config, Corpus& into) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> lowered;
  std::vector<std::string_view> kept;
  while (std::getline(source, line)) {
    ++line_no;
    if (config.require_cyrillic && !contains_cyrillic(line)) continue;
    lowered.clear();
    for (auto token : split_whitespace(line)) {
      std::string_view lemma = token;
      std::optional<std::string_view> tag;
      if (const auto slash = token.find('/'); slash != std::string_view::npos) {
        if (token.find('/', slash + 1) != std::string_view::npos) {
          throw FormatError("token '" + std::string(token) + "' has more than one '/'", line_no);
        }
        lemma = token.substr(0, slash);
        tag = token.substr(slash + 1);
        if (tag->empty()) {
          throw FormatError("token '" + std::string(token) + "' has an empty POS tag", line_no);
        }
      }
      if (lemma.empty()) {
        throw FormatError("token '" + std::string(token) + "' has an empty lemma", line_no);
      }
      if (tag && config.keep_pos && !config.keep_pos->contains(*tag)) continue;
      std::string normalized = utf8_lowercase(lemma);
      if (config.stopwords.contains(normalized)) continue;
      lowered.push_back(std::move(normalized));
    }
    kept.assign(lowered.begin(), lowered.end());
    into.add_sentence(std::span<const std::string_view>(kept));
  }
}

Corpus load_corpus(std::istream& source, const FilterConfig& config) {
  Corpus corpus;
  load_corpus(source, config, corpus);
  return corpus;
}

std::set<Lemma, std::less<>> load_stopwords(std::istream& source) {
  std::set<Lemma, std::less<>> words;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(source, line)) {
    ++line_no;
    const auto word = trim(line);
    if (word.empty() || word.front() == '#') continue;
    if (!is_valid_lemma(word)) throw FormatError("stopword contains whitespace", line_no);
    words.insert(utf8_lowercase(word));
  }
  return words;
}

}  // namespace senseclust
