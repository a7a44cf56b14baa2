#pragma once

#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace senseclust {

/// A lemmatized word form. Compared by exact byte equality.
using Lemma = std::string;
using LemmaSet = std::set<Lemma, std::less<>>;

/// Lowercases ASCII, Latin-1 and Cyrillic letters in a UTF-8 string.
/// Invalid byte sequences are copied through unchanged.
std::string utf8_lowercase(std::string_view text);

/// True when `text` contains at least one code point in U+0400..U+04FF.
bool contains_cyrillic(std::string_view text);

/// Non-empty and free of ASCII whitespace.
bool is_valid_lemma(std::string_view text) noexcept;

/// Splits on runs of ASCII whitespace; no empty fields.
std::vector<std::string_view> split_whitespace(std::string_view line);

/// Splits on every occurrence of `sep`; keeps empty fields.
std::vector<std::string_view> split(std::string_view line, char sep);

std::string_view trim(std::string_view text) noexcept;

}  // namespace senseclust
