// Copyright 2026 The argsumm Authors.
// SPDX-License-Identifier: Apache-2.0

#include "argsumm/text.hpp"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <iterator>

#include "argsumm/error.hpp"

namespace argsumm {
namespace {

bool IsAscii(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return static_cast<unsigned char>(c) < 0x80; });
}

void ValidateUtf8(std::string_view s) {
  const auto* bytes = reinterpret_cast<const uint8_t*>(s.data());
  const auto length = static_cast<int32_t>(s.size());
  int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    if (c < 0) throw DataError("invalid UTF-8 byte sequence at offset " + std::to_string(i));
  }
}

// Calls fn(code_point, begin, end) for each code point of valid UTF-8 text.
template <typename Fn>
void ForEachCodePoint(std::string_view s, Fn&& fn) {
  const auto* bytes = reinterpret_cast<const uint8_t*>(s.data());
  const auto length = static_cast<int32_t>(s.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t begin = i;
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    if (c < 0) c = 0xFFFD;
    fn(c, static_cast<std::size_t>(begin), static_cast<std::size_t>(i));
  }
}

// Sorted for binary search. Negations are deliberately absent: the
// heuristic scorer depends on seeing them.
constexpr std::string_view kStopwords[] = {
    "a",       "about",   "above",  "after",   "again",   "all",     "also",    "am",      "an",
    "and",     "any",     "are",    "as",      "at",      "be",      "because", "been",    "before",
    "being",   "below",   "between", "both",   "but",     "by",      "can",     "could",   "did",
    "do",      "does",    "doing",  "down",    "during",  "each",    "few",     "for",     "from",
    "further", "had",     "has",    "have",    "having",  "he",      "her",     "here",    "hers",
    "herself", "him",     "himself", "his",    "how",     "i",       "if",      "in",      "into",
    "is",      "it",      "its",    "itself",  "just",    "me",      "might",   "more",    "most",
    "my",      "myself",  "of",     "off",     "on",      "once",    "only",    "or",      "other",
    "our",     "ours",    "out",    "over",    "own",     "same",    "she",     "should",  "so",
    "some",    "such",    "than",   "that",    "the",     "their",   "theirs",  "them",    "then",
    "there",   "these",   "they",   "this",    "those",   "through", "to",      "too",     "under",
    "until",   "up",      "us",     "very",    "was",     "we",      "were",    "what",    "when",
    "where",   "which",   "while",  "who",     "whom",    "why",     "will",    "with",    "would",
    "you",     "your",    "yours",  "yourself", "yourselves", "im",  "ive",     "youre",
    "thats",
};

}  // namespace

std::string nfc(std::string_view utf8) {
  if (IsAscii(utf8)) return std::string(utf8);
  ValidateUtf8(utf8);
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* normalizer = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw InternalError(std::string("ICU NFC normalizer unavailable: ") + u_errorName(status));
  const auto source = icu::UnicodeString::fromUTF8(icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  const icu::UnicodeString normalized = normalizer->normalize(source, status);
  if (U_FAILURE(status)) throw DataError(std::string("NFC normalization failed: ") + u_errorName(status));
  std::string out;
  normalized.toUTF8String(out);
  return out;
}

std::size_t word_count(std::string_view text) {
  const std::string normalized = nfc(text);
  std::size_t count = 0;
  bool in_token = false;
  ForEachCodePoint(normalized, [&](UChar32 c, std::size_t, std::size_t) {
    const bool space = u_isUWhiteSpace(c);
    if (!space && !in_token) ++count;
    in_token = !space;
  });
  return count;
}

std::vector<std::string> whitespace_tokens(std::string_view text) {
  const std::string normalized = nfc(text);
  std::vector<std::string> tokens;
  std::size_t start = std::string::npos;
  ForEachCodePoint(normalized, [&](UChar32 c, std::size_t begin, std::size_t) {
    if (u_isUWhiteSpace(c)) {
      if (start != std::string::npos) tokens.emplace_back(normalized.substr(start, begin - start));
      start = std::string::npos;
    } else if (start == std::string::npos) {
      start = begin;
    }
  });
  if (start != std::string::npos) tokens.emplace_back(normalized.substr(start));
  return tokens;
}

std::size_t token_prefix_end(std::string_view text, std::size_t max_tokens) {
  std::size_t seen = 0;
  bool in_token = false;
  std::size_t cut = text.size();
  bool done = false;
  ForEachCodePoint(text, [&](UChar32 c, std::size_t begin, std::size_t) {
    if (done) return;
    const bool space = u_isUWhiteSpace(c);
    if (!space && !in_token) {
      if (seen == max_tokens) {
        cut = begin;
        done = true;
        return;
      }
      ++seen;
    }
    in_token = !space;
  });
  if (!done) return text.size();
  // Drop the whitespace separating the kept prefix from the next token.
  while (cut > 0) {
    std::size_t prev = cut - 1;
    while (prev > 0 && (static_cast<unsigned char>(text[prev]) & 0xC0) == 0x80) --prev;
    UChar32 c;
    int32_t i = static_cast<int32_t>(prev);
    U8_NEXT(reinterpret_cast<const uint8_t*>(text.data()), i, static_cast<int32_t>(text.size()), c);
    if (c < 0 || !u_isUWhiteSpace(c)) break;
    cut = prev;
  }
  return cut;
}

std::vector<std::string> metric_tokens(std::string_view text, bool stem) {
  const std::string normalized = nfc(text);
  std::string lowered;
  if (IsAscii(normalized)) {
    lowered = normalized;
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; });
  } else {
    auto u = icu::UnicodeString::fromUTF8(icu::StringPiece(normalized.data(), static_cast<int32_t>(normalized.size())));
    u.toLower(icu::Locale::getRoot());
    u.toUTF8String(lowered);
  }

  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (current.empty()) return;
    tokens.push_back(stem ? porter_stem(current) : current);
    current.clear();
  };
  ForEachCodePoint(lowered, [&](UChar32 c, std::size_t begin, std::size_t end) {
    if (u_isUWhiteSpace(c)) {
      flush();
    } else if (!u_ispunct(c)) {
      current.append(lowered, begin, end - begin);
    }
  });
  flush();
  return tokens;
}

bool is_stopword(std::string_view lowercase_token) {
  static const auto sorted = [] {
    std::vector<std::string_view> words(std::begin(kStopwords), std::end(kStopwords));
    std::sort(words.begin(), words.end());
    return words;
  }();
  return std::binary_search(sorted.begin(), sorted.end(), lowercase_token);
}

std::vector<std::string> content_words(std::string_view text) {
  auto tokens = metric_tokens(text);
  std::erase_if(tokens, [](const std::string& t) { return is_stopword(t); });
  return tokens;
}

}  // namespace argsumm
