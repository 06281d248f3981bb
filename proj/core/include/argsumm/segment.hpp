// Copyright 2026 The argsumm Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "argsumm/corpus.hpp"

namespace argsumm {

/// Half-open byte range [begin, end) into a post body.
struct CharSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const CharSpan&) const = default;
};

/// A sentence-level argumentative unit.
struct Sentence {
  std::size_t doc_index = 0;   ///< Post position in the conversation.
  std::size_t sent_index = 0;  ///< Sentence position in the post.
  std::string text;
  CharSpan char_span;

  bool operator==(const Sentence&) const = default;
};

/// Rule-based sentence splitter.
///
/// A boundary follows a run of terminal punctuation (`.`, `!`, `?`), plus any
/// closing quotes or brackets, when whitespace comes next and the following
/// character is uppercase, a digit or an opening quote/bracket. A run that is
/// an ellipsis ("..", "...", "…") never splits, and neither does a period
/// ending a token from the abbreviation list. Semicolons never split.
class Segmenter {
 public:
  /// Uses the abbreviation list bundled with the library.
  Segmenter();
  explicit Segmenter(std::unordered_set<std::string> abbreviations);

  /// Reads one lowercase abbreviation per line (without the final period);
  /// blank lines and lines starting with '#' are ignored.
  static Segmenter from_file(const std::filesystem::path& path);
  static std::unordered_set<std::string> parse_abbreviations(std::string_view contents);

  /// Splits `body`; a body with no boundary yields one sentence. Returns an
  /// empty list only for a whitespace-only body.
  std::vector<Sentence> segment_post(std::string_view body, std::size_t doc_index = 0) const;

  /// One sentence list per post. Throws DataError if a post has no sentences.
  std::vector<std::vector<Sentence>> segment_conversation(const Conversation& conv) const;

  const std::unordered_set<std::string>& abbreviations() const { return abbreviations_; }

 private:
  bool IsAbbreviation(std::string_view body, std::size_t period_pos) const;

  std::unordered_set<std::string> abbreviations_;
};

/// Free-function forms using a default Segmenter.
std::vector<Sentence> segment_post(std::string_view body);
std::vector<std::vector<Sentence>> segment_conversation(const Conversation& conv);

/// Concatenation of per-post lists in (doc_index, sent_index) order.
std::vector<Sentence> flatten(const std::vector<std::vector<Sentence>>& per_post);

}  // namespace argsumm
