// Copyright 2026 The argsumm Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace argsumm {

/// NFC-normalizes UTF-8 text. Throws DataError on invalid UTF-8.
std::string nfc(std::string_view utf8);

/// Number of maximal runs of non-whitespace code points after NFC
/// normalization. Whitespace is the Unicode White_Space property.
std::size_t word_count(std::string_view text);

/// The whitespace-delimited tokens counted by word_count().
std::vector<std::string> whitespace_tokens(std::string_view text);

/// Byte offset just past the `max_tokens`-th whitespace token of `text`, or
/// text.size() when the text has at most `max_tokens` tokens. Trailing
/// whitespace after the last kept token is excluded.
/// Token boundaries are the same before and after NFC, so any text works.
std::size_t token_prefix_end(std::string_view text, std::size_t max_tokens);

/// Tokenization shared by all metrics: NFC, lowercase, delete every
/// punctuation code point, split on whitespace. With `stem`, each token is
/// Porter-stemmed.
std::vector<std::string> metric_tokens(std::string_view text, bool stem = false);

/// Metric tokens with English stopwords removed.
std::vector<std::string> content_words(std::string_view text);

bool is_stopword(std::string_view lowercase_token);

/// Classic Porter (1980) suffix-stripping stemmer for lowercase ASCII words.
/// Words containing non-ASCII letters are returned unchanged.
std::string porter_stem(std::string_view word);

}  // namespace argsumm
