// Copyright 2026 The argsumm Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "argsumm/arggraph.hpp"
#include "argsumm/corpus.hpp"
#include "argsumm/segment.hpp"

namespace argsumm {

/// Default encoder budget for linearized inputs.
inline constexpr std::size_t kDefaultMaxTokens = 2048;

struct LinearizedGraph {
  std::string text;
  std::size_t token_count = 0;  ///< word_count(text)
  bool truncated = false;       ///< the budget cut the text short

  bool operator==(const LinearizedGraph&) const = default;
};

/// Surface forms of the rendering.
struct RenderOptions {
  std::string root_label = "CONVERSATION";
  std::string issue_label = "ISSUE";
  std::string arrow = " → ";
  std::string subtree_separator = " | ";
  std::string doc_separator = "<doc>";
};

/// Depth-first rendering from the root over reversed edges. Siblings are
/// visited by descending edge score (unscored edges last), then by sentence
/// index; an Issue sorts by its smallest member. Root subtrees are joined by
/// the subtree separator and nodes within a subtree by the arrow, so one
/// claim with one premise renders as "CONVERSATION → C → P".
///
/// With `max_tokens`, the result is the byte prefix of the full rendering
/// holding its first max_tokens whitespace tokens.
LinearizedGraph linearize(const ArgumentGraph& graph, std::optional<std::size_t> max_tokens = std::nullopt,
                          const RenderOptions& options = {});

/// Sentences joined by single spaces, with the doc separator token between
/// sentences of different posts.
LinearizedGraph render_filtered(std::span<const Sentence> sentences,
                                std::optional<std::size_t> max_tokens = std::nullopt,
                                const RenderOptions& options = {});

/// Post bodies joined by the doc separator token.
LinearizedGraph render_raw(const Conversation& conv, std::optional<std::size_t> max_tokens = std::nullopt,
                           const RenderOptions& options = {});

/// Applies a token budget to an already rendered text.
LinearizedGraph apply_budget(std::string text, std::optional<std::size_t> max_tokens);

}  // namespace argsumm
