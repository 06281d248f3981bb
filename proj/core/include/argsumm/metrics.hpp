// Copyright 2026 The argsumm Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "argsumm/corpus.hpp"
#include "argsumm/segment.hpp"

namespace argsumm {

/// Precision, recall and their harmonic mean (0 when both are 0).
struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  static Prf from_counts(double overlap, double candidate_total, double reference_total);
};

struct RougeScore {
  Prf r1;
  Prf r2;
  Prf rl;
};

/// Texts are tokenized with metric_tokens(): NFC, lowercase, punctuation
/// deleted, whitespace split. `stem` applies the Porter stemmer.
struct RougeOptions {
  bool stem = false;
};

/// Clipped n-gram overlap. Only n = 1 and n = 2 are accepted.
Prf rouge_n(std::string_view candidate, std::string_view reference, int n, const RougeOptions& options = {});
/// LCS-based precision/recall over tokens.
Prf rouge_l(std::string_view candidate, std::string_view reference, const RougeOptions& options = {});
RougeScore rouge(std::string_view candidate, std::string_view reference, const RougeOptions& options = {});

Prf rouge_n_tokens(std::span<const std::string> candidate, std::span<const std::string> reference, std::size_t n);
Prf rouge_l_tokens(std::span<const std::string> candidate, std::span<const std::string> reference);
std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b);

/// Percentage of summary n-gram types that are absent from the source n-gram
/// types. 0 when the summary has no n-grams.
double novel_ngrams(std::string_view summary, std::string_view source, std::size_t n);
/// Same, with the source given as separate texts; no n-gram spans two texts.
double novel_ngrams(std::string_view summary, std::span<const std::string> sources, std::size_t n);

/// The conversation's source texts: title, context, then post bodies.
std::vector<std::string> source_texts(const Conversation& conv);

/// word_count over title, context and all post bodies.
std::size_t input_length(const Conversation& conv);

/// Multi-document statistics of one conversation.
///
/// A semantic unit is a sentence's set of content words; unit overlap is the
/// F1 of two such sets.
///   inter_doc_similarity: for each ordered pair of posts (a, b), the mean over
///     units of a of their best overlap with a unit of b, averaged over pairs.
///     0 means no overlap, 1 means every unit has an exact match elsewhere.
///     Absent when fewer than two posts have units.
///   redundancy: 1 - clusters/units, where units are single-linkage clustered
///     at overlap >= 0.8. 0 means every unit occurs once.
///   layout_bias[s]: each post's metric tokens are cut into `segments` equal
///     spans; entry s is the mean over posts (with a non-empty span s) of the
///     ROUGE-1 recall of span s against the reference.
struct MdsStats {
  std::optional<double> inter_doc_similarity;
  double redundancy = 0.0;
  std::vector<double> layout_bias;
};

inline constexpr double kNearDuplicateOverlap = 0.8;

MdsStats mds_stats(const Conversation& conv, std::string_view reference, std::size_t segments,
                   const Segmenter& segmenter);
MdsStats mds_stats(const Conversation& conv, std::string_view reference, std::size_t segments = 4);

struct NovelNgramPct {
  double uni = 0.0;
  double bi = 0.0;
  double tri = 0.0;
};

/// Corpus-level report; every value is a mean of per-conversation values.
/// Summary-dependent fields cover only conversations with a reference.
struct CorpusStats {
  std::size_t examples = 0;
  std::size_t examples_with_reference = 0;
  double mean_input_tokens = 0.0;
  double mean_summary_tokens = 0.0;
  NovelNgramPct novel_ngram_pct;
  RougeScore oracle_rouge;
  std::optional<double> inter_doc_similarity;
  double redundancy = 0.0;
  std::vector<double> layout_bias;
};

}  // namespace argsumm
