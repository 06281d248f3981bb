// Copyright 2026 The argsumm Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "argsumm/metrics.hpp"
#include "argsumm/segment.hpp"

namespace argsumm {

/// Default extraction budget, the upper end of the reference summary length.
inline constexpr std::size_t kDefaultBudgetTokens = 90;

struct RankedSentence {
  Sentence sentence;
  double score = 0.0;
};

struct ExtractiveSummary {
  std::vector<Sentence> selected;      ///< source order
  std::vector<std::size_t> indices;    ///< positions of `selected` in the input
  std::size_t budget_tokens = 0;
};

using Matrix = std::vector<std::vector<double>>;

struct PowerIterationOptions {
  double damping = 0.85;
  double tol = 1e-8;
  std::size_t max_iterations = 100000;
};

/// Column-stochastic damped transition matrix of a non-negative weight
/// matrix: column j is row j of the weights normalized to sum 1 (uniform for
/// a zero row), mixed as damping * that + (1 - damping) / n.
Matrix transition_matrix(const Matrix& weights, double damping);

/// Power iteration from the uniform vector until the L1 change drops below
/// tol. The result is renormalized to sum 1.
std::vector<double> stationary_distribution(const Matrix& weights, const PowerIterationOptions& options);

/// Binarized TF-IDF cosine graph: 1 where cosine >= threshold (i != j).
/// Weights are raw term counts times idf = 1 + ln(N / df) over the N sentences.
Matrix lexrank_adjacency(std::span<const Sentence> sentences, double similarity_threshold);

/// Content-word overlap graph: |Si ∩ Sj| / (ln|Si| + ln|Sj|), with |S| the
/// content-word count; 0 when the normalizer is not positive.
Matrix textrank_weights(std::span<const Sentence> sentences);

/// Scores are aligned with the input and sum to 1.
std::vector<RankedSentence> lexrank(std::span<const Sentence> sentences, double damping = 0.85,
                                    double similarity_threshold = 0.1, double tol = 1e-8);
std::vector<RankedSentence> textrank(std::span<const Sentence> sentences, double damping = 0.85, double tol = 1e-8);

/// Visits sentences by descending score (ties in source order) and keeps each
/// one that still fits the word budget. If nothing fits, a positive budget
/// still takes the top-ranked sentence alone.
ExtractiveSummary extract_top(std::span<const RankedSentence> ranked, std::size_t budget_tokens);

struct OracleStep {
  std::size_t chosen = 0;  ///< input position added at this step
  double objective = 0.0;  ///< objective after adding it
};

struct OracleTrace {
  ExtractiveSummary summary;
  std::vector<OracleStep> steps;
};

/// Mean of ROUGE-1 and ROUGE-2 F1 of the selection (joined in source order)
/// against the reference.
double oracle_objective(std::span<const Sentence> sentences, std::span<const std::size_t> selection,
                        std::string_view reference);

/// Greedy extractive oracle: each step adds the sentence (within the budget)
/// that most increases oracle_objective, lowest position on ties, and stops
/// when no sentence strictly improves it.
OracleTrace extractive_oracle_trace(std::span<const Sentence> sentences, std::string_view reference,
                                    std::size_t budget_tokens);
ExtractiveSummary extractive_oracle(std::span<const Sentence> sentences, std::string_view reference,
                                    std::size_t budget_tokens = kDefaultBudgetTokens);

/// Selected sentences joined by single spaces.
std::string summary_text(const ExtractiveSummary& summary);

}  // namespace argsumm
