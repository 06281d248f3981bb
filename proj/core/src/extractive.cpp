// Copyright 2026 The argsumm Authors.
// SPDX-License-Identifier: Apache-2.0

#include "argsumm/extractive.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "argsumm/error.hpp"
#include "argsumm/text.hpp"

namespace argsumm {
namespace {

std::vector<RankedSentence> Attach(std::span<const Sentence> sentences, const std::vector<double>& scores) {
  std::vector<RankedSentence> out;
  out.reserve(sentences.size());
  for (std::size_t i = 0; i < sentences.size(); ++i) out.push_back({sentences[i], scores[i]});
  return out;
}

std::vector<std::string> JoinedTokens(std::span<const Sentence> sentences, std::span<const std::size_t> selection) {
  std::vector<std::size_t> ordered(selection.begin(), selection.end());
  std::sort(ordered.begin(), ordered.end());
  std::vector<std::string> tokens;
  for (auto i : ordered) {
    auto t = metric_tokens(sentences[i].text);
    tokens.insert(tokens.end(), std::make_move_iterator(t.begin()), std::make_move_iterator(t.end()));
  }
  return tokens;
}

double Objective(const std::vector<std::string>& candidate, const std::vector<std::string>& reference) {
  return 0.5 * (rouge_n_tokens(candidate, reference, 1).f1 + rouge_n_tokens(candidate, reference, 2).f1);
}

ExtractiveSummary MakeSummary(std::span<const Sentence> sentences, std::vector<std::size_t> indices,
                              std::size_t budget) {
  std::sort(indices.begin(), indices.end());
  ExtractiveSummary summary;
  summary.budget_tokens = budget;
  for (auto i : indices) summary.selected.push_back(sentences[i]);
  summary.indices = std::move(indices);
  return summary;
}

}  // namespace

Matrix transition_matrix(const Matrix& weights, double damping) {
  const std::size_t n = weights.size();
  Matrix m(n, std::vector<double>(n, 0.0));
  const double teleport = n > 0 ? (1.0 - damping) / static_cast<double>(n) : 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (weights[i].size() != n) throw InternalError("weight matrix is not square");
    const double row_sum = std::accumulate(weights[i].begin(), weights[i].end(), 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      const double step = row_sum > 0.0 ? weights[i][j] / row_sum : 1.0 / static_cast<double>(n);
      m[j][i] = damping * step + teleport;
    }
  }
  return m;
}

std::vector<double> stationary_distribution(const Matrix& weights, const PowerIterationOptions& options) {
  const std::size_t n = weights.size();
  if (n == 0) return {};
  const Matrix m = transition_matrix(weights, options.damping);
  std::vector<double> p(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n);
  for (std::size_t iter = 0; iter < options.max_iterations; ++iter) {
    double change = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) acc += m[j][i] * p[i];
      next[j] = acc;
    }
    for (std::size_t j = 0; j < n; ++j) change += std::abs(next[j] - p[j]);
    p.swap(next);
    if (change < options.tol) break;
  }
  const double total = std::accumulate(p.begin(), p.end(), 0.0);
  for (auto& v : p) v /= total;
  return p;
}

Matrix lexrank_adjacency(std::span<const Sentence> sentences, double similarity_threshold) {
  const std::size_t n = sentences.size();
  std::vector<std::map<std::string, double>> tf(n);
  std::map<std::string, std::size_t> df;
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& t : metric_tokens(sentences[i].text)) tf[i][t] += 1.0;
    for (const auto& [term, count] : tf[i]) ++df[term];
  }
  std::vector<std::map<std::string, double>> vec(n);
  std::vector<double> norm(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [term, count] : tf[i]) {
      const double w = count * (1.0 + std::log(static_cast<double>(n) / static_cast<double>(df[term])));
      vec[i][term] = w;
      norm[i] += w * w;
    }
    norm[i] = std::sqrt(norm[i]);
  }
  Matrix adj(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (norm[i] == 0.0 || norm[j] == 0.0) continue;
      double dot = 0.0;
      for (const auto& [term, w] : vec[i]) {
        if (const auto it = vec[j].find(term); it != vec[j].end()) dot += w * it->second;
      }
      if (dot / (norm[i] * norm[j]) >= similarity_threshold) adj[i][j] = adj[j][i] = 1.0;
    }
  }
  return adj;
}

Matrix textrank_weights(std::span<const Sentence> sentences) {
  const std::size_t n = sentences.size();
  std::vector<std::set<std::string>> sets(n);
  std::vector<std::size_t> lengths(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto words = content_words(sentences[i].text);
    lengths[i] = words.size();
    sets[i].insert(words.begin(), words.end());
  }
  Matrix w(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (lengths[i] == 0 || lengths[j] == 0) continue;
      const double denom = std::log(static_cast<double>(lengths[i])) + std::log(static_cast<double>(lengths[j]));
      if (!(denom > 0.0)) continue;
      std::size_t overlap = 0;
      for (const auto& word : sets[i]) overlap += sets[j].count(word);
      w[i][j] = w[j][i] = static_cast<double>(overlap) / denom;
    }
  }
  return w;
}

std::vector<RankedSentence> lexrank(std::span<const Sentence> sentences, double damping, double similarity_threshold,
                                    double tol) {
  if (sentences.empty()) return {};
  const auto scores = stationary_distribution(lexrank_adjacency(sentences, similarity_threshold), {damping, tol});
  return Attach(sentences, scores);
}

std::vector<RankedSentence> textrank(std::span<const Sentence> sentences, double damping, double tol) {
  if (sentences.empty()) return {};
  const auto scores = stationary_distribution(textrank_weights(sentences), {damping, tol});
  return Attach(sentences, scores);
}

ExtractiveSummary extract_top(std::span<const RankedSentence> ranked, std::size_t budget_tokens) {
  std::vector<std::size_t> order(ranked.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return ranked[a].score > ranked[b].score; });

  std::vector<std::size_t> chosen;
  std::size_t used = 0;
  for (auto i : order) {
    const std::size_t len = word_count(ranked[i].sentence.text);
    if (used + len <= budget_tokens) {
      chosen.push_back(i);
      used += len;
    }
  }
  if (chosen.empty() && budget_tokens > 0 && !order.empty()) chosen.push_back(order.front());

  std::vector<Sentence> sentences;
  sentences.reserve(ranked.size());
  for (const auto& r : ranked) sentences.push_back(r.sentence);
  return MakeSummary(sentences, std::move(chosen), budget_tokens);
}

double oracle_objective(std::span<const Sentence> sentences, std::span<const std::size_t> selection,
                        std::string_view reference) {
  return Objective(JoinedTokens(sentences, selection), metric_tokens(reference));
}

OracleTrace extractive_oracle_trace(std::span<const Sentence> sentences, std::string_view reference,
                                    std::size_t budget_tokens) {
  const auto ref = metric_tokens(reference);
  std::vector<std::size_t> lengths;
  for (const auto& s : sentences) lengths.push_back(word_count(s.text));

  OracleTrace trace;
  std::vector<std::size_t> selection;
  std::vector<bool> used(sentences.size(), false);
  std::size_t used_tokens = 0;
  double current = 0.0;
  while (true) {
    std::optional<std::size_t> best;
    double best_value = current;
    for (std::size_t i = 0; i < sentences.size(); ++i) {
      if (used[i] || used_tokens + lengths[i] > budget_tokens) continue;
      selection.push_back(i);
      const double value = Objective(JoinedTokens(sentences, selection), ref);
      selection.pop_back();
      if (value > best_value) {
        best_value = value;
        best = i;
      }
    }
    if (!best) break;
    selection.push_back(*best);
    used[*best] = true;
    used_tokens += lengths[*best];
    current = best_value;
    trace.steps.push_back({*best, best_value});
  }
  trace.summary = MakeSummary(sentences, std::move(selection), budget_tokens);
  return trace;
}

ExtractiveSummary extractive_oracle(std::span<const Sentence> sentences, std::string_view reference,
                                    std::size_t budget_tokens) {
  return extractive_oracle_trace(sentences, reference, budget_tokens).summary;
}

std::string summary_text(const ExtractiveSummary& summary) {
  std::string out;
  for (const auto& s : summary.selected) {
    if (!out.empty()) out += ' ';
    out += s.text;
  }
  return out;
}

}  // namespace argsumm
