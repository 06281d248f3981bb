// Copyright 2026 The argsumm Authors.
// SPDX-License-Identifier: Apache-2.0

#include "argsumm/scoring.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "argsumm/error.hpp"

namespace argsumm {

namespace {
constexpr double kSumTolerance = 1e-6;
}  // namespace

std::string_view to_string(RoleLabel label) {
  switch (label) {
    case RoleLabel::claim: return "claim";
    case RoleLabel::premise: return "premise";
    case RoleLabel::non_argument: return "non_argument";
  }
  throw InternalError("unknown RoleLabel");
}

std::string_view to_string(Backend backend) {
  switch (backend) {
    case Backend::remote: return "remote";
    case Backend::heuristic: return "heuristic";
  }
  throw InternalError("unknown Backend");
}

Backend parse_backend(std::string_view s) {
  if (s == "remote") return Backend::remote;
  if (s == "heuristic") return Backend::heuristic;
  throw ConfigError("unknown scorer backend \"" + std::string(s) + "\"");
}

void validate_probabilities(std::span<const double> probabilities) {
  double sum = 0.0;
  for (double p : probabilities) {
    if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
      std::ostringstream msg;
      msg << "probability " << p << " outside [0, 1]";
      throw ScorerError(msg.str());
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "probabilities sum to " << sum << ", expected 1";
    throw ScorerError(msg.str());
  }
}

void validate(const ScoreTriple& triple) {
  const std::array<double, 3> p{triple.entail, triple.contradict, triple.neutral};
  validate_probabilities(p);
}

ArgRole ArgRole::from_probabilities(const std::array<double, 3>& p) {
  validate_probabilities(p);
  std::size_t best = 0;
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (p[i] > p[best]) best = i;
  }
  return ArgRole{static_cast<RoleLabel>(best), p};
}

void ScorerConfig::validate() const {
  if (backend == Backend::remote && (!endpoint_url || endpoint_url->empty())) {
    throw ConfigError("remote scorer backend requires an endpoint URL (flag, config file or " +
                      std::string(kEndpointEnvVar) + ")");
  }
  if (backend == Backend::heuristic && endpoint_url) {
    throw ConfigError("endpoint URL is only valid with the remote scorer backend");
  }
  if (batch_size == 0) throw ConfigError("scorer batch_size must be positive");
  if (timeout.count() <= 0) throw ConfigError("scorer timeout_ms must be positive");
  if (max_concurrency == 0) throw ConfigError("scorer max_concurrency must be positive");
}

std::unique_ptr<Scorer> make_scorer(const ScorerConfig& config) {
  config.validate();
  switch (config.backend) {
    case Backend::heuristic: return std::make_unique<HeuristicScorer>();
    case Backend::remote: return std::make_unique<RemoteScorer>(config);
  }
  throw InternalError("unknown Backend");
}

std::vector<ArgRole> classify_roles(std::span<const Sentence> sentences, const Scorer& scorer) {
  std::vector<std::string> texts;
  texts.reserve(sentences.size());
  for (const auto& s : sentences) texts.push_back(s.text);
  auto roles = scorer.classify(texts);
  if (roles.size() != sentences.size()) throw ScorerError("classifier returned a misaligned result");
  return roles;
}

std::vector<ArgRole> classify_roles(std::span<const Sentence> sentences, const ScorerConfig& config) {
  return classify_roles(sentences, *make_scorer(config));
}

ScoreTriple score_pair(std::string_view premise, std::string_view hypothesis, const Scorer& scorer) {
  if (premise.empty() || hypothesis.empty()) throw DataError("score_pair requires non-empty texts");
  const TextPair pair{std::string(premise), std::string(hypothesis)};
  auto scores = scorer.score(std::span<const TextPair>(&pair, 1));
  if (scores.size() != 1) throw ScorerError("NLI scorer returned a misaligned result");
  return scores.front();
}

ScoreTriple score_pair(std::string_view premise, std::string_view hypothesis, const ScorerConfig& config) {
  return score_pair(premise, hypothesis, *make_scorer(config));
}

std::vector<ScoreTriple> score_pairs_batch(std::span<const TextPair> pairs, const Scorer& scorer) {
  for (const auto& p : pairs) {
    if (p.premise.empty() || p.hypothesis.empty()) throw DataError("score_pairs_batch requires non-empty texts");
  }
  if (pairs.empty()) return {};
  auto scores = scorer.score(pairs);
  if (scores.size() != pairs.size()) throw ScorerError("NLI scorer returned a misaligned result");
  return scores;
}

std::vector<ScoreTriple> score_pairs_batch(std::span<const TextPair> pairs, const ScorerConfig& config) {
  return score_pairs_batch(pairs, *make_scorer(config));
}

}  // namespace argsumm
