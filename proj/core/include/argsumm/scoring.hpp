// Copyright 2026 The argsumm Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "argsumm/segment.hpp"

namespace argsumm {

enum class RoleLabel { claim, premise, non_argument };

std::string_view to_string(RoleLabel label);

/// Argument-role judgment for one sentence. `confidence` is ordered
/// (claim, premise, non_argument).
struct ArgRole {
  RoleLabel label = RoleLabel::non_argument;
  std::array<double, 3> confidence{0.0, 0.0, 1.0};

  /// Validates the triple and takes its argmax (first index on ties) as the
  /// label. Throws ScorerError on an invalid triple.
  static ArgRole from_probabilities(const std::array<double, 3>& p);

  bool operator==(const ArgRole&) const = default;
};

/// NLI probabilities for an ordered (premise, hypothesis) pair.
struct ScoreTriple {
  double entail = 0.0;
  double contradict = 0.0;
  double neutral = 1.0;

  bool operator==(const ScoreTriple&) const = default;
};

/// Throws ScorerError unless each value is in [0,1] and they sum to 1 ± 1e-6.
void validate(const ScoreTriple& triple);
void validate_probabilities(std::span<const double> probabilities);

struct TextPair {
  std::string premise;
  std::string hypothesis;
};

enum class Backend { remote, heuristic };

std::string_view to_string(Backend backend);
Backend parse_backend(std::string_view s);

struct ScorerConfig {
  Backend backend = Backend::heuristic;
  /// Base URL of the inference service, e.g. "http://localhost:8080".
  std::optional<std::string> endpoint_url;
  std::size_t batch_size = 32;
  std::chrono::milliseconds timeout{30000};
  unsigned max_retries = 3;
  /// Number of batch requests allowed in flight at once.
  unsigned max_concurrency = 1;
  /// First retry delay; doubles per attempt, capped at backoff_max.
  std::chrono::milliseconds backoff_initial{200};
  std::chrono::milliseconds backoff_max{5000};
  /// Seeds the backoff jitter.
  std::uint64_t seed = 13;

  /// Throws ConfigError when the invariants do not hold (endpoint_url set iff
  /// backend is remote, positive batch size and timeout).
  void validate() const;
};

/// Environment variable that supplies ScorerConfig::endpoint_url.
inline constexpr const char* kEndpointEnvVar = "ARGSUMM_SCORER_URL";

/// The two learned judgments the pipeline consumes. Implementations are
/// immutable after construction and safe to share across threads; outputs are
/// order-aligned with inputs.
class Scorer {
 public:
  virtual ~Scorer() = default;
  virtual std::vector<ArgRole> classify(std::span<const std::string> texts) const = 0;
  virtual std::vector<ScoreTriple> score(std::span<const TextPair> pairs) const = 0;
};

/// Deterministic lexical stand-in for the role classifier and the NLI model.
///
/// Role rules, first match wins, over lowercase punctuation-free tokens:
///   1. fewer than 3 tokens, or no content word       -> non_argument
///   2. first token is a causal/evidential marker     -> premise
///   3. ends with '?'                                  -> non_argument
///   4. contains a modal or stance marker             -> claim
///   5. contains a causal/evidential marker           -> premise
///   6. otherwise                                      -> premise
/// The matched label gets probability 0.8 and the other two 0.1 each.
///
/// Entailment, with H and P the content-word sets of hypothesis and premise:
///   covered  = |{h in H : h in P or antonym(h) in P}| / |H|   (0 if H empty)
///   conflict = 1 if the negation-token parities of the two texts differ or
///              an antonym of some h in H occurs in P, else 0
///   entail = covered * (1 - conflict), contradict = covered * conflict,
///   neutral = 1 - covered.
class HeuristicScorer final : public Scorer {
 public:
  static constexpr std::string_view kVersion = "heuristic-v1";

  std::vector<ArgRole> classify(std::span<const std::string> texts) const override;
  std::vector<ScoreTriple> score(std::span<const TextPair> pairs) const override;

  ArgRole classify_one(std::string_view text) const;
  ScoreTriple score_one(std::string_view premise, std::string_view hypothesis) const;

 private:
  static ScoreTriple ScoreTokens(const std::vector<std::string>& premise_tokens,
                                 const std::vector<std::string>& hypothesis_tokens);
};

/// Client for the HTTP+JSON inference protocol:
///   POST /classify {"texts": [...]}            -> {"labels": [[p_claim, p_premise, p_non], ...]}
///   POST /nli      {"pairs": [[premise, hyp]]} -> {"scores": [[p_entail, p_contradict, p_neutral], ...]}
/// Requests are split into batches of at most batch_size. 5xx responses and
/// transport failures are retried up to max_retries times with jittered
/// exponential backoff; other statuses fail immediately. Any failed batch fails
/// the whole call.
class RemoteScorer final : public Scorer {
 public:
  explicit RemoteScorer(ScorerConfig config);

  std::vector<ArgRole> classify(std::span<const std::string> texts) const override;
  std::vector<ScoreTriple> score(std::span<const TextPair> pairs) const override;

  const ScorerConfig& config() const { return config_; }

 private:
  ScorerConfig config_;
};

/// Delay before retry number `attempt` (0-based): uniform in
/// [base/2, base] where base = min(backoff_max, backoff_initial * 2^attempt).
std::chrono::milliseconds backoff_delay(const ScorerConfig& config, unsigned attempt, std::uint64_t jitter_seed);

std::unique_ptr<Scorer> make_scorer(const ScorerConfig& config);

std::vector<ArgRole> classify_roles(std::span<const Sentence> sentences, const Scorer& scorer);
std::vector<ArgRole> classify_roles(std::span<const Sentence> sentences, const ScorerConfig& config);

ScoreTriple score_pair(std::string_view premise, std::string_view hypothesis, const Scorer& scorer);
ScoreTriple score_pair(std::string_view premise, std::string_view hypothesis, const ScorerConfig& config);

std::vector<ScoreTriple> score_pairs_batch(std::span<const TextPair> pairs, const Scorer& scorer);
std::vector<ScoreTriple> score_pairs_batch(std::span<const TextPair> pairs, const ScorerConfig& config);

}  // namespace argsumm
