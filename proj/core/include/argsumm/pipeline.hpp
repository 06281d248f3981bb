// Copyright 2026 The argsumm Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "argsumm/arggraph.hpp"
#include "argsumm/corpus.hpp"
#include "argsumm/extractive.hpp"
#include "argsumm/linearize.hpp"
#include "argsumm/metrics.hpp"
#include "argsumm/scoring.hpp"
#include "argsumm/segment.hpp"

namespace argsumm {

enum class Variant { raw, arg_filtered, arg_graph };
enum class BaselineMethod { lexrank, textrank, oracle };

/// Config spelling: raw, arg_filtered, arg_graph.
std::string_view to_string(Variant variant);
/// Output-record spelling: raw, arg-filtered, arg-graph.
std::string_view record_name(Variant variant);
/// Accepts either spelling.
Variant parse_variant(std::string_view s);
std::string_view to_string(BaselineMethod method);
BaselineMethod parse_baseline_method(std::string_view s);

struct PipelineConfig {
  ScorerConfig scorer;
  Variant variant = Variant::arg_graph;
  std::size_t max_tokens = kDefaultMaxTokens;
  std::size_t budget_tokens = kDefaultBudgetTokens;
  /// Feeds the scorer backoff jitter; fixtures and fuzzers take it too.
  std::uint64_t seed = 13;
  unsigned jobs = 1;
  /// Layout-bias segments per post.
  std::size_t segments = 4;
  /// Porter stemming inside ROUGE.
  bool stem = false;
  EligibilityOptions eligibility;
  /// Replaces the bundled abbreviation list.
  std::optional<std::filesystem::path> abbreviations;

  void validate() const;
};

/// Overlays the keys present in TOML text onto `config`. Unknown tables or
/// keys raise ConfigError.
void apply_toml(PipelineConfig& config, std::string_view toml_text, std::string_view source_name = "config");
PipelineConfig load_config(const std::filesystem::path& path);
/// Sets scorer.endpoint_url from ARGSUMM_SCORER_URL when that is set.
void apply_environment(PipelineConfig& config);
/// Fully resolved config; load_config() of this text reproduces `config`.
std::string to_toml(const PipelineConfig& config);

struct PreparedRecord {
  std::string conv_id;
  Variant variant = Variant::arg_graph;
  LinearizedGraph output;
};

/// {"conv_id", "text", "truncated", "variant"}, keys sorted.
std::string to_jsonl(const PreparedRecord& record);

struct BaselineRecord {
  std::string conv_id;
  BaselineMethod method = BaselineMethod::lexrank;
  std::vector<std::size_t> selected_indices;  ///< global sentence ordinals
  std::string summary_text;
  std::optional<RougeScore> rouge;            ///< absent without a reference
};

/// {"conv_id", "method", "rouge", "selected_indices", "summary_text"}.
std::string to_jsonl(const BaselineRecord& record);

/// Per-conversation numbers that corpus statistics average.
struct ConversationStats {
  std::size_t input_tokens = 0;
  std::optional<std::size_t> summary_tokens;
  std::optional<NovelNgramPct> novel;
  std::optional<RougeScore> oracle;
  MdsStats mds;
};

CorpusStats aggregate(std::span<const ConversationStats> per_conversation, std::size_t segments);

std::string stats_json(const CorpusStats& stats);
std::string stats_tsv(const CorpusStats& stats);

/// The end-to-end pipeline over one configuration. Immutable after
/// construction; conversations may be processed concurrently.
class Pipeline {
 public:
  explicit Pipeline(PipelineConfig config);
  /// Uses `scorer` instead of the one the config describes.
  Pipeline(PipelineConfig config, std::shared_ptr<const Scorer> scorer);

  PreparedRecord prepare(const Conversation& conv) const;
  std::vector<PreparedRecord> prepare(std::span<const Conversation> corpus) const;

  BaselineRecord baseline(const Conversation& conv, BaselineMethod method) const;
  std::vector<BaselineRecord> baseline(std::span<const Conversation> corpus, BaselineMethod method) const;

  ArgumentGraph graph(const Conversation& conv) const;

  ConversationStats conversation_stats(const Conversation& conv) const;
  CorpusStats stats(std::span<const Conversation> corpus) const;

  const PipelineConfig& config() const { return config_; }
  const Segmenter& segmenter() const { return segmenter_; }
  const Scorer& scorer() const { return *scorer_; }

 private:
  PipelineConfig config_;
  Segmenter segmenter_;
  std::shared_ptr<const Scorer> scorer_;
};

}  // namespace argsumm
