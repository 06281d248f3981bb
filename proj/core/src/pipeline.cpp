// Copyright 2026 The argsumm Authors.
// SPDX-License-Identifier: Apache-2.0

#include "argsumm/pipeline.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "argsumm/error.hpp"
#include "argsumm/parallel.hpp"
#include "argsumm/text.hpp"

namespace argsumm {
namespace {

using nlohmann::json;

json PrfJson(const Prf& p) { return {{"f1", p.f1}, {"precision", p.precision}, {"recall", p.recall}}; }

json RougeJson(const RougeScore& r) {
  return {{"rouge1", PrfJson(r.r1)}, {"rouge2", PrfJson(r.r2)}, {"rougeL", PrfJson(r.rl)}};
}

std::string Fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

void AddPrf(Prf& acc, const Prf& p) {
  acc.precision += p.precision;
  acc.recall += p.recall;
  acc.f1 += p.f1;
}

void ScalePrf(Prf& p, double k) {
  p.precision *= k;
  p.recall *= k;
  p.f1 *= k;
}

}  // namespace

std::string_view to_string(Variant variant) {
  switch (variant) {
    case Variant::raw: return "raw";
    case Variant::arg_filtered: return "arg_filtered";
    case Variant::arg_graph: return "arg_graph";
  }
  throw InternalError("unknown Variant");
}

std::string_view record_name(Variant variant) {
  switch (variant) {
    case Variant::raw: return "raw";
    case Variant::arg_filtered: return "arg-filtered";
    case Variant::arg_graph: return "arg-graph";
  }
  throw InternalError("unknown Variant");
}

Variant parse_variant(std::string_view s) {
  for (auto v : {Variant::raw, Variant::arg_filtered, Variant::arg_graph}) {
    if (s == to_string(v) || s == record_name(v)) return v;
  }
  throw ConfigError("unknown variant \"" + std::string(s) + "\" (expected raw, arg_filtered or arg_graph)");
}

std::string_view to_string(BaselineMethod method) {
  switch (method) {
    case BaselineMethod::lexrank: return "lexrank";
    case BaselineMethod::textrank: return "textrank";
    case BaselineMethod::oracle: return "oracle";
  }
  throw InternalError("unknown BaselineMethod");
}

BaselineMethod parse_baseline_method(std::string_view s) {
  for (auto m : {BaselineMethod::lexrank, BaselineMethod::textrank, BaselineMethod::oracle}) {
    if (s == to_string(m)) return m;
  }
  throw ConfigError("unknown baseline method \"" + std::string(s) + "\" (expected lexrank, textrank or oracle)");
}

void PipelineConfig::validate() const {
  scorer.validate();
  if (max_tokens == 0) throw ConfigError("max_tokens must be positive");
  if (jobs == 0) throw ConfigError("jobs must be positive");
  if (segments == 0) throw ConfigError("segments must be positive");
}

std::string to_jsonl(const PreparedRecord& record) {
  return json{{"conv_id", record.conv_id},
              {"variant", std::string(record_name(record.variant))},
              {"text", record.output.text},
              {"truncated", record.output.truncated}}
      .dump();
}

std::string to_jsonl(const BaselineRecord& record) {
  return json{{"conv_id", record.conv_id},
              {"method", std::string(to_string(record.method))},
              {"selected_indices", record.selected_indices},
              {"summary_text", record.summary_text},
              {"rouge", record.rouge ? RougeJson(*record.rouge) : json(nullptr)}}
      .dump();
}

namespace {

Segmenter MakeSegmenter(const PipelineConfig& config) {
  return config.abbreviations ? Segmenter::from_file(*config.abbreviations) : Segmenter();
}

std::shared_ptr<const Scorer> MakeSharedScorer(const PipelineConfig& config) {
  config.validate();
  return std::shared_ptr<const Scorer>(make_scorer(config.scorer));
}

}  // namespace

Pipeline::Pipeline(PipelineConfig config)
    : config_(std::move(config)), segmenter_(MakeSegmenter(config_)), scorer_(MakeSharedScorer(config_)) {}

Pipeline::Pipeline(PipelineConfig config, std::shared_ptr<const Scorer> scorer)
    : config_(std::move(config)), segmenter_(MakeSegmenter(config_)), scorer_(std::move(scorer)) {
  if (!scorer_) throw ConfigError("Pipeline requires a scorer");
}

ArgumentGraph Pipeline::graph(const Conversation& conv) const { return build_graph(conv, segmenter_, *scorer_); }

PreparedRecord Pipeline::prepare(const Conversation& conv) const {
  PreparedRecord record;
  record.conv_id = conv.conv_id;
  record.variant = config_.variant;
  switch (config_.variant) {
    case Variant::raw:
      record.output = render_raw(conv, config_.max_tokens);
      break;
    case Variant::arg_filtered: {
      const auto per_post = segmenter_.segment_conversation(conv);
      const auto roles_flat = classify_roles(flatten(per_post), *scorer_);
      std::vector<std::vector<ArgRole>> roles;
      std::size_t k = 0;
      for (const auto& post : per_post) {
        roles.emplace_back(roles_flat.begin() + static_cast<std::ptrdiff_t>(k),
                           roles_flat.begin() + static_cast<std::ptrdiff_t>(k + post.size()));
        k += post.size();
      }
      const auto kept = arg_filter(per_post, roles);
      record.output = render_filtered(kept, config_.max_tokens);
      break;
    }
    case Variant::arg_graph:
      record.output = linearize(graph(conv), config_.max_tokens);
      break;
  }
  return record;
}

std::vector<PreparedRecord> Pipeline::prepare(std::span<const Conversation> corpus) const {
  return parallel_map(corpus.size(), config_.jobs, [&](std::size_t i) { return prepare(corpus[i]); });
}

BaselineRecord Pipeline::baseline(const Conversation& conv, BaselineMethod method) const {
  const auto sentences = flatten(segmenter_.segment_conversation(conv));
  ExtractiveSummary summary;
  switch (method) {
    case BaselineMethod::lexrank:
      summary = extract_top(lexrank(sentences), config_.budget_tokens);
      break;
    case BaselineMethod::textrank:
      summary = extract_top(textrank(sentences), config_.budget_tokens);
      break;
    case BaselineMethod::oracle:
      if (!conv.reference_summary) {
        throw DataError("conversation " + conv.conv_id + ": the extractive oracle needs a reference summary");
      }
      summary = extractive_oracle(sentences, *conv.reference_summary, config_.budget_tokens);
      break;
  }
  BaselineRecord record;
  record.conv_id = conv.conv_id;
  record.method = method;
  record.selected_indices = summary.indices;
  record.summary_text = summary_text(summary);
  if (conv.reference_summary) {
    record.rouge = rouge(record.summary_text, *conv.reference_summary, RougeOptions{config_.stem});
  }
  return record;
}

std::vector<BaselineRecord> Pipeline::baseline(std::span<const Conversation> corpus, BaselineMethod method) const {
  return parallel_map(corpus.size(), config_.jobs, [&](std::size_t i) { return baseline(corpus[i], method); });
}

ConversationStats Pipeline::conversation_stats(const Conversation& conv) const {
  ConversationStats stats;
  stats.input_tokens = input_length(conv);
  const std::string reference = conv.reference_summary.value_or("");
  stats.mds = mds_stats(conv, reference, config_.segments, segmenter_);
  if (conv.reference_summary) {
    stats.summary_tokens = word_count(reference);
    const auto sources = source_texts(conv);
    stats.novel = NovelNgramPct{novel_ngrams(reference, sources, 1), novel_ngrams(reference, sources, 2),
                                novel_ngrams(reference, sources, 3)};
    const auto sentences = flatten(segmenter_.segment_conversation(conv));
    const auto oracle = extractive_oracle(sentences, reference, config_.budget_tokens);
    stats.oracle = rouge(summary_text(oracle), reference, RougeOptions{config_.stem});
  }
  return stats;
}

CorpusStats Pipeline::stats(std::span<const Conversation> corpus) const {
  const auto per = parallel_map(corpus.size(), config_.jobs, [&](std::size_t i) { return conversation_stats(corpus[i]); });
  return aggregate(per, config_.segments);
}

CorpusStats aggregate(std::span<const ConversationStats> per_conversation, std::size_t segments) {
  CorpusStats out;
  out.examples = per_conversation.size();
  out.layout_bias.assign(segments, 0.0);
  std::size_t with_similarity = 0;
  double similarity = 0.0;
  for (const auto& c : per_conversation) {
    out.mean_input_tokens += static_cast<double>(c.input_tokens);
    out.redundancy += c.mds.redundancy;
    if (c.mds.inter_doc_similarity) {
      similarity += *c.mds.inter_doc_similarity;
      ++with_similarity;
    }
    if (!c.summary_tokens) continue;
    ++out.examples_with_reference;
    out.mean_summary_tokens += static_cast<double>(*c.summary_tokens);
    if (c.novel) {
      out.novel_ngram_pct.uni += c.novel->uni;
      out.novel_ngram_pct.bi += c.novel->bi;
      out.novel_ngram_pct.tri += c.novel->tri;
    }
    if (c.oracle) {
      AddPrf(out.oracle_rouge.r1, c.oracle->r1);
      AddPrf(out.oracle_rouge.r2, c.oracle->r2);
      AddPrf(out.oracle_rouge.rl, c.oracle->rl);
    }
    for (std::size_t s = 0; s < segments && s < c.mds.layout_bias.size(); ++s) out.layout_bias[s] += c.mds.layout_bias[s];
  }
  if (out.examples > 0) {
    out.mean_input_tokens /= static_cast<double>(out.examples);
    out.redundancy /= static_cast<double>(out.examples);
  }
  if (with_similarity > 0) out.inter_doc_similarity = similarity / static_cast<double>(with_similarity);
  if (out.examples_with_reference > 0) {
    const double k = 1.0 / static_cast<double>(out.examples_with_reference);
    out.mean_summary_tokens *= k;
    out.novel_ngram_pct.uni *= k;
    out.novel_ngram_pct.bi *= k;
    out.novel_ngram_pct.tri *= k;
    ScalePrf(out.oracle_rouge.r1, k);
    ScalePrf(out.oracle_rouge.r2, k);
    ScalePrf(out.oracle_rouge.rl, k);
    for (auto& v : out.layout_bias) v *= k;
  }
  return out;
}

std::string stats_json(const CorpusStats& stats) {
  json out = {
      {"examples", stats.examples},
      {"examples_with_reference", stats.examples_with_reference},
      {"mean_input_tokens", stats.mean_input_tokens},
      {"mean_summary_tokens", stats.mean_summary_tokens},
      {"novel_ngram_pct", {{"uni", stats.novel_ngram_pct.uni}, {"bi", stats.novel_ngram_pct.bi}, {"tri", stats.novel_ngram_pct.tri}}},
      {"oracle_rouge", RougeJson(stats.oracle_rouge)},
      {"inter_doc_similarity", stats.inter_doc_similarity ? json(*stats.inter_doc_similarity) : json(nullptr)},
      {"redundancy", stats.redundancy},
      {"layout_bias", stats.layout_bias},
  };
  return out.dump(2) + "\n";
}

std::string stats_tsv(const CorpusStats& stats) {
  std::ostringstream out;
  out << "examples\twith_reference\tinput_tokens\tsummary_tokens\tnovel_uni\tnovel_bi\tnovel_tri"
         "\toracle_r1\toracle_r2\toracle_rl\tinter_doc_similarity\tredundancy";
  for (std::size_t s = 0; s < stats.layout_bias.size(); ++s) out << "\tlayout_bias_" << (s + 1);
  out << '\n';
  out << stats.examples << '\t' << stats.examples_with_reference << '\t' << Fixed(stats.mean_input_tokens) << '\t'
      << Fixed(stats.mean_summary_tokens) << '\t' << Fixed(stats.novel_ngram_pct.uni) << '\t'
      << Fixed(stats.novel_ngram_pct.bi) << '\t' << Fixed(stats.novel_ngram_pct.tri) << '\t'
      << Fixed(100.0 * stats.oracle_rouge.r1.f1) << '\t' << Fixed(100.0 * stats.oracle_rouge.r2.f1) << '\t'
      << Fixed(100.0 * stats.oracle_rouge.rl.f1) << '\t'
      << (stats.inter_doc_similarity ? Fixed(*stats.inter_doc_similarity) : std::string("NA")) << '\t'
      << Fixed(stats.redundancy);
  for (double v : stats.layout_bias) out << '\t' << Fixed(v);
  out << '\n';
  return out.str();
}

}  // namespace argsumm
