// Copyright 2026 The argsumm Authors.
// SPDX-License-Identifier: Apache-2.0

// argsumm: conversation argument graphs, summarizer inputs, extractive
// baselines and corpus statistics.
//
// Exit codes: 0 success, 1 usage or configuration error, 2 data error,
// 3 scorer backend error, 4 internal error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "argsumm/arggraph.hpp"
#include "argsumm/corpus.hpp"
#include "argsumm/error.hpp"
#include "argsumm/pipeline.hpp"

namespace fs = std::filesystem;

namespace {

enum ExitCode : int { kOk = 0, kUsage = 1, kData = 2, kScorer = 3, kInternal = 4 };

struct GlobalFlags {
  std::optional<std::string> config_path;
  std::optional<std::string> backend;
  std::optional<std::string> endpoint;
  std::optional<std::size_t> batch_size;
  std::optional<long> timeout_ms;
  std::optional<unsigned> max_retries;
  std::optional<unsigned> jobs;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> abbreviations;
};

// Defaults, then the TOML file, then the environment, then flags.
argsumm::PipelineConfig ResolveConfig(const GlobalFlags& flags) {
  argsumm::PipelineConfig config;
  if (flags.config_path) config = argsumm::load_config(*flags.config_path);
  argsumm::apply_environment(config);
  if (flags.backend) config.scorer.backend = argsumm::parse_backend(*flags.backend);
  if (flags.endpoint) config.scorer.endpoint_url = *flags.endpoint;
  if (config.scorer.backend == argsumm::Backend::heuristic && !flags.endpoint) config.scorer.endpoint_url.reset();
  if (flags.batch_size) config.scorer.batch_size = *flags.batch_size;
  if (flags.timeout_ms) config.scorer.timeout = std::chrono::milliseconds(*flags.timeout_ms);
  if (flags.max_retries) config.scorer.max_retries = *flags.max_retries;
  if (flags.jobs) config.jobs = *flags.jobs;
  if (flags.seed) config.seed = *flags.seed;
  if (flags.abbreviations) config.abbreviations = *flags.abbreviations;
  config.scorer.seed = config.seed;
  return config;
}

// Writes to a file (binary, LF) or to stdout for "-".
class Output {
 public:
  explicit Output(const std::string& path) : path_(path) {
    if (path != "-") {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw argsumm::DataError("cannot write " + path);
    }
  }
  std::ostream& stream() { return path_ == "-" ? std::cout : file_; }
  bool is_file() const { return path_ != "-"; }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::ofstream file_;
};

void WriteResolvedConfig(const Output& out, const argsumm::PipelineConfig& config) {
  if (!out.is_file()) return;
  std::ofstream f(out.path() + ".config.toml", std::ios::binary | std::ios::trunc);
  if (!f) throw argsumm::DataError("cannot write " + out.path() + ".config.toml");
  f << argsumm::to_toml(config);
}

std::string DefaultReportPath(const std::string& corpus_out) {
  fs::path p(corpus_out);
  return (p.parent_path() / (p.stem().string() + ".eligibility.jsonl")).string();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"argsumm: argument graphs and extractive baselines for conversation summarization"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags flags;
  app.add_option("--config", flags.config_path, "TOML config file")->check(CLI::ExistingFile);
  app.add_option("--backend", flags.backend, "Scorer backend: heuristic or remote");
  app.add_option("--endpoint", flags.endpoint,
                 std::string("Inference service base URL (also ") + argsumm::kEndpointEnvVar + ")");
  app.add_option("--batch-size", flags.batch_size, "Scorer request batch size");
  app.add_option("--timeout-ms", flags.timeout_ms, "Scorer request timeout in milliseconds");
  app.add_option("--max-retries", flags.max_retries, "Scorer retries for transient failures");
  app.add_option("--jobs,-j", flags.jobs, "Worker threads over conversations");
  app.add_option("--seed", flags.seed, "Seed for jitter and fixture sampling");
  app.add_option("--abbreviations", flags.abbreviations, "Abbreviation list replacing the bundled one")
      ->check(CLI::ExistingFile);

  // ingest
  auto* ingest = app.add_subcommand("ingest", "Validate a corpus and write it with an eligibility sidecar");
  std::string ingest_input, ingest_format = "jsonl", ingest_output, ingest_report;
  bool only_eligible = false;
  std::optional<std::size_t> nyt_max_total;
  ingest->add_option("input", ingest_input, "Input corpus")->required()->check(CLI::ExistingFile);
  ingest->add_option("--format", ingest_format, "Input format")->check(CLI::IsMember({"jsonl"}));
  ingest->add_option("-o,--output", ingest_output, "Normalized corpus output")->required();
  ingest->add_option("--report", ingest_report, "Eligibility sidecar (default: <output stem>.eligibility.jsonl)");
  ingest->add_flag("--only-eligible", only_eligible, "Write only eligible conversations to the corpus output");
  ingest->add_option("--nyt-max-total", nyt_max_total, "Upper total-length bound for NYT threads");

  // prepare
  auto* prepare = app.add_subcommand("prepare", "Emit summarizer inputs (raw, arg_filtered or arg_graph)");
  std::string prepare_input, prepare_output = "-";
  std::optional<std::string> variant;
  std::optional<std::size_t> max_tokens;
  prepare->add_option("corpus", prepare_input, "Corpus JSONL")->required()->check(CLI::ExistingFile);
  prepare->add_option("--variant", variant, "raw | arg_filtered | arg_graph");
  prepare->add_option("--max-tokens", max_tokens, "Token budget per input");
  prepare->add_option("-o,--output", prepare_output, "Output JSONL (default stdout)");

  // baseline
  auto* baseline = app.add_subcommand("baseline", "Run an extractive baseline");
  std::string baseline_input, baseline_method, baseline_output = "-";
  std::optional<std::size_t> budget;
  bool stem = false;
  baseline->add_option("corpus", baseline_input, "Corpus JSONL")->required()->check(CLI::ExistingFile);
  baseline->add_option("--method", baseline_method, "lexrank | textrank | oracle")
      ->required()
      ->check(CLI::IsMember({"lexrank", "textrank", "oracle"}));
  baseline->add_option("--budget", budget, "Summary budget in words");
  baseline->add_flag("--stem", stem, "Porter-stem tokens inside ROUGE");
  baseline->add_option("-o,--output", baseline_output, "Output JSONL (default stdout)");

  // stats
  auto* stats = app.add_subcommand("stats", "Corpus statistics report");
  std::string stats_input, stats_format = "json", stats_output = "-";
  std::optional<std::size_t> segments;
  std::optional<std::size_t> stats_budget;
  stats->add_option("corpus", stats_input, "Corpus JSONL")->required()->check(CLI::ExistingFile);
  stats->add_option("--format", stats_format, "json | tsv")->check(CLI::IsMember({"json", "tsv"}));
  stats->add_option("--segments", segments, "Layout-bias segments per post");
  stats->add_option("--budget", stats_budget, "Extractive oracle budget in words");
  stats->add_option("-o,--output", stats_output, "Output file (default stdout)");

  // graph
  auto* graph = app.add_subcommand("graph", "Emit argument graphs as DOT or JSON");
  std::string graph_input, graph_format = "dot", graph_output = "-";
  std::optional<std::string> conv_id;
  graph->add_option("corpus", graph_input, "Corpus JSONL")->required()->check(CLI::ExistingFile);
  graph->add_option("--conv-id", conv_id, "Only this conversation");
  graph->add_option("--format", graph_format, "dot | json")->check(CLI::IsMember({"dot", "json"}));
  graph->add_option("-o,--output", graph_output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    argsumm::PipelineConfig config = ResolveConfig(flags);

    if (*ingest) {
      if (nyt_max_total) config.eligibility.max_total_words_nyt = *nyt_max_total;
      const auto corpus = argsumm::parse_corpus(fs::path(ingest_input), argsumm::parse_corpus_format(ingest_format));
      Output out(ingest_output);
      Output report(ingest_report.empty() ? DefaultReportPath(ingest_output) : ingest_report);
      std::size_t eligible = 0;
      for (const auto& conv : corpus) {
        const auto r = argsumm::check_eligibility(conv, config.eligibility);
        report.stream() << argsumm::eligibility_jsonl(conv, r) << '\n';
        if (r.eligible) ++eligible;
        if (r.eligible || !only_eligible) out.stream() << argsumm::to_jsonl(conv) << '\n';
      }
      WriteResolvedConfig(out, config);
      std::cerr << "ingested " << corpus.size() << " conversations, " << eligible << " eligible\n";
      return kOk;
    }

    if (*prepare) {
      if (variant) config.variant = argsumm::parse_variant(*variant);
      if (max_tokens) config.max_tokens = *max_tokens;
      config.validate();
      const auto corpus = argsumm::parse_corpus(fs::path(prepare_input));
      const argsumm::Pipeline pipeline(config);
      const auto records = pipeline.prepare(corpus);
      Output out(prepare_output);
      for (const auto& r : records) out.stream() << argsumm::to_jsonl(r) << '\n';
      WriteResolvedConfig(out, config);
      return kOk;
    }

    if (*baseline) {
      if (budget) config.budget_tokens = *budget;
      if (stem) config.stem = true;
      config.validate();
      const auto corpus = argsumm::parse_corpus(fs::path(baseline_input));
      const argsumm::Pipeline pipeline(config);
      const auto records = pipeline.baseline(corpus, argsumm::parse_baseline_method(baseline_method));
      Output out(baseline_output);
      for (const auto& r : records) out.stream() << argsumm::to_jsonl(r) << '\n';
      WriteResolvedConfig(out, config);
      return kOk;
    }

    if (*stats) {
      if (segments) config.segments = *segments;
      if (stats_budget) config.budget_tokens = *stats_budget;
      config.validate();
      const auto corpus = argsumm::parse_corpus(fs::path(stats_input));
      const argsumm::Pipeline pipeline(config);
      const auto report = pipeline.stats(corpus);
      Output out(stats_output);
      out.stream() << (stats_format == "tsv" ? argsumm::stats_tsv(report) : argsumm::stats_json(report));
      WriteResolvedConfig(out, config);
      return kOk;
    }

    if (*graph) {
      config.validate();
      const auto corpus = argsumm::parse_corpus(fs::path(graph_input));
      const argsumm::Pipeline pipeline(config);
      Output out(graph_output);
      bool found = false;
      for (const auto& conv : corpus) {
        if (conv_id && conv.conv_id != *conv_id) continue;
        found = true;
        const auto g = pipeline.graph(conv);
        if (graph_format == "json") {
          out.stream() << R"({"conv_id":)" << nlohmann::json(conv.conv_id).dump() << R"(,"graph":)"
                       << argsumm::to_json(g) << "}\n";
        } else {
          out.stream() << "// " << conv.conv_id << '\n' << argsumm::to_dot(g);
        }
      }
      if (conv_id && !found) throw argsumm::DataError("no conversation with conv_id \"" + *conv_id + "\"");
      return kOk;
    }
  } catch (const argsumm::ConfigError& e) {
    std::cerr << "argsumm: configuration error: " << e.what() << '\n';
    return kUsage;
  } catch (const argsumm::DataError& e) {
    std::cerr << "argsumm: data error: " << e.what() << '\n';
    return kData;
  } catch (const argsumm::ScorerError& e) {
    std::cerr << "argsumm: scorer error: " << e.what() << '\n';
    return kScorer;
  } catch (const std::exception& e) {
    std::cerr << "argsumm: internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
