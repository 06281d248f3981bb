// Copyright 2026 The argsumm Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#define TOML_EXCEPTIONS 1
#include <toml.hpp>

#include "argsumm/error.hpp"
#include "argsumm/pipeline.hpp"

namespace argsumm {
namespace {

class TableReader {
 public:
  TableReader(const toml::table& table, std::string name, std::string_view source)
      : table_(table), name_(std::move(name)), source_(source) {}

  template <typename Setter>
  void Integer(const char* key, Setter&& set, std::int64_t min_value = 0) {
    Claim(key);
    const toml::node* node = table_.get(key);
    if (node == nullptr) return;
    const auto v = node->value<std::int64_t>();
    if (!v || !node->is_integer()) Fail(key, "must be an integer");
    if (*v < min_value) Fail(key, "must be >= " + std::to_string(min_value));
    set(*v);
  }

  template <typename Setter>
  void Real(const char* key, Setter&& set) {
    Claim(key);
    const toml::node* node = table_.get(key);
    if (node == nullptr) return;
    if (!node->is_number()) Fail(key, "must be a number");
    set(*node->value<double>());
  }

  template <typename Setter>
  void String(const char* key, Setter&& set) {
    Claim(key);
    const toml::node* node = table_.get(key);
    if (node == nullptr) return;
    if (!node->is_string()) Fail(key, "must be a string");
    try {
      set(*node->value<std::string>());
    } catch (const ConfigError& e) {
      Fail(key, e.what());
    }
  }

  template <typename Setter>
  void Boolean(const char* key, Setter&& set) {
    Claim(key);
    const toml::node* node = table_.get(key);
    if (node == nullptr) return;
    if (!node->is_boolean()) Fail(key, "must be a boolean");
    set(*node->value<bool>());
  }

  void RejectUnknown() const {
    for (const auto& [key, node] : table_) {
      if (!known_.contains(std::string(key.str()))) {
        throw ConfigError(std::string(source_) + ": unknown key \"" + name_ + "." + std::string(key.str()) + "\"");
      }
    }
  }

 private:
  void Claim(const char* key) { known_.emplace(key, true); }

  [[noreturn]] void Fail(const char* key, const std::string& what) const {
    throw ConfigError(std::string(source_) + ": \"" + name_ + "." + key + "\" " + what);
  }

  const toml::table& table_;
  std::string name_;
  std::string_view source_;
  std::map<std::string, bool> known_;
};

const toml::table* SubTable(const toml::table& root, const char* name, std::string_view source) {
  const toml::node* node = root.get(name);
  if (node == nullptr) return nullptr;
  if (!node->is_table()) throw ConfigError(std::string(source) + ": \"" + name + "\" must be a table");
  return node->as_table();
}

}  // namespace

void apply_toml(PipelineConfig& config, std::string_view toml_text, std::string_view source_name) {
  toml::table root;
  try {
    root = toml::parse(toml_text, source_name);
  } catch (const toml::parse_error& e) {
    std::ostringstream msg;
    msg << source_name << ": " << e.description() << " (line " << e.source().begin.line << ")";
    throw ConfigError(msg.str());
  }
  for (const auto& [key, node] : root) {
    const std::string_view k = key.str();
    if (k != "scorer" && k != "pipeline" && k != "eligibility") {
      throw ConfigError(std::string(source_name) + ": unknown table \"" + std::string(k) + "\"");
    }
  }

  if (const auto* t = SubTable(root, "scorer", source_name)) {
    TableReader r(*t, "scorer", source_name);
    auto& s = config.scorer;
    r.String("backend", [&](const std::string& v) { s.backend = parse_backend(v); });
    r.String("endpoint_url", [&](const std::string& v) { s.endpoint_url = v; });
    r.Integer("batch_size", [&](std::int64_t v) { s.batch_size = static_cast<std::size_t>(v); }, 1);
    r.Integer("timeout_ms", [&](std::int64_t v) { s.timeout = std::chrono::milliseconds(v); }, 1);
    r.Integer("max_retries", [&](std::int64_t v) { s.max_retries = static_cast<unsigned>(v); });
    r.Integer("max_concurrency", [&](std::int64_t v) { s.max_concurrency = static_cast<unsigned>(v); }, 1);
    r.Integer("backoff_initial_ms", [&](std::int64_t v) { s.backoff_initial = std::chrono::milliseconds(v); });
    r.Integer("backoff_max_ms", [&](std::int64_t v) { s.backoff_max = std::chrono::milliseconds(v); });
    r.RejectUnknown();
  }
  if (const auto* t = SubTable(root, "pipeline", source_name)) {
    TableReader r(*t, "pipeline", source_name);
    r.String("variant", [&](const std::string& v) { config.variant = parse_variant(v); });
    r.Integer("max_tokens", [&](std::int64_t v) { config.max_tokens = static_cast<std::size_t>(v); }, 1);
    r.Integer("budget_tokens", [&](std::int64_t v) { config.budget_tokens = static_cast<std::size_t>(v); });
    r.Integer("seed", [&](std::int64_t v) { config.seed = static_cast<std::uint64_t>(v); });
    r.Integer("jobs", [&](std::int64_t v) { config.jobs = static_cast<unsigned>(v); }, 1);
    r.Integer("segments", [&](std::int64_t v) { config.segments = static_cast<std::size_t>(v); }, 1);
    r.Boolean("stem", [&](bool v) { config.stem = v; });
    r.String("abbreviations", [&](const std::string& v) { config.abbreviations = v; });
    r.RejectUnknown();
  }
  if (const auto* t = SubTable(root, "eligibility", source_name)) {
    TableReader r(*t, "eligibility", source_name);
    auto& e = config.eligibility;
    auto size = [](std::size_t& field) { return [&field](std::int64_t v) { field = static_cast<std::size_t>(v); }; };
    r.Integer("min_posts", size(e.min_posts));
    r.Integer("min_posts_email", size(e.min_posts_email));
    r.Integer("max_post_words", size(e.max_post_words));
    r.Integer("min_total_words", size(e.min_total_words));
    r.Integer("max_total_words", size(e.max_total_words));
    r.Integer("max_total_words_nyt", size(e.max_total_words_nyt));
    r.Real("min_avg_words", [&](double v) { e.min_avg_words = v; });
    r.Real("max_avg_words", [&](double v) { e.max_avg_words = v; });
    r.RejectUnknown();
  }
  config.scorer.seed = config.seed;
}

PipelineConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  PipelineConfig config;
  apply_toml(config, text.str(), path.string());
  return config;
}

void apply_environment(PipelineConfig& config) {
  if (const char* url = std::getenv(kEndpointEnvVar); url != nullptr && *url != '\0') {
    config.scorer.endpoint_url = url;
  }
}

std::string to_toml(const PipelineConfig& config) {
  auto i64 = [](auto v) { return static_cast<std::int64_t>(v); };
  toml::table scorer{
      {"backend", std::string(to_string(config.scorer.backend))},
      {"batch_size", i64(config.scorer.batch_size)},
      {"timeout_ms", i64(config.scorer.timeout.count())},
      {"max_retries", i64(config.scorer.max_retries)},
      {"max_concurrency", i64(config.scorer.max_concurrency)},
      {"backoff_initial_ms", i64(config.scorer.backoff_initial.count())},
      {"backoff_max_ms", i64(config.scorer.backoff_max.count())},
  };
  if (config.scorer.endpoint_url) scorer.insert("endpoint_url", *config.scorer.endpoint_url);

  toml::table pipeline{
      {"variant", std::string(to_string(config.variant))},
      {"max_tokens", i64(config.max_tokens)},
      {"budget_tokens", i64(config.budget_tokens)},
      {"seed", i64(config.seed)},
      {"jobs", i64(config.jobs)},
      {"segments", i64(config.segments)},
      {"stem", config.stem},
  };
  if (config.abbreviations) pipeline.insert("abbreviations", config.abbreviations->string());

  const auto& e = config.eligibility;
  toml::table eligibility{
      {"min_posts", i64(e.min_posts)},
      {"min_posts_email", i64(e.min_posts_email)},
      {"max_post_words", i64(e.max_post_words)},
      {"min_total_words", i64(e.min_total_words)},
      {"max_total_words", i64(e.max_total_words)},
      {"max_total_words_nyt", i64(e.max_total_words_nyt)},
      {"min_avg_words", e.min_avg_words},
      {"max_avg_words", e.max_avg_words},
  };

  toml::table root{{"scorer", std::move(scorer)}, {"pipeline", std::move(pipeline)}, {"eligibility", std::move(eligibility)}};
  std::ostringstream out;
  out << root << '\n';
  return out.str();
}

}  // namespace argsumm
