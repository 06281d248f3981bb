// Copyright 2026 The argsumm Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <future>
#include <random>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "argsumm/error.hpp"
#include "argsumm/scoring.hpp"

namespace argsumm {
namespace {

using nlohmann::json;

struct Endpoint {
  std::string scheme_host_port;
  std::string base_path;
};

Endpoint ParseEndpoint(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw ConfigError("endpoint URL must include a scheme: \"" + url + "\"");
  const auto path_begin = url.find('/', scheme_end + 3);
  Endpoint ep;
  ep.scheme_host_port = url.substr(0, path_begin);
  if (path_begin != std::string::npos) {
    ep.base_path = url.substr(path_begin);
    while (!ep.base_path.empty() && ep.base_path.back() == '/') ep.base_path.pop_back();
  }
  return ep;
}

class BatchPoster {
 public:
  explicit BatchPoster(const ScorerConfig& config) : config_(config), endpoint_(ParseEndpoint(*config.endpoint_url)) {}

  json Post(const std::string& route, const json& payload, std::size_t batch_index) const {
    httplib::Client client(endpoint_.scheme_host_port);
    const auto timeout = std::chrono::duration_cast<std::chrono::microseconds>(config_.timeout);
    client.set_connection_timeout(timeout);
    client.set_read_timeout(timeout);
    client.set_write_timeout(timeout);

    const std::string path = endpoint_.base_path + route;
    const std::string body = payload.dump();
    std::string last_error;
    for (unsigned attempt = 0; attempt <= config_.max_retries; ++attempt) {
      if (attempt > 0) {
        std::this_thread::sleep_for(backoff_delay(config_, attempt - 1, config_.seed + batch_index * 7919 + attempt));
      }
      auto res = client.Post(path, body, "application/json");
      if (!res) {
        last_error = "transport error: " + httplib::to_string(res.error());
        continue;
      }
      if (res->status == 200) {
        try {
          return json::parse(res->body);
        } catch (const json::parse_error& e) {
          throw ScorerError("POST " + path + ": malformed JSON response: " + e.what());
        }
      }
      if (res->status >= 500) {
        last_error = "HTTP " + std::to_string(res->status);
        continue;
      }
      throw ScorerError("POST " + path + ": HTTP " + std::to_string(res->status) + " (not retryable)");
    }
    throw ScorerError("POST " + path + ": failed after " + std::to_string(config_.max_retries) +
                      " retries: " + last_error);
  }

 private:
  const ScorerConfig& config_;
  Endpoint endpoint_;
};

std::array<double, 3> ReadTriple(const json& row, const char* field) {
  if (!row.is_array() || row.size() != 3) {
    throw ScorerError(std::string("response field \"") + field + "\" must hold triples of numbers");
  }
  std::array<double, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (!row[i].is_number()) {
      throw ScorerError(std::string("response field \"") + field + "\" must hold triples of numbers");
    }
    out[i] = row[i].get<double>();
  }
  return out;
}

const json& ReadRows(const json& response, const char* field, std::size_t expected) {
  if (!response.is_object() || !response.contains(field) || !response[field].is_array()) {
    throw ScorerError(std::string("response lacks array field \"") + field + "\"");
  }
  const json& rows = response[field];
  if (rows.size() != expected) {
    throw ScorerError("response length mismatch: sent " + std::to_string(expected) + " items, got " +
                      std::to_string(rows.size()));
  }
  return rows;
}

// Runs fn(batch_index, begin, end) over [0, n) in batches, at most
// max_concurrency batches in flight, and concatenates results in order.
template <typename Result, typename Fn>
std::vector<Result> RunBatched(const ScorerConfig& config, std::size_t n, Fn fn) {
  std::vector<std::pair<std::size_t, std::size_t>> batches;
  for (std::size_t begin = 0; begin < n; begin += config.batch_size) {
    batches.emplace_back(begin, std::min(n, begin + config.batch_size));
  }
  std::vector<std::vector<Result>> results(batches.size());
  for (std::size_t wave = 0; wave < batches.size(); wave += config.max_concurrency) {
    const std::size_t wave_end = std::min(batches.size(), wave + config.max_concurrency);
    if (wave_end - wave == 1) {
      results[wave] = fn(wave, batches[wave].first, batches[wave].second);
      continue;
    }
    std::vector<std::future<std::vector<Result>>> inflight;
    for (std::size_t b = wave; b < wave_end; ++b) {
      inflight.push_back(std::async(std::launch::async, fn, b, batches[b].first, batches[b].second));
    }
    for (std::size_t b = wave; b < wave_end; ++b) results[b] = inflight[b - wave].get();
  }
  std::vector<Result> out;
  out.reserve(n);
  for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::chrono::milliseconds backoff_delay(const ScorerConfig& config, unsigned attempt, std::uint64_t jitter_seed) {
  double base = static_cast<double>(config.backoff_initial.count());
  for (unsigned i = 0; i < attempt && base < static_cast<double>(config.backoff_max.count()); ++i) base *= 2.0;
  base = std::min(base, static_cast<double>(config.backoff_max.count()));
  std::mt19937_64 rng(jitter_seed);
  std::uniform_real_distribution<double> jitter(0.5, 1.0);
  return std::chrono::milliseconds(static_cast<std::int64_t>(base * jitter(rng)));
}

RemoteScorer::RemoteScorer(ScorerConfig config) : config_(std::move(config)) {
  if (config_.backend != Backend::remote) throw ConfigError("RemoteScorer requires backend = remote");
  config_.validate();
  ParseEndpoint(*config_.endpoint_url);
}

std::vector<ArgRole> RemoteScorer::classify(std::span<const std::string> texts) const {
  const BatchPoster poster(config_);
  return RunBatched<ArgRole>(config_, texts.size(), [&](std::size_t batch, std::size_t begin, std::size_t end) {
    json payload = {{"texts", json::array()}};
    for (std::size_t i = begin; i < end; ++i) payload["texts"].push_back(texts[i]);
    const json response = poster.Post("/classify", payload, batch);
    const json& rows = ReadRows(response, "labels", end - begin);
    std::vector<ArgRole> out;
    for (const auto& row : rows) out.push_back(ArgRole::from_probabilities(ReadTriple(row, "labels")));
    return out;
  });
}

std::vector<ScoreTriple> RemoteScorer::score(std::span<const TextPair> pairs) const {
  const BatchPoster poster(config_);
  return RunBatched<ScoreTriple>(config_, pairs.size(), [&](std::size_t batch, std::size_t begin, std::size_t end) {
    json payload = {{"pairs", json::array()}};
    for (std::size_t i = begin; i < end; ++i) {
      payload["pairs"].push_back(json::array({pairs[i].premise, pairs[i].hypothesis}));
    }
    const json response = poster.Post("/nli", payload, batch);
    const json& rows = ReadRows(response, "scores", end - begin);
    std::vector<ScoreTriple> out;
    for (const auto& row : rows) {
      const auto t = ReadTriple(row, "scores");
      ScoreTriple triple{t[0], t[1], t[2]};
      validate(triple);
      out.push_back(triple);
    }
    return out;
  });
}

}  // namespace argsumm
