// Copyright 2026 The argsumm Authors.
// SPDX-License-Identifier: Apache-2.0

#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "argsumm/arggraph.hpp"
#include "argsumm/extractive.hpp"
#include "argsumm/metrics.hpp"
#include "argsumm/pipeline.hpp"

namespace {

using namespace argsumm;

const std::vector<std::string>& Vocab() {
  static const std::vector<std::string> v = {"parks",  "budget", "city",   "trees", "council", "voters", "taxes",
                                             "schools", "roads", "housing", "rent", "bikes",   "cars",   "safety",
                                             "should", "because", "think", "not",   "good",    "bad"};
  return v;
}

std::string RandomSentence(std::mt19937_64& rng, std::size_t words) {
  std::uniform_int_distribution<std::size_t> pick(0, Vocab().size() - 1);
  std::string s = "Sentence";
  for (std::size_t i = 0; i < words; ++i) s += " " + Vocab()[pick(rng)];
  return s + ".";
}

std::vector<Sentence> RandomSentences(std::size_t n, std::uint64_t seed = 13) {
  std::mt19937_64 rng(seed);
  std::vector<Sentence> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back({0, i, RandomSentence(rng, 12), {}});
  return out;
}

Conversation RandomConversation(std::size_t posts, std::size_t sentences_per_post) {
  std::mt19937_64 rng(7);
  Conversation conv{.conv_id = "bench"};
  for (std::size_t p = 0; p < posts; ++p) {
    std::string body;
    for (std::size_t s = 0; s < sentences_per_post; ++s) body += (s ? " " : "") + RandomSentence(rng, 10);
    conv.posts.push_back(Post{.post_id = std::to_string(p), .body = body});
  }
  conv.reference_summary = RandomSentence(rng, 40);
  return conv;
}

void BM_LexRank(benchmark::State& state) {
  const auto ss = RandomSentences(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lexrank(ss));
}
BENCHMARK(BM_LexRank)->Arg(15)->Arg(60)->Arg(200);

void BM_TextRank(benchmark::State& state) {
  const auto ss = RandomSentences(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(textrank(ss));
}
BENCHMARK(BM_TextRank)->Arg(15)->Arg(60)->Arg(200);

void BM_BuildGraph(benchmark::State& state) {
  const auto conv = RandomConversation(static_cast<std::size_t>(state.range(0)), 6);
  const Segmenter segmenter;
  const HeuristicScorer scorer;
  for (auto _ : state) benchmark::DoNotOptimize(build_graph(conv, segmenter, scorer));
}
BENCHMARK(BM_BuildGraph)->Arg(5)->Arg(20)->Arg(50);

void BM_Rouge(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto cand = RandomSentence(rng, static_cast<std::size_t>(state.range(0)));
  const auto ref = RandomSentence(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rouge(cand, ref));
}
BENCHMARK(BM_Rouge)->Arg(30)->Arg(90)->Arg(400);

void BM_ExtractiveOracle(benchmark::State& state) {
  const auto ss = RandomSentences(static_cast<std::size_t>(state.range(0)));
  std::mt19937_64 rng(5);
  const auto ref = RandomSentence(rng, 60);
  for (auto _ : state) benchmark::DoNotOptimize(extractive_oracle(ss, ref));
}
BENCHMARK(BM_ExtractiveOracle)->Arg(15)->Arg(60);

void BM_PrepareArgGraph(benchmark::State& state) {
  const std::vector<Conversation> corpus(8, RandomConversation(8, 6));
  PipelineConfig cfg;
  cfg.jobs = static_cast<unsigned>(state.range(0));
  const Pipeline pipeline(cfg);
  for (auto _ : state) benchmark::DoNotOptimize(pipeline.prepare(corpus));
}
BENCHMARK(BM_PrepareArgGraph)->Arg(1)->Arg(4)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
