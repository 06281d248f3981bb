// Copyright 2026 The argsumm Authors.
// SPDX-License-Identifier: Apache-2.0

#include "argsumm/metrics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "argsumm/error.hpp"
#include "argsumm/text.hpp"

namespace argsumm {
namespace {

using Ngram = std::vector<std::string>;

std::map<Ngram, std::size_t> NgramCounts(std::span<const std::string> tokens, std::size_t n) {
  std::map<Ngram, std::size_t> counts;
  if (n == 0 || tokens.size() < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) ++counts[Ngram(tokens.begin() + i, tokens.begin() + i + n)];
  return counts;
}

std::set<Ngram> NgramTypes(std::span<const std::string> tokens, std::size_t n) {
  std::set<Ngram> types;
  if (n == 0 || tokens.size() < n) return types;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) types.emplace(tokens.begin() + i, tokens.begin() + i + n);
  return types;
}

double SetOverlapF1(const std::set<std::string>& a, const std::set<std::string>& b) {
  if (a.empty() || b.empty()) return 0.0;
  std::size_t common = 0;
  for (const auto& w : a) common += b.count(w);
  return 2.0 * static_cast<double>(common) / static_cast<double>(a.size() + b.size());
}

}  // namespace

Prf Prf::from_counts(double overlap, double candidate_total, double reference_total) {
  Prf out;
  out.precision = candidate_total > 0 ? overlap / candidate_total : 0.0;
  out.recall = reference_total > 0 ? overlap / reference_total : 0.0;
  const double denom = out.precision + out.recall;
  out.f1 = denom > 0 ? 2.0 * out.precision * out.recall / denom : 0.0;
  return out;
}

Prf rouge_n_tokens(std::span<const std::string> candidate, std::span<const std::string> reference, std::size_t n) {
  const auto cand = NgramCounts(candidate, n);
  const auto ref = NgramCounts(reference, n);
  std::size_t overlap = 0;
  for (const auto& [gram, count] : cand) {
    if (const auto it = ref.find(gram); it != ref.end()) overlap += std::min(count, it->second);
  }
  const auto total = [](const std::map<Ngram, std::size_t>& m) {
    return std::accumulate(m.begin(), m.end(), std::size_t{0}, [](std::size_t acc, const auto& kv) { return acc + kv.second; });
  };
  return Prf::from_counts(static_cast<double>(overlap), static_cast<double>(total(cand)),
                          static_cast<double>(total(ref)));
}

std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b) {
  std::vector<std::size_t> prev(b.size() + 1, 0);
  std::vector<std::size_t> curr(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      curr[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], curr[j - 1]);
    }
    std::swap(prev, curr);
  }
  return prev[b.size()];
}

Prf rouge_l_tokens(std::span<const std::string> candidate, std::span<const std::string> reference) {
  return Prf::from_counts(static_cast<double>(lcs_length(candidate, reference)), static_cast<double>(candidate.size()),
                          static_cast<double>(reference.size()));
}

Prf rouge_n(std::string_view candidate, std::string_view reference, int n, const RougeOptions& options) {
  if (n != 1 && n != 2) throw ConfigError("rouge_n supports n = 1 or 2, got " + std::to_string(n));
  return rouge_n_tokens(metric_tokens(candidate, options.stem), metric_tokens(reference, options.stem),
                        static_cast<std::size_t>(n));
}

Prf rouge_l(std::string_view candidate, std::string_view reference, const RougeOptions& options) {
  return rouge_l_tokens(metric_tokens(candidate, options.stem), metric_tokens(reference, options.stem));
}

RougeScore rouge(std::string_view candidate, std::string_view reference, const RougeOptions& options) {
  const auto cand = metric_tokens(candidate, options.stem);
  const auto ref = metric_tokens(reference, options.stem);
  return RougeScore{rouge_n_tokens(cand, ref, 1), rouge_n_tokens(cand, ref, 2), rouge_l_tokens(cand, ref)};
}

double novel_ngrams(std::string_view summary, std::span<const std::string> sources, std::size_t n) {
  if (n < 1 || n > 3) throw ConfigError("novel_ngrams supports n in 1..3, got " + std::to_string(n));
  const auto summary_types = NgramTypes(metric_tokens(summary), n);
  if (summary_types.empty()) return 0.0;
  std::set<Ngram> source_types;
  for (const auto& s : sources) source_types.merge(NgramTypes(metric_tokens(s), n));
  std::size_t novel = 0;
  for (const auto& gram : summary_types) novel += source_types.contains(gram) ? 0 : 1;
  return 100.0 * static_cast<double>(novel) / static_cast<double>(summary_types.size());
}

double novel_ngrams(std::string_view summary, std::string_view source, std::size_t n) {
  const std::string sources[] = {std::string(source)};
  return novel_ngrams(summary, sources, n);
}

std::vector<std::string> source_texts(const Conversation& conv) {
  std::vector<std::string> out;
  if (conv.title) out.push_back(*conv.title);
  if (conv.context) out.push_back(*conv.context);
  for (const auto& p : conv.posts) out.push_back(p.body);
  return out;
}

std::size_t input_length(const Conversation& conv) {
  std::size_t total = 0;
  for (const auto& text : source_texts(conv)) total += word_count(text);
  return total;
}

MdsStats mds_stats(const Conversation& conv, std::string_view reference, std::size_t segments,
                   const Segmenter& segmenter) {
  if (segments == 0) throw ConfigError("layout bias needs at least one segment");
  MdsStats stats;

  // Semantic units per post.
  std::vector<std::vector<std::set<std::string>>> units;
  for (const auto& post : conv.posts) {
    std::vector<std::set<std::string>> doc_units;
    for (const auto& s : segmenter.segment_post(post.body)) {
      const auto words = content_words(s.text);
      if (!words.empty()) doc_units.emplace_back(words.begin(), words.end());
    }
    units.push_back(std::move(doc_units));
  }

  std::vector<std::size_t> docs_with_units;
  for (std::size_t d = 0; d < units.size(); ++d) {
    if (!units[d].empty()) docs_with_units.push_back(d);
  }
  if (docs_with_units.size() >= 2) {
    double total = 0.0;
    std::size_t pairs = 0;
    for (auto a : docs_with_units) {
      for (auto b : docs_with_units) {
        if (a == b) continue;
        double sum = 0.0;
        for (const auto& u : units[a]) {
          double best = 0.0;
          for (const auto& v : units[b]) best = std::max(best, SetOverlapF1(u, v));
          sum += best;
        }
        total += sum / static_cast<double>(units[a].size());
        ++pairs;
      }
    }
    stats.inter_doc_similarity = total / static_cast<double>(pairs);
  }

  std::vector<const std::set<std::string>*> all_units;
  for (const auto& doc : units) {
    for (const auto& u : doc) all_units.push_back(&u);
  }
  if (!all_units.empty()) {
    std::vector<std::size_t> cluster(all_units.size());
    std::iota(cluster.begin(), cluster.end(), 0);
    auto find = [&](std::size_t x) {
      while (cluster[x] != x) x = cluster[x] = cluster[cluster[x]];
      return x;
    };
    for (std::size_t i = 0; i < all_units.size(); ++i) {
      for (std::size_t j = i + 1; j < all_units.size(); ++j) {
        if (SetOverlapF1(*all_units[i], *all_units[j]) >= kNearDuplicateOverlap) cluster[find(j)] = find(i);
      }
    }
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < all_units.size(); ++i) roots.insert(find(i));
    stats.redundancy = 1.0 - static_cast<double>(roots.size()) / static_cast<double>(all_units.size());
  }

  const auto ref_tokens = metric_tokens(reference);
  stats.layout_bias.assign(segments, 0.0);
  std::vector<std::size_t> contributors(segments, 0);
  for (const auto& post : conv.posts) {
    const auto tokens = metric_tokens(post.body);
    const std::size_t t = tokens.size();
    for (std::size_t s = 0; s < segments; ++s) {
      const std::size_t begin = s * t / segments;
      const std::size_t end = (s + 1) * t / segments;
      if (begin == end) continue;
      const std::span<const std::string> span(tokens.data() + begin, end - begin);
      stats.layout_bias[s] += rouge_n_tokens(span, ref_tokens, 1).recall;
      ++contributors[s];
    }
  }
  for (std::size_t s = 0; s < segments; ++s) {
    if (contributors[s] > 0) stats.layout_bias[s] /= static_cast<double>(contributors[s]);
  }
  return stats;
}

MdsStats mds_stats(const Conversation& conv, std::string_view reference, std::size_t segments) {
  static const Segmenter segmenter;
  return mds_stats(conv, reference, segments, segmenter);
}

}  // namespace argsumm
