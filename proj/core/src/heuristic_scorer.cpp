// Copyright 2026 The argsumm Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "argsumm/scoring.hpp"
#include "argsumm/text.hpp"

namespace argsumm {
namespace {

const std::unordered_set<std::string_view> kNegations = {
    "not",    "no",     "never",  "none",  "nobody",   "nothing", "neither", "nor",   "cannot", "cant",
    "dont",   "doesnt", "didnt",  "isnt",  "arent",    "wasnt",   "werent",  "wont",  "wouldnt",
    "shouldnt", "couldnt", "hasnt", "havent", "hadnt", "aint",    "mustnt",
};

const std::unordered_set<std::string_view> kPremiseStarters = {
    "because", "since", "as", "given", "due", "considering",
};

const std::unordered_set<std::string_view> kPremiseMarkers = {
    "because", "since",  "due",   "evidence", "example",    "instance", "shows",   "show",
    "shown",   "studies", "study", "research", "statistics", "percent",  "according",
};

const std::unordered_set<std::string_view> kClaimMarkers = {
    "should",  "must",      "ought",  "need",     "needs",       "shouldnt", "mustnt",     "think",
    "believe", "feel",      "opinion", "clearly", "obviously",   "therefore", "thus",      "hence",
    "agree",   "disagree",  "better", "worse",    "best",        "worst",     "wrong",     "important",
    "necessary", "unacceptable", "ridiculous", "absurd",
};

const std::unordered_multimap<std::string_view, std::string_view>& Antonyms() {
  static const auto table = [] {
    constexpr std::pair<std::string_view, std::string_view> kPairs[] = {
        {"good", "bad"},           {"true", "false"},         {"right", "wrong"},
        {"agree", "disagree"},     {"support", "oppose"},     {"like", "dislike"},
        {"love", "hate"},          {"increase", "decrease"},  {"safe", "dangerous"},
        {"legal", "illegal"},      {"possible", "impossible"}, {"better", "worse"},
        {"best", "worst"},         {"high", "low"},           {"win", "lose"},
        {"accept", "reject"},      {"allow", "ban"},          {"allow", "forbid"},
        {"positive", "negative"},  {"fair", "unfair"},        {"easy", "hard"},
        {"cheap", "expensive"},    {"rich", "poor"},          {"strong", "weak"},
        {"success", "failure"},    {"benefit", "harm"},       {"helpful", "harmful"},
        {"effective", "ineffective"}, {"correct", "incorrect"}, {"moral", "immoral"},
        {"ethical", "unethical"},  {"responsible", "irresponsible"},
    };
    std::unordered_multimap<std::string_view, std::string_view> t;
    for (const auto& [a, b] : kPairs) {
      t.emplace(a, b);
      t.emplace(b, a);
    }
    return t;
  }();
  return table;
}

struct Profile {
  std::set<std::string> words;
  bool negated = false;
};

Profile MakeProfile(const std::vector<std::string>& tokens, bool content_only) {
  Profile p;
  std::size_t negations = 0;
  for (const auto& t : tokens) {
    if (kNegations.contains(t)) {
      ++negations;
    } else if (!content_only || !is_stopword(t)) {
      p.words.insert(t);
    }
  }
  p.negated = negations % 2 == 1;
  return p;
}

bool AntonymIn(const std::string& word, const std::set<std::string>& pool) {
  const auto [lo, hi] = Antonyms().equal_range(word);
  for (auto it = lo; it != hi; ++it) {
    if (pool.contains(std::string(it->second))) return true;
  }
  return false;
}

}  // namespace

ArgRole HeuristicScorer::classify_one(std::string_view text) const {
  const auto tokens = metric_tokens(text);
  const auto has_content = std::any_of(tokens.begin(), tokens.end(), [](const std::string& t) {
    return !is_stopword(t) && !kNegations.contains(t);
  });
  auto with = [](RoleLabel label) {
    std::array<double, 3> p{0.1, 0.1, 0.1};
    p[static_cast<std::size_t>(label)] = 0.8;
    return ArgRole{label, p};
  };
  auto any_in = [&](const std::unordered_set<std::string_view>& set) {
    return std::any_of(tokens.begin(), tokens.end(), [&](const std::string& t) { return set.contains(t); });
  };

  if (tokens.size() < 3 || !has_content) return with(RoleLabel::non_argument);
  if (kPremiseStarters.contains(tokens.front())) return with(RoleLabel::premise);

  std::string_view trimmed = text;
  while (!trimmed.empty() && (trimmed.back() == ' ' || trimmed.back() == '\n' || trimmed.back() == '\t' ||
                              trimmed.back() == '"' || trimmed.back() == ')')) {
    trimmed.remove_suffix(1);
  }
  if (!trimmed.empty() && trimmed.back() == '?') return with(RoleLabel::non_argument);
  if (any_in(kClaimMarkers)) return with(RoleLabel::claim);
  if (any_in(kPremiseMarkers)) return with(RoleLabel::premise);

  return with(RoleLabel::premise);
}

ScoreTriple HeuristicScorer::score_one(std::string_view premise, std::string_view hypothesis) const {
  return ScoreTokens(metric_tokens(premise), metric_tokens(hypothesis));
}

ScoreTriple HeuristicScorer::ScoreTokens(const std::vector<std::string>& premise_tokens,
                                         const std::vector<std::string>& hypothesis_tokens) {
  Profile h = MakeProfile(hypothesis_tokens, true);
  Profile p = MakeProfile(premise_tokens, true);
  if (h.words.empty()) {
    // Stopword-only hypothesis: compare on all tokens instead.
    h = MakeProfile(hypothesis_tokens, false);
    p = MakeProfile(premise_tokens, false);
  }
  if (h.words.empty()) return ScoreTriple{0.0, 0.0, 1.0};

  std::size_t covered = 0;
  bool antonym = false;
  for (const auto& word : h.words) {
    if (p.words.contains(word)) {
      ++covered;
    } else if (AntonymIn(word, p.words)) {
      ++covered;
      antonym = true;
    }
  }
  const double ratio = static_cast<double>(covered) / static_cast<double>(h.words.size());
  const bool conflict = antonym || (h.negated != p.negated);
  return conflict ? ScoreTriple{0.0, ratio, 1.0 - ratio} : ScoreTriple{ratio, 0.0, 1.0 - ratio};
}

std::vector<ArgRole> HeuristicScorer::classify(std::span<const std::string> texts) const {
  std::vector<ArgRole> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(classify_one(t));
  return out;
}

std::vector<ScoreTriple> HeuristicScorer::score(std::span<const TextPair> pairs) const {
  std::vector<ScoreTriple> out;
  out.reserve(pairs.size());
  // Claim pairs repeat each text many times; tokenize each text once.
  std::unordered_map<std::string_view, std::vector<std::string>> tokens;
  auto tokens_of = [&](const std::string& text) -> const std::vector<std::string>& {
    auto it = tokens.find(text);
    if (it == tokens.end()) it = tokens.emplace(text, metric_tokens(text)).first;
    return it->second;
  };
  for (const auto& p : pairs) out.push_back(ScoreTokens(tokens_of(p.premise), tokens_of(p.hypothesis)));
  return out;
}

}  // namespace argsumm
