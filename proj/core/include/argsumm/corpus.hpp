// Copyright 2026 The argsumm Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace argsumm {

enum class PostRole { comment, answer, answer_comment, email, forum_post };
enum class Domain { nyt, reddit, stack, email, generic };
enum class CorpusFormat { jsonl };

struct Post {
  std::string post_id;
  std::optional<std::string> author;
  /// Upvotes minus downvotes, when the source has ratings.
  std::optional<std::int64_t> score;
  PostRole role = PostRole::comment;
  std::string body;
  /// Reply-to link: another post_id of the same conversation, or the conv_id
  /// to mean the thread root.
  std::optional<std::string> parent_id;
  std::optional<std::string> timestamp;

  bool operator==(const Post&) const = default;
};

struct Conversation {
  std::string conv_id;
  Domain domain = Domain::generic;
  std::optional<std::string> title;
  /// Source metadata such as an article headline, keywords or snippet.
  std::optional<std::string> context;
  std::vector<std::string> tags;
  std::vector<Post> posts;
  std::optional<std::string> reference_summary;

  bool operator==(const Conversation&) const = default;
};

enum class EligibilityRule {
  too_few_posts,
  longest_post_over_limit,
  total_length_out_of_range,
  avg_length_out_of_range,
  negative_score_posts_present,
};

struct EligibilityReport {
  bool eligible = true;
  std::vector<EligibilityRule> violated_rules;

  bool operator==(const EligibilityReport&) const = default;
};

/// Thresholds of the thread selection filters. All ranges are inclusive and
/// lengths are word_count() values over post bodies only.
struct EligibilityOptions {
  std::size_t min_posts = 5;
  std::size_t min_posts_email = 4;
  std::size_t max_post_words = 400;
  std::size_t min_total_words = 100;
  std::size_t max_total_words = 1400;
  /// NYT threads allow a longer total.
  std::size_t max_total_words_nyt = 2048;
  double min_avg_words = 50.0;
  double max_avg_words = 300.0;
};

std::string_view to_string(PostRole role);
std::string_view to_string(Domain domain);
std::string_view to_string(EligibilityRule rule);
PostRole parse_post_role(std::string_view s);
Domain parse_domain(std::string_view s);
CorpusFormat parse_corpus_format(std::string_view s);

/// Parses one JSONL record. Errors are DataError naming `line_number` and the
/// offending field.
Conversation parse_conversation(std::string_view line, std::size_t line_number = 1);

/// Reads a whole corpus. Blank lines are skipped; any malformed record,
/// duplicate conv_id or dangling parent_id raises DataError.
std::vector<Conversation> parse_corpus(std::istream& in, CorpusFormat format = CorpusFormat::jsonl);
std::vector<Conversation> parse_corpus(const std::filesystem::path& path, CorpusFormat format = CorpusFormat::jsonl);

/// One JSONL line (no trailing newline) with sorted keys; absent optionals are
/// omitted.
std::string to_jsonl(const Conversation& conv);
void write_corpus(std::ostream& out, std::span<const Conversation> corpus);

EligibilityReport check_eligibility(const Conversation& conv, const EligibilityOptions& options = {});

/// {"conv_id", "eligible", "violated_rules"} sidecar record.
std::string eligibility_jsonl(const Conversation& conv, const EligibilityReport& report);

}  // namespace argsumm
