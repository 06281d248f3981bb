// Copyright 2026 The argsumm Authors.
// SPDX-License-Identifier: Apache-2.0

#include "argsumm/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <unordered_set>

#include <json.hpp>

#include "argsumm/error.hpp"
#include "argsumm/text.hpp"

namespace argsumm {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(std::size_t line, const std::string& where, const std::string& what) {
  std::string msg = "line " + std::to_string(line) + ": ";
  if (!where.empty()) msg += where + ": ";
  throw DataError(msg + what);
}

const json* Find(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return nullptr;
  return &*it;
}

std::string RequireString(const json& obj, const char* key, std::size_t line, const std::string& where) {
  const json* v = Find(obj, key);
  if (v == nullptr) Fail(line, where, std::string("missing required field \"") + key + "\"");
  if (!v->is_string()) Fail(line, where, std::string("field \"") + key + "\" must be a string");
  return v->get<std::string>();
}

std::optional<std::string> OptionalString(const json& obj, const char* key, std::size_t line, const std::string& where) {
  const json* v = Find(obj, key);
  if (v == nullptr) return std::nullopt;
  if (!v->is_string()) Fail(line, where, std::string("field \"") + key + "\" must be a string");
  return v->get<std::string>();
}

template <typename Enum, typename ParseFn>
Enum RequireEnum(const json& obj, const char* key, std::size_t line, const std::string& where, ParseFn parse) {
  const std::string raw = RequireString(obj, key, line, where);
  try {
    return parse(raw);
  } catch (const ConfigError& e) {
    Fail(line, where, std::string("field \"") + key + "\": " + e.what());
  }
}

Post ParsePost(const json& obj, std::size_t line, std::size_t index) {
  const std::string where = "posts[" + std::to_string(index) + "]";
  if (!obj.is_object()) Fail(line, where, "post must be a JSON object");
  Post post;
  post.post_id = RequireString(obj, "post_id", line, where);
  if (post.post_id.empty()) Fail(line, where, "field \"post_id\" must be non-empty");
  post.author = OptionalString(obj, "author", line, where);
  if (const json* s = Find(obj, "score")) {
    if (!s->is_number_integer()) Fail(line, where, "field \"score\" must be an integer");
    post.score = s->get<std::int64_t>();
  }
  post.role = RequireEnum<PostRole>(obj, "role", line, where, parse_post_role);
  post.body = RequireString(obj, "body", line, where);
  if (word_count(post.body) == 0) Fail(line, where, "field \"body\" is empty after whitespace normalization");
  post.parent_id = OptionalString(obj, "parent_id", line, where);
  post.timestamp = OptionalString(obj, "timestamp", line, where);
  return post;
}

}  // namespace

std::string_view to_string(PostRole role) {
  switch (role) {
    case PostRole::comment: return "comment";
    case PostRole::answer: return "answer";
    case PostRole::answer_comment: return "answer_comment";
    case PostRole::email: return "email";
    case PostRole::forum_post: return "forum_post";
  }
  throw InternalError("unknown PostRole");
}

std::string_view to_string(Domain domain) {
  switch (domain) {
    case Domain::nyt: return "nyt";
    case Domain::reddit: return "reddit";
    case Domain::stack: return "stack";
    case Domain::email: return "email";
    case Domain::generic: return "generic";
  }
  throw InternalError("unknown Domain");
}

std::string_view to_string(EligibilityRule rule) {
  switch (rule) {
    case EligibilityRule::too_few_posts: return "too_few_posts";
    case EligibilityRule::longest_post_over_limit: return "longest_post_over_limit";
    case EligibilityRule::total_length_out_of_range: return "total_length_out_of_range";
    case EligibilityRule::avg_length_out_of_range: return "avg_length_out_of_range";
    case EligibilityRule::negative_score_posts_present: return "negative_score_posts_present";
  }
  throw InternalError("unknown EligibilityRule");
}

PostRole parse_post_role(std::string_view s) {
  for (auto r : {PostRole::comment, PostRole::answer, PostRole::answer_comment, PostRole::email, PostRole::forum_post}) {
    if (to_string(r) == s) return r;
  }
  throw ConfigError("unknown post role \"" + std::string(s) + "\"");
}

Domain parse_domain(std::string_view s) {
  for (auto d : {Domain::nyt, Domain::reddit, Domain::stack, Domain::email, Domain::generic}) {
    if (to_string(d) == s) return d;
  }
  throw ConfigError("unknown domain \"" + std::string(s) + "\"");
}

CorpusFormat parse_corpus_format(std::string_view s) {
  if (s == "jsonl") return CorpusFormat::jsonl;
  throw ConfigError("unknown corpus format \"" + std::string(s) + "\"");
}

Conversation parse_conversation(std::string_view line, std::size_t line_number) {
  json record;
  try {
    record = json::parse(line);
  } catch (const json::parse_error& e) {
    Fail(line_number, "", std::string("malformed JSON: ") + e.what());
  }
  if (!record.is_object()) Fail(line_number, "", "record must be a JSON object");

  Conversation conv;
  conv.conv_id = RequireString(record, "conv_id", line_number, "");
  if (conv.conv_id.empty()) Fail(line_number, "", "field \"conv_id\" must be non-empty");
  conv.domain = RequireEnum<Domain>(record, "domain", line_number, "", parse_domain);
  conv.title = OptionalString(record, "title", line_number, "");
  conv.context = OptionalString(record, "context", line_number, "");
  conv.reference_summary = OptionalString(record, "reference_summary", line_number, "");
  if (const json* tags = Find(record, "tags")) {
    if (!tags->is_array()) Fail(line_number, "", "field \"tags\" must be an array of strings");
    for (const auto& t : *tags) {
      if (!t.is_string()) Fail(line_number, "", "field \"tags\" must be an array of strings");
      conv.tags.push_back(t.get<std::string>());
    }
  }

  const json* posts = Find(record, "posts");
  if (posts == nullptr) Fail(line_number, "", "missing required field \"posts\"");
  if (!posts->is_array() || posts->empty()) Fail(line_number, "", "field \"posts\" must be a non-empty array");
  for (std::size_t i = 0; i < posts->size(); ++i) conv.posts.push_back(ParsePost((*posts)[i], line_number, i));

  std::unordered_set<std::string> ids;
  for (const auto& p : conv.posts) {
    if (!ids.insert(p.post_id).second) Fail(line_number, "", "duplicate post_id \"" + p.post_id + "\"");
  }
  for (std::size_t i = 0; i < conv.posts.size(); ++i) {
    const auto& parent = conv.posts[i].parent_id;
    if (parent && *parent != conv.conv_id && !ids.contains(*parent)) {
      Fail(line_number, "posts[" + std::to_string(i) + "]", "dangling parent_id \"" + *parent + "\"");
    }
  }
  return conv;
}

std::vector<Conversation> parse_corpus(std::istream& in, CorpusFormat format) {
  if (format != CorpusFormat::jsonl) throw ConfigError("unsupported corpus format");
  std::vector<Conversation> corpus;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (std::all_of(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\t'; })) continue;
    Conversation conv = parse_conversation(line, line_number);
    if (!seen.insert(conv.conv_id).second) {
      Fail(line_number, "", "duplicate conv_id \"" + conv.conv_id + "\"");
    }
    corpus.push_back(std::move(conv));
  }
  return corpus;
}

std::vector<Conversation> parse_corpus(const std::filesystem::path& path, CorpusFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open corpus file " + path.string());
  try {
    return parse_corpus(in, format);
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

std::string to_jsonl(const Conversation& conv) {
  json record = json::object();
  record["conv_id"] = conv.conv_id;
  record["domain"] = std::string(to_string(conv.domain));
  if (conv.title) record["title"] = *conv.title;
  if (conv.context) record["context"] = *conv.context;
  if (conv.reference_summary) record["reference_summary"] = *conv.reference_summary;
  record["tags"] = conv.tags;
  json posts = json::array();
  for (const auto& p : conv.posts) {
    json post = json::object();
    post["post_id"] = p.post_id;
    if (p.author) post["author"] = *p.author;
    if (p.score) post["score"] = *p.score;
    post["role"] = std::string(to_string(p.role));
    post["body"] = p.body;
    if (p.parent_id) post["parent_id"] = *p.parent_id;
    if (p.timestamp) post["timestamp"] = *p.timestamp;
    posts.push_back(std::move(post));
  }
  record["posts"] = std::move(posts);
  return record.dump();
}

void write_corpus(std::ostream& out, std::span<const Conversation> corpus) {
  for (const auto& conv : corpus) out << to_jsonl(conv) << '\n';
}

EligibilityReport check_eligibility(const Conversation& conv, const EligibilityOptions& options) {
  EligibilityReport report;
  auto violate = [&](EligibilityRule rule) { report.violated_rules.push_back(rule); };

  const std::size_t min_posts = conv.domain == Domain::email ? options.min_posts_email : options.min_posts;
  if (conv.posts.size() < min_posts) violate(EligibilityRule::too_few_posts);

  std::size_t longest = 0;
  std::size_t total = 0;
  for (const auto& p : conv.posts) {
    const std::size_t n = word_count(p.body);
    longest = std::max(longest, n);
    total += n;
  }
  if (longest > options.max_post_words) violate(EligibilityRule::longest_post_over_limit);

  const std::size_t max_total = conv.domain == Domain::nyt ? options.max_total_words_nyt : options.max_total_words;
  if (total < options.min_total_words || total > max_total) violate(EligibilityRule::total_length_out_of_range);

  const double average = conv.posts.empty() ? 0.0 : static_cast<double>(total) / static_cast<double>(conv.posts.size());
  if (average < options.min_avg_words || average > options.max_avg_words) {
    violate(EligibilityRule::avg_length_out_of_range);
  }

  if (conv.domain == Domain::stack &&
      std::any_of(conv.posts.begin(), conv.posts.end(), [](const Post& p) { return p.score && *p.score < 0; })) {
    violate(EligibilityRule::negative_score_posts_present);
  }

  report.eligible = report.violated_rules.empty();
  return report;
}

std::string eligibility_jsonl(const Conversation& conv, const EligibilityReport& report) {
  json record = json::object();
  record["conv_id"] = conv.conv_id;
  record["eligible"] = report.eligible;
  json rules = json::array();
  for (auto r : report.violated_rules) rules.push_back(std::string(to_string(r)));
  record["violated_rules"] = std::move(rules);
  return record.dump();
}

}  // namespace argsumm
