// Copyright 2026 The argsumm Authors.
// SPDX-License-Identifier: Apache-2.0

#include "argsumm/segment.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <fstream>
#include <sstream>

#include "abbreviations_data.hpp"
#include "argsumm/error.hpp"

namespace argsumm {
namespace {

struct CodePoint {
  UChar32 c;
  std::size_t begin;
  std::size_t end;
};

std::vector<CodePoint> Decode(std::string_view s) {
  std::vector<CodePoint> out;
  out.reserve(s.size());
  const auto* bytes = reinterpret_cast<const uint8_t*>(s.data());
  const auto length = static_cast<int32_t>(s.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t begin = i;
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    if (c < 0) c = 0xFFFD;
    out.push_back({c, static_cast<std::size_t>(begin), static_cast<std::size_t>(i)});
  }
  return out;
}

bool IsTerminal(UChar32 c) { return c == '.' || c == '!' || c == '?'; }

bool IsClosing(UChar32 c) {
  switch (c) {
    case '"':
    case '\'':
    case ')':
    case ']':
    case 0x201D:  // ”
    case 0x2019:  // ’
    case 0x00BB:  // »
      return true;
    default:
      return false;
  }
}

bool IsOpening(UChar32 c) {
  switch (c) {
    case '"':
    case '\'':
    case '(':
    case '[':
    case 0x201C:  // “
    case 0x2018:  // ‘
    case 0x00AB:  // «
      return true;
    default:
      return false;
  }
}

bool StartsSentence(UChar32 c) { return u_isupper(c) || u_istitle(c) || u_isdigit(c) || IsOpening(c); }

}  // namespace

Segmenter::Segmenter() : abbreviations_(parse_abbreviations(detail::kDefaultAbbreviations)) {}

Segmenter::Segmenter(std::unordered_set<std::string> abbreviations) : abbreviations_(std::move(abbreviations)) {}

Segmenter Segmenter::from_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open abbreviation list " + path.string());
  std::ostringstream contents;
  contents << in.rdbuf();
  return Segmenter(parse_abbreviations(contents.str()));
}

std::unordered_set<std::string> Segmenter::parse_abbreviations(std::string_view contents) {
  std::unordered_set<std::string> out;
  std::size_t pos = 0;
  while (pos <= contents.size()) {
    std::size_t nl = contents.find('\n', pos);
    if (nl == std::string_view::npos) nl = contents.size();
    std::string_view line = contents.substr(pos, nl - pos);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (!line.empty() && line.front() != '#') {
      if (line.back() == '.') line.remove_suffix(1);
      out.emplace(line);
    }
    pos = nl + 1;
  }
  return out;
}

bool Segmenter::IsAbbreviation(std::string_view body, std::size_t period_pos) const {
  std::size_t start = period_pos;
  while (start > 0) {
    const unsigned char prev = static_cast<unsigned char>(body[start - 1]);
    if (prev == ' ' || prev == '\t' || prev == '\n' || prev == '\r' || prev == '(' || prev == '"' || prev == '\'') break;
    --start;
  }
  if (start == period_pos) return false;
  std::string token(body.substr(start, period_pos - start));
  for (auto& ch : token) {
    if (ch >= 'A' && ch <= 'Z') ch = static_cast<char>(ch - 'A' + 'a');
  }
  return abbreviations_.contains(token);
}

std::vector<Sentence> Segmenter::segment_post(std::string_view body, std::size_t doc_index) const {
  const std::vector<CodePoint> cps = Decode(body);
  std::vector<Sentence> out;

  auto emit = [&](std::size_t first, std::size_t last_exclusive) {
    // Trim Unicode whitespace on both sides of [first, last_exclusive).
    while (first < last_exclusive && u_isUWhiteSpace(cps[first].c)) ++first;
    while (last_exclusive > first && u_isUWhiteSpace(cps[last_exclusive - 1].c)) --last_exclusive;
    if (first == last_exclusive) return;
    Sentence s;
    s.doc_index = doc_index;
    s.sent_index = out.size();
    s.char_span = {cps[first].begin, cps[last_exclusive - 1].end};
    s.text = std::string(body.substr(s.char_span.begin, s.char_span.end - s.char_span.begin));
    out.push_back(std::move(s));
  };

  std::size_t start = 0;
  std::size_t i = 0;
  while (i < cps.size()) {
    if (!IsTerminal(cps[i].c) && cps[i].c != 0x2026) {
      ++i;
      continue;
    }
    const std::size_t run_begin = i;
    std::size_t dots = 0;
    bool ellipsis = false;
    while (i < cps.size() && (IsTerminal(cps[i].c) || cps[i].c == 0x2026)) {
      if (cps[i].c == '.') ++dots;
      if (cps[i].c == 0x2026) ellipsis = true;
      ++i;
    }
    const std::size_t run_length = i - run_begin;
    if (dots >= 2 || ellipsis) continue;
    while (i < cps.size() && IsClosing(cps[i].c)) ++i;
    const std::size_t boundary = i;

    if (i >= cps.size() || !u_isUWhiteSpace(cps[i].c)) continue;
    std::size_t next = i;
    while (next < cps.size() && u_isUWhiteSpace(cps[next].c)) ++next;
    if (next >= cps.size() || !StartsSentence(cps[next].c)) continue;
    if (run_length == 1 && cps[run_begin].c == '.' && IsAbbreviation(body, cps[run_begin].begin)) continue;

    emit(start, boundary);
    start = boundary;
  }
  emit(start, cps.size());
  return out;
}

std::vector<std::vector<Sentence>> Segmenter::segment_conversation(const Conversation& conv) const {
  std::vector<std::vector<Sentence>> out;
  out.reserve(conv.posts.size());
  for (std::size_t d = 0; d < conv.posts.size(); ++d) {
    auto sentences = segment_post(conv.posts[d].body, d);
    if (sentences.empty()) {
      throw DataError("conversation " + conv.conv_id + ": post " + std::to_string(d) + " (\"" +
                      conv.posts[d].post_id + "\") has no sentences");
    }
    out.push_back(std::move(sentences));
  }
  return out;
}

std::vector<Sentence> segment_post(std::string_view body) {
  static const Segmenter segmenter;
  return segmenter.segment_post(body);
}

std::vector<std::vector<Sentence>> segment_conversation(const Conversation& conv) {
  static const Segmenter segmenter;
  return segmenter.segment_conversation(conv);
}

std::vector<Sentence> flatten(const std::vector<std::vector<Sentence>>& per_post) {
  std::vector<Sentence> out;
  for (const auto& post : per_post) out.insert(out.end(), post.begin(), post.end());
  return out;
}

}  // namespace argsumm
