// Copyright 2026 The argsumm Authors.
// SPDX-License-Identifier: Apache-2.0

#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "argsumm/corpus.hpp"
#include "argsumm/error.hpp"
#include "test_support.hpp"

namespace argsumm {
namespace {

std::string Words(std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s += (i ? " w" : "w") + std::to_string(i);
  return s;
}

Conversation Conv(Domain domain, std::vector<std::size_t> lengths) {
  Conversation c{.conv_id = "c", .domain = domain};
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    c.posts.push_back(Post{.post_id = "p" + std::to_string(i), .body = Words(lengths[i])});
  }
  return c;
}

TEST(ParseCorpus, OneLineTwoPosts) {
  std::istringstream in(
      R"({"conv_id":"c1","domain":"reddit","tags":[],"posts":[{"post_id":"a","role":"comment","body":"first"},)"
      R"({"post_id":"b","role":"comment","body":"second","parent_id":"a","score":-2}]})"
      "\n");
  const auto corpus = parse_corpus(in);
  ASSERT_EQ(corpus.size(), 1u);
  ASSERT_EQ(corpus[0].posts.size(), 2u);
  EXPECT_EQ(corpus[0].posts[0].body, "first");
  EXPECT_EQ(corpus[0].posts[1].body, "second");
  EXPECT_EQ(corpus[0].posts[1].score, -2);
  EXPECT_EQ(corpus[0].domain, Domain::reddit);
}

TEST(ParseCorpus, MissingBodyNamesLineAndField) {
  std::istringstream in(
      R"({"conv_id":"ok","domain":"generic","tags":[],"posts":[{"post_id":"a","role":"comment","body":"x"}]})"
      "\n"
      R"({"conv_id":"bad","domain":"generic","tags":[],"posts":[{"post_id":"a","role":"comment","body":"x"},)"
      R"({"post_id":"b","role":"comment","body":"y"},{"post_id":"c","role":"comment"}]})"
      "\n");
  try {
    parse_corpus(in);
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("line 2"), std::string::npos) << msg;
    EXPECT_NE(msg.find("body"), std::string::npos) << msg;
  }
}

TEST(ParseCorpus, DanglingParentFixture) {
  try {
    parse_corpus(testing::fixture_path("dangling_parent.jsonl"));
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("x9"), std::string::npos) << e.what();
  }
}

TEST(ParseCorpus, RejectsDuplicatesAndBadValues) {
  const std::string post = R"("posts":[{"post_id":"a","role":"comment","body":"x"}])";
  std::istringstream dup("{\"conv_id\":\"c\",\"domain\":\"nyt\",\"tags\":[]," + post + "}\n{\"conv_id\":\"c\",\"domain\":\"nyt\",\"tags\":[]," + post + "}\n");
  EXPECT_THROW(parse_corpus(dup), DataError);
  std::istringstream bad_domain("{\"conv_id\":\"c\",\"domain\":\"usenet\",\"tags\":[]," + post + "}\n");
  EXPECT_THROW(parse_corpus(bad_domain), DataError);
  std::istringstream not_json("{\"conv_id\":\n");
  EXPECT_THROW(parse_corpus(not_json), DataError);
  std::istringstream blank_body(R"({"conv_id":"c","domain":"nyt","tags":[],"posts":[{"post_id":"a","role":"comment","body":"  \n"}]})");
  EXPECT_THROW(parse_corpus(blank_body), DataError);
  std::istringstream dup_post(R"({"conv_id":"c","domain":"nyt","tags":[],"posts":[{"post_id":"a","role":"comment","body":"x"},{"post_id":"a","role":"comment","body":"y"}]})");
  EXPECT_THROW(parse_corpus(dup_post), DataError);
}

TEST(ParseCorpus, ParentMayNameThreadRoot) {
  std::istringstream in(R"({"conv_id":"t","domain":"nyt","tags":[],"posts":[{"post_id":"a","role":"comment","body":"x","parent_id":"t"}]})");
  EXPECT_EQ(parse_corpus(in).at(0).posts.at(0).parent_id, "t");
}

TEST(ParseCorpus, RoundTripIsFixedPoint) {
  const auto corpus = parse_corpus(testing::fixture_path("corpus10.jsonl"));
  std::ostringstream out;
  write_corpus(out, corpus);
  std::istringstream in(out.str());
  const auto again = parse_corpus(in);
  EXPECT_EQ(again, corpus);
  std::ostringstream out2;
  write_corpus(out2, again);
  EXPECT_EQ(out2.str(), out.str());
}

TEST(Eligibility, RuleExamples) {
  const auto four = check_eligibility(Conv(Domain::reddit, {100, 100, 100, 100}));
  EXPECT_FALSE(four.eligible);
  EXPECT_EQ(four.violated_rules, std::vector<EligibilityRule>{EligibilityRule::too_few_posts});

  EXPECT_TRUE(check_eligibility(Conv(Domain::email, {100, 100, 100, 100})).eligible);

  const auto longest = check_eligibility(Conv(Domain::generic, {401, 100, 100, 100, 100}));
  EXPECT_EQ(longest.violated_rules, std::vector<EligibilityRule>{EligibilityRule::longest_post_over_limit});
}

TEST(Eligibility, RemovingAPostFromFiveTriggersTooFew) {
  auto conv = Conv(Domain::generic, {60, 60, 60, 60, 60});
  ASSERT_TRUE(check_eligibility(conv).eligible);
  conv.posts.pop_back();
  const auto r = check_eligibility(conv);
  EXPECT_FALSE(r.eligible);
  EXPECT_EQ(r.violated_rules.front(), EligibilityRule::too_few_posts);
}

TEST(Eligibility, NytUpperBoundIsConfigurable) {
  const auto conv = Conv(Domain::nyt, {300, 300, 300, 300, 300});
  EXPECT_TRUE(check_eligibility(conv).eligible);
  EligibilityOptions strict;
  strict.max_total_words_nyt = 1400;
  EXPECT_FALSE(check_eligibility(conv, strict).eligible);
  EXPECT_FALSE(check_eligibility(Conv(Domain::reddit, {300, 300, 300, 300, 300})).eligible);
}

TEST(Eligibility, SidecarRecord) {
  const auto conv = Conv(Domain::reddit, {10, 10, 10, 10});
  EXPECT_EQ(eligibility_jsonl(conv, check_eligibility(conv)),
            R"({"conv_id":"c","eligible":false,"violated_rules":["too_few_posts","total_length_out_of_range","avg_length_out_of_range"]})");
}

}  // namespace
}  // namespace argsumm
