// Copyright 2026 The argsumm Authors.
// SPDX-License-Identifier: Apache-2.0

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "argsumm/error.hpp"
#include "argsumm/metrics.hpp"
#include "oracles.hpp"

namespace argsumm {
namespace {

TEST(RougeN, Examples) {
  const auto same = rouge_n("the cat sat", "the cat sat", 1);
  EXPECT_EQ(same.precision, 1.0);
  EXPECT_EQ(same.recall, 1.0);
  EXPECT_EQ(same.f1, 1.0);
  const auto disjoint = rouge_n("alpha beta", "gamma delta", 2);
  EXPECT_EQ(disjoint.f1, 0.0);
  const auto r1 = rouge_n("the cat sat", "the cat ran", 1);
  EXPECT_DOUBLE_EQ(r1.precision, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(r1.recall, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(r1.f1, 2.0 / 3.0);
  EXPECT_THROW(rouge_n("a", "a", 3), ConfigError);
}

TEST(RougeN, ClipsCounts) {
  const auto r = rouge_n("the the the", "the cat", 1);
  EXPECT_DOUBLE_EQ(r.precision, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(r.recall, 1.0 / 2.0);
}

TEST(RougeL, Examples) {
  EXPECT_EQ(rouge_l("x y z", "x y z").f1, 1.0);
  const auto r = rouge_l("a b c d", "a c b d");
  EXPECT_DOUBLE_EQ(r.precision, 0.75);
  EXPECT_DOUBLE_EQ(r.recall, 0.75);
  const auto empty = rouge_l("", "a b");
  EXPECT_EQ(empty.precision, 0.0);
  EXPECT_EQ(empty.recall, 0.0);
  EXPECT_EQ(empty.f1, 0.0);
}

TEST(RougeL, LcsMatchesMemoizedRecursion) {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"a b c d e f", "b d f a c e"}, {"x x y y", "y x y x"}, {"", "a"}, {"p q r s", "p q r s"}};
  for (const auto& [a, b] : cases) {
    const auto ta = metric_tokens(a), tb = metric_tokens(b);
    EXPECT_EQ(lcs_length(ta, tb), oracle::lcs(ta, tb)) << a << " | " << b;
  }
}

TEST(Rouge, StemmingOption) {
  EXPECT_LT(rouge_n("cats running", "cat runs", 1).f1, 1.0);
  EXPECT_EQ(rouge_n("cats running", "cat runs", 1, {.stem = true}).f1, 1.0);
}

TEST(NovelNgrams, Examples) {
  EXPECT_EQ(novel_ngrams("a b", "x a b y", 2), 0.0);
  EXPECT_EQ(novel_ngrams("p q", "a b", 1), 100.0);
  EXPECT_NEAR(novel_ngrams("a b c", "a b", 1), 100.0 / 3.0, 1e-12);
  EXPECT_EQ(novel_ngrams("a", "a", 2), 0.0);
  const std::vector<std::string> sources = {"x a", "b y"};
  EXPECT_EQ(novel_ngrams("a b", sources, 2), 100.0);  // "a b" spans two texts
}

TEST(InputLength, CountsMetadata) {
  Conversation conv{.conv_id = "c"};
  conv.posts = {Post{.post_id = "a", .body = "one two three four five six seven eight nine ten"},
                Post{.post_id = "b", .body = "one two three four five six seven eight nine ten"}};
  EXPECT_EQ(input_length(conv), 20u);
  conv.posts.pop_back();
  conv.title = "five words in this title";
  EXPECT_EQ(input_length(conv), 15u);
  conv.context = "Headline here | snippet words";
  EXPECT_EQ(input_length(conv), 15u + 5u);
}

Conversation Posts(std::vector<std::string> bodies) {
  Conversation conv{.conv_id = "c"};
  for (std::size_t i = 0; i < bodies.size(); ++i) conv.posts.push_back(Post{.post_id = std::to_string(i), .body = bodies[i]});
  return conv;
}

TEST(MdsStats, Examples) {
  const auto same = mds_stats(Posts({"Parks need money. Trees grow slowly.", "Parks need money. Trees grow slowly."}), "x");
  ASSERT_TRUE(same.inter_doc_similarity);
  EXPECT_DOUBLE_EQ(*same.inter_doc_similarity, 1.0);

  const auto disjoint = mds_stats(Posts({"Apples ripen.", "Trains depart.", "Oceans rise."}), "x");
  EXPECT_EQ(disjoint.redundancy, 0.0);
  EXPECT_EQ(*disjoint.inter_doc_similarity, 0.0);

  EXPECT_FALSE(mds_stats(Posts({"Only one post."}), "x").inter_doc_similarity);

  // The reference copies the first quarter of the single post.
  const auto layout = mds_stats(Posts({"alpha beta gamma delta eps zeta eta theta"}), "alpha beta", 4);
  ASSERT_EQ(layout.layout_bias.size(), 4u);
  EXPECT_DOUBLE_EQ(layout.layout_bias[0], 1.0);
  for (std::size_t s = 1; s < 4; ++s) EXPECT_LT(layout.layout_bias[s], 1.0);
}

TEST(MdsStats, LayoutBiasIgnoresReferenceOrder) {
  const auto conv = Posts({"red green blue cyan magenta yellow black white", "one two three four red blue"});
  const auto a = mds_stats(conv, "red blue one white", 4);
  const auto b = mds_stats(conv, "white one blue red", 4);
  EXPECT_EQ(a.layout_bias, b.layout_bias);
}

}  // namespace
}  // namespace argsumm
