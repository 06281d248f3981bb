// Copyright 2026 The argsumm Authors.
// SPDX-License-Identifier: Apache-2.0

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "argsumm/linearize.hpp"
#include "argsumm/text.hpp"
#include "test_support.hpp"

namespace argsumm {
namespace {

using testing::role;

ArgumentGraph Build(const testing::TableScorer& t, const std::vector<std::vector<std::string>>& posts) {
  std::vector<std::vector<Sentence>> conv;
  std::vector<std::vector<ArgRole>> roles;
  for (std::size_t d = 0; d < posts.size(); ++d) {
    conv.push_back(testing::sentences(d, posts[d]));
    roles.push_back(t.classify(posts[d]));
  }
  return assemble(conv, roles, t);
}

TEST(Linearize, SingleClaim) {
  testing::TableScorer t;
  t.roles = {{"C", role(RoleLabel::claim)}};
  EXPECT_EQ(linearize(Build(t, {{"C"}})).text, "CONVERSATION → C");
}

TEST(Linearize, ClaimWithPremise) {
  testing::TableScorer t;
  t.roles = {{"C", role(RoleLabel::claim)}, {"P", role(RoleLabel::premise)}};
  t.set("P", "C", testing::entail(0.9));
  const auto out = linearize(Build(t, {{"C", "P"}}));
  EXPECT_EQ(out.text, "CONVERSATION → C → P");
  EXPECT_EQ(out.token_count, 5u);
  EXPECT_FALSE(out.truncated);
}

TEST(Linearize, ClaimAndIssueSubtrees) {
  testing::TableScorer t;
  t.roles = {{"A", role(RoleLabel::claim)}, {"X", role(RoleLabel::claim)}, {"Y", role(RoleLabel::claim)}};
  t.set("X", "Y", testing::contradict(0.7));
  // Root children: claim A (index 0) and the Issue over {X, Y} (min index 1).
  EXPECT_EQ(linearize(Build(t, {{"A"}, {"X"}, {"Y"}})).text, "CONVERSATION → A | ISSUE → X → Y");
}

TEST(Linearize, SiblingsByScoreThenIndex) {
  testing::TableScorer t;
  t.roles = {{"C", role(RoleLabel::claim)}, {"P1", role(RoleLabel::premise)}, {"P2", role(RoleLabel::premise)},
             {"P3", role(RoleLabel::premise)}};
  t.set("P1", "C", testing::entail(0.4));
  t.set("P2", "C", testing::entail(0.9));
  t.set("P3", "C", testing::entail(0.4));
  EXPECT_EQ(linearize(Build(t, {{"C", "P1", "P2", "P3"}})).text, "CONVERSATION → C → P2 → P1 → P3");
}

TEST(Linearize, EveryArgumentativeSentenceOnce) {
  const testing::RandomScorer scorer(3);
  for (int i = 0; i < 50; ++i) {
    std::vector<std::vector<std::string>> posts;
    for (int d = 0; d < 3; ++d) {
      std::vector<std::string> texts;
      for (int s = 0; s < 4; ++s) texts.push_back("w" + std::to_string(i * 100 + d * 10 + s));
      posts.push_back(texts);
    }
    std::vector<std::vector<Sentence>> conv;
    std::vector<std::vector<ArgRole>> roles;
    for (std::size_t d = 0; d < posts.size(); ++d) {
      conv.push_back(testing::sentences(d, posts[d]));
      roles.push_back(scorer.classify(posts[d]));
    }
    const auto g = assemble(conv, roles, scorer);
    const auto tokens = whitespace_tokens(linearize(g).text);
    for (const auto& s : g.sentences) {
      const auto n = std::count(tokens.begin(), tokens.end(), s.sentence.text);
      EXPECT_EQ(n, s.role == RoleLabel::non_argument ? 0 : 1) << s.sentence.text;
    }
  }
}

TEST(Linearize, BudgetGivesPrefix) {
  testing::TableScorer t;
  t.roles = {{"one two three", role(RoleLabel::claim)}, {"four five six", role(RoleLabel::premise)}};
  const auto g = Build(t, {{"one two three", "four five six"}});
  const auto full = linearize(g);
  const auto cut = linearize(g, 4);
  EXPECT_TRUE(cut.truncated);
  EXPECT_EQ(cut.token_count, 4u);
  EXPECT_EQ(cut.text, "CONVERSATION → one two");
  EXPECT_EQ(full.text.rfind(cut.text, 0), 0u);
  EXPECT_FALSE(linearize(g, 100).truncated);
}

TEST(RenderFiltered, Examples) {
  const auto empty = render_filtered({});
  EXPECT_EQ(empty.text, "");
  EXPECT_EQ(empty.token_count, 0u);
  std::vector<Sentence> two = testing::sentences(0, {"s1"});
  two.push_back(testing::sentences(1, {"s2"}).front());
  EXPECT_EQ(render_filtered(two).text, "s1 <doc> s2");
  const auto cut = render_filtered(two, 1);
  EXPECT_EQ(cut.text, "s1");
  EXPECT_TRUE(cut.truncated);
  const auto three = render_filtered(testing::sentences(0, {"a b", "c d"}), 3);
  EXPECT_EQ(three.text, "a b c");
  EXPECT_TRUE(three.truncated);
}

TEST(RenderRaw, JoinsPosts) {
  Conversation conv{.conv_id = "c"};
  conv.posts = {Post{.post_id = "a", .body = "First post."}, Post{.post_id = "b", .body = "Second."}};
  EXPECT_EQ(render_raw(conv).text, "First post. <doc> Second.");
}

}  // namespace
}  // namespace argsumm
