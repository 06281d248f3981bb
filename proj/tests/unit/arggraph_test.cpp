// Copyright 2026 The argsumm Authors.
// SPDX-License-Identifier: Apache-2.0

#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "argsumm/arggraph.hpp"
#include "graph_traces.hpp"
#include "test_support.hpp"

namespace argsumm {
namespace {

using testing::role;

class GraphTraceTest : public ::testing::TestWithParam<testing::GraphTrace> {};

TEST_P(GraphTraceTest, Reproduces) { EXPECT_EQ(GetParam().run(), ""); }

INSTANTIATE_TEST_SUITE_P(Traces, GraphTraceTest, ::testing::ValuesIn(testing::graph_traces()),
                         [](const auto& info) { return std::string(info.param.name); });

TEST(Assemble, ClaimWithPremise) {
  testing::TableScorer t;
  t.roles = {{"C", role(RoleLabel::claim)}, {"P", role(RoleLabel::premise)}};
  t.set("P", "C", testing::entail(0.9));
  const auto g = assemble({testing::sentences(0, {"C", "P"})}, {t.classify(std::vector<std::string>{"C", "P"})}, t);
  EXPECT_EQ(g.edges, (std::vector<Edge>{testing::support(1, 0, 0.9), testing::to_root(NodeId::sentence(0))}));
  EXPECT_TRUE(check_invariants(g).empty());
}

TEST(Assemble, AllNonArgumentIsRootOnly) {
  testing::TableScorer t;
  const auto g = assemble({testing::sentences(0, {"hi", "ok"})}, {t.classify(std::vector<std::string>{"hi", "ok"})}, t);
  EXPECT_TRUE(g.edges.empty());
  EXPECT_EQ(g.issue_count, 0u);
  EXPECT_EQ(g.sentences.size(), 2u);
  EXPECT_TRUE(check_invariants(g).empty());
}

TEST(Assemble, ClaimChainsCrossPosts) {
  testing::TableScorer t;
  t.roles = {{"A", role(RoleLabel::claim)}, {"B", role(RoleLabel::claim)}, {"Q", role(RoleLabel::premise)}};
  t.set("B", "A", testing::entail(0.8));
  const std::vector<std::vector<Sentence>> conv = {testing::sentences(0, {"A"}), testing::sentences(1, {"B", "Q"})};
  const auto g = assemble(conv, {t.classify(std::vector<std::string>{"A"}), t.classify(std::vector<std::string>{"B", "Q"})}, t);
  EXPECT_EQ(g.edges, (std::vector<Edge>{testing::support(2, 1, 0.0), testing::support(1, 0, 0.8),
                                        testing::to_root(NodeId::sentence(0))}));
}

TEST(CheckInvariants, FlagsBrokenGraphs) {
  testing::TableScorer t;
  t.roles = {{"A", role(RoleLabel::claim)}, {"B", role(RoleLabel::claim)}};
  auto g = assemble({testing::sentences(0, {"A", "B"})}, {t.classify(std::vector<std::string>{"A", "B"})}, t);
  ASSERT_TRUE(check_invariants(g).empty());
  auto cyclic = g;
  cyclic.edges = {testing::support(0, 1, 0.5), testing::support(1, 0, 0.5)};
  EXPECT_FALSE(check_invariants(cyclic).empty());
  auto orphan = g;
  orphan.edges.pop_back();
  EXPECT_FALSE(check_invariants(orphan).empty());
  auto scored_root = g;
  scored_root.edges.back().score = 0.2;
  EXPECT_FALSE(check_invariants(scored_root).empty());
}

TEST(ArgFilter, KeepsArgumentativeInOrder) {
  const std::vector<std::vector<Sentence>> conv = {testing::sentences(0, {"a", "b"}), testing::sentences(1, {"c"})};
  const auto claim = role(RoleLabel::claim), none = role(RoleLabel::non_argument);
  EXPECT_EQ(arg_filter(conv, {{claim, claim}, {claim}}).size(), 3u);
  EXPECT_TRUE(arg_filter(conv, {{none, none}, {none}}).empty());
  const auto mixed = arg_filter(conv, {{none, claim}, {claim}});
  ASSERT_EQ(mixed.size(), 2u);
  EXPECT_EQ(mixed[0].text, "b");
  EXPECT_EQ(mixed[1].text, "c");
}

TEST(GraphFuzz, InvariantsAndDeterminism) {
  const testing::RandomScorer scorer(7);
  for (int i = 0; i < 100; ++i) {
    std::vector<std::vector<Sentence>> conv;
    std::vector<std::vector<ArgRole>> roles;
    for (int d = 0; d < 1 + i % 4; ++d) {
      std::vector<std::string> texts;
      for (int s = 0; s < 1 + (i + d) % 5; ++s) texts.push_back("t" + std::to_string(i) + "_" + std::to_string(d) + "_" + std::to_string(s));
      conv.push_back(testing::sentences(d, texts));
      roles.push_back(scorer.classify(texts));
    }
    const auto g = assemble(conv, roles, scorer);
    EXPECT_TRUE(check_invariants(g).empty());
    EXPECT_EQ(assemble(conv, roles, scorer), g);
  }
}

TEST(Serialization, JsonAndDot) {
  testing::TableScorer t;
  t.roles = {{"C", role(RoleLabel::claim)}, {"P", role(RoleLabel::premise)}};
  t.set("P", "C", testing::entail(0.91234));
  const auto g = assemble({testing::sentences(0, {"C", "P", "x"})}, {t.classify(std::vector<std::string>{"C", "P", "x"})}, t);
  const auto j = nlohmann::json::parse(to_json(g));
  ASSERT_EQ(j["nodes"].size(), 4u);  // three sentences and the root
  EXPECT_EQ(j["nodes"][0]["id"], "s0");
  EXPECT_EQ(j["nodes"][0]["role"], "claim");
  EXPECT_EQ(j["nodes"][0]["text"], "C");
  ASSERT_EQ(j["edges"].size(), 2u);
  EXPECT_EQ(j["edges"][0]["src"], "s1");
  EXPECT_EQ(j["edges"][0]["dst"], "s0");
  EXPECT_EQ(j["edges"][0]["kind"], "support");
  EXPECT_DOUBLE_EQ(j["edges"][0]["score"].get<double>(), 0.91234);
  EXPECT_FALSE(j["edges"][1].contains("score"));
  const auto dot = to_dot(g);
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("s1 -> s0 [label=\"0.912\""), std::string::npos) << dot;
}

}  // namespace
}  // namespace argsumm
