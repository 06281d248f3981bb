// Copyright 2026 The argsumm Authors.
// SPDX-License-Identifier: Apache-2.0

// Hand-traced graph construction cases. Each returns an empty string when the
// builders reproduce the traced edges, otherwise a description of the
// mismatch.

#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "argsumm/arggraph.hpp"
#include "test_support.hpp"

namespace argsumm::testing {

inline std::string describe(const std::vector<Edge>& edges) {
  std::ostringstream os;
  for (const auto& e : edges) {
    os << node_key(e.src) << "->" << node_key(e.dst) << ":" << to_string(e.kind);
    if (e.score) os << "@" << *e.score;
    os << " ";
  }
  return os.str();
}

inline std::string expect_edges(const std::string& label, const std::vector<Edge>& got,
                                const std::vector<Edge>& want) {
  if (got == want) return "";
  return label + ": got [" + describe(got) + "] want [" + describe(want) + "]";
}

inline Edge support(std::size_t src, std::size_t dst, double score) {
  return {NodeId::sentence(src), NodeId::sentence(dst), EdgeKind::support, score};
}
inline Edge member(std::size_t src, std::size_t issue) {
  return {NodeId::sentence(src), NodeId::issue(issue), EdgeKind::issue_member, std::nullopt};
}
inline Edge to_root(NodeId src) { return {src, NodeId::root(), EdgeKind::root_link, std::nullopt}; }

inline std::vector<GraphSentence> graph_sentences(std::size_t doc, const std::vector<std::string>& texts,
                                                  const TableScorer& scorer) {
  std::vector<GraphSentence> out;
  for (auto& s : sentences(doc, texts)) {
    const auto r = scorer.classify(std::span(&s.text, 1)).front();
    out.push_back({s, r, r.label});
  }
  return out;
}

// Support needs entailment strictly above 0.33.
inline std::string trace_strict_threshold() {
  TableScorer t;
  t.roles = {{"Ca", role(RoleLabel::claim)}, {"P", role(RoleLabel::premise)}, {"Cb", role(RoleLabel::claim)}};
  t.set("P", "Ca", entail(0.1));
  t.set("P", "Cb", entail(0.33));
  auto doc = graph_sentences(0, {"Ca", "P", "Cb"}, t);
  std::string err = expect_edges("entail 0.33 falls back", build_doc_graph(doc, 0, t), {support(1, 0, 0.1)});
  if (!err.empty()) return err;
  t.set("P", "Cb", entail(0.5));
  doc = graph_sentences(0, {"Ca", "P", "Cb"}, t);
  err = expect_edges("entail 0.5 links", build_doc_graph(doc, 0, t), {support(1, 2, 0.5)});
  if (!err.empty()) return err;
  // One premise, one claim.
  TableScorer u;
  u.roles = {{"P", role(RoleLabel::premise)}, {"C", role(RoleLabel::claim)}};
  u.set("P", "C", entail(0.5));
  auto pc = graph_sentences(0, {"P", "C"}, u);
  return expect_edges("P->C 0.5", build_doc_graph(pc, 0, u), {support(0, 1, 0.5)});
}

// Below threshold a premise goes to the closest preceding claim, else the
// closest following one.
inline std::string trace_preceding_fallback() {
  TableScorer t;
  t.roles = {{"Ca", role(RoleLabel::claim)},
             {"Cb", role(RoleLabel::claim)},
             {"P1", role(RoleLabel::premise)},
             {"P0", role(RoleLabel::premise)},
             {"Cc", role(RoleLabel::claim)}};
  auto doc = graph_sentences(3, {"P0", "Ca", "Cb", "P1", "Cc"}, t);
  return expect_edges("fallback", build_doc_graph(doc, 10, t), {support(10, 11, 0.0), support(13, 12, 0.0)});
}

// A post without claims gets its first sentence promoted.
inline std::string trace_promotion() {
  TableScorer t;
  t.roles = {{"P0", role(RoleLabel::premise)}, {"P1", role(RoleLabel::premise)}, {"P2", role(RoleLabel::premise)}};
  t.set("P2", "P0", entail(0.7));
  auto doc = graph_sentences(0, {"P0", "P1", "P2"}, t);
  const std::string err = expect_edges("promotion", build_doc_graph(doc, 0, t), {support(1, 0, 0.0), support(2, 0, 0.7)});
  if (!err.empty()) return err;
  if (doc[0].role != RoleLabel::claim) return "promotion: first sentence not relabeled claim";
  if (doc[0].classification.label != RoleLabel::premise) return "promotion: classifier output was overwritten";
  if (doc[1].role != RoleLabel::premise || doc[2].role != RoleLabel::premise) return "promotion: other roles changed";
  const auto g = assemble({sentences(0, {"P0", "P1", "P2"})}, {t.classify(std::vector<std::string>{"P0", "P1", "P2"})}, t);
  return expect_edges("promotion assembled", g.edges,
                      {support(1, 0, 0.0), support(2, 0, 0.7), to_root(NodeId::sentence(0))});
}

// Greedy claim forest never closes a cycle.
inline std::string trace_cycle_rejection() {
  TableScorer t;
  t.roles = {{"A", role(RoleLabel::claim)}, {"B", role(RoleLabel::claim)}, {"C", role(RoleLabel::claim)}};
  t.set("A", "B", entail(0.9));
  t.set("B", "A", entail(0.8));
  auto two = graph_sentences(0, {"A", "B"}, t);
  const std::vector<std::size_t> ab = {0, 1};
  std::string err = expect_edges("A<->B", build_claim_forest(two, ab, t), {support(0, 1, 0.9)});
  if (!err.empty()) return err;
  const std::vector<std::size_t> single = {0};
  err = expect_edges("single claim", build_claim_forest(two, single, t), {});
  if (!err.empty()) return err;
  // A->B, B->C, then C->A would close A->B->C->A.
  t.set("B", "A", entail(0.0));
  t.set("B", "C", entail(0.8));
  t.set("C", "A", entail(0.7));
  auto three = graph_sentences(0, {"A", "B", "C"}, t);
  const std::vector<std::size_t> abc = {0, 1, 2};
  return expect_edges("3-cycle", build_claim_forest(three, abc, t), {support(0, 1, 0.9), support(1, 2, 0.8)});
}

// Equal scores are taken in (src, dst) order; a claim keeps its first parent.
inline std::string trace_tie_break() {
  TableScorer t;
  t.roles = {{"A", role(RoleLabel::claim)}, {"B", role(RoleLabel::claim)}, {"C", role(RoleLabel::claim)}};
  t.set("A", "B", entail(0.9));
  t.set("C", "B", entail(0.9));
  auto s = graph_sentences(0, {"A", "B", "C"}, t);
  const std::vector<std::size_t> abc = {0, 1, 2};
  std::string err = expect_edges("A->B, C->B", build_claim_forest(s, abc, t), {support(0, 1, 0.9), support(2, 1, 0.9)});
  if (!err.empty()) return err;
  TableScorer u;
  u.roles = t.roles;
  u.set("A", "B", entail(0.6));
  u.set("A", "C", entail(0.6));
  auto s2 = graph_sentences(0, {"A", "B", "C"}, u);
  err = expect_edges("A->B beats A->C", build_claim_forest(s2, abc, u), {support(0, 1, 0.6)});
  if (!err.empty()) return err;
  // Premise tie: equal entailment to two claims goes to the nearer one.
  TableScorer v;
  v.roles = {{"C0", role(RoleLabel::claim)}, {"X", role(RoleLabel::non_argument)},
             {"P", role(RoleLabel::premise)}, {"C3", role(RoleLabel::claim)}};
  v.set("P", "C0", entail(0.5));
  v.set("P", "C3", entail(0.5));
  auto d = graph_sentences(0, {"C0", "X", "P", "C3"}, v);
  return expect_edges("premise tie by distance", build_doc_graph(d, 0, v), {support(2, 3, 0.5)});
}

// Contradiction components become Issue nodes.
inline std::string trace_issue_components() {
  TableScorer t;
  t.roles = {{"X", role(RoleLabel::claim)}, {"Y", role(RoleLabel::claim)}, {"Z", role(RoleLabel::claim)},
             {"W", role(RoleLabel::claim)}};
  t.set("X", "Y", contradict(0.6));
  auto s = graph_sentences(0, {"X", "Y", "Z", "W"}, t);
  const std::vector<std::size_t> xy = {0, 1};
  auto layer = build_issue_layer(s, xy, t);
  std::string err = expect_edges("X,Y issue", layer.edges, {member(0, 0), member(1, 0)});
  if (!err.empty()) return err;
  if (layer.issue_count != 1) return "X,Y issue: issue_count != 1";

  TableScorer quiet;
  quiet.roles = t.roles;
  quiet.set("X", "Y", contradict(0.33));
  layer = build_issue_layer(s, xy, quiet);
  if (layer.issue_count != 0 || !layer.edges.empty()) return "no pair above 0.33 still produced an Issue";

  t.set("Z", "Y", contradict(0.4));
  const std::vector<std::size_t> xyzw = {0, 1, 2, 3};
  layer = build_issue_layer(s, xyzw, t);
  err = expect_edges("X,Y,Z chain", layer.edges, {member(0, 0), member(1, 0), member(2, 0)});
  if (!err.empty()) return err;
  if (layer.issue_count != 1) return "X,Y,Z chain: issue_count != 1";

  // Two posts, one claim each, contradicting: Issue under the root.
  TableScorer a;
  a.roles = {{"Cars are good.", role(RoleLabel::claim)}, {"Cars are bad.", role(RoleLabel::claim)}};
  a.set("Cars are good.", "Cars are bad.", contradict(0.5));
  a.set("Cars are bad.", "Cars are good.", contradict(0.5));
  const std::vector<std::vector<Sentence>> conv = {sentences(0, {"Cars are good."}), sentences(1, {"Cars are bad."})};
  const auto g = assemble(conv, {a.classify(std::vector<std::string>{"Cars are good."}),
                                 a.classify(std::vector<std::string>{"Cars are bad."})}, a);
  if (g.issue_count != 1) return "assembled issue_count != 1";
  return expect_edges("assembled issue", g.edges, {member(0, 0), member(1, 0), to_root(NodeId::issue(0))});
}

struct GraphTrace {
  const char* name;
  std::string (*run)();
};

inline const std::vector<GraphTrace>& graph_traces() {
  static const std::vector<GraphTrace> traces = {
      {"strict_threshold", trace_strict_threshold}, {"preceding_claim_fallback", trace_preceding_fallback},
      {"first_sentence_promotion", trace_promotion}, {"cycle_rejection", trace_cycle_rejection},
      {"tie_break_order", trace_tie_break},          {"issue_components", trace_issue_components},
  };
  return traces;
}

}  // namespace argsumm::testing
