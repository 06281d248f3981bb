// Copyright 2026 The argsumm Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "argsumm/scoring.hpp"
#include "argsumm/segment.hpp"

namespace argsumm {

enum class NodeKind { i_node, issue, root };
enum class EdgeKind { support, issue_member, root_link };

std::string_view to_string(NodeKind kind);
std::string_view to_string(EdgeKind kind);

/// i_node: global sentence ordinal; issue: issue ordinal; root: always 0.
struct NodeId {
  NodeKind kind = NodeKind::root;
  std::size_t index = 0;

  static NodeId sentence(std::size_t i) { return {NodeKind::i_node, i}; }
  static NodeId issue(std::size_t i) { return {NodeKind::issue, i}; }
  static NodeId root() { return {NodeKind::root, 0}; }

  auto operator<=>(const NodeId&) const = default;
};

/// Edges point from child to parent: premise -> claim, supporting claim ->
/// supported claim, member -> Issue, top-level node -> root.
struct Edge {
  NodeId src;
  NodeId dst;
  EdgeKind kind = EdgeKind::support;
  /// Entailment probability; present iff kind == support.
  std::optional<double> score;

  bool operator==(const Edge&) const = default;
};

/// A sentence with its classifier output and its role in the graph. `role`
/// differs from `classification.label` only when a premise-only post had its
/// first argumentative sentence promoted to claim.
struct GraphSentence {
  Sentence sentence;
  ArgRole classification;
  RoleLabel role = RoleLabel::non_argument;

  bool operator==(const GraphSentence&) const = default;
};

struct ArgumentGraph {
  std::vector<GraphSentence> sentences;
  std::vector<Edge> edges;
  std::size_t issue_count = 0;

  bool operator==(const ArgumentGraph&) const = default;
};

struct GraphOptions {
  /// Premise -> claim and claim -> claim support needs entailment strictly above this.
  double support_threshold = 0.33;
  /// Two viewpoints conflict when contradiction in either direction is strictly above this.
  double contradiction_threshold = 0.33;
};

/// Per-post support edges. `doc` holds one post's sentences in order and is
/// updated in place when a premise-only post gets its first argumentative
/// sentence promoted to claim. `first_global_index` is the global ordinal of
/// doc[0]. Each premise is linked to the claim it most entails (ties: nearest,
/// then earlier) if that score beats the threshold; otherwise to the closest
/// preceding claim, or failing that the closest following one.
std::vector<Edge> build_doc_graph(std::span<GraphSentence> doc, std::size_t first_global_index, const Scorer& scorer,
                                  const GraphOptions& options = {});

/// Greedy claim -> claim support edges over all ordered pairs of `claims`
/// (global ordinals into `sentences`): candidates above the threshold are taken
/// in descending entailment, ties by (src, dst) ascending, skipping any that
/// would close a cycle or give a claim a second parent.
std::vector<Edge> build_claim_forest(std::span<const GraphSentence> sentences, std::span<const std::size_t> claims,
                                     const Scorer& scorer, const GraphOptions& options = {});

struct IssueLayer {
  std::vector<Edge> edges;
  std::size_t issue_count = 0;
};

/// Groups parentless claims into Issue nodes: one per connected component (of
/// size >= 2) of the "contradicts in either direction" relation. Issues are
/// numbered by their smallest member.
IssueLayer build_issue_layer(std::span<const GraphSentence> sentences, std::span<const std::size_t> parentless_claims,
                             const Scorer& scorer, const GraphOptions& options = {});

/// Runs the three builders and links every Issue and every remaining
/// parentless claim to the root. Throws InternalError if the result breaks a
/// graph invariant.
ArgumentGraph assemble(const std::vector<std::vector<Sentence>>& conv_sentences,
                       const std::vector<std::vector<ArgRole>>& roles, const Scorer& scorer,
                       const GraphOptions& options = {});

/// Segments, classifies and assembles one conversation.
ArgumentGraph build_graph(const Conversation& conv, const Segmenter& segmenter, const Scorer& scorer,
                          const GraphOptions& options = {});

/// Sentences not classified non_argument, in (doc_index, sent_index) order.
std::vector<Sentence> arg_filter(const std::vector<std::vector<Sentence>>& conv_sentences,
                                 const std::vector<std::vector<ArgRole>>& roles);

/// Invariant violations of `graph` (empty when well-formed): acyclicity,
/// root reachability of argumentative nodes, premise out-degree 1, claim
/// out-degree <= 1, non-argument isolation and edge-kind endpoint rules.
std::vector<std::string> check_invariants(const ArgumentGraph& graph);

/// {"nodes": [...], "edges": [...]} with node ids "s<i>", "issue<i>", "root".
std::string to_json(const ArgumentGraph& graph);
/// Graphviz rendering; support edge labels carry scores to 3 decimals.
std::string to_dot(const ArgumentGraph& graph);

std::string node_key(const NodeId& id);

}  // namespace argsumm
