// Copyright 2026 The argsumm Authors.
// SPDX-License-Identifier: Apache-2.0

#include "argsumm/arggraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "argsumm/error.hpp"

namespace argsumm {
namespace {

std::vector<ScoreTriple> ScoreAll(const Scorer& scorer, const std::vector<TextPair>& pairs) {
  if (pairs.empty()) return {};
  auto scores = scorer.score(pairs);
  if (scores.size() != pairs.size()) throw ScorerError("NLI scorer returned a misaligned result");
  return scores;
}

// Disjoint-set forest over [0, n).
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void Union(std::size_t a, std::size_t b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::size_t Distance(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

}  // namespace

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::i_node: return "i_node";
    case NodeKind::issue: return "issue";
    case NodeKind::root: return "root";
  }
  throw InternalError("unknown NodeKind");
}

std::string_view to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::support: return "support";
    case EdgeKind::issue_member: return "issue_member";
    case EdgeKind::root_link: return "root_link";
  }
  throw InternalError("unknown EdgeKind");
}

std::string node_key(const NodeId& id) {
  switch (id.kind) {
    case NodeKind::i_node: return "s" + std::to_string(id.index);
    case NodeKind::issue: return "issue" + std::to_string(id.index);
    case NodeKind::root: return "root";
  }
  throw InternalError("unknown NodeKind");
}

std::vector<Edge> build_doc_graph(std::span<GraphSentence> doc, std::size_t first_global_index, const Scorer& scorer,
                                  const GraphOptions& options) {
  auto collect = [&](RoleLabel role) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < doc.size(); ++i) {
      if (doc[i].role == role) out.push_back(i);
    }
    return out;
  };

  std::vector<std::size_t> claims = collect(RoleLabel::claim);
  std::vector<std::size_t> premises = collect(RoleLabel::premise);
  if (claims.empty() && !premises.empty()) {
    doc[premises.front()].role = RoleLabel::claim;
    claims = {premises.front()};
    premises.erase(premises.begin());
  }
  if (premises.empty()) return {};

  std::vector<TextPair> pairs;
  pairs.reserve(premises.size() * claims.size());
  for (auto p : premises) {
    for (auto c : claims) pairs.push_back({doc[p].sentence.text, doc[c].sentence.text});
  }
  const auto scores = ScoreAll(scorer, pairs);

  std::vector<Edge> edges;
  for (std::size_t pi = 0; pi < premises.size(); ++pi) {
    const std::size_t p = premises[pi];
    auto entail = [&](std::size_t ci) { return scores[pi * claims.size() + ci].entail; };

    std::size_t best = 0;
    for (std::size_t ci = 1; ci < claims.size(); ++ci) {
      const double e = entail(ci);
      const double b = entail(best);
      if (e > b || (e == b && Distance(claims[ci], p) < Distance(claims[best], p))) best = ci;
    }

    std::size_t target = best;
    if (!(entail(best) > options.support_threshold)) {
      // Closest preceding claim, else closest following claim.
      const auto after = std::upper_bound(claims.begin(), claims.end(), p);
      target = after != claims.begin() ? static_cast<std::size_t>(after - claims.begin()) - 1
                                       : static_cast<std::size_t>(after - claims.begin());
    }
    edges.push_back(Edge{NodeId::sentence(first_global_index + p), NodeId::sentence(first_global_index + claims[target]),
                         EdgeKind::support, entail(target)});
  }
  return edges;
}

std::vector<Edge> build_claim_forest(std::span<const GraphSentence> sentences, std::span<const std::size_t> claims,
                                     const Scorer& scorer, const GraphOptions& options) {
  const std::size_t n = claims.size();
  if (n < 2) return {};

  std::vector<TextPair> pairs;
  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      pairs.push_back({sentences[claims[i]].sentence.text, sentences[claims[j]].sentence.text});
      order.emplace_back(claims[i], claims[j]);
    }
  }
  const auto scores = ScoreAll(scorer, pairs);

  struct Candidate {
    double score;
    std::size_t src;
    std::size_t dst;
  };
  std::vector<Candidate> candidates;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (scores[k].entail > options.support_threshold) {
      candidates.push_back({scores[k].entail, order[k].first, order[k].second});
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.score != b.score) return a.score > b.score;
    return std::tie(a.src, a.dst) < std::tie(b.src, b.dst);
  });

  std::unordered_map<std::size_t, std::size_t> parent;
  std::vector<Edge> edges;
  for (const auto& c : candidates) {
    if (parent.contains(c.src)) continue;
    // Walking up from dst reaches src iff the new edge would close a cycle.
    bool cycle = false;
    for (std::size_t node = c.dst;;) {
      if (node == c.src) {
        cycle = true;
        break;
      }
      const auto it = parent.find(node);
      if (it == parent.end()) break;
      node = it->second;
    }
    if (cycle) continue;
    parent.emplace(c.src, c.dst);
    edges.push_back(Edge{NodeId::sentence(c.src), NodeId::sentence(c.dst), EdgeKind::support, c.score});
  }
  return edges;
}

IssueLayer build_issue_layer(std::span<const GraphSentence> sentences, std::span<const std::size_t> parentless_claims,
                             const Scorer& scorer, const GraphOptions& options) {
  std::vector<std::size_t> members(parentless_claims.begin(), parentless_claims.end());
  std::sort(members.begin(), members.end());
  const std::size_t n = members.size();
  if (n < 2) return {};

  std::vector<TextPair> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) pairs.push_back({sentences[members[i]].sentence.text, sentences[members[j]].sentence.text});
    }
  }
  const auto scores = ScoreAll(scorer, pairs);
  // Row i holds the n-1 pairs with premise i, skipping the diagonal.
  auto contradict = [&](std::size_t i, std::size_t j) { return scores[i * (n - 1) + (j < i ? j : j - 1)].contradict; };

  UnionFind components(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::max(contradict(i, j), contradict(j, i)) > options.contradiction_threshold) components.Union(i, j);
    }
  }

  // Union keeps the smallest index as representative, so iterating members in
  // order numbers issues by their smallest member.
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[components.Find(i)].push_back(i);

  IssueLayer layer;
  for (const auto& [rep, group] : groups) {
    if (group.size() < 2) continue;
    const NodeId issue = NodeId::issue(layer.issue_count++);
    for (auto i : group) layer.edges.push_back(Edge{NodeId::sentence(members[i]), issue, EdgeKind::issue_member, std::nullopt});
  }
  return layer;
}

ArgumentGraph assemble(const std::vector<std::vector<Sentence>>& conv_sentences,
                       const std::vector<std::vector<ArgRole>>& roles, const Scorer& scorer,
                       const GraphOptions& options) {
  if (conv_sentences.size() != roles.size()) throw InternalError("assemble: sentence and role lists differ in length");
  ArgumentGraph graph;
  std::vector<std::size_t> doc_offsets;
  for (std::size_t d = 0; d < conv_sentences.size(); ++d) {
    if (conv_sentences[d].size() != roles[d].size()) {
      throw InternalError("assemble: post " + std::to_string(d) + " has misaligned roles");
    }
    doc_offsets.push_back(graph.sentences.size());
    for (std::size_t s = 0; s < conv_sentences[d].size(); ++s) {
      graph.sentences.push_back(GraphSentence{conv_sentences[d][s], roles[d][s], roles[d][s].label});
    }
  }

  for (std::size_t d = 0; d < conv_sentences.size(); ++d) {
    std::span<GraphSentence> doc(graph.sentences.data() + doc_offsets[d], conv_sentences[d].size());
    auto edges = build_doc_graph(doc, doc_offsets[d], scorer, options);
    graph.edges.insert(graph.edges.end(), edges.begin(), edges.end());
  }

  std::vector<std::size_t> claims;
  for (std::size_t i = 0; i < graph.sentences.size(); ++i) {
    if (graph.sentences[i].role == RoleLabel::claim) claims.push_back(i);
  }
  const auto forest = build_claim_forest(graph.sentences, claims, scorer, options);
  graph.edges.insert(graph.edges.end(), forest.begin(), forest.end());

  std::unordered_set<std::size_t> has_parent;
  for (const auto& e : forest) has_parent.insert(e.src.index);
  std::vector<std::size_t> parentless;
  for (auto c : claims) {
    if (!has_parent.contains(c)) parentless.push_back(c);
  }

  auto issues = build_issue_layer(graph.sentences, parentless, scorer, options);
  std::unordered_set<std::size_t> in_issue;
  for (const auto& e : issues.edges) in_issue.insert(e.src.index);
  graph.edges.insert(graph.edges.end(), issues.edges.begin(), issues.edges.end());
  graph.issue_count = issues.issue_count;

  for (std::size_t k = 0; k < graph.issue_count; ++k) {
    graph.edges.push_back(Edge{NodeId::issue(k), NodeId::root(), EdgeKind::root_link, std::nullopt});
  }
  for (auto c : parentless) {
    if (!in_issue.contains(c)) {
      graph.edges.push_back(Edge{NodeId::sentence(c), NodeId::root(), EdgeKind::root_link, std::nullopt});
    }
  }

  if (const auto problems = check_invariants(graph); !problems.empty()) {
    throw InternalError("assembled argument graph is malformed: " + problems.front());
  }
  return graph;
}

ArgumentGraph build_graph(const Conversation& conv, const Segmenter& segmenter, const Scorer& scorer,
                          const GraphOptions& options) {
  const auto per_post = segmenter.segment_conversation(conv);
  const auto flat = flatten(per_post);
  const auto flat_roles = classify_roles(flat, scorer);
  std::vector<std::vector<ArgRole>> roles;
  std::size_t k = 0;
  for (const auto& post : per_post) {
    roles.emplace_back(flat_roles.begin() + static_cast<std::ptrdiff_t>(k),
                       flat_roles.begin() + static_cast<std::ptrdiff_t>(k + post.size()));
    k += post.size();
  }
  return assemble(per_post, roles, scorer, options);
}

std::vector<Sentence> arg_filter(const std::vector<std::vector<Sentence>>& conv_sentences,
                                 const std::vector<std::vector<ArgRole>>& roles) {
  if (conv_sentences.size() != roles.size()) throw InternalError("arg_filter: sentence and role lists differ in length");
  std::vector<Sentence> out;
  for (std::size_t d = 0; d < conv_sentences.size(); ++d) {
    if (conv_sentences[d].size() != roles[d].size()) throw InternalError("arg_filter: misaligned roles");
    for (std::size_t s = 0; s < conv_sentences[d].size(); ++s) {
      if (roles[d][s].label != RoleLabel::non_argument) out.push_back(conv_sentences[d][s]);
    }
  }
  return out;
}

std::vector<std::string> check_invariants(const ArgumentGraph& graph) {
  std::vector<std::string> problems;
  const std::size_t n = graph.sentences.size();
  auto valid = [&](const NodeId& id) {
    switch (id.kind) {
      case NodeKind::i_node: return id.index < n;
      case NodeKind::issue: return id.index < graph.issue_count;
      case NodeKind::root: return id.index == 0;
    }
    return false;
  };
  auto role_of = [&](const NodeId& id) { return graph.sentences[id.index].role; };

  std::map<NodeId, std::vector<const Edge*>> outgoing;
  std::map<NodeId, std::size_t> issue_members;
  for (const auto& e : graph.edges) {
    const std::string name = node_key(e.src) + "->" + node_key(e.dst);
    if (!valid(e.src) || !valid(e.dst)) {
      problems.push_back("edge " + name + " references a missing node");
      continue;
    }
    outgoing[e.src].push_back(&e);
    for (const auto& end : {e.src, e.dst}) {
      if (end.kind == NodeKind::i_node && role_of(end) == RoleLabel::non_argument) {
        problems.push_back("edge " + name + " touches non-argumentative sentence " + node_key(end));
      }
    }
    switch (e.kind) {
      case EdgeKind::support:
        if (e.src.kind != NodeKind::i_node || e.dst.kind != NodeKind::i_node) {
          problems.push_back("support edge " + name + " must join two i-nodes");
        } else if (role_of(e.dst) != RoleLabel::claim) {
          problems.push_back("support edge " + name + " must point at a claim");
        }
        if (!e.score) problems.push_back("support edge " + name + " lacks a score");
        break;
      case EdgeKind::issue_member:
        if (e.src.kind != NodeKind::i_node || e.dst.kind != NodeKind::issue) {
          problems.push_back("issue_member edge " + name + " must join an i-node to an Issue");
        } else {
          ++issue_members[e.dst];
        }
        if (e.score) problems.push_back("issue_member edge " + name + " must not carry a score");
        break;
      case EdgeKind::root_link:
        if (e.src.kind == NodeKind::root || e.dst.kind != NodeKind::root) {
          problems.push_back("root_link edge " + name + " must join an i-node or Issue to the root");
        }
        if (e.score) problems.push_back("root_link edge " + name + " must not carry a score");
        break;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const NodeId id = NodeId::sentence(i);
    const std::size_t degree = outgoing.contains(id) ? outgoing[id].size() : 0;
    switch (graph.sentences[i].role) {
      case RoleLabel::premise:
        if (degree != 1 || outgoing[id].front()->kind != EdgeKind::support) {
          problems.push_back("premise " + node_key(id) + " must have exactly one outgoing support edge");
        }
        break;
      case RoleLabel::claim:
        if (degree > 1) problems.push_back("claim " + node_key(id) + " has more than one outgoing edge");
        break;
      case RoleLabel::non_argument:
        break;
    }
  }
  for (std::size_t k = 0; k < graph.issue_count; ++k) {
    const NodeId id = NodeId::issue(k);
    if (!outgoing.contains(id) || outgoing[id].size() != 1) {
      problems.push_back(node_key(id) + " must have exactly one outgoing root link");
    }
    if (issue_members[id] == 0) problems.push_back(node_key(id) + " has no members");
  }
  if (outgoing.contains(NodeId::root())) problems.push_back("root has outgoing edges");

  // Kahn's algorithm over all nodes detects cycles; reverse BFS from the root
  // checks reachability.
  std::map<NodeId, std::size_t> indegree;
  std::map<NodeId, std::vector<NodeId>> incoming;
  std::vector<NodeId> nodes;
  for (std::size_t i = 0; i < n; ++i) nodes.push_back(NodeId::sentence(i));
  for (std::size_t k = 0; k < graph.issue_count; ++k) nodes.push_back(NodeId::issue(k));
  nodes.push_back(NodeId::root());
  for (const auto& node : nodes) indegree[node] = 0;
  for (const auto& e : graph.edges) {
    if (!valid(e.src) || !valid(e.dst)) continue;
    ++indegree[e.dst];
    incoming[e.dst].push_back(e.src);
  }
  std::queue<NodeId> ready;
  for (const auto& [node, d] : indegree) {
    if (d == 0) ready.push(node);
  }
  std::size_t visited = 0;
  while (!ready.empty()) {
    const NodeId node = ready.front();
    ready.pop();
    ++visited;
    if (const auto it = outgoing.find(node); it != outgoing.end()) {
      for (const Edge* e : it->second) {
        if (--indegree[e->dst] == 0) ready.push(e->dst);
      }
    }
  }
  if (visited != nodes.size()) problems.push_back("graph contains a directed cycle");

  std::set<NodeId> reaches_root{NodeId::root()};
  std::queue<NodeId> frontier;
  frontier.push(NodeId::root());
  while (!frontier.empty()) {
    const NodeId node = frontier.front();
    frontier.pop();
    for (const auto& child : incoming[node]) {
      if (reaches_root.insert(child).second) frontier.push(child);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (graph.sentences[i].role != RoleLabel::non_argument && !reaches_root.contains(NodeId::sentence(i))) {
      problems.push_back("argumentative node s" + std::to_string(i) + " does not reach the root");
    }
  }
  return problems;
}

}  // namespace argsumm
