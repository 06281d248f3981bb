// Copyright 2026 The argsumm Authors.
// SPDX-License-Identifier: Apache-2.0

#include "argsumm/linearize.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "argsumm/error.hpp"
#include "argsumm/text.hpp"

namespace argsumm {

LinearizedGraph apply_budget(std::string text, std::optional<std::size_t> max_tokens) {
  LinearizedGraph out;
  out.token_count = word_count(text);
  if (max_tokens && out.token_count > *max_tokens) {
    text.resize(token_prefix_end(text, *max_tokens));
    out.token_count = *max_tokens;
    out.truncated = true;
  }
  out.text = std::move(text);
  return out;
}

LinearizedGraph linearize(const ArgumentGraph& graph, std::optional<std::size_t> max_tokens,
                          const RenderOptions& options) {
  if (const auto problems = check_invariants(graph); !problems.empty()) {
    throw InternalError("cannot linearize a malformed argument graph: " + problems.front());
  }

  struct Child {
    NodeId node;
    double score;
    std::size_t order;
  };
  std::map<NodeId, std::vector<Child>> children;
  std::vector<std::size_t> issue_order(graph.issue_count, std::numeric_limits<std::size_t>::max());
  for (const auto& e : graph.edges) {
    if (e.kind == EdgeKind::issue_member) issue_order[e.dst.index] = std::min(issue_order[e.dst.index], e.src.index);
  }
  for (const auto& e : graph.edges) {
    const double score = e.score.value_or(-std::numeric_limits<double>::infinity());
    const std::size_t order = e.src.kind == NodeKind::issue ? issue_order[e.src.index] : e.src.index;
    children[e.dst].push_back({e.src, score, order});
  }
  for (auto& [node, list] : children) {
    std::sort(list.begin(), list.end(), [](const Child& a, const Child& b) {
      if (a.score != b.score) return a.score > b.score;
      if (a.order != b.order) return a.order < b.order;
      return a.node < b.node;
    });
  }

  auto label = [&](const NodeId& id) -> const std::string& {
    return id.kind == NodeKind::issue ? options.issue_label : graph.sentences[id.index].sentence.text;
  };

  std::string text = options.root_label;
  const auto root_it = children.find(NodeId::root());
  if (root_it != children.end()) {
    bool first_subtree = true;
    for (const auto& top : root_it->second) {
      text += first_subtree ? options.arrow : options.subtree_separator;
      first_subtree = false;
      // Preorder with an explicit stack; children pushed in reverse.
      std::vector<NodeId> stack{top.node};
      bool first_node = true;
      while (!stack.empty()) {
        const NodeId node = stack.back();
        stack.pop_back();
        if (!first_node) text += options.arrow;
        first_node = false;
        text += label(node);
        if (const auto it = children.find(node); it != children.end()) {
          for (auto c = it->second.rbegin(); c != it->second.rend(); ++c) stack.push_back(c->node);
        }
      }
    }
  }
  return apply_budget(std::move(text), max_tokens);
}

LinearizedGraph render_filtered(std::span<const Sentence> sentences, std::optional<std::size_t> max_tokens,
                                const RenderOptions& options) {
  std::string text;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    if (i > 0) {
      text += ' ';
      if (sentences[i].doc_index != sentences[i - 1].doc_index) text += options.doc_separator + ' ';
    }
    text += sentences[i].text;
  }
  return apply_budget(std::move(text), max_tokens);
}

LinearizedGraph render_raw(const Conversation& conv, std::optional<std::size_t> max_tokens,
                           const RenderOptions& options) {
  std::string text;
  for (std::size_t i = 0; i < conv.posts.size(); ++i) {
    if (i > 0) text += ' ' + options.doc_separator + ' ';
    text += conv.posts[i].body;
  }
  return apply_budget(std::move(text), max_tokens);
}

}  // namespace argsumm
