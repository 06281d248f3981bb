// Copyright 2026 The argsumm Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "argsumm/arggraph.hpp"

namespace argsumm {
namespace {

std::string DotEscape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': break;
      default: out += c;
    }
  }
  return out;
}

std::string Fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

std::string to_json(const ArgumentGraph& graph) {
  using nlohmann::json;
  json nodes = json::array();
  for (std::size_t i = 0; i < graph.sentences.size(); ++i) {
    const auto& gs = graph.sentences[i];
    nodes.push_back({{"id", node_key(NodeId::sentence(i))},
                     {"kind", std::string(to_string(NodeKind::i_node))},
                     {"doc_index", gs.sentence.doc_index},
                     {"sent_index", gs.sentence.sent_index},
                     {"role", std::string(to_string(gs.role))},
                     {"text", gs.sentence.text}});
  }
  for (std::size_t k = 0; k < graph.issue_count; ++k) {
    nodes.push_back({{"id", node_key(NodeId::issue(k))}, {"kind", std::string(to_string(NodeKind::issue))}});
  }
  nodes.push_back({{"id", node_key(NodeId::root())}, {"kind", std::string(to_string(NodeKind::root))}});

  json edges = json::array();
  for (const auto& e : graph.edges) {
    json edge = {{"src", node_key(e.src)}, {"dst", node_key(e.dst)}, {"kind", std::string(to_string(e.kind))}};
    if (e.score) edge["score"] = *e.score;
    edges.push_back(std::move(edge));
  }
  return json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}}.dump();
}

std::string to_dot(const ArgumentGraph& graph) {
  std::ostringstream out;
  out << "digraph argument_graph {\n";
  out << "  rankdir=BT;\n";
  out << "  node [fontname=\"Helvetica\"];\n";
  out << "  root [label=\"CONVERSATION\", shape=doubleoctagon];\n";
  for (std::size_t k = 0; k < graph.issue_count; ++k) {
    out << "  " << node_key(NodeId::issue(k)) << " [label=\"ISSUE " << k << "\", shape=diamond];\n";
  }
  for (std::size_t i = 0; i < graph.sentences.size(); ++i) {
    const auto& gs = graph.sentences[i];
    out << "  " << node_key(NodeId::sentence(i)) << " [label=\"[" << gs.sentence.doc_index << ":"
        << gs.sentence.sent_index << "] " << DotEscape(gs.sentence.text) << "\"";
    switch (gs.role) {
      case RoleLabel::claim: out << ", shape=box"; break;
      case RoleLabel::premise: out << ", shape=ellipse"; break;
      case RoleLabel::non_argument: out << ", shape=plaintext, fontcolor=gray"; break;
    }
    out << "];\n";
  }
  for (const auto& e : graph.edges) {
    out << "  " << node_key(e.src) << " -> " << node_key(e.dst);
    if (e.score) {
      out << " [label=\"" << Fixed3(*e.score) << "\"]";
    } else if (e.kind == EdgeKind::issue_member) {
      out << " [style=dashed]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace argsumm
