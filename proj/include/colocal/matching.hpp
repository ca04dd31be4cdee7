#pragma once

#include <optional>
#include <string>
#include <vector>

#include "colocal/graph.hpp"

namespace colocal {

/// Set of pairwise node-disjoint edges, stored as a mate table.
class Matching {
 public:
  static constexpr NodeId kNone = -1;

  Matching() = default;
  explicit Matching(std::size_t node_count) : mate_(node_count, kNone) {}

  /// Builds from an edge list; throws InvalidMatching on shared endpoints or
  /// edges missing from g.
  static Matching from_edges(const Graph& g, const std::vector<Edge>& edges) {
    Matching m(g.node_count());
    for (const Edge& e : edges) {
      if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= g.node_count() ||
          static_cast<std::size_t>(e.v) >= g.node_count() || !g.adjacent(e.u, e.v))
        throw Error(ErrorCode::InvalidMatching, "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} not in graph");
      if (m.matched(e.u) || m.matched(e.v))
        throw Error(ErrorCode::InvalidMatching, "edges share a node at {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
      m.add(e.u, e.v);
    }
    return m;
  }

  std::size_t node_count() const { return mate_.size(); }
  NodeId mate(NodeId v) const { return mate_[static_cast<std::size_t>(v)]; }
  bool matched(NodeId v) const { return mate(v) != kNone; }
  bool contains(NodeId u, NodeId v) const { return mate(u) == v; }

  void add(NodeId u, NodeId v) {
    mate_[static_cast<std::size_t>(u)] = v;
    mate_[static_cast<std::size_t>(v)] = u;
  }

  void remove(NodeId u) {
    const NodeId v = mate(u);
    if (v == kNone) return;
    mate_[static_cast<std::size_t>(u)] = kNone;
    mate_[static_cast<std::size_t>(v)] = kNone;
  }

  std::size_t size() const {
    std::size_t k = 0;
    for (std::size_t v = 0; v < mate_.size(); ++v)
      if (mate_[v] > static_cast<NodeId>(v)) ++k;
    return k;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t v = 0; v < mate_.size(); ++v)
      if (mate_[v] > static_cast<NodeId>(v)) out.push_back({static_cast<NodeId>(v), mate_[v]});
    return out;
  }

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<NodeId> mate_;
};

}  // namespace colocal
