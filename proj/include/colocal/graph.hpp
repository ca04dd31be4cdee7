#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "colocal/error.hpp"

namespace colocal {

/// Dense node index 0..n-1. Only the harness and the oracles look at it;
/// simulated algorithms never see node ids.
using NodeId = std::int32_t;

/// 1-based index into a node's incident edges.
using Port = std::int32_t;

enum class Colour : std::uint8_t { Black, White };

constexpr Colour opposite(Colour c) { return c == Colour::Black ? Colour::White : Colour::Black; }

constexpr std::string_view to_string(Colour c) { return c == Colour::Black ? "black" : "white"; }

/// Direction of an edge as seen from one endpoint.
enum class PortDirection : std::uint8_t { Incoming, Outgoing };

enum class ColouringClass { None, WeakTwoColouring, ProperTwoColouring };

constexpr std::string_view to_string(ColouringClass c) {
  switch (c) {
    case ColouringClass::None: return "none";
    case ColouringClass::WeakTwoColouring: return "weak";
    case ColouringClass::ProperTwoColouring: return "proper";
  }
  return "none";
}

/// Orientation of an edge (u, v) in an edge list.
enum class EdgeDirection : std::uint8_t { UtoV, VtoU };

/// One edge of the construction input, with the port it occupies at each end.
struct EdgeSpec {
  NodeId u = 0;
  NodeId v = 0;
  Port port_u = 0;
  Port port_v = 0;
  std::optional<EdgeDirection> dir;

  friend bool operator==(const EdgeSpec&, const EdgeSpec&) = default;
};

/// Unordered node pair, normalised so that u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

constexpr Edge make_edge(NodeId a, NodeId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

class Graph;
Graph build_graph(std::size_t node_count, std::optional<std::vector<Colour>> colours,
                  std::span<const EdgeSpec> edges);

/// Finite simple graph with a port numbering at every node, and optionally a
/// colour per node and an orientation per edge. Immutable once built.
class Graph {
 public:
  struct HalfEdge {
    NodeId to = 0;
    Port back = 0;  // port at `to` that leads back here
    std::optional<PortDirection> dir;

    friend bool operator==(const HalfEdge&, const HalfEdge&) = default;
  };

  Graph() = default;

  std::size_t node_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  int degree(NodeId v) const {
    check_node(v);
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
  }

  int max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
  }

  /// The neighbour reached through port p of v.
  NodeId neighbour(NodeId v, Port p) const { return half(v, p).to; }

  /// The port at neighbour(v, p) whose edge leads back to v.
  Port back_port(NodeId v, Port p) const { return half(v, p).back; }

  std::optional<PortDirection> direction(NodeId v, Port p) const { return half(v, p).dir; }

  std::span<const HalfEdge> ports(NodeId v) const {
    check_node(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  /// Neighbours of v in port order.
  std::vector<NodeId> neighbours(NodeId v) const {
    std::vector<NodeId> out;
    for (const auto& h : ports(v)) out.push_back(h.to);
    return out;
  }

  std::optional<Port> port_to(NodeId u, NodeId v) const {
    const auto hs = ports(u);
    for (std::size_t i = 0; i < hs.size(); ++i)
      if (hs[i].to == v) return static_cast<Port>(i + 1);
    return std::nullopt;
  }

  bool adjacent(NodeId u, NodeId v) const { return port_to(u, v).has_value(); }

  bool has_colours() const { return colours_.has_value(); }
  bool is_oriented() const { return oriented_; }

  std::optional<Colour> colour(NodeId v) const {
    check_node(v);
    if (!colours_) return std::nullopt;
    return (*colours_)[static_cast<std::size_t>(v)];
  }

  const std::optional<std::vector<Colour>>& colours() const { return colours_; }

  /// All edges, normalised and sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (NodeId u = 0; u < static_cast<NodeId>(adj_.size()); ++u)
      for (const auto& h : adj_[static_cast<std::size_t>(u)])
        if (u < h.to) out.push_back({u, h.to});
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Edge list that rebuilds this graph exactly (ports and orientation included).
  std::vector<EdgeSpec> edge_specs() const {
    std::vector<EdgeSpec> out;
    out.reserve(edge_count_);
    for (const Edge& e : edges()) {
      const Port pu = *port_to(e.u, e.v);
      EdgeSpec s{e.u, e.v, pu, back_port(e.u, pu), std::nullopt};
      if (auto d = direction(e.u, pu))
        s.dir = *d == PortDirection::Outgoing ? EdgeDirection::UtoV : EdgeDirection::VtoU;
      out.push_back(s);
    }
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_node(NodeId v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= adj_.size())
      throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(v) + " does not exist");
  }

  const HalfEdge& half(NodeId v, Port p) const {
    check_node(v);
    const auto& a = adj_[static_cast<std::size_t>(v)];
    if (p < 1 || static_cast<std::size_t>(p) > a.size())
      throw Error(ErrorCode::PortOutOfRange, "node " + std::to_string(v) + " has no port " +
                                                 std::to_string(p));
    return a[static_cast<std::size_t>(p - 1)];
  }

  std::vector<std::vector<HalfEdge>> adj_;
  std::optional<std::vector<Colour>> colours_;
  bool oriented_ = false;
  std::size_t edge_count_ = 0;

  friend Graph build_graph(std::size_t, std::optional<std::vector<Colour>>,
                           std::span<const EdgeSpec>);
};

/// Validates the input and builds the graph. Checks, in order: index ranges,
/// self-loops, duplicate edges, port ranges and clashes, isolated nodes.
inline Graph build_graph(std::size_t node_count, std::optional<std::vector<Colour>> colours,
                         std::span<const EdgeSpec> edges) {
  const auto n = static_cast<NodeId>(node_count);
  if (colours && colours->size() != node_count)
    throw Error(ErrorCode::IndexOutOfRange, "colour list has " + std::to_string(colours->size()) +
                                                " entries for " + std::to_string(node_count) +
                                                " nodes");

  std::size_t with_dir = 0;
  for (const auto& e : edges) with_dir += e.dir.has_value();
  if (with_dir != 0 && with_dir != edges.size())
    throw Error(ErrorCode::PartialLabels, "orientation must be given for all edges or none");

  std::set<Edge> seen;
  std::vector<int> deg(node_count, 0);
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw Error(ErrorCode::IndexOutOfRange, "edge (" + std::to_string(e.u) + "," +
                                                  std::to_string(e.v) + ") leaves 0.." +
                                                  std::to_string(n - 1));
    if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "self-loop at node " + std::to_string(e.u));
    if (!seen.insert(make_edge(e.u, e.v)).second)
      throw Error(ErrorCode::DuplicateEdge, "edge {" + std::to_string(e.u) + "," +
                                                std::to_string(e.v) + "} given twice");
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }

  Graph g;
  g.adj_.resize(node_count);
  std::vector<std::vector<bool>> used(node_count);
  for (std::size_t v = 0; v < node_count; ++v) {
    g.adj_[v].resize(static_cast<std::size_t>(deg[v]));
    used[v].assign(static_cast<std::size_t>(deg[v]), false);
  }
  auto place = [&](NodeId at, Port p, Graph::HalfEdge h) {
    const auto a = static_cast<std::size_t>(at);
    if (p < 1 || p > deg[a])
      throw Error(ErrorCode::PortGap, "port " + std::to_string(p) + " at node " +
                                          std::to_string(at) + " outside 1.." +
                                          std::to_string(deg[a]));
    const auto slot = static_cast<std::size_t>(p - 1);
    if (used[a][slot])
      throw Error(ErrorCode::PortClash,
                  "port " + std::to_string(p) + " reused at node " + std::to_string(at));
    used[a][slot] = true;
    g.adj_[a][slot] = h;
  };
  for (const auto& e : edges) {
    std::optional<PortDirection> du, dv;
    if (e.dir) {
      const bool uv = *e.dir == EdgeDirection::UtoV;
      du = uv ? PortDirection::Outgoing : PortDirection::Incoming;
      dv = uv ? PortDirection::Incoming : PortDirection::Outgoing;
    }
    place(e.u, e.port_u, {e.v, e.port_v, du});
    place(e.v, e.port_v, {e.u, e.port_u, dv});
  }
  for (std::size_t v = 0; v < node_count; ++v)
    if (deg[v] == 0) throw Error(ErrorCode::IsolatedNode, "node " + std::to_string(v) + " has no edges");

  g.colours_ = std::move(colours);
  g.oriented_ = with_dir != 0;
  g.edge_count_ = edges.size();
  return g;
}

inline Graph build_graph(std::size_t node_count, std::optional<std::vector<Colour>> colours,
                         std::initializer_list<EdgeSpec> edges) {
  return build_graph(node_count, std::move(colours), std::span<const EdgeSpec>(edges.begin(), edges.size()));
}

inline NodeId neighbour_via_port(const Graph& g, NodeId v, Port p) { return g.neighbour(v, p); }

/// True iff every node has at least one neighbour of the opposite colour.
inline bool is_weak_two_colouring(const Graph& g, std::span<const Colour> colours) {
  for (NodeId v = 0; v < static_cast<NodeId>(g.node_count()); ++v) {
    const Colour c = colours[static_cast<std::size_t>(v)];
    bool ok = false;
    for (const auto& h : g.ports(v)) ok = ok || colours[static_cast<std::size_t>(h.to)] != c;
    if (!ok) return false;
  }
  return true;
}

/// True iff every edge joins opposite colours.
inline bool is_proper_two_colouring(const Graph& g, std::span<const Colour> colours) {
  for (const Edge& e : g.edges())
    if (colours[static_cast<std::size_t>(e.u)] == colours[static_cast<std::size_t>(e.v)]) return false;
  return true;
}

inline ColouringClass classify_colouring(const Graph& g) {
  if (!g.has_colours()) throw Error(ErrorCode::MissingColours, "graph carries no colouring");
  const auto& c = *g.colours();
  if (is_proper_two_colouring(g, c)) return ColouringClass::ProperTwoColouring;
  if (is_weak_two_colouring(g, c)) return ColouringClass::WeakTwoColouring;
  return ColouringClass::None;
}

}  // namespace colocal
