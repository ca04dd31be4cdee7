#pragma once

#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "colocal/graph.hpp"
#include "colocal/oracles.hpp"

namespace colocal {

/// Graphviz rendering. Colours become fills, an orientation becomes arrows,
/// ports label the edge ends. Matching edges are drawn as double lines and
/// set members get a double outline.
inline std::string to_dot(const Graph& g, const std::optional<Solution>& solution = std::nullopt) {
  const bool directed = g.is_oriented();
  std::set<NodeId> members;
  std::set<Edge> matched;
  if (solution) {
    members.insert(solution->nodes.begin(), solution->nodes.end());
    for (const Edge& e : solution->edges) matched.insert(make_edge(e.u, e.v));
  }
  std::ostringstream os;
  os << (directed ? "digraph" : "graph") << " G {\n";
  os << "  node [shape=circle];\n";
  for (NodeId v = 0; v < static_cast<NodeId>(g.node_count()); ++v) {
    os << "  " << v << " [label=\"" << v << "\"";
    if (const auto c = g.colour(v)) {
      if (*c == Colour::Black)
        os << ", style=filled, fillcolor=black, fontcolor=white";
      else
        os << ", style=filled, fillcolor=white";
    }
    if (members.count(v)) os << ", peripheries=2";
    os << "];\n";
  }
  for (const auto& s : g.edge_specs()) {
    NodeId a = s.u, b = s.v;
    Port pa = s.port_u, pb = s.port_v;
    if (s.dir == EdgeDirection::VtoU) {
      std::swap(a, b);
      std::swap(pa, pb);
    }
    os << "  " << a << (directed ? " -> " : " -- ") << b << " [taillabel=\"" << pa << "\", headlabel=\"" << pb << "\"";
    if (matched.count(make_edge(a, b))) os << ", style=bold, color=\"black:invis:black\"";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace colocal
