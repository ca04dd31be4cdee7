#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "colocal/graph.hpp"

namespace colocal {

inline Graph with_colours(const Graph& g, std::vector<Colour> colours) {
  const auto specs = g.edge_specs();
  return build_graph(g.node_count(), std::move(colours), specs);
}

inline Graph without_colours(const Graph& g) {
  const auto specs = g.edge_specs();
  return build_graph(g.node_count(), std::nullopt, specs);
}

inline Graph without_orientation(const Graph& g) {
  auto specs = g.edge_specs();
  for (auto& s : specs) s.dir.reset();
  return build_graph(g.node_count(), g.colours(), specs);
}

/// Orients every edge from its lower to its higher id.
inline Graph with_id_orientation(const Graph& g) {
  auto specs = g.edge_specs();
  for (auto& s : specs) s.dir = EdgeDirection::UtoV;
  return build_graph(g.node_count(), g.colours(), specs);
}

/// Renames node v to new_id[v]; ports, colours and orientation travel with the node.
inline Graph relabel(const Graph& g, std::span<const NodeId> new_id) {
  if (new_id.size() != g.node_count())
    throw Error(ErrorCode::IndexOutOfRange, "relabelling has the wrong length");
  std::optional<std::vector<Colour>> colours;
  if (g.has_colours()) {
    colours.emplace(g.node_count());
    for (std::size_t v = 0; v < g.node_count(); ++v)
      (*colours)[static_cast<std::size_t>(new_id[v])] = (*g.colours())[v];
  }
  auto specs = g.edge_specs();
  for (auto& s : specs) {
    s.u = new_id[static_cast<std::size_t>(s.u)];
    s.v = new_id[static_cast<std::size_t>(s.v)];
  }
  return build_graph(g.node_count(), std::move(colours), specs);
}

/// Two copies side by side; nodes of `b` are shifted by a.node_count().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  if (a.has_colours() != b.has_colours() || a.is_oriented() != b.is_oriented())
    throw Error(ErrorCode::PartialLabels, "union of graphs with different label sets");
  const auto offset = static_cast<NodeId>(a.node_count());
  std::optional<std::vector<Colour>> colours;
  if (a.has_colours()) {
    colours = *a.colours();
    colours->insert(colours->end(), b.colours()->begin(), b.colours()->end());
  }
  auto specs = a.edge_specs();
  for (auto s : b.edge_specs()) {
    s.u += offset;
    s.v += offset;
    specs.push_back(s);
  }
  return build_graph(a.node_count() + b.node_count(), std::move(colours), specs);
}

/// Applies an independent uniformly random port permutation at every node.
template <class Rng>
Graph shuffle_ports(const Graph& g, Rng& rng) {
  std::vector<std::vector<Port>> perm(g.node_count());
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    perm[v].resize(static_cast<std::size_t>(g.degree(static_cast<NodeId>(v))));
    std::iota(perm[v].begin(), perm[v].end(), 1);
    std::shuffle(perm[v].begin(), perm[v].end(), rng);
  }
  auto specs = g.edge_specs();
  for (auto& s : specs) {
    s.port_u = perm[static_cast<std::size_t>(s.u)][static_cast<std::size_t>(s.port_u - 1)];
    s.port_v = perm[static_cast<std::size_t>(s.v)][static_cast<std::size_t>(s.port_v - 1)];
  }
  return build_graph(g.node_count(), g.colours(), specs);
}

/// Reassigns ports so that each node's ports follow ascending neighbour id.
inline Graph sort_ports(const Graph& g) {
  auto specs = g.edge_specs();
  for (auto& s : specs) {
    auto rank = [&](NodeId at, NodeId other) {
      const auto nb = g.neighbours(at);
      return static_cast<Port>(1 + std::count_if(nb.begin(), nb.end(), [&](NodeId x) { return x < other; }));
    };
    s.port_u = rank(s.u, s.v);
    s.port_v = rank(s.v, s.u);
  }
  return build_graph(g.node_count(), g.colours(), specs);
}

struct InducedSubgraph {
  Graph graph;
  std::vector<NodeId> original;  // subgraph id -> id in the parent graph
  std::vector<NodeId> local;     // parent id -> subgraph id, or -1
};

/// Subgraph induced by the nodes with keep[v] set. Ports keep their relative
/// order: the i-th lowest surviving port of v becomes port i.
inline InducedSubgraph induced_subgraph(const Graph& g, const std::vector<bool>& keep) {
  InducedSubgraph out;
  out.local.assign(g.node_count(), -1);
  for (std::size_t v = 0; v < g.node_count(); ++v)
    if (keep[v]) {
      out.local[v] = static_cast<NodeId>(out.original.size());
      out.original.push_back(static_cast<NodeId>(v));
    }
  auto new_port = [&](NodeId v, Port p) {
    Port r = 0;
    const auto hs = g.ports(v);
    for (Port q = 1; q <= p; ++q)
      if (keep[static_cast<std::size_t>(hs[static_cast<std::size_t>(q - 1)].to)]) ++r;
    return r;
  };
  std::vector<EdgeSpec> specs;
  for (auto s : g.edge_specs()) {
    if (!keep[static_cast<std::size_t>(s.u)] || !keep[static_cast<std::size_t>(s.v)]) continue;
    s.port_u = new_port(s.u, s.port_u);
    s.port_v = new_port(s.v, s.port_v);
    s.u = out.local[static_cast<std::size_t>(s.u)];
    s.v = out.local[static_cast<std::size_t>(s.v)];
    specs.push_back(s);
  }
  std::optional<std::vector<Colour>> colours;
  if (g.has_colours()) {
    colours.emplace();
    for (NodeId v : out.original) colours->push_back(*g.colour(v));
  }
  out.graph = build_graph(out.original.size(), std::move(colours), specs);
  return out;
}

}  // namespace colocal
