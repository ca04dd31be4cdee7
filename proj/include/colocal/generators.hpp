#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "colocal/graph.hpp"
#include "colocal/graph_ops.hpp"

namespace colocal {

/// Numbered directed n-cycle. Node v (0-based) carries the number v+1; its
/// single outgoing edge leads to v+1 mod n.
class DirectedCycle {
 public:
  explicit DirectedCycle(int n) : n_(n) {
    if (n < 3) throw Error(ErrorCode::TooSmall, "a directed cycle needs at least 3 nodes, got " + std::to_string(n));
  }

  int size() const { return n_; }
  NodeId successor(NodeId v) const { return (v + 1) % n_; }
  NodeId predecessor(NodeId v) const { return (v + n_ - 1) % n_; }
  int number(NodeId v) const { return v + 1; }

  /// Oriented graph; port 1 leads to the successor, port 2 to the predecessor.
  Graph graph() const {
    std::vector<EdgeSpec> specs;
    for (NodeId v = 0; v < n_; ++v) specs.push_back({v, successor(v), 1, 2, EdgeDirection::UtoV});
    return build_graph(static_cast<std::size_t>(n_), std::nullopt, specs);
  }

 private:
  int n_;
};

inline DirectedCycle numbered_cycle(int n) { return DirectedCycle(n); }

namespace detail {

struct PlainEdge {
  NodeId from;
  NodeId to;
};

// Graph whose ports follow ascending neighbour id; edges oriented from -> to
// when `oriented`.
inline Graph assemble(std::size_t n, std::optional<std::vector<Colour>> colours, const std::vector<PlainEdge>& edges,
                      bool oriented) {
  std::vector<EdgeSpec> specs;
  specs.reserve(edges.size());
  for (const auto& e : edges)
    specs.push_back({e.from, e.to, 0, 0, oriented ? std::optional(EdgeDirection::UtoV) : std::nullopt});
  std::vector<std::vector<NodeId>> nb(n);
  for (const auto& e : edges) {
    nb[static_cast<std::size_t>(e.from)].push_back(e.to);
    nb[static_cast<std::size_t>(e.to)].push_back(e.from);
  }
  for (auto& l : nb) std::sort(l.begin(), l.end());
  auto rank = [&](NodeId at, NodeId other) {
    const auto& l = nb[static_cast<std::size_t>(at)];
    return static_cast<Port>(std::lower_bound(l.begin(), l.end(), other) - l.begin() + 1);
  };
  for (auto& s : specs) {
    s.port_u = rank(s.u, s.v);
    s.port_v = rank(s.v, s.u);
  }
  return build_graph(n, std::move(colours), specs);
}

}  // namespace detail

/// C^k: u ~ v iff the cycle distance is at most k. 2k-regular, edges oriented
/// along the cycle, ports by ascending neighbour id.
inline Graph cycle_power(const DirectedCycle& c, int k) {
  const int n = c.size();
  if (k < 1 || n <= 2 * k)
    throw Error(ErrorCode::DegenerateParams, "cycle power needs k >= 1 and n > 2k (n=" + std::to_string(n) +
                                                 ", k=" + std::to_string(k) + ")");
  std::vector<detail::PlainEdge> edges;
  for (NodeId v = 0; v < n; ++v)
    for (int d = 1; d <= k; ++d) edges.push_back({v, (v + d) % n});
  return detail::assemble(static_cast<std::size_t>(n), std::nullopt, edges, true);
}

inline NodeId blowup_white(NodeId v) { return 2 * v; }
inline NodeId blowup_black(NodeId v) { return 2 * v + 1; }

/// Two nodes per cycle node: white 2v and black 2v+1. White u joins black v
/// whenever the directed path u -> v has at most delta-1 edges (length 0
/// included), giving a delta-regular properly 2-coloured graph.
inline Graph strong_blowup(const DirectedCycle& c, int delta) {
  const int n = c.size();
  if (delta < 1 || n <= delta)
    throw Error(ErrorCode::DegenerateParams, "strong blowup needs 1 <= delta < n (n=" + std::to_string(n) +
                                                 ", delta=" + std::to_string(delta) + ")");
  std::vector<Colour> colours(static_cast<std::size_t>(2 * n));
  std::vector<detail::PlainEdge> edges;
  for (NodeId u = 0; u < n; ++u) {
    colours[static_cast<std::size_t>(blowup_white(u))] = Colour::White;
    colours[static_cast<std::size_t>(blowup_black(u))] = Colour::Black;
    for (int d = 0; d < delta; ++d) edges.push_back({blowup_white(u), blowup_black((u + d) % n)});
  }
  return detail::assemble(static_cast<std::size_t>(2 * n), std::move(colours), edges, true);
}

inline NodeId layered_node(int delta, NodeId v, int layer) { return v * (delta + 1) + layer; }

/// delta+1 nodes per cycle node: black v_0 joined to whites v_1..v_delta, and
/// each white layer i a copy of the cycle. Black degree delta, white degree 3.
inline Graph weak_layered(const DirectedCycle& c, int delta) {
  const int n = c.size();
  if (n % 2 != 0) throw Error(ErrorCode::OddN, "layered construction needs an even cycle, got n=" + std::to_string(n));
  if (delta < 3) throw Error(ErrorCode::SmallDelta, "layered construction needs delta >= 3, got " + std::to_string(delta));
  std::vector<Colour> colours(static_cast<std::size_t>((delta + 1) * n), Colour::White);
  std::vector<detail::PlainEdge> edges;
  for (NodeId v = 0; v < n; ++v) {
    colours[static_cast<std::size_t>(layered_node(delta, v, 0))] = Colour::Black;
    for (int i = 1; i <= delta; ++i) {
      edges.push_back({layered_node(delta, v, 0), layered_node(delta, v, i)});
      edges.push_back({layered_node(delta, v, i), layered_node(delta, c.successor(v), i)});
    }
  }
  const std::size_t count = colours.size();
  return detail::assemble(count, std::move(colours), edges, true);
}

/// The perfect matching of the layered graph built from the cycle's perfect
/// matching X = {(v, v+1) : v even}: per (u, v) in X take {v_0, v_delta},
/// {u_0, u_delta} and {u_i, v_i} for i < delta.
inline std::vector<Edge> weak_layered_perfect_matching(const DirectedCycle& c, int delta) {
  if (c.size() % 2 != 0) throw Error(ErrorCode::OddN, "layered construction needs an even cycle");
  if (delta < 3) throw Error(ErrorCode::SmallDelta, "layered construction needs delta >= 3");
  std::vector<Edge> out;
  for (NodeId u = 0; u < c.size(); u += 2) {
    const NodeId v = c.successor(u);
    out.push_back(make_edge(layered_node(delta, v, 0), layered_node(delta, v, delta)));
    out.push_back(make_edge(layered_node(delta, u, 0), layered_node(delta, u, delta)));
    for (int i = 1; i < delta; ++i) out.push_back(make_edge(layered_node(delta, u, i), layered_node(delta, v, i)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// K_{delta+1} whose ports come from a proper delta-edge-colouring (the
/// round-robin 1-factorisation): an edge of colour k is port k at both ends.
/// No colours, no orientation: every node has the same view at every radius.
inline Graph symmetric_complete(int delta) {
  if (delta < 1 || delta % 2 == 0)
    throw Error(ErrorCode::EvenDelta, "K_{delta+1} is delta-edge-colourable only for odd delta, got " + std::to_string(delta));
  const int n = delta + 1;
  const int hub = n - 1;
  std::vector<EdgeSpec> specs;
  for (int c = 0; c < n - 1; ++c) {
    specs.push_back({hub, c, c + 1, c + 1, std::nullopt});
    for (int j = 1; j <= (n - 2) / 2; ++j)
      specs.push_back({(c + j) % (n - 1), (c - j + (n - 1)) % (n - 1), c + 1, c + 1, std::nullopt});
  }
  return build_graph(static_cast<std::size_t>(n), std::nullopt, specs);
}

/// Tails of the matched directed edges: I = {u : (u, u+1) in M}.
inline std::vector<NodeId> matching_to_independent_set(const DirectedCycle& c, const std::vector<Edge>& m) {
  std::vector<NodeId> out;
  std::set<NodeId> used;
  for (const Edge& e : m) {
    if (e.u < 0 || e.v < 0 || e.u >= c.size() || e.v >= c.size())
      throw Error(ErrorCode::NotInCycle, "edge endpoint outside the cycle");
    NodeId tail;
    if (c.successor(e.u) == e.v)
      tail = e.u;
    else if (c.successor(e.v) == e.u)
      tail = e.v;
    else
      throw Error(ErrorCode::NotInCycle, "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not a cycle edge");
    if (!used.insert(e.u).second || !used.insert(e.v).second)
      throw Error(ErrorCode::InvalidMatching, "edges share a node");
    out.push_back(tail);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Combines independent sets I_1..I_k of the cycle into one: in round i every
/// surviving member of I_i joins, then it and its cycle neighbours are removed
/// from I_i..I_k. Each joining node accounts for at most 2k-1 removals.
inline std::vector<NodeId> merge_layer_independent_sets(const DirectedCycle& c,
                                                        const std::vector<std::vector<NodeId>>& sets) {
  const auto n = static_cast<std::size_t>(c.size());
  std::vector<std::vector<bool>> member(sets.size(), std::vector<bool>(n, false));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (NodeId v : sets[i]) {
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw Error(ErrorCode::NotIndependentInput, "node " + std::to_string(v) + " outside the cycle");
      member[i][static_cast<std::size_t>(v)] = true;
    }
    for (NodeId v : sets[i])
      if (member[i][static_cast<std::size_t>(c.successor(v))])
        throw Error(ErrorCode::NotIndependentInput, "set " + std::to_string(i + 1) + " contains adjacent nodes " +
                                                        std::to_string(v) + " and " + std::to_string(c.successor(v)));
  }
  std::vector<NodeId> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::vector<NodeId> joining;
    for (std::size_t v = 0; v < n; ++v)
      if (member[i][v]) joining.push_back(static_cast<NodeId>(v));
    for (NodeId v : joining) {
      out.push_back(v);
      for (std::size_t j = i; j < sets.size(); ++j)
        for (NodeId x : {c.predecessor(v), v, c.successor(v)}) member[j][static_cast<std::size_t>(x)] = false;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// All white nodes. In a properly 2-coloured graph without isolated nodes
/// this is independent and within a factor delta of optimal.
inline std::vector<NodeId> trivial_white_independent_set(const Graph& g) {
  if (!g.has_colours() || classify_colouring(g) != ColouringClass::ProperTwoColouring)
    throw Error(ErrorCode::NotProperlyColoured, "white-nodes independent set needs a proper 2-colouring");
  std::vector<NodeId> out;
  for (NodeId v = 0; v < static_cast<NodeId>(g.node_count()); ++v)
    if (g.colour(v) == Colour::White) out.push_back(v);
  return out;
}

// ---------------------------------------------------------------------------
// Random instances. Every call is a pure function of its arguments and the
// generator state; ports are shuffled and edges randomly oriented.

namespace detail {

template <class Rng>
int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random simple graph with max degree <= delta, no isolated nodes, over the
// allowed pairs. Returns nothing when a fix-up fails.
template <class Rng>
std::optional<std::vector<PlainEdge>> random_edges(int n, int delta, std::vector<PlainEdge> pairs, Rng& rng) {
  std::shuffle(pairs.begin(), pairs.end(), rng);
  const int target = uniform_int(rng, std::max(1, n / 2), std::max(1, n * delta / 2));
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  std::vector<PlainEdge> chosen;
  std::vector<bool> taken(pairs.size(), false);
  for (std::size_t i = 0; i < pairs.size() && static_cast<int>(chosen.size()) < target; ++i) {
    const auto [a, b] = pairs[i];
    if (deg[static_cast<std::size_t>(a)] < delta && deg[static_cast<std::size_t>(b)] < delta) {
      ++deg[static_cast<std::size_t>(a)];
      ++deg[static_cast<std::size_t>(b)];
      chosen.push_back(pairs[i]);
      taken[i] = true;
    }
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (taken[i]) continue;
    const auto [a, b] = pairs[i];
    const bool helps = deg[static_cast<std::size_t>(a)] == 0 || deg[static_cast<std::size_t>(b)] == 0;
    if (helps && deg[static_cast<std::size_t>(a)] < delta && deg[static_cast<std::size_t>(b)] < delta) {
      ++deg[static_cast<std::size_t>(a)];
      ++deg[static_cast<std::size_t>(b)];
      chosen.push_back(pairs[i]);
    }
  }
  if (std::find(deg.begin(), deg.end(), 0) != deg.end()) return std::nullopt;
  return chosen;
}

template <class Rng>
Graph finish_random(std::size_t n, std::optional<std::vector<Colour>> colours, std::vector<PlainEdge> edges, Rng& rng) {
  for (auto& e : edges)
    if (uniform_int(rng, 0, 1)) std::swap(e.from, e.to);
  const Graph g = assemble(n, std::move(colours), edges, true);
  return shuffle_ports(g, rng);
}

}  // namespace detail

/// Random oriented graph, max degree <= delta, no colours.
template <class Rng>
Graph random_graph(int n, int delta, Rng& rng) {
  if (n < 2 || delta < 1) throw Error(ErrorCode::DegenerateParams, "random graph needs n >= 2 and delta >= 1");
  std::vector<detail::PlainEdge> pairs;
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = a + 1; b < n; ++b) pairs.push_back({a, b});
  for (int attempt = 0; attempt < 1000; ++attempt)
    if (auto edges = detail::random_edges(n, delta, pairs, rng))
      return detail::finish_random(static_cast<std::size_t>(n), std::nullopt, std::move(*edges), rng);
  throw Error(ErrorCode::DegenerateParams, "could not cover every node with degree <= " + std::to_string(delta));
}

/// Random properly 2-coloured graph, max degree <= delta.
template <class Rng>
Graph random_bipartite(int n, int delta, Rng& rng) {
  if (n < 2 || delta < 1) throw Error(ErrorCode::DegenerateParams, "random bipartite graph needs n >= 2 and delta >= 1");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const int blacks = detail::uniform_int(rng, 1, n - 1);
    std::vector<Colour> colours(static_cast<std::size_t>(n), Colour::White);
    std::fill(colours.begin(), colours.begin() + blacks, Colour::Black);
    std::shuffle(colours.begin(), colours.end(), rng);
    std::vector<detail::PlainEdge> pairs;
    for (NodeId a = 0; a < n; ++a)
      for (NodeId b = a + 1; b < n; ++b)
        if (colours[static_cast<std::size_t>(a)] != colours[static_cast<std::size_t>(b)]) pairs.push_back({a, b});
    if (auto edges = detail::random_edges(n, delta, pairs, rng))
      return detail::finish_random(static_cast<std::size_t>(n), std::move(colours), std::move(*edges), rng);
  }
  throw Error(ErrorCode::DegenerateParams, "could not build a bipartite graph with degree <= " + std::to_string(delta));
}

/// Random colouring repaired into a weak 2-colouring: a node whose whole
/// neighbourhood shares its colour flips, which never takes an opposite
/// neighbour away from anyone, so the sweep terminates.
template <class Rng>
std::vector<Colour> random_weak_colouring(const Graph& g, Rng& rng) {
  std::vector<Colour> c(g.node_count());
  for (auto& x : c) x = detail::uniform_int(rng, 0, 1) ? Colour::White : Colour::Black;
  for (bool changed = true; changed;) {
    changed = false;
    for (NodeId v = 0; v < static_cast<NodeId>(g.node_count()); ++v) {
      bool ok = false;
      for (const auto& h : g.ports(v)) ok = ok || c[static_cast<std::size_t>(h.to)] != c[static_cast<std::size_t>(v)];
      if (!ok) {
        c[static_cast<std::size_t>(v)] = opposite(c[static_cast<std::size_t>(v)]);
        changed = true;
      }
    }
  }
  return c;
}

/// Random weakly 2-coloured oriented graph, max degree <= delta.
template <class Rng>
Graph random_weak(int n, int delta, Rng& rng) {
  const Graph g = random_graph(n, delta, rng);
  return with_colours(g, random_weak_colouring(g, rng));
}

}  // namespace colocal
