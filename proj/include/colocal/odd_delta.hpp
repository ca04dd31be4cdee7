#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "colocal/graph.hpp"
#include "colocal/graph_json.hpp"
#include "colocal/graph_ops.hpp"
#include "colocal/sim.hpp"
#include "colocal/star_forest.hpp"

namespace colocal {

enum class NodeClass : std::uint8_t { A = 0, B = 1, C = 2 };

inline std::string to_string(NodeClass c) {
  switch (c) {
    case NodeClass::A: return "A";
    case NodeClass::B: return "B";
    case NodeClass::C: return "C";
  }
  return "?";
}

/// A: odd degree. B: even degree with an odd-degree neighbour. C: the rest.
struct AbcPartition {
  std::vector<NodeClass> cls;  // per node
  std::vector<NodeId> A, B, C;

  NodeClass of(NodeId v) const { return cls[static_cast<std::size_t>(v)]; }
};

inline AbcPartition partition_abc(const Graph& g) {
  AbcPartition p;
  const auto n = static_cast<NodeId>(g.node_count());
  p.cls.assign(g.node_count(), NodeClass::C);
  for (NodeId v = 0; v < n; ++v) {
    if (g.degree(v) % 2 == 1) {
      p.cls[static_cast<std::size_t>(v)] = NodeClass::A;
      continue;
    }
    for (const auto& h : g.ports(v))
      if (g.degree(h.to) % 2 == 1) p.cls[static_cast<std::size_t>(v)] = NodeClass::B;
  }
  for (NodeId v = 0; v < n; ++v) {
    switch (p.of(v)) {
      case NodeClass::A: p.A.push_back(v); break;
      case NodeClass::B: p.B.push_back(v); break;
      case NodeClass::C: p.C.push_back(v); break;
    }
  }
  return p;
}

/// H is the subgraph induced by A and B. H2 adds one degree-1 dummy to each
/// node of even H-degree; dummies follow the real nodes and hang off their
/// host's last port, oriented away from the host when g is oriented.
struct H2 {
  InducedSubgraph h;
  Graph graph;
  std::vector<NodeId> host;  // indexed by dummy id - real_count()

  std::size_t real_count() const { return h.graph.node_count(); }
  bool is_dummy(NodeId v) const { return static_cast<std::size_t>(v) >= real_count(); }
  std::size_t dummy_count() const { return host.size(); }
};

inline H2 build_h2(const Graph& g, const AbcPartition& p) {
  std::vector<bool> keep(g.node_count());
  for (std::size_t v = 0; v < g.node_count(); ++v) keep[v] = p.cls[v] != NodeClass::C;
  H2 out;
  out.h = induced_subgraph(g, keep);
  const Graph& h = out.h.graph;
  std::vector<EdgeSpec> specs = h.edge_specs();
  const auto real = static_cast<NodeId>(h.node_count());
  const bool oriented = g.is_oriented();
  for (NodeId v = 0; v < real; ++v)
    if (h.degree(v) % 2 == 0) {
      const NodeId d = real + static_cast<NodeId>(out.host.size());
      out.host.push_back(v);
      specs.push_back({v, d, h.degree(v) + 1, 1, oriented ? std::optional(EdgeDirection::UtoV) : std::nullopt});
    }
  out.graph = build_graph(h.node_count() + out.host.size(), std::nullopt, specs);
  return out;
}

/// Returns a colour for every node of H2 (real nodes first, then dummies).
/// Its output is validated, never trusted.
using WeakColouringProvider = std::function<std::vector<Colour>(const H2&)>;

/// Breadth-first depth parity per component, roots at the lowest id. Every
/// node has a neighbour one level up or down, so the result is weak. This is
/// a centralised stand-in for a local weak-colouring algorithm.
inline std::vector<Colour> centralized_weak_colouring(const Graph& g) {
  std::vector<int> level(g.node_count(), -1);
  for (NodeId s = 0; s < static_cast<NodeId>(g.node_count()); ++s) {
    if (level[static_cast<std::size_t>(s)] >= 0) continue;
    level[static_cast<std::size_t>(s)] = 0;
    std::deque<NodeId> queue{s};
    while (!queue.empty()) {
      const NodeId v = queue.front();
      queue.pop_front();
      for (const auto& e : g.ports(v))
        if (level[static_cast<std::size_t>(e.to)] < 0) {
          level[static_cast<std::size_t>(e.to)] = level[static_cast<std::size_t>(v)] + 1;
          queue.push_back(e.to);
        }
    }
  }
  std::vector<Colour> out;
  out.reserve(level.size());
  for (int l : level) out.push_back(l % 2 == 0 ? Colour::White : Colour::Black);
  return out;
}

inline WeakColouringProvider centralized_provider() {
  return [](const H2& h2) { return centralized_weak_colouring(h2.graph); };
}

/// Provider backed by a fixed colour per node of the original graph. Dummies
/// take the colour opposite to their host, the only choice that keeps them
/// weakly coloured.
inline WeakColouringProvider colour_map_provider(std::vector<Colour> by_original_id) {
  return [map = std::move(by_original_id)](const H2& h2) {
    std::vector<Colour> out;
    for (NodeId o : h2.h.original) {
      if (static_cast<std::size_t>(o) >= map.size())
        throw Error(ErrorCode::ProviderFailure, "colour map has no entry for node " + std::to_string(o));
      out.push_back(map[static_cast<std::size_t>(o)]);
    }
    for (NodeId host : h2.host) out.push_back(opposite(out[static_cast<std::size_t>(host)]));
    return out;
  };
}

/// Reads {"colours": ["black"|"white", ...]} indexed by node id.
inline std::vector<Colour> read_colour_map(const std::string& path) {
  const json j = read_json_file(path);
  try {
    std::vector<Colour> out;
    for (const auto& c : j.at("colours")) out.push_back(parse_colour(c));
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("colour map: ") + e.what());
  }
}

/// Flips every B node all of whose A-neighbours share its colour. A nodes
/// keep their colour, so every decision uses the input colours. Throws
/// NotWeakOnA if an A node still has no opposite-coloured neighbour.
/// `c` and the result are indexed by H id.
inline std::vector<Colour> repair_b_colours(const InducedSubgraph& h, const AbcPartition& p, const std::vector<Colour>& c) {
  const Graph& g = h.graph;
  auto cls = [&](NodeId v) { return p.of(h.original[static_cast<std::size_t>(v)]); };
  std::vector<Colour> out = c;
  for (NodeId b = 0; b < static_cast<NodeId>(g.node_count()); ++b) {
    if (cls(b) != NodeClass::B) continue;
    bool opposite_a = false;
    for (const auto& e : g.ports(b))
      if (cls(e.to) == NodeClass::A && c[static_cast<std::size_t>(e.to)] != c[static_cast<std::size_t>(b)]) opposite_a = true;
    if (!opposite_a) out[static_cast<std::size_t>(b)] = opposite(c[static_cast<std::size_t>(b)]);
  }
  for (NodeId a = 0; a < static_cast<NodeId>(g.node_count()); ++a) {
    if (cls(a) != NodeClass::A) continue;
    bool ok = false;
    for (const auto& e : g.ports(a)) ok = ok || out[static_cast<std::size_t>(e.to)] != out[static_cast<std::size_t>(a)];
    if (!ok) throw Error(ErrorCode::NotWeakOnA, "node " + std::to_string(h.original[static_cast<std::size_t>(a)]) +
                                                    " has no opposite-coloured neighbour");
  }
  return out;
}

/// Per-node output of the local pipeline.
struct OddDeltaRole {
  NodeClass cls = NodeClass::C;
  bool in_set = false;
  StarRole star;

  friend bool operator==(const OddDeltaRole&, const OddDeltaRole&) = default;
};

/// Local part of the pipeline on a graph coloured by the provider (C nodes
/// may carry any colour). Round 1 exchanges degree parities, round 2 classes
/// and colours, after which B nodes repair their colour and A and B nodes
/// run the star algorithm over their ports into A and B. Seven rounds.
class OddDeltaAlgorithm {
 public:
  static constexpr int kRounds = 2 + StarNode::kForestRounds;

  struct State {
    int degree = 0;
    Colour colour = Colour::Black;
    NodeClass cls = NodeClass::C;
    std::vector<NodeClass> nbr_cls;
    StarNode star;
  };
  using Output = OddDeltaRole;

  Requirements requirements() const { return {.colour = true, .orientation = true}; }
  int round_budget(int) const { return kRounds; }

  State init(const NodeView& view, Outbox& out) const {
    State s;
    s.degree = view.degree;
    s.colour = *view.colour;
    out.send_all({static_cast<std::uint8_t>(view.degree % 2)});
    return s;
  }

  void step(State& s, const Inbox& in, Outbox& out, int round) const {
    if (round == 1) {
      if (s.degree % 2 == 1) {
        s.cls = NodeClass::A;
      } else {
        for (Port p = 1; p <= s.degree; ++p)
          if ((*in.at(p))[0] == 1) s.cls = NodeClass::B;
      }
      out.send_all({static_cast<std::uint8_t>(s.cls), static_cast<std::uint8_t>(s.colour)});
    } else if (round == 2) {
      std::vector<bool> active(static_cast<std::size_t>(s.degree), false);
      bool opposite_a = false;
      for (Port p = 1; p <= s.degree; ++p) {
        const auto& m = *in.at(p);
        const auto c = static_cast<NodeClass>(m[0]);
        active[static_cast<std::size_t>(p - 1)] = s.cls != NodeClass::C && c != NodeClass::C;
        if (c == NodeClass::A && static_cast<Colour>(m[1]) != s.colour) opposite_a = true;
      }
      if (s.cls == NodeClass::B && !opposite_a) s.colour = opposite(s.colour);
      if (s.cls == NodeClass::C) return;
      s.star = StarNode(s.colour, std::move(active));
      s.star.start(out);
    } else if (s.cls != NodeClass::C) {
      s.star.step(round - 2, in, out, false);
    }
  }

  OddDeltaRole finalize(const State& s) const {
    OddDeltaRole r;
    r.cls = s.cls;
    if (s.cls == NodeClass::C) {
      r.in_set = true;
    } else {
      r.star = s.star.role();
      r.in_set = r.star.root;
    }
    return r;
  }

  std::string describe(const State& s) const {
    return to_string(s.cls) + (s.colour == Colour::Black ? " b " : " w ") + (s.cls == NodeClass::C ? "" : s.star.describe());
  }
};

struct OddDeltaResult {
  AbcPartition partition;
  std::vector<Colour> colouring;  // provider colours on g, C nodes white
  std::vector<NodeId> dominating_set;
  int rounds_used = 0;
  std::size_t max_message_bits = 0;
};

namespace detail {

inline int odd_delta_bound(const Graph& g, std::optional<int> delta) {
  if (!g.is_oriented()) throw Error(ErrorCode::MissingOrientation, "odd-degree-bound dominating set needs an orientation");
  const int d = delta.value_or(g.max_degree());
  if (d < g.max_degree()) throw Error(ErrorCode::DegenerateParams, "degree bound below maximum degree");
  if (d % 2 == 0) throw Error(ErrorCode::EvenDelta, "degree bound must be odd, got " + std::to_string(d));
  return d;
}

// Provider colours on H2, validated; returned on g with C nodes white.
inline std::vector<Colour> provider_colouring(const Graph& g, const H2& h2, const WeakColouringProvider& provider) {
  std::vector<Colour> c;
  try {
    c = provider(h2);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ProviderFailure) throw;
    throw Error(ErrorCode::ProviderFailure, std::string("provider failed: ") + e.what());
  }
  if (c.size() != h2.graph.node_count())
    throw Error(ErrorCode::ProviderFailure, "provider returned " + std::to_string(c.size()) + " colours for " +
                                                std::to_string(h2.graph.node_count()) + " nodes");
  if (h2.graph.node_count() > 0 && !is_weak_two_colouring(h2.graph, c))
    throw Error(ErrorCode::ProviderFailure, "provider colouring is not weak on H2");
  std::vector<Colour> on_g(g.node_count(), Colour::White);
  for (std::size_t i = 0; i < h2.real_count(); ++i) on_g[static_cast<std::size_t>(h2.h.original[i])] = c[i];
  return on_g;
}

}  // namespace detail

/// Partition, H2, provider, then the local repair and star stages on the
/// engine. Returns the star roots of H together with C.
inline OddDeltaResult odd_delta_dominating_set(const Graph& g, const WeakColouringProvider& provider,
                                               std::optional<int> delta = std::nullopt, const RunOptions& opts = {}) {
  const int d = detail::odd_delta_bound(g, delta);
  OddDeltaResult r;
  r.partition = partition_abc(g);
  const H2 h2 = build_h2(g, r.partition);
  r.colouring = detail::provider_colouring(g, h2, provider);
  // The engine would only surface a missing opposite neighbour as a star
  // failure; report it precisely first.
  if (h2.real_count() > 0) {
    std::vector<Colour> on_h;
    for (NodeId o : h2.h.original) on_h.push_back(r.colouring[static_cast<std::size_t>(o)]);
    repair_b_colours(h2.h, r.partition, on_h);
  }
  RunOptions o = opts;
  o.max_degree = d;
  const auto run = run_local_algorithm(with_colours(g, r.colouring), OddDeltaAlgorithm{}, o);
  for (NodeId v = 0; v < static_cast<NodeId>(g.node_count()); ++v) {
    const auto& role = run.outputs[static_cast<std::size_t>(v)];
    if (role.cls != r.partition.of(v)) throw Error(ErrorCode::InternalAssertion, "node " + std::to_string(v) + " misclassified itself");
    if (role.in_set) r.dominating_set.push_back(v);
  }
  r.rounds_used = run.rounds_used;
  r.max_message_bits = run.max_message_bits;
  return r;
}

/// Centralised counterpart of the local stages, for a colouring of g.
inline std::vector<NodeId> odd_delta_reference(const Graph& g, const std::vector<Colour>& colouring) {
  const AbcPartition p = partition_abc(g);
  std::vector<bool> keep(g.node_count());
  for (std::size_t v = 0; v < g.node_count(); ++v) keep[v] = p.cls[v] != NodeClass::C;
  const InducedSubgraph h = induced_subgraph(g, keep);
  std::vector<NodeId> out = p.C;
  if (h.graph.node_count() > 0) {
    std::vector<Colour> on_h;
    for (NodeId o : h.original) on_h.push_back(colouring[static_cast<std::size_t>(o)]);
    const Graph coloured = with_colours(h.graph, repair_b_colours(h, p, on_h));
    for (NodeId r : star_dominating_set(build_star_forest(coloured))) out.push_back(h.original[static_cast<std::size_t>(r)]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace colocal
