#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "colocal/graph.hpp"
#include "colocal/matching.hpp"
#include "colocal/oracles.hpp"
#include "colocal/sim.hpp"

namespace colocal {

/// Trees grown by one flooding phase. Roots are the unmatched black nodes,
/// every other member records the port towards its parent and its hop depth.
/// Leaves are the unmatched white members at depth h.
struct AugmentingForest {
  int h = 0;
  std::vector<NodeId> roots;
  std::vector<std::optional<Port>> parent_port;  // set for non-root members
  std::vector<int> depth;                        // -1 outside the forest
  std::vector<NodeId> leaves;                    // ascending id

  bool member(NodeId v) const { return depth[static_cast<std::size_t>(v)] >= 0; }

  std::optional<NodeId> parent(const Graph& g, NodeId v) const {
    const auto& p = parent_port[static_cast<std::size_t>(v)];
    if (!p) return std::nullopt;
    return g.neighbour(v, *p);
  }

  friend bool operator==(const AugmentingForest&, const AugmentingForest&) = default;
};

/// An augmenting path listed from its black root to its white leaf.
using AugmentingPath = std::vector<NodeId>;

/// Number of invocations needed to clear the length-(2i-1) augmenting
/// paths: delta * (delta-1)^(i-1), with 0^0 = 1.
inline std::int64_t invocations_for(int delta, int i) {
  if (delta < 1 || i < 1) throw Error(ErrorCode::DegenerateParams, "invocation count needs delta >= 1 and i >= 1");
  std::int64_t t = delta;
  for (int j = 1; j < i; ++j) {
    t *= delta - 1;
    if (t > std::numeric_limits<int>::max()) throw Error(ErrorCode::TooLarge, "invocation count overflows");
  }
  return t;
}

/// Total rounds of the scheme: every invocation of phase i spends 3(2i-1)
/// rounds on flooding, proposals and augmentation.
inline int matching_scheme_rounds(int delta, int k) {
  std::int64_t total = 0;
  for (int i = 1; i <= k; ++i) {
    total += invocations_for(delta, i) * 3 * (2 * i - 1);
    if (total > std::numeric_limits<int>::max()) throw Error(ErrorCode::TooLarge, "round budget overflows");
  }
  return static_cast<int>(total);
}

namespace detail {

inline void require_proper(const Graph& g) {
  if (!g.has_colours() || classify_colouring(g) != ColouringClass::ProperTwoColouring)
    throw Error(ErrorCode::NotProperlyColoured, "matching scheme needs a proper 2-colouring");
}

inline Port port_of(const Graph& g, NodeId v, NodeId to) {
  const auto p = g.port_to(v, to);
  if (!p) throw Error(ErrorCode::InternalAssertion, "nodes " + std::to_string(v) + " and " + std::to_string(to) + " not adjacent");
  return *p;
}

}  // namespace detail

/// Flooding: roots send along all their edges, a white node joins the first
/// wave that reaches it (lowest arrival port on ties) and relays over its
/// matching edge, a black node relays over all its other edges. After h hops
/// unmatched white nodes become leaves; everything else is discarded.
///
/// With `assert_no_shorter` the oracle first checks that (g, m) has no
/// augmenting path shorter than h.
inline AugmentingForest flood_phase(const Graph& g, const Matching& m, int h, bool assert_no_shorter = false) {
  detail::require_proper(g);
  if (h < 1 || h % 2 == 0) throw Error(ErrorCode::DegenerateParams, "path length must be odd and positive");
  if (assert_no_shorter) {
    const auto len = shortest_augmenting_path_length(g, m);
    if (len && *len < h)
      throw Error(ErrorCode::ShorterPathExists, "augmenting path of length " + std::to_string(*len) + " < " + std::to_string(h));
  }
  const auto n = g.node_count();
  AugmentingForest f;
  f.h = h;
  f.parent_port.assign(n, std::nullopt);
  f.depth.assign(n, -1);
  std::vector<NodeId> frontier;  // black nodes at the current even depth
  for (NodeId v = 0; v < static_cast<NodeId>(n); ++v)
    if (g.colour(v) == Colour::Black && !m.matched(v)) {
      f.roots.push_back(v);
      f.depth[static_cast<std::size_t>(v)] = 0;
      frontier.push_back(v);
    }
  for (int tau = 1; tau <= h && !frontier.empty(); tau += 2) {
    std::vector<NodeId> offered;
    std::vector<Port> best(n, 0);
    for (NodeId b : frontier)
      for (Port p = 1; p <= g.degree(b); ++p) {
        const NodeId w = g.neighbour(b, p);
        if (m.contains(b, w) || f.member(w)) continue;
        const Port back = g.back_port(b, p);
        auto& slot = best[static_cast<std::size_t>(w)];
        if (slot == 0) offered.push_back(w);
        if (slot == 0 || back < slot) slot = back;
      }
    std::sort(offered.begin(), offered.end());
    std::vector<NodeId> next;
    for (NodeId w : offered) {
      const auto i = static_cast<std::size_t>(w);
      if (tau == h && m.matched(w)) continue;  // reached a matched white at the last hop
      f.parent_port[i] = best[i];
      f.depth[i] = tau;
      if (!m.matched(w)) {
        if (tau == h) f.leaves.push_back(w);
        continue;  // leaf, or a dead end below h
      }
      const NodeId b = m.mate(w);
      f.parent_port[static_cast<std::size_t>(b)] = detail::port_of(g, b, w);
      f.depth[static_cast<std::size_t>(b)] = tau + 1;
      next.push_back(b);
    }
    frontier = std::move(next);
  }
  return f;
}

/// Proposals travel from the leaves to the root in lockstep; a node that
/// receives several keeps the one on its lowest port. Each root with a
/// surviving proposal yields the path it selected.
inline std::vector<AugmentingPath> proposal_phase(const Graph& g, const AugmentingForest& f) {
  const auto n = g.node_count();
  std::vector<Port> chosen(n, 0);
  std::vector<bool> alive(n, false);
  std::vector<std::vector<NodeId>> by_depth(static_cast<std::size_t>(f.h + 1));
  for (NodeId v = 0; v < static_cast<NodeId>(n); ++v)
    if (f.member(v)) by_depth[static_cast<std::size_t>(f.depth[static_cast<std::size_t>(v)])].push_back(v);
  for (NodeId l : f.leaves) alive[static_cast<std::size_t>(l)] = true;
  for (int d = f.h; d >= 1; --d)
    for (NodeId c : by_depth[static_cast<std::size_t>(d)]) {
      if (!alive[static_cast<std::size_t>(c)]) continue;
      const Port up = *f.parent_port[static_cast<std::size_t>(c)];
      const NodeId par = g.neighbour(c, up);
      const Port at_par = g.back_port(c, up);
      auto& slot = chosen[static_cast<std::size_t>(par)];
      if (slot == 0 || at_par < slot) slot = at_par;
      alive[static_cast<std::size_t>(par)] = true;
    }
  std::vector<AugmentingPath> paths;
  for (NodeId r : f.roots) {
    if (!alive[static_cast<std::size_t>(r)]) continue;
    AugmentingPath path{r};
    for (NodeId v = r; chosen[static_cast<std::size_t>(v)] != 0;) {
      v = g.neighbour(v, chosen[static_cast<std::size_t>(v)]);
      path.push_back(v);
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

/// Flips every path: its non-matching edges join m, its matching edges leave.
inline Matching augment_phase(const Graph& g, const Matching& m, const std::vector<AugmentingPath>& paths) {
  std::vector<bool> used(g.node_count(), false);
  for (const auto& path : paths) {
    if (path.size() < 2 || path.size() % 2 != 0)
      throw Error(ErrorCode::NotAugmenting, "path must have an odd number of edges");
    for (NodeId v : path) {
      if (v < 0 || static_cast<std::size_t>(v) >= g.node_count())
        throw Error(ErrorCode::NotAugmenting, "path node " + std::to_string(v) + " outside the graph");
      if (used[static_cast<std::size_t>(v)])
        throw Error(ErrorCode::PathsNotDisjoint, "node " + std::to_string(v) + " lies on two paths");
      used[static_cast<std::size_t>(v)] = true;
    }
    if (m.matched(path.front()) || m.matched(path.back()))
      throw Error(ErrorCode::NotAugmenting, "path endpoints must be unmatched");
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (!g.adjacent(path[i], path[i + 1]))
        throw Error(ErrorCode::NotAugmenting, "path uses a non-edge");
      if (m.contains(path[i], path[i + 1]) != (i % 2 == 1))
        throw Error(ErrorCode::NotAugmenting, "path does not alternate");
    }
  }
  Matching out = m;
  for (const auto& path : paths) {
    for (std::size_t i = 1; i + 1 < path.size(); i += 2) out.remove(path[i]);
    for (std::size_t i = 0; i + 1 < path.size(); i += 2) out.add(path[i], path[i + 1]);
  }
  return out;
}

/// Called after every invocation with the phase index, the 1-based
/// invocation number within the phase and the current matching.
using InvocationObserver = std::function<void(int phase, std::int64_t invocation, const Matching&)>;

/// One flood/propose/augment invocation with path length h.
inline Matching scheme_invocation(const Graph& g, const Matching& m, int h, bool assert_no_shorter = false) {
  const auto forest = flood_phase(g, m, h, assert_no_shorter);
  return augment_phase(g, m, proposal_phase(g, forest));
}

/// Phase i: t_i invocations with h = 2i-1. `delta` is the degree bound the
/// invocation count is derived from (defaults to the maximum degree).
inline Matching eliminate_length(const Graph& g, const Matching& m, int i, std::optional<int> delta = std::nullopt,
                                 const InvocationObserver& observe = {}, bool assert_no_shorter = false) {
  detail::require_proper(g);
  const int d = delta.value_or(g.max_degree());
  if (d < g.max_degree()) throw Error(ErrorCode::DegenerateParams, "degree bound below maximum degree");
  const std::int64_t t = invocations_for(d, i);
  const int h = 2 * i - 1;
  Matching cur = m;
  bool settled = false;  // an invocation that changed nothing repeats identically
  for (std::int64_t q = 1; q <= t; ++q) {
    if (!settled) {
      Matching next = scheme_invocation(g, cur, h, assert_no_shorter);
      settled = next == cur;
      cur = std::move(next);
    }
    if (observe) observe(i, q, cur);
  }
  return cur;
}

struct MatchingSchemeResult {
  Matching matching;
  std::vector<std::int64_t> invocations;  // per phase
  int rounds = 0;
};

/// Phases 1..k from the empty matching. The result has no augmenting path of
/// length at most 2k-1.
inline MatchingSchemeResult approximate_maximum_matching(const Graph& g, int k, std::optional<int> delta = std::nullopt,
                                                         const InvocationObserver& observe = {},
                                                         bool assert_no_shorter = false) {
  detail::require_proper(g);
  if (k < 1) throw Error(ErrorCode::DegenerateParams, "k must be at least 1");
  const int d = delta.value_or(g.max_degree());
  MatchingSchemeResult r{Matching(g.node_count()), {}, matching_scheme_rounds(d, k)};
  for (int i = 1; i <= k; ++i) {
    std::int64_t count = 0;
    auto counting = [&](int phase, std::int64_t q, const Matching& cur) {
      ++count;
      if (observe) observe(phase, q, cur);
    };
    r.matching = eliminate_length(g, r.matching, i, d, counting, assert_no_shorter);
    r.invocations.push_back(count);
  }
  return r;
}

// ---------------------------------------------------------------------------
// The same scheme as a local algorithm. Only the mate port survives from one
// invocation to the next.

class MatchingSchemeAlgorithm {
 public:
  struct State {
    Colour colour = Colour::Black;
    int degree = 0;
    int delta = 0;
    Port mate = 0;  // 0 when unmatched
    // Per invocation.
    bool root = false;
    bool joined = false;
    bool leaf = false;
    int depth = -1;
    Port parent = 0;
    Port chosen = 0;
  };
  using Output = Port;  // mate port, 0 when unmatched

  explicit MatchingSchemeAlgorithm(int k) : k_(k) {
    if (k < 1) throw Error(ErrorCode::DegenerateParams, "k must be at least 1");
  }

  Requirements requirements() const { return {.colour = true}; }
  int round_budget(int delta) const { return matching_scheme_rounds(delta, k_); }

  State init(const NodeView& view, Outbox& out) const {
    State s;
    s.colour = *view.colour;
    s.degree = view.degree;
    s.delta = view.max_degree;
    begin(s, out);
    return s;
  }

  void step(State& s, const Inbox& in, Outbox& out, int round) const {
    const auto [h, rho] = locate(s.delta, round);
    if (rho <= h) {
      flood(s, in, out, h, rho);
    } else if (rho <= 2 * h) {
      propose(s, in, out, h, rho);
    } else {
      augment(s, in, out, h);
    }
    if (rho == 3 * h) begin(s, out);
  }

  Port finalize(const State& s) const { return s.mate; }

  std::string describe(const State& s) const {
    return std::string(s.colour == Colour::Black ? "b" : "w") + " m" + std::to_string(s.mate) + " d" +
           std::to_string(s.depth) + " p" + std::to_string(s.parent) + " c" + std::to_string(s.chosen) +
           (s.leaf ? " leaf" : "");
  }

 private:
  static constexpr std::uint8_t kFlood = 0x60;
  static constexpr std::uint8_t kPropose = 0x61;
  static constexpr std::uint8_t kAugment = 0x62;

  static Payload msg(std::uint8_t tag, int hop) { return {tag, static_cast<std::uint8_t>(hop)}; }

  static bool tagged(const Inbox& in, Port p, std::uint8_t tag) { return in.has(p) && (*in.at(p))[0] == tag; }

  // Path length and 1-based local round of a global round.
  std::pair<int, int> locate(int delta, int round) const {
    int r = round - 1;
    for (int i = 1; i <= k_; ++i) {
      const int h = 2 * i - 1;
      const std::int64_t block = invocations_for(delta, i) * 3 * h;
      if (r < block) return {h, r % (3 * h) + 1};
      r -= static_cast<int>(block);
    }
    throw Error(ErrorCode::InternalAssertion, "round beyond the schedule");
  }

  static void begin(State& s, Outbox& out) {
    s.root = s.colour == Colour::Black && s.mate == 0;
    s.joined = s.root;
    s.leaf = false;
    s.depth = s.root ? 0 : -1;
    s.parent = 0;
    s.chosen = 0;
    if (s.root)
      for (Port p = 1; p <= s.degree; ++p) out.send(p, msg(kFlood, 1));
  }

  static void flood(State& s, const Inbox& in, Outbox& out, int h, int rho) {
    if (!s.joined) {
      for (Port p = 1; p <= s.degree; ++p) {
        if (!tagged(in, p, kFlood)) continue;
        if (s.colour == Colour::Black && p != s.mate) continue;  // blacks hear only from their mate
        const int tau = (*in.at(p))[1];
        if (s.colour == Colour::White && tau == h && s.mate != 0) break;  // discarded
        s.joined = true;
        s.parent = p;
        s.depth = tau;
        if (s.colour == Colour::White) {
          if (s.mate == 0)
            s.leaf = tau == h;
          else
            out.send(s.mate, msg(kFlood, tau + 1));
        } else {
          for (Port q = 1; q <= s.degree; ++q)
            if (q != s.mate) out.send(q, msg(kFlood, tau + 1));
        }
        break;
      }
    }
    if (rho == h && s.leaf) out.send(s.parent, msg(kPropose, h - 1));
  }

  static void propose(State& s, Inbox const& in, Outbox& out, int h, int rho) {
    if (!s.joined || s.depth != 2 * h - rho) return;
    for (Port p = 1; p <= s.degree; ++p)
      if (tagged(in, p, kPropose)) {
        s.chosen = p;
        break;
      }
    if (s.chosen == 0) return;
    if (s.root) {
      s.mate = s.chosen;
      out.send(s.chosen, msg(kAugment, 1));
    } else {
      out.send(s.parent, msg(kPropose, s.depth - 1));
    }
  }

  static void augment(State& s, const Inbox& in, Outbox& out, int /*h*/) {
    if (!s.joined || s.root || s.parent == 0 || !tagged(in, s.parent, kAugment)) return;
    if (s.colour == Colour::White) {
      s.mate = s.parent;
      if (!s.leaf) out.send(s.chosen, msg(kAugment, s.depth + 1));
    } else {
      s.mate = s.chosen;
      out.send(s.chosen, msg(kAugment, s.depth + 1));
    }
  }

  int k_;
};

/// Turns the mate ports reported by the nodes into a Matching, checking that
/// both ends agree.
inline Matching collect_matching(const Graph& g, const std::vector<Port>& mates) {
  Matching m(g.node_count());
  for (NodeId v = 0; v < static_cast<NodeId>(g.node_count()); ++v) {
    const Port p = mates[static_cast<std::size_t>(v)];
    if (p == 0) continue;
    const NodeId u = g.neighbour(v, p);
    if (mates[static_cast<std::size_t>(u)] != g.back_port(v, p))
      throw Error(ErrorCode::InternalAssertion, "nodes " + std::to_string(v) + " and " + std::to_string(u) + " disagree on their mate");
    m.add(v, u);
  }
  return m;
}

/// Runs the local scheme on the engine and assembles the matching.
inline std::pair<Matching, RunResult<Port>> run_matching_scheme(const Graph& g, int k, const RunOptions& opts = {}) {
  detail::require_proper(g);
  auto run = run_local_algorithm(g, MatchingSchemeAlgorithm(k), opts);
  Matching m = collect_matching(g, run.outputs);
  return {std::move(m), std::move(run)};
}

}  // namespace colocal
