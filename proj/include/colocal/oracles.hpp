#pragma once

#include <bit>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "colocal/graph.hpp"
#include "colocal/matching.hpp"

namespace colocal {

/// Default node limit for the exponential set searches.
inline constexpr std::size_t kOracleNodeLimit = 24;

namespace detail {

using Mask = std::uint64_t;

inline Mask bit(NodeId v) { return Mask{1} << static_cast<unsigned>(v); }

inline void check_size(const Graph& g, std::size_t limit) {
  if (g.node_count() > limit || g.node_count() > 64)
    throw Error(ErrorCode::TooLarge, std::to_string(g.node_count()) + " nodes exceeds the oracle limit of " +
                                         std::to_string(std::min<std::size_t>(limit, 64)));
}

inline std::vector<Mask> closed_neighbourhoods(const Graph& g) {
  std::vector<Mask> out(g.node_count());
  for (NodeId v = 0; v < static_cast<NodeId>(g.node_count()); ++v) {
    out[static_cast<std::size_t>(v)] = bit(v);
    for (const auto& h : g.ports(v)) out[static_cast<std::size_t>(v)] |= bit(h.to);
  }
  return out;
}

inline std::vector<NodeId> members(Mask m) {
  std::vector<NodeId> out;
  while (m) {
    out.push_back(static_cast<NodeId>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

class DominatingSetSearch {
 public:
  explicit DominatingSetSearch(const Graph& g) : closed_(closed_neighbourhoods(g)) {
    const auto n = g.node_count();
    full_ = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    for (Mask c : closed_) max_cover_ = std::max(max_cover_, std::popcount(c));
    best_ = full_;
    best_size_ = static_cast<int>(n);
    root_bound_ = bound(0);
  }

  Mask run() {
    if (full_ != 0) search(0, 0, 0);
    return best_;
  }

 private:
  int bound(Mask dominated) const {
    const int rest = std::popcount(full_ & ~dominated);
    return (rest + max_cover_ - 1) / max_cover_;
  }

  void search(Mask dominated, Mask chosen, int count) {
    if (done_) return;
    if (dominated == full_) {
      if (count < best_size_) {
        best_size_ = count;
        best_ = chosen;
        done_ = best_size_ == root_bound_;
      }
      return;
    }
    if (count + bound(dominated) >= best_size_) return;
    const NodeId u = static_cast<NodeId>(std::countr_zero(full_ & ~dominated));
    // most new coverage first
    auto cands = members(closed_[static_cast<std::size_t>(u)]);
    std::stable_sort(cands.begin(), cands.end(), [&](NodeId a, NodeId b) {
      return std::popcount(closed_[static_cast<std::size_t>(a)] & ~dominated) >
             std::popcount(closed_[static_cast<std::size_t>(b)] & ~dominated);
    });
    for (NodeId v : cands) search(dominated | closed_[static_cast<std::size_t>(v)], chosen | bit(v), count + 1);
  }

  std::vector<Mask> closed_;
  Mask full_ = 0;
  Mask best_ = 0;
  int best_size_ = 0;
  int max_cover_ = 1;
  int root_bound_ = 0;
  bool done_ = false;
};

class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const Graph& g) : closed_(closed_neighbourhoods(g)) {
    const auto n = g.node_count();
    full_ = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  }

  Mask run() {
    search(full_, 0, 0);
    return best_;
  }

 private:
  void search(Mask cand, Mask chosen, int count) {
    if (count + std::popcount(cand) <= best_size_) return;
    if (cand == 0) {
      best_size_ = count;
      best_ = chosen;
      return;
    }
    // a candidate with no candidate neighbours can always be taken
    for (Mask m = cand; m; m &= m - 1) {
      const auto v = static_cast<NodeId>(std::countr_zero(m));
      if ((closed_[static_cast<std::size_t>(v)] & cand) == bit(v)) {
        search(cand & ~bit(v), chosen | bit(v), count + 1);
        return;
      }
    }
    const auto v = static_cast<NodeId>(std::countr_zero(cand));
    search(cand & ~closed_[static_cast<std::size_t>(v)], chosen | bit(v), count + 1);
    search(cand & ~bit(v), chosen, count);
  }

  std::vector<Mask> closed_;
  Mask full_ = 0;
  Mask best_ = 0;
  int best_size_ = -1;
};

}  // namespace detail

/// Minimum-cardinality dominating set by branch and bound: branch over the
/// closed neighbourhood of the lowest undominated node, prune with
/// ceil(undominated / max closed-neighbourhood size).
inline std::vector<NodeId> brute_min_dominating_set(const Graph& g, std::size_t limit = kOracleNodeLimit) {
  detail::check_size(g, limit);
  return detail::members(detail::DominatingSetSearch(g).run());
}

/// Maximum independent set by include/exclude branch and bound.
inline std::vector<NodeId> brute_max_independent_set(const Graph& g, std::size_t limit = kOracleNodeLimit) {
  detail::check_size(g, limit);
  return detail::members(detail::IndependentSetSearch(g).run());
}

/// Exact maximum matching (Edmonds' blossom algorithm); no size limit.
inline std::vector<Edge> brute_max_matching(const Graph& g) {
  using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BGraph bg(g.node_count());
  for (const Edge& e : g.edges()) boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), bg);
  std::vector<boost::graph_traits<BGraph>::vertex_descriptor> mate(g.node_count());
  boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
  std::vector<Edge> out;
  const auto none = boost::graph_traits<BGraph>::null_vertex();
  for (std::size_t v = 0; v < mate.size(); ++v)
    if (mate[v] != none && mate[v] > v) out.push_back({static_cast<NodeId>(v), static_cast<NodeId>(mate[v])});
  return out;
}

namespace detail {

inline std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> side(g.node_count(), -1);
  for (std::size_t s = 0; s < g.node_count(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::deque<NodeId> q{static_cast<NodeId>(s)};
    while (!q.empty()) {
      const NodeId v = q.front();
      q.pop_front();
      for (const auto& h : g.ports(v)) {
        auto& sh = side[static_cast<std::size_t>(h.to)];
        if (sh == -1) {
          sh = 1 - side[static_cast<std::size_t>(v)];
          q.push_back(h.to);
        } else if (sh == side[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

// Simple alternating path of exactly `left` more edges from v, whose next edge
// must be a matching edge iff `want_matched`.
inline bool alternating_dfs(const Graph& g, const Matching& m, NodeId v, int left, bool want_matched,
                            std::vector<bool>& on_path) {
  if (left == 0) return want_matched && !m.matched(v);  // arrived over a non-matching edge
  for (const auto& h : g.ports(v)) {
    if (on_path[static_cast<std::size_t>(h.to)] || m.contains(v, h.to) != want_matched) continue;
    on_path[static_cast<std::size_t>(h.to)] = true;
    const bool ok = alternating_dfs(g, m, h.to, left - 1, !want_matched, on_path);
    on_path[static_cast<std::size_t>(h.to)] = false;
    if (ok) return true;
  }
  return false;
}

}  // namespace detail

inline void check_matching(const Graph& g, const Matching& m) {
  if (m.node_count() != g.node_count()) throw Error(ErrorCode::InvalidMatching, "matching built for another graph");
  for (const Edge& e : m.edges())
    if (!g.adjacent(e.u, e.v))
      throw Error(ErrorCode::InvalidMatching, "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} not in graph");
}

/// Length of a shortest augmenting path, or nothing when m is maximum.
/// Bipartite graphs use an alternating breadth-first search from the
/// unmatched nodes of one side; other graphs fall back to an exhaustive
/// search over simple alternating paths of increasing odd length.
inline std::optional<int> shortest_augmenting_path_length(const Graph& g, const Matching& m) {
  check_matching(g, m);
  const auto n = g.node_count();
  if (auto side = detail::bipartition(g)) {
    std::vector<int> dist(n, -1);
    std::deque<NodeId> q;
    for (std::size_t v = 0; v < n; ++v)
      if ((*side)[v] == 0 && !m.matched(static_cast<NodeId>(v))) {
        dist[v] = 0;
        q.push_back(static_cast<NodeId>(v));
      }
    while (!q.empty()) {
      const NodeId x = q.front();
      q.pop_front();
      for (const auto& h : g.ports(x)) {
        const NodeId y = h.to;
        if (m.contains(x, y) || dist[static_cast<std::size_t>(y)] != -1) continue;
        dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
        if (!m.matched(y)) return dist[static_cast<std::size_t>(y)];
        const NodeId x2 = m.mate(y);
        if (dist[static_cast<std::size_t>(x2)] == -1) {
          dist[static_cast<std::size_t>(x2)] = dist[static_cast<std::size_t>(y)] + 1;
          q.push_back(x2);
        }
      }
    }
    return std::nullopt;
  }
  std::vector<bool> on_path(n, false);
  for (int len = 1; len < static_cast<int>(n); len += 2)
    for (std::size_t s = 0; s < n; ++s) {
      if (m.matched(static_cast<NodeId>(s))) continue;
      on_path[s] = true;
      const bool found = detail::alternating_dfs(g, m, static_cast<NodeId>(s), len, false, on_path);
      on_path[s] = false;
      if (found) return len;
    }
  return std::nullopt;
}

enum class SolutionKind { DominatingSet, Matching, IndependentSet };

constexpr std::string_view to_string(SolutionKind k) {
  switch (k) {
    case SolutionKind::DominatingSet: return "ds";
    case SolutionKind::Matching: return "matching";
    case SolutionKind::IndependentSet: return "is";
  }
  return "ds";
}

struct Solution {
  SolutionKind kind = SolutionKind::DominatingSet;
  std::vector<NodeId> nodes;  // dominating set, independent set
  std::vector<Edge> edges;    // matching

  std::size_t size() const { return kind == SolutionKind::Matching ? edges.size() : nodes.size(); }
};

struct Verification {
  bool valid = true;
  std::vector<std::string> violations;
};

/// Checks a solution against its problem's definition. Violations are
/// collected, never thrown.
inline Verification verify_solution(const Graph& g, const Solution& s) {
  Verification out;
  auto fail = [&](std::string why) {
    out.valid = false;
    out.violations.push_back(std::move(why));
  };
  const auto n = static_cast<NodeId>(g.node_count());
  auto in_range = [&](NodeId v) { return v >= 0 && v < n; };
  std::vector<bool> in(g.node_count(), false);
  for (NodeId v : s.nodes) {
    if (!in_range(v)) {
      fail("node " + std::to_string(v) + " does not exist");
      continue;
    }
    if (in[static_cast<std::size_t>(v)]) fail("node " + std::to_string(v) + " listed twice");
    in[static_cast<std::size_t>(v)] = true;
  }
  switch (s.kind) {
    case SolutionKind::DominatingSet:
      for (NodeId v = 0; v < n; ++v) {
        bool dominated = in[static_cast<std::size_t>(v)];
        for (const auto& h : g.ports(v)) dominated = dominated || in[static_cast<std::size_t>(h.to)];
        if (!dominated) fail("node " + std::to_string(v) + " is not dominated");
      }
      break;
    case SolutionKind::IndependentSet:
      for (const Edge& e : g.edges())
        if (in[static_cast<std::size_t>(e.u)] && in[static_cast<std::size_t>(e.v)])
          fail("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} inside the set");
      break;
    case SolutionKind::Matching: {
      std::vector<bool> used(g.node_count(), false);
      for (const Edge& e : s.edges) {
        if (!in_range(e.u) || !in_range(e.v) || !g.adjacent(e.u, e.v)) {
          fail("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} not in graph");
          continue;
        }
        for (NodeId x : {e.u, e.v}) {
          if (used[static_cast<std::size_t>(x)]) fail("node " + std::to_string(x) + " covered twice");
          used[static_cast<std::size_t>(x)] = true;
        }
      }
      break;
    }
  }
  return out;
}

}  // namespace colocal
