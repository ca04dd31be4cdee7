#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "colocal/graph.hpp"
#include "colocal/sim.hpp"

namespace colocal {

/// Forest of rooted trees over the nodes of a graph. A child knows only the
/// port leading to its parent; roots have no parent port.
struct RootedForest {
  std::vector<std::optional<Port>> parent_port;

  std::optional<NodeId> parent(const Graph& g, NodeId v) const {
    const auto& p = parent_port[static_cast<std::size_t>(v)];
    if (!p) return std::nullopt;
    return g.neighbour(v, *p);
  }

  friend bool operator==(const RootedForest&, const RootedForest&) = default;
};

/// A depth-1 tree. Leaves are listed in the root's port order.
struct Star {
  NodeId root = 0;
  std::vector<NodeId> leaves;

  friend bool operator==(const Star&, const Star&) = default;
};

/// Partition of the nodes into stars, sorted by root id.
struct StarForest {
  std::vector<Star> stars;

  friend bool operator==(const StarForest&, const StarForest&) = default;
};

namespace detail {

inline std::optional<Port> lowest_port_with_colour(const Graph& g, NodeId v, Colour want) {
  for (Port p = 1; p <= g.degree(v); ++p)
    if (g.colour(g.neighbour(v, p)) == want) return p;
  return std::nullopt;
}

}  // namespace detail

/// Steps 1-2 of the star construction: every black node points to its
/// lowest-port white neighbour, then every white node without children points
/// to its lowest-port black neighbour.
inline RootedForest build_parent_forest(const Graph& g) {
  if (classify_colouring(g) == ColouringClass::None)
    throw Error(ErrorCode::NotWeaklyColoured, "star forest needs a weak 2-colouring");
  const auto n = static_cast<NodeId>(g.node_count());
  RootedForest f;
  f.parent_port.resize(g.node_count());
  std::vector<bool> has_child(g.node_count(), false);
  for (NodeId v = 0; v < n; ++v) {
    if (g.colour(v) != Colour::Black) continue;
    const auto p = detail::lowest_port_with_colour(g, v, Colour::White);
    f.parent_port[static_cast<std::size_t>(v)] = p;
    has_child[static_cast<std::size_t>(g.neighbour(v, *p))] = true;
  }
  for (NodeId v = 0; v < n; ++v)
    if (g.colour(v) == Colour::White && !has_child[static_cast<std::size_t>(v)])
      f.parent_port[static_cast<std::size_t>(v)] = detail::lowest_port_with_colour(g, v, Colour::Black);
  return f;
}

/// Turns a forest of depth-1 and depth-2 trees into stars. For a tree with
/// root r:
///   all leaves at depth 1      -> unchanged;
///   leaves at depths 1 and 2   -> non-leaf children split off as roots of their own stars;
///   all leaves at depth 2      -> the lowest-port child x keeps r, which becomes a leaf of x,
///                                 every other child splits off.
inline StarForest normalize_stars(const Graph& g, const RootedForest& f) {
  const auto n = static_cast<NodeId>(g.node_count());
  if (f.parent_port.size() != g.node_count())
    throw Error(ErrorCode::MalformedForest, "forest does not cover the graph");

  // children[v] holds v's ports towards its children, ascending
  std::vector<std::vector<Port>> children(g.node_count());
  std::vector<NodeId> parent(g.node_count(), -1);
  for (NodeId v = 0; v < n; ++v) {
    const auto& p = f.parent_port[static_cast<std::size_t>(v)];
    if (!p) continue;
    if (*p < 1 || *p > g.degree(v)) throw Error(ErrorCode::MalformedForest, "parent port out of range");
    parent[static_cast<std::size_t>(v)] = g.neighbour(v, *p);
    children[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])].push_back(g.back_port(v, *p));
  }
  for (auto& c : children) std::sort(c.begin(), c.end());

  auto depth_of = [&](NodeId v) {
    int d = 0;
    for (NodeId x = v; parent[static_cast<std::size_t>(x)] != -1; x = parent[static_cast<std::size_t>(x)])
      if (++d > 2) throw Error(ErrorCode::MalformedForest, "tree deeper than 2 at node " + std::to_string(v));
    return d;
  };
  for (NodeId v = 0; v < n; ++v) depth_of(v);

  auto kids = [&](NodeId v) {
    std::vector<NodeId> out;
    for (Port p : children[static_cast<std::size_t>(v)]) out.push_back(g.neighbour(v, p));
    return out;
  };
  auto is_leaf = [&](NodeId v) { return children[static_cast<std::size_t>(v)].empty(); };

  StarForest out;
  for (NodeId r = 0; r < n; ++r) {
    if (parent[static_cast<std::size_t>(r)] != -1) continue;
    if (is_leaf(r)) throw Error(ErrorCode::MalformedForest, "root " + std::to_string(r) + " has no children");
    const auto cs = kids(r);
    const auto leaf_children = static_cast<std::size_t>(std::count_if(cs.begin(), cs.end(), is_leaf));
    if (leaf_children == cs.size()) {
      out.stars.push_back({r, cs});
    } else if (leaf_children > 0) {
      Star own{r, {}};
      for (NodeId c : cs) {
        if (is_leaf(c))
          own.leaves.push_back(c);
        else
          out.stars.push_back({c, kids(c)});
      }
      out.stars.push_back(std::move(own));
    } else {
      const NodeId x = cs.front();
      for (NodeId c : cs)
        if (c != x) out.stars.push_back({c, kids(c)});
      // r joins x's star through x's parent port; keep x's leaves in x's port order
      std::vector<std::pair<Port, NodeId>> ordered;
      for (Port p : children[static_cast<std::size_t>(x)]) ordered.emplace_back(p, g.neighbour(x, p));
      ordered.emplace_back(*f.parent_port[static_cast<std::size_t>(x)], r);
      std::sort(ordered.begin(), ordered.end());
      Star sx{x, {}};
      for (const auto& [p, v] : ordered) sx.leaves.push_back(v);
      out.stars.push_back(std::move(sx));
    }
  }
  std::sort(out.stars.begin(), out.stars.end(), [](const Star& a, const Star& b) { return a.root < b.root; });
  return out;
}

inline StarForest build_star_forest(const Graph& g) { return normalize_stars(g, build_parent_forest(g)); }

/// Roots of the stars.
inline std::vector<NodeId> star_dominating_set(const StarForest& s) {
  std::vector<NodeId> out;
  for (const Star& st : s.stars) out.push_back(st.root);
  std::sort(out.begin(), out.end());
  return out;
}

/// One root-leaf edge per star: the leaf behind the root's lowest port.
inline std::vector<Edge> star_matching(const StarForest& s) {
  std::vector<Edge> out;
  for (const Star& st : s.stars) out.push_back(make_edge(st.root, st.leaves.front()));
  std::sort(out.begin(), out.end());
  return out;
}

/// Checks the partition invariants; returns a description of the first
/// violation, or nothing.
inline std::optional<std::string> star_forest_violation(const Graph& g, const StarForest& s) {
  std::vector<int> seen(g.node_count(), 0);
  for (const Star& st : s.stars) {
    if (st.leaves.empty()) return "star at " + std::to_string(st.root) + " has no leaf";
    ++seen[static_cast<std::size_t>(st.root)];
    for (NodeId l : st.leaves) {
      if (!g.adjacent(st.root, l)) return "leaf " + std::to_string(l) + " not adjacent to root";
      ++seen[static_cast<std::size_t>(l)];
    }
  }
  for (std::size_t v = 0; v < seen.size(); ++v)
    if (seen[v] != 1) return "node " + std::to_string(v) + " appears in " + std::to_string(seen[v]) + " stars";
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Per-node implementation.

/// Final role of one node in the star forest.
struct StarRole {
  bool root = false;
  std::optional<Port> parent;      // leaves: port towards the root
  std::vector<Port> children;      // roots: ports towards the leaves, ascending
  std::optional<Port> matched;     // matching mode only

  friend bool operator==(const StarRole&, const StarRole&) = default;
};

/// Node-local star construction over a subset of the node's ports. Five
/// rounds build the stars; a sixth tells each star's chosen leaf it is
/// matched. Every message is one byte.
///
///   round 1  colours exchanged; black nodes pick a white parent
///   round 2  white nodes learn their children; childless ones pick a black parent
///   round 3  black nodes learn their children and report leaf/non-leaf upwards
///   round 4  roots classify their tree and send detach / reverse directives
///   round 5  directives applied; in matching mode roots notify their chosen leaf
///   round 6  (matching mode) leaves record the match
class StarNode {
 public:
  static constexpr int kForestRounds = 5;

  StarNode() = default;
  StarNode(Colour colour, std::vector<bool> active) : colour_(colour), active_(std::move(active)) {
    nbr_colour_.resize(active_.size(), Colour::Black);
  }

  bool active() const { return std::find(active_.begin(), active_.end(), true) != active_.end(); }

  void start(Outbox& out) const {
    for (Port p = 1; p <= degree(); ++p)
      if (on(p)) out.send(p, {static_cast<std::uint8_t>(kColour | static_cast<int>(colour_))});
  }

  /// Processes local round t (1-based).
  void step(int t, const Inbox& in, Outbox& out, bool matching) {
    switch (t) {
      case 1:
        for (Port p = 1; p <= degree(); ++p)
          if (on(p) && in.has(p)) nbr_colour_[idx(p)] = static_cast<Colour>((*in.at(p))[0] & 1);
        if (colour_ == Colour::Black) {
          parent_ = lowest(Colour::White);
          out.send(*parent_, {kChild});
        }
        break;
      case 2:
        if (colour_ == Colour::White) {
          children_ = tagged(in, kChild);
          if (children_.empty()) {
            parent_ = lowest(Colour::Black);
            out.send(*parent_, {kChild});
          }
        }
        break;
      case 3:
        if (colour_ == Colour::Black) {
          children_ = tagged(in, kChild);
          out.send(*parent_, {children_.empty() ? kLeaf : kInner});
        }
        break;
      case 4:
        if (colour_ == Colour::White) {
          if (parent_) {  // depth-2 leaf, final
            role_.parent = parent_;
          } else {
            const auto leaves = tagged(in, kLeaf);
            const auto inner = tagged(in, kInner);
            if (inner.empty()) {
              role_.root = true;
              role_.children = children_;
            } else if (!leaves.empty()) {
              role_.root = true;
              role_.children = leaves;
              for (Port p : inner) out.send(p, {kDetach});
            } else {
              const Port x = children_.front();
              for (Port p : children_) out.send(p, {p == x ? kReverse : kDetach});
              role_.parent = x;
            }
          }
        }
        break;
      case 5:
        if (colour_ == Colour::Black) {
          if (in.has(*parent_) && (*in.at(*parent_))[0] == kReverse) {
            role_.root = true;
            role_.children = children_;
            role_.children.push_back(*parent_);
            std::sort(role_.children.begin(), role_.children.end());
          } else if (in.has(*parent_) && (*in.at(*parent_))[0] == kDetach) {
            role_.root = true;
            role_.children = children_;
          } else {
            role_.parent = parent_;
          }
        }
        if (matching && role_.root) {
          role_.matched = role_.children.front();
          out.send(*role_.matched, {kMatch});
        }
        break;
      case 6:
        if (!role_.root) {
          const auto m = tagged(in, kMatch);
          if (!m.empty()) role_.matched = m.front();
        }
        break;
      default:
        break;
    }
  }

  const StarRole& role() const { return role_; }

  std::string describe() const {
    std::string s = colour_ == Colour::Black ? "b" : "w";
    s += " p" + std::to_string(parent_.value_or(0)) + " c";
    for (Port p : children_) s += std::to_string(p) + ",";
    s += role_.root ? " root" : " leaf";
    return s;
  }

 private:
  static constexpr std::uint8_t kColour = 0x10;
  static constexpr std::uint8_t kChild = 0x20;
  static constexpr std::uint8_t kLeaf = 0x30;
  static constexpr std::uint8_t kInner = 0x31;
  static constexpr std::uint8_t kDetach = 0x40;
  static constexpr std::uint8_t kReverse = 0x41;
  static constexpr std::uint8_t kMatch = 0x50;

  int degree() const { return static_cast<int>(active_.size()); }
  bool on(Port p) const { return active_[idx(p)]; }
  static std::size_t idx(Port p) { return static_cast<std::size_t>(p - 1); }

  Port lowest(Colour want) const {
    for (Port p = 1; p <= degree(); ++p)
      if (on(p) && nbr_colour_[idx(p)] == want) return p;
    throw Error(ErrorCode::NotWeaklyColoured, "node has no neighbour of the opposite colour");
  }

  std::vector<Port> tagged(const Inbox& in, std::uint8_t tag) const {
    std::vector<Port> out;
    for (Port p = 1; p <= degree(); ++p)
      if (on(p) && in.has(p) && (*in.at(p))[0] == tag) out.push_back(p);
    return out;
  }

  Colour colour_ = Colour::Black;
  std::vector<bool> active_;
  std::vector<Colour> nbr_colour_;
  std::optional<Port> parent_;
  std::vector<Port> children_;
  StarRole role_;
};

/// The star algorithm as a local algorithm on a weakly 2-coloured graph.
/// Dominating-set mode runs 5 rounds, matching mode 6, for every degree bound.
class StarForestAlgorithm {
 public:
  enum class Mode { DominatingSet, Matching };

  struct State {
    StarNode node;
  };
  using Output = StarRole;

  explicit StarForestAlgorithm(Mode mode = Mode::DominatingSet) : mode_(mode) {}

  Requirements requirements() const { return {.colour = true}; }
  int round_budget(int) const { return StarNode::kForestRounds + (mode_ == Mode::Matching ? 1 : 0); }

  State init(const NodeView& view, Outbox& out) const {
    State s{StarNode(*view.colour, std::vector<bool>(static_cast<std::size_t>(view.degree), true))};
    s.node.start(out);
    return s;
  }

  void step(State& s, const Inbox& in, Outbox& out, int round) const {
    s.node.step(round, in, out, mode_ == Mode::Matching);
  }

  StarRole finalize(const State& s) const { return s.node.role(); }

  std::string describe(const State& s) const { return s.node.describe(); }

 private:
  Mode mode_;
};

/// Assembles the per-node roles into a StarForest, checking that roots and
/// leaves agree with each other.
inline StarForest collect_star_forest(const Graph& g, const std::vector<StarRole>& roles) {
  StarForest out;
  for (NodeId r = 0; r < static_cast<NodeId>(g.node_count()); ++r) {
    const auto& role = roles[static_cast<std::size_t>(r)];
    if (!role.root) continue;
    Star st{r, {}};
    for (Port p : role.children) {
      const NodeId l = g.neighbour(r, p);
      const auto& lr = roles[static_cast<std::size_t>(l)];
      if (lr.root || lr.parent != g.back_port(r, p))
        throw Error(ErrorCode::InternalAssertion, "leaf " + std::to_string(l) + " disagrees with root " + std::to_string(r));
      st.leaves.push_back(l);
    }
    out.stars.push_back(std::move(st));
  }
  if (auto bad = star_forest_violation(g, out)) throw Error(ErrorCode::InternalAssertion, *bad);
  return out;
}

/// Matched edges reported by the roots in matching mode.
inline std::vector<Edge> collect_star_matching(const Graph& g, const std::vector<StarRole>& roles) {
  std::vector<Edge> out;
  for (NodeId r = 0; r < static_cast<NodeId>(g.node_count()); ++r) {
    const auto& role = roles[static_cast<std::size_t>(r)];
    if (!role.root || !role.matched) continue;
    const NodeId l = g.neighbour(r, *role.matched);
    if (roles[static_cast<std::size_t>(l)].matched != g.back_port(r, *role.matched))
      throw Error(ErrorCode::InternalAssertion, "matched leaf " + std::to_string(l) + " was not told");
    out.push_back(make_edge(r, l));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace colocal
