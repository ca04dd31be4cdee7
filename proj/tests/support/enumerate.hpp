#pragma once

// Exhaustive small-graph enumeration up to isomorphism, by vertex addition
// and a canonical form (colour refinement, then every ordering within the
// refined cells).

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_set>
#include <vector>

#include "colocal/graph.hpp"

namespace colocal::testing {

constexpr int kMaxSmall = 12;

struct SmallGraph {
  int n = 0;
  std::array<std::uint16_t, kMaxSmall> adj{};
  std::optional<std::uint16_t> white;  // bit v set: v is white

  bool edge(int u, int v) const { return (adj[static_cast<std::size_t>(u)] >> v) & 1; }
  int degree(int v) const { return __builtin_popcount(adj[static_cast<std::size_t>(v)]); }
  void add_edge(int u, int v) {
    adj[static_cast<std::size_t>(u)] |= static_cast<std::uint16_t>(1u << v);
    adj[static_cast<std::size_t>(v)] |= static_cast<std::uint16_t>(1u << u);
  }
};

/// Ports follow ascending neighbour id; no orientation.
inline Graph to_graph(const SmallGraph& s, std::optional<std::uint16_t> white = std::nullopt) {
  if (!white) white = s.white;
  std::vector<std::vector<NodeId>> nb(static_cast<std::size_t>(s.n));
  for (int v = 0; v < s.n; ++v)
    for (int u = 0; u < s.n; ++u)
      if (s.edge(v, u)) nb[static_cast<std::size_t>(v)].push_back(u);
  auto port = [&](int at, int to) {
    const auto& l = nb[static_cast<std::size_t>(at)];
    return static_cast<Port>(std::find(l.begin(), l.end(), to) - l.begin() + 1);
  };
  std::vector<EdgeSpec> specs;
  for (int u = 0; u < s.n; ++u)
    for (int v = u + 1; v < s.n; ++v)
      if (s.edge(u, v)) specs.push_back({u, v, port(u, v), port(v, u), std::nullopt});
  std::optional<std::vector<Colour>> colours;
  if (white) {
    colours.emplace();
    for (int v = 0; v < s.n; ++v) colours->push_back(((*white >> v) & 1) ? Colour::White : Colour::Black);
  }
  return build_graph(static_cast<std::size_t>(s.n), std::move(colours), specs);
}

/// Canonical key: equal keys iff the (coloured) graphs are isomorphic.
/// Packs n, colour bits and the upper triangle; valid for n <= 10.
inline std::uint64_t canonical_key(const SmallGraph& g) {
  const int n = g.n;
  auto colour_bit = [&](int v) { return g.white ? static_cast<int>((*g.white >> v) & 1) : 0; };
  std::vector<int> cell(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) cell[static_cast<std::size_t>(v)] = colour_bit(v) * 64 + g.degree(v);
  for (int count = -1;;) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.push_back(cell[static_cast<std::size_t>(v)]);
      std::vector<int> nbc;
      for (int u = 0; u < n; ++u)
        if (g.edge(v, u)) nbc.push_back(cell[static_cast<std::size_t>(u)]);
      std::sort(nbc.begin(), nbc.end());
      s.insert(s.end(), nbc.begin(), nbc.end());
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v)
      cell[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[static_cast<std::size_t>(v)]) - distinct.begin());
    if (static_cast<int>(distinct.size()) == count) break;
    count = static_cast<int>(distinct.size());
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return cell[static_cast<std::size_t>(a)] != cell[static_cast<std::size_t>(b)]
               ? cell[static_cast<std::size_t>(a)] < cell[static_cast<std::size_t>(b)]
               : a < b;
  });
  std::vector<std::pair<int, int>> cells;  // [begin, end) in order
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && cell[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])] ==
                        cell[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])])
      ++j;
    cells.push_back({i, j});
    i = j;
  }
  auto encode = [&] {
    std::uint64_t key = 0;
    for (int i = 0; i < n; ++i) key = (key << 1) | static_cast<std::uint64_t>(colour_bit(order[static_cast<std::size_t>(i)]));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        key = (key << 1) | static_cast<std::uint64_t>(g.edge(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]));
    return key;
  };
  // Odometer over the orderings of every cell.
  std::uint64_t best = encode();
  for (;;) {
    std::size_t c = 0;
    for (; c < cells.size(); ++c) {
      auto b = order.begin() + cells[c].first, e = order.begin() + cells[c].second;
      if (std::next_permutation(b, e)) break;  // wrapped cells are back in sorted order
    }
    if (c == cells.size()) break;
    best = std::min(best, encode());
  }
  return (best << 4) | static_cast<std::uint64_t>(n);
}

/// Connected graphs on exactly n nodes, one per isomorphism class, for
/// n = 1..max_n; index n-1 holds the n-node graphs.
inline std::vector<std::vector<SmallGraph>> connected_graphs(int max_n) {
  std::vector<std::vector<SmallGraph>> out;
  out.push_back({SmallGraph{1, {}, std::nullopt}});
  for (int n = 2; n <= max_n; ++n) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<SmallGraph> level;
    for (const auto& base : out.back())
      for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
        SmallGraph g = base;
        g.n = n;
        for (int u = 0; u < n - 1; ++u)
          if ((mask >> u) & 1) g.add_edge(u, n - 1);
        if (seen.insert(canonical_key(g)).second) level.push_back(g);
      }
    out.push_back(std::move(level));
  }
  return out;
}

inline std::uint16_t bipartition_side(const SmallGraph& g) {
  std::uint16_t side = 0, seen = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < g.n; ++u)
      if (g.edge(v, u) && !((seen >> u) & 1)) {
        seen |= static_cast<std::uint16_t>(1u << u);
        if (!((side >> v) & 1)) side |= static_cast<std::uint16_t>(1u << u);
        stack.push_back(u);
      }
  }
  return side;
}

/// Connected bipartite graphs on n = 1..max_n nodes up to isomorphism,
/// uncoloured.
inline std::vector<std::vector<SmallGraph>> connected_bipartite_graphs(int max_n) {
  std::vector<std::vector<SmallGraph>> out;
  out.push_back({SmallGraph{1, {}, std::nullopt}});
  for (int n = 2; n <= max_n; ++n) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<SmallGraph> level;
    for (const auto& base : out.back()) {
      const std::uint16_t side = bipartition_side(base);
      const std::uint32_t all = (1u << (n - 1)) - 1;
      for (const std::uint32_t part : {static_cast<std::uint32_t>(side), all & ~static_cast<std::uint32_t>(side)})
        for (std::uint32_t mask = part; mask != 0; mask = (mask - 1) & part) {
          SmallGraph g = base;
          g.n = n;
          for (int u = 0; u < n - 1; ++u)
            if ((mask >> u) & 1) g.add_edge(u, n - 1);
          if (seen.insert(canonical_key(g)).second) level.push_back(g);
        }
    }
    out.push_back(std::move(level));
  }
  return out;
}

/// Properly 2-coloured connected graphs with 2..max_n nodes, one per
/// coloured isomorphism class.
inline std::vector<SmallGraph> coloured_bipartite_graphs(int max_n) {
  std::vector<SmallGraph> out;
  const auto levels = connected_bipartite_graphs(max_n);
  for (std::size_t i = 1; i < levels.size(); ++i)
    for (const auto& g : levels[i]) {
      const std::uint16_t side = bipartition_side(g);
      const std::uint16_t all = static_cast<std::uint16_t>((1u << g.n) - 1);
      SmallGraph a = g, b = g;
      a.white = side;
      b.white = static_cast<std::uint16_t>(all & ~side);
      out.push_back(a);
      if (canonical_key(a) != canonical_key(b)) out.push_back(b);
    }
  return out;
}

/// Colour masks (bit set = white) under which every node has an
/// opposite-coloured neighbour.
inline std::vector<std::uint16_t> weak_colourings(const SmallGraph& g) {
  std::vector<std::uint16_t> out;
  for (std::uint32_t w = 0; w < (1u << g.n); ++w) {
    bool ok = true;
    for (int v = 0; v < g.n && ok; ++v) {
      const std::uint32_t same = ((w >> v) & 1) ? w : ~w;
      ok = (g.adj[static_cast<std::size_t>(v)] & ~same & ((1u << g.n) - 1)) != 0;
    }
    if (ok) out.push_back(static_cast<std::uint16_t>(w));
  }
  return out;
}

}  // namespace colocal::testing
