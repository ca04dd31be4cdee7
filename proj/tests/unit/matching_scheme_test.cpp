#include <gtest/gtest.h>

#include <random>

#include "colocal/generators.hpp"
#include "colocal/matching_scheme.hpp"
#include "colocal/oracles.hpp"
#include "reference.hpp"

using namespace colocal;
using namespace colocal::testing;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InternalAssertion;
}

// P4 w1-b1-w2-b2 as nodes 0..3 with b1's port 1 towards w2, so the first
// phase picks the middle edge.
Graph adversarial_p4() {
  return build_graph(4, colours_of("wbwb"),
                     {{0, 1, 1, 2, std::nullopt}, {1, 2, 1, 1, std::nullopt}, {2, 3, 2, 1, std::nullopt}});
}

// Whites reachable from an unmatched black by an alternating path of exactly
// h edges that ends unmatched.
std::vector<NodeId> length_h_endpoints(const Graph& g, const Matching& m, int h) {
  std::vector<bool> hit(g.node_count(), false), on(g.node_count(), false);
  auto rec = [&](auto&& self, NodeId v, int len) -> void {
    for (const auto& e : g.ports(v)) {
      const NodeId u = e.to;
      if (on[static_cast<std::size_t>(u)] || m.contains(v, u) != (len % 2 == 1)) continue;
      if (len + 1 == h) {
        if (!m.matched(u)) hit[static_cast<std::size_t>(u)] = true;
        continue;
      }
      on[static_cast<std::size_t>(u)] = true;
      self(self, u, len + 1);
      on[static_cast<std::size_t>(u)] = false;
    }
  };
  for (NodeId b = 0; b < static_cast<NodeId>(g.node_count()); ++b)
    if (g.colour(b) == Colour::Black && !m.matched(b)) {
      on[static_cast<std::size_t>(b)] = true;
      rec(rec, b, 0);
      on[static_cast<std::size_t>(b)] = false;
    }
  std::vector<NodeId> out;
  for (NodeId v = 0; v < static_cast<NodeId>(g.node_count()); ++v)
    if (hit[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

void check_forest(const Graph& g, const Matching& m, const AugmentingForest& f) {
  for (NodeId l : f.leaves) {
    AugmentingPath p{l};
    for (NodeId v = l; f.parent_port[static_cast<std::size_t>(v)];) {
      v = g.neighbour(v, *f.parent_port[static_cast<std::size_t>(v)]);
      p.push_back(v);
    }
    std::reverse(p.begin(), p.end());
    ASSERT_EQ(static_cast<int>(p.size()) - 1, f.h);
    EXPECT_NO_THROW(augment_phase(g, m, {p}));
  }
  EXPECT_EQ(f.leaves, length_h_endpoints(g, m, f.h));
}

}  // namespace

TEST(Flood, SingleEdge) {
  const Graph g = path(2, "bw");
  const auto f = flood_phase(g, Matching(2), 1);
  EXPECT_EQ(f.roots, (std::vector<NodeId>{0}));
  EXPECT_EQ(f.leaves, (std::vector<NodeId>{1}));
  EXPECT_EQ(f.parent_port[1], 1);
}

TEST(Flood, P4LengthThree) {
  const Graph g = path(4, "wbwb");
  const Matching m = Matching::from_edges(g, {{1, 2}});
  const auto f = flood_phase(g, m, 3);
  EXPECT_EQ(f.roots, (std::vector<NodeId>{3}));
  EXPECT_EQ(f.leaves, (std::vector<NodeId>{0}));
  EXPECT_EQ(f.depth, (std::vector<int>{3, 2, 1, 0}));
  EXPECT_EQ(f.parent(g, 2), 3);
  check_forest(g, m, f);
}

TEST(Flood, MatchedEdgeHasNoRoots) {
  const Graph g = path(2, "bw");
  const auto f = flood_phase(g, Matching::from_edges(g, {{0, 1}}), 1);
  EXPECT_TRUE(f.roots.empty());
  EXPECT_TRUE(f.leaves.empty());
}

TEST(Flood, Errors) {
  EXPECT_EQ(code_of([] { flood_phase(path(3, "bbw"), Matching(3), 1); }), ErrorCode::NotProperlyColoured);
  EXPECT_EQ(code_of([] { flood_phase(path(2), Matching(2), 1); }), ErrorCode::NotProperlyColoured);
  EXPECT_EQ(code_of([] { flood_phase(path(2, "bw"), Matching(2), 3, true); }), ErrorCode::ShorterPathExists);
  EXPECT_NO_THROW(flood_phase(path(2, "bw"), Matching(2), 1, true));
}

TEST(Proposal, SingleLeafAndEmpty) {
  const Graph g = path(2, "bw");
  EXPECT_EQ(proposal_phase(g, flood_phase(g, Matching(2), 1)), (std::vector<AugmentingPath>{{0, 1}}));
  EXPECT_TRUE(proposal_phase(g, flood_phase(g, Matching::from_edges(g, {{0, 1}}), 1)).empty());
}

TEST(Proposal, LowestPortSurvives) {
  // black centre 0 with white leaves 1, 2, 3; centre ports 1->3, 2->1, 3->2
  const Graph g = build_graph(4, colours_of("bwww"),
                              {{0, 3, 1, 1, std::nullopt}, {0, 1, 2, 1, std::nullopt}, {0, 2, 3, 1, std::nullopt}});
  const auto f = flood_phase(g, Matching(4), 1);
  EXPECT_EQ(f.leaves.size(), 3u);
  EXPECT_EQ(proposal_phase(g, f), (std::vector<AugmentingPath>{{0, 3}}));
}

TEST(Augment, Examples) {
  const Graph g = path(4, "wbwb");
  const Matching one = augment_phase(g, Matching(4), {{1, 0}});
  EXPECT_EQ(one.edges(), (std::vector<Edge>{{0, 1}}));
  const Matching m = Matching::from_edges(g, {{1, 2}});
  const Matching two = augment_phase(g, m, {{3, 2, 1, 0}});
  EXPECT_EQ(two.edges(), (std::vector<Edge>{{0, 1}, {2, 3}}));
  EXPECT_EQ(augment_phase(g, m, {}), m);
}

TEST(Augment, Errors) {
  const Graph g = path(4, "wbwb");
  const Matching m = Matching::from_edges(g, {{1, 2}});
  EXPECT_EQ(code_of([&] { augment_phase(g, Matching(4), {{1, 0}, {1, 2}}); }), ErrorCode::PathsNotDisjoint);
  EXPECT_EQ(code_of([&] { augment_phase(g, m, {{1, 0}}); }), ErrorCode::NotAugmenting);
  EXPECT_EQ(code_of([&] { augment_phase(g, m, {{3, 2}}); }), ErrorCode::NotAugmenting);
  EXPECT_EQ(code_of([&] { augment_phase(g, Matching(4), {{0, 3}}); }), ErrorCode::NotAugmenting);
  EXPECT_EQ(code_of([&] { augment_phase(g, Matching(4), {{0, 1, 2}}); }), ErrorCode::NotAugmenting);
  EXPECT_EQ(code_of([&] { augment_phase(g, Matching(4), {{3, 2, 1, 0}}); }), ErrorCode::NotAugmenting);
}

TEST(Invocations, Counts) {
  EXPECT_EQ(invocations_for(3, 2), 6);
  EXPECT_EQ(invocations_for(2, 1), 2);
  EXPECT_EQ(invocations_for(4, 3), 36);
  EXPECT_EQ(invocations_for(1, 1), 1);
  EXPECT_EQ(invocations_for(1, 2), 0);
  EXPECT_EQ(matching_scheme_rounds(3, 2), 3 * 3 + 6 * 9);
  EXPECT_THROW(invocations_for(0, 1), Error);
}

TEST(Eliminate, P4FirstPhase) {
  const Graph g = path(4, "wbwb");
  std::vector<std::size_t> sizes;
  const Matching m = eliminate_length(g, Matching(4), 1, std::nullopt,
                                      [&](int, std::int64_t, const Matching& cur) { sizes.push_back(cur.size()); });
  EXPECT_EQ(sizes.size(), 2u);
  EXPECT_GE(sizes.front(), 1u);
  EXPECT_EQ(m.size(), 2u);
  EXPECT_FALSE(shortest_augmenting_path_length(g, m).has_value());
}

TEST(Eliminate, NothingToDo) {
  const Graph g = path(4, "wbwb");
  const Matching m = Matching::from_edges(g, {{0, 1}, {2, 3}});
  int calls = 0;
  EXPECT_EQ(eliminate_length(g, m, 2, std::nullopt, [&](int, std::int64_t, const Matching& cur) {
              ++calls;
              EXPECT_EQ(cur, m);
            }),
            m);
  EXPECT_EQ(calls, 2);
}

TEST(Approximate, P4) {
  EXPECT_EQ(approximate_maximum_matching(path(4, "wbwb"), 1).matching.size(), 2u);
  const Graph adv = adversarial_p4();
  const auto k1 = approximate_maximum_matching(adv, 1);
  EXPECT_EQ(k1.matching.edges(), (std::vector<Edge>{{1, 2}}));
  const auto k2 = approximate_maximum_matching(adv, 2);
  EXPECT_EQ(k2.matching.size(), 2u);
  EXPECT_EQ(k2.invocations, (std::vector<std::int64_t>{2, 2}));
  EXPECT_EQ(brute_max_matching(adv).size(), 2u);
}

TEST(Approximate, Errors) {
  EXPECT_EQ(code_of([] { approximate_maximum_matching(complete(3, "bww"), 1); }), ErrorCode::NotProperlyColoured);
  EXPECT_THROW(approximate_maximum_matching(path(2, "bw"), 0), Error);
}

TEST(Approximate, RandomBipartiteProperties) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 150; ++i) {
    const Graph g = random_bipartite(2 + i % 30, 2 + i % 3, rng);
    const int k = 1 + i % 3;
    std::size_t last = 0;
    const auto r = approximate_maximum_matching(g, k, std::nullopt, [&](int phase, std::int64_t, const Matching& m) {
      EXPECT_GE(m.size(), last);
      last = m.size();
      const auto len = shortest_augmenting_path_length(g, m);
      EXPECT_TRUE(!len || *len >= 2 * phase - 1);
    }, true);
    const auto len = shortest_augmenting_path_length(g, r.matching);
    EXPECT_TRUE(!len || *len > 2 * k - 1);
    const auto best = brute_max_matching(g).size();
    EXPECT_GE(r.matching.size() * static_cast<std::size_t>(k + 1), best * static_cast<std::size_t>(k));
    for (int phase = 1; phase <= k; ++phase)
      EXPECT_EQ(r.invocations[static_cast<std::size_t>(phase - 1)], invocations_for(g.max_degree(), phase));
  }
}

TEST(Flood, ForestInvariantsOnRandomGraphs) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_bipartite(4 + i % 14, 2 + i % 3, rng);
    Matching m(g.node_count());
    for (int phase = 1; phase <= 3; ++phase) {
      const auto f = flood_phase(g, m, 2 * phase - 1, true);
      check_forest(g, m, f);
      m = eliminate_length(g, m, phase);
    }
  }
}

TEST(SchemeEngine, MatchesCentralised) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 120; ++i) {
    const Graph g = random_bipartite(2 + i % 25, 2 + i % 3, rng);
    const int k = 1 + i % 3;
    const auto [m, run] = run_matching_scheme(g, k);
    const auto central = approximate_maximum_matching(g, k);
    EXPECT_EQ(m, central.matching);
    EXPECT_EQ(run.rounds_used, central.rounds);
    EXPECT_LE(run.max_message_bits, 16u);
  }
}

TEST(SchemeEngine, AdversarialP4) {
  const auto [m1, r1] = run_matching_scheme(adversarial_p4(), 1);
  EXPECT_EQ(m1.size(), 1u);
  const auto [m2, r2] = run_matching_scheme(adversarial_p4(), 2);
  EXPECT_EQ(m2.size(), 2u);
  EXPECT_EQ(r2.rounds_used, 2 * 3 + 2 * 9);
}
