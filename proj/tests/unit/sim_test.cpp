#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "colocal/generators.hpp"
#include "colocal/graph_ops.hpp"
#include "colocal/probes.hpp"
#include "colocal/sim.hpp"
#include "colocal/star_forest.hpp"
#include "json.hpp"
#include "reference.hpp"

using namespace colocal;
using namespace colocal::testing;

namespace {

struct OwnColour {
  struct State {
    Colour c;
  };
  using Output = Colour;
  Requirements requirements() const { return {.colour = true}; }
  int round_budget(int) const { return 2; }
  State init(const NodeView& v, Outbox&) const { return {*v.colour}; }
  void step(State&, const Inbox&, Outbox&, int) const {}
  Colour finalize(const State& s) const { return s.c; }
};

struct Echo {
  struct State {
    int received = 0;
  };
  using Output = int;
  Requirements requirements() const { return {}; }
  int round_budget(int) const { return 1; }
  State init(const NodeView&, Outbox& out) const {
    out.send_all({'x'});
    return {};
  }
  void step(State& s, const Inbox& in, Outbox&, int) const { s.received = static_cast<int>(in.count()); }
  int finalize(const State& s) const { return s.received; }
};

// Sends in the final step; those messages must vanish.
struct LateSender {
  struct State {
    int seen = 0;
  };
  using Output = int;
  Requirements requirements() const { return {}; }
  int round_budget(int) const { return 2; }
  State init(const NodeView&, Outbox&) const { return {}; }
  void step(State& s, const Inbox& in, Outbox& out, int round) const {
    s.seen += static_cast<int>(in.count());
    if (round == 2) out.send_all({1, 2, 3});
  }
  int finalize(const State& s) const { return s.seen; }
};

struct NeedsOrientation : Echo {
  Requirements requirements() const { return {.orientation = true}; }
};

struct BudgetProbe : Echo {
  int round_budget(int delta) const { return delta; }
};

}  // namespace

TEST(Engine, OwnColour) {
  const auto r = run_local_algorithm(path(2, "bw"), OwnColour{});
  EXPECT_EQ(r.outputs, (std::vector<Colour>{Colour::Black, Colour::White}));
  EXPECT_EQ(r.rounds_used, 2);
}

TEST(Engine, EchoHandshake) {
  const auto r = run_local_algorithm(path(2), Echo{});
  EXPECT_EQ(r.outputs, (std::vector<int>{1, 1}));
  EXPECT_EQ(r.max_message_bits, 8u);
}

TEST(Engine, FinalStepMessagesDropped) {
  const auto r = run_local_algorithm(path(3), LateSender{});
  EXPECT_EQ(r.outputs, (std::vector<int>{0, 0, 0}));
  EXPECT_EQ(r.max_message_bits, 0u);
}

TEST(Engine, MissingInput) {
  try {
    run_local_algorithm(path(2), OwnColour{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingInput);
  }
  EXPECT_THROW(run_local_algorithm(path(2), NeedsOrientation{}), Error);
  EXPECT_NO_THROW(run_local_algorithm(with_id_orientation(path(2)), NeedsOrientation{}));
}

TEST(Engine, DeclaredDegreeBound) {
  RunOptions o;
  o.max_degree = 5;
  EXPECT_EQ(run_local_algorithm(path(3), BudgetProbe{}, o).rounds_used, 5);
  EXPECT_EQ(run_local_algorithm(path(3), BudgetProbe{}).rounds_used, 2);
  o.max_degree = 1;
  EXPECT_THROW(run_local_algorithm(path(3), BudgetProbe{}, o), Error);
}

TEST(Engine, StarForestOnP3) {
  const Graph g = path(3, "wbw");
  const auto r = run_local_algorithm(g, StarForestAlgorithm{});
  EXPECT_FALSE(r.outputs[0].root);
  EXPECT_TRUE(r.outputs[1].root);
  EXPECT_FALSE(r.outputs[2].root);
  EXPECT_EQ(r.rounds_used, 5);
}

TEST(Engine, DeterministicAndOrderIndependent) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 50; ++i) {
    const Graph g = random_weak(4 + i % 16, 2 + i % 4, rng);
    const auto a = run_local_algorithm(g, ViewGatherAlgorithm(3));
    const auto b = run_local_algorithm(g, ViewGatherAlgorithm(3));
    EXPECT_EQ(a.outputs, b.outputs);
    RunOptions o;
    for (NodeId v = 0; v < static_cast<NodeId>(g.node_count()); ++v) o.order.push_back(v);
    std::shuffle(o.order.begin(), o.order.end(), rng);
    const auto c = run_local_algorithm(g, StarForestAlgorithm(StarForestAlgorithm::Mode::Matching), o);
    const auto d = run_local_algorithm(g, StarForestAlgorithm(StarForestAlgorithm::Mode::Matching));
    EXPECT_EQ(c.outputs, d.outputs);
    std::reverse(o.order.begin(), o.order.end());
    EXPECT_EQ(run_local_algorithm(g, ViewGatherAlgorithm(3), o).outputs, a.outputs);
  }
}

TEST(Engine, TraceLines) {
  std::ostringstream os;
  RunOptions o;
  o.trace = &os;
  run_local_algorithm(path(2, "bw"), StarForestAlgorithm{}, o);
  std::istringstream in(os.str());
  std::string line;
  int count = 0;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_TRUE(j.contains("round") && j.contains("node") && j.contains("sent") && j.contains("state_digest"));
    EXPECT_EQ(j["sent"].size(), 1u);
    ++count;
  }
  EXPECT_EQ(count, 2 * 6);  // init plus five rounds, two nodes
}

TEST(LocalViews, Examples) {
  const Graph p3 = path(3);
  EXPECT_TRUE(local_views_equivalent(p3, 1, p3, 1, 4));
  const Graph u = disjoint_union(p3, p3);
  for (NodeId v = 0; v < 3; ++v) EXPECT_TRUE(local_views_equivalent(p3, v, u, v + 3, 3));
  EXPECT_FALSE(local_views_equivalent(p3, 0, p3, 1, 1));
  EXPECT_TRUE(local_views_equivalent(p3, 0, p3, 2, 0));
  // the two ends of P3 differ at radius 1: node 1 reaches 0 on port 1 and 2 on port 2
  EXPECT_FALSE(local_views_equivalent(p3, 0, p3, 2, 1));
}

TEST(LocalViews, ViewGatherRespectsEquivalence) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 30; ++i) {
    const Graph g = random_weak(6 + i % 10, 3, rng);
    const auto out = run_local_algorithm(g, ViewGatherAlgorithm(2)).outputs;
    for (NodeId a = 0; a < static_cast<NodeId>(g.node_count()); ++a)
      for (NodeId b = 0; b < static_cast<NodeId>(g.node_count()); ++b)
        if (local_views_equivalent(g, a, g, b, 2)) {
          EXPECT_EQ(out[static_cast<std::size_t>(a)], out[static_cast<std::size_t>(b)]);
        }
  }
}
