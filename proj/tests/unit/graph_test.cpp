#include <gtest/gtest.h>

#include <random>

#include "colocal/graph.hpp"
#include "colocal/graph_json.hpp"
#include "colocal/graph_ops.hpp"
#include "colocal/generators.hpp"
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

}  // namespace

TEST(BuildGraph, SingleEdge) {
  const Graph g = build_graph(2, colours_of("bw"), {{0, 1, 1, 1, std::nullopt}});
  EXPECT_EQ(g.node_count(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.neighbour(0, 1), 1);
  EXPECT_EQ(g.back_port(0, 1), 1);
  EXPECT_EQ(g.colour(0), Colour::Black);
}

TEST(BuildGraph, RejectsIsolatedNode) {
  EXPECT_EQ(code_of([] { build_graph(1, std::nullopt, {}); }), ErrorCode::IsolatedNode);
  EXPECT_EQ(code_of([] { build_graph(3, std::nullopt, {{0, 1, 1, 1, std::nullopt}}); }), ErrorCode::IsolatedNode);
}

TEST(BuildGraph, RejectsPortClash) {
  EXPECT_EQ(code_of([] { build_graph(3, std::nullopt, {{0, 1, 1, 1, std::nullopt}, {1, 2, 1, 1, std::nullopt}}); }),
            ErrorCode::PortClash);
}

TEST(BuildGraph, RejectsBadInput) {
  EXPECT_EQ(code_of([] { build_graph(2, std::nullopt, {{0, 0, 1, 1, std::nullopt}}); }), ErrorCode::SelfLoop);
  EXPECT_EQ(code_of([] { build_graph(2, std::nullopt, {{0, 1, 1, 1, std::nullopt}, {1, 0, 2, 2, std::nullopt}}); }),
            ErrorCode::DuplicateEdge);
  EXPECT_EQ(code_of([] { build_graph(2, std::nullopt, {{0, 1, 2, 1, std::nullopt}}); }), ErrorCode::PortGap);
  EXPECT_EQ(code_of([] { build_graph(2, std::nullopt, {{0, 5, 1, 1, std::nullopt}}); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([] { build_graph(2, colours_of("b"), {{0, 1, 1, 1, std::nullopt}}); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([] {
              build_graph(3, std::nullopt, {{0, 1, 1, 1, EdgeDirection::UtoV}, {1, 2, 2, 1, std::nullopt}});
            }),
            ErrorCode::PartialLabels);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify_colouring(path(2, "bw")), ColouringClass::ProperTwoColouring);
  EXPECT_EQ(classify_colouring(complete(3, "bww")), ColouringClass::WeakTwoColouring);
  EXPECT_EQ(classify_colouring(path(3, "www")), ColouringClass::None);
  EXPECT_EQ(code_of([] { classify_colouring(path(2)); }), ErrorCode::MissingColours);
}

TEST(Classify, ProperImpliesWeak) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_bipartite(2 + i % 15, 2 + i % 3, rng);
    ASSERT_EQ(classify_colouring(g), ColouringClass::ProperTwoColouring);
    EXPECT_TRUE(is_weak_two_colouring(g, *g.colours()));
  }
}

TEST(NeighbourViaPort, Examples) {
  const Graph e = path(2);
  EXPECT_EQ(neighbour_via_port(e, 0, 1), 1);
  EXPECT_EQ(code_of([&] { neighbour_via_port(e, 0, 2); }), ErrorCode::PortOutOfRange);
  const Graph p3 = path(3);
  EXPECT_EQ(neighbour_via_port(p3, 1, 1), 0);
  EXPECT_EQ(neighbour_via_port(p3, 1, 2), 2);
}

TEST(NeighbourViaPort, BijectionOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_weak(3 + i % 18, 2 + i % 4, rng);
    for (NodeId v = 0; v < static_cast<NodeId>(g.node_count()); ++v) {
      std::vector<NodeId> image;
      for (Port p = 1; p <= g.degree(v); ++p) {
        image.push_back(g.neighbour(v, p));
        EXPECT_EQ(g.neighbour(g.neighbour(v, p), g.back_port(v, p)), v);
      }
      std::sort(image.begin(), image.end());
      EXPECT_EQ(std::adjacent_find(image.begin(), image.end()), image.end());
      EXPECT_EQ(image.size(), static_cast<std::size_t>(g.degree(v)));
    }
  }
}

TEST(GraphJson, RoundTrip) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    Graph g = random_weak(2 + i % 19, 2 + i % 4, rng);
    if (i % 3 == 0) g = without_orientation(g);
    if (i % 4 == 0) g = without_colours(g);
    EXPECT_EQ(parse_graph(serialize_graph(g)), g);
  }
}

TEST(GraphJson, RejectsMalformed) {
  EXPECT_EQ(code_of([] { parse_graph("{not json"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_graph(R"({"nodes":[{"id":0}]})"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] {
              parse_graph(R"({"nodes":[{"id":0,"colour":"black"},{"id":1,"colour":null}],
                              "edges":[{"u":0,"v":1,"port_u":1,"port_v":1}]})");
            }),
            ErrorCode::PartialLabels);
  EXPECT_EQ(code_of([] {
              parse_graph(R"({"nodes":[{"id":0},{"id":0}],"edges":[{"u":0,"v":1,"port_u":1,"port_v":1}]})");
            }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] {
              parse_graph(R"({"nodes":[{"id":0},{"id":1}],"edges":[{"u":0,"v":1,"port_u":1,"port_v":1,"dir":"up"}]})");
            }),
            ErrorCode::ParseError);
}

TEST(GraphOps, RelabelAndUnion) {
  const Graph g = with_id_orientation(path(3, "wbw"));
  const std::vector<NodeId> perm{2, 0, 1};
  const Graph r = relabel(g, perm);
  EXPECT_EQ(r.colour(0), Colour::Black);
  EXPECT_EQ(r.neighbour(0, 1), 2);
  EXPECT_EQ(r.direction(2, 1), PortDirection::Outgoing);
  const Graph u = disjoint_union(g, g);
  EXPECT_EQ(u.node_count(), 6u);
  EXPECT_EQ(u.neighbour(4, 2), 5);
  EXPECT_EQ(code_of([&] { disjoint_union(g, without_colours(g)); }), ErrorCode::PartialLabels);
}

TEST(GraphOps, InducedSubgraphKeepsPortOrder) {
  // node 0 joined to 1, 2, 3 on ports 1, 2, 3; dropping 2 leaves ports 1, 2
  const Graph g = star(3);
  const auto h = induced_subgraph(g, {true, true, false, true});
  EXPECT_EQ(h.graph.node_count(), 3u);
  EXPECT_EQ(h.original, (std::vector<NodeId>{0, 1, 3}));
  EXPECT_EQ(h.graph.neighbour(0, 1), 1);
  EXPECT_EQ(h.graph.neighbour(0, 2), 2);
  EXPECT_EQ(h.local[2], -1);
}

TEST(GraphOps, ShuffleKeepsStructure) {
  std::mt19937_64 rng(9);
  const Graph g = complete(5, "bwbwb");
  const Graph s = shuffle_ports(g, rng);
  EXPECT_EQ(s.edges(), g.edges());
  EXPECT_EQ(sort_ports(s), g);
}
