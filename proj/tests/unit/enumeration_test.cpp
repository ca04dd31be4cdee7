#include <gtest/gtest.h>

#include "enumerate.hpp"

using namespace colocal::testing;

TEST(Enumeration, ConnectedCounts) {
  const auto levels = connected_graphs(7);
  const std::vector<std::size_t> want{1, 1, 2, 6, 21, 112, 853};
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_EQ(levels[i].size(), want[i]) << "n=" << i + 1;
}

TEST(Enumeration, BipartiteCounts) {
  const auto levels = connected_bipartite_graphs(8);
  const std::vector<std::size_t> want{1, 1, 1, 3, 5, 17, 44, 182};
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_EQ(levels[i].size(), want[i]) << "n=" << i + 1;
}

TEST(Enumeration, WeakColourings) {
  // both leaves need the middle opposite: bwb and wbw
  SmallGraph p3;
  p3.n = 3;
  p3.add_edge(0, 1);
  p3.add_edge(1, 2);
  EXPECT_EQ(weak_colourings(p3).size(), 2u);
  SmallGraph k3;
  k3.n = 3;
  k3.add_edge(0, 1);
  k3.add_edge(1, 2);
  k3.add_edge(0, 2);
  EXPECT_EQ(weak_colourings(k3).size(), 6u);
}
