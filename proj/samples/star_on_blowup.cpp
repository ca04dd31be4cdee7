// Runs the star dominating-set algorithm on the 3-regular blowup of a
// numbered 8-cycle and compares it with the exact optimum.
#include <iostream>

#include "colocal/colocal.hpp"

int main() {
  using namespace colocal;
  const Graph g = strong_blowup(numbered_cycle(8), 3);
  const auto run = run_local_algorithm(g, StarForestAlgorithm{});
  const auto ds = star_dominating_set(collect_star_forest(g, run.outputs));
  const auto opt = brute_min_dominating_set(g);

  std::cout << "nodes " << g.node_count() << ", rounds " << run.rounds_used << "\n";
  std::cout << "star set " << ds.size() << ", optimum " << opt.size() << "\n";
  std::cout << "members:";
  for (NodeId v : ds) std::cout << ' ' << v;
  std::cout << "\n";
}
