// Grows a matching phase by phase on a random bipartite graph and prints
// the shortest remaining augmenting path after each phase.
#include <iostream>
#include <random>

#include "colocal/colocal.hpp"

int main(int argc, char** argv) {
  using namespace colocal;
  std::mt19937_64 rng(argc > 1 ? std::stoull(argv[1]) : 7);
  const Graph g = random_bipartite(30, 3, rng);
  const auto best = brute_max_matching(g).size();

  Matching m(g.node_count());
  for (int i = 1; i <= 3; ++i) {
    m = eliminate_length(g, m, i);
    const auto len = shortest_augmenting_path_length(g, m);
    std::cout << "phase " << i << ": " << invocations_for(g.max_degree(), i) << " invocations, |M| = " << m.size() << "/"
              << best << ", shortest augmenting path "
              << (len ? std::to_string(*len) : std::string("none")) << "\n";
  }
}
