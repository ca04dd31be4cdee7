#include <iostream>

#include "CLI11.hpp"
#include "colocal/commands.hpp"

using namespace colocal::cli;

int main(int argc, char** argv) {
  CLI::App app{"Local-model simulator and algorithms for 2-coloured graphs"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate an instance");
  g->add_option("--family", gen.family, "cycle|cycle-power|strong-blowup|weak-layered|symmetric-complete|random-bipartite|random-weak")
      ->required();
  g->add_option("--n", gen.n, "Cycle length or node count");
  g->add_option("--delta", gen.delta, "Degree bound");
  g->add_option("--k", gen.k, "Power for cycle-power");
  g->add_option("--seed", gen.seed, "Seed for random families");
  g->add_option("--out", gen.out, "Output file (default stdout)");

  RunArgs run;
  auto* r = app.add_subcommand("run", "Run an algorithm on the simulator");
  r->add_option("graph", run.graph, "Graph JSON file")->required();
  r->add_option("--alg", run.alg, "star-ds|star-matching|matching-scheme|odd-delta-ds|all-nodes")->required();
  r->add_flag("--oracle", run.oracle, "Compare with the exact optimum");
  r->add_option("--k", run.k, "Phases of the matching scheme");
  r->add_flag("--assert-oracle", run.assert_oracle, "Check augmenting paths after every invocation");
  r->add_option("--weak-colouring", run.weak_colouring, "centralized|external:<file>");
  r->add_option("--delta", run.delta, "Declared degree bound");
  r->add_option("--trace", run.trace, "Write a JSON-lines round trace");
  r->add_option("--oracle-limit", run.oracle_limit, "Node limit for the set oracles");

  OracleArgs oracle;
  auto* o = app.add_subcommand("oracle", "Solve exactly");
  o->add_option("graph", oracle.graph, "Graph JSON file")->required();
  o->add_option("--problem", oracle.problem, "ds|matching|is");
  o->add_option("--limit", oracle.limit, "Node limit for ds and is");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check a solution");
  v->add_option("graph", verify.graph, "Graph JSON file")->required();
  v->add_option("solution", verify.solution, "Solution or run report JSON file")->required();
  v->add_option("--kind", verify.kind, "ds|matching|is");

  DotArgs dot;
  auto* d = app.add_subcommand("export-dot", "Render as Graphviz DOT");
  d->add_option("graph", dot.graph, "Graph JSON file")->required();
  d->add_option("--solution", dot.solution, "Solution or run report JSON file");
  d->add_option("--out", dot.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  if (*g) return cmd_gen(gen, std::cout);
  if (*r) return cmd_run(run, std::cout);
  if (*o) return cmd_oracle(oracle, std::cout);
  if (*v) return cmd_verify(verify, std::cout);
  return cmd_export_dot(dot, std::cout);
}
