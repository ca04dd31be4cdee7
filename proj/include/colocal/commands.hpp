#pragma once

// Command implementations behind the colocal executable. Each returns the
// process exit code and writes its JSON result (or error body) to `out`.

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "colocal/dot.hpp"
#include "colocal/generators.hpp"
#include "colocal/graph_json.hpp"
#include "colocal/matching_scheme.hpp"
#include "colocal/odd_delta.hpp"
#include "colocal/oracles.hpp"
#include "colocal/probes.hpp"
#include "colocal/report.hpp"
#include "colocal/sim.hpp"
#include "colocal/star_forest.hpp"

namespace colocal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;  // verify: the solution violates its definition
inline constexpr int kExitInput = 2;
inline constexpr int kExitCapability = 3;
inline constexpr int kExitInternal = 4;

inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingInput:
    case ErrorCode::MissingColours:
    case ErrorCode::NotWeaklyColoured:
    case ErrorCode::NotProperlyColoured:
    case ErrorCode::MissingOrientation:
    case ErrorCode::EvenDelta:
    case ErrorCode::TooLarge:
      return kExitCapability;
    case ErrorCode::InternalAssertion:
      return kExitInternal;
    default:
      return kExitInput;
  }
}

inline void write_error(std::ostream& out, const std::string& code, const std::string& message) {
  out << json{{"error", code}, {"message", message}}.dump() << '\n';
}

/// Runs `body`, turning library errors into an error body and exit code.
inline int guarded(std::ostream& out, const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    write_error(out, std::string(to_string(e.code())), e.message());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    write_error(out, "InternalAssertion", e.what());
    return kExitInternal;
  }
}

inline void write_text(const std::optional<std::string>& path, std::ostream& out, const std::string& text) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream f(*path);
  if (!f) throw Error(ErrorCode::ParseError, "cannot write " + *path);
  f << text;
}

// ---------------------------------------------------------------------------

struct GenArgs {
  std::string family;
  int n = 0;
  int delta = 3;
  int k = 1;
  std::uint64_t seed = 1;
  std::optional<std::string> out;
};

inline Graph generate(const GenArgs& a) {
  std::mt19937_64 rng(a.seed);
  if (a.family == "cycle") return numbered_cycle(a.n).graph();
  if (a.family == "cycle-power") return cycle_power(numbered_cycle(a.n), a.k);
  if (a.family == "strong-blowup") return strong_blowup(numbered_cycle(a.n), a.delta);
  if (a.family == "weak-layered") return weak_layered(numbered_cycle(a.n), a.delta);
  if (a.family == "symmetric-complete") return symmetric_complete(a.delta);
  if (a.family == "random-bipartite") return random_bipartite(a.n, a.delta, rng);
  if (a.family == "random-weak") return random_weak(a.n, a.delta, rng);
  throw Error(ErrorCode::ParseError, "unknown family \"" + a.family + "\"");
}

inline int cmd_gen(const GenArgs& a, std::ostream& out) {
  return guarded(out, [&] {
    write_text(a.out, out, serialize_graph(generate(a)) + "\n");
    return kExitOk;
  });
}

// ---------------------------------------------------------------------------

inline json solution_to_json(const Solution& s) {
  json members = json::array();
  if (s.kind == SolutionKind::Matching)
    for (const Edge& e : s.edges) members.push_back({e.u, e.v});
  else
    for (NodeId v : s.nodes) members.push_back(v);
  return {{"kind", std::string(to_string(s.kind))}, {"size", s.size()}, {"members", std::move(members)}};
}

inline SolutionKind parse_kind(const std::string& k) {
  if (k == "ds") return SolutionKind::DominatingSet;
  if (k == "matching") return SolutionKind::Matching;
  if (k == "is") return SolutionKind::IndependentSet;
  throw Error(ErrorCode::ParseError, "unknown solution kind \"" + k + "\"");
}

/// Accepts {"kind", "members"} directly or wrapped in a run report's
/// "solution" field. `kind` overrides the document's own.
inline Solution solution_from_json(const json& doc, std::optional<SolutionKind> kind = std::nullopt) {
  try {
    const json& s = doc.contains("solution") ? doc.at("solution") : doc;
    Solution out;
    if (kind)
      out.kind = *kind;
    else if (s.contains("kind"))
      out.kind = parse_kind(s.at("kind").get<std::string>());
    else
      throw Error(ErrorCode::ParseError, "solution needs a \"kind\"");
    for (const auto& m : s.at("members")) {
      if (out.kind == SolutionKind::Matching)
        out.edges.push_back({m.at(0).get<NodeId>(), m.at(1).get<NodeId>()});
      else
        out.nodes.push_back(m.get<NodeId>());
    }
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("solution: ") + e.what());
  }
}

// ---------------------------------------------------------------------------

struct RunArgs {
  std::string graph;
  std::string alg;
  bool oracle = false;
  int k = 1;
  bool assert_oracle = false;
  std::string weak_colouring = "centralized";
  std::optional<int> delta;
  std::optional<std::string> trace;
  std::size_t oracle_limit = kOracleNodeLimit;
};

namespace detail {

inline WeakColouringProvider provider_for(const std::string& name) {
  if (name == "centralized") return centralized_provider();
  const std::string prefix = "external:";
  if (name.rfind(prefix, 0) == 0) return colour_map_provider(read_colour_map(name.substr(prefix.size())));
  throw Error(ErrorCode::ParseError, "unknown weak colouring provider \"" + name + "\"");
}

// Re-runs the scheme centrally, checking the shortest augmenting path after
// every invocation, and insists that the engine produced the same matching.
inline void check_scheme_against_oracle(const Graph& g, int k, int delta, const Matching& engine) {
  auto observe = [&](int phase, std::int64_t q, const Matching& m) {
    const int h = 2 * phase - 1;
    const auto len = shortest_augmenting_path_length(g, m);
    if (len && *len < h)
      throw Error(ErrorCode::InternalAssertion, "augmenting path of length " + std::to_string(*len) + " appeared in phase " + std::to_string(phase));
    if (q == invocations_for(delta, phase) && len && *len <= h)
      throw Error(ErrorCode::InternalAssertion, "phase " + std::to_string(phase) + " left a path of length " + std::to_string(*len));
  };
  const auto central = approximate_maximum_matching(g, k, delta, observe);
  if (!(central.matching == engine)) throw Error(ErrorCode::InternalAssertion, "engine and centralised scheme disagree");
}

}  // namespace detail

struct RunOutcome {
  RunReport report;
  Solution solution;
};

inline RunOutcome execute_run(const Graph& g, const RunArgs& a) {
  std::ofstream trace_file;
  RunOptions opts;
  if (a.trace) {
    trace_file.open(*a.trace);
    if (!trace_file) throw Error(ErrorCode::ParseError, "cannot write " + *a.trace);
    opts.trace = &trace_file;
  }
  opts.max_degree = a.delta;
  const int delta = a.delta.value_or(g.max_degree());

  RunOutcome r;
  RunReport& rep = r.report;
  rep.algorithm = a.alg;
  rep.n = g.node_count();
  rep.m = g.edge_count();
  rep.delta = delta;
  Solution& sol = r.solution;

  if (a.alg == "star-ds" || a.alg == "star-matching") {
    const bool matching = a.alg == "star-matching";
    if (!g.has_colours()) throw Error(ErrorCode::MissingInput, "algorithm needs a colouring");
    if (classify_colouring(g) == ColouringClass::None)
      throw Error(ErrorCode::NotWeaklyColoured, "star algorithm needs a weak 2-colouring");
    const auto run = run_local_algorithm(
        g, StarForestAlgorithm(matching ? StarForestAlgorithm::Mode::Matching : StarForestAlgorithm::Mode::DominatingSet), opts);
    rep.rounds_used = run.rounds_used;
    rep.max_message_bits = run.max_message_bits;
    if (matching) {
      sol.kind = SolutionKind::Matching;
      sol.edges = collect_star_matching(g, run.outputs);
    } else {
      sol.kind = SolutionKind::DominatingSet;
      sol.nodes = star_dominating_set(collect_star_forest(g, run.outputs));
    }
    rep.bound = Rational(delta + 1, 2);
  } else if (a.alg == "matching-scheme") {
    if (!g.has_colours()) throw Error(ErrorCode::MissingInput, "algorithm needs a colouring");
    const auto [m, run] = run_matching_scheme(g, a.k, opts);
    if (a.assert_oracle) detail::check_scheme_against_oracle(g, a.k, delta, m);
    rep.rounds_used = run.rounds_used;
    rep.max_message_bits = run.max_message_bits;
    sol.kind = SolutionKind::Matching;
    sol.edges = m.edges();
    rep.bound = Rational(a.k + 1, a.k);
  } else if (a.alg == "odd-delta-ds") {
    const auto res = odd_delta_dominating_set(g, detail::provider_for(a.weak_colouring), a.delta, opts);
    rep.rounds_used = res.rounds_used;
    rep.max_message_bits = res.max_message_bits;
    sol.kind = SolutionKind::DominatingSet;
    sol.nodes = res.dominating_set;
    rep.bound = Rational(delta, 1);
  } else if (a.alg == "all-nodes") {
    const auto run = run_local_algorithm(g, AllNodesAlgorithm{}, opts);
    rep.rounds_used = run.rounds_used;
    rep.max_message_bits = run.max_message_bits;
    sol.kind = SolutionKind::DominatingSet;
    for (NodeId v = 0; v < static_cast<NodeId>(g.node_count()); ++v)
      if (run.outputs[static_cast<std::size_t>(v)]) sol.nodes.push_back(v);
    rep.bound = Rational(delta + 1, 1);
  } else {
    throw Error(ErrorCode::ParseError, "unknown algorithm \"" + a.alg + "\"");
  }

  if (const auto v = verify_solution(g, sol); !v.valid)
    throw Error(ErrorCode::InternalAssertion, "invalid output: " + v.violations.front());
  rep.solution_size = sol.size();
  if (a.oracle) {
    if (sol.kind == SolutionKind::Matching) {
      const auto opt = brute_max_matching(g).size();
      rep.optimal_size = opt;
      rep.ratio = Rational(static_cast<std::int64_t>(opt), static_cast<std::int64_t>(sol.size()));
    } else {
      const auto opt = brute_min_dominating_set(g, a.oracle_limit).size();
      rep.optimal_size = opt;
      rep.ratio = Rational(static_cast<std::int64_t>(sol.size()), static_cast<std::int64_t>(opt));
    }
  }
  return r;
}

inline int cmd_run(const RunArgs& a, std::ostream& out) {
  return guarded(out, [&] {
    const Graph g = read_graph_file(a.graph);
    const auto r = execute_run(g, a);
    json j = report_to_json(r.report);
    j["solution"] = solution_to_json(r.solution);
    out << j.dump() << '\n';
    return kExitOk;
  });
}

// ---------------------------------------------------------------------------

struct OracleArgs {
  std::string graph;
  std::string problem = "ds";
  std::size_t limit = kOracleNodeLimit;
};

inline Solution solve_exactly(const Graph& g, SolutionKind kind, std::size_t limit) {
  Solution s;
  s.kind = kind;
  switch (kind) {
    case SolutionKind::DominatingSet: s.nodes = brute_min_dominating_set(g, limit); break;
    case SolutionKind::IndependentSet: s.nodes = brute_max_independent_set(g, limit); break;
    case SolutionKind::Matching: s.edges = brute_max_matching(g); break;
  }
  return s;
}

inline int cmd_oracle(const OracleArgs& a, std::ostream& out) {
  return guarded(out, [&] {
    const Graph g = read_graph_file(a.graph);
    const Solution s = solve_exactly(g, parse_kind(a.problem), a.limit);
    const json j = solution_to_json(s);
    out << json{{"size", j["size"]}, {"members", j["members"]}}.dump() << '\n';
    return kExitOk;
  });
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string graph;
  std::string solution;
  std::optional<std::string> kind;
};

inline int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  return guarded(out, [&] {
    const Graph g = read_graph_file(a.graph);
    const Solution s =
        solution_from_json(read_json_file(a.solution), a.kind ? std::optional(parse_kind(*a.kind)) : std::nullopt);
    const auto v = verify_solution(g, s);
    out << json{{"kind", std::string(to_string(s.kind))}, {"size", s.size()}, {"valid", v.valid}, {"violations", v.violations}}.dump()
        << '\n';
    return v.valid ? kExitOk : kExitInvalid;
  });
}

// ---------------------------------------------------------------------------

struct DotArgs {
  std::string graph;
  std::optional<std::string> solution;
  std::optional<std::string> out;
};

inline int cmd_export_dot(const DotArgs& a, std::ostream& out) {
  return guarded(out, [&] {
    const Graph g = read_graph_file(a.graph);
    std::optional<Solution> s;
    if (a.solution) s = solution_from_json(read_json_file(*a.solution));
    write_text(a.out, out, to_dot(g, s));
    return kExitOk;
  });
}

}  // namespace colocal::cli
