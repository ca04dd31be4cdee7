#pragma once

#include <concepts>
#include <cstdint>
#include <deque>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "colocal/graph.hpp"

namespace colocal {

/// Opaque message body. The engine attaches no sender identity.
using Payload = std::vector<std::uint8_t>;

/// Everything a node may legally know before the first round: no identifier
/// and no global quantity other than the degree bound.
struct NodeView {
  int degree = 0;
  std::optional<Colour> colour;
  int max_degree = 0;
  std::optional<std::vector<PortDirection>> port_directions;  // index p-1
};

/// Messages received in one round, one optional slot per port.
class Inbox {
 public:
  explicit Inbox(int degree = 0) : slots_(static_cast<std::size_t>(degree)) {}

  int degree() const { return static_cast<int>(slots_.size()); }
  bool has(Port p) const { return slots_[static_cast<std::size_t>(p - 1)].has_value(); }
  const std::optional<Payload>& at(Port p) const { return slots_[static_cast<std::size_t>(p - 1)]; }

  std::size_t count() const {
    std::size_t k = 0;
    for (const auto& s : slots_) k += s.has_value();
    return k;
  }

  std::optional<Payload>& slot(Port p) { return slots_[static_cast<std::size_t>(p - 1)]; }
  void clear() {
    for (auto& s : slots_) s.reset();
  }

 private:
  std::vector<std::optional<Payload>> slots_;
};

/// Messages a node sends in one round; at most one per port.
class Outbox {
 public:
  explicit Outbox(int degree = 0) : slots_(static_cast<std::size_t>(degree)) {}

  int degree() const { return static_cast<int>(slots_.size()); }

  void send(Port p, Payload msg) {
    if (p < 1 || p > degree()) throw Error(ErrorCode::PortOutOfRange, "send on port " + std::to_string(p));
    slots_[static_cast<std::size_t>(p - 1)] = std::move(msg);
  }

  void send_all(const Payload& msg) {
    for (auto& s : slots_) s = msg;
  }

  const std::optional<Payload>& at(Port p) const { return slots_[static_cast<std::size_t>(p - 1)]; }
  std::optional<Payload>& slot(Port p) { return slots_[static_cast<std::size_t>(p - 1)]; }

  void clear() {
    for (auto& s : slots_) s.reset();
  }

 private:
  std::vector<std::optional<Payload>> slots_;
};

/// Node inputs an algorithm refuses to run without.
struct Requirements {
  bool colour = false;
  bool orientation = false;
};

/// Per-node algorithm run by the engine. All members must be deterministic
/// and the round budget may depend on the degree bound only.
///
/// Round protocol: init() may send the messages delivered in round 1; step()
/// for round r sees what was sent in r-1 and sends what arrives in r+1.
/// Messages sent during the final step are dropped.
template <class A>
concept LocalAlgorithm = requires(const A& alg, const NodeView& view, typename A::State& state,
                                  const typename A::State& cstate, const Inbox& inbox,
                                  Outbox& outbox, int delta, int round) {
  typename A::State;
  typename A::Output;
  { alg.requirements() } -> std::convertible_to<Requirements>;
  { alg.round_budget(delta) } -> std::convertible_to<int>;
  { alg.init(view, outbox) } -> std::same_as<typename A::State>;
  { alg.step(state, inbox, outbox, round) } -> std::same_as<void>;
  { alg.finalize(cstate) } -> std::same_as<typename A::Output>;
};

struct RunOptions {
  /// Degree bound announced to the nodes; defaults to the graph's maximum degree.
  std::optional<int> max_degree;
  /// Order in which nodes are stepped within a round; defaults to id order.
  std::vector<NodeId> order;
  /// JSON-lines trace sink, one line per (round, node).
  std::ostream* trace = nullptr;
};

template <class Output>
struct RunResult {
  std::vector<Output> outputs;
  int rounds_used = 0;
  std::size_t max_message_bits = 0;
};

namespace detail {

inline std::string hex(const Payload& p) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string s;
  s.reserve(p.size() * 2);
  for (auto b : p) {
    s.push_back(digits[b >> 4]);
    s.push_back(digits[b & 15]);
  }
  return s;
}

inline std::string fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

template <class A>
std::string state_digest(const A& alg, const typename A::State& s) {
  if constexpr (requires { { alg.describe(s) } -> std::convertible_to<std::string>; })
    return fnv1a(alg.describe(s));
  else
    return "";
}

inline void trace_line(std::ostream& os, int round, NodeId v, const Outbox& out, const std::string& digest) {
  os << "{\"round\":" << round << ",\"node\":" << v << ",\"sent\":[";
  for (Port p = 1; p <= out.degree(); ++p) {
    if (p > 1) os << ',';
    if (out.at(p))
      os << '"' << hex(*out.at(p)) << '"';
    else
      os << "null";
  }
  os << "],\"state_digest\":\"" << digest << "\"}\n";
}

}  // namespace detail

inline NodeView make_view(const Graph& g, NodeId v, int delta) {
  NodeView view;
  view.degree = g.degree(v);
  view.colour = g.colour(v);
  view.max_degree = delta;
  if (g.is_oriented()) {
    view.port_directions.emplace();
    for (const auto& h : g.ports(v)) view.port_directions->push_back(*h.dir);
  }
  return view;
}

/// Runs `alg` for exactly its round budget with barrier semantics: everything
/// sent in round r is delivered at the start of round r+1.
template <LocalAlgorithm A>
RunResult<typename A::Output> run_local_algorithm(const Graph& g, const A& alg, const RunOptions& opts = {}) {
  const Requirements req = alg.requirements();
  if (req.colour && !g.has_colours()) throw Error(ErrorCode::MissingInput, "algorithm needs a colouring");
  if (req.orientation && !g.is_oriented())
    throw Error(ErrorCode::MissingInput, "algorithm needs an orientation");

  const auto n = g.node_count();
  const int delta = opts.max_degree.value_or(g.max_degree());
  if (delta < g.max_degree()) throw Error(ErrorCode::DegenerateParams, "degree bound below maximum degree");

  std::vector<NodeId> order = opts.order;
  if (order.empty())
    for (std::size_t v = 0; v < n; ++v) order.push_back(static_cast<NodeId>(v));
  if (order.size() != n) throw Error(ErrorCode::IndexOutOfRange, "evaluation order must list every node once");

  std::vector<std::optional<typename A::State>> states(n);
  std::vector<Outbox> outboxes;
  std::vector<Inbox> inboxes;
  outboxes.reserve(n);
  inboxes.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    outboxes.emplace_back(g.degree(static_cast<NodeId>(v)));
    inboxes.emplace_back(g.degree(static_cast<NodeId>(v)));
  }

  for (NodeId v : order) states[static_cast<std::size_t>(v)].emplace(alg.init(make_view(g, v, delta), outboxes[static_cast<std::size_t>(v)]));
  if (opts.trace)
    for (std::size_t v = 0; v < n; ++v)
      detail::trace_line(*opts.trace, 0, static_cast<NodeId>(v), outboxes[v], detail::state_digest(alg, *states[v]));

  RunResult<typename A::Output> result;
  const int budget = alg.round_budget(delta);
  for (int round = 1; round <= budget; ++round) {
    for (std::size_t v = 0; v < n; ++v) {
      const auto hs = g.ports(static_cast<NodeId>(v));
      for (std::size_t i = 0; i < hs.size(); ++i) {
        auto& src = outboxes[static_cast<std::size_t>(hs[i].to)].slot(hs[i].back);
        auto& dst = inboxes[v].slot(static_cast<Port>(i + 1));
        if (src) result.max_message_bits = std::max(result.max_message_bits, src->size() * 8);
        dst = std::move(src);
      }
    }
    for (auto& o : outboxes) o.clear();
    for (NodeId v : order) {
      const auto i = static_cast<std::size_t>(v);
      alg.step(*states[i], inboxes[i], outboxes[i], round);
    }
    if (opts.trace)
      for (std::size_t v = 0; v < n; ++v)
        detail::trace_line(*opts.trace, round, static_cast<NodeId>(v), outboxes[v],
                           detail::state_digest(alg, *states[v]));
  }
  result.rounds_used = budget;
  result.outputs.reserve(n);
  for (std::size_t v = 0; v < n; ++v) result.outputs.push_back(alg.finalize(*states[v]));
  return result;
}

/// True iff the radius-r neighbourhoods of v1 in g1 and v2 in g2 are
/// isomorphic by a map that fixes the roots and preserves ports (at both ends
/// of every edge), colours, degrees and orientations. The ball is every node
/// within distance r together with every edge that has an endpoint closer
/// than r: exactly what an r-round algorithm can observe.
inline bool local_views_equivalent(const Graph& g1, NodeId v1, const Graph& g2, NodeId v2, int radius) {
  if (g1.has_colours() != g2.has_colours() || g1.is_oriented() != g2.is_oriented()) return false;
  std::vector<NodeId> fwd(g1.node_count(), -1), bwd(g2.node_count(), -1);
  std::vector<int> dist(g1.node_count(), -1);
  auto same_label = [&](NodeId a, NodeId b) { return g1.degree(a) == g2.degree(b) && g1.colour(a) == g2.colour(b); };
  if (!same_label(v1, v2)) return false;
  fwd[static_cast<std::size_t>(v1)] = v2;
  bwd[static_cast<std::size_t>(v2)] = v1;
  dist[static_cast<std::size_t>(v1)] = 0;
  std::deque<NodeId> queue{v1};
  while (!queue.empty()) {
    const NodeId a = queue.front();
    queue.pop_front();
    if (dist[static_cast<std::size_t>(a)] >= radius) continue;
    const NodeId b = fwd[static_cast<std::size_t>(a)];
    for (Port p = 1; p <= g1.degree(a); ++p) {
      if (g1.back_port(a, p) != g2.back_port(b, p) || g1.direction(a, p) != g2.direction(b, p)) return false;
      const NodeId x = g1.neighbour(a, p);
      const NodeId y = g2.neighbour(b, p);
      auto& fx = fwd[static_cast<std::size_t>(x)];
      auto& by = bwd[static_cast<std::size_t>(y)];
      if (fx == -1 && by == -1) {
        if (!same_label(x, y)) return false;
        fx = y;
        by = x;
        dist[static_cast<std::size_t>(x)] = dist[static_cast<std::size_t>(a)] + 1;
        queue.push_back(x);
      } else if (fx != y || by != x) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace colocal
