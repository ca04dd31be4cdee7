#pragma once

#include <string>

#include "colocal/sim.hpp"

namespace colocal {

/// The take-every-node dominating set baseline: zero rounds, every node joins.
struct AllNodesAlgorithm {
  struct State {};
  using Output = bool;

  Requirements requirements() const { return {}; }
  int round_budget(int) const { return 0; }
  State init(const NodeView&, Outbox&) const { return {}; }
  void step(State&, const Inbox&, Outbox&, int) const {}
  bool finalize(const State&) const { return true; }
};

/// Full-information probe: after r rounds every node holds the port-labelled
/// view tree of radius r, serialised canonically. Any deterministic r-round
/// algorithm's output is a function of this value, so equal views force equal
/// outputs. Message size grows as O(Delta^r), independent of n.
class ViewGatherAlgorithm {
 public:
  struct State {
    Payload label;  // degree, colour, port directions
    Payload view;   // view tree gathered so far
    int degree = 0;
  };
  using Output = Payload;

  explicit ViewGatherAlgorithm(int radius = 2) : radius_(radius) {}

  Requirements requirements() const { return {}; }
  int round_budget(int) const { return radius_; }

  State init(const NodeView& view, Outbox& out) const {
    State s;
    s.degree = view.degree;
    s.label.push_back(static_cast<std::uint8_t>(view.degree));
    s.label.push_back(view.colour ? static_cast<std::uint8_t>(1 + static_cast<int>(*view.colour)) : 0);
    for (int p = 0; p < view.degree; ++p)
      s.label.push_back(view.port_directions
                            ? static_cast<std::uint8_t>(1 + static_cast<int>((*view.port_directions)[static_cast<std::size_t>(p)]))
                            : 0);
    s.view = s.label;
    announce(s, out);
    return s;
  }

  void step(State& s, const Inbox& in, Outbox& out, int) const {
    Payload next = s.label;
    for (Port p = 1; p <= in.degree(); ++p) {
      const Payload& m = *in.at(p);  // every neighbour announces every round
      append_size(next, m.size());
      next.insert(next.end(), m.begin(), m.end());
    }
    s.view = std::move(next);
    announce(s, out);
  }

  Payload finalize(const State& s) const { return s.view; }

  std::string describe(const State& s) const { return detail::hex(s.view); }

 private:
  static void append_size(Payload& p, std::size_t n) {
    for (int shift = 24; shift >= 0; shift -= 8) p.push_back(static_cast<std::uint8_t>(n >> shift));
  }

  // The receiver learns which of our ports the message left by: that is the
  // back port of its own edge.
  static void announce(const State& s, Outbox& out) {
    for (Port p = 1; p <= s.degree; ++p) {
      Payload m;
      m.push_back(static_cast<std::uint8_t>(p));
      m.insert(m.end(), s.view.begin(), s.view.end());
      out.send(p, std::move(m));
    }
  }

  int radius_;
};

}  // namespace colocal
