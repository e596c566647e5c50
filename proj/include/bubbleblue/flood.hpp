// Broadcast cost over a CDS backbone when every local broadcast is a series of
// unicasts, one per neighbor.
#pragma once

#include <boost/rational.hpp>

#include "bubbleblue/udg.hpp"

namespace bb {

using Rational = boost::rational<long long>;

struct FloodOutcome {
  NodeId initiator = 0;
  std::size_t transmissions = 0;
  NodeSet reached;
  bool check_valve = false;
};

/// 2|E|/n + (1 - 1/n) deg(cds). Throws CdsError if `cds` is not a CDS of `g`.
Rational flooding_cost_formula(const Graph& g, const NodeSet& cds);

/// Replays one flood. The initiator unicasts to each neighbor; every other
/// CDS member does the same on its first copy only (skipping the node that
/// copy came from when `check_valve` is set). Duplicates cost the sender a
/// transmission and nothing else.
FloodOutcome simulate_flood(const Graph& g, const NodeSet& cds, NodeId initiator, bool check_valve);

/// Mean transmissions over all n initiators.
Rational average_flood_cost(const Graph& g, const NodeSet& cds, bool check_valve);

double to_double(const Rational& r);

}  // namespace bb
