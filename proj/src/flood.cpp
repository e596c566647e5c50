#include "bubbleblue/flood.hpp"

#include <deque>
#include <optional>

#include "bubbleblue/cds.hpp"

namespace bb {

Rational flooding_cost_formula(const Graph& g, const NodeSet& cds) {
  if (g.size() == 0) throw CdsError("flooding cost is undefined on an empty graph");
  if (!validate(g, make_result(g, cds, CdsAlgorithm::optimal))) {
    throw CdsError("flooding cost formula needs a connected dominating set");
  }
  const auto n = static_cast<long long>(g.size());
  const auto edges = static_cast<long long>(g.edge_count());
  const auto degsum = static_cast<long long>(set_degree(g, cds));
  return Rational(2 * edges, n) + (Rational(1) - Rational(1, n)) * degsum;
}

FloodOutcome simulate_flood(const Graph& g, const NodeSet& cds, NodeId initiator, bool check_valve) {
  FloodOutcome out;
  out.initiator = initiator;
  out.check_valve = check_valve;

  struct Copy {
    NodeId from;
    NodeId to;
  };
  std::deque<Copy> in_flight;
  std::vector<bool> seen(g.size(), false);

  auto send_all = [&](NodeId sender, std::optional<NodeId> skip) {
    for (NodeId v : g.neighbors(sender)) {
      if (skip && *skip == v) continue;
      ++out.transmissions;
      in_flight.push_back({sender, v});
    }
  };

  seen[initiator] = true;
  out.reached.insert(initiator);
  send_all(initiator, std::nullopt);

  while (!in_flight.empty()) {
    Copy c = in_flight.front();
    in_flight.pop_front();
    if (seen[c.to]) continue;
    seen[c.to] = true;
    out.reached.insert(c.to);
    if (cds.count(c.to)) send_all(c.to, check_valve ? std::optional<NodeId>(c.from) : std::nullopt);
  }
  return out;
}

Rational average_flood_cost(const Graph& g, const NodeSet& cds, bool check_valve) {
  if (g.size() == 0) throw CdsError("flooding cost is undefined on an empty graph");
  long long total = 0;
  for (NodeId u = 0; u < g.size(); ++u) total += static_cast<long long>(simulate_flood(g, cds, u, check_valve).transmissions);
  return Rational(total, static_cast<long long>(g.size()));
}

double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

}  // namespace bb
