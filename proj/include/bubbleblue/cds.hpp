// Connected dominating set election.
//
// Two distributed rules that only look at a node's two-hop view (the id-based
// Wu-Li 1999 rule and the MPR-CDS rule), plus an exact solver that minimizes
// the degree sum of the set, which is what a broadcast costs over Bluetooth.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bubbleblue/udg.hpp"

namespace bb {

enum class CdsAlgorithm { wu_li_1999, mpr_cds, optimal };

std::string to_string(CdsAlgorithm a);
CdsAlgorithm parse_cds_algorithm(const std::string& name);

/// What one node knows after hello exchange: its symmetric neighbors and the
/// symmetric-neighbor set each of them advertised.
struct TwoHopView {
  NodeId owner = 0;
  NodeSet sym_neighbors;
  std::map<NodeId, NodeSet> neighbor_of;
};

struct CdsResult {
  NodeSet members;
  CdsAlgorithm algorithm = CdsAlgorithm::wu_li_1999;
  std::size_t degree_sum = 0;
  std::size_t size = 0;

  friend bool operator==(const CdsResult&, const CdsResult&) = default;
};

struct MprSelection {
  NodeId selector = 0;
  NodeSet mprs;
};

class CdsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Views that converged hello exchange would produce on `g`.
std::vector<TwoHopView> views_from_graph(const Graph& g);

/// Local Wu-Li 1999 decision for the view's owner.
bool wu_li_flag(const TwoHopView& view);

/// Local MPR-CDS decision. `smallest_neighbor_mprs` is the MPR set chosen by
/// the owner's smallest-id neighbor (ignored when the owner is a local minimum).
bool mpr_cds_flag(const TwoHopView& view, const NodeSet& smallest_neighbor_mprs);

/// Strict two-hop neighborhood: reachable through a symmetric neighbor,
/// excluding the owner and its one-hop neighbors.
NodeSet two_hop_set(const TwoHopView& view);

// Greedy: forced unique covers first, then max new coverage; ties by higher
// degree, then lower id.
MprSelection select_mprs(const TwoHopView& view);

/// Throws CdsError when views disagree on symmetry. The vector is indexed by
/// owner id.
CdsResult wu_li_1999(const std::vector<TwoHopView>& views);
CdsResult mpr_cds(const std::vector<TwoHopView>& views, const std::vector<MprSelection>& selections);

CdsResult wu_li_1999(const Graph& g);
CdsResult mpr_cds(const Graph& g);

struct SolverOptions {
  std::size_t max_nodes = 20;
};

/// Minimum degree-sum connected dominating set. Ties: fewer members, then the
/// lexicographically smallest sorted member list.
CdsResult optimal_cds(const Graph& g, const SolverOptions& options = {});

/// Single-commodity flow feasibility of `s` rooted at `root`: the root ships
/// |s|-1 units, every other member absorbs one, and only edges between
/// members carry flow. Feasible iff the subgraph induced by `s` is connected.
bool flow_feasible(const Graph& g, const NodeSet& s, NodeId root);

CdsResult make_result(const Graph& g, NodeSet members, CdsAlgorithm algorithm);
CdsResult elect(const Graph& g, CdsAlgorithm algorithm, const SolverOptions& options = {});

bool validate(const Graph& g, const CdsResult& r);

/// "algorithm size degree_sum m1,m2,..." with members ascending.
std::string to_line(const CdsResult& r);
CdsResult parse_line(const std::string& line);

}  // namespace bb
