#include "bubbleblue/cds.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <sstream>

namespace bb {

std::string to_string(CdsAlgorithm a) {
  switch (a) {
    case CdsAlgorithm::wu_li_1999: return "wu-li-1999";
    case CdsAlgorithm::mpr_cds: return "mpr-cds";
    case CdsAlgorithm::optimal: return "optimal";
  }
  return "unknown";
}

CdsAlgorithm parse_cds_algorithm(const std::string& name) {
  if (name == "wu-li-1999" || name == "wu-li") return CdsAlgorithm::wu_li_1999;
  if (name == "mpr-cds" || name == "mpr") return CdsAlgorithm::mpr_cds;
  if (name == "optimal") return CdsAlgorithm::optimal;
  throw CdsError("unknown CDS algorithm: " + name);
}

std::vector<TwoHopView> views_from_graph(const Graph& g) {
  std::vector<TwoHopView> views(g.size());
  for (NodeId u = 0; u < g.size(); ++u) {
    auto& view = views[u];
    view.owner = u;
    const auto& nb = g.neighbors(u);
    view.sym_neighbors.insert(nb.begin(), nb.end());
    for (NodeId v : nb) {
      const auto& nv = g.neighbors(v);
      view.neighbor_of[v] = NodeSet(nv.begin(), nv.end());
    }
  }
  return views;
}

namespace {

bool is_local_minimum(const TwoHopView& view) {
  return view.sym_neighbors.empty() || view.owner < *view.sym_neighbors.begin();
}

const NodeSet& advertised(const TwoHopView& view, NodeId y) {
  static const NodeSet empty;
  auto it = view.neighbor_of.find(y);
  return it == view.neighbor_of.end() ? empty : it->second;
}

bool linked(const TwoHopView& view, NodeId a, NodeId b) {
  return advertised(view, a).count(b) > 0 || advertised(view, b).count(a) > 0;
}

}  // namespace

bool wu_li_flag(const TwoHopView& view) {
  if (is_local_minimum(view)) return true;

  NodeSet smaller;
  for (NodeId y : view.sym_neighbors) {
    if (y < view.owner) smaller.insert(y);
  }

  // Every neighbor is in `smaller` or adjacent to one of its members.
  for (NodeId z : view.sym_neighbors) {
    if (smaller.count(z)) continue;
    bool covered = std::any_of(smaller.begin(), smaller.end(), [&](NodeId y) { return linked(view, y, z); });
    if (!covered) return true;
  }

  // `smaller` must also induce a connected subgraph, edges taken from the view.
  NodeSet seen{*smaller.begin()};
  std::vector<NodeId> stack{*smaller.begin()};
  while (!stack.empty()) {
    NodeId a = stack.back();
    stack.pop_back();
    for (NodeId b : smaller) {
      if (!seen.count(b) && linked(view, a, b)) {
        seen.insert(b);
        stack.push_back(b);
      }
    }
  }
  return seen.size() != smaller.size();
}

bool mpr_cds_flag(const TwoHopView& view, const NodeSet& smallest_neighbor_mprs) {
  if (is_local_minimum(view)) return true;
  return smallest_neighbor_mprs.count(view.owner) > 0;
}

NodeSet two_hop_set(const TwoHopView& view) {
  NodeSet out;
  for (NodeId y : view.sym_neighbors) {
    for (NodeId z : advertised(view, y)) {
      if (z != view.owner && !view.sym_neighbors.count(z)) out.insert(z);
    }
  }
  return out;
}

MprSelection select_mprs(const TwoHopView& view) {
  MprSelection sel{view.owner, {}};
  NodeSet uncovered = two_hop_set(view);
  if (uncovered.empty()) return sel;

  auto covers = [&](NodeId y) -> NodeSet {
    NodeSet c;
    for (NodeId z : advertised(view, y)) {
      if (uncovered.count(z)) c.insert(z);
    }
    return c;
  };
  auto take = [&](NodeId y) {
    sel.mprs.insert(y);
    for (NodeId z : advertised(view, y)) uncovered.erase(z);
  };

  // Neighbors that are the only way to reach some two-hop node.
  for (NodeId z : NodeSet(uncovered)) {
    std::optional<NodeId> only;
    std::size_t count = 0;
    for (NodeId y : view.sym_neighbors) {
      if (advertised(view, y).count(z)) {
        ++count;
        only = y;
      }
    }
    if (count == 1) sel.mprs.insert(*only);
  }
  for (NodeId y : NodeSet(sel.mprs)) take(y);

  while (!uncovered.empty()) {
    std::optional<NodeId> best;
    std::size_t best_gain = 0;
    std::size_t best_degree = 0;
    for (NodeId y : view.sym_neighbors) {
      if (sel.mprs.count(y)) continue;
      std::size_t gain = covers(y).size();
      std::size_t deg = advertised(view, y).size();
      // Ascending id iteration keeps the lower id on full ties.
      if (gain > best_gain || (gain == best_gain && gain > 0 && deg > best_degree)) {
        best = y;
        best_gain = gain;
        best_degree = deg;
      }
    }
    if (!best) break;  // unreachable on consistent views
    take(*best);
  }
  return sel;
}

namespace {

void check_views(const std::vector<TwoHopView>& views) {
  for (std::size_t i = 0; i < views.size(); ++i) {
    const auto& v = views[i];
    if (v.owner != i) throw CdsError(fmt::format("view at index {} belongs to node {}", i, v.owner));
    for (NodeId b : v.sym_neighbors) {
      if (b >= views.size()) throw CdsError(fmt::format("node {} lists unknown neighbor {}", i, b));
      if (!views[b].sym_neighbors.count(v.owner)) {
        throw CdsError(fmt::format("inconsistent views: {} lists {} as symmetric but not vice versa", i, b));
      }
    }
    for (const auto& [y, _] : v.neighbor_of) {
      if (!v.sym_neighbors.count(y)) throw CdsError(fmt::format("node {} has two-hop data for non-neighbor {}", i, y));
    }
  }
}

CdsResult from_views(const std::vector<TwoHopView>& views, NodeSet members, CdsAlgorithm algorithm) {
  CdsResult r;
  r.algorithm = algorithm;
  for (NodeId u : members) r.degree_sum += views[u].sym_neighbors.size();
  r.size = members.size();
  r.members = std::move(members);
  return r;
}

}  // namespace

CdsResult wu_li_1999(const std::vector<TwoHopView>& views) {
  check_views(views);
  NodeSet members;
  for (const auto& v : views) {
    if (wu_li_flag(v)) members.insert(v.owner);
  }
  return from_views(views, std::move(members), CdsAlgorithm::wu_li_1999);
}

CdsResult mpr_cds(const std::vector<TwoHopView>& views, const std::vector<MprSelection>& selections) {
  check_views(views);
  if (selections.size() != views.size()) throw CdsError("one MPR selection per node is required");
  static const NodeSet none;
  NodeSet members;
  for (const auto& v : views) {
    const NodeSet& mprs = v.sym_neighbors.empty() ? none : selections[*v.sym_neighbors.begin()].mprs;
    if (mpr_cds_flag(v, mprs)) members.insert(v.owner);
  }
  return from_views(views, std::move(members), CdsAlgorithm::mpr_cds);
}

CdsResult wu_li_1999(const Graph& g) { return wu_li_1999(views_from_graph(g)); }

CdsResult mpr_cds(const Graph& g) {
  auto views = views_from_graph(g);
  std::vector<MprSelection> selections;
  selections.reserve(views.size());
  for (const auto& v : views) selections.push_back(select_mprs(v));
  return mpr_cds(views, selections);
}

CdsResult make_result(const Graph& g, NodeSet members, CdsAlgorithm algorithm) {
  CdsResult r;
  r.algorithm = algorithm;
  r.degree_sum = set_degree(g, members);
  r.size = members.size();
  r.members = std::move(members);
  return r;
}

CdsResult elect(const Graph& g, CdsAlgorithm algorithm, const SolverOptions& options) {
  switch (algorithm) {
    case CdsAlgorithm::wu_li_1999: return wu_li_1999(g);
    case CdsAlgorithm::mpr_cds: return mpr_cds(g);
    case CdsAlgorithm::optimal: return optimal_cds(g, options);
  }
  throw CdsError("unknown algorithm");
}

bool validate(const Graph& g, const CdsResult& r) {
  if (g.size() > 0 && r.members.empty()) return false;
  for (NodeId u : r.members) {
    if (u >= g.size()) return false;
  }
  return is_dominating(g, r.members) && is_connected(g, r.members) && r.size == r.members.size() &&
         r.degree_sum == set_degree(g, r.members);
}

std::string to_line(const CdsResult& r) {
  std::string members;
  for (NodeId u : r.members) {
    if (!members.empty()) members += ',';
    members += std::to_string(u);
  }
  return fmt::format("{} {} {} {}", to_string(r.algorithm), r.size, r.degree_sum, members);
}

CdsResult parse_line(const std::string& line) {
  std::istringstream in(line);
  std::string algo, members;
  CdsResult r;
  if (!(in >> algo >> r.size >> r.degree_sum)) throw CdsError("malformed CDS line: " + line);
  r.algorithm = parse_cds_algorithm(algo);
  in >> members;
  std::istringstream list(members);
  std::string item;
  while (std::getline(list, item, ',')) {
    if (!item.empty()) r.members.insert(static_cast<NodeId>(std::stoul(item)));
  }
  if (r.members.size() != r.size) throw CdsError("CDS line size does not match member list: " + line);
  return r;
}

}  // namespace bb
