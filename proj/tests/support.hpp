// Shared fixtures and independent reference implementations for the tests.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "bubbleblue/udg.hpp"

namespace bbt {

using bb::Graph;
using bb::NodeId;
using bb::NodeSet;

inline Graph path(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

inline Graph triangle() { return Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}); }

inline Graph star(std::size_t leaves) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, e);
}

/// Adjacency-matrix view built straight from the edge list.
struct Dense {
  std::size_t n = 0;
  std::vector<std::vector<bool>> adj;
  std::vector<std::size_t> deg;

  explicit Dense(const Graph& g) : n(g.size()), adj(n, std::vector<bool>(n, false)), deg(n, 0) {
    for (auto [u, v] : g.edges()) {
      adj[u][v] = adj[v][u] = true;
      ++deg[u];
      ++deg[v];
    }
  }

  bool connected(const std::vector<NodeId>& s) const {
    if (s.empty()) return true;
    std::vector<NodeId> parent(n);
    std::iota(parent.begin(), parent.end(), NodeId{0});
    auto find = [&](NodeId x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (NodeId a : s) {
      for (NodeId b : s) {
        if (adj[a][b]) parent[find(a)] = find(b);
      }
    }
    const NodeId root = find(s.front());
    return std::all_of(s.begin(), s.end(), [&](NodeId x) { return find(x) == root; });
  }

  bool dominating(const std::vector<NodeId>& s) const {
    std::vector<bool> cov(n, false);
    for (NodeId a : s) {
      cov[a] = true;
      for (NodeId b = 0; b < n; ++b) {
        if (adj[a][b]) cov[b] = true;
      }
    }
    return std::all_of(cov.begin(), cov.end(), [](bool c) { return c; });
  }

  std::size_t degsum(const std::vector<NodeId>& s) const {
    std::size_t d = 0;
    for (NodeId a : s) d += deg[a];
    return d;
  }
};

/// Minimum degree-sum CDS by enumerating every subset; ties broken by size,
/// then by the sorted member list.
inline std::vector<NodeId> brute_force_cds(const Graph& g) {
  Dense d(g);
  std::vector<NodeId> best;
  bool found = false;
  std::size_t best_deg = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << d.n); ++mask) {
    std::vector<NodeId> s;
    for (NodeId i = 0; i < d.n; ++i) {
      if (mask >> i & 1) s.push_back(i);
    }
    if (!d.dominating(s) || !d.connected(s)) continue;
    const auto ds = d.degsum(s);
    const bool better = !found || ds < best_deg || (ds == best_deg && s.size() < best.size()) ||
                        (ds == best_deg && s.size() == best.size() && s < best);
    if (better) {
      found = true;
      best = s;
      best_deg = ds;
    }
  }
  return best;
}

/// Random connected graph on n vertices with edge probability p (resampled).
inline Graph random_connected(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  for (;;) {
    std::vector<std::pair<NodeId, NodeId>> e;
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) {
        if (coin(rng)) e.emplace_back(u, v);
      }
    }
    Graph g = Graph::from_edges(n, e);
    std::vector<NodeId> all(n);
    std::iota(all.begin(), all.end(), NodeId{0});
    if (Dense(g).connected(all)) return g;
  }
}

/// Independent flood walk: FIFO, each CDS member retransmits once on first
/// receipt to every neighbor (except the sender when the valve is on).
inline std::size_t reference_flood(const Graph& g, const NodeSet& cds, NodeId initiator, bool valve) {
  Dense d(g);
  std::vector<bool> seen(d.n, false);
  std::vector<std::pair<NodeId, int>> queue{{initiator, -1}};
  seen[initiator] = true;
  std::size_t sends = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto [x, from] = queue[head];
    for (NodeId y = 0; y < d.n; ++y) {
      if (!d.adj[x][y] || (valve && static_cast<int>(y) == from)) continue;
      ++sends;
      if (!seen[y]) {
        seen[y] = true;
        if (cds.count(y)) queue.emplace_back(y, static_cast<int>(x));
      }
    }
  }
  return sends;
}

}  // namespace bbt
