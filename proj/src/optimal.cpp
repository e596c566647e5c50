#include <fmt/format.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>

#include "bubbleblue/cds.hpp"

namespace bb {

namespace {

using Mask = std::uint64_t;

bool mask_connected(Mask set, const std::vector<Mask>& open_nbhd) {
  if (set == 0) return true;
  Mask seen = set & (~set + 1);
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= open_nbhd[std::countr_zero(f)];
    next &= set & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == set;
}

std::vector<NodeId> members_of(Mask m) {
  std::vector<NodeId> out;
  for (; m; m &= m - 1) out.push_back(static_cast<NodeId>(std::countr_zero(m)));
  return out;
}

class BranchAndBound {
 public:
  explicit BranchAndBound(const Graph& g) : n_(g.size()), open_(n_), closed_(n_), deg_(n_), order_(n_) {
    for (NodeId u = 0; u < n_; ++u) {
      for (NodeId v : g.neighbors(u)) open_[u] |= Mask{1} << v;
      closed_[u] = open_[u] | (Mask{1} << u);
      deg_[u] = g.neighbors(u).size();
    }
    std::iota(order_.begin(), order_.end(), NodeId{0});
    std::stable_sort(order_.begin(), order_.end(), [&](NodeId a, NodeId b) { return deg_[a] < deg_[b]; });

    // A vertex whose whole closed neighborhood has been decided must already
    // be dominated.
    std::vector<std::size_t> last_pos(n_, 0);
    std::vector<std::size_t> pos(n_);
    for (std::size_t i = 0; i < n_; ++i) pos[order_[i]] = i;
    for (NodeId u = 0; u < n_; ++u) {
      for (Mask m = closed_[u]; m; m &= m - 1) last_pos[u] = std::max(last_pos[u], pos[std::countr_zero(m)]);
    }
    settled_by_depth_.assign(n_ + 1, 0);
    for (std::size_t d = 0; d <= n_; ++d) {
      for (NodeId u = 0; u < n_; ++u) {
        if (last_pos[u] < d) settled_by_depth_[d] |= Mask{1} << u;
      }
    }
    all_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
  }

  Mask solve() {
    search(0, 0, 0, 0, 0);
    return best_;
  }

 private:
  void offer(Mask set, std::size_t degsum, std::size_t size) {
    if (found_) {
      if (degsum != best_degsum_) {
        if (degsum > best_degsum_) return;
      } else if (size != best_size_) {
        if (size > best_size_) return;
      } else if (!(members_of(set) < members_of(best_))) {
        return;
      }
    }
    found_ = true;
    best_ = set;
    best_degsum_ = degsum;
    best_size_ = size;
  }

  void search(std::size_t depth, Mask chosen, Mask dominated, std::size_t degsum, std::size_t size) {
    if (chosen != 0 && dominated == all_ && mask_connected(chosen, open_)) {
      // Every superset has a strictly larger degree sum.
      offer(chosen, degsum, size);
      return;
    }
    if (depth == n_) return;
    if (settled_by_depth_[depth] & ~dominated) return;
    const NodeId u = order_[depth];
    if (found_ && degsum + deg_[u] > best_degsum_) return;

    search(depth + 1, chosen | (Mask{1} << u), dominated | closed_[u], degsum + deg_[u], size + 1);
    search(depth + 1, chosen, dominated, degsum, size);
  }

  std::size_t n_;
  std::vector<Mask> open_;
  std::vector<Mask> closed_;
  std::vector<std::size_t> deg_;
  std::vector<NodeId> order_;
  std::vector<Mask> settled_by_depth_;
  Mask all_ = 0;

  bool found_ = false;
  Mask best_ = 0;
  std::size_t best_degsum_ = 0;
  std::size_t best_size_ = 0;
};

}  // namespace

CdsResult optimal_cds(const Graph& g, const SolverOptions& options) {
  const std::size_t cap = std::min<std::size_t>(options.max_nodes, 64);
  if (g.size() > cap) throw CdsError(fmt::format("graph has {} nodes, solver cap is {}", g.size(), cap));
  if (!is_connected(g)) throw CdsError("optimal CDS needs a connected graph");
  if (g.size() == 0) return make_result(g, {}, CdsAlgorithm::optimal);
  if (g.size() == 1) return make_result(g, {0}, CdsAlgorithm::optimal);

  BranchAndBound solver(g);
  auto members = members_of(solver.solve());
  return make_result(g, NodeSet(members.begin(), members.end()), CdsAlgorithm::optimal);
}

namespace {

// Edmonds-Karp over a dense capacity matrix; graphs here are small.
class MaxFlow {
 public:
  explicit MaxFlow(std::size_t n) : n_(n), cap_(n * n, 0) {}

  void add(std::size_t from, std::size_t to, long long c) { cap_[from * n_ + to] += c; }

  long long run(std::size_t s, std::size_t t) {
    long long total = 0;
    std::vector<std::size_t> parent(n_);
    const auto none = std::numeric_limits<std::size_t>::max();
    for (;;) {
      std::fill(parent.begin(), parent.end(), none);
      parent[s] = s;
      std::deque<std::size_t> queue{s};
      while (!queue.empty() && parent[t] == none) {
        auto u = queue.front();
        queue.pop_front();
        for (std::size_t v = 0; v < n_; ++v) {
          if (parent[v] == none && cap_[u * n_ + v] > 0) {
            parent[v] = u;
            queue.push_back(v);
          }
        }
      }
      if (parent[t] == none) return total;
      long long push = std::numeric_limits<long long>::max();
      for (auto v = t; v != s; v = parent[v]) push = std::min(push, cap_[parent[v] * n_ + v]);
      for (auto v = t; v != s; v = parent[v]) {
        cap_[parent[v] * n_ + v] -= push;
        cap_[v * n_ + parent[v]] += push;
      }
      total += push;
    }
  }

 private:
  std::size_t n_;
  std::vector<long long> cap_;
};

}  // namespace

bool flow_feasible(const Graph& g, const NodeSet& s, NodeId root) {
  if (!s.count(root)) throw CdsError(fmt::format("root {} is not in the selected set", root));
  const std::size_t n = g.size();
  const long long k = static_cast<long long>(s.size());
  const long long big = static_cast<long long>(n) - 1;
  const std::size_t source = n;
  const std::size_t sink = n + 1;

  MaxFlow flow(n + 2);
  for (auto [i, j] : g.edges()) {
    // f_ij <= (|V|-1) x_i and f_ij <= (|V|-1) x_j, in both directions.
    const long long c = std::min(big * static_cast<long long>(s.count(i)), big * static_cast<long long>(s.count(j)));
    flow.add(i, j, c);
    flow.add(j, i, c);
  }
  flow.add(source, root, k - 1);
  for (NodeId u : s) {
    if (u != root) flow.add(u, sink, 1);
  }
  return flow.run(source, sink) == k - 1;
}

}  // namespace bb
