#include "bubbleblue/udg.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

namespace bb {

namespace {

std::pair<NodeId, NodeId> ordered(NodeId u, NodeId v) { return u < v ? std::pair{u, v} : std::pair{v, u}; }

double distance(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Counts Exp(1) arrivals in [0, mean); avoids exp(-mean) underflow.
std::size_t draw_poisson(std::mt19937_64& rng, double mean) {
  std::size_t count = 0;
  double t = 0.0;
  for (;;) {
    t += -std::log1p(-unit_interval(rng()));
    if (t >= mean) return count;
    ++count;
  }
}

}  // namespace

Graph Graph::from_positions(int dimension, double length, std::uint64_t seed, std::vector<Point> positions) {
  Graph g;
  g.dimension_ = dimension;
  g.length_ = length;
  g.seed_ = seed;
  g.positions_ = std::move(positions);
  const auto n = static_cast<NodeId>(g.positions_.size());
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (distance(g.positions_[u], g.positions_[v]) < 1.0) g.edges_.emplace_back(u, v);
    }
  }
  g.rebuild_adjacency();
  return g;
}

Graph Graph::from_edges(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& edges) {
  Graph g;
  g.positions_.assign(n, Point{});
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw GraphError(fmt::format("edge {}-{} references a node outside 0..{}", u, v, n));
    if (u == v) throw GraphError(fmt::format("self-loop at node {}", u));
    g.edges_.push_back(ordered(u, v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  g.rebuild_adjacency();
  return g;
}

void Graph::rebuild_adjacency() {
  adjacency_.assign(positions_.size(), {});
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

const Point& Graph::position(NodeId u) const {
  if (u >= size()) throw GraphError(fmt::format("unknown node {}", u));
  return positions_[u];
}

const std::vector<NodeId>& Graph::neighbors(NodeId u) const {
  if (u >= size()) throw GraphError(fmt::format("unknown node {}", u));
  return adjacency_[u];
}

bool Graph::adjacent(NodeId u, NodeId v) const {
  const auto& list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

Graph Graph::without_edge(NodeId u, NodeId v) const {
  Graph g = *this;
  auto e = ordered(u, v);
  g.edges_.erase(std::remove(g.edges_.begin(), g.edges_.end(), e), g.edges_.end());
  g.rebuild_adjacency();
  return g;
}

Graph generate(const DeploymentSpec& spec) {
  if (!(spec.length > 0.0) || !(spec.density > 0.0)) {
    throw GraphError("deployment needs positive length and density");
  }
  if (spec.dimension != 1 && spec.dimension != 2) throw GraphError("dimension must be 1 or 2");

  std::mt19937_64 rng(spec.seed);
  // The 2D region is 1 x ell, so the expected count is density * ell either way.
  const double expected = spec.density * spec.length;
  const std::size_t n = spec.placement == Placement::poisson ? draw_poisson(rng, expected)
                                                             : static_cast<std::size_t>(std::llround(expected));
  std::vector<Point> positions(n);
  for (auto& p : positions) {
    if (spec.dimension == 1) {
      p.x = unit_interval(rng()) * spec.length;
    } else {
      p.x = unit_interval(rng());
      p.y = unit_interval(rng()) * spec.length;
    }
  }
  return Graph::from_positions(spec.dimension, spec.length, spec.seed, std::move(positions));
}

ConnectedSample generate_connected(const DeploymentSpec& spec, std::size_t max_attempts) {
  DeploymentSpec attempt = spec;
  for (std::size_t k = 0; k < max_attempts; ++k) {
    attempt.seed = spec.seed + k * 0x9E3779B97F4A7C15ULL;
    Graph g = generate(attempt);
    if (g.size() > 0 && is_connected(g)) return {std::move(g), k};
  }
  throw GraphError(fmt::format("no connected sample after {} attempts", max_attempts));
}

std::size_t degree(const Graph& g, NodeId u) { return g.neighbors(u).size(); }

std::size_t set_degree(const Graph& g, const NodeSet& s) {
  std::size_t total = 0;
  for (NodeId u : s) total += degree(g, u);
  return total;
}

bool is_connected(const Graph& g, const NodeSet& s) {
  if (s.size() <= 1) return true;
  NodeSet seen{*s.begin()};
  std::vector<NodeId> stack{*s.begin()};
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    for (NodeId v : g.neighbors(u)) {
      if (s.count(v) && seen.insert(v).second) stack.push_back(v);
    }
  }
  return seen.size() == s.size();
}

bool is_connected(const Graph& g) { return is_connected(g, all_nodes(g)); }

bool is_dominating(const Graph& g, const NodeSet& s) {
  for (NodeId u = 0; u < g.size(); ++u) {
    if (s.count(u)) continue;
    const auto& nb = g.neighbors(u);
    if (std::none_of(nb.begin(), nb.end(), [&](NodeId v) { return s.count(v) > 0; })) return false;
  }
  return true;
}

NodeSet all_nodes(const Graph& g) {
  NodeSet s;
  for (NodeId u = 0; u < g.size(); ++u) s.insert(s.end(), u);
  return s;
}

void write_graph(std::ostream& out, const Graph& g) {
  out << fmt::format("{} {} {} {}\n", g.size(), g.length(), g.dimension(), g.seed());
  for (NodeId u = 0; u < g.size(); ++u) {
    const auto& p = g.position(u);
    if (g.dimension() == 2) {
      out << fmt::format("{} {} {}\n", u, p.x, p.y);
    } else {
      out << fmt::format("{} {}\n", u, p.x);
    }
  }
  for (auto [u, v] : g.edges()) out << fmt::format("{} {}\n", u, v);
}

std::string to_text(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

Graph read_graph(std::istream& in) {
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      if (!line.empty() && line[0] != '#') return true;
    }
    return false;
  };
  if (!next_line()) throw GraphError("graph file is empty");
  std::size_t n = 0;
  double length = 0.0;
  int dim = 0;
  std::uint64_t seed = 0;
  {
    std::istringstream header(line);
    if (!(header >> n >> length >> dim >> seed)) throw GraphError("malformed graph header: " + line);
  }
  std::vector<Point> positions(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!next_line()) throw GraphError("graph file truncated in node block");
    std::istringstream row(line);
    std::size_t id = 0;
    Point p;
    if (!(row >> id >> p.x)) throw GraphError("malformed node line: " + line);
    if (dim == 2 && !(row >> p.y)) throw GraphError("missing y coordinate: " + line);
    if (id != i) throw GraphError("node ids must be dense and in order: " + line);
    positions[i] = p;
  }
  std::vector<std::pair<NodeId, NodeId>> edges;
  while (next_line()) {
    std::istringstream row(line);
    NodeId u = 0, v = 0;
    if (!(row >> u >> v)) throw GraphError("malformed edge line: " + line);
    edges.emplace_back(u, v);
  }
  // Edges are taken as written, not recomputed from positions.
  Graph g = Graph::from_edges(n, edges);
  g.dimension_ = dim;
  g.length_ = length;
  g.seed_ = seed;
  g.positions_ = std::move(positions);
  return g;
}

}  // namespace bb
