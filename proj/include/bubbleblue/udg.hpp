// Unit disk graphs in one and two dimensions.
//
// Nodes are dropped uniformly on a segment [0, ell] (1D) or a rectangle
// [0, 1] x [0, ell] (2D); two nodes are adjacent iff their Euclidean distance
// is strictly less than one radio range.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bb {

using NodeId = std::uint32_t;
using NodeSet = std::set<NodeId>;

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

enum class Placement { fixed_n, poisson };

struct DeploymentSpec {
  int dimension = 1;
  double length = 10.0;   // segment length, or long side of the rectangle
  double density = 5.0;   // expected nodes per unit length / area
  std::uint64_t seed = 1;
  Placement placement = Placement::fixed_n;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Graph {
 public:
  Graph() = default;

  /// Builds the unit disk graph over the given positions.
  static Graph from_positions(int dimension, double length, std::uint64_t seed,
                              std::vector<Point> positions);

  /// Builds an abstract graph from an explicit edge list. Positions are zero.
  static Graph from_edges(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& edges);

  std::size_t size() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  int dimension() const { return dimension_; }
  double length() const { return length_; }
  std::uint64_t seed() const { return seed_; }

  const std::vector<Point>& positions() const { return positions_; }
  const Point& position(NodeId u) const;
  const std::vector<NodeId>& neighbors(NodeId u) const;
  const std::vector<std::pair<NodeId, NodeId>>& edges() const { return edges_; }
  bool adjacent(NodeId u, NodeId v) const;

  /// Copy of this graph with the edge removed (no-op when absent).
  Graph without_edge(NodeId u, NodeId v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph read_graph(std::istream& in);
  void rebuild_adjacency();

  int dimension_ = 0;
  double length_ = 0.0;
  std::uint64_t seed_ = 0;
  std::vector<Point> positions_;
  std::vector<std::pair<NodeId, NodeId>> edges_;  // u < v, sorted
  std::vector<std::vector<NodeId>> adjacency_;    // sorted
};

Graph generate(const DeploymentSpec& spec);

struct ConnectedSample {
  Graph graph;
  std::size_t resamples = 0;
};

/// Draws graphs from successive derived seeds until one is connected.
ConnectedSample generate_connected(const DeploymentSpec& spec, std::size_t max_attempts = 100000);

std::size_t degree(const Graph& g, NodeId u);
std::size_t set_degree(const Graph& g, const NodeSet& s);
bool is_connected(const Graph& g, const NodeSet& s);
bool is_dominating(const Graph& g, const NodeSet& s);
bool is_connected(const Graph& g);

NodeSet all_nodes(const Graph& g);

// Line format: header "n ell dim seed", then "id x [y]" per node, then "u v"
// per edge.
void write_graph(std::ostream& out, const Graph& g);
std::string to_text(const Graph& g);
Graph read_graph(std::istream& in);

/// Deterministic uniform double in [0, 1) from a 64-bit draw.
inline double unit_interval(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace bb
