#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace harmonium {

using Vertex = int;

/// Unordered edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge &, const Edge &) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable undirected simple graph on vertices 0..n-1.
///
/// Edges are kept sorted in ascending (u, v) order and every neighbor list is
/// sorted ascending, so iteration order is deterministic everywhere.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an arbitrary pair list. Duplicate pairs (in either
  /// orientation) collapse to one edge; self-loops and out-of-range ids throw.
  static Graph from_edge_list(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs);
  static Graph from_edge_list(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
    return from_edge_list(n, std::span<const std::pair<Vertex, Vertex>>(pairs.begin(), pairs.size()));
  }

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  const std::vector<Edge> &edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
  std::size_t degree(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)).size(); }
  bool adjacent(Vertex a, Vertex b) const;

  std::size_t max_degree() const noexcept;
  std::vector<std::size_t> degree_sequence() const;

  friend bool operator==(const Graph &, const Graph &) = default;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

struct GraphStats {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t max_degree = 0;
  /// Empty when the graph is disconnected.
  std::optional<std::size_t> diameter;
  std::vector<std::size_t> degree_sequence;

  bool connected() const noexcept { return diameter.has_value(); }
};

GraphStats stats(const Graph &g);

/// BFS distances from `source`; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph &g, Vertex source);

/// Closed second neighbourhood N2[v]: every u with d(u, v) <= 2, ascending.
std::vector<Vertex> closed_n2(const Graph &g, Vertex v);

/// Disjoint union with the vertices of `b` shifted past those of `a`.
Graph disjoint_union(const Graph &a, const Graph &b);

/// Graph induced by relabelling vertex v to perm[v].
Graph relabel(const Graph &g, std::span<const Vertex> perm);

}  // namespace harmonium
