#include "harmonium/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace harmonium {

Graph Graph::from_edge_list(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs) {
  Graph g;
  g.adj_.resize(n);
  g.edges_.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n) {
      throw GraphError("edge (" + std::to_string(a) + "," + std::to_string(b) + ") has an endpoint outside 0.." +
                       std::to_string(static_cast<long long>(n) - 1));
    }
    if (a == b) {
      throw GraphError("self-loop at vertex " + std::to_string(a));
    }
    g.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  for (const auto &e : g.edges_) {
    g.adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    g.adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto &row : g.adj_) {
    std::sort(row.begin(), row.end());
  }
  return g;
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  const auto row = neighbors(a);
  return std::binary_search(row.begin(), row.end(), b);
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto &row : adj_) {
    best = std::max(best, row.size());
  }
  return best;
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> out;
  out.reserve(adj_.size());
  for (const auto &row : adj_) {
    out.push_back(row.size());
  }
  return out;
}

std::vector<int> bfs_distances(const Graph &g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  std::deque<Vertex> queue{source};
  dist.at(static_cast<std::size_t>(source)) = 0;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (dist[static_cast<std::size_t>(y)] < 0) {
        dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

GraphStats stats(const Graph &g) {
  GraphStats s;
  s.n = g.order();
  s.m = g.size();
  s.max_degree = g.max_degree();
  s.degree_sequence = g.degree_sequence();
  std::size_t diameter = 0;
  bool connected = true;
  for (Vertex v = 0; static_cast<std::size_t>(v) < g.order() && connected; ++v) {
    for (int d : bfs_distances(g, v)) {
      if (d < 0) {
        connected = false;
        break;
      }
      diameter = std::max(diameter, static_cast<std::size_t>(d));
    }
  }
  if (connected) {
    s.diameter = diameter;
  }
  return s;
}

std::vector<Vertex> closed_n2(const Graph &g, Vertex v) {
  if (v < 0 || static_cast<std::size_t>(v) >= g.order()) {
    throw GraphError("vertex " + std::to_string(v) + " out of range");
  }
  std::vector<char> mark(g.order(), 0);
  mark[static_cast<std::size_t>(v)] = 1;
  for (Vertex x : g.neighbors(v)) {
    mark[static_cast<std::size_t>(x)] = 1;
    for (Vertex y : g.neighbors(x)) {
      mark[static_cast<std::size_t>(y)] = 1;
    }
  }
  std::vector<Vertex> out;
  for (std::size_t u = 0; u < mark.size(); ++u) {
    if (mark[u]) {
      out.push_back(static_cast<Vertex>(u));
    }
  }
  return out;
}

Graph disjoint_union(const Graph &a, const Graph &b) {
  const auto shift = static_cast<Vertex>(a.order());
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(a.size() + b.size());
  for (const auto &e : a.edges()) {
    pairs.emplace_back(e.u, e.v);
  }
  for (const auto &e : b.edges()) {
    pairs.emplace_back(e.u + shift, e.v + shift);
  }
  return Graph::from_edge_list(a.order() + b.order(), pairs);
}

Graph relabel(const Graph &g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) {
    throw GraphError("relabel: permutation length does not match vertex count");
  }
  std::vector<char> hit(g.order(), 0);
  for (Vertex v : perm) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.order() || hit[static_cast<std::size_t>(v)]++) {
      throw GraphError("relabel: not a permutation of 0..n-1");
    }
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(g.size());
  for (const auto &e : g.edges()) {
    pairs.emplace_back(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  }
  return Graph::from_edge_list(g.order(), pairs);
}

}  // namespace harmonium
