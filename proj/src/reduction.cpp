#include "harmonium/reduction.hpp"

#include <algorithm>
#include <string>

#include "harmonium/heuristics.hpp"

namespace harmonium {

ReductionInstance build_reduction(const Graph &g, int k) {
  const int n = static_cast<int>(g.order());
  if (k < 1 || k > n) {
    throw GraphError("reduction needs 1 <= k <= " + std::to_string(n) + ", got " + std::to_string(k));
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const auto &e : g.edges()) {
    pairs.emplace_back(e.u, e.v);
  }
  for (int a = 0; a < 3; ++a) {
    for (Vertex v = 0; v < n; ++v) {
      pairs.emplace_back(n + a, v);
    }
    for (int b = a + 1; b < 3; ++b) {
      pairs.emplace_back(n + a, n + b);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      pairs.emplace_back(n + 3 + i, n + 3 + j);
    }
  }
  ReductionInstance inst;
  inst.source = g;
  inst.gadget = Graph::from_edge_list(static_cast<std::size_t>(2 * n + 3), pairs);
  inst.k = k;
  inst.threshold = 2 * n + 3 - k;
  return inst;
}

Coloring forward_coloring(const ReductionInstance &inst, std::vector<Vertex> is_set) {
  const int n = static_cast<int>(inst.source.order());
  std::sort(is_set.begin(), is_set.end());
  if (static_cast<int>(is_set.size()) != inst.k) {
    throw GraphError("forward_coloring needs an independent set of size " + std::to_string(inst.k));
  }
  if (!is_independent_set(inst.source, is_set) ||
      std::any_of(is_set.begin(), is_set.end(), [n](Vertex v) { return v < 0 || v >= n; })) {
    throw GraphError("forward_coloring: vertex set is not independent in the source graph");
  }
  std::vector<Color> c(inst.gadget.order());
  for (Vertex v = 0; v < n + 3; ++v) {
    c[static_cast<std::size_t>(v)] = v + 1;
  }
  Color fresh = n + 4;
  for (int i = 0; i < n; ++i) {
    c[static_cast<std::size_t>(inst.clique(i))] =
        i < inst.k ? is_set[static_cast<std::size_t>(i)] + 1 : fresh++;
  }
  return Coloring(std::move(c));
}

EquivalenceReport verify_equivalence(const Graph &g, int k, const SolverConfig &cfg) {
  if (g.order() > kEquivalenceMaxOrder) {
    throw GraphError("verify_equivalence is limited to " + std::to_string(kEquivalenceMaxOrder) +
                     " source vertices, got " + std::to_string(g.order()));
  }
  const auto inst = build_reduction(g, k);
  EquivalenceReport r;
  r.independence_number = max_independent_set(g).size();
  r.is_exists = r.independence_number >= static_cast<std::size_t>(k);

  SolverConfig exhaustive = cfg;
  exhaustive.node_budget.reset();
  exhaustive.time_budget.reset();
  const auto res = exists_k(inst.gadget, inst.threshold, exhaustive);
  r.solver_nodes = res.nodes;
  r.colorable_at_threshold = res.outcome == Outcome::feasible;
  r.equivalent = r.is_exists == r.colorable_at_threshold;
  return r;
}

double gap_ratio(double c, double s) { return (2.0 - s) / (2.0 - c); }

}  // namespace harmonium
