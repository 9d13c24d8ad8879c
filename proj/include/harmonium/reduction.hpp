#pragma once

#include <vector>

#include "harmonium/graph.hpp"
#include "harmonium/solver.hpp"
#include "harmonium/verify.hpp"

namespace harmonium {

/// Independent set -> harmonious colouring gadget.
///
/// Gadget numbering, for a source graph on n vertices:
///   0..n-1        the source vertices,
///   n, n+1, n+2   apex triangle v1 v2 v3, each joined to every source vertex,
///   n+3..2n+2     a separate clique on n vertices.
/// The gadget admits a harmonious colouring with 2n + 3 - k colours exactly
/// when the source graph has an independent set of size k.
struct ReductionInstance {
  Graph source;
  Graph gadget;
  int k = 0;
  int threshold = 0;

  Vertex apex(int i) const { return static_cast<Vertex>(source.order()) + i - 1; }
  Vertex clique(int i) const { return static_cast<Vertex>(source.order()) + 3 + i; }
};

ReductionInstance build_reduction(const Graph &g, int k);

/// Source vertex v -> v+1, apexes n+1..n+3; the first k clique vertices
/// reuse the colours of `is_set` (ascending), the rest get n+4 onward.
Coloring forward_coloring(const ReductionInstance &inst, std::vector<Vertex> is_set);

struct EquivalenceReport {
  bool is_exists = false;
  bool colorable_at_threshold = false;
  bool equivalent = false;
  std::size_t independence_number = 0;
  std::uint64_t solver_nodes = 0;
};

inline constexpr std::size_t kEquivalenceMaxOrder = 6;

/// Decides both sides exactly: the independence number by search, the
/// threshold colouring by exists_k on the gadget (no budget).
EquivalenceReport verify_equivalence(const Graph &g, int k, const SolverConfig &cfg = {});

/// Hardness ratio (2 - s) / (2 - c) implied by a GapIS(c, s) instance.
double gap_ratio(double c, double s);

}  // namespace harmonium
