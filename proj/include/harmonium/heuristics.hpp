#pragma once

#include <span>
#include <vector>

#include "harmonium/families.hpp"
#include "harmonium/graph.hpp"
#include "harmonium/verify.hpp"

namespace harmonium {

/// Smallest-colour greedy over an explicit vertex order.
///
/// A colour c is admissible for v when no already coloured vertex within
/// distance 2 of v has colour c and no pair {c, c(u)} for a coloured
/// neighbour u is taken yet. This keeps every partial colouring extendable,
/// so the output is always harmonious. Throws GraphError when `order` is not
/// a permutation of the vertices.
Coloring greedy(const Graph &g, std::span<const Vertex> order);

/// Identity order 0..n-1.
std::vector<Vertex> index_order(std::size_t n);

/// The (2N-2)-colouring of adversarial_tree(N): root 1, a_i -> i+1 for
/// i >= 2, b_i -> N+i-1, children of b_i take {1..N} minus the colour of a_i,
/// and a_1 takes the smallest admissible colour.
Coloring adversarial_good_coloring(int N);

enum class CoverMethod { exact, matching_2approx };

struct VertexCoverResult {
  std::vector<Vertex> cover;  // ascending
  std::size_t size = 0;
  CoverMethod method = CoverMethod::exact;
};

bool is_vertex_cover(const Graph &g, std::span<const Vertex> cover);
bool is_independent_set(const Graph &g, std::span<const Vertex> set);

inline constexpr std::size_t kExactSearchMaxOrder = 20;

/// Exact mode branches on an uncovered edge (n <= 20). Approximate mode takes
/// both endpoints of a maximal matching built in ascending edge order.
VertexCoverResult min_vertex_cover(const Graph &g, CoverMethod method);

/// Maximum independent set by include/exclude branching (n <= 20).
std::vector<Vertex> max_independent_set(const Graph &g);

/// Cover vertices get 1..|cover| in ascending id order; every other vertex,
/// in ascending id order, takes the smallest admissible colour from
/// |cover|+1 onward. At most |cover| + Delta^2 - Delta + 1 colours are used;
/// needing more is reported as std::logic_error.
Coloring vc_coloring(const Graph &g, const VertexCoverResult &cover);

}  // namespace harmonium
