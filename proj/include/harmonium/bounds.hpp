#pragma once

#include <optional>

#include "harmonium/graph.hpp"

namespace harmonium {

/// Lower bounds on h(G), plus two classical upper bounds for context.
struct BoundsReport {
  /// Smallest k with k(k-1)/2 >= m, i.e. ceil((1 + sqrt(8m + 1)) / 2).
  int size_bound = 0;
  /// Delta + 1.
  int delta_bound = 0;
  /// max_v |N2[v]| over the vertices whose N2[v] is pairwise within
  /// distance 2 (then every member needs its own colour), else |N[v]|.
  /// Equals n on diameter-2 graphs.
  int n2_bound = 0;
  /// 7 for 3-regular graphs of diameter exactly 3, absent otherwise.
  std::optional<int> regular33_bound;
  int combined = 0;

  /// (Delta^2 + 1) * ceil(sqrt(n)).
  double lee_mitchem_upper = 0.0;
  /// 2 * Delta * sqrt(n - 1), defined for n >= 2 with at least one edge.
  std::optional<double> mcdiarmid_upper;
};

/// Smallest k with C(k, 2) >= m (k >= 1).
int min_colors_for_edges(std::size_t m);

BoundsReport lower_bounds(const Graph &g);

}  // namespace harmonium
