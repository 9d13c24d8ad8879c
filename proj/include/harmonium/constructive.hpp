#pragma once

#include <vector>

#include "harmonium/graph.hpp"
#include "harmonium/verify.hpp"

namespace harmonium {

/// h(C_n) for 3 <= n <= 16, computed once by the exact solver and memoised
/// (thread-safe).
inline constexpr int kCycleMaxLength = 16;
int h_cycle(int n);

/// Optimal colouring of C_n (solver witness), colours 1..h_cycle(n).
Coloring cycle_coloring(int n);

/// (n+1)-colouring of the sunflower Sf_n, n >= 7: hub 1, v_i -> i+1, and
/// petal u_i takes the colour of v_{i-2} (indices mod n), i.e. the rim colour
/// sequence restarted at the first petal at distance 3 from v_1.
Coloring color_sunflower(int n);

/// Sun S_n: v_i -> i; u_j -> n+1 (j odd) / n+2 (j even); for odd n the last
/// petal u_n gets n+3.
Coloring color_sun(int n);

/// Closed sun: all distinct for n <= 5; otherwise the clique gets 1..n and
/// the outer cycle an optimal C_n colouring shifted by n.
Coloring color_closed_sun(int n);

enum class LollipopCase { even_even, even_odd, odd_even, odd_odd_big_t, odd_odd_small_t };

std::string_view to_string(LollipopCase c) noexcept;

struct LollipopPlan {
  int n = 0;
  int m = 0;
  /// Least t with m <= 1 + n t + t(t-1)/2.
  int t = 0;
  /// n t + t(t-1)/2.
  int k = 0;
  /// Parity case of (t, n), named t-parity first.
  LollipopCase parity_case = LollipopCase::odd_odd_small_t;
  /// h = n + t + 1 rather than n + t.
  bool extra_color = false;
  /// r = n + t (+1): the colour count and the order of the host clique.
  int r = 0;
  /// Edges deleted from K_r - E(<[n]>) so an Euler trail from colour 1
  /// exists; vertices are colour labels 1..r.
  std::vector<Edge> removed_edges;
  /// m colour labels; trail[0] == 1, consecutive labels form distinct edges
  /// outside the clique on 1..n and outside removed_edges.
  std::vector<int> trail;

  /// Colouring of lollipop(n, m): clique vertex i -> i+1, path vertex j
  /// (j-th vertex after the shared one) -> trail[j].
  Coloring coloring() const;
};

/// Least t >= 1 with m <= 1 + n t + t(t-1)/2.
int lollipop_t(int n, int m);

/// Closed-form h(L_{n,m}) by the four parity cases.
int lollipop_h(int n, int m);

LollipopPlan lollipop_plan(int n, int m);

/// Eulerian trail (Hierholzer) through every edge of `g` starting at
/// `start`. Requires all edges in one component and either zero odd-degree
/// vertices or exactly two with `start` among them; throws std::logic_error
/// otherwise.
std::vector<Vertex> euler_trail(const Graph &g, Vertex start);

}  // namespace harmonium
