#include "harmonium/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace harmonium {

int min_colors_for_edges(std::size_t m) {
  std::size_t k = 1;
  while (k * (k - 1) / 2 < m) {
    ++k;
  }
  return static_cast<int>(k);
}

BoundsReport lower_bounds(const Graph &g) {
  BoundsReport r;
  const std::size_t n = g.order();
  if (n == 0) {
    return r;
  }
  const auto st = stats(g);
  r.size_bound = min_colors_for_edges(st.m);
  r.delta_bound = static_cast<int>(st.max_degree) + 1;
  std::vector<std::vector<Vertex>> ball(n);
  for (Vertex v = 0; static_cast<std::size_t>(v) < n; ++v) {
    ball[static_cast<std::size_t>(v)] = closed_n2(g, v);
  }
  for (Vertex v = 0; static_cast<std::size_t>(v) < n; ++v) {
    const auto &b = ball[static_cast<std::size_t>(v)];
    const bool pairwise_close = std::all_of(b.begin(), b.end(), [&](Vertex a) {
      const auto &ba = ball[static_cast<std::size_t>(a)];
      return std::includes(ba.begin(), ba.end(), b.begin(), b.end());
    });
    const auto own = pairwise_close ? b.size() : g.degree(v) + 1;
    r.n2_bound = std::max(r.n2_bound, static_cast<int>(own));
  }
  const bool cubic = std::all_of(st.degree_sequence.begin(), st.degree_sequence.end(),
                                 [](std::size_t d) { return d == 3; });
  if (cubic && st.diameter == std::optional<std::size_t>(3)) {
    r.regular33_bound = 7;
  }
  r.combined = std::max({r.size_bound, r.delta_bound, r.n2_bound, r.regular33_bound.value_or(0)});

  const double delta = static_cast<double>(st.max_degree);
  r.lee_mitchem_upper = (delta * delta + 1.0) * std::ceil(std::sqrt(static_cast<double>(n)));
  if (n >= 2 && st.m > 0) {
    r.mcdiarmid_upper = 2.0 * delta * std::sqrt(static_cast<double>(n - 1));
  }
  return r;
}

}  // namespace harmonium
