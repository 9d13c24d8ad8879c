#include "harmonium/heuristics.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace harmonium {

namespace {

// Partial colouring that only accepts colours keeping it extendable.
class PartialColoring {
 public:
  explicit PartialColoring(const Graph &g) : g_(g), colors_(g.order(), 0) {}

  bool admissible(Vertex v, Color c) const {
    for (Vertex x : g_.neighbors(v)) {
      const Color cx = colors_[static_cast<std::size_t>(x)];
      if (cx == c) {
        return false;
      }
      if (cx != 0 && pairs_.contains(ColorPair::of(c, cx))) {
        return false;
      }
      for (Vertex y : g_.neighbors(x)) {
        if (y != v && colors_[static_cast<std::size_t>(y)] == c) {
          return false;
        }
      }
    }
    return true;
  }

  void set(Vertex v, Color c) {
    colors_[static_cast<std::size_t>(v)] = c;
    for (Vertex x : g_.neighbors(v)) {
      const Color cx = colors_[static_cast<std::size_t>(x)];
      if (cx != 0) {
        pairs_.insert(ColorPair::of(c, cx));
      }
    }
  }

  Color smallest_from(Vertex v, Color first) const {
    Color c = first;
    while (!admissible(v, c)) {
      ++c;
    }
    return c;
  }

  Coloring finish() && { return Coloring(std::move(colors_)); }

 private:
  const Graph &g_;
  std::vector<Color> colors_;
  std::set<ColorPair> pairs_;
};

using Mask = std::uint32_t;

void require_small(const Graph &g, const char *what) {
  if (g.order() > kExactSearchMaxOrder) {
    throw GraphError(std::string(what) + " is limited to " + std::to_string(kExactSearchMaxOrder) +
                     " vertices, got " + std::to_string(g.order()));
  }
}

std::vector<Mask> neighbor_masks(const Graph &g) {
  std::vector<Mask> out(g.order(), 0);
  for (const auto &e : g.edges()) {
    out[static_cast<std::size_t>(e.u)] |= Mask{1} << e.v;
    out[static_cast<std::size_t>(e.v)] |= Mask{1} << e.u;
  }
  return out;
}

std::vector<Vertex> mask_to_vertices(Mask m) {
  std::vector<Vertex> out;
  for (Vertex v = 0; m != 0; ++v, m >>= 1) {
    if (m & 1u) {
      out.push_back(v);
    }
  }
  return out;
}

void cover_search(const Graph &g, Mask chosen, int size, Mask &best, int &best_size) {
  if (size >= best_size) {
    return;
  }
  for (const auto &e : g.edges()) {
    if (!(chosen >> e.u & 1u) && !(chosen >> e.v & 1u)) {
      cover_search(g, chosen | Mask{1} << e.u, size + 1, best, best_size);
      cover_search(g, chosen | Mask{1} << e.v, size + 1, best, best_size);
      return;
    }
  }
  best = chosen;
  best_size = size;
}

void mis_search(const std::vector<Mask> &nbr, Mask candidates, Mask chosen, Mask &best) {
  if (std::popcount(chosen) + std::popcount(candidates) <= std::popcount(best)) {
    return;
  }
  if (candidates == 0) {
    best = chosen;
    return;
  }
  const int v = std::countr_zero(candidates);
  const Mask bit = Mask{1} << v;
  mis_search(nbr, candidates & ~bit & ~nbr[static_cast<std::size_t>(v)], chosen | bit, best);
  if ((nbr[static_cast<std::size_t>(v)] & candidates) != 0) {
    mis_search(nbr, candidates & ~bit, chosen, best);
  }
}

}  // namespace

std::vector<Vertex> index_order(std::size_t n) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

Coloring greedy(const Graph &g, std::span<const Vertex> order) {
  std::vector<char> seen(g.order(), 0);
  for (Vertex v : order) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.order() || seen[static_cast<std::size_t>(v)]) {
      throw GraphError("greedy: order is not a permutation of the vertices");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
  if (order.size() != g.order()) {
    throw GraphError("greedy: order is not a permutation of the vertices");
  }
  PartialColoring partial(g);
  for (Vertex v : order) {
    partial.set(v, partial.smallest_from(v, 1));
  }
  return std::move(partial).finish();
}

Coloring adversarial_good_coloring(int N) {
  const auto t = adversarial_tree(N);
  PartialColoring partial(t.tree);
  partial.set(t.a(0), 1);
  for (int i = 2; i <= N - 1; ++i) {
    partial.set(t.a(i), i + 1);
    partial.set(t.b(i), N + i - 1);
    Color next = 1;
    for (int j = 1; j <= N - 1; ++j, ++next) {
      if (next == i + 1) {
        ++next;
      }
      partial.set(t.c(i, j), next);
    }
  }
  partial.set(t.a(1), partial.smallest_from(t.a(1), 1));
  return std::move(partial).finish();
}

bool is_vertex_cover(const Graph &g, std::span<const Vertex> cover) {
  std::vector<char> in(g.order(), 0);
  for (Vertex v : cover) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.order()) {
      return false;
    }
    in[static_cast<std::size_t>(v)] = 1;
  }
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge &e) {
    return in[static_cast<std::size_t>(e.u)] || in[static_cast<std::size_t>(e.v)];
  });
}

bool is_independent_set(const Graph &g, std::span<const Vertex> set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (set[i] == set[j] || g.adjacent(set[i], set[j])) {
        return false;
      }
    }
  }
  return true;
}

VertexCoverResult min_vertex_cover(const Graph &g, CoverMethod method) {
  VertexCoverResult r;
  r.method = method;
  if (method == CoverMethod::matching_2approx) {
    std::vector<char> in(g.order(), 0);
    for (const auto &e : g.edges()) {
      if (!in[static_cast<std::size_t>(e.u)] && !in[static_cast<std::size_t>(e.v)]) {
        in[static_cast<std::size_t>(e.u)] = 1;
        in[static_cast<std::size_t>(e.v)] = 1;
      }
    }
    for (std::size_t v = 0; v < in.size(); ++v) {
      if (in[v]) {
        r.cover.push_back(static_cast<Vertex>(v));
      }
    }
  } else {
    require_small(g, "exact vertex cover");
    Mask best = 0;
    int best_size = static_cast<int>(g.order()) + 1;
    cover_search(g, 0, 0, best, best_size);
    r.cover = mask_to_vertices(best);
  }
  r.size = r.cover.size();
  return r;
}

std::vector<Vertex> max_independent_set(const Graph &g) {
  require_small(g, "maximum independent set");
  const auto nbr = neighbor_masks(g);
  Mask best = 0;
  mis_search(nbr, (Mask{1} << g.order()) - 1, 0, best);
  return mask_to_vertices(best);
}

Coloring vc_coloring(const Graph &g, const VertexCoverResult &cover) {
  if (!is_vertex_cover(g, cover.cover)) {
    throw GraphError("vc_coloring: the given set is not a vertex cover");
  }
  std::vector<char> in(g.order(), 0);
  PartialColoring partial(g);
  Color next = 1;
  for (Vertex v : cover.cover) {
    if (!in[static_cast<std::size_t>(v)]) {
      in[static_cast<std::size_t>(v)] = 1;
      partial.set(v, next++);
    }
  }
  const Color first_free = next;
  const auto delta = static_cast<Color>(g.max_degree());
  const Color ceiling = first_free - 1 + delta * delta - delta + 1;
  for (Vertex v = 0; static_cast<std::size_t>(v) < g.order(); ++v) {
    if (in[static_cast<std::size_t>(v)]) {
      continue;
    }
    const Color c = partial.smallest_from(v, first_free);
    if (c > ceiling) {
      throw std::logic_error("vc_coloring: no colour in the guaranteed range for vertex " + std::to_string(v));
    }
    partial.set(v, c);
  }
  return std::move(partial).finish();
}

}  // namespace harmonium
