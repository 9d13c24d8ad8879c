#include "harmonium/constructive.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "harmonium/families.hpp"
#include "harmonium/solver.hpp"

namespace harmonium {

namespace {

std::mutex cycle_lock;
std::map<int, Coloring> cycle_memo;

const Coloring &cycle_entry(int n) {
  if (n < 3 || n > kCycleMaxLength) {
    throw GraphError("cycle length " + std::to_string(n) + " outside the supported range 3.." +
                     std::to_string(kCycleMaxLength));
  }
  std::lock_guard lock(cycle_lock);
  auto it = cycle_memo.find(n);
  if (it == cycle_memo.end()) {
    const auto res = solve(generate({Family::cycle, n}));
    it = cycle_memo.emplace(n, res.witness).first;
  }
  return it->second;
}

void require_n(bool ok, const std::string &what) {
  if (!ok) {
    throw GraphError(what);
  }
}

LollipopCase classify(int t, int n, bool big_t) {
  if (t % 2 == 0) {
    return n % 2 == 0 ? LollipopCase::even_even : LollipopCase::even_odd;
  }
  if (n % 2 == 0) {
    return LollipopCase::odd_even;
  }
  return big_t ? LollipopCase::odd_odd_big_t : LollipopCase::odd_odd_small_t;
}

// Edges to drop from K_{n+t} - E(<[n]>) so that the rest has an Euler trail
// starting at 1 (labels 1..n+t).
std::vector<Edge> parity_repair(int n, int t) {
  std::vector<Edge> out;
  switch (classify(t, n, t >= n - 2)) {
    case LollipopCase::even_odd:
      break;
    case LollipopCase::even_even:
      for (int j = n + 1; j < n + t; j += 2) {
        out.push_back({j, j + 1});
      }
      break;
    case LollipopCase::odd_even:
      for (int i = 3; i <= n; ++i) {
        out.push_back({i, n + 1});
      }
      break;
    case LollipopCase::odd_odd_big_t:
      for (int i = 3; i <= n; ++i) {
        out.push_back({i, n + i - 2});
      }
      for (int j = 2 * n - 1; j < n + t; j += 2) {
        out.push_back({j, j + 1});
      }
      break;
    case LollipopCase::odd_odd_small_t:
      for (int i = 3; i <= t + 1; ++i) {
        out.push_back({i, n + i - 2});
      }
      for (int i = t + 2; i <= n; ++i) {
        out.push_back({i, n + t});
      }
      break;
  }
  return out;
}

}  // namespace

int h_cycle(int n) { return static_cast<int>(cycle_entry(n).num_colors()); }

Coloring cycle_coloring(int n) { return cycle_entry(n); }

Coloring color_sunflower(int n) {
  require_n(n >= 7, "color_sunflower needs n >= 7 (smaller sunflowers are solved exactly)");
  std::vector<Color> c(static_cast<std::size_t>(2 * n + 1));
  c[0] = 1;
  for (int i = 1; i <= n; ++i) {
    c[static_cast<std::size_t>(i)] = i + 1;
  }
  for (int i = 1; i <= n; ++i) {
    const int rim = ((i - 3) % n + n) % n + 1;  // v_{i-2}
    c[static_cast<std::size_t>(n + i)] = c[static_cast<std::size_t>(rim)];
  }
  return Coloring(std::move(c));
}

Coloring color_sun(int n) {
  require_n(n >= 3, "color_sun needs n >= 3");
  std::vector<Color> c(static_cast<std::size_t>(2 * n));
  for (int i = 1; i <= n; ++i) {
    c[static_cast<std::size_t>(i - 1)] = i;
  }
  for (int j = 1; j <= n; ++j) {
    c[static_cast<std::size_t>(n + j - 1)] = (j % 2 == 1) ? n + 1 : n + 2;
  }
  if (n % 2 == 1) {
    c[static_cast<std::size_t>(2 * n - 1)] = n + 3;
  }
  return Coloring(std::move(c));
}

Coloring color_closed_sun(int n) {
  require_n(n >= 3, "color_closed_sun needs n >= 3");
  if (n <= 5) {
    return trivial_coloring(static_cast<std::size_t>(2 * n));
  }
  const Coloring outer = cycle_coloring(n);
  std::vector<Color> c(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    c[static_cast<std::size_t>(i)] = i + 1;
    c[static_cast<std::size_t>(n + i)] = n + outer[i];
  }
  return Coloring(std::move(c));
}

std::string_view to_string(LollipopCase c) noexcept {
  switch (c) {
    case LollipopCase::even_even: return "even_even";
    case LollipopCase::even_odd: return "even_odd";
    case LollipopCase::odd_even: return "odd_even";
    case LollipopCase::odd_odd_big_t: return "odd_odd_big_t";
    case LollipopCase::odd_odd_small_t: return "odd_odd_small_t";
  }
  return "?";
}

int lollipop_t(int n, int m) {
  require_n(n >= 3 && m >= 2, "lollipop needs n >= 3 and m >= 2");
  int t = 1;
  while (m > 1 + n * t + t * (t - 1) / 2) {
    ++t;
  }
  return t;
}

int lollipop_h(int n, int m) {
  const int t = lollipop_t(n, m);
  const int k = n * t + t * (t - 1) / 2;
  bool fits = false;
  switch (classify(t, n, t >= n - 2)) {
    case LollipopCase::even_odd: fits = true; break;
    case LollipopCase::even_even: fits = m <= 1 + k - t / 2; break;
    case LollipopCase::odd_even: fits = m <= 1 + k - (n - 2); break;
    case LollipopCase::odd_odd_big_t:
    case LollipopCase::odd_odd_small_t:
      fits = m <= 1 + k - (n - 2 + std::max((t - (n - 2)) / 2, 0));
      break;
  }
  return fits ? n + t : n + t + 1;
}

LollipopPlan lollipop_plan(int n, int m) {
  LollipopPlan plan;
  plan.n = n;
  plan.m = m;
  plan.t = lollipop_t(n, m);
  plan.k = n * plan.t + plan.t * (plan.t - 1) / 2;
  plan.parity_case = classify(plan.t, n, plan.t >= n - 2);
  plan.r = lollipop_h(n, m);
  plan.extra_color = plan.r == n + plan.t + 1;
  plan.removed_edges = parity_repair(n, plan.r - n);

  // Residual host graph on labels 1..r, stored 0-based.
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (int a = 1; a <= plan.r; ++a) {
    for (int b = std::max(a + 1, n + 1); b <= plan.r; ++b) {
      if (std::find(plan.removed_edges.begin(), plan.removed_edges.end(), Edge{a, b}) == plan.removed_edges.end()) {
        pairs.emplace_back(a - 1, b - 1);
      }
    }
  }
  const Graph host = Graph::from_edge_list(static_cast<std::size_t>(plan.r), pairs);
  const auto walk = euler_trail(host, 0);
  if (walk.size() < static_cast<std::size_t>(m)) {
    throw std::logic_error("lollipop_plan(" + std::to_string(n) + "," + std::to_string(m) + "): trail has only " +
                           std::to_string(walk.size()) + " vertices");
  }
  plan.trail.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    plan.trail.push_back(walk[static_cast<std::size_t>(j)] + 1);
  }
  return plan;
}

Coloring LollipopPlan::coloring() const {
  std::vector<Color> c(static_cast<std::size_t>(n + m - 1));
  for (int i = 0; i < n; ++i) {
    c[static_cast<std::size_t>(i)] = i + 1;
  }
  for (int j = 1; j < m; ++j) {
    c[static_cast<std::size_t>(n + j - 1)] = trail[static_cast<std::size_t>(j)];
  }
  return Coloring(std::move(c));
}

std::vector<Vertex> euler_trail(const Graph &g, Vertex start) {
  const std::size_t n = g.order();
  std::vector<Vertex> odd;
  for (Vertex v = 0; static_cast<std::size_t>(v) < n; ++v) {
    if (g.degree(v) % 2 == 1) {
      odd.push_back(v);
    }
  }
  if (!(odd.empty() || (odd.size() == 2 && (odd[0] == start || odd[1] == start)))) {
    throw std::logic_error("euler_trail: degree parities do not admit a trail from vertex " + std::to_string(start));
  }
  // Hierholzer with per-vertex cursors over an edge-id incidence list.
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> inc(n);
  for (std::size_t id = 0; id < g.size(); ++id) {
    const auto &e = g.edges()[id];
    inc[static_cast<std::size_t>(e.u)].emplace_back(e.v, id);
    inc[static_cast<std::size_t>(e.v)].emplace_back(e.u, id);
  }
  std::vector<char> used(g.size(), 0);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<Vertex> stack{start};
  std::vector<Vertex> trail;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    auto &cur = cursor[static_cast<std::size_t>(v)];
    const auto &row = inc[static_cast<std::size_t>(v)];
    while (cur < row.size() && used[row[cur].second]) {
      ++cur;
    }
    if (cur == row.size()) {
      trail.push_back(v);
      stack.pop_back();
    } else {
      used[row[cur].second] = 1;
      stack.push_back(row[cur].first);
    }
  }
  if (trail.size() != g.size() + 1) {
    throw std::logic_error("euler_trail: edges are not all reachable from vertex " + std::to_string(start));
  }
  std::reverse(trail.begin(), trail.end());
  return trail;
}

}  // namespace harmonium
