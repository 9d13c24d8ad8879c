#include "harmonium/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "harmonium/bounds.hpp"

namespace harmonium {

namespace {

using Clock = std::chrono::steady_clock;

// Shared between the workers of one exists_k call.
struct Budget {
  std::optional<std::uint64_t> max_nodes;
  std::optional<Clock::time_point> deadline;
  std::atomic<std::uint64_t> spent{0};
  std::atomic<bool> found{false};
  std::atomic<bool> exhausted{false};

  bool over() {
    if (max_nodes && spent.load(std::memory_order_relaxed) >= *max_nodes) {
      return true;
    }
    return deadline && Clock::now() >= *deadline;
  }
};

int pair_index(int a, int b) {
  if (a > b) {
    std::swap(a, b);
  }
  return (b - 1) * (b - 2) / 2 + (a - 1);
}

// Static structure of one (graph, k, order) search; read-only once built.
struct Problem {
  int n = 0;
  int k = 0;
  int m = 0;
  std::vector<Vertex> order;
  // Per position: earlier positions adjacent to it, and earlier positions at
  // distance <= 2 from it.
  std::vector<std::vector<int>> back_nbrs;
  std::vector<std::vector<int>> back_n2;
  // Neighbours at later positions (edges still to be coloured).
  std::vector<int> forward_degree;

  Problem(const Graph &g, int colors, VertexOrder how) : n(static_cast<int>(g.order())), k(colors), m(static_cast<int>(g.size())) {
    order.resize(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    if (how == VertexOrder::degree) {
      std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    }
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    }
    back_nbrs.resize(static_cast<std::size_t>(n));
    back_n2.resize(static_cast<std::size_t>(n));
    forward_degree.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const Vertex v = order[static_cast<std::size_t>(i)];
      for (Vertex u : g.neighbors(v)) {
        const int j = pos[static_cast<std::size_t>(u)];
        if (j < i) {
          back_nbrs[static_cast<std::size_t>(i)].push_back(j);
        } else {
          ++forward_degree[static_cast<std::size_t>(i)];
        }
      }
      for (Vertex u : closed_n2(g, v)) {
        const int j = pos[static_cast<std::size_t>(u)];
        if (j < i) {
          back_n2[static_cast<std::size_t>(i)].push_back(j);
        }
      }
    }
  }

  int total_pairs() const { return k * (k - 1) / 2; }
};

// Mutable search state over one Problem. Colours are 1..k, 0 = uncoloured.
class Searcher {
 public:
  Searcher(const Problem &p, Budget &b)
      : p_(p),
        budget_(b),
        colors_(static_cast<std::size_t>(p.n), 0),
        max_at_(static_cast<std::size_t>(p.n), 0),
        used_(static_cast<std::size_t>(std::max(p.total_pairs(), 0)), 0),
        pairs_with_(static_cast<std::size_t>(p.k) + 1, 0),
        demand_(static_cast<std::size_t>(p.k) + 1, 0) {}

  const std::vector<int> &colors() const { return colors_; }
  std::uint64_t nodes() const { return nodes_ + pending_; }
  bool aborted() const { return aborted_; }

  int max_before(int pos) const { return pos == 0 ? 0 : max_at_[static_cast<std::size_t>(pos - 1)]; }

  bool assign(int pos, int c) {
    const auto i = static_cast<std::size_t>(pos);
    for (int q : p_.back_n2[i]) {
      if (colors_[static_cast<std::size_t>(q)] == c) {
        return false;
      }
    }
    for (int q : p_.back_nbrs[i]) {
      if (used_[static_cast<std::size_t>(pair_index(c, colors_[static_cast<std::size_t>(q)]))]) {
        return false;
      }
    }
    // Every edge from c to a later neighbour needs its own free pair {c, x}.
    const int closing = static_cast<int>(p_.back_nbrs[i].size());
    const int c_pairs = pairs_with_[static_cast<std::size_t>(c)] + closing;
    const int c_demand = demand_[static_cast<std::size_t>(c)] + p_.forward_degree[i];
    if (c_demand > (p_.k - 1) - c_pairs) {
      return false;
    }
    // Global form of the same count: uncoloured edges versus free pairs.
    if (p_.m - (colored_edges_ + closing) > p_.total_pairs() - (used_pairs_ + closing)) {
      return false;
    }
    for (int q : p_.back_nbrs[i]) {
      const int a = colors_[static_cast<std::size_t>(q)];
      used_[static_cast<std::size_t>(pair_index(c, a))] = 1;
      ++pairs_with_[static_cast<std::size_t>(a)];
      --demand_[static_cast<std::size_t>(a)];
    }
    pairs_with_[static_cast<std::size_t>(c)] = c_pairs;
    demand_[static_cast<std::size_t>(c)] = c_demand;
    used_pairs_ += closing;
    colored_edges_ += closing;
    colors_[i] = c;
    max_at_[i] = std::max(max_before(pos), c);
    return true;
  }

  void unassign(int pos) {
    const auto i = static_cast<std::size_t>(pos);
    const int c = colors_[i];
    const int closing = static_cast<int>(p_.back_nbrs[i].size());
    for (int q : p_.back_nbrs[i]) {
      const int a = colors_[static_cast<std::size_t>(q)];
      used_[static_cast<std::size_t>(pair_index(c, a))] = 0;
      --pairs_with_[static_cast<std::size_t>(a)];
      ++demand_[static_cast<std::size_t>(a)];
    }
    pairs_with_[static_cast<std::size_t>(c)] -= closing;
    demand_[static_cast<std::size_t>(c)] -= p_.forward_degree[i];
    used_pairs_ -= closing;
    colored_edges_ -= closing;
    colors_[i] = 0;
  }

  /// Depth-first search from `pos`; true when every vertex is coloured.
  bool dfs(int pos) {
    if (pos == p_.n) {
      return true;
    }
    const int limit = std::min(max_before(pos) + 1, p_.k);
    for (int c = 1; c <= limit; ++c) {
      if (!assign(pos, c)) {
        continue;
      }
      if (tick()) {
        unassign(pos);
        return false;
      }
      if (dfs(pos + 1)) {
        return true;
      }
      unassign(pos);
      if (aborted_) {
        return false;
      }
    }
    return false;
  }

  /// Collects every consistent assignment of positions [0, depth).
  void prefixes(int pos, int depth, std::vector<std::vector<int>> &out) {
    if (pos == depth) {
      out.emplace_back(colors_.begin(), colors_.begin() + depth);
      return;
    }
    const int limit = std::min(max_before(pos) + 1, p_.k);
    for (int c = 1; c <= limit; ++c) {
      if (assign(pos, c)) {
        ++pending_;
        prefixes(pos + 1, depth, out);
        unassign(pos);
      }
    }
  }

  void flush() {
    nodes_ += pending_;
    budget_.spent.fetch_add(pending_, std::memory_order_relaxed);
    pending_ = 0;
  }

 private:
  // Counts one node; returns true when the search must stop.
  bool tick() {
    if (++pending_ < kPollEvery) {
      return false;
    }
    flush();
    if (budget_.found.load(std::memory_order_relaxed)) {
      aborted_ = true;
    } else if (budget_.over()) {
      budget_.exhausted = true;
      aborted_ = true;
    }
    return aborted_;
  }

  static constexpr std::uint64_t kPollEvery = 1024;

  const Problem &p_;
  Budget &budget_;
  std::vector<int> colors_;
  std::vector<int> max_at_;
  std::vector<char> used_;
  std::vector<int> pairs_with_;
  std::vector<int> demand_;
  int used_pairs_ = 0;
  int colored_edges_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t pending_ = 0;
  bool aborted_ = false;
};

Coloring to_coloring(const Problem &p, std::span<const int> by_position) {
  std::vector<Color> out(static_cast<std::size_t>(p.n));
  for (int i = 0; i < p.n; ++i) {
    out[static_cast<std::size_t>(p.order[static_cast<std::size_t>(i)])] = by_position[static_cast<std::size_t>(i)];
  }
  return Coloring(std::move(out));
}

ExistsResult run_sequential(const Problem &p, Budget &budget) {
  ExistsResult r;
  Searcher s(p, budget);
  const bool found = s.dfs(0);
  s.flush();
  r.nodes = s.nodes();
  if (found) {
    r.outcome = Outcome::feasible;
    r.witness = to_coloring(p, s.colors());
  } else {
    r.outcome = s.aborted() ? Outcome::budget_exhausted : Outcome::infeasible;
  }
  return r;
}

ExistsResult run_parallel(const Problem &p, Budget &budget, unsigned threads) {
  ExistsResult r;
  // Split on the colour choices of the first branching positions, deep enough
  // to give every worker several subtrees.
  std::vector<std::vector<int>> roots;
  int depth = 0;
  {
    Searcher s(p, budget);
    while (depth < p.n && roots.size() < 4 * static_cast<std::size_t>(threads)) {
      ++depth;
      roots.clear();
      s.prefixes(0, depth, roots);
      if (roots.empty()) {
        break;
      }
    }
    s.flush();
    r.nodes += s.nodes();
  }
  if (roots.empty()) {
    r.outcome = Outcome::infeasible;
    return r;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> nodes{0};
  std::vector<std::vector<int>> winner;
  std::mutex winner_lock;
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t idx = next++; idx < roots.size(); idx = next++) {
          if (budget.found || budget.exhausted) {
            break;
          }
          Searcher s(p, budget);
          const auto &root = roots[idx];
          for (int pos = 0; pos < depth; ++pos) {
            s.assign(pos, root[static_cast<std::size_t>(pos)]);
          }
          const bool found = s.dfs(depth);
          s.flush();
          nodes += s.nodes();
          if (found) {
            std::lock_guard lock(winner_lock);
            if (!budget.found.exchange(true)) {
              winner.push_back(s.colors());
            }
          }
        }
      });
    }
  }
  r.nodes += nodes.load();
  if (!winner.empty()) {
    r.outcome = Outcome::feasible;
    r.witness = to_coloring(p, winner.front());
  } else {
    r.outcome = budget.exhausted ? Outcome::budget_exhausted : Outcome::infeasible;
  }
  return r;
}

ExistsResult exists_with_budget(const Graph &g, int k, const SolverConfig &cfg,
                                std::optional<std::uint64_t> max_nodes,
                                std::optional<Clock::time_point> deadline) {
  const auto start = Clock::now();
  if (k < 1) {
    throw GraphError("exists_k needs k >= 1, got " + std::to_string(k));
  }
  ExistsResult r;
  if (g.order() == 0) {
    r.outcome = Outcome::feasible;
    r.witness = Coloring{};
    return r;
  }
  if (static_cast<std::size_t>(k) * static_cast<std::size_t>(k - 1) / 2 < g.size() ||
      static_cast<std::size_t>(k) <= g.max_degree()) {
    r.outcome = Outcome::infeasible;
    return r;
  }
  const Problem problem(g, k, cfg.order);
  Budget budget;
  budget.max_nodes = max_nodes;
  budget.deadline = deadline;
  const unsigned threads = cfg.parallel_roots ? solver_threads(cfg.threads) : 1;
  r = threads > 1 ? run_parallel(problem, budget, threads) : run_sequential(problem, budget);
  r.elapsed = Clock::now() - start;
  return r;
}

}  // namespace

std::string_view to_string(Outcome o) noexcept {
  switch (o) {
    case Outcome::feasible: return "feasible";
    case Outcome::infeasible: return "infeasible";
    case Outcome::budget_exhausted: return "budget_exhausted";
  }
  return "?";
}

unsigned solver_threads(unsigned requested) {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char *env = std::getenv("HARMONIUM_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap > 0) {
      hw = std::min(hw, static_cast<unsigned>(cap));
    }
  }
  return requested == 0 ? hw : std::min(requested, hw);
}

ExistsResult exists_k(const Graph &g, int k, const SolverConfig &cfg) {
  std::optional<Clock::time_point> deadline;
  if (cfg.time_budget) {
    deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(*cfg.time_budget);
  }
  return exists_with_budget(g, k, cfg, cfg.node_budget, deadline);
}

SolveResult solve(const Graph &g, const SolverConfig &cfg) {
  const auto start = Clock::now();
  SolveResult r;
  const int n = static_cast<int>(g.order());
  r.witness = trivial_coloring(g.order());
  r.best_upper = n;
  if (n == 0) {
    r.complete = true;
    return r;
  }
  const int lower = lower_bounds(g).combined;
  r.proved_lower = lower - 1;

  std::optional<Clock::time_point> deadline;
  if (cfg.time_budget) {
    deadline = start + std::chrono::duration_cast<Clock::duration>(*cfg.time_budget);
  }
  auto attempt = [&](int k) {
    std::optional<std::uint64_t> left;
    if (cfg.node_budget) {
      left = *cfg.node_budget > r.nodes_explored ? *cfg.node_budget - r.nodes_explored : 0;
    }
    auto res = exists_with_budget(g, k, cfg, left, deadline);
    r.nodes_explored += res.nodes;
    if (res.witness) {
      r.witness = *res.witness;
      r.best_upper = static_cast<int>(r.witness.num_colors());
    } else if (res.outcome == Outcome::infeasible) {
      r.proved_lower = std::max(r.proved_lower, k);
    }
    return res.outcome;
  };
  auto finish = [&](bool complete) {
    r.complete = complete;
    if (complete) {
      r.h = r.best_upper;
      r.proved_lower = r.h - 1;
    }
    r.elapsed = Clock::now() - start;
    return r;
  };

  int k = std::clamp(cfg.start_k.value_or(lower), 1, n);
  for (;; ++k) {
    const auto out = attempt(k);
    if (out == Outcome::budget_exhausted) {
      return finish(false);
    }
    if (out == Outcome::feasible) {
      break;
    }
  }
  while (r.best_upper - 1 > r.proved_lower) {
    const auto out = attempt(r.best_upper - 1);
    if (out == Outcome::budget_exhausted) {
      return finish(false);
    }
  }
  return finish(true);
}

int oracle_h(const Graph &g) {
  const int n = static_cast<int>(g.order());
  if (g.order() > kOracleMaxOrder) {
    throw GraphError("oracle_h is limited to " + std::to_string(kOracleMaxOrder) + " vertices, got " +
                     std::to_string(n));
  }
  if (n == 0) {
    return 0;
  }
  for (int k = 1; k <= n; ++k) {
    std::vector<int> col(static_cast<std::size_t>(n), 0);
    // seen[a][b]: colour pair {a, b} already carried by a fully coloured edge.
    std::vector<std::vector<int>> seen(static_cast<std::size_t>(k) + 1, std::vector<int>(static_cast<std::size_t>(k) + 1, 0));

    auto place = [&](auto &&self, int v) -> bool {
      if (v == n) {
        return true;
      }
      for (int c = 1; c <= k; ++c) {
        std::vector<std::pair<int, int>> marked;
        bool ok = true;
        for (Vertex u : g.neighbors(v)) {
          if (u >= v) {
            continue;
          }
          const int a = std::min(c, col[static_cast<std::size_t>(u)]);
          const int b = std::max(c, col[static_cast<std::size_t>(u)]);
          if (a == b || seen[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) {
            ok = false;
            break;
          }
          seen[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
          marked.emplace_back(a, b);
        }
        if (ok) {
          col[static_cast<std::size_t>(v)] = c;
          if (self(self, v + 1)) {
            return true;
          }
          col[static_cast<std::size_t>(v)] = 0;
        }
        for (auto [a, b] : marked) {
          seen[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 0;
        }
      }
      return false;
    };
    if (place(place, 0)) {
      return k;
    }
  }
  return n;
}

}  // namespace harmonium
