#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "harmonium/graph.hpp"
#include "harmonium/verify.hpp"

namespace harmonium {

using Seconds = std::chrono::duration<double>;

enum class VertexOrder {
  /// Colour vertices in increasing id order.
  index,
  /// Descending degree, ties by id.
  degree,
};

struct SolverConfig {
  std::optional<std::uint64_t> node_budget;
  std::optional<Seconds> time_budget;
  /// First k tried by solve(); defaults to the combined lower bound.
  std::optional<int> start_k;
  bool parallel_roots = false;
  /// Worker cap for parallel_roots; 0 means HARMONIUM_THREADS or the hardware
  /// concurrency.
  unsigned threads = 0;
  VertexOrder order = VertexOrder::index;
};

enum class Outcome { feasible, infeasible, budget_exhausted };

std::string_view to_string(Outcome o) noexcept;

struct ExistsResult {
  Outcome outcome = Outcome::infeasible;
  /// Present iff outcome == feasible.
  std::optional<Coloring> witness;
  std::uint64_t nodes = 0;
  Seconds elapsed{0};
};

/// Is there a harmonious colouring using colours from 1..k?
///
/// Backtracking over a fixed vertex order with
///   - an incremental pair-usage table (triangular, k(k-1)/2 slots),
///   - the new-colour rule: a vertex may open a colour only as max_used + 1,
///   - a counting cut: edges not yet coloured must fit in the free pairs,
///   - a distance-2 cut: two vertices at distance <= 2 never share a colour.
/// An infeasible answer is always the result of an exhausted search;
/// running out of budget yields Outcome::budget_exhausted instead.
ExistsResult exists_k(const Graph &g, int k, const SolverConfig &cfg = {});

struct SolveResult {
  /// False when a budget ran out before the value was pinned down.
  bool complete = false;
  /// Exact h(G) when complete.
  int h = 0;
  /// Best colouring found; uses exactly h colours when complete.
  Coloring witness;
  /// Largest k known infeasible (from the search or the lower bounds).
  int proved_lower = 0;
  /// Colour count of the best witness.
  int best_upper = 0;
  std::uint64_t nodes_explored = 0;
  Seconds elapsed{0};
};

/// h(G) by iterating exists_k. Starts at cfg.start_k (or the combined lower
/// bound), climbs until feasible, then descends while smaller k stays
/// feasible, so the answer does not depend on the starting point.
SolveResult solve(const Graph &g, const SolverConfig &cfg = {});

/// Reference value of h(G) by plain enumeration of colourings, k = 1, 2, ...
/// No symmetry breaking and no look-ahead; only a partial assignment that
/// already contains a conflict is abandoned. Limited to n <= kOracleMaxOrder.
inline constexpr std::size_t kOracleMaxOrder = 9;
int oracle_h(const Graph &g);

/// Effective worker count for parallel searches.
unsigned solver_threads(unsigned requested = 0);

}  // namespace harmonium
