#include <doctest.h>

#include <cmath>

#include "harmonium/bounds.hpp"
#include "harmonium/families.hpp"
#include "harmonium/solver.hpp"
#include "test_support.hpp"

using namespace harmonium;

TEST_CASE("K4 bounds") {
  const auto b = lower_bounds(generate({Family::complete, 4}));
  CHECK(b.size_bound == 4);
  CHECK(b.delta_bound == 4);
  CHECK(b.n2_bound == 4);
  CHECK(b.combined == 4);
  CHECK_FALSE(b.regular33_bound.has_value());
}

TEST_CASE("petersen bounds") {
  const auto b = lower_bounds(named(NamedGraph::petersen));
  CHECK(b.n2_bound == 10);
  CHECK(b.combined == 10);
}

TEST_CASE("truncated tetrahedron bounds") {
  const auto b = lower_bounds(named(NamedGraph::truncated_tetrahedron));
  CHECK(b.size_bound == 7);
  CHECK(b.regular33_bound == std::optional<int>(7));
  CHECK(b.combined >= 7);
}

TEST_CASE("size bound against the closed form") {
  for (std::size_t m = 0; m <= 400; ++m) {
    const int expect =
        m == 0 ? 1 : static_cast<int>(std::ceil((1.0 + std::sqrt(8.0 * static_cast<double>(m) + 1.0)) / 2.0));
    CHECK(min_colors_for_edges(m) == expect);
  }
  CHECK(min_colors_for_edges(18) == 7);
}

TEST_CASE("n2 bound only counts balls whose members are pairwise close") {
  // A cubic graph of diameter 3 where some |N2[v]| is 10 yet 9 colours suffice.
  const auto g = Graph::from_edge_list(12, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {3, 8}, {3, 9},
                                            {4, 10}, {4, 11}, {5, 6}, {5, 7}, {6, 8}, {7, 10}, {8, 9}, {9, 11},
                                            {10, 11}});
  CHECK(closed_n2(g, 0).size() == 10);
  const Coloring nine({1, 2, 3, 4, 3, 4, 5, 6, 7, 8, 7, 9});
  CHECK(is_ok(is_harmonious(g, nine)));
  CHECK(lower_bounds(g).n2_bound <= 9);
}

TEST_CASE("diameter-2 graphs get n2 bound n") {
  for (const FamilySpec s : {FamilySpec{Family::wheel, 6}, FamilySpec{Family::flower, 4}, FamilySpec{Family::jewel, 3},
                             FamilySpec{Family::complete, 5}, FamilySpec{Family::star, 7}}) {
    const auto g = generate(s);
    CHECK(lower_bounds(g).n2_bound == static_cast<int>(g.order()));
  }
}

TEST_CASE("upper bound formulas") {
  const auto b = lower_bounds(named(NamedGraph::petersen));
  CHECK(b.lee_mitchem_upper == doctest::Approx(10.0 * 4.0));
  REQUIRE(b.mcdiarmid_upper.has_value());
  CHECK(*b.mcdiarmid_upper == doctest::Approx(6.0 * 3.0));
  CHECK_FALSE(lower_bounds(Graph::from_edge_list(3, {})).mcdiarmid_upper.has_value());
  const auto empty = lower_bounds(Graph{});
  CHECK(empty.combined == 0);
}

TEST_CASE("property: exact h dominates every lower bound (n <= 8)") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto g = testkit::random_graph(rng, n, 0.2 + 0.1 * (trial % 6));
    const auto b = lower_bounds(g);
    CHECK(b.combined >= b.size_bound);
    CHECK(b.combined >= b.delta_bound);
    CHECK(b.combined >= b.n2_bound);
    CHECK(b.n2_bound >= b.delta_bound);
    const int h = oracle_h(g);
    CHECK(h >= b.combined);
  }
}

TEST_CASE("property: n2 bound is a clique of pairwise-close vertices") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 14);
    const auto g = testkit::random_graph(rng, n, 0.25);
    const auto d = testkit::distances(g);
    // Independent recomputation: best ball whose members are within distance 2 of each other.
    int best = 0;
    for (int v = 0; v < n; ++v) {
      std::vector<int> ball;
      for (int u = 0; u < n; ++u) {
        const int x = d[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
        if (x >= 0 && x <= 2) {
          ball.push_back(u);
        }
      }
      bool close = true;
      for (int a : ball) {
        for (int b : ball) {
          const int x = d[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
          close = close && x >= 0 && x <= 2;
        }
      }
      best = std::max(best, close ? static_cast<int>(ball.size()) : static_cast<int>(g.degree(v)) + 1);
    }
    CHECK(lower_bounds(g).n2_bound == best);
  }
}
