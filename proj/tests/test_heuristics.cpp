#include <doctest.h>

#include "harmonium/families.hpp"
#include "harmonium/heuristics.hpp"
#include "test_support.hpp"

using namespace harmonium;

TEST_CASE("greedy on the adversarial tree") {
  const auto t4 = adversarial_tree(4);
  const auto c4 = greedy(t4.tree, t4.order);
  CHECK(c4.num_colors() == 10);
  CHECK(testkit::harmonious(t4.tree, c4.colors()));
  const auto t5 = adversarial_tree(5);
  CHECK(greedy(t5.tree, t5.order).num_colors() == 17);
}

TEST_CASE("greedy on a clique uses every colour") {
  const auto k5 = generate({Family::complete, 5});
  const std::vector<Vertex> order{3, 1, 4, 0, 2};
  CHECK(greedy(k5, order).num_colors() == 5);
}

TEST_CASE("greedy rejects orders that are not permutations") {
  const auto p3 = generate({Family::path, 3});
  const std::vector<Vertex> dup{0, 0, 1};
  const std::vector<Vertex> shortp{0, 1};
  const std::vector<Vertex> wild{0, 1, 5};
  CHECK_THROWS_AS(greedy(p3, dup), GraphError);
  CHECK_THROWS_AS(greedy(p3, shortp), GraphError);
  CHECK_THROWS_AS(greedy(p3, wild), GraphError);
  CHECK(index_order(3) == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("good colouring of the adversarial tree") {
  for (int N : {3, 4, 6}) {
    const auto t = adversarial_tree(N);
    const auto good = adversarial_good_coloring(N);
    CHECK(testkit::harmonious(t.tree, good.colors()));
    CHECK(static_cast<int>(good.num_colors()) <= 2 * N - 2);
  }
  const auto t6 = adversarial_tree(6);
  const double ratio = static_cast<double>(greedy(t6.tree, t6.order).num_colors()) /
                       static_cast<double>(adversarial_good_coloring(6).num_colors());
  CHECK(ratio >= 26.0 / 10.0);
}

TEST_CASE("property: greedy ratio on the adversarial tree") {
  for (int N = 3; N <= 8; ++N) {
    const auto t = adversarial_tree(N);
    const auto bad = greedy(t.tree, t.order);
    const auto good = adversarial_good_coloring(N);
    CHECK(static_cast<int>(bad.num_colors()) == (N - 1) * (N - 1) + 1);
    CHECK(static_cast<int>(good.num_colors()) <= 2 * N - 2);
    CHECK(testkit::harmonious(t.tree, good.colors()));
  }
}

TEST_CASE("vc_coloring examples") {
  const auto k3 = generate({Family::complete, 3});
  const auto c3 = vc_coloring(k3, VertexCoverResult{{0, 1}, 2, CoverMethod::exact});
  CHECK(c3.num_colors() == 3);
  CHECK(testkit::harmonious(k3, c3.colors()));

  const auto star = generate({Family::star, 4});
  const auto cs = vc_coloring(star, VertexCoverResult{{0}, 1, CoverMethod::exact});
  CHECK(cs.num_colors() == 5);

  const auto c4 = generate({Family::cycle, 4});
  const auto cover = min_vertex_cover(c4, CoverMethod::exact);
  CHECK(cover.size == 2);
  const auto cc = vc_coloring(c4, cover);
  CHECK(cc.num_colors() <= 5);
  CHECK(testkit::harmonious(c4, cc.colors()));

  CHECK_THROWS_AS(vc_coloring(k3, VertexCoverResult{{0}, 1, CoverMethod::exact}), GraphError);
}

TEST_CASE("vertex cover examples") {
  CHECK(min_vertex_cover(generate({Family::complete, 4}), CoverMethod::exact).size == 3);
  CHECK(min_vertex_cover(generate({Family::path, 4}), CoverMethod::exact).size == 2);
  const auto c5 = generate({Family::cycle, 5});
  CHECK(min_vertex_cover(c5, CoverMethod::exact).size == 3);
  const auto approx = min_vertex_cover(c5, CoverMethod::matching_2approx);
  CHECK(approx.size <= 4);
  CHECK(approx.size % 2 == 0);
  CHECK(is_vertex_cover(c5, approx.cover));
  CHECK_THROWS_AS(min_vertex_cover(generate({Family::cycle, 21}), CoverMethod::exact), GraphError);
  CHECK(min_vertex_cover(generate({Family::cycle, 21}), CoverMethod::matching_2approx).size <= 22);
}

TEST_CASE("independent set examples") {
  CHECK(max_independent_set(generate({Family::cycle, 5})).size() == 2);
  for (int n = 1; n <= 6; ++n) {
    CHECK(max_independent_set(generate({Family::complete, n})).size() == 1);
  }
  CHECK(max_independent_set(Graph::from_edge_list(4, {})).size() == 4);
  CHECK(max_independent_set(Graph{}).empty());
  const std::vector<Vertex> pair{0, 2};
  CHECK(is_independent_set(generate({Family::cycle, 5}), pair));
  const std::vector<Vertex> adjacent{0, 1};
  CHECK_FALSE(is_independent_set(generate({Family::cycle, 5}), adjacent));
}

TEST_CASE("property: greedy is harmonious for random graphs and orders") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 30);
    const auto g = testkit::random_graph(rng, n, 0.05 + 0.05 * (trial % 8));
    const auto order = testkit::random_permutation(rng, n);
    const auto c = greedy(g, order);
    CHECK(testkit::harmonious(g, c.colors()));
  }
}

TEST_CASE("property: exact cover and independent set match enumeration") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 14);
    const auto g = testkit::random_graph(rng, n, 0.1 + 0.05 * (trial % 9));
    const auto cover = min_vertex_cover(g, CoverMethod::exact);
    CHECK(is_vertex_cover(g, cover.cover));
    CHECK(static_cast<int>(cover.size) == testkit::brute_vc(g));
    const auto approx = min_vertex_cover(g, CoverMethod::matching_2approx);
    CHECK(is_vertex_cover(g, approx.cover));
    CHECK(approx.size <= 2 * cover.size);
    const auto is = max_independent_set(g);
    CHECK(is_independent_set(g, is));
    CHECK(static_cast<int>(is.size()) == testkit::brute_alpha(g));
  }
}

TEST_CASE("property: vc_coloring stays within VC + D^2 - D + 1") {
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 20);
    const auto g = testkit::random_graph(rng, n, 0.1 + 0.4 * static_cast<double>(rng() % 100) / 100.0);
    const auto cover = min_vertex_cover(g, CoverMethod::exact);
    const auto c = vc_coloring(g, cover);
    const auto d = static_cast<int>(g.max_degree());
    CHECK(testkit::harmonious(g, c.colors()));
    CHECK(static_cast<int>(c.num_colors()) <= static_cast<int>(cover.size) + d * d - d + 1);
    for (std::size_t i = 0; i < cover.cover.size(); ++i) {
      CHECK(c[cover.cover[i]] == static_cast<int>(i) + 1);
    }
  }
}
