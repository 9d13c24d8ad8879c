#include <doctest.h>

#include <array>
#include <set>

#include "harmonium/constructive.hpp"
#include "harmonium/families.hpp"
#include "harmonium/solver.hpp"
#include "test_support.hpp"

using namespace harmonium;

namespace {

int exact_h(const Graph &g) {
  const auto r = solve(g);
  REQUIRE(r.complete);
  return r.h;
}

void check_exact(const Graph &g, const Coloring &c, int colors) {
  CHECK(testkit::harmonious(g, c.colors()));
  CHECK(static_cast<int>(c.num_colors()) == colors);
}

}  // namespace

TEST_CASE("h_cycle values") {
  CHECK(h_cycle(3) == 3);
  CHECK(h_cycle(6) == 5);
  CHECK(h_cycle(10) == exact_h(generate({Family::cycle, 10})));
  CHECK_THROWS_AS(h_cycle(2), GraphError);
  CHECK_THROWS_AS(h_cycle(kCycleMaxLength + 1), GraphError);
  const auto c7 = cycle_coloring(7);
  check_exact(generate({Family::cycle, 7}), c7, h_cycle(7));
}

TEST_CASE("property: h_cycle agrees with brute force on short cycles") {
  for (int n = 3; n <= 6; ++n) {
    CHECK(h_cycle(n) == testkit::brute_h(generate({Family::cycle, n})));
  }
}

TEST_CASE("sunflower construction") {
  check_exact(generate({Family::sunflower, 7}), color_sunflower(7), 8);
  check_exact(generate({Family::sunflower, 9}), color_sunflower(9), 10);
  check_exact(generate({Family::sunflower, 12}), color_sunflower(12), 13);
  CHECK_THROWS_AS(color_sunflower(6), GraphError);
}

TEST_CASE("property: sunflower construction for n = 7..20") {
  for (int n = 7; n <= 20; ++n) {
    check_exact(generate({Family::sunflower, n}), color_sunflower(n), n + 1);
  }
}

TEST_CASE("sun construction") {
  check_exact(generate({Family::sun, 6}), color_sun(6), 8);
  check_exact(generate({Family::sun, 5}), color_sun(5), 8);
  check_exact(generate({Family::sun, 4}), color_sun(4), 6);
  for (int n = 3; n <= 15; ++n) {
    check_exact(generate({Family::sun, n}), color_sun(n), n % 2 == 0 ? n + 2 : n + 3);
  }
}

TEST_CASE("closed sun construction") {
  check_exact(generate({Family::closed_sun, 5}), color_closed_sun(5), 10);
  check_exact(generate({Family::closed_sun, 6}), color_closed_sun(6), 11);
  check_exact(generate({Family::closed_sun, 7}), color_closed_sun(7), 7 + h_cycle(7));
  for (int n = 8; n <= 14; ++n) {
    check_exact(generate({Family::closed_sun, n}), color_closed_sun(n), n + h_cycle(n));
  }
}

TEST_CASE("property: constructions are optimal on small instances") {
  const std::array<int, 4> sunflower_small{7, 7, 8, 8};
  for (int n = 3; n <= 6; ++n) {
    CHECK(exact_h(generate({Family::sunflower, n})) == sunflower_small[static_cast<std::size_t>(n - 3)]);
  }
  for (int n = 7; n <= 8; ++n) {
    CHECK(exact_h(generate({Family::sunflower, n})) == n + 1);
  }
  for (int n = 3; n <= 7; ++n) {
    CHECK(exact_h(generate({Family::sun, n})) == static_cast<int>(color_sun(n).num_colors()));
    CHECK(exact_h(generate({Family::closed_sun, n})) == static_cast<int>(color_closed_sun(n).num_colors()));
  }
}

TEST_CASE("lollipop closed form") {
  CHECK(lollipop_h(6, 4) == 8);
  CHECK(lollipop_h(3, 2) == 4);
  CHECK(lollipop_h(4, 10) == 7);
  CHECK(exact_h(generate({Family::lollipop, 4, 10})) == 7);
  CHECK(lollipop_t(6, 4) == 1);
  CHECK(lollipop_t(4, 10) == 2);
  CHECK_THROWS_AS(lollipop_h(2, 4), GraphError);
  CHECK_THROWS_AS(lollipop_h(4, 1), GraphError);
}

TEST_CASE("lollipop plans") {
  const auto p32 = lollipop_plan(3, 2);
  REQUIRE(p32.trail.size() == 2);
  CHECK(p32.trail.front() == 1);
  CHECK(p32.trail.back() > 3);

  const auto p64 = lollipop_plan(6, 4);
  CHECK(p64.r == 8);
  CHECK(p64.extra_color);
  CHECK(p64.trail.size() == 4);
  check_exact(generate({Family::lollipop, 6, 4}), p64.coloring(), 8);

  const auto p58 = lollipop_plan(5, 8);
  check_exact(generate({Family::lollipop, 5, 8}), p58.coloring(), lollipop_h(5, 8));
  CHECK(lollipop_h(5, 8) == exact_h(generate({Family::lollipop, 5, 8})));
}

TEST_CASE("property: lollipop closed form, plan and solver agree on the grid") {
  for (int n = 3; n <= 6; ++n) {
    for (int m = 2; m <= 8; ++m) {
      INFO("n=" << n << " m=" << m);
      const auto g = generate({Family::lollipop, n, m});
      const int h = lollipop_h(n, m);
      CHECK(exact_h(g) == h);
      check_exact(g, lollipop_plan(n, m).coloring(), h);
    }
  }
}

TEST_CASE("property: lollipop plan trails are valid for larger paths") {
  for (int n = 3; n <= 9; ++n) {
    for (int m = 2; m <= 60; m += 3) {
      INFO("n=" << n << " m=" << m);
      const auto plan = lollipop_plan(n, m);
      REQUIRE(static_cast<int>(plan.trail.size()) == m);
      CHECK(plan.trail.front() == 1);
      std::set<std::pair<int, int>> used;
      for (std::size_t j = 0; j + 1 < plan.trail.size(); ++j) {
        const int a = std::min(plan.trail[j], plan.trail[j + 1]);
        const int b = std::max(plan.trail[j], plan.trail[j + 1]);
        CHECK(b > n);
        CHECK(a != b);
        CHECK(used.insert({a, b}).second);
      }
      check_exact(generate({Family::lollipop, n, m}), plan.coloring(), plan.r);
      CHECK(plan.r == lollipop_h(n, m));
    }
  }
}

TEST_CASE("lollipop case names") {
  CHECK(to_string(LollipopCase::even_odd) == "even_odd");
  CHECK(to_string(LollipopCase::odd_odd_small_t) == "odd_odd_small_t");
}

TEST_CASE("euler trail") {
  const auto c5 = generate({Family::cycle, 5});
  const auto t = euler_trail(c5, 2);
  CHECK(t.size() == 6);
  CHECK(t.front() == 2);
  CHECK(t.back() == 2);
  const auto p4 = generate({Family::path, 4});
  CHECK(euler_trail(p4, 0) == std::vector<Vertex>{0, 1, 2, 3});
  CHECK_THROWS_AS(euler_trail(p4, 1), std::logic_error);
  const auto two = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK_THROWS_AS(euler_trail(two, 0), std::logic_error);
}

TEST_CASE("property: euler trails use every edge once") {
  std::mt19937 rng(31);
  int tested = 0;
  for (int trial = 0; trial < 300 && tested < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 9);
    const auto g = testkit::random_graph(rng, n, 0.5);
    std::vector<Vertex> odd;
    for (Vertex v = 0; v < n; ++v) {
      if (g.degree(v) % 2) {
        odd.push_back(v);
      }
    }
    if (g.size() == 0 || odd.size() > 2) {
      continue;
    }
    // Skip when the edges do not form one component.
    const auto d = testkit::distances(g);
    const Vertex start = odd.empty() ? g.edges().front().u : odd.front();
    bool one = true;
    for (const auto &e : g.edges()) {
      one = one && d[static_cast<std::size_t>(start)][static_cast<std::size_t>(e.u)] >= 0;
    }
    if (!one) {
      continue;
    }
    ++tested;
    const auto t = euler_trail(g, start);
    REQUIRE(t.size() == g.size() + 1);
    CHECK(t.front() == start);
    std::set<std::pair<Vertex, Vertex>> seen;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      CHECK(g.adjacent(t[i], t[i + 1]));
      CHECK(seen.insert({std::min(t[i], t[i + 1]), std::max(t[i], t[i + 1])}).second);
    }
  }
  CHECK(tested >= 20);
}
