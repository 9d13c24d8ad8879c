#include <doctest.h>

#include "harmonium/families.hpp"
#include "harmonium/solver.hpp"
#include "harmonium/verify.hpp"
#include "test_support.hpp"

using namespace harmonium;

TEST_CASE("all-distinct colouring is always harmonious") {
  for (const auto &entry : catalog()) {
    const auto g = named(entry.id);
    CHECK(is_ok(is_harmonious(g, trivial_coloring(g.order()))));
  }
}

TEST_CASE("P4 with 1,2,1,2 repeats the pair {1,2} first at edges ab, bc") {
  const auto p4 = generate({Family::path, 4});
  const auto v = is_harmonious(p4, Coloring({1, 2, 1, 2}));
  const auto *rep = std::get_if<verdict::PairRepeated>(&v);
  REQUIRE(rep != nullptr);
  CHECK(rep->pair == ColorPair{1, 2});
  CHECK(rep->first == Edge{0, 1});
  CHECK(rep->second == Edge{1, 2});
}

TEST_CASE("C4 with 1,2,1,3 repeats a pair") {
  const auto c4 = generate({Family::cycle, 4});
  const auto v = is_harmonious(c4, Coloring({1, 2, 1, 3}));
  REQUIRE(std::holds_alternative<verdict::PairRepeated>(v));
  CHECK(std::get<verdict::PairRepeated>(v).pair == ColorPair{1, 2});
}

TEST_CASE("monochromatic edge is reported as not proper") {
  const auto c4 = generate({Family::cycle, 4});
  const auto v = is_harmonious(c4, Coloring({1, 2, 2, 3}));
  REQUIRE(std::holds_alternative<verdict::NotProper>(v));
  CHECK(std::get<verdict::NotProper>(v).edge == Edge{1, 2});
  CHECK(to_string(v).starts_with("not_proper"));
}

TEST_CASE("partial colourings are rejected") {
  const auto k3 = generate({Family::complete, 3});
  CHECK_THROWS_AS(is_harmonious(k3, Coloring({1, 2})), GraphError);
  CHECK_THROWS_AS(Coloring({1, 0, 2}), GraphError);
}

TEST_CASE("coloring accessors") {
  const Coloring c({3, 1, 3, 7});
  CHECK(c.size() == 4);
  CHECK(c.num_colors() == 3);
  CHECK(c.max_color() == 7);
  CHECK(c[3] == 7);
}

TEST_CASE("edge_pair_table examples") {
  const auto k3 = generate({Family::complete, 3});
  const auto t = edge_pair_table(k3, Coloring({1, 2, 3}));
  CHECK(t.size() == 3);
  for (const auto &[pair, edges] : t) {
    CHECK(edges.size() == 1);
  }
  const auto star = generate({Family::star, 3});
  const auto s = edge_pair_table(star, Coloring({1, 2, 2, 3}));
  CHECK(s.at(ColorPair{1, 2}).size() == 2);

  const auto c5 = generate({Family::cycle, 5});
  const auto best = solve(c5);
  CHECK(best.h == 5);
  CHECK(edge_pair_table(c5, best.witness).size() == 5);
}

TEST_CASE("property: verdict agrees with the definition on random colourings") {
  std::mt19937 rng(2024);
  int ok_seen = 0;
  int bad_seen = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const auto g = testkit::random_graph(rng, n, 0.35);
    const int k = 1 + static_cast<int>(rng() % (n + 2));
    std::vector<int> raw(static_cast<std::size_t>(n));
    for (auto &x : raw) {
      x = 1 + static_cast<int>(rng() % static_cast<unsigned>(k));
    }
    const Coloring c(raw);
    const bool expect = testkit::harmonious(g, raw);
    const bool got = is_ok(is_harmonious(g, c));
    CHECK(got == expect);
    ok_seen += got;
    bad_seen += !got;

    // Table view of the same fact.
    const auto table = edge_pair_table(g, c);
    bool table_ok = true;
    std::size_t total = 0;
    for (const auto &[pair, edges] : table) {
      table_ok = table_ok && pair.lo != pair.hi && edges.size() == 1;
      total += edges.size();
    }
    CHECK(total == g.size());
    CHECK(table_ok == got);
    if (got) {
      const auto used = static_cast<std::size_t>(c.num_colors());
      CHECK(used * (used - 1) / 2 >= g.size());
    }
  }
  CHECK(ok_seen > 20);
  CHECK(bad_seen > 20);
}
