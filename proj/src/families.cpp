#include "harmonium/families.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace harmonium {

namespace {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

void require(bool ok, const FamilySpec &spec, std::string_view what) {
  if (!ok) {
    throw GraphError(describe(spec) + ": " + std::string(what));
  }
}

void add_cycle(Pairs &pairs, Vertex first, int len) {
  for (int i = 0; i < len; ++i) {
    pairs.emplace_back(first + i, first + (i + 1) % len);
  }
}

void add_clique(Pairs &pairs, Vertex first, int len) {
  for (int i = 0; i < len; ++i) {
    for (int j = i + 1; j < len; ++j) {
      pairs.emplace_back(first + i, first + j);
    }
  }
}

// LCF notation: Hamiltonian cycle 0..n-1 plus chords i -> i + shift[i mod len].
Graph lcf(int n, std::initializer_list<int> shifts) {
  const std::vector<int> s(shifts);
  Pairs pairs;
  add_cycle(pairs, 0, n);
  for (int i = 0; i < n; ++i) {
    const int j = ((i + s[static_cast<std::size_t>(i) % s.size()]) % n + n) % n;
    pairs.emplace_back(i, j);
  }
  return Graph::from_edge_list(static_cast<std::size_t>(n), pairs);
}

Graph from_pairs(int n, const Pairs &pairs) { return Graph::from_edge_list(static_cast<std::size_t>(n), pairs); }

// Petersen graph with vertex 0 expanded into a triangle 9, 10, 11.
Graph tietze() {
  const Graph petersen = generate({Family::generalized_petersen, 5, 2});
  const auto nb = petersen.neighbors(0);
  Pairs pairs;
  for (const auto &e : petersen.edges()) {
    if (e.u != 0) {
      pairs.emplace_back(e.u - 1, e.v - 1);
    }
  }
  for (int i = 0; i < 3; ++i) {
    pairs.emplace_back(9 + i, nb[static_cast<std::size_t>(i)] - 1);
    pairs.emplace_back(9 + i, 9 + (i + 1) % 3);
  }
  return from_pairs(12, pairs);
}

// Connected cubic graphs of diameter 3, planar ones from an exhaustive
// enumeration on 8, 10 and 12 vertices (3, 6 and 2 graphs up to isomorphism).
const std::array<Pairs, 3> kPlanar8 = {{
    {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {3, 4}, {3, 6}, {4, 5}, {5, 7}, {6, 7}},
    {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 6}, {3, 6}, {4, 5}, {4, 7}, {5, 7}, {6, 7}},
    {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 6}, {3, 5}, {3, 6}, {4, 7}, {5, 7}, {6, 7}},
}};

const std::array<Pairs, 6> kPlanar10 = {{
    {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {3, 8}, {3, 9}, {4, 5}, {4, 6}, {5, 8}, {6, 7}, {7, 9}, {8, 9}},
    {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {3, 4}, {3, 8}, {4, 9}, {5, 6}, {5, 9}, {6, 7}, {7, 8}, {8, 9}},
    {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {3, 4}, {3, 8}, {4, 5}, {5, 9}, {6, 7}, {6, 8}, {7, 9}, {8, 9}},
    {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {3, 4}, {3, 6}, {4, 8}, {5, 8}, {5, 9}, {6, 7}, {7, 9}, {8, 9}},
    {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {3, 4}, {3, 6}, {4, 8}, {5, 7}, {5, 8}, {6, 9}, {7, 9}, {8, 9}},
    {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 6}, {3, 7}, {4, 5}, {4, 8}, {5, 8}, {6, 7}, {6, 9}, {7, 9}, {8, 9}},
}};

// The second 12-vertex planar entry is isomorphic to the Bidiakis cube.
const Pairs kPlanar12Second = {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 3},  {2, 6},  {3, 7},  {4, 5},
                               {4, 8}, {5, 9}, {6, 8}, {6, 10}, {7, 9}, {7, 11}, {8, 10}, {9, 11}, {10, 11}};

// Triangle-free, non-planar, h = 9; vertices 0..5 and 6..11 induce trees.
const Pairs kYutsis = {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5},  {2, 6},  {2, 7},  {3, 8},  {3, 9},
                       {4, 10}, {4, 11}, {5, 6}, {5, 8}, {6, 9}, {7, 10}, {7, 11}, {8, 10}, {9, 11}};

const std::vector<NamedInfo> kCatalog = {
    {NamedGraph::petersen, "petersen", 10, 15, 3, 2, false, "GP(5,2)"},
    {NamedGraph::wagner, "wagner", 8, 12, 3, 2, false, "Moebius ladder M8"},
    {NamedGraph::octahedron, "octahedron", 6, 12, 4, 2, true, "K_{2,2,2}"},
    {NamedGraph::moser_spindle, "moser_spindle", 7, 11, 0, 2, true, "two rhombi sharing a vertex"},
    {NamedGraph::house, "house", 5, 6, 0, 2, true, "square with a roof"},
    {NamedGraph::prism_y3, "prism_y3", 6, 9, 3, 2, true, "triangular prism GP(3,1)"},
    {NamedGraph::franklin, "franklin", 12, 18, 3, 3, false, "LCF [5,-5]^6"},
    {NamedGraph::tietze, "tietze", 12, 18, 3, 3, false, "Petersen with one vertex expanded to a triangle"},
    {NamedGraph::bidiakis, "bidiakis", 12, 18, 3, 3, true, "LCF [6,4,-4]^4"},
    {NamedGraph::yutsis, "yutsis", 12, 18, 3, 3, false, "splits into two induced trees"},
    {NamedGraph::truncated_tetrahedron, "truncated_tetrahedron", 12, 18, 3, 3, true, "LCF [2,6,-2]^4"},
    {NamedGraph::planar33_8_1, "planar33_8_1", 8, 12, 3, 3, true, "(3,3)-regular planar"},
    {NamedGraph::planar33_8_2, "planar33_8_2", 8, 12, 3, 3, true, "(3,3)-regular planar"},
    {NamedGraph::planar33_8_3, "planar33_8_3", 8, 12, 3, 3, true, "(3,3)-regular planar, cube Q3"},
    {NamedGraph::planar33_10_1, "planar33_10_1", 10, 15, 3, 3, true, "(3,3)-regular planar"},
    {NamedGraph::planar33_10_2, "planar33_10_2", 10, 15, 3, 3, true, "(3,3)-regular planar"},
    {NamedGraph::planar33_10_3, "planar33_10_3", 10, 15, 3, 3, true, "(3,3)-regular planar"},
    {NamedGraph::planar33_10_4, "planar33_10_4", 10, 15, 3, 3, true, "(3,3)-regular planar"},
    {NamedGraph::planar33_10_5, "planar33_10_5", 10, 15, 3, 3, true, "(3,3)-regular planar"},
    {NamedGraph::planar33_10_6, "planar33_10_6", 10, 15, 3, 3, true, "(3,3)-regular planar"},
    {NamedGraph::planar33_12_1, "planar33_12_1", 12, 18, 3, 3, true, "truncated tetrahedron"},
    {NamedGraph::planar33_12_2, "planar33_12_2", 12, 18, 3, 3, true, "Bidiakis cube"},
};

}  // namespace

std::string_view family_name(Family f) noexcept {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::star: return "star";
    case Family::wheel: return "wheel";
    case Family::gear: return "gear";
    case Family::helm: return "helm";
    case Family::flower: return "flower";
    case Family::double_wheel: return "double_wheel";
    case Family::g_nn: return "g_nn";
    case Family::triangular_book: return "triangular_book";
    case Family::book_with_bookmark: return "book_with_bookmark";
    case Family::jewel: return "jewel";
    case Family::sunflower: return "sunflower";
    case Family::sun: return "sun";
    case Family::closed_sun: return "closed_sun";
    case Family::lollipop: return "lollipop";
    case Family::generalized_petersen: return "generalized_petersen";
  }
  return "?";
}

std::vector<Family> all_families() {
  std::vector<Family> out;
  for (int i = 0; i <= static_cast<int>(Family::generalized_petersen); ++i) {
    out.push_back(static_cast<Family>(i));
  }
  return out;
}

std::optional<Family> parse_family(std::string_view name) {
  std::string key(name);
  std::replace(key.begin(), key.end(), '-', '_');
  for (Family f : all_families()) {
    if (family_name(f) == key) {
      return f;
    }
  }
  if (key == "gp") {
    return Family::generalized_petersen;
  }
  return std::nullopt;
}

std::string describe(const FamilySpec &spec) {
  std::string out(family_name(spec.family));
  out += "(" + std::to_string(spec.n);
  if (spec.family == Family::lollipop || spec.family == Family::generalized_petersen) {
    out += "," + std::to_string(spec.m);
  }
  return out + ")";
}

std::pair<std::size_t, std::size_t> family_counts(const FamilySpec &spec) {
  const auto n = static_cast<std::size_t>(std::max(spec.n, 0));
  const auto m = static_cast<std::size_t>(std::max(spec.m, 0));
  switch (spec.family) {
    case Family::path: return {n, n == 0 ? 0 : n - 1};
    case Family::cycle: return {n, n};
    case Family::complete: return {n, n * (n - 1) / 2};
    case Family::star: return {n + 1, n};
    case Family::wheel: return {n + 1, 2 * n};
    case Family::gear: return {2 * n + 1, 3 * n};
    case Family::helm: return {2 * n + 1, 3 * n};
    case Family::flower: return {2 * n + 1, 4 * n};
    case Family::double_wheel: return {2 * n + 1, 4 * n};
    case Family::g_nn: return {2 * n + 1, 5 * n};
    case Family::triangular_book: return {n + 2, 2 * n + 1};
    case Family::book_with_bookmark: return {n + 3, 2 * n + 2};
    case Family::jewel: return {n + 4, 2 * n + 5};
    case Family::sunflower: return {2 * n + 1, 4 * n};
    case Family::sun: return {2 * n, n * (n - 1) / 2 + 2 * n};
    case Family::closed_sun: return {2 * n, n * (n - 1) / 2 + 3 * n};
    case Family::lollipop: return {n + m - 1, n * (n - 1) / 2 + m - 1};
    case Family::generalized_petersen: return {2 * n, 3 * n};
  }
  return {0, 0};
}

Graph generate(const FamilySpec &spec) {
  const int n = spec.n;
  Pairs pairs;
  int order = 0;
  switch (spec.family) {
    case Family::path:
      require(n >= 1, spec, "needs n >= 1");
      order = n;
      for (int i = 0; i + 1 < n; ++i) {
        pairs.emplace_back(i, i + 1);
      }
      break;
    case Family::cycle:
      require(n >= 3, spec, "needs n >= 3");
      order = n;
      add_cycle(pairs, 0, n);
      break;
    case Family::complete:
      require(n >= 1, spec, "needs n >= 1");
      order = n;
      add_clique(pairs, 0, n);
      break;
    case Family::star:
      require(n >= 1, spec, "needs n >= 1 leaves");
      order = n + 1;
      for (int i = 1; i <= n; ++i) {
        pairs.emplace_back(0, i);
      }
      break;
    case Family::wheel:
    case Family::helm:
    case Family::flower:
    case Family::sunflower:
      require(n >= 3, spec, "needs n >= 3");
      order = spec.family == Family::wheel ? n + 1 : 2 * n + 1;
      add_cycle(pairs, 1, n);
      for (int i = 1; i <= n; ++i) {
        pairs.emplace_back(0, i);
        if (spec.family == Family::helm || spec.family == Family::flower) {
          pairs.emplace_back(i, n + i);
        }
        if (spec.family == Family::flower) {
          pairs.emplace_back(0, n + i);
        }
        if (spec.family == Family::sunflower) {
          pairs.emplace_back(n + i, i);
          pairs.emplace_back(n + i, i % n + 1);
        }
      }
      break;
    case Family::gear:
      require(n >= 3, spec, "needs n >= 3");
      order = 2 * n + 1;
      add_cycle(pairs, 1, 2 * n);
      for (int i = 1; i <= 2 * n; i += 2) {
        pairs.emplace_back(0, i);
      }
      break;
    case Family::double_wheel:
    case Family::g_nn:
      require(n >= 3, spec, "needs n >= 3");
      order = 2 * n + 1;
      add_cycle(pairs, 1, n);
      add_cycle(pairs, n + 1, n);
      for (int i = 1; i <= 2 * n; ++i) {
        pairs.emplace_back(0, i);
      }
      if (spec.family == Family::g_nn) {
        for (int i = 1; i <= n; ++i) {
          pairs.emplace_back(i, n + i);
        }
      }
      break;
    case Family::triangular_book:
      require(n >= 1, spec, "needs n >= 1");
      order = n + 2;
      pairs.emplace_back(0, 1);
      for (int i = 1; i <= n; ++i) {
        pairs.emplace_back(0, i + 1);
        pairs.emplace_back(1, i + 1);
      }
      break;
    case Family::book_with_bookmark:
      require(n >= 1, spec, "needs n >= 1");
      order = n + 3;
      pairs.emplace_back(0, 1);
      pairs.emplace_back(1, 2);
      for (int i = 1; i <= n; ++i) {
        pairs.emplace_back(0, i + 2);
        pairs.emplace_back(1, i + 2);
      }
      break;
    case Family::jewel: {
      require(n >= 1, spec, "needs n >= 1");
      order = n + 4;
      constexpr Vertex u = 0, v = 1, x = 2, y = 3;
      pairs.insert(pairs.end(), {{u, x}, {x, v}, {x, y}, {u, y}, {y, v}});
      for (int i = 1; i <= n; ++i) {
        pairs.emplace_back(u, i + 3);
        pairs.emplace_back(v, i + 3);
      }
      break;
    }
    case Family::sun:
    case Family::closed_sun:
      require(n >= 3, spec, "needs n >= 3");
      order = 2 * n;
      add_clique(pairs, 0, n);
      for (int i = 0; i < n; ++i) {
        pairs.emplace_back(n + i, i);
        pairs.emplace_back(n + i, (i + 1) % n);
      }
      if (spec.family == Family::closed_sun) {
        add_cycle(pairs, n, n);
      }
      break;
    case Family::lollipop: {
      require(n >= 3, spec, "needs n >= 3");
      require(spec.m >= 2, spec, "needs m >= 2");
      order = n + spec.m - 1;
      add_clique(pairs, 0, n);
      Vertex prev = 0;
      for (int j = 0; j < spec.m - 1; ++j) {
        pairs.emplace_back(prev, n + j);
        prev = n + j;
      }
      break;
    }
    case Family::generalized_petersen: {
      const int k = spec.m;
      require(n >= 3, spec, "needs n >= 3");
      require(k >= 1 && 2 * k < n, spec, "needs 1 <= k < n/2");
      order = 2 * n;
      add_cycle(pairs, 0, n);
      for (int i = 0; i < n; ++i) {
        pairs.emplace_back(i, n + i);
        pairs.emplace_back(n + i, n + (i + k) % n);
      }
      break;
    }
  }
  return from_pairs(order, pairs);
}

const std::vector<NamedInfo> &catalog() { return kCatalog; }

const NamedInfo &info(NamedGraph id) {
  for (const auto &entry : kCatalog) {
    if (entry.id == id) {
      return entry;
    }
  }
  throw GraphError("unknown catalog entry");
}

std::optional<NamedGraph> parse_named(std::string_view name) {
  std::string key(name);
  std::replace(key.begin(), key.end(), '-', '_');
  for (const auto &entry : kCatalog) {
    if (entry.name == key) {
      return entry.id;
    }
  }
  return std::nullopt;
}

Graph named(NamedGraph id) {
  switch (id) {
    case NamedGraph::petersen: return generate({Family::generalized_petersen, 5, 2});
    case NamedGraph::wagner: return lcf(8, {4});
    case NamedGraph::octahedron: {
      Pairs pairs;
      for (int i = 0; i < 6; ++i) {
        for (int j = i + 1; j < 6; ++j) {
          if (j != i + 3) {
            pairs.emplace_back(i, j);
          }
        }
      }
      return from_pairs(6, pairs);
    }
    case NamedGraph::moser_spindle:
      return from_pairs(7, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {0, 5}, {4, 5}, {4, 6}, {5, 6}, {3, 6}});
    case NamedGraph::house: return from_pairs(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}});
    case NamedGraph::prism_y3: return generate({Family::generalized_petersen, 3, 1});
    case NamedGraph::franklin: return lcf(12, {5, -5});
    case NamedGraph::tietze: return tietze();
    case NamedGraph::bidiakis: return lcf(12, {6, 4, -4});
    case NamedGraph::yutsis: return from_pairs(12, kYutsis);
    case NamedGraph::truncated_tetrahedron:
    case NamedGraph::planar33_12_1: return lcf(12, {2, 6, -2});
    case NamedGraph::planar33_12_2: return from_pairs(12, kPlanar12Second);
    case NamedGraph::planar33_8_1:
    case NamedGraph::planar33_8_2:
    case NamedGraph::planar33_8_3:
      return from_pairs(8, kPlanar8[static_cast<std::size_t>(id) - static_cast<std::size_t>(NamedGraph::planar33_8_1)]);
    case NamedGraph::planar33_10_1:
    case NamedGraph::planar33_10_2:
    case NamedGraph::planar33_10_3:
    case NamedGraph::planar33_10_4:
    case NamedGraph::planar33_10_5:
    case NamedGraph::planar33_10_6:
      return from_pairs(10,
                        kPlanar10[static_cast<std::size_t>(id) - static_cast<std::size_t>(NamedGraph::planar33_10_1)]);
  }
  throw GraphError("unknown catalog entry");
}

AdversarialTree adversarial_tree(int N) {
  if (N < 3) {
    throw GraphError("adversarial_tree needs N >= 3, got " + std::to_string(N));
  }
  AdversarialTree t;
  t.branching = N;
  Pairs pairs;
  for (int i = 1; i <= N - 1; ++i) {
    pairs.emplace_back(t.a(0), t.a(i));
  }
  for (int i = 2; i <= N - 1; ++i) {
    pairs.emplace_back(t.a(i), t.b(i));
    for (int j = 1; j <= N - 1; ++j) {
      pairs.emplace_back(t.b(i), t.c(i, j));
    }
  }
  const int n = N * (N - 1);
  t.tree = from_pairs(n, pairs);
  t.order.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    t.order[static_cast<std::size_t>(v)] = v;
  }
  return t;
}

}  // namespace harmonium
