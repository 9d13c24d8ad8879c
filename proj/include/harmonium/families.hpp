#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "harmonium/graph.hpp"

namespace harmonium {

// Vertex labelling conventions (so that constructive colourings are index
// formulas):
//   path, cycle, complete   0..n-1 in order
//   star K_{1,n}            centre 0, leaves 1..n
//   wheel, gear, helm, flower, double wheel, G_{n,n}, sunflower
//                           hub 0, rim v_i = i (1..n)
//   helm, flower            pendant of v_i is n+i
//   double wheel, G_{n,n}   second rim u_i = n+i
//   gear                    rim 1..2n, hub joined to the odd rim vertices
//   sunflower               petal u_i = n+i, joined to v_i and v_{i+1}
//   sun, closed sun         clique v_i = i-1 (0..n-1), outer u_i = n+i-1
//   triangular book         v=0, u=1, page v_i = i+1
//   book with bookmark      v=0, u=1, x=2, page v_i = i+2
//   jewel                   u=0, v=1, x=2, y=3, v_i = i+3
//   lollipop L_{n,m}        clique 0..n-1, path 0, n, n+1, ..., n+m-2
//   GP(n,k)                 outer 0..n-1, inner n..2n-1 (inner i ~ i+k)
enum class Family {
  path,
  cycle,
  complete,
  star,
  wheel,
  gear,
  helm,
  flower,
  double_wheel,
  g_nn,
  triangular_book,
  book_with_bookmark,
  jewel,
  sunflower,
  sun,
  closed_sun,
  lollipop,
  generalized_petersen,
};

struct FamilySpec {
  Family family = Family::path;
  int n = 0;
  /// Second parameter: path length m for lollipop, step k for GP(n,k).
  int m = 0;
};

std::string_view family_name(Family f) noexcept;
std::optional<Family> parse_family(std::string_view name);
std::vector<Family> all_families();

/// Expected (|V|, |E|) for a family instance, from the closed-form counts.
std::pair<std::size_t, std::size_t> family_counts(const FamilySpec &spec);

Graph generate(const FamilySpec &spec);

/// Short human-readable id such as "sunflower(5)" or "lollipop(6,4)".
std::string describe(const FamilySpec &spec);

enum class NamedGraph {
  petersen,
  wagner,
  octahedron,
  moser_spindle,
  house,
  prism_y3,
  franklin,
  tietze,
  bidiakis,
  yutsis,
  truncated_tetrahedron,
  planar33_8_1,
  planar33_8_2,
  planar33_8_3,
  planar33_10_1,
  planar33_10_2,
  planar33_10_3,
  planar33_10_4,
  planar33_10_5,
  planar33_10_6,
  planar33_12_1,
  planar33_12_2,
};

struct NamedInfo {
  NamedGraph id;
  std::string_view name;
  std::size_t n;
  std::size_t m;
  /// Common vertex degree, or 0 when the graph is not regular.
  std::size_t regular_degree;
  std::size_t diameter;
  bool planar;
  std::string_view note;
};

const std::vector<NamedInfo> &catalog();
const NamedInfo &info(NamedGraph id);
std::optional<NamedGraph> parse_named(std::string_view name);
Graph named(NamedGraph id);

/// The tree on which the smallest-colour greedy needs (N-1)^2+1 colours.
struct AdversarialTree {
  Graph tree;
  /// a_0, a_1, ..., a_{N-1}, b_2, ..., b_{N-1}, then the c_i^j grouped by i.
  std::vector<Vertex> order;
  int branching = 0;

  // Vertex ids: a_i = i, b_i = N + i - 2, c_i^j = 2N - 2 + (i-2)(N-1) + (j-1).
  Vertex a(int i) const { return i; }
  Vertex b(int i) const { return branching + i - 2; }
  Vertex c(int i, int j) const { return 2 * branching - 2 + (i - 2) * (branching - 1) + (j - 1); }
};

AdversarialTree adversarial_tree(int N);

}  // namespace harmonium
