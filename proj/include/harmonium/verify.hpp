#pragma once

#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "harmonium/graph.hpp"

namespace harmonium {

using Color = int;

/// Total vertex colouring with colours 1..k.
class Coloring {
 public:
  Coloring() = default;
  /// Throws GraphError when any entry is below 1 (0 is the "uncoloured" marker
  /// used inside the search code and never escapes into a Coloring).
  explicit Coloring(std::vector<Color> colors);

  std::size_t size() const noexcept { return colors_.size(); }
  Color operator[](Vertex v) const { return colors_.at(static_cast<std::size_t>(v)); }
  const std::vector<Color> &colors() const noexcept { return colors_; }

  /// Number of distinct colours used.
  std::size_t num_colors() const;
  Color max_color() const;

  friend bool operator==(const Coloring &, const Coloring &) = default;

 private:
  std::vector<Color> colors_;
};

/// Unordered colour pair, stored with lo <= hi.
struct ColorPair {
  Color lo = 0;
  Color hi = 0;

  static ColorPair of(Color a, Color b) { return a < b ? ColorPair{a, b} : ColorPair{b, a}; }
  friend auto operator<=>(const ColorPair &, const ColorPair &) = default;
};

namespace verdict {
struct Ok {};
struct NotProper {
  Edge edge;
};
struct PairRepeated {
  ColorPair pair;
  Edge first;
  Edge second;
};
}  // namespace verdict

using Verdict = std::variant<verdict::Ok, verdict::NotProper, verdict::PairRepeated>;

inline bool is_ok(const Verdict &v) { return std::holds_alternative<verdict::Ok>(v); }
std::string to_string(const Verdict &v);

/// Checks the harmonious property, reporting the first violation met while
/// scanning edges in ascending order. A colouring whose length differs from
/// the vertex count is rejected with GraphError.
Verdict is_harmonious(const Graph &g, const Coloring &c);

using EdgePairTable = std::map<ColorPair, std::vector<Edge>>;

/// Induced edge colouring: every colour pair mapped to the edges carrying it.
EdgePairTable edge_pair_table(const Graph &g, const Coloring &c);

/// All-distinct colouring 1..n; always harmonious.
Coloring trivial_coloring(std::size_t n);

}  // namespace harmonium
