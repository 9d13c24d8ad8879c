#include "harmonium/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace harmonium {

Coloring::Coloring(std::vector<Color> colors) : colors_(std::move(colors)) {
  for (std::size_t v = 0; v < colors_.size(); ++v) {
    if (colors_[v] < 1) {
      throw GraphError("vertex " + std::to_string(v) + " has no colour (colours start at 1)");
    }
  }
}

std::size_t Coloring::num_colors() const { return std::set<Color>(colors_.begin(), colors_.end()).size(); }

Color Coloring::max_color() const { return colors_.empty() ? 0 : *std::max_element(colors_.begin(), colors_.end()); }

namespace {

void require_total(const Graph &g, const Coloring &c) {
  if (c.size() != g.order()) {
    throw GraphError("colouring covers " + std::to_string(c.size()) + " vertices, graph has " +
                     std::to_string(g.order()));
  }
}

std::string edge_str(const Edge &e) { return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")"; }

}  // namespace

std::string to_string(const Verdict &v) {
  struct Printer {
    std::string operator()(const verdict::Ok &) const { return "ok"; }
    std::string operator()(const verdict::NotProper &x) const {
      return "not_proper: edge " + edge_str(x.edge) + " is monochromatic";
    }
    std::string operator()(const verdict::PairRepeated &x) const {
      return "pair_repeated: colours {" + std::to_string(x.pair.lo) + "," + std::to_string(x.pair.hi) +
             "} on edges " + edge_str(x.first) + " and " + edge_str(x.second);
    }
  };
  return std::visit(Printer{}, v);
}

Verdict is_harmonious(const Graph &g, const Coloring &c) {
  require_total(g, c);
  std::map<ColorPair, Edge> seen;
  for (const auto &e : g.edges()) {
    const Color a = c[e.u];
    const Color b = c[e.v];
    if (a == b) {
      return verdict::NotProper{e};
    }
    const auto pair = ColorPair::of(a, b);
    const auto [it, fresh] = seen.emplace(pair, e);
    if (!fresh) {
      return verdict::PairRepeated{pair, it->second, e};
    }
  }
  return verdict::Ok{};
}

EdgePairTable edge_pair_table(const Graph &g, const Coloring &c) {
  require_total(g, c);
  EdgePairTable table;
  for (const auto &e : g.edges()) {
    table[ColorPair::of(c[e.u], c[e.v])].push_back(e);
  }
  return table;
}

Coloring trivial_coloring(std::size_t n) {
  std::vector<Color> colors(n);
  std::iota(colors.begin(), colors.end(), 1);
  return Coloring(std::move(colors));
}

}  // namespace harmonium
