#include "harmonium/io.hpp"

#include <fstream>
#include <sstream>

namespace harmonium {

namespace {

// Next non-comment, non-blank line; false at end of input.
bool next_line(std::istream &in, std::string &line, int &lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') {
      continue;
    }
    return true;
  }
  return false;
}

[[noreturn]] void fail(int lineno, const std::string &what) {
  throw ParseError("line " + std::to_string(lineno) + ": " + what);
}

std::pair<long long, long long> two_ints(const std::string &line, int lineno) {
  std::istringstream ss(line);
  long long a = 0;
  long long b = 0;
  std::string rest;
  if (!(ss >> a >> b) || (ss >> rest)) {
    fail(lineno, "expected two integers, got '" + line + "'");
  }
  return {a, b};
}

std::ifstream open(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open " + path.string());
  }
  return in;
}

nlohmann::json edge_json(const Edge &e) { return nlohmann::json::array({e.u, e.v}); }

}  // namespace

Graph read_edge_list(std::istream &in) {
  std::string line;
  int lineno = 0;
  if (!next_line(in, line, lineno)) {
    throw ParseError("empty edge list: missing 'n m' header");
  }
  const auto [n, m] = two_ints(line, lineno);
  if (n < 0 || m < 0) {
    fail(lineno, "negative vertex or edge count");
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_line(in, line, lineno)) {
      throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    }
    const auto [u, v] = two_ints(line, lineno);
    pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (next_line(in, line, lineno)) {
    fail(lineno, "unexpected content after " + std::to_string(m) + " edges");
  }
  try {
    return Graph::from_edge_list(static_cast<std::size_t>(n), pairs);
  } catch (const GraphError &e) {
    throw ParseError(e.what());
  }
}

Graph read_edge_list_file(const std::filesystem::path &path) {
  auto in = open(path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream &out, const Graph &g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto &e : g.edges()) {
    out << e.u << ' ' << e.v << '\n';
  }
}

std::string to_edge_list(const Graph &g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

Coloring read_coloring(std::istream &in, std::size_t n) {
  std::vector<Color> colors(n, 0);
  std::string line;
  int lineno = 0;
  while (next_line(in, line, lineno)) {
    const auto [v, c] = two_ints(line, lineno);
    if (v < 0 || static_cast<std::size_t>(v) >= n) {
      fail(lineno, "vertex " + std::to_string(v) + " out of range");
    }
    if (c < 1) {
      fail(lineno, "colours start at 1");
    }
    if (colors[static_cast<std::size_t>(v)] != 0) {
      fail(lineno, "vertex " + std::to_string(v) + " coloured twice");
    }
    colors[static_cast<std::size_t>(v)] = static_cast<Color>(c);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (colors[v] == 0) {
      throw ParseError("partial colouring: vertex " + std::to_string(v) + " has no colour");
    }
  }
  return Coloring(std::move(colors));
}

Coloring read_coloring_file(const std::filesystem::path &path, std::size_t n) {
  auto in = open(path);
  return read_coloring(in, n);
}

void write_coloring(std::ostream &out, const Coloring &c) {
  for (std::size_t v = 0; v < c.size(); ++v) {
    out << v << ' ' << c.colors()[v] << '\n';
  }
}

std::string export_dot(const Graph &g, const std::optional<Coloring> &c) {
  if (c && c->size() != g.order()) {
    throw GraphError("export_dot: colouring does not cover every vertex");
  }
  std::ostringstream out;
  out << "graph G {\n";
  if (c) {
    out << "  node [style=filled, colorscheme=set312];\n";
  }
  for (Vertex v = 0; static_cast<std::size_t>(v) < g.order(); ++v) {
    out << "  " << v;
    if (c) {
      const Color col = (*c)[v];
      out << " [label=\"" << col << "\", fillcolor=" << (col - 1) % 12 + 1 << "]";
    } else {
      out << " [label=\"\"]";
    }
    out << ";\n";
  }
  for (const auto &e : g.edges()) {
    out << "  " << e.u << " -- " << e.v << ";\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::json to_json(const BoundsReport &b) {
  nlohmann::json j{{"size_bound", b.size_bound},
                   {"delta_bound", b.delta_bound},
                   {"n2_bound", b.n2_bound},
                   {"regular33_bound", nullptr},
                   {"combined", b.combined},
                   {"lee_mitchem_upper", b.lee_mitchem_upper},
                   {"mcdiarmid_upper", nullptr}};
  if (b.regular33_bound) {
    j["regular33_bound"] = *b.regular33_bound;
  }
  if (b.mcdiarmid_upper) {
    j["mcdiarmid_upper"] = *b.mcdiarmid_upper;
  }
  return j;
}

nlohmann::json to_json(const SolveResult &r) {
  nlohmann::json j{{"complete", r.complete},
                   {"h", nullptr},
                   {"witness", r.witness.colors()},
                   {"proved_lower", r.proved_lower},
                   {"best_upper", r.best_upper},
                   {"nodes_explored", r.nodes_explored},
                   {"elapsed", r.elapsed.count()}};
  if (r.complete) {
    j["h"] = r.h;
  }
  return j;
}

nlohmann::json to_json(const ExistsResult &r) {
  nlohmann::json j{{"outcome", std::string(to_string(r.outcome))},
                   {"witness", nullptr},
                   {"nodes_explored", r.nodes},
                   {"elapsed", r.elapsed.count()}};
  if (r.witness) {
    j["witness"] = r.witness->colors();
  }
  return j;
}

nlohmann::json to_json(const Verdict &v) {
  struct Visitor {
    nlohmann::json operator()(const verdict::Ok &) const { return {{"verdict", "ok"}}; }
    nlohmann::json operator()(const verdict::NotProper &x) const {
      return {{"verdict", "not_proper"}, {"edge", edge_json(x.edge)}};
    }
    nlohmann::json operator()(const verdict::PairRepeated &x) const {
      return {{"verdict", "pair_repeated"},
              {"pair", {x.pair.lo, x.pair.hi}},
              {"first", edge_json(x.first)},
              {"second", edge_json(x.second)}};
    }
  };
  return std::visit(Visitor{}, v);
}

nlohmann::json to_json(const GraphStats &s) {
  nlohmann::json j{{"n", s.n},
                   {"m", s.m},
                   {"max_degree", s.max_degree},
                   {"diameter", nullptr},
                   {"degree_sequence", s.degree_sequence}};
  if (s.diameter) {
    j["diameter"] = *s.diameter;
  }
  return j;
}

}  // namespace harmonium
