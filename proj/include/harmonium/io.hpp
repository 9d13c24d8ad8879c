#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "harmonium/bounds.hpp"
#include "harmonium/graph.hpp"
#include "harmonium/solver.hpp"
#include "harmonium/verify.hpp"

namespace harmonium {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Edge-list format: first line "n m", then m lines "u v" (0-based). Lines
// whose first non-blank character is '#' are ignored, as are blank lines.
Graph read_edge_list(std::istream &in);
Graph read_edge_list_file(const std::filesystem::path &path);
void write_edge_list(std::ostream &out, const Graph &g);
std::string to_edge_list(const Graph &g);

// Colouring format: n lines "vertex color"; every vertex exactly once.
Coloring read_coloring(std::istream &in, std::size_t n);
Coloring read_coloring_file(const std::filesystem::path &path, std::size_t n);
void write_coloring(std::ostream &out, const Coloring &c);

/// Graphviz DOT; with a colouring every node is labelled by its colour and
/// filled from the set312 palette, colour c -> index (c-1) mod 12 + 1.
std::string export_dot(const Graph &g, const std::optional<Coloring> &c = std::nullopt);

nlohmann::json to_json(const BoundsReport &b);
nlohmann::json to_json(const SolveResult &r);
nlohmann::json to_json(const ExistsResult &r);
nlohmann::json to_json(const Verdict &v);
nlohmann::json to_json(const GraphStats &s);

}  // namespace harmonium
