#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "cdg/graph.hpp"
#include "cdg/orientation.hpp"

namespace cdg {

// Edge-list text: one "u v" edge or one "v" isolated vertex per line, '#'
// starts a comment line, blank lines ignored. Vertices are ordered by first
// appearance. Throws ParseError carrying the 1-based line number.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
Graph load_edge_list(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);

// Undirected "graph { ... }", or "digraph { ... }" when an orientation is
// supplied (validated against g).
std::string to_dot(const Graph& g, const std::optional<Orientation>& orientation = std::nullopt,
                   std::string_view name = "G");

}  // namespace cdg
