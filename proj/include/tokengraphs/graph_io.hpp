#pragma once

#include "tokengraphs/graph.hpp"

#include <functional>
#include <iosfwd>
#include <string>

namespace tokengraphs {

/// Edge-list text: first line "n m", then m lines "u v" with 1-based ids.
/// Blank lines and lines starting with '#' are skipped.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

using VertexLabeler = std::function<std::string(Vertex)>;

/// Graphviz "graph" block. Without a labeler vertices are printed 1-based.
void write_dot(std::ostream& out, const Graph& g, const VertexLabeler& label = {},
               const std::string& name = "G");

} // namespace tokengraphs
