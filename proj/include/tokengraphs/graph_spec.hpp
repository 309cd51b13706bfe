#pragma once

#include "tokengraphs/graph.hpp"

#include <string>
#include <string_view>

namespace tokengraphs {

/// Graph named on the command line:
///   path:N | cycle:N | complete:N | kbip:M,N | star:N | match:M,S | file:PATH
/// file: reads the 1-based edge-list format.
Graph parse_graph_spec(std::string_view spec);

} // namespace tokengraphs
