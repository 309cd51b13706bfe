#pragma once

#include "tokengraphs/token_graph.hpp"

#include "json.hpp"

#include <iosfwd>

namespace tokengraphs {

/// {n, k, vertices: [sorted 1-based subsets in rank order], edges: [[rank, rank], ...]}
nlohmann::json to_json(const TokenGraph& t);

/// Graphviz export with subset labels such as "{1,3,4}".
void write_token_dot(std::ostream& out, const TokenGraph& t);

/// Sorted 1-based member list of a token vertex.
nlohmann::json subset_json(SubsetMask s);

} // namespace tokengraphs
