#pragma once

#include "tokengraphs/graph.hpp"
#include "tokengraphs/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace tokengraphs {

/// A set of edges of a host graph, kept sorted.
struct Matching {
    std::vector<Edge> edges;

    int size() const { return static_cast<int>(edges.size()); }
};

/// Every edge is in the host graph and no vertex is covered twice.
bool is_valid_matching(const Graph& g, const Matching& m);

/// mate[v] = partner of v, or -1.
std::vector<Vertex> mates_of(const Graph& g, const Matching& m);

/// Edmonds' blossom algorithm on plain adjacency lists. Returns mate[v] or -1.
/// Deterministic: a greedy pass in vertex order, then augmenting-path searches
/// rooted at free vertices in increasing id order, neighbours scanned in list order.
std::vector<Vertex> maximum_matching_mates(std::span<const std::vector<Vertex>> adjacency);

/// Maximum-cardinality matching of a general graph.
Matching max_matching(const Graph& g);

/// 2|M| = |V|. Throws InputError when m is not a matching of g.
bool is_perfect(const Matching& m, const Graph& g);
/// 2|M| = |V| - 1. Throws InputError when m is not a matching of g.
bool is_almost_perfect(const Matching& m, const Graph& g);

/// True iff a maximum matching covers every vertex on `side` of `p`
/// (equivalently, Hall's condition holds for that side).
bool saturates(const Graph& g, const Bipartition& p, Side side);

/// Vertices S on `side` with |N(S)| < |S|, or nullopt when the side is
/// saturated. S is the set of side vertices reachable by alternating paths
/// from the side vertices a maximum matching leaves uncovered.
std::optional<std::vector<Vertex>> hall_witness(const Graph& g, const Bipartition& p, Side side);

/// N(S) for a vertex set S, sorted.
std::vector<Vertex> neighborhood_of(const Graph& g, std::span<const Vertex> s);

struct FractionBound {
    Rational value;
    bool vacuous = false; // the exponent floor(k/2) is zero
    bool exact = false;   // n even, k odd: a perfect matching is guaranteed
};

/// Lower bound on nu(F_k(G)) / C(n,k) when nu(G) = floor(n/2):
///   n odd:            (1 - (k/n)^floor(k/2)) / 2
///   n even, k even:   (1 - (k/n)^(k/2)) / 2
///   n even, k odd:    1/2 exactly
FractionBound matching_fraction_bound(int n, int k);

} // namespace tokengraphs
