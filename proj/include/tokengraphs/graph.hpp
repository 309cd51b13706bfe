#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tokengraphs {

using Vertex = int;

/// Unordered pair stored with first < second.
struct Edge {
    Vertex u;
    Vertex v;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
///
/// Neighbor lists are sorted. Adjacency is answered in O(1) from a packed
/// bit matrix for graphs up to kBitMatrixLimit vertices, and by binary search
/// over the neighbor list beyond that.
class Graph {
public:
    static constexpr int kBitMatrixLimit = 8192;

    Graph() = default;

    /// Trusted constructor: edges must already be normalized, unique and sorted.
    /// Use make_graph() for caller-supplied input.
    Graph(int order, std::vector<Edge> sorted_edges);

    int order() const { return static_cast<int>(neighbors_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    std::span<const Edge> edges() const { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return neighbors_[v]; }
    int degree(Vertex v) const { return static_cast<int>(neighbors_[v].size()); }
    bool adjacent(Vertex u, Vertex v) const;

    /// Neighborhood as a bit mask; only for graphs with at most 64 vertices.
    std::uint64_t neighbor_mask(Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.order() == b.order(); }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> neighbors_;
    std::vector<std::uint64_t> bits_;
    int words_per_row_ = 0;
};

/// Validating constructor. Duplicate pairs collapse; self-loops and
/// out-of-range endpoints raise InputError.
Graph make_graph(int order, std::span<const std::pair<int, int>> pairs);
Graph make_graph(int order, std::initializer_list<std::pair<int, int>> pairs);

enum class Family { path, cycle, complete, complete_bipartite, star, matching_graph };

std::optional<Family> parse_family(std::string_view name);
std::string_view family_name(Family kind);

/// Standard families with canonical labelings:
///   path(n), cycle(n)           vertices in traversal order
///   complete(n)
///   complete_bipartite(m, n)    B = 0..m-1 first, then R = m..m+n-1
///   star(n)                     K_{1,n}, centre 0
///   matching_graph(m, s)        edges (2i, 2i+1), plus vertex 2m when s = 1
Graph family(Family kind, std::span<const int> params);
Graph family(Family kind, std::initializer_list<int> params);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int m, int n);
Graph star_graph(int n);
Graph matching_graph(int m, int s);

/// G(n, p) with each pair kept independently. Reproducible across platforms:
/// raw 64-bit mt19937 draws are compared against p * 2^64.
Graph random_graph(int n, double p, std::uint64_t seed);

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_original;   // new id -> old id
    std::vector<Vertex> from_original; // old id -> new id, -1 when deleted
};

/// Induced subgraph on V(G) minus `removed`, relabeled densely in increasing
/// order of the surviving ids.
InducedSubgraph delete_vertices(const Graph& g, std::span<const Vertex> removed);
InducedSubgraph delete_vertices(const Graph& g, std::initializer_list<Vertex> removed);

/// Closed neighbourhood N[v], sorted.
std::vector<Vertex> closed_neighborhood(const Graph& g, Vertex v);

enum class Side : std::uint8_t { blue, red };

/// Two-colouring {B, R} of a vertex set. `side[v]` says which part v is in.
struct Bipartition {
    std::vector<Side> side;

    int blue_count() const;
    int red_count() const;
    std::vector<Vertex> blue() const;
    std::vector<Vertex> red() const;
    std::vector<Vertex> part(Side s) const;
    /// The convention |B| <= |R| is recorded, never enforced.
    bool blue_not_larger() const { return blue_count() <= red_count(); }
};

/// True when every edge of g has one endpoint on each side.
bool is_proper(const Graph& g, const Bipartition& p);

/// Two-colouring by BFS; the lowest-id vertex of every component goes to B.
std::optional<Bipartition> bipartition_of(const Graph& g);

/// Checks that `map` (vertex of a -> vertex of b) is a bijection that maps
/// edges to edges and preserves the edge count.
bool is_isomorphism(const Graph& a, const Graph& b, std::span<const Vertex> map);

} // namespace tokengraphs
