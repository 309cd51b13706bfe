#pragma once

#include "tokengraphs/graph.hpp"
#include "tokengraphs/subsets.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tokengraphs {

/// F_k(G): the graph on the k-subsets of V(G), two subsets adjacent when
/// their symmetric difference is an edge of G. Token vertex ids are colex
/// ranks of the subsets.
class TokenGraph {
public:
    TokenGraph(Graph base, int k, Graph derived, std::optional<Bipartition> classes);

    const Graph& base() const { return base_; }
    int k() const { return codec_.k(); }
    const Graph& graph() const { return derived_; }
    const SubsetCodec& codec() const { return codec_; }

    SubsetMask subset(Vertex v) const { return codec_.unrank(static_cast<std::uint64_t>(v)); }
    Vertex vertex_of(SubsetMask s) const { return static_cast<Vertex>(codec_.rank(s)); }
    std::string label(Vertex v) const { return subset_label(subset(v)); }

    /// The R/B classes induced by bipartition_of(base), when the base is bipartite.
    const std::optional<Bipartition>& classes() const { return classes_; }

private:
    Graph base_;
    SubsetCodec codec_;
    Graph derived_;
    std::optional<Bipartition> classes_;
};

/// Largest token graph the builder will materialize.
constexpr std::uint64_t kMaxTokenVertices = 4'000'000;

/// Builds F_k(G) for 1 <= k <= n-1 by emitting, for every base edge [u,v]
/// and every (k-1)-subset A avoiding u and v, the edge [A+u, A+v].
TokenGraph token_graph(const Graph& g, int k);

/// Rank table of A -> V(G) \ A, from F_k(G) onto F_{n-k}(G). The table is
/// certified as an isomorphism before it is returned.
std::vector<Vertex> complement_map(const TokenGraph& t);

/// Labels token vertex A red when |R ∩ A| is odd, blue otherwise.
/// Throws InputError unless `base` is a proper bipartition of t.base().
Bipartition token_bipartition(const TokenGraph& t, const Bipartition& base);

} // namespace tokengraphs
