#include "tokengraphs/token_graph.hpp"

#include "tokengraphs/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace tokengraphs {

TokenGraph::TokenGraph(Graph base, int k, Graph derived, std::optional<Bipartition> classes)
    : base_(std::move(base)), codec_(base_.order(), k), derived_(std::move(derived)), classes_(std::move(classes))
{
}

TokenGraph token_graph(const Graph& g, int k)
{
    const int n = g.order();
    if (n > kMaxBaseOrder)
        throw InputError("token graphs need a base graph with at most 64 vertices");
    if (k < 1 || k > n - 1)
        throw InputError("token count k = " + std::to_string(k) + " outside [1, " + std::to_string(n - 1) + "]");
    SubsetCodec codec(n, k);
    if (codec.size() > kMaxTokenVertices)
        throw InputError("token graph would have " + std::to_string(codec.size()) + " vertices");

    const std::uint64_t per_edge = binomial(n - 2, k - 1);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(per_edge) * static_cast<std::size_t>(g.edge_count()));

    std::vector<int> rest;
    rest.reserve(static_cast<std::size_t>(n));
    for (const auto& e : g.edges()) {
        rest.clear();
        for (int x = 0; x < n; ++x)
            if (x != e.u && x != e.v)
                rest.push_back(x);

        const SubsetMask bit_u = SubsetMask{1} << e.u;
        const SubsetMask bit_v = SubsetMask{1} << e.v;
        // compressed (k-1)-subsets of `rest`, walked in colex order
        SubsetMask compressed = (k - 1 == 0) ? 0 : (~SubsetMask{0} >> (64 - (k - 1)));
        for (std::uint64_t i = 0; i < per_edge; ++i) {
            SubsetMask a = 0;
            for (SubsetMask c = compressed; c; c &= c - 1)
                a |= SubsetMask{1} << rest[std::countr_zero(c)];
            auto x = static_cast<Vertex>(codec.rank(a | bit_u));
            auto y = static_cast<Vertex>(codec.rank(a | bit_v));
            edges.push_back({std::min(x, y), std::max(x, y)});
            if (compressed != 0 && i + 1 < per_edge)
                compressed = next_same_size(compressed);
        }
    }
    std::sort(edges.begin(), edges.end());

    std::optional<Bipartition> classes;
    Graph derived(static_cast<int>(codec.size()), std::move(edges));
    if (auto base_parts = bipartition_of(g)) {
        Bipartition labels;
        labels.side.reserve(static_cast<std::size_t>(codec.size()));
        const SubsetMask red = mask_of(base_parts->red());
        for (SubsetMask s = codec.first(), i = 0; i < codec.size(); ++i) {
            labels.side.push_back(std::popcount(s & red) % 2 == 1 ? Side::red : Side::blue);
            if (i + 1 < codec.size())
                s = next_same_size(s);
        }
        classes = std::move(labels);
    }
    return TokenGraph(g, k, std::move(derived), std::move(classes));
}

std::vector<Vertex> complement_map(const TokenGraph& t)
{
    const int n = t.base().order();
    const SubsetMask all = n == 64 ? ~SubsetMask{0} : ((SubsetMask{1} << n) - 1);
    SubsetCodec target(n, n - t.k());
    std::vector<Vertex> table;
    table.reserve(static_cast<std::size_t>(t.codec().size()));
    for (std::uint64_t r = 0; r < t.codec().size(); ++r)
        table.push_back(static_cast<Vertex>(target.rank(all & ~t.codec().unrank(r))));

    const TokenGraph other = token_graph(t.base(), n - t.k());
    if (!is_isomorphism(t.graph(), other.graph(), table))
        throw std::logic_error("complement map failed isomorphism certification");
    return table;
}

Bipartition token_bipartition(const TokenGraph& t, const Bipartition& base)
{
    if (!is_proper(t.base(), base))
        throw InputError("token_bipartition: base labels are not a bipartition of the base graph");
    const SubsetMask red = mask_of(base.red());
    Bipartition labels;
    labels.side.reserve(static_cast<std::size_t>(t.codec().size()));
    for (std::uint64_t r = 0; r < t.codec().size(); ++r) {
        const SubsetMask s = t.codec().unrank(r);
        labels.side.push_back(std::popcount(s & red) % 2 == 1 ? Side::red : Side::blue);
    }
    if (!is_proper(t.graph(), labels))
        throw std::logic_error("token_bipartition: parity classes are not a proper colouring");
    return labels;
}

} // namespace tokengraphs
