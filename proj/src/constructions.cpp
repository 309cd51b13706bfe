#include "tokengraphs/constructions.hpp"

#include "tokengraphs/error.hpp"
#include "tokengraphs/formulas.hpp"
#include "tokengraphs/token_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace tokengraphs {

namespace {

SubsetMask bit(int v) { return SubsetMask{1} << v; }

SubsetMask full_mask(int n) { return n == 64 ? ~SubsetMask{0} : bit(n) - 1; }

Edge normalized(Vertex x, Vertex y) { return {std::min(x, y), std::max(x, y)}; }

void sort_edges(Matching& m) { std::sort(m.edges.begin(), m.edges.end()); }

SubsetMask lift(SubsetMask s, const std::vector<Vertex>& to_original)
{
    SubsetMask out = 0;
    for (int e : members(s))
        out |= bit(to_original[e]);
    return out;
}

// F_k matching -> F_{n-k} matching through A -> V \ A.
Matching complement_matching(int n, int k, const Matching& m)
{
    const SubsetCodec from(n, k);
    const SubsetCodec to(n, n - k);
    const SubsetMask all = full_mask(n);
    Matching out;
    for (const auto& e : m.edges) {
        auto x = static_cast<Vertex>(to.rank(all & ~from.unrank(static_cast<std::uint64_t>(e.u))));
        auto y = static_cast<Vertex>(to.rank(all & ~from.unrank(static_cast<std::uint64_t>(e.v))));
        out.edges.push_back(normalized(x, y));
    }
    sort_edges(out);
    return out;
}

MatchingLabels labels_of(const Graph& g, const Matching& m)
{
    MatchingLabels labels;
    std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
    for (const auto& e : m.edges) {
        labels.a.push_back(e.u);
        labels.b.push_back(e.v);
        covered[e.u] = covered[e.v] = 1;
    }
    for (Vertex v = 0; v < g.order(); ++v)
        if (!covered[v])
            labels.b.push_back(v);
    return labels;
}

Matching theorem1_recursive(const Graph& g, const Matching& m, int k)
{
    const int n = g.order();
    if (k == 1)
        return m; // F_1(G) ranks coincide with vertex ids
    if (k == n - 1)
        return complement_matching(n, 1, m);
    if (k == 2)
        return f2_matching_from_labels(g, labels_of(g, m));
    if (k == n - 2)
        return complement_matching(n, 2, f2_matching_from_labels(g, labels_of(g, m)));

    const Edge e = m.edges.front();
    const InducedSubgraph h = delete_vertices(g, {e.u, e.v});
    Matching rest;
    for (const auto& f : m.edges)
        if (f != e)
            rest.edges.push_back(normalized(h.from_original[f.u], h.from_original[f.v]));
    sort_edges(rest);
    const Matching n_part = theorem1_recursive(h.graph, rest, k);
    const Matching l_part = theorem1_recursive(h.graph, rest, k - 2);
    return lemma_times_combine(g, e, n_part, l_part, k);
}

} // namespace

Matching lemma_times_combine(const Graph& g, Edge e, const Matching& n_part, const Matching& l_part, int k)
{
    const int n = g.order();
    if (n < 6 || k < 3 || k > n - 3)
        throw InputError("lemma_times_combine: need n >= 6 and 3 <= k <= n-3");
    if (e.u == e.v || e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || !g.adjacent(e.u, e.v))
        throw InputError("lemma_times_combine: [v,w] is not an edge of G");

    const InducedSubgraph h = delete_vertices(g, {e.u, e.v});
    const TokenGraph fk_h = token_graph(h.graph, k);
    const TokenGraph fk2_h = token_graph(h.graph, k - 2);
    if (!is_valid_matching(fk_h.graph(), n_part))
        throw InputError("lemma_times_combine: N is not a matching of F_k(G - {v,w})");
    if (!is_valid_matching(fk2_h.graph(), l_part))
        throw InputError("lemma_times_combine: L is not a matching of F_{k-2}(G - {v,w})");

    const SubsetCodec codec(n, k);
    auto rank_of = [&](SubsetMask s) { return static_cast<Vertex>(codec.rank(s)); };
    const SubsetMask vw = bit(e.u) | bit(e.v);

    Matching out;
    for (const auto& f : n_part.edges)
        out.edges.push_back(normalized(rank_of(lift(fk_h.subset(f.u), h.to_original)),
                                       rank_of(lift(fk_h.subset(f.v), h.to_original))));
    for (const auto& f : l_part.edges)
        out.edges.push_back(normalized(rank_of(vw | lift(fk2_h.subset(f.u), h.to_original)),
                                       rank_of(vw | lift(fk2_h.subset(f.v), h.to_original))));

    const SubsetCodec small(n - 2, k - 1);
    for (std::uint64_t r = 0; r < small.size(); ++r) {
        const SubsetMask a = lift(small.unrank(r), h.to_original);
        out.edges.push_back(normalized(rank_of(a | bit(e.u)), rank_of(a | bit(e.v))));
    }
    sort_edges(out);

    const auto expected = static_cast<std::size_t>(n_part.size() + l_part.size()) + binomial(n - 2, k - 1);
    if (out.edges.size() != expected || !is_valid_matching(token_graph(g, k).graph(), out))
        throw std::logic_error("lemma_times_combine: combined edges do not form a matching of the stated size");
    return out;
}

Matching f2_matching_from_labels(const Graph& g, const MatchingLabels& labels)
{
    const int m = static_cast<int>(labels.a.size());
    const int extra = static_cast<int>(labels.b.size()) - m;
    if (extra < 0 || extra > 1)
        throw InputError("f2 construction: b must have m or m+1 entries");
    for (int i = 0; i < m; ++i)
        if (!g.adjacent(labels.a[i], labels.b[i]))
            throw InputError("f2 construction: a_i b_i is not an edge");

    const SubsetCodec codec(g.order(), 2);
    auto pair_rank = [&](Vertex x, Vertex y) { return static_cast<Vertex>(codec.rank(bit(x) | bit(y))); };
    const auto& a = labels.a;
    const auto& b = labels.b;

    Matching out;
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < j; ++i)
            out.edges.push_back(normalized(pair_rank(a[i], a[j]), pair_rank(a[j], b[i])));
    for (int j = 0; j < m + extra; ++j)
        for (int i = 0; i < j; ++i)
            out.edges.push_back(normalized(pair_rank(b[i], b[j]), pair_rank(a[i], b[j])));
    sort_edges(out);
    return out;
}

F2Construction f2_matching_construction(int m, int s)
{
    if (s != 0 && s != 1)
        throw InputError("f2_matching_construction: s must be 0 or 1");
    if (m < 1 || 2 * m + s < 3)
        throw InputError("f2_matching_construction: need order 2m+s >= 3");
    F2Construction out;
    out.base = matching_graph(m, s);
    for (int i = 0; i < m; ++i) {
        out.labels.a.push_back(2 * i);
        out.labels.b.push_back(2 * i + 1);
    }
    if (s == 1)
        out.labels.b.push_back(2 * m);
    out.matching = f2_matching_from_labels(out.base, out.labels);

    const auto expected = binomial(m, 2) + binomial(m + s, 2);
    if (static_cast<std::uint64_t>(out.matching.size()) != expected
        || !is_valid_matching(token_graph(out.base, 2).graph(), out.matching))
        throw std::logic_error("f2_matching_construction: families are not a matching of the stated size");
    return out;
}

Matching theorem1_matching(const Graph& g, const Matching& m, int k)
{
    const int n = g.order();
    if (!is_valid_matching(g, m))
        throw InputError("theorem1_matching: M is not a matching of G");
    if (2 * m.size() != n && 2 * m.size() != n - 1)
        throw InputError("theorem1_matching: M must be perfect or almost perfect");
    if (k < 1 || k > n - 1)
        throw InputError("theorem1_matching: need 1 <= k <= n-1");

    Matching sorted = m;
    for (auto& e : sorted.edges)
        e = normalized(e.u, e.v);
    sort_edges(sorted);

    Matching out = theorem1_recursive(g, sorted, k);
    const Rational guaranteed = formulas::nu_token_formula(n, k).value;
    if (Rational(out.size()) != guaranteed || !is_valid_matching(token_graph(g, k).graph(), out))
        throw std::logic_error("theorem1_matching: construction missed the guaranteed size");
    return out;
}

std::vector<Vertex> isolated_tokens(int m, int s, int k)
{
    const Graph g = matching_graph(m, s);
    const int n = g.order();
    if (k < 1 || k > n - 1)
        throw InputError("isolated_tokens: need 1 <= k <= n-1");
    if (k % 2 == 1 && s == 0)
        return {};

    const int pairs = k / 2;
    const SubsetMask extra = (k % 2 == 1) ? bit(2 * m) : 0;
    const SubsetCodec choose(m, pairs);
    const SubsetCodec codec(n, k);
    std::vector<Vertex> out;
    for (std::uint64_t r = 0; r < choose.size(); ++r) {
        SubsetMask token = extra;
        for (int i : members(choose.unrank(r)))
            token |= bit(2 * i) | bit(2 * i + 1);
        out.push_back(static_cast<Vertex>(codec.rank(token)));
    }
    std::sort(out.begin(), out.end());

    const TokenGraph t = token_graph(g, k);
    for (Vertex v : out)
        if (t.graph().degree(v) != 0)
            throw std::logic_error("isolated_tokens: " + t.label(v) + " is not isolated");
    return out;
}

namespace {

void require_odd_cycle_index(int p, int i)
{
    if (p < 3 || p % 2 == 0)
        throw InputError("cycle layers: p must be odd and at least 3");
    if (i < 1 || i > p - 1)
        throw InputError("cycle layers: index must be in [1, p-1]");
}

} // namespace

LayerSet cycle_layer(int p, int i)
{
    require_odd_cycle_index(p, i);
    LayerSet layer{p, i, {}};
    for (int j = 1; j <= i; ++j)
        layer.members.push_back(bit(j - 1) | bit(p - (i - j) - 1));
    return layer;
}

bool layers_linked(int p, int i, int j)
{
    require_odd_cycle_index(p, i);
    require_odd_cycle_index(p, j);
    const TokenGraph t = token_graph(cycle_graph(p), 2);
    const LayerSet a = cycle_layer(p, i);
    const LayerSet b = cycle_layer(p, j);
    for (SubsetMask x : a.members)
        for (SubsetMask y : b.members)
            if (t.graph().adjacent(t.vertex_of(x), t.vertex_of(y)))
                return true;
    return false;
}

bool layers_linked_by_rule(int p, int i, int j)
{
    require_odd_cycle_index(p, i);
    require_odd_cycle_index(p, j);
    return i - j == 1 || j - i == 1 || i + j == p + 1;
}

std::vector<int> cycle_independent_layers(int p)
{
    if (p < 5 || p % 2 == 0)
        throw InputError("cycle_independent_set: p must be odd and at least 5");
    const int t = p / 2;
    std::vector<int> out;
    const int low_end = (t % 2 == 1) ? t : t - 1;
    const int high_start = (t % 2 == 1) ? t + 3 : t + 2;
    for (int i = 1; i <= low_end; i += 2)
        out.push_back(i);
    for (int i = high_start; i <= p - 1; i += 2)
        out.push_back(i);
    return out;
}

IndependentSet cycle_independent_set(int p)
{
    const auto layers = cycle_independent_layers(p);
    const TokenGraph t = token_graph(cycle_graph(p), 2);
    IndependentSet out;
    for (int i : layers)
        for (SubsetMask s : cycle_layer(p, i).members)
            out.vertices.push_back(t.vertex_of(s));
    std::sort(out.vertices.begin(), out.vertices.end());
    if (!is_independent(t.graph(), out.vertices) || out.size() != formulas::beta_cycle_f2(p))
        throw std::logic_error("cycle_independent_set: layer union is not independent of the stated size");
    return out;
}

bool below_threshold(int m, int s)
{
    return static_cast<std::uint64_t>(m) > binomial(s, 2);
}

namespace {

std::vector<std::pair<int, int>> colex_pairs(int s, std::size_t limit)
{
    std::vector<std::pair<int, int>> out;
    for (int j = 2; j <= s && out.size() < limit; ++j)
        for (int i = 1; i < j && out.size() < limit; ++i)
            out.emplace_back(i, j);
    return out;
}

WitnessGraph witness_frame(int m, int s)
{
    if (m < 1 || s < 0)
        throw InputError("witness graph: need m >= 1 and s >= 0");
    if (2 * m + s > kMaxBaseOrder)
        throw InputError("witness graph: order exceeds 64");
    WitnessGraph w;
    w.m = m;
    w.s = s;
    w.parts.side.assign(static_cast<std::size_t>(m), Side::blue);
    w.parts.side.resize(static_cast<std::size_t>(2 * m + s), Side::red);
    return w;
}

} // namespace

WitnessGraph witness_graph_small_s(int m, int s)
{
    WitnessGraph w = witness_frame(m, s);
    if (!below_threshold(m, s))
        throw InputError("witness_graph_small_s: need s < s0(m), i.e. m > C(s,2)");
    auto blue = [](int i) { return i - 1; };
    auto red = [m](int i) { return m + i - 1; };

    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= m; ++i)
        pairs.emplace_back(blue(i), red(i));
    w.phi.direction = InjectionDirection::pairs_to_indices;
    w.phi.table = colex_pairs(s, binomial(s, 2));
    w.phi.domain_size = static_cast<int>(w.phi.table.size());
    for (std::size_t t = 0; t < w.phi.table.size(); ++t) {
        const auto [i, j] = w.phi.table[t];
        const int image = static_cast<int>(t) + 1;
        pairs.emplace_back(blue(image), red(m + i));
        pairs.emplace_back(blue(image), red(m + j));
    }
    w.graph = make_graph(2 * m + s, pairs);
    w.claimed_beta = static_cast<std::int64_t>(m) * (m + s);
    return w;
}

WitnessGraph witness_graph_large_s(int m, int s)
{
    WitnessGraph w = witness_frame(m, s);
    if (below_threshold(m, s))
        throw InputError("witness_graph_large_s: need s >= s0(m), i.e. m <= C(s,2)");
    auto blue = [](int i) { return i - 1; };
    auto red = [m](int i) { return m + i - 1; };

    std::vector<std::pair<int, int>> pairs;
    w.phi.direction = InjectionDirection::indices_to_pairs;
    w.phi.table = colex_pairs(s, static_cast<std::size_t>(m));
    w.phi.domain_size = m;
    for (int i = 1; i <= m; ++i) {
        const auto [i1, i2] = w.phi.table[i - 1];
        pairs.emplace_back(blue(i), red(i));
        pairs.emplace_back(blue(i), red(m + i1));
        pairs.emplace_back(blue(i), red(m + i2));
    }
    w.graph = make_graph(2 * m + s, pairs);
    w.claimed_beta = static_cast<std::int64_t>(binomial(2 * m + s, 2)) - static_cast<std::int64_t>(m) * (m + s);
    return w;
}

} // namespace tokengraphs
