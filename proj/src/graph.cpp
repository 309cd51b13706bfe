#include "tokengraphs/graph.hpp"

#include "tokengraphs/error.hpp"

#include <algorithm>
#include <queue>
#include <random>

namespace tokengraphs {

Graph::Graph(int order, std::vector<Edge> sorted_edges)
    : edges_(std::move(sorted_edges)), neighbors_(static_cast<std::size_t>(order))
{
    for (const auto& e : edges_) {
        neighbors_[e.u].push_back(e.v);
        neighbors_[e.v].push_back(e.u);
    }
    for (auto& list : neighbors_)
        std::sort(list.begin(), list.end());

    if (order <= kBitMatrixLimit) {
        words_per_row_ = (order + 63) / 64;
        bits_.assign(static_cast<std::size_t>(order) * words_per_row_, 0);
        for (const auto& e : edges_) {
            bits_[static_cast<std::size_t>(e.u) * words_per_row_ + e.v / 64] |= std::uint64_t{1} << (e.v % 64);
            bits_[static_cast<std::size_t>(e.v) * words_per_row_ + e.u / 64] |= std::uint64_t{1} << (e.u % 64);
        }
    }
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    if (words_per_row_ > 0 || order() == 0)
        return order() > 0 && ((bits_[static_cast<std::size_t>(u) * words_per_row_ + v / 64] >> (v % 64)) & 1);
    return std::binary_search(neighbors_[u].begin(), neighbors_[u].end(), v);
}

std::uint64_t Graph::neighbor_mask(Vertex v) const
{
    if (order() > 64)
        throw InputError("neighbor_mask requires a graph with at most 64 vertices");
    return bits_[v];
}

Graph make_graph(int order, std::span<const std::pair<int, int>> pairs)
{
    if (order < 0)
        throw InputError("negative vertex count");
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [a, b] : pairs) {
        if (a < 0 || b < 0 || a >= order || b >= order)
            throw InputError("edge endpoint out of range: (" + std::to_string(a) + "," + std::to_string(b) + ")");
        if (a == b)
            throw InputError("self-loop at vertex " + std::to_string(a));
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(order, std::move(edges));
}

Graph make_graph(int order, std::initializer_list<std::pair<int, int>> pairs)
{
    return make_graph(order, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size()));
}

namespace {

struct FamilyEntry {
    Family kind;
    std::string_view name;
    std::size_t arity;
};

constexpr FamilyEntry kFamilies[] = {
    {Family::path, "path", 1},
    {Family::cycle, "cycle", 1},
    {Family::complete, "complete", 1},
    {Family::complete_bipartite, "complete_bipartite", 2},
    {Family::star, "star", 1},
    {Family::matching_graph, "matching_graph", 2},
};

const FamilyEntry& entry(Family kind)
{
    for (const auto& e : kFamilies)
        if (e.kind == kind)
            return e;
    throw InputError("unknown family");
}

void require_positive(int value, const char* what)
{
    if (value < 1)
        throw InputError(std::string(what) + " must be positive");
}

} // namespace

std::optional<Family> parse_family(std::string_view name)
{
    for (const auto& e : kFamilies)
        if (e.name == name)
            return e.kind;
    return std::nullopt;
}

std::string_view family_name(Family kind) { return entry(kind).name; }

Graph path_graph(int n)
{
    require_positive(n, "path order");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < n; ++i)
        pairs.emplace_back(i, i + 1);
    return make_graph(n, pairs);
}

Graph cycle_graph(int n)
{
    if (n < 3)
        throw InputError("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        pairs.emplace_back(i, (i + 1) % n);
    return make_graph(n, pairs);
}

Graph complete_graph(int n)
{
    require_positive(n, "complete graph order");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);
    return make_graph(n, pairs);
}

Graph complete_bipartite_graph(int m, int n)
{
    require_positive(m, "part size");
    require_positive(n, "part size");
    std::vector<std::pair<int, int>> pairs;
    for (int b = 0; b < m; ++b)
        for (int r = 0; r < n; ++r)
            pairs.emplace_back(b, m + r);
    return make_graph(m + n, pairs);
}

Graph star_graph(int n) { return complete_bipartite_graph(1, n); }

Graph matching_graph(int m, int s)
{
    require_positive(m, "matching size");
    if (s != 0 && s != 1)
        throw InputError("matching_graph extra vertex count must be 0 or 1");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < m; ++i)
        pairs.emplace_back(2 * i, 2 * i + 1);
    return make_graph(2 * m + s, pairs);
}

Graph random_graph(int n, double p, std::uint64_t seed)
{
    if (n < 0 || p < 0.0 || p > 1.0)
        throw InputError("random_graph: need n >= 0 and 0 <= p <= 1");
    std::mt19937_64 rng(seed);
    const long double scaled = static_cast<long double>(p) * 18446744073709551616.0L;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const std::uint64_t draw = rng();
            if (p >= 1.0 || static_cast<long double>(draw) < scaled)
                pairs.emplace_back(i, j);
        }
    return make_graph(n, pairs);
}

Graph family(Family kind, std::span<const int> params)
{
    const auto& e = entry(kind);
    if (params.size() != e.arity)
        throw InputError(std::string(e.name) + " expects " + std::to_string(e.arity) + " parameter(s)");
    switch (kind) {
    case Family::path: return path_graph(params[0]);
    case Family::cycle: return cycle_graph(params[0]);
    case Family::complete: return complete_graph(params[0]);
    case Family::complete_bipartite: return complete_bipartite_graph(params[0], params[1]);
    case Family::star: return star_graph(params[0]);
    case Family::matching_graph: return matching_graph(params[0], params[1]);
    }
    throw InputError("unknown family");
}

Graph family(Family kind, std::initializer_list<int> params)
{
    return family(kind, std::span<const int>(params.begin(), params.size()));
}

InducedSubgraph delete_vertices(const Graph& g, std::span<const Vertex> removed)
{
    std::vector<char> gone(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : removed) {
        if (v < 0 || v >= g.order())
            throw InputError("vertex " + std::to_string(v) + " is not in the graph");
        gone[v] = 1;
    }
    InducedSubgraph out;
    out.from_original.assign(static_cast<std::size_t>(g.order()), -1);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!gone[v]) {
            out.from_original[v] = static_cast<Vertex>(out.to_original.size());
            out.to_original.push_back(v);
        }
    }
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        if (!gone[e.u] && !gone[e.v])
            edges.push_back({out.from_original[e.u], out.from_original[e.v]});
    }
    // relabeling is monotone, so sorted order survives
    out.graph = Graph(static_cast<int>(out.to_original.size()), std::move(edges));
    return out;
}

InducedSubgraph delete_vertices(const Graph& g, std::initializer_list<Vertex> removed)
{
    return delete_vertices(g, std::span<const Vertex>(removed.begin(), removed.size()));
}

std::vector<Vertex> closed_neighborhood(const Graph& g, Vertex v)
{
    auto nbrs = g.neighbors(v);
    std::vector<Vertex> out(nbrs.begin(), nbrs.end());
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

int Bipartition::blue_count() const
{
    return static_cast<int>(std::count(side.begin(), side.end(), Side::blue));
}

int Bipartition::red_count() const
{
    return static_cast<int>(side.size()) - blue_count();
}

std::vector<Vertex> Bipartition::part(Side s) const
{
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < side.size(); ++v)
        if (side[v] == s)
            out.push_back(static_cast<Vertex>(v));
    return out;
}

std::vector<Vertex> Bipartition::blue() const { return part(Side::blue); }
std::vector<Vertex> Bipartition::red() const { return part(Side::red); }

bool is_proper(const Graph& g, const Bipartition& p)
{
    if (static_cast<int>(p.side.size()) != g.order())
        return false;
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [&](const Edge& e) { return p.side[e.u] != p.side[e.v]; });
}

std::optional<Bipartition> bipartition_of(const Graph& g)
{
    const int n = g.order();
    std::vector<int> colour(static_cast<std::size_t>(n), -1);
    std::queue<Vertex> queue;
    for (Vertex root = 0; root < n; ++root) {
        if (colour[root] != -1)
            continue;
        colour[root] = 0;
        queue.push(root);
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop();
            for (Vertex w : g.neighbors(v)) {
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[v];
                    queue.push(w);
                } else if (colour[w] == colour[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition p;
    p.side.reserve(static_cast<std::size_t>(n));
    for (int c : colour)
        p.side.push_back(c == 0 ? Side::blue : Side::red);
    return p;
}

bool is_isomorphism(const Graph& a, const Graph& b, std::span<const Vertex> map)
{
    if (a.order() != b.order() || a.edge_count() != b.edge_count())
        return false;
    if (static_cast<int>(map.size()) != a.order())
        return false;
    std::vector<char> hit(static_cast<std::size_t>(b.order()), 0);
    for (Vertex image : map) {
        if (image < 0 || image >= b.order() || hit[image])
            return false;
        hit[image] = 1;
    }
    return std::all_of(a.edges().begin(), a.edges().end(),
                       [&](const Edge& e) { return b.adjacent(map[e.u], map[e.v]); });
}

} // namespace tokengraphs
