#include "tokengraphs/matching.hpp"

#include "tokengraphs/error.hpp"

#include <algorithm>
#include <queue>

namespace tokengraphs {

namespace {

// Edmonds' algorithm with explicit blossom bases (O(V^3)). Blossoms are never
// materialized: base[v] names the outermost blossom base containing v, and
// parent[] links odd vertices back along the alternating tree.
class BlossomMatcher {
public:
    explicit BlossomMatcher(std::span<const std::vector<Vertex>> adjacency)
        : adj_(adjacency),
          n_(static_cast<int>(adjacency.size())),
          mate_(static_cast<std::size_t>(n_), -1),
          parent_(static_cast<std::size_t>(n_), -1),
          base_(static_cast<std::size_t>(n_), 0),
          in_tree_(static_cast<std::size_t>(n_), 0),
          in_blossom_(static_cast<std::size_t>(n_), 0),
          lca_mark_(static_cast<std::size_t>(n_), 0)
    {
    }

    std::vector<Vertex> run()
    {
        for (Vertex v = 0; v < n_; ++v) {
            if (mate_[v] != -1)
                continue;
            for (Vertex w : adj_[v]) {
                if (mate_[w] == -1) {
                    mate_[v] = w;
                    mate_[w] = v;
                    break;
                }
            }
        }
        for (Vertex root = 0; root < n_; ++root) {
            if (mate_[root] != -1)
                continue;
            Vertex end = find_augmenting_path(root);
            while (end != -1) {
                Vertex pv = parent_[end];
                Vertex next = mate_[pv];
                mate_[end] = pv;
                mate_[pv] = end;
                end = next;
            }
        }
        return std::move(mate_);
    }

private:
    Vertex lowest_common_base(Vertex a, Vertex b)
    {
        ++lca_stamp_;
        for (;;) {
            a = base_[a];
            lca_mark_[a] = lca_stamp_;
            if (mate_[a] == -1)
                break;
            a = parent_[mate_[a]];
        }
        for (;;) {
            b = base_[b];
            if (lca_mark_[b] == lca_stamp_)
                return b;
            b = parent_[mate_[b]];
        }
    }

    void mark_blossom_path(Vertex v, Vertex blossom_base, Vertex child)
    {
        while (base_[v] != blossom_base) {
            in_blossom_[base_[v]] = 1;
            in_blossom_[base_[mate_[v]]] = 1;
            parent_[v] = child;
            child = mate_[v];
            v = parent_[mate_[v]];
        }
    }

    Vertex find_augmenting_path(Vertex root)
    {
        std::fill(in_tree_.begin(), in_tree_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (Vertex i = 0; i < n_; ++i)
            base_[i] = i;

        std::queue<Vertex> queue;
        in_tree_[root] = 1;
        queue.push(root);
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop();
            for (Vertex to : adj_[v]) {
                if (base_[v] == base_[to] || mate_[v] == to)
                    continue;
                if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
                    // odd cycle: contract the blossom onto its base
                    Vertex blossom_base = lowest_common_base(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                    mark_blossom_path(v, blossom_base, to);
                    mark_blossom_path(to, blossom_base, v);
                    for (Vertex i = 0; i < n_; ++i) {
                        if (in_blossom_[base_[i]]) {
                            base_[i] = blossom_base;
                            if (!in_tree_[i]) {
                                in_tree_[i] = 1;
                                queue.push(i);
                            }
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (mate_[to] == -1)
                        return to;
                    Vertex next = mate_[to];
                    in_tree_[next] = 1;
                    queue.push(next);
                }
            }
        }
        return -1;
    }

    std::span<const std::vector<Vertex>> adj_;
    int n_;
    std::vector<Vertex> mate_;
    std::vector<Vertex> parent_;
    std::vector<Vertex> base_;
    std::vector<char> in_tree_;
    std::vector<char> in_blossom_;
    std::vector<unsigned> lca_mark_;
    unsigned lca_stamp_ = 0;
};

std::vector<std::vector<Vertex>> adjacency_lists(const Graph& g)
{
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
        auto nbrs = g.neighbors(v);
        adj[v].assign(nbrs.begin(), nbrs.end());
    }
    return adj;
}

void require_valid(const Graph& g, const Matching& m)
{
    if (!is_valid_matching(g, m))
        throw InputError("not a matching of the host graph");
}

void require_bipartition(const Graph& g, const Bipartition& p)
{
    if (!is_proper(g, p))
        throw InputError("labels are not a bipartition of the graph");
}

} // namespace

bool is_valid_matching(const Graph& g, const Matching& m)
{
    std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
    for (const auto& e : m.edges) {
        if (e.u < 0 || e.v < 0 || e.u >= g.order() || e.v >= g.order())
            return false;
        if (e.u == e.v || !g.adjacent(e.u, e.v))
            return false;
        if (covered[e.u] || covered[e.v])
            return false;
        covered[e.u] = covered[e.v] = 1;
    }
    return 2 * m.size() <= g.order();
}

std::vector<Vertex> mates_of(const Graph& g, const Matching& m)
{
    std::vector<Vertex> mate(static_cast<std::size_t>(g.order()), -1);
    for (const auto& e : m.edges) {
        mate[e.u] = e.v;
        mate[e.v] = e.u;
    }
    return mate;
}

std::vector<Vertex> maximum_matching_mates(std::span<const std::vector<Vertex>> adjacency)
{
    return BlossomMatcher(adjacency).run();
}

Matching max_matching(const Graph& g)
{
    const auto adj = adjacency_lists(g);
    const auto mate = maximum_matching_mates(adj);
    Matching m;
    for (Vertex v = 0; v < g.order(); ++v)
        if (mate[v] > v)
            m.edges.push_back({v, mate[v]});
    return m;
}

bool is_perfect(const Matching& m, const Graph& g)
{
    require_valid(g, m);
    return 2 * m.size() == g.order();
}

bool is_almost_perfect(const Matching& m, const Graph& g)
{
    require_valid(g, m);
    return 2 * m.size() == g.order() - 1;
}

bool saturates(const Graph& g, const Bipartition& p, Side side)
{
    require_bipartition(g, p);
    const auto mate = mates_of(g, max_matching(g));
    for (Vertex v = 0; v < g.order(); ++v)
        if (p.side[v] == side && mate[v] == -1)
            return false;
    return true;
}

std::optional<std::vector<Vertex>> hall_witness(const Graph& g, const Bipartition& p, Side side)
{
    require_bipartition(g, p);
    const auto mate = mates_of(g, max_matching(g));

    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::queue<Vertex> queue;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (p.side[v] == side && mate[v] == -1) {
            seen[v] = 1;
            queue.push(v);
        }
    }
    if (queue.empty())
        return std::nullopt;

    // side vertex -> any neighbour -> its mate (always matched: the matching is maximum)
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop();
        for (Vertex y : g.neighbors(x)) {
            if (seen[y])
                continue;
            seen[y] = 1;
            Vertex back = mate[y];
            if (back != -1 && !seen[back]) {
                seen[back] = 1;
                queue.push(back);
            }
        }
    }
    std::vector<Vertex> deficient;
    for (Vertex v = 0; v < g.order(); ++v)
        if (seen[v] && p.side[v] == side)
            deficient.push_back(v);
    return deficient;
}

std::vector<Vertex> neighborhood_of(const Graph& g, std::span<const Vertex> s)
{
    std::vector<char> hit(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : s)
        for (Vertex w : g.neighbors(v))
            hit[w] = 1;
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (hit[v])
            out.push_back(v);
    return out;
}

FractionBound matching_fraction_bound(int n, int k)
{
    if (n < 2 || k < 1 || k > n - 1)
        throw InputError("matching_fraction_bound: need 1 <= k <= n-1");
    FractionBound out;
    if (n % 2 == 0 && k % 2 == 1) {
        out.value = Rational(1, 2);
        out.exact = true;
        return out;
    }
    const int exponent = k / 2;
    Rational power = 1;
    for (int i = 0; i < exponent; ++i)
        power *= Rational(k, n);
    out.value = (Rational(1) - power) / 2;
    out.vacuous = exponent == 0;
    return out;
}

} // namespace tokengraphs
