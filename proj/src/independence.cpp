#include "tokengraphs/independence.hpp"

#include "tokengraphs/error.hpp"
#include "tokengraphs/matching.hpp"

#include <algorithm>
#include <bit>

namespace tokengraphs {

namespace {

using Word = std::uint64_t;
using Bits = std::vector<Word>;

bool test(const Bits& b, int v) { return (b[v / 64] >> (v % 64)) & 1; }
void reset(Bits& b, int v) { b[v / 64] &= ~(Word{1} << (v % 64)); }

int count(const Bits& b)
{
    int c = 0;
    for (Word w : b)
        c += std::popcount(w);
    return c;
}

int count_and(const Bits& a, const Word* row)
{
    int c = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        c += std::popcount(a[i] & row[i]);
    return c;
}

bool empty(const Bits& b)
{
    return std::all_of(b.begin(), b.end(), [](Word w) { return w == 0; });
}

template <typename F>
void for_each_bit(const Bits& b, F&& f)
{
    for (std::size_t i = 0; i < b.size(); ++i)
        for (Word w = b[i]; w; w &= w - 1)
            f(static_cast<int>(i * 64) + std::countr_zero(w));
}

class MisSolver {
public:
    MisSolver(const Graph& g, const SolverOptions& options)
        : n_(g.order()), words_((g.order() + 63) / 64), options_(options)
    {
        rows_.assign(static_cast<std::size_t>(n_) * words_, 0);
        for (const auto& e : g.edges()) {
            row_mut(e.u)[e.v / 64] |= Word{1} << (e.v % 64);
            row_mut(e.v)[e.u / 64] |= Word{1} << (e.u % 64);
        }
    }

    std::vector<Vertex> solve()
    {
        Bits all(static_cast<std::size_t>(words_), 0);
        for (int v = 0; v < n_; ++v)
            all[v / 64] |= Word{1} << (v % 64);
        best_ = greedy(all);
        current_.clear();
        search(std::move(all));
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    const Word* row(int v) const { return rows_.data() + static_cast<std::size_t>(v) * words_; }
    Word* row_mut(int v) { return rows_.data() + static_cast<std::size_t>(v) * words_; }

    void remove_closed_neighborhood(Bits& p, int v) const
    {
        const Word* r = row(v);
        for (int i = 0; i < words_; ++i)
            p[i] &= ~r[i];
        reset(p, v);
    }

    // minimum-degree greedy, lowest id on ties
    std::vector<Vertex> greedy(Bits p) const
    {
        std::vector<Vertex> chosen;
        while (!empty(p)) {
            int pick = -1;
            int pick_degree = n_ + 1;
            for_each_bit(p, [&](int v) {
                int d = count_and(p, row(v));
                if (d < pick_degree) {
                    pick_degree = d;
                    pick = v;
                }
            });
            chosen.push_back(pick);
            remove_closed_neighborhood(p, pick);
        }
        return chosen;
    }

    void tick()
    {
        ++nodes_;
        if (options_.node_limit != 0 && nodes_ > options_.node_limit)
            throw BudgetExceeded("independent set search exceeded its node budget");
        if (options_.deadline && (nodes_ & 255) == 1 && std::chrono::steady_clock::now() > *options_.deadline)
            throw BudgetExceeded("independent set search exceeded its time budget");
    }

    // Vertices of degree <= 1 in G[P] belong to some maximum independent set of G[P].
    void reduce(Bits& p)
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < p.size(); ++i) {
                for (Word w = p[i]; w; w &= w - 1) {
                    int v = static_cast<int>(i * 64) + std::countr_zero(w);
                    if (!test(p, v))
                        continue;
                    if (count_and(p, row(v)) <= 1) {
                        current_.push_back(v);
                        remove_closed_neighborhood(p, v);
                        w &= p[i] | (Word{1} << (v % 64)); // drop bits cleared in this word
                        changed = true;
                    }
                }
            }
        }
    }

    // Number of cliques in a greedy clique cover of G[P], stopping once it exceeds `cap`.
    int clique_cover(const Bits& p, int cap) const
    {
        std::vector<Bits> candidates;
        bool over = false;
        for_each_bit(p, [&](int v) {
            if (over)
                return;
            for (auto& c : candidates) {
                if (test(c, v)) {
                    const Word* r = row(v);
                    for (int i = 0; i < words_; ++i)
                        c[i] &= r[i];
                    return;
                }
            }
            if (static_cast<int>(candidates.size()) == cap) {
                over = true;
                return;
            }
            Bits c(p);
            const Word* r = row(v);
            for (int i = 0; i < words_; ++i)
                c[i] &= r[i];
            candidates.push_back(std::move(c));
        });
        return over ? cap + 1 : static_cast<int>(candidates.size());
    }

    int matching_number(const Bits& p) const
    {
        std::vector<int> local(static_cast<std::size_t>(n_), -1);
        std::vector<int> members;
        for_each_bit(p, [&](int v) {
            local[v] = static_cast<int>(members.size());
            members.push_back(v);
        });
        std::vector<std::vector<Vertex>> adj(members.size());
        for (std::size_t i = 0; i < members.size(); ++i) {
            const Word* r = row(members[i]);
            for (int w = 0; w < words_; ++w)
                for (Word bits = r[w] & p[w]; bits; bits &= bits - 1)
                    adj[i].push_back(local[w * 64 + std::countr_zero(bits)]);
        }
        const auto mate = maximum_matching_mates(adj);
        return static_cast<int>(std::count_if(mate.begin(), mate.end(), [](Vertex m) { return m != -1; })) / 2;
    }

    void search(Bits p)
    {
        tick();
        const std::size_t entry_size = current_.size();
        reduce(p);

        const int have = static_cast<int>(current_.size());
        const int incumbent = static_cast<int>(best_.size());
        if (empty(p)) {
            if (have > incumbent)
                best_ = current_;
            current_.resize(entry_size);
            return;
        }

        const int room = incumbent - have; // P must contribute more than this
        const int size = count(p);
        if (size <= room || clique_cover(p, room) <= room || size - matching_number(p) <= room) {
            current_.resize(entry_size);
            return;
        }

        int branch = -1;
        int branch_degree = -1;
        for_each_bit(p, [&](int v) {
            int d = count_and(p, row(v));
            if (d > branch_degree) {
                branch_degree = d;
                branch = v;
            }
        });

        Bits include(p);
        remove_closed_neighborhood(include, branch);
        current_.push_back(branch);
        search(std::move(include));
        current_.pop_back();

        reset(p, branch);
        search(std::move(p));
        current_.resize(entry_size);
    }

    int n_;
    int words_;
    SolverOptions options_;
    std::vector<Word> rows_;
    std::vector<Vertex> best_;
    std::vector<Vertex> current_;
    std::uint64_t nodes_ = 0;
};

bool is_cycle(const Graph& g)
{
    if (g.order() < 3 || g.edge_count() != g.order())
        return false;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != 2)
            return false;
    // 2-regular and connected
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == g.order();
}

bool is_complete(const Graph& g)
{
    return 2LL * g.edge_count() == static_cast<long long>(g.order()) * (g.order() - 1);
}

} // namespace

SolverOptions SolverOptions::with_seconds(double seconds)
{
    SolverOptions o;
    o.deadline = std::chrono::steady_clock::now()
        + std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds));
    return o;
}

SolverOptions SolverOptions::per_call(double seconds)
{
    SolverOptions o;
    o.seconds_per_call = seconds;
    return o;
}

bool is_independent(const Graph& g, std::span<const Vertex> s)
{
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= g.order())
            return false;
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] == s[j] || g.adjacent(s[i], s[j]))
                return false;
    }
    return true;
}

IndependentSet max_independent_set(const Graph& g, const SolverOptions& options)
{
    if (g.order() == 0)
        return {};
    SolverOptions local = options;
    if (options.seconds_per_call) {
        auto limit = std::chrono::steady_clock::now()
            + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                std::chrono::duration<double>(*options.seconds_per_call));
        local.deadline = local.deadline ? std::min(*local.deadline, limit) : limit;
    }
    return IndependentSet{MisSolver(g, local).solve()};
}

namespace {

int brute_force(std::uint32_t candidates, const std::vector<std::uint32_t>& closed)
{
    if (candidates == 0)
        return 0;
    const int v = std::countr_zero(candidates);
    const std::uint32_t without = candidates & ~(std::uint32_t{1} << v);
    const std::uint32_t with = candidates & ~closed[v];
    if (with == without) // no neighbour of v left: taking v is never worse
        return 1 + brute_force(with, closed);
    return std::max(brute_force(without, closed), 1 + brute_force(with, closed));
}

} // namespace

int brute_force_mis(const Graph& g)
{
    if (g.order() > kBruteForceLimit)
        throw InputError("brute_force_mis: at most 26 vertices");
    std::vector<std::uint32_t> closed(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
        closed[v] = std::uint32_t{1} << v;
        for (Vertex w : g.neighbors(v))
            closed[v] |= std::uint32_t{1} << w;
    }
    const std::uint32_t all = g.order() == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << g.order()) - 1);
    return brute_force(all, closed);
}

std::optional<std::int64_t> beta_via_saturation(const Graph& g, const Bipartition& labels)
{
    if (!is_proper(g, labels))
        throw InputError("beta_via_saturation: labels are not a bipartition of the graph");
    const int reds = labels.red_count();
    const int blues = labels.blue_count();
    const Side smaller = reds <= blues ? Side::red : Side::blue;
    if (!saturates(g, labels, smaller))
        return std::nullopt;
    return std::max(reds, blues);
}

std::optional<std::int64_t> beta_via_saturation(const TokenGraph& t, const Bipartition& labels)
{
    return beta_via_saturation(t.graph(), labels);
}

std::int64_t token_beta(const Graph& h, int j, const BetaOracle& oracle)
{
    if (j == 0)
        return 1;
    if (j > h.order())
        return 0;
    if (j == h.order())
        return 1;
    return oracle(h, j);
}

BetaOracle solver_oracle(SolverOptions options)
{
    return [options](const Graph& h, int j) -> std::int64_t {
        return max_independent_set(token_graph(h, j).graph(), options).size();
    };
}

BoundsPair recursive_bounds(const Graph& g, int k, const BetaOracle& oracle)
{
    const int n = g.order();
    if (k < 2 || k > n - 1)
        throw InputError("recursive_bounds: need 2 <= k <= n-1");
    BoundsPair out;
    std::int64_t sum = 0;
    for (Vertex v = 0; v < n; ++v) {
        const std::int64_t without_v = token_beta(delete_vertices(g, {v}).graph, k - 1, oracle);
        const auto closed = closed_neighborhood(g, v);
        const std::int64_t outside = token_beta(delete_vertices(g, closed).graph, k, oracle);
        out.lower = std::max(out.lower, without_v + outside);
        sum += without_v;
    }
    out.upper = sum / k;
    return out;
}

std::int64_t vertex_transitive_bound(const Graph& g, int k, Vertex w, const BetaOracle& oracle)
{
    const int n = g.order();
    if (k < 2 || k > n - 2)
        throw InputError("vertex_transitive_bound: need 2 <= k <= n-2");
    if (w < 0 || w >= n)
        throw InputError("vertex_transitive_bound: vertex out of range");
    if (!is_cycle(g) && !is_complete(g))
        throw InputError("vertex_transitive_bound: vertex-transitivity is only certified for cycles and complete graphs");
    const Graph rest = delete_vertices(g, {w}).graph;
    const std::int64_t a = token_beta(rest, k - 1, oracle);
    const std::int64_t b = token_beta(rest, k, oracle);
    return std::min((n * a) / k, (n * b) / (n - k));
}

} // namespace tokengraphs
