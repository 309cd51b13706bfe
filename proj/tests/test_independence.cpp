#include "doctest.h"
#include "oracles.hpp"

#include "tokengraphs/error.hpp"
#include "tokengraphs/formulas.hpp"
#include "tokengraphs/independence.hpp"
#include "tokengraphs/matching.hpp"

using namespace tokengraphs;

namespace {

std::int64_t beta_of(const Graph& g, int k) { return max_independent_set(token_graph(g, k).graph()).size(); }

} // namespace

TEST_CASE("independence examples")
{
    CHECK(beta_of(cycle_graph(5), 2) == 5);
    CHECK(beta_of(complete_graph(7), 3) == 7);
    CHECK(beta_of(complete_bipartite_graph(3, 3), 2) == 9);

    CHECK(brute_force_mis(cycle_graph(5)) == 2);
    CHECK(brute_force_mis(make_graph(6, {})) == 6);
    CHECK(brute_force_mis(token_graph(path_graph(4), 2).graph()) == 4);
    CHECK_THROWS_AS(brute_force_mis(path_graph(27)), InputError);

    CHECK(max_independent_set(Graph()).size() == 0);
}

TEST_CASE("solver agrees with brute force on 200 random graphs")
{
    const double densities[] = {0.1, 0.3, 0.5};
    for (int i = 0; i < 200; ++i) {
        const int n = 1 + i % 26;
        const Graph g = random_graph(n, densities[i % 3], 20000 + i);
        const IndependentSet s = max_independent_set(g);
        CHECK(is_independent(g, s.vertices));
        CHECK(std::is_sorted(s.vertices.begin(), s.vertices.end()));
        CHECK(s.size() == brute_force_mis(g));
    }
}

TEST_CASE("solver witness is deterministic")
{
    const Graph g = token_graph(cycle_graph(9), 2).graph();
    CHECK(max_independent_set(g).vertices == max_independent_set(g).vertices);
}

TEST_CASE("budget exhaustion is an error, never a wrong answer")
{
    SolverOptions tight;
    tight.node_limit = 1;
    CHECK_THROWS_AS(max_independent_set(random_graph(60, 0.2, 3), tight), BudgetExceeded);
    CHECK_THROWS_AS(max_independent_set(token_graph(complete_graph(10), 4).graph(), SolverOptions::with_seconds(0)),
                    BudgetExceeded);
    CHECK_THROWS_AS(max_independent_set(token_graph(complete_graph(10), 4).graph(), SolverOptions::per_call(0)),
                    BudgetExceeded);
}

TEST_CASE("Konig duality on bipartite graphs")
{
    for (int n = 2; n <= 20; ++n) {
        for (int i = 0; i < 3; ++i) {
            const int blue = 1 + (n * 3 + i) % (n - 1);
            const Graph full = complete_bipartite_graph(blue, n - blue);
            const Graph mask = random_graph(n, 0.3, 600 + 7 * n + i);
            std::vector<std::pair<int, int>> kept;
            for (const auto& e : full.edges())
                if (mask.adjacent(e.u, e.v))
                    kept.emplace_back(e.u, e.v);
            const Graph g = make_graph(n, kept);
            const int beta = max_independent_set(g).size();
            CHECK(beta + max_matching(g).size() == n);
            if (n <= 16)
                CHECK(beta + oracle::min_vertex_cover(g) == n);
        }
    }
}

TEST_CASE("saturation shortcut")
{
    const Graph k33 = complete_bipartite_graph(3, 3);
    const TokenGraph f = token_graph(k33, 2);
    CHECK(beta_via_saturation(f, *f.classes()) == 9);

    for (int m = 1; 2 * m + 1 <= 8; ++m)
        for (int s = 0; s <= 1; ++s) {
            const Graph g = matching_graph(m, s);
            for (int k = 1; k < g.order(); ++k) {
                const TokenGraph t = token_graph(g, k);
                const auto value = beta_via_saturation(t, *t.classes());
                REQUIRE(value);
                CHECK(*value == std::max(t.classes()->red_count(), t.classes()->blue_count()));
                CHECK(*value == max_independent_set(t.graph()).size());
            }
        }

    // the 2/5 graph with one vertex joined to a single red vertex
    const Graph hit = make_graph(7, {{0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 2}});
    Bipartition parts;
    parts.side = {Side::blue, Side::blue, Side::red, Side::red, Side::red, Side::red, Side::red};
    const TokenGraph t = token_graph(hit, 2);
    CHECK_FALSE(beta_via_saturation(t, token_bipartition(t, parts)));
}

TEST_CASE("saturation shortcut never contradicts the solver")
{
    for (int order = 2; order <= 9; ++order) {
        for (int i = 0; i < 4; ++i) {
            const int blue = 1 + i % (order - 1);
            const Graph full = complete_bipartite_graph(blue, order - blue);
            const Graph mask = random_graph(order, 0.5, 300 + 11 * order + i);
            std::vector<std::pair<int, int>> kept;
            for (const auto& e : full.edges())
                if (mask.adjacent(e.u, e.v))
                    kept.emplace_back(e.u, e.v);
            const Graph g = make_graph(order, kept);
            Bipartition parts;
            parts.side.assign(blue, Side::blue);
            parts.side.resize(order, Side::red);
            for (int k = 1; k < order; ++k) {
                const TokenGraph t = token_graph(g, k);
                const auto value = beta_via_saturation(t, token_bipartition(t, parts));
                if (value)
                    CHECK(*value == max_independent_set(t.graph()).size());
            }
        }
    }
}

TEST_CASE("recursion boundary conventions")
{
    const BetaOracle never = [](const Graph&, int) -> std::int64_t { throw std::logic_error("unexpected"); };
    CHECK(token_beta(path_graph(3), 0, never) == 1);
    CHECK(token_beta(path_graph(3), 3, never) == 1);
    CHECK(token_beta(path_graph(3), 4, never) == 0);
    CHECK(token_beta(Graph(), 1, never) == 0);
    CHECK(token_beta(Graph(), 0, never) == 1);
}

TEST_CASE("recursive bounds examples")
{
    const auto oracle = solver_oracle();
    const auto c5 = recursive_bounds(cycle_graph(5), 2, oracle);
    CHECK(c5.lower == 3);
    CHECK(c5.upper == 5);

    const auto star = recursive_bounds(star_graph(3), 2, oracle);
    CHECK(star.lower == 3);
    CHECK(beta_of(star_graph(3), 2) == 3);

    const auto k4 = recursive_bounds(complete_graph(4), 2, oracle);
    CHECK(k4.upper == 2);
    CHECK(beta_of(complete_graph(4), 2) == 2);

    CHECK_THROWS_AS(recursive_bounds(cycle_graph(5), 1, oracle), InputError);
    CHECK_THROWS_AS(recursive_bounds(cycle_graph(5), 5, oracle), InputError);
}

TEST_CASE("recursive bounds sandwich the exact value")
{
    const auto oracle = solver_oracle();
    std::vector<Graph> corpus;
    for (int n = 3; n <= 8; ++n) {
        corpus.push_back(path_graph(n));
        corpus.push_back(cycle_graph(n));
        corpus.push_back(complete_graph(n));
        corpus.push_back(star_graph(n - 1));
        for (int i = 0; i < 5; ++i)
            corpus.push_back(random_graph(n, 0.2 + 0.15 * i, 70 * n + i));
    }
    for (const Graph& g : corpus) {
        for (int k = 2; k <= g.order() - 1; ++k) {
            const auto bounds = recursive_bounds(g, k, oracle);
            const std::int64_t beta = beta_of(g, k);
            CHECK(bounds.lower <= beta);
            CHECK(beta <= bounds.upper);
        }
    }
}

TEST_CASE("vertex-transitive bound")
{
    const auto oracle = solver_oracle();
    CHECK(vertex_transitive_bound(cycle_graph(7), 2, 3, oracle) == 10);
    CHECK(vertex_transitive_bound(cycle_graph(5), 2, 0, oracle) == 5);

    // J(7,3): min{7/3 * beta(J(6,2)), 7/4 * beta(J(6,3))}
    const std::int64_t j62 = beta_of(complete_graph(6), 2);
    const std::int64_t j63 = beta_of(complete_graph(6), 3);
    const Rational a = Rational(7 * j62, 3);
    const Rational b = Rational(7 * j63, 4);
    CHECK(vertex_transitive_bound(complete_graph(7), 3, 0, oracle) == floor_of(a < b ? a : b));
    CHECK(vertex_transitive_bound(complete_graph(7), 3, 0, oracle) >= 7);

    CHECK_THROWS_AS(vertex_transitive_bound(path_graph(5), 2, 0, oracle), InputError);
    CHECK_THROWS_AS(vertex_transitive_bound(cycle_graph(5), 4, 0, oracle), InputError);

    for (int n = 4; n <= 8; ++n)
        for (int k = 2; k <= n - 2; ++k) {
            CHECK(beta_of(cycle_graph(n), k) <= vertex_transitive_bound(cycle_graph(n), k, 0, oracle));
            CHECK(beta_of(complete_graph(n), k) <= vertex_transitive_bound(complete_graph(n), k, n - 1, oracle));
        }
}

TEST_CASE("perfect matching and odd k give half the vertices")
{
    for (int half = 1; half <= 4; ++half) {
        std::vector<Graph> bases{path_graph(2 * half), complete_bipartite_graph(half, half), matching_graph(half, 0)};
        if (half >= 2)
            bases.push_back(cycle_graph(2 * half));
        for (const Graph& g : bases)
            for (int k = 1; k < 2 * half; k += 2)
                CHECK(beta_of(g, k) == static_cast<std::int64_t>(binomial(2 * half, k)) / 2);
    }
}
