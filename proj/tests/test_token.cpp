#include "doctest.h"
#include "oracles.hpp"

#include "tokengraphs/error.hpp"
#include "tokengraphs/formulas.hpp"
#include "tokengraphs/token_graph.hpp"
#include "tokengraphs/token_io.hpp"

#include <sstream>

using namespace tokengraphs;

namespace {

std::vector<std::pair<std::string, Graph>> small_corpus()
{
    std::vector<std::pair<std::string, Graph>> out;
    for (int n = 2; n <= 8; ++n) {
        out.emplace_back("path", path_graph(n));
        out.emplace_back("complete", complete_graph(n));
        if (n >= 3)
            out.emplace_back("cycle", cycle_graph(n));
        out.emplace_back("star", star_graph(n - 1));
        for (int i = 0; i < 4; ++i)
            out.emplace_back("random", random_graph(n, 0.25 + 0.15 * i, 500 + 10 * n + i));
    }
    return out;
}

} // namespace

TEST_CASE("binomial table")
{
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(12, 6) == 924);
    CHECK(binomial(64, 32) == 1832624140942590534ULL);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(5, -1) == 0);
}

TEST_CASE("codec ends and bijection")
{
    const SubsetCodec c42(4, 2);
    CHECK(c42.rank(std::vector<int>{0, 1}) == 0);
    CHECK(c42.rank(std::vector<int>{2, 3}) == 5);
    CHECK(c42.size() == 6);

    const SubsetCodec c53(5, 3);
    for (std::uint64_t r = 0; r < c53.size(); ++r)
        CHECK(c53.rank(c53.unrank(r)) == r);
    for (auto s : oracle::k_subsets(5, 3))
        CHECK(c53.unrank(c53.rank(s)) == s);
}

TEST_CASE("codec order is colexicographic")
{
    for (int n = 1; n <= 10; ++n) {
        for (int k = 0; k <= n; ++k) {
            const SubsetCodec codec(n, k);
            SubsetMask s = codec.first();
            for (std::uint64_t r = 0; r < codec.size(); ++r) {
                CHECK(codec.unrank(r) == s);
                if (r + 1 < codec.size()) {
                    const SubsetMask next = next_same_size(s);
                    // colex: compare largest differing element
                    const SubsetMask diff = s ^ next;
                    CHECK(((next >> (63 - std::countl_zero(diff))) & 1) == 1);
                    s = next;
                }
            }
        }
    }
}

TEST_CASE("codec rejects bad input")
{
    const SubsetCodec c(5, 2);
    CHECK_THROWS_AS(c.rank(std::vector<int>{0, 1, 2}), InputError);
    CHECK_THROWS_AS(c.rank(std::vector<int>{0, 5}), InputError);
    CHECK_THROWS_AS(c.unrank(10), InputError);
    CHECK(subset_label(mask_of(std::vector<int>{0, 2, 3})) == "{1,3,4}");
}

TEST_CASE("token graph examples")
{
    const TokenGraph c3 = token_graph(cycle_graph(3), 2);
    CHECK(c3.graph().order() == 3);
    CHECK(c3.graph().edge_count() == 3);

    const TokenGraph p5 = token_graph(path_graph(5), 3);
    CHECK(p5.graph().order() == 10);
    CHECK(p5.graph().edge_count() == 12);

    const TokenGraph m2 = token_graph(matching_graph(2, 0), 2);
    CHECK(m2.graph().order() == 6);
    CHECK(m2.graph().edge_count() == 4);
    int isolated = 0;
    for (Vertex v = 0; v < 6; ++v)
        isolated += m2.graph().degree(v) == 0;
    CHECK(isolated == 2);
    CHECK(m2.graph().degree(m2.vertex_of(0b0011)) == 0);
    CHECK(m2.graph().degree(m2.vertex_of(0b1100)) == 0);

    CHECK_THROWS_AS(token_graph(path_graph(4), 0), InputError);
    CHECK_THROWS_AS(token_graph(path_graph(4), 4), InputError);
}

TEST_CASE("token graphs match the definition")
{
    for (const auto& [name, g] : small_corpus()) {
        const int n = g.order();
        for (int k = 1; k <= n - 1; ++k) {
            const TokenGraph t = token_graph(g, k);
            const auto& f = t.graph();
            CAPTURE(name);
            CAPTURE(n);
            CAPTURE(k);
            REQUIRE(static_cast<std::uint64_t>(f.order()) == binomial(n, k));
            CHECK(static_cast<std::uint64_t>(f.edge_count())
                  == static_cast<std::uint64_t>(g.edge_count()) * binomial(n - 2, k - 1));
            for (const auto& e : f.edges())
                CHECK(oracle::token_adjacent(g, t.subset(e.u), t.subset(e.v)));
            if (n <= 6) {
                int expected = 0;
                const auto subsets = oracle::k_subsets(n, k);
                for (std::size_t i = 0; i < subsets.size(); ++i)
                    for (std::size_t j = i + 1; j < subsets.size(); ++j)
                        expected += oracle::token_adjacent(g, subsets[i], subsets[j]);
                CHECK(f.edge_count() == expected);
            }
        }
    }
}

TEST_CASE("complement map")
{
    const TokenGraph k3 = token_graph(complete_graph(3), 1);
    const auto map = complement_map(k3);
    const TokenGraph k3c = token_graph(complete_graph(3), 2);
    CHECK(k3c.subset(map[k3.vertex_of(0b001)]) == 0b110);

    const TokenGraph c6 = token_graph(cycle_graph(6), 3);
    const auto self = complement_map(c6);
    CHECK(is_isomorphism(c6.graph(), c6.graph(), self));

    for (const auto& [name, g] : small_corpus()) {
        for (int k = 1; k <= g.order() - 1; ++k) {
            const TokenGraph t = token_graph(g, k);
            const TokenGraph u = token_graph(g, g.order() - k);
            CHECK(is_isomorphism(t.graph(), u.graph(), complement_map(t)));
        }
    }
}

TEST_CASE("token bipartition classes")
{
    struct Case {
        int m, n, red, blue;
    };
    for (auto c : {Case{2, 5, 10, 11}, Case{3, 3, 9, 6}, Case{1, 4, 4, 6}}) {
        const Graph g = complete_bipartite_graph(c.m, c.n);
        const TokenGraph t = token_graph(g, 2);
        const Bipartition labels = token_bipartition(t, *bipartition_of(g));
        CHECK(labels.red_count() == c.red);
        CHECK(labels.blue_count() == c.blue);
        REQUIRE(t.classes());
        CHECK(t.classes()->red_count() == c.red);
    }

    Bipartition wrong;
    wrong.side.assign(4, Side::blue);
    CHECK_THROWS_AS(token_bipartition(token_graph(path_graph(4), 2), wrong), InputError);
    CHECK_FALSE(token_graph(cycle_graph(5), 2).classes());
}

TEST_CASE("token bipartition is proper and counts the red class")
{
    for (int order = 2; order <= 10; ++order) {
        for (int i = 0; i < 6; ++i) {
            const int blue = 1 + i % (order - 1);
            const int red = order - blue;
            if (red < 1)
                continue;
            // random spanning subgraph of K_{blue,red}
            const Graph full = complete_bipartite_graph(blue, red);
            std::vector<std::pair<int, int>> kept;
            const Graph mask = random_graph(order, 0.6, 77 * order + i);
            for (const auto& e : full.edges())
                if (mask.adjacent(e.u, e.v))
                    kept.emplace_back(e.u, e.v);
            const Graph g = make_graph(order, kept);
            Bipartition parts;
            parts.side.assign(blue, Side::blue);
            parts.side.resize(order, Side::red);
            for (int k = 1; k <= order - 1; ++k) {
                const TokenGraph t = token_graph(g, k);
                const Bipartition labels = token_bipartition(t, parts);
                CHECK(is_proper(t.graph(), labels));
                CHECK(labels.red_count() == formulas::r_value(blue, red, k));
            }
        }
    }
}

TEST_CASE("token JSON and DOT export")
{
    const TokenGraph t = token_graph(path_graph(3), 2);
    const auto doc = to_json(t);
    CHECK(doc["n"] == 3);
    CHECK(doc["k"] == 2);
    CHECK(doc["vertices"].dump() == "[[1,2],[1,3],[2,3]]");
    CHECK(doc["edges"].dump() == "[[0,1],[1,2]]");

    std::ostringstream dot;
    write_token_dot(dot, t);
    CHECK(dot.str().find("{1,3}") != std::string::npos);
}
