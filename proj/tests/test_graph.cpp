#include "doctest.h"
#include "oracles.hpp"

#include "tokengraphs/error.hpp"
#include "tokengraphs/graph.hpp"
#include "tokengraphs/graph_io.hpp"
#include "tokengraphs/graph_spec.hpp"

#include <numeric>
#include <sstream>

using namespace tokengraphs;

namespace {

std::vector<int> degrees(const Graph& g)
{
    std::vector<int> out;
    for (Vertex v = 0; v < g.order(); ++v)
        out.push_back(g.degree(v));
    return out;
}

void check_invariants(const Graph& g)
{
    int degree_sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        degree_sum += g.degree(v);
        for (Vertex w : g.neighbors(v)) {
            CHECK(w != v);
            CHECK(g.adjacent(w, v));
        }
    }
    CHECK(degree_sum == 2 * g.edge_count());
}

} // namespace

TEST_CASE("make_graph builds simple graphs")
{
    const Graph k3 = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.order() == 3);
    CHECK(k3.edge_count() == 3);

    const Graph empty = make_graph(2, {});
    CHECK(empty.order() == 2);
    CHECK(empty.edge_count() == 0);

    const Graph p5 = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(degrees(p5) == std::vector<int>{1, 2, 2, 2, 1});
    check_invariants(p5);
}

TEST_CASE("make_graph collapses duplicates and rejects bad pairs")
{
    const Graph g = make_graph(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(g.edge_count() == 1);
    CHECK_THROWS_AS(make_graph(3, {{0, 0}}), InputError);
    CHECK_THROWS_AS(make_graph(3, {{0, 3}}), InputError);
    CHECK_THROWS_AS(make_graph(3, {{-1, 2}}), InputError);
}

TEST_CASE("family generators")
{
    CHECK(family(Family::cycle, {5}).edge_count() == 5);
    const Graph apm = family(Family::matching_graph, {2, 1});
    CHECK(apm.order() == 5);
    CHECK(apm.edge_count() == 2);
    CHECK(apm.degree(4) == 0);
    CHECK(family(Family::complete_bipartite, {2, 5}).edge_count() == 10);

    for (int n = 1; n <= 9; ++n) {
        CHECK(path_graph(n).edge_count() == n - 1);
        CHECK(complete_graph(n).edge_count() == n * (n - 1) / 2);
        CHECK(star_graph(n).edge_count() == n);
        if (n >= 3)
            CHECK(cycle_graph(n).edge_count() == n);
        for (int m = 1; m <= 4; ++m)
            CHECK(complete_bipartite_graph(m, n).edge_count() == m * n);
        for (int s = 0; s <= 1; ++s)
            CHECK(matching_graph(n, s).edge_count() == n);
        check_invariants(complete_graph(n));
    }
    CHECK(cycle_graph(6).adjacent(0, 5));
    CHECK(complete_bipartite_graph(2, 3).adjacent(1, 2));
    CHECK_FALSE(complete_bipartite_graph(2, 3).adjacent(2, 3));
    CHECK(matching_graph(3, 0).adjacent(4, 5));
}

TEST_CASE("family rejects bad input")
{
    CHECK_THROWS_AS(family(Family::cycle, {5, 1}), InputError);
    CHECK_THROWS_AS(family(Family::complete_bipartite, {2}), InputError);
    CHECK_THROWS_AS(cycle_graph(2), InputError);
    CHECK_THROWS_AS(path_graph(0), InputError);
    CHECK_THROWS_AS(matching_graph(2, 2), InputError);
    CHECK_FALSE(parse_family("wheel").has_value());
    CHECK(parse_family("star") == Family::star);
    CHECK(family_name(Family::matching_graph) == "matching_graph");
}

TEST_CASE("delete_vertices")
{
    const Graph c5 = cycle_graph(5);
    const auto p4 = delete_vertices(c5, {0});
    CHECK(p4.graph == path_graph(4));
    CHECK(p4.to_original == std::vector<Vertex>{1, 2, 3, 4});
    CHECK(p4.from_original[0] == -1);

    const auto survivors = closed_neighborhood(c5, 0);
    CHECK(survivors == std::vector<Vertex>{0, 1, 4});
    const auto p2 = delete_vertices(c5, std::span<const Vertex>(survivors));
    CHECK(p2.graph == path_graph(2));

    const auto leaves = delete_vertices(star_graph(3), {0});
    CHECK(leaves.graph.order() == 3);
    CHECK(leaves.graph.edge_count() == 0);

    const Graph g = random_graph(8, 0.4, 7);
    const auto same = delete_vertices(g, std::span<const Vertex>{});
    CHECK(same.graph == g);
    std::vector<Vertex> identity(8);
    std::iota(identity.begin(), identity.end(), 0);
    CHECK(is_isomorphism(g, same.graph, identity));

    CHECK_THROWS_AS(delete_vertices(c5, {5}), InputError);
}

TEST_CASE("bipartition_of")
{
    const auto c6 = bipartition_of(cycle_graph(6));
    REQUIRE(c6);
    CHECK(c6->blue_count() == 3);
    CHECK(c6->red_count() == 3);
    CHECK_FALSE(bipartition_of(cycle_graph(5)));
    const auto k25 = bipartition_of(complete_bipartite_graph(2, 5));
    REQUIRE(k25);
    CHECK(k25->blue() == std::vector<Vertex>{0, 1});
    CHECK(k25->red_count() == 5);
    CHECK(k25->blue_not_larger());
}

TEST_CASE("bipartition_of agrees with brute-force 2-colouring")
{
    int graphs = 0;
    for (int n = 1; n <= 8; ++n) {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            const Graph g = random_graph(n, 0.15 + 0.02 * static_cast<double>(seed % 10), seed * 31 + n);
            const auto p = bipartition_of(g);
            CHECK(p.has_value() == oracle::two_colourable(g));
            if (p)
                CHECK(is_proper(g, *p));
            ++graphs;
        }
    }
    CHECK(graphs == 320);
}

TEST_CASE("random_graph is reproducible")
{
    CHECK(random_graph(12, 0.3, 99) == random_graph(12, 0.3, 99));
    CHECK(random_graph(6, 0.0, 1).edge_count() == 0);
    CHECK(random_graph(6, 1.0, 1).edge_count() == 15);
    CHECK_THROWS_AS(random_graph(4, 1.5, 0), InputError);
}

TEST_CASE("adjacency beyond the bit matrix limit")
{
    const int n = Graph::kBitMatrixLimit + 5;
    const Graph g = path_graph(n);
    CHECK(g.adjacent(n - 2, n - 1));
    CHECK_FALSE(g.adjacent(0, n - 1));
    CHECK_THROWS_AS(g.neighbor_mask(0), InputError);
    CHECK(path_graph(4).neighbor_mask(1) == 0b101);
}

TEST_CASE("edge-list round trip and DOT")
{
    const Graph g = cycle_graph(5);
    std::stringstream text;
    write_edge_list(text, g);
    CHECK(text.str().substr(0, 4) == "5 5\n");
    CHECK(read_edge_list(text) == g);

    std::istringstream commented("# a triangle\n3 3\n\n1 2\n2 3\n1 3\n");
    CHECK(read_edge_list(commented) == complete_graph(3));

    std::istringstream bad("3 1\n1 4\n");
    CHECK_THROWS_AS(read_edge_list(bad), InputError);
    std::istringstream short_list("3 2\n1 2\n");
    CHECK_THROWS_AS(read_edge_list(short_list), InputError);

    std::ostringstream dot;
    write_dot(dot, path_graph(2));
    CHECK(dot.str().find("0 -- 1") != std::string::npos);
    CHECK(dot.str().find("label=\"2\"") != std::string::npos);
}

TEST_CASE("graph specs")
{
    CHECK(parse_graph_spec("cycle:5") == cycle_graph(5));
    CHECK(parse_graph_spec("kbip:2,5") == complete_bipartite_graph(2, 5));
    CHECK(parse_graph_spec("match:2,1") == matching_graph(2, 1));
    CHECK(parse_graph_spec("star:4") == star_graph(4));
    CHECK_THROWS_AS(parse_graph_spec("cycle"), InputError);
    CHECK_THROWS_AS(parse_graph_spec("cycle:x"), InputError);
    CHECK_THROWS_AS(parse_graph_spec("wheel:5"), InputError);
    CHECK_THROWS_AS(parse_graph_spec("kbip:2"), InputError);
    CHECK_THROWS_AS(parse_graph_spec("file:/nonexistent/graph.txt"), InputError);
}
