#pragma once

#include "tokengraphs/graph.hpp"
#include "tokengraphs/independence.hpp"
#include "tokengraphs/matching.hpp"
#include "tokengraphs/subsets.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace tokengraphs {

// Matchings and independent sets returned here live on token graphs and use
// colex ranks as vertex ids.

/// Lifts matchings N of F_k(H) and L of F_{k-2}(H), H = G - {v,w}, to F_k(G)
/// and adds [{v}+A, {w}+A] for every (k-1)-subset A avoiding v and w.
/// The result has exactly |N| + |L| + C(n-2, k-1) edges.
/// Requires n >= 6, 3 <= k <= n-3 and e = [v,w] in E(G). H uses the
/// relabeling of delete_vertices(G, {v, w}).
Matching lemma_times_combine(const Graph& g, Edge e, const Matching& n_part, const Matching& l_part, int k);

/// a[i] ~ b[i] for i < m; b may carry one extra vertex b[m] that is left uncovered.
struct MatchingLabels {
    std::vector<Vertex> a;
    std::vector<Vertex> b;
};

/// The two families
///   M1 = {[{a_i,a_j},{a_j,b_i}] : i < j <= m}
///   M2 = {[{b_i,b_j},{a_i,b_j}] : i < j <= m+s}
/// as a matching of F_2(g) of size C(m,2) + C(m+s,2). Every a_i b_i must be an edge of g.
Matching f2_matching_from_labels(const Graph& g, const MatchingLabels& labels);

struct F2Construction {
    Graph base;            // matching_graph(m, s)
    MatchingLabels labels; // a_i = 2(i-1), b_i = 2(i-1)+1, b_{m+1} = 2m
    Matching matching;     // in F_2(base)
};

F2Construction f2_matching_construction(int m, int s);

/// A matching of F_k(G) meeting the lower bound of the matching theorem for
/// a graph with the perfect or almost perfect matching `m`.
/// k in {1, n-1}: m itself (through the complement map for n-1);
/// k in {2, n-2}: the F_2 families on m's labels (complemented for n-2);
/// otherwise: recurse on G - {v,w} for the lowest edge [v,w] of m and combine.
Matching theorem1_matching(const Graph& g, const Matching& m, int k);

/// Isolated vertices of F_k(matching_graph(m, s)): V(M') for the k/2-edge
/// submatchings M' when k is even, and V(M') + {2m} with |M'| = floor(k/2)
/// when s = 1 and k is odd. Each returned rank is checked to have degree 0.
std::vector<Vertex> isolated_tokens(int m, int s, int k);

/// L_i = {{j, p-(i-j)} : 1 <= j <= i} in 1-based cycle labels, for odd p >= 3
/// and 1 <= i <= p-1. Stored as 0-based masks (label x is vertex x-1 of cycle_graph(p)).
struct LayerSet {
    int p = 0;
    int index = 0;
    std::vector<SubsetMask> members;
};

LayerSet cycle_layer(int p, int i);

/// Whether some member of L_i is adjacent to some member of L_j in F_2(C_p),
/// found by scanning edges.
bool layers_linked(int p, int i, int j);

/// The closed-form link rule: |i - j| = 1, or i + j = p + 1.
bool layers_linked_by_rule(int p, int i, int j);

/// Layer indices used by cycle_independent_set, with t = floor(p/2):
/// t odd:  1, 3, ..., t, t+3, t+5, ..., p-1
/// t even: 1, 3, ..., t-1, t+2, t+4, ..., p-1
std::vector<int> cycle_independent_layers(int p);

/// Union of the layers above, an independent set of F_2(C_p) of size
/// floor(p * floor(p/2) / 2). Odd p >= 5 only.
IndependentSet cycle_independent_set(int p);

enum class InjectionDirection { pairs_to_indices, indices_to_pairs };

/// Colex enumeration of 1-based pairs (i1 < i2): table[t] is the t-th pair.
/// pairs_to_indices: phi(table[t]) = t + 1 for t < C(s,2).
/// indices_to_pairs: phi(i) = table[i-1] for i in [m].
struct InjectionPhi {
    InjectionDirection direction = InjectionDirection::pairs_to_indices;
    int domain_size = 0;
    std::vector<std::pair<int, int>> table;
};

/// Bipartite witness graph with B = {b_1..b_m} = vertices 0..m-1 and
/// R = {r_1..r_{m+s}} = vertices m..2m+s-1.
struct WitnessGraph {
    int m = 0;
    int s = 0;
    Graph graph;
    Bipartition parts;
    InjectionPhi phi;
    std::int64_t claimed_beta = 0; // beta(F_2(graph)) asserted by the construction
};

/// Exact integer form of s < s0(m) = (1 + sqrt(1 + 8m)) / 2, i.e. m > C(s,2).
bool below_threshold(int m, int s);

/// b_i ~ r_i, and b_phi({i,j}) ~ r_{m+i}, r_{m+j} for each pair of [s].
/// Requires s < s0(m). beta(F_2) = m(m+s).
WitnessGraph witness_graph_small_s(int m, int s);

/// b_i ~ r_i, and b_i ~ r_{m+i1}, r_{m+i2} for phi(i) = (i1, i2).
/// Requires s >= s0(m). beta(F_2) = C(2m+s, 2) - m(m+s).
WitnessGraph witness_graph_large_s(int m, int s);

} // namespace tokengraphs
