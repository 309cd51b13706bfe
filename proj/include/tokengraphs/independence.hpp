#pragma once

#include "tokengraphs/graph.hpp"
#include "tokengraphs/token_graph.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace tokengraphs {

struct IndependentSet {
    std::vector<Vertex> vertices; // sorted

    int size() const { return static_cast<int>(vertices.size()); }
};

bool is_independent(const Graph& g, std::span<const Vertex> s);

/// Resource limits for the exact solvers. Exceeding any raises BudgetExceeded.
struct SolverOptions {
    std::optional<std::chrono::steady_clock::time_point> deadline;
    std::optional<double> seconds_per_call; // clock starts when a solve begins
    std::uint64_t node_limit = 0;           // 0: unlimited

    /// Absolute deadline `seconds` from now.
    static SolverOptions with_seconds(double seconds);
    /// Each solver call gets `seconds` of its own.
    static SolverOptions per_call(double seconds);
};

/// Exact maximum independent set by branch and bound.
///
/// Reductions: vertices of degree 0 or 1 in the candidate set are taken.
/// Bounds: a greedy clique cover, then |P| - nu(G[P]) (each matched edge
/// holds at most one member of an independent set).
/// Branching: highest degree in the candidate set, lowest id on ties,
/// include-branch first. The witness is the first optimum met in that order.
IndependentSet max_independent_set(const Graph& g, const SolverOptions& options = {});

constexpr int kBruteForceLimit = 26;

/// Independence number by exhaustive enumeration of independent sets over
/// bit masks. Only for graphs with at most 26 vertices.
int brute_force_mis(const Graph& g);

/// When the smaller colour class saturates into the larger one the
/// independence number is the larger class size; otherwise no conclusion.
std::optional<std::int64_t> beta_via_saturation(const Graph& g, const Bipartition& labels);
std::optional<std::int64_t> beta_via_saturation(const TokenGraph& t, const Bipartition& labels);

struct BoundsPair {
    std::int64_t lower = 0;
    std::int64_t upper = 0;
};

/// beta(F_j(H)) for an instance with 1 <= j <= |H| - 1.
using BetaOracle = std::function<std::int64_t(const Graph& h, int j)>;

/// beta(F_j(H)) with the boundary conventions used by the recursions:
/// j = 0 gives 1 (the empty token set), j > |H| gives 0, j = |H| gives 1.
/// Other cases go to `oracle`.
std::int64_t token_beta(const Graph& h, int j, const BetaOracle& oracle);

/// Oracle that builds F_j(H) and runs max_independent_set on it.
BetaOracle solver_oracle(SolverOptions options = {});

/// Both sides of the vertex recursion for 2 <= k <= n-1:
///   lower = max_v beta(F_{k-1}(G-v)) + beta(F_k(G-N[v]))
///   upper = floor( sum_v beta(F_{k-1}(G-v)) / k )
BoundsPair recursive_bounds(const Graph& g, int k, const BetaOracle& oracle);

/// For vertex-transitive G and 2 <= k <= n-2:
///   floor(min{ n/k * beta(F_{k-1}(G-w)), n/(n-k) * beta(F_k(G-w)) }).
/// Vertex-transitivity is certified only for cycles and complete graphs;
/// any other graph raises InputError.
std::int64_t vertex_transitive_bound(const Graph& g, int k, Vertex w, const BetaOracle& oracle);

} // namespace tokengraphs
