#pragma once

#include "tokengraphs/graph.hpp"
#include "tokengraphs/independence.hpp"
#include "tokengraphs/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tokengraphs::formulas {

enum class Kind { exact, lower_bound, upper_bound };

std::string_view kind_name(Kind kind);

struct FormulaValue {
    Rational value;
    Kind kind = Kind::exact;
    std::optional<std::string> tight_for;
};

/// Matching number of F_k(G) for G of order n with nu(G) = floor(n/2):
///   n even, k odd:   exactly C(n,k)/2
///   n even, k even:  at least (C(n,k) - C(n/2,k/2))/2, tight for a perfect matching
///   n odd:           at least (C(n,k) - C((n-1)/2, floor(k/2)))/2, tight for an almost perfect matching
FormulaValue nu_token_formula(int n, int k);

/// max{mn, C(m+n,2) - mn}
std::int64_t beta_kmn_f2(int m, int n);

/// floor(p * floor(p/2) / 2), p >= 3.
std::int64_t beta_cycle_f2(int p);

/// Independence number of F_k(K_{1,n}) for 1 <= k <= n:
/// C(n,k) when k <= (n+1)/2, else C(n,k-1).
std::int64_t beta_star(int n, int k);

/// Size of the red class of F_k for a bipartite graph with |B| = m, |R| = n:
/// sum_{i=1}^{ceil(k/2)} C(n, 2i-1) C(m, k-2i+1).
std::int64_t r_value(int m, int n, int k);

/// max{r, C(p,k) - r} with r = r_value(floor(p/2), ceil(p/2), k); the
/// independence number of F_k(G) for G in {P_p, K_{t,t}, K_{t,t+1}}.
std::int64_t beta_balanced_family(int p, int k);

/// s0(m) = (1 + sqrt(1 + 8m)) / 2 held as the surd (1 + sqrt(discriminant)) / 2.
struct Threshold {
    int m = 0;
    std::int64_t discriminant = 0; // 1 + 8m
    int min_integer_s = 0;         // least integer s with C(s,2) >= m, i.e. ceil(s0)
    double approx = 0.0;           // display only
};

Threshold s_threshold(int m);

/// |B| >= |R| in F_2 for a bipartite graph with parts m <= n, decided as C(n-m, 2) >= m.
bool class_order_predicate(int m, int n);

enum class Sequence { A091044, A000217, A002620, A189889 };

std::optional<Sequence> parse_sequence(std::string_view id);
std::string_view sequence_name(Sequence seq);

struct SequenceTerm {
    int index = 0;                 // sequence index (row-major position for A091044)
    std::string instance;          // token-graph instance the term is read from
    std::int64_t value = 0;        // formula value
    std::optional<std::int64_t> solver_value;
};

struct SequenceCheck {
    Sequence sequence;
    std::vector<SequenceTerm> terms;
    bool matches = true; // every solver-checked term agrees with its formula value
};

/// Terms generated from the closed forms, each cross-checked against the
/// exact solver when its token graph has at most `solver_vertex_limit` vertices.
///   A091044: C(2n, 2m+1)/2, rows n >= 1, 0 <= m < n     (beta(F_{2m+1}(P_{2n})))
///   A000217: C(j+1, 2), j >= 0                          (beta(F_2(K_{1,j+1})), j >= 2)
///   A002620: floor(t^2/4), t >= 0                        (beta(F_2(P_t)))
///   A189889: floor(p floor(p/2)/2), p >= 3               (beta(F_2(C_p)))
SequenceCheck oeis_check(Sequence seq, int count, const SolverOptions& options = {}, int solver_vertex_limit = 60);

struct CounterexampleHit {
    Graph graph; // B = {0,1}, R = {2..6}
    std::int64_t beta = 0;
    std::int64_t bound = 0; // max{|R|, |B|} of F_2
};

/// Every bipartite graph on parts of sizes 2 and 5 (spanning subgraphs of
/// K_{2,5}) whose 2-token graph has independence number above 11. With
/// `skip_isolated` the graphs having an isolated vertex are left out.
std::vector<CounterexampleHit> counterexample_scan_2x5(bool skip_isolated = true, const SolverOptions& options = {});

struct ConjectureRow {
    int m = 0;
    int n = 0;
    int k = 0;
    std::int64_t red = 0;
    std::int64_t blue = 0;
    std::int64_t beta = 0;
    IndependentSet witness;

    bool agrees() const { return beta == std::max(red, blue); }
};

struct ConjectureReport {
    std::vector<ConjectureRow> rows; // sorted by (m, n, k)
    std::vector<ConjectureRow> violations() const;
};

constexpr int kConjectureMaxOrder = 10;
constexpr int kConjectureMaxK = 4;

/// For K_{m,n} with 1 <= m <= n, m + n <= max_order and 2 <= k <= min(max_k, m+n-2),
/// compares the solver's beta(F_k) with the larger colour class.
ConjectureReport conjecture_scan(int max_order, int max_k, const SolverOptions& options = {});

} // namespace tokengraphs::formulas
