#include "tokengraphs/formulas.hpp"

#include "tokengraphs/error.hpp"
#include "tokengraphs/subsets.hpp"
#include "tokengraphs/token_graph.hpp"

#include <algorithm>
#include <cmath>

namespace tokengraphs::formulas {

namespace {

std::int64_t c(int n, int k) { return static_cast<std::int64_t>(binomial(n, k)); }

} // namespace

std::string_view kind_name(Kind kind)
{
    switch (kind) {
    case Kind::exact: return "exact";
    case Kind::lower_bound: return "lower-bound";
    case Kind::upper_bound: return "upper-bound";
    }
    return "?";
}

FormulaValue nu_token_formula(int n, int k)
{
    if (n < 2 || k < 1 || k > n - 1)
        throw InputError("nu_token_formula: need 1 <= k <= n-1");
    FormulaValue out;
    if (n % 2 == 0 && k % 2 == 1) {
        out.value = Rational(c(n, k), 2);
        out.kind = Kind::exact;
    } else if (n % 2 == 0) {
        out.value = Rational(c(n, k) - c(n / 2, k / 2), 2);
        out.kind = Kind::lower_bound;
        out.tight_for = "perfect matching graph";
    } else {
        out.value = Rational(c(n, k) - c((n - 1) / 2, k / 2), 2);
        out.kind = Kind::lower_bound;
        out.tight_for = "almost perfect matching graph";
    }
    return out;
}

std::int64_t beta_kmn_f2(int m, int n)
{
    if (m < 1 || n < 1)
        throw InputError("beta_kmn_f2: part sizes must be positive");
    const std::int64_t cross = static_cast<std::int64_t>(m) * n;
    return std::max(cross, c(m + n, 2) - cross);
}

std::int64_t beta_cycle_f2(int p)
{
    if (p < 3)
        throw InputError("beta_cycle_f2: p >= 3");
    return static_cast<std::int64_t>(p) * (p / 2) / 2;
}

std::int64_t beta_star(int n, int k)
{
    if (n < 1 || k < 1 || k > n)
        throw InputError("beta_star: need 1 <= k <= n");
    return 2 * k <= n + 1 ? c(n, k) : c(n, k - 1);
}

std::int64_t r_value(int m, int n, int k)
{
    if (m < 1 || n < 1 || k < 1 || k > m + n - 1)
        throw InputError("r_value: need m, n >= 1 and 1 <= k <= m+n-1");
    std::int64_t r = 0;
    for (int i = 1; i <= (k + 1) / 2; ++i)
        r += c(n, 2 * i - 1) * c(m, k - 2 * i + 1);
    return r;
}

std::int64_t beta_balanced_family(int p, int k)
{
    if (p < 2 || k < 1 || k > p - 1)
        throw InputError("beta_balanced_family: need 1 <= k <= p-1");
    const std::int64_t r = r_value(p / 2, (p + 1) / 2, k);
    return std::max(r, c(p, k) - r);
}

Threshold s_threshold(int m)
{
    if (m < 1)
        throw InputError("s_threshold: m >= 1");
    Threshold t;
    t.m = m;
    t.discriminant = 1 + 8LL * m;
    int s = 0;
    while (c(s, 2) < m)
        ++s;
    t.min_integer_s = s;
    t.approx = (1.0 + std::sqrt(static_cast<double>(t.discriminant))) / 2.0;
    return t;
}

bool class_order_predicate(int m, int n)
{
    if (m < 1 || n < m)
        throw InputError("class_order_predicate: need 1 <= m <= n");
    return c(n - m, 2) >= m;
}

std::optional<Sequence> parse_sequence(std::string_view id)
{
    for (auto seq : {Sequence::A091044, Sequence::A000217, Sequence::A002620, Sequence::A189889})
        if (sequence_name(seq) == id)
            return seq;
    return std::nullopt;
}

std::string_view sequence_name(Sequence seq)
{
    switch (seq) {
    case Sequence::A091044: return "A091044";
    case Sequence::A000217: return "A000217";
    case Sequence::A002620: return "A002620";
    case Sequence::A189889: return "A189889";
    }
    return "?";
}

namespace {

std::optional<std::int64_t> solve_if_small(const Graph& g, int k, const SolverOptions& options, int limit)
{
    if (static_cast<std::int64_t>(binomial(g.order(), k)) > limit)
        return std::nullopt;
    return token_beta(g, k, solver_oracle(options));
}

std::string instance_name(std::string_view family, int order, int k)
{
    return std::string(family) + ":" + std::to_string(order) + " k=" + std::to_string(k);
}

} // namespace

SequenceCheck oeis_check(Sequence seq, int count, const SolverOptions& options, int solver_vertex_limit)
{
    if (count < 0 || count > 20)
        throw InputError("oeis_check: count must be in [0, 20]");
    SequenceCheck out{seq, {}, true};
    auto add = [&](SequenceTerm term, std::optional<std::int64_t> reference) {
        if (reference && *reference != term.value)
            out.matches = false;
        if (term.solver_value && *term.solver_value != term.value)
            out.matches = false;
        out.terms.push_back(std::move(term));
    };

    switch (seq) {
    case Sequence::A091044: {
        int index = 0;
        for (int row = 1; index < count; ++row) {
            for (int col = 0; col < row && index < count; ++col, ++index) {
                const int k = 2 * col + 1;
                SequenceTerm term{index, instance_name("path", 2 * row, k), c(2 * row, k) / 2, std::nullopt};
                term.solver_value = solve_if_small(path_graph(2 * row), k, options, solver_vertex_limit);
                add(std::move(term), beta_balanced_family(2 * row, k));
            }
        }
        break;
    }
    case Sequence::A000217:
        for (int j = 0; j < count; ++j) {
            SequenceTerm term{j, {}, c(j + 1, 2), std::nullopt};
            std::optional<std::int64_t> reference;
            if (j >= 2) {
                term.instance = instance_name("star", j + 1, 2);
                term.solver_value = solve_if_small(star_graph(j + 1), 2, options, solver_vertex_limit);
                reference = beta_star(j + 1, 2);
            }
            add(std::move(term), reference);
        }
        break;
    case Sequence::A002620:
        for (int t = 0; t < count; ++t) {
            SequenceTerm term{t, {}, static_cast<std::int64_t>(t) * t / 4, std::nullopt};
            std::optional<std::int64_t> reference;
            if (t >= 3) {
                term.instance = instance_name("path", t, 2);
                term.value = beta_balanced_family(t, 2);
                term.solver_value = solve_if_small(path_graph(t), 2, options, solver_vertex_limit);
                reference = static_cast<std::int64_t>(t) * t / 4;
            } else if (t >= 1) {
                term.instance = instance_name("path", t, 2);
                term.solver_value = token_beta(path_graph(t), 2, solver_oracle(options));
            }
            add(std::move(term), reference);
        }
        break;
    case Sequence::A189889:
        for (int i = 0; i < count; ++i) {
            const int p = i + 3;
            SequenceTerm term{p, instance_name("cycle", p, 2), beta_cycle_f2(p), std::nullopt};
            term.solver_value = solve_if_small(cycle_graph(p), 2, options, solver_vertex_limit);
            add(std::move(term), std::nullopt);
        }
        break;
    }
    return out;
}

std::vector<CounterexampleHit> counterexample_scan_2x5(bool skip_isolated, const SolverOptions& options)
{
    constexpr int kBlue = 2;
    constexpr int kRed = 5;
    Bipartition parts;
    parts.side.assign(kBlue, Side::blue);
    parts.side.resize(kBlue + kRed, Side::red);

    std::vector<CounterexampleHit> hits;
    for (unsigned chosen = 0; chosen < (1u << (kBlue * kRed)); ++chosen) {
        std::vector<std::pair<int, int>> pairs;
        for (int b = 0; b < kBlue; ++b)
            for (int r = 0; r < kRed; ++r)
                if ((chosen >> (b * kRed + r)) & 1)
                    pairs.emplace_back(b, kBlue + r);
        Graph g = make_graph(kBlue + kRed, pairs);
        if (skip_isolated) {
            bool isolated = false;
            for (Vertex v = 0; v < g.order(); ++v)
                isolated = isolated || g.degree(v) == 0;
            if (isolated)
                continue;
        }
        const TokenGraph t = token_graph(g, 2);
        const Bipartition classes = token_bipartition(t, parts);
        const std::int64_t bound = std::max(classes.red_count(), classes.blue_count());
        const std::int64_t beta = max_independent_set(t.graph(), options).size();
        if (beta > bound)
            hits.push_back({std::move(g), beta, bound});
    }
    return hits;
}

std::vector<ConjectureRow> ConjectureReport::violations() const
{
    std::vector<ConjectureRow> out;
    std::copy_if(rows.begin(), rows.end(), std::back_inserter(out), [](const ConjectureRow& r) { return !r.agrees(); });
    return out;
}

ConjectureReport conjecture_scan(int max_order, int max_k, const SolverOptions& options)
{
    if (max_order > kConjectureMaxOrder || max_k > kConjectureMaxK)
        throw BudgetExceeded("conjecture_scan: limited to max_order <= 10 and max_k <= 4");
    ConjectureReport report;
    for (int m = 1; 2 * m <= max_order; ++m) {
        for (int n = m; m + n <= max_order; ++n) {
            const Graph g = complete_bipartite_graph(m, n);
            Bipartition parts;
            parts.side.assign(static_cast<std::size_t>(m), Side::blue);
            parts.side.resize(static_cast<std::size_t>(m + n), Side::red);
            for (int k = 2; k <= std::min(max_k, m + n - 2); ++k) {
                const TokenGraph t = token_graph(g, k);
                const Bipartition classes = token_bipartition(t, parts);
                ConjectureRow row;
                row.m = m;
                row.n = n;
                row.k = k;
                row.red = classes.red_count();
                row.blue = classes.blue_count();
                row.witness = max_independent_set(t.graph(), options);
                row.beta = row.witness.size();
                report.rows.push_back(std::move(row));
            }
        }
    }
    return report;
}

} // namespace tokengraphs::formulas
