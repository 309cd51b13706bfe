#include "tokengraphs/verify.hpp"

#include "tokengraphs/constructions.hpp"
#include "tokengraphs/error.hpp"
#include "tokengraphs/token_io.hpp"

#include <algorithm>
#include <chrono>
#include <map>

namespace tokengraphs {

namespace {

using nlohmann::json;
using formulas::Kind;

json number(const Rational& r)
{
    if (denominator(r) == 1)
        return static_cast<std::int64_t>(numerator(r));
    return to_string(r);
}

std::string spec(std::string_view family, std::initializer_list<int> params)
{
    std::string out(family);
    out += ':';
    bool first = true;
    for (int p : params) {
        if (!first)
            out += ',';
        out += std::to_string(p);
        first = false;
    }
    return out;
}

std::string with_k(const std::string& graph, int k) { return graph + " k=" + std::to_string(k); }

Status status_of(bool ok) { return ok ? Status::pass : Status::fail; }

Status bound_status(bool holds) { return holds ? Status::bound_holds : Status::fail; }

class Suite {
public:
    Suite(std::string theorem, const VerifyOptions& options) : theorem_(std::move(theorem)), options_(options) {}

    SolverOptions solver() const
    {
        return options_.budget_seconds ? SolverOptions::per_call(*options_.budget_seconds) : SolverOptions{};
    }

    BetaOracle oracle() const { return solver_oracle(solver()); }

    int max_n(int fallback) const { return options_.max_n.value_or(fallback); }

    template <class F>
    void row(std::string instance, F&& fill)
    {
        VerificationReport r;
        r.theorem = theorem_;
        r.instance = std::move(instance);
        const auto start = std::chrono::steady_clock::now();
        try {
            fill(r);
        } catch (const BudgetExceeded& e) {
            r.status = Status::budget_exceeded;
            r.witness = json{{"error", e.what()}};
        } catch (const std::exception& e) {
            r.status = Status::fail;
            r.witness = json{{"error", e.what()}};
        }
        if (options_.timings)
            r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (options_.on_row)
            options_.on_row(r);
        rows_.push_back(std::move(r));
    }

    std::vector<VerificationReport> take() { return std::move(rows_); }

private:
    std::string theorem_;
    const VerifyOptions& options_;
    std::vector<VerificationReport> rows_;
};

std::int64_t solve_beta(const TokenGraph& t, const Suite& suite, IndependentSet* witness = nullptr)
{
    IndependentSet s = max_independent_set(t.graph(), suite.solver());
    if (witness)
        *witness = s;
    return s.size();
}

Bipartition blue_then_red(int blue, int red)
{
    Bipartition p;
    p.side.assign(static_cast<std::size_t>(blue), Side::blue);
    p.side.resize(static_cast<std::size_t>(blue + red), Side::red);
    return p;
}

// ---------------------------------------------------------------- matchings

struct NamedGraph {
    std::string name;
    Graph graph;
    bool matching_graph = false;
    int m = 0;
    int s = 0;
};

std::int64_t isolated_formula(int m, int s, int k)
{
    if (s == 0 && k % 2 == 1)
        return 0;
    return static_cast<std::int64_t>(binomial(m, k / 2));
}

std::vector<VerificationReport> thm1(const VerifyOptions& options)
{
    Suite suite("thm1", options);
    const int max_n = suite.max_n(10);
    std::vector<NamedGraph> graphs;
    for (int n = 4; n <= max_n; n += 2)
        graphs.push_back({spec("cycle", {n}), cycle_graph(n)});
    for (int t = 2; 2 * t <= max_n; ++t)
        graphs.push_back({spec("kbip", {t, t}), complete_bipartite_graph(t, t)});
    for (int n = 3; n <= std::min(max_n, 9); ++n)
        graphs.push_back({spec("path", {n}), path_graph(n)});
    for (int m = 1; 2 * m + 1 <= max_n || 2 * m <= max_n; ++m)
        for (int s = 0; s <= 1; ++s)
            if (2 * m + s >= 3 && 2 * m + s <= max_n)
                graphs.push_back({spec("match", {m, s}), matching_graph(m, s), true, m, s});

    for (const auto& named : graphs) {
        const Graph& g = named.graph;
        const int n = g.order();
        const Matching base = max_matching(g);
        for (int k = 1; k <= n - 1; ++k) {
            suite.row(with_k(named.name, k), [&](VerificationReport& r) {
                const auto fv = formulas::nu_token_formula(n, k);
                const TokenGraph t = token_graph(g, k);
                const Matching built = theorem1_matching(g, base, k);
                const int nu = max_matching(t.graph()).size();
                r.formula_value = {{"value", number(fv.value)}, {"kind", formulas::kind_name(fv.kind)}};
                r.solver_value = {{"nu", nu}, {"constructive", built.size()}};
                r.witness = matching_witness(t, built);

                bool ok = Rational(built.size()) == fv.value;
                if (named.matching_graph) {
                    const auto listed = isolated_tokens(named.m, named.s, k);
                    int degree_zero = 0;
                    for (Vertex v = 0; v < t.graph().order(); ++v)
                        degree_zero += t.graph().degree(v) == 0;
                    const std::int64_t expected = isolated_formula(named.m, named.s, k);
                    r.formula_value["isolated"] = expected;
                    r.solver_value["isolated"] = degree_zero;
                    ok = ok && std::cmp_equal(listed.size(), expected) && degree_zero == expected;
                }
                if (fv.kind == Kind::exact || named.matching_graph)
                    r.status = status_of(ok && Rational(nu) == fv.value);
                else
                    r.status = bound_status(ok && Rational(nu) >= fv.value);
            });
        }
    }
    return suite.take();
}

std::vector<VerificationReport> lemma3(const VerifyOptions& options)
{
    Suite suite("lemma3", options);
    const int max_n = suite.max_n(10);
    for (int m = 1; 2 * m <= max_n; ++m) {
        for (int s = 0; s <= 1; ++s) {
            const int n = 2 * m + s;
            if (n < 3 || n > max_n)
                continue;
            suite.row(with_k(spec("match", {m, s}), 2), [&](VerificationReport& r) {
                const auto built = f2_matching_construction(m, s);
                const TokenGraph t = token_graph(built.base, 2);
                const int nu = max_matching(t.graph()).size();
                const std::int64_t formula = (static_cast<std::int64_t>(binomial(n, 2)) - m) / 2;
                r.formula_value = formula;
                r.solver_value = {{"nu", nu}, {"constructive", built.matching.size()}};
                r.witness = matching_witness(t, built.matching);
                r.status = status_of(nu == formula && built.matching.size() == formula);
            });
        }
    }
    return suite.take();
}

std::vector<VerificationReport> fig1(const VerifyOptions& options)
{
    Suite suite("fig1", options);
    suite.row(with_k(spec("star", {5}), 3), [&](VerificationReport& r) {
        const TokenGraph t = token_graph(star_graph(5), 3);
        const Matching m = max_matching(t.graph());
        r.formula_value = {{"value", 10}, {"perfect", true}};
        r.solver_value = {{"nu", m.size()}, {"perfect", is_perfect(m, t.graph())}};
        r.witness = matching_witness(t, m);
        r.status = status_of(m.size() == 10 && is_perfect(m, t.graph()));
    });
    suite.row(spec("star", {5}), [&](VerificationReport& r) {
        const Graph g = star_graph(5);
        const Matching m = max_matching(g);
        r.formula_value = {{"perfect", false}};
        r.solver_value = {{"nu", m.size()}, {"perfect", is_perfect(m, g)}};
        r.status = status_of(!is_perfect(m, g));
    });
    return suite.take();
}

std::vector<VerificationReport> fig2(const VerifyOptions& options)
{
    Suite suite("fig2", options);
    auto imperfect = [&](const std::string& name, const Graph& g, int k, int expected) {
        suite.row(with_k(name, k), [&](VerificationReport& r) {
            const TokenGraph t = token_graph(g, k);
            const Matching m = max_matching(t.graph());
            r.formula_value = {{"value", expected}, {"perfect", false}};
            r.solver_value = {{"nu", m.size()}, {"perfect", is_perfect(m, t.graph())}};
            r.witness = matching_witness(t, m);
            r.status = status_of(m.size() == expected && !is_perfect(m, t.graph()));
        });
    };
    imperfect(spec("path", {5}), path_graph(5), 3, 4);
    imperfect(spec("match", {2, 0}), matching_graph(2, 0), 2, 2);
    return suite.take();
}

// ----------------------------------------------------------- independence

std::vector<VerificationReport> thm2(const VerifyOptions& options)
{
    Suite suite("thm2", options);
    const int max_n = suite.max_n(10);
    for (int m = 1; 2 * m <= max_n; ++m) {
        for (int n = m; m + n <= max_n; ++n) {
            if (m + n < 3)
                continue;
            suite.row(with_k(spec("kbip", {m, n}), 2), [&](VerificationReport& r) {
                const TokenGraph t = token_graph(complete_bipartite_graph(m, n), 2);
                IndependentSet best;
                const std::int64_t beta = solve_beta(t, suite, &best);
                const std::int64_t formula = formulas::beta_kmn_f2(m, n);
                r.formula_value = formula;
                r.solver_value = beta;
                r.witness = independent_set_witness(t, best);
                r.status = status_of(beta == formula);
            });
        }
    }
    return suite.take();
}

std::vector<VerificationReport> thm3(const VerifyOptions& options)
{
    Suite suite("thm3", options);
    const int max_n = suite.max_n(11);
    for (int p = 3; p <= max_n; ++p) {
        suite.row(with_k(spec("cycle", {p}), 2), [&](VerificationReport& r) {
            const TokenGraph t = token_graph(cycle_graph(p), 2);
            IndependentSet best;
            const std::int64_t beta = solve_beta(t, suite, &best);
            const std::int64_t formula = formulas::beta_cycle_f2(p);
            r.formula_value = formula;
            r.solver_value = beta;
            bool ok = beta == formula;
            if (p % 2 == 1 && p >= 5) {
                const IndependentSet layers = cycle_independent_set(p);
                r.solver_value = {{"beta", beta}, {"constructive", layers.size()}};
                r.witness = independent_set_witness(t, layers);
                r.witness["layers"] = cycle_independent_layers(p);
                ok = ok && layers.size() == formula && is_independent(t.graph(), layers.vertices);
            } else {
                r.witness = independent_set_witness(t, best);
            }
            r.status = status_of(ok);
        });
    }
    return suite.take();
}

void exact_beta_row(Suite& suite, const std::string& name, const Graph& g, int k, std::int64_t formula)
{
    suite.row(with_k(name, k), [&](VerificationReport& r) {
        const TokenGraph t = token_graph(g, k);
        IndependentSet best;
        const std::int64_t beta = solve_beta(t, suite, &best);
        r.formula_value = formula;
        r.solver_value = beta;
        r.witness = independent_set_witness(t, best);
        r.status = status_of(beta == formula);
    });
}

std::vector<VerificationReport> cor3(const VerifyOptions& options)
{
    Suite suite("cor3", options);
    const int max_n = suite.max_n(10);
    for (int half = 1; 2 * half <= max_n; ++half) {
        const int n = 2 * half;
        std::vector<NamedGraph> graphs;
        graphs.push_back({spec("path", {n}), path_graph(n)});
        if (n >= 4)
            graphs.push_back({spec("cycle", {n}), cycle_graph(n)});
        graphs.push_back({spec("kbip", {half, half}), complete_bipartite_graph(half, half)});
        for (const auto& named : graphs)
            for (int k = 1; k < n; k += 2)
                exact_beta_row(suite, named.name, named.graph, k, static_cast<std::int64_t>(binomial(n, k)) / 2);
    }
    return suite.take();
}

std::vector<VerificationReport> cor4(const VerifyOptions& options)
{
    Suite suite("cor4", options);
    const int max_n = suite.max_n(9);
    for (int p = 2; p <= std::min(max_n, 8); ++p)
        for (int k = 1; k < p; ++k)
            exact_beta_row(suite, spec("path", {p}), path_graph(p), k, formulas::beta_balanced_family(p, k));
    for (int p = 2; p <= max_n; ++p) {
        const int t = p / 2;
        const Graph g = complete_bipartite_graph(t, p - t);
        for (int k = 1; k < p; ++k)
            exact_beta_row(suite, spec("kbip", {t, p - t}), g, k, formulas::beta_balanced_family(p, k));
    }
    return suite.take();
}

std::vector<VerificationReport> star(const VerifyOptions& options)
{
    Suite suite("star", options);
    const int max_n = suite.max_n(7);
    for (int n = 1; n <= max_n; ++n)
        for (int k = 1; k <= n; ++k)
            exact_beta_row(suite, spec("star", {n}), star_graph(n), k, formulas::beta_star(n, k));
    return suite.take();
}

std::vector<VerificationReport> witness_suite(const VerifyOptions& options, bool small_s)
{
    Suite suite(small_s ? "lemma5" : "lemma6", options);
    const int max_n = suite.max_n(9);
    for (int m = 1; 2 * m <= max_n; ++m) {
        for (int s = 0; 2 * m + s <= max_n; ++s) {
            if (below_threshold(m, s) != small_s)
                continue;
            const std::string name = std::string(small_s ? "witness-small" : "witness-large") + ":" + std::to_string(m)
                + "," + std::to_string(s);
            suite.row(with_k(name, 2), [&](VerificationReport& r) {
                const WitnessGraph w = small_s ? witness_graph_small_s(m, s) : witness_graph_large_s(m, s);
                r.formula_value = w.claimed_beta;
                auto phi = json::array();
                for (auto [i, j] : w.phi.table)
                    phi.push_back({i, j});
                r.witness = {{"edges", json::array()}, {"phi", phi}};
                for (const auto& e : w.graph.edges())
                    r.witness["edges"].push_back({e.u + 1, e.v + 1});

                if (w.graph.order() == 2) {
                    r.solver_value = token_beta(w.graph, 2, suite.oracle());
                    r.status = status_of(r.solver_value == w.claimed_beta);
                    return;
                }
                const TokenGraph t = token_graph(w.graph, 2);
                const Bipartition classes = token_bipartition(t, w.parts);
                const std::int64_t beta = solve_beta(t, suite);
                const std::int64_t larger = small_s ? classes.red_count() : classes.blue_count();
                r.solver_value = {{"beta", beta}, {"red", classes.red_count()}, {"blue", classes.blue_count()}};
                r.status = status_of(beta == w.claimed_beta && larger == w.claimed_beta);
            });
        }
    }
    return suite.take();
}

std::vector<VerificationReport> prop3(const VerifyOptions& options)
{
    Suite suite("prop3", options);
    const int max_n = suite.max_n(10);
    for (int m = 1; 2 * m <= max_n; ++m) {
        for (int n = m; m + n <= max_n; ++n) {
            if (m + n < 3)
                continue;
            suite.row(with_k(spec("kbip", {m, n}), 2), [&](VerificationReport& r) {
                const TokenGraph t = token_graph(complete_bipartite_graph(m, n), 2);
                const Bipartition classes = token_bipartition(t, blue_then_red(m, n));
                const auto threshold = formulas::s_threshold(m);
                const bool predicate = formulas::class_order_predicate(m, n);
                const bool counted = classes.blue_count() >= classes.red_count();
                r.formula_value = {{"s", n - m},
                                   {"min_integer_s", threshold.min_integer_s},
                                   {"blue_not_smaller", predicate}};
                r.solver_value = {{"red", classes.red_count()},
                                  {"blue", classes.blue_count()},
                                  {"blue_not_smaller", counted}};
                r.status = status_of(predicate == counted);
            });
        }
    }
    return suite.take();
}

// ----------------------------------------------------------------- bounds

std::vector<NamedGraph> small_graphs(int max_n)
{
    std::vector<NamedGraph> out;
    for (int n = 3; n <= max_n; ++n) {
        out.push_back({spec("path", {n}), path_graph(n)});
        out.push_back({spec("cycle", {n}), cycle_graph(n)});
        out.push_back({spec("complete", {n}), complete_graph(n)});
    }
    for (int n = 2; n + 1 <= max_n; ++n)
        out.push_back({spec("star", {n}), star_graph(n)});
    for (int m = 2; 2 * m <= max_n; ++m)
        for (int n = m; m + n <= max_n; ++n)
            out.push_back({spec("kbip", {m, n}), complete_bipartite_graph(m, n)});
    for (int m = 1; 2 * m <= max_n; ++m)
        for (int s = 0; s <= 1; ++s)
            if (2 * m + s >= 3 && 2 * m + s <= max_n)
                out.push_back({spec("match", {m, s}), matching_graph(m, s)});
    const double densities[] = {0.2, 0.35, 0.5, 0.65, 0.8};
    for (int i = 0; i < 50; ++i) {
        const int n = 3 + i % std::max(1, max_n - 2);
        const double p = densities[i % 5];
        const std::uint64_t seed = 1000 + static_cast<std::uint64_t>(i);
        out.push_back({"random:" + std::to_string(n) + ",p=" + std::to_string(p).substr(0, 4) + ",seed="
                           + std::to_string(seed),
                       random_graph(n, p, seed)});
    }
    return out;
}

bool vertex_transitive_family(const std::string& name)
{
    return name.rfind("cycle:", 0) == 0 || name.rfind("complete:", 0) == 0;
}

std::vector<VerificationReport> eq1(const VerifyOptions& options)
{
    Suite suite("eq1", options);
    const int max_n = suite.max_n(8);
    for (const auto& named : small_graphs(max_n)) {
        const Graph& g = named.graph;
        for (int k = 2; k <= g.order() - 1; ++k) {
            suite.row(with_k(named.name, k), [&](VerificationReport& r) {
                const auto oracle = suite.oracle();
                const BoundsPair bounds = recursive_bounds(g, k, oracle);
                const std::int64_t beta = token_beta(g, k, oracle);
                r.formula_value = {{"lower", bounds.lower}, {"upper", bounds.upper}};
                r.solver_value = beta;
                bool holds = bounds.lower <= beta && beta <= bounds.upper;
                if (vertex_transitive_family(named.name) && k <= g.order() - 2) {
                    const std::int64_t vt = vertex_transitive_bound(g, k, 0, oracle);
                    r.formula_value["vertex_transitive_upper"] = vt;
                    holds = holds && beta <= vt;
                }
                r.status = bound_status(holds);
                if (named.name == "star:3" && k == 2)
                    r.status = status_of(holds && bounds.lower == beta);
                if (named.name == "complete:4" && k == 2)
                    r.status = status_of(holds && bounds.upper == beta);
            });
        }
    }
    return suite.take();
}

std::int64_t floor_min(const Rational& a, const Rational& b) { return floor_of(a < b ? a : b); }

std::vector<VerificationReport> eq2(const VerifyOptions& options)
{
    Suite suite("eq2", options);
    const int max_n = suite.max_n(9);
    const BetaOracle path_formula = [](const Graph& h, int j) { return formulas::beta_balanced_family(h.order(), j); };
    for (int n = 4; n <= max_n; ++n) {
        for (int k = 2; k <= n - 2; ++k) {
            suite.row(with_k(spec("cycle", {n}), k), [&](VerificationReport& r) {
                const std::int64_t a = token_beta(path_graph(n - 1), k - 1, path_formula);
                const std::int64_t b = token_beta(path_graph(n - 3), k, path_formula);
                const std::int64_t c = token_beta(path_graph(n - 1), k, path_formula);
                const std::int64_t lower = a + b;
                const std::int64_t upper = floor_min(Rational(n * a, k), Rational(n * c, n - k));
                const std::int64_t beta = token_beta(cycle_graph(n), k, suite.oracle());
                r.formula_value = {{"lower", lower}, {"upper", upper}};
                r.solver_value = beta;
                r.status = bound_status(lower <= beta && beta <= upper);
            });
        }
    }
    return suite.take();
}

std::vector<VerificationReport> eq3(const VerifyOptions& options)
{
    Suite suite("eq3", options);
    const int max_n = suite.max_n(7);
    for (int n = 4; n <= max_n; ++n) {
        for (int k = 2; k <= std::min(3, n - 2); ++k) {
            suite.row(with_k(spec("complete", {n}), k), [&](VerificationReport& r) {
                const auto oracle = suite.oracle();
                const Graph smaller = complete_graph(n - 1);
                const std::int64_t a = token_beta(smaller, k - 1, oracle);
                const std::int64_t c = token_beta(smaller, k, oracle);
                const std::int64_t upper = floor_min(Rational(n * a, k), Rational(n * c, n - k));
                const std::int64_t beta = token_beta(complete_graph(n), k, oracle);
                r.formula_value = {{"lower", a}, {"upper", upper}};
                r.solver_value = beta;
                r.status = bound_status(a <= beta && beta <= upper);
            });
        }
    }
    return suite.take();
}

// --------------------------------------------------------- counterexamples

std::string describe_2x5(const Graph& g)
{
    std::string out = "B={1,2} R={3..7} edges=";
    bool first = true;
    for (const auto& e : g.edges()) {
        if (!first)
            out += ',';
        out += std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1);
        first = false;
    }
    return out;
}

std::vector<VerificationReport> fig34(const VerifyOptions& options)
{
    Suite suite("fig34", options);
    std::vector<formulas::CounterexampleHit> hits;
    suite.row("scan 2x5", [&](VerificationReport& r) {
        hits = formulas::counterexample_scan_2x5(true, suite.solver());
        const bool has_twelve = std::any_of(hits.begin(), hits.end(), [](const auto& h) { return h.beta == 12; });
        const Graph full = complete_bipartite_graph(2, 5);
        const bool full_absent = std::none_of(hits.begin(), hits.end(), [&](const auto& h) { return h.graph == full; });
        std::map<std::int64_t, int> histogram;
        for (const auto& h : hits)
            ++histogram[h.beta];
        json by_beta = json::object();
        for (auto [beta, count] : histogram)
            by_beta[std::to_string(beta)] = count;
        r.formula_value = {{"bound", 11}, {"expected_beta", 12}};
        r.solver_value = {{"hits", hits.size()}, {"by_beta", by_beta}};
        r.status = status_of(!hits.empty() && has_twelve && full_absent);
    });
    const Bipartition parts = blue_then_red(2, 5);
    for (const auto& hit : hits) {
        suite.row(describe_2x5(hit.graph), [&](VerificationReport& r) {
            const TokenGraph t = token_graph(hit.graph, 2);
            const Bipartition classes = token_bipartition(t, parts);
            const Side smaller = classes.red_count() <= classes.blue_count() ? Side::red : Side::blue;
            const auto deficient = hall_witness(t.graph(), classes, smaller);
            r.formula_value = hit.bound;
            r.solver_value = hit.beta;
            bool violated = false;
            if (deficient) {
                const auto nbrs = neighborhood_of(t.graph(), *deficient);
                auto set = json::array();
                auto image = json::array();
                for (Vertex v : *deficient)
                    set.push_back(subset_json(t.subset(v)));
                for (Vertex v : nbrs)
                    image.push_back(subset_json(t.subset(v)));
                r.witness = {{"side", smaller == Side::red ? "red" : "blue"}, {"S", set}, {"N(S)", image}};
                violated = nbrs.size() < deficient->size();
            }
            r.status = status_of(hit.beta > hit.bound && violated);
        });
    }
    return suite.take();
}

std::vector<VerificationReport> j73(const VerifyOptions& options)
{
    Suite suite("j73", options);
    suite.row(with_k(spec("complete", {7}), 3), [&](VerificationReport& r) {
        const TokenGraph t = token_graph(complete_graph(7), 3);
        IndependentSet best;
        const std::int64_t beta = solve_beta(t, suite, &best);
        r.formula_value = {{"value", 7}, {"refuted_value", 6}};
        r.solver_value = beta;
        r.witness = independent_set_witness(t, best);
        r.status = status_of(beta == 7);
    });
    return suite.take();
}

using SuiteFn = std::vector<VerificationReport> (*)(const VerifyOptions&);

std::vector<VerificationReport> lemma5(const VerifyOptions& options) { return witness_suite(options, true); }
std::vector<VerificationReport> lemma6(const VerifyOptions& options) { return witness_suite(options, false); }

struct SuiteEntry {
    std::string_view id;
    SuiteFn run;
};

constexpr SuiteEntry kSuites[] = {
    {"thm1", thm1}, {"thm2", thm2}, {"thm3", thm3}, {"lemma3", lemma3}, {"lemma5", lemma5}, {"lemma6", lemma6},
    {"cor3", cor3}, {"cor4", cor4}, {"star", star}, {"prop3", prop3}, {"eq1", eq1},       {"eq2", eq2},
    {"eq3", eq3},   {"fig1", fig1}, {"fig2", fig2}, {"fig34", fig34}, {"j73", j73},
};

} // namespace

const std::vector<std::string_view>& theorem_ids()
{
    static const std::vector<std::string_view> ids = [] {
        std::vector<std::string_view> out;
        for (const auto& e : kSuites)
            out.push_back(e.id);
        return out;
    }();
    return ids;
}

std::vector<VerificationReport> run_verification(std::string_view id, const VerifyOptions& options)
{
    for (const auto& e : kSuites)
        if (e.id == id)
            return e.run(options);
    throw InputError("unknown theorem id \"" + std::string(id) + "\"");
}

std::vector<VerificationReport> conjecture_reports(int max_order, int max_k, const VerifyOptions& options)
{
    Suite suite("conjecture", options);
    const auto report = formulas::conjecture_scan(max_order, max_k, suite.solver());
    for (const auto& row : report.rows) {
        suite.row(with_k(spec("kbip", {row.m, row.n}), row.k), [&](VerificationReport& r) {
            const TokenGraph t = token_graph(complete_bipartite_graph(row.m, row.n), row.k);
            r.formula_value = {{"value", std::max(row.red, row.blue)}, {"red", row.red}, {"blue", row.blue}};
            r.solver_value = row.beta;
            r.witness = independent_set_witness(t, row.witness);
            r.status = status_of(row.agrees());
        });
    }
    return suite.take();
}

std::vector<VerificationReport> oeis_reports(formulas::Sequence seq, int count, const VerifyOptions& options)
{
    Suite suite(std::string(formulas::sequence_name(seq)), options);
    const auto check = formulas::oeis_check(seq, count, suite.solver());
    for (const auto& term : check.terms) {
        std::string instance = "n=" + std::to_string(term.index);
        if (!term.instance.empty())
            instance += " " + term.instance;
        suite.row(instance, [&](VerificationReport& r) {
            r.formula_value = term.value;
            r.solver_value = term.solver_value ? json(*term.solver_value) : json();
            r.status = status_of(!term.solver_value || *term.solver_value == term.value);
        });
    }
    if (!check.matches)
        suite.row("cross-check", [&](VerificationReport& r) { r.status = Status::fail; });
    return suite.take();
}

} // namespace tokengraphs
