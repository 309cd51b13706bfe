#include "tokengraphs/error.hpp"
#include "tokengraphs/graph_spec.hpp"
#include "tokengraphs/matching.hpp"
#include "tokengraphs/report.hpp"
#include "tokengraphs/token_io.hpp"
#include "tokengraphs/verify.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace tokengraphs;

namespace {

struct Globals {
    std::optional<double> budget;
    bool csv = false;
    bool timings = false;
    bool quiet = false;
    std::string out_path;
};

std::optional<double> budget_from_env()
{
    const char* text = std::getenv("TOKENGRAPHS_BUDGET");
    if (!text || !*text)
        return std::nullopt;
    char* end = nullptr;
    const double value = std::strtod(text, &end);
    if (*end != '\0' || value <= 0)
        throw InputError("TOKENGRAPHS_BUDGET must be a positive number of seconds");
    return value;
}

VerifyOptions verify_options(const Globals& g)
{
    VerifyOptions o;
    o.budget_seconds = g.budget;
    o.timings = g.timings;
    if (!g.quiet) {
        o.on_row = [](const VerificationReport& r) {
            std::cerr << "[" << r.theorem << "] " << r.instance << ": " << status_name(r.status) << '\n';
        };
    }
    return o;
}

void with_output(const Globals& g, const std::function<void(std::ostream&)>& write)
{
    if (g.out_path.empty()) {
        write(std::cout);
        return;
    }
    std::ofstream file(g.out_path);
    if (!file)
        throw InputError("cannot write " + g.out_path);
    write(file);
}

int emit(const Globals& g, const std::vector<VerificationReport>& rows)
{
    with_output(g, [&](std::ostream& out) {
        if (g.csv)
            write_csv(out, rows);
        else
            out << to_json(rows).dump(2) << '\n';
    });
    return exit_code_for(rows);
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& write)
{
    std::ofstream file(path);
    if (!file)
        throw InputError("cannot write " + path);
    write(file);
}

SolverOptions solver_options(const Globals& g)
{
    return g.budget ? SolverOptions::per_call(*g.budget) : SolverOptions{};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Token graphs: construction, exact matching and independence numbers, verification suites"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals globals;
    app.add_option("--budget", globals.budget, "Solver seconds per instance (default: $TOKENGRAPHS_BUDGET)")
        ->check(CLI::PositiveNumber);
    app.add_flag("--csv", globals.csv, "CSV report instead of JSON");
    app.add_flag("--timings", globals.timings, "Add wall_seconds to report rows");
    app.add_flag("-q,--quiet", globals.quiet, "No progress lines on stderr");
    app.add_option("-o,--out", globals.out_path, "Write the report here instead of stdout");

    std::string graph_spec;
    int k = 0;

    auto* build = app.add_subcommand("build", "Construct F_k(G) and export it");
    std::string dot_path;
    std::string json_path;
    build->add_option("graph", graph_spec, "path:N | cycle:N | complete:N | kbip:M,N | star:N | match:M,S | file:PATH")
        ->required();
    build->add_option("-k", k, "Token count")->required();
    build->add_option("--dot", dot_path, "Graphviz output");
    build->add_option("--json", json_path, "JSON output");

    auto* nu = app.add_subcommand("nu", "Matching number of F_k(G) with a maximum matching");
    nu->add_option("graph", graph_spec)->required();
    nu->add_option("-k", k)->required();

    auto* beta = app.add_subcommand("beta", "Independence number of F_k(G) with a maximum independent set");
    beta->add_option("graph", graph_spec)->required();
    beta->add_option("-k", k)->required();

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string theorem;
    std::optional<int> max_n;
    verify->add_option("id", theorem, "Suite id, or 'all'")->required();
    verify->add_option("--max-n", max_n, "Largest base order")->check(CLI::PositiveNumber);

    auto* scan = app.add_subcommand("scan", "Run a scanner");
    scan->require_subcommand(1);
    scan->fallthrough();
    auto* conjecture = scan->add_subcommand("conjecture", "Complete bipartite scan against the larger colour class");
    int max_order = 9;
    int max_k = 4;
    conjecture->add_option("--max-order", max_order)->check(CLI::PositiveNumber);
    conjecture->add_option("--max-k", max_k)->check(CLI::PositiveNumber);
    auto* fig3 = scan->add_subcommand("fig3", "All bipartite graphs on parts 2 and 5 with beta(F_2) above 11");

    auto* oeis = app.add_subcommand("oeis", "Formula terms with solver cross-checks");
    std::string sequence;
    int count = 10;
    oeis->add_option("sequence", sequence, "A091044 | A000217 | A002620 | A189889")->required();
    oeis->add_option("--count", count)->check(CLI::Range(0, 20));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (!globals.budget)
            globals.budget = budget_from_env();

        if (*build) {
            const TokenGraph t = token_graph(parse_graph_spec(graph_spec), k);
            if (!dot_path.empty())
                write_file(dot_path, [&](std::ostream& out) { write_token_dot(out, t); });
            if (!json_path.empty())
                write_file(json_path, [&](std::ostream& out) { out << to_json(t).dump(2) << '\n'; });
            with_output(globals, [&](std::ostream& out) {
                nlohmann::json summary{{"graph", graph_spec},
                                       {"k", k},
                                       {"vertices", t.graph().order()},
                                       {"edges", t.graph().edge_count()}};
                out << summary.dump() << '\n';
            });
            return kExitOk;
        }
        if (*nu) {
            const TokenGraph t = token_graph(parse_graph_spec(graph_spec), k);
            const Matching m = max_matching(t.graph());
            with_output(globals, [&](std::ostream& out) {
                nlohmann::json j{{"graph", graph_spec},
                                 {"k", k},
                                 {"nu", m.size()},
                                 {"perfect", is_perfect(m, t.graph())},
                                 {"witness", matching_witness(t, m)}};
                out << j.dump(2) << '\n';
            });
            return kExitOk;
        }
        if (*beta) {
            const TokenGraph t = token_graph(parse_graph_spec(graph_spec), k);
            const IndependentSet s = max_independent_set(t.graph(), solver_options(globals));
            with_output(globals, [&](std::ostream& out) {
                nlohmann::json j{{"graph", graph_spec},
                                 {"k", k},
                                 {"beta", s.size()},
                                 {"witness", independent_set_witness(t, s)}};
                out << j.dump(2) << '\n';
            });
            return kExitOk;
        }
        if (*verify) {
            VerifyOptions options = verify_options(globals);
            options.max_n = max_n;
            std::vector<VerificationReport> rows;
            if (theorem == "all") {
                for (auto id : theorem_ids()) {
                    auto part = run_verification(id, options);
                    rows.insert(rows.end(), part.begin(), part.end());
                }
            } else {
                rows = run_verification(theorem, options);
            }
            return emit(globals, rows);
        }
        if (*conjecture)
            return emit(globals, conjecture_reports(max_order, max_k, verify_options(globals)));
        if (*fig3)
            return emit(globals, run_verification("fig34", verify_options(globals)));
        if (*oeis) {
            const auto seq = formulas::parse_sequence(sequence);
            if (!seq)
                throw InputError("unknown sequence \"" + sequence + "\"");
            return emit(globals, oeis_reports(*seq, count, verify_options(globals)));
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitOk;
}
