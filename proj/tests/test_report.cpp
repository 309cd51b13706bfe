#include "doctest.h"

#include "tokengraphs/error.hpp"
#include "tokengraphs/verify.hpp"

#include <sstream>

using namespace tokengraphs;

TEST_CASE("report serialization")
{
    VerificationReport r;
    r.theorem = "thm2";
    r.instance = "kbip:3,3 k=2";
    r.formula_value = 9;
    r.solver_value = 9;
    r.witness = {{"size", 9}};
    r.status = Status::pass;

    const auto j = to_json(r);
    CHECK(j["status"] == "pass");
    CHECK_FALSE(j.contains("wall_seconds"));
    r.wall_seconds = 0.5;
    CHECK(to_json(r)["wall_seconds"] == 0.5);

    std::vector<VerificationReport> rows{r};
    rows[0].wall_seconds.reset();
    std::ostringstream csv;
    write_csv(csv, rows);
    CHECK(csv.str() == "theorem,instance,formula_value,solver_value,status\nthm2,\"kbip:3,3 k=2\",9,9,pass\n");

    CHECK(status_name(Status::bound_holds) == "bound-holds");
    CHECK(status_name(Status::budget_exceeded) == "budget-exceeded");
}

TEST_CASE("exit codes")
{
    std::vector<VerificationReport> rows(3);
    rows[0].status = Status::pass;
    rows[1].status = Status::bound_holds;
    rows[2].status = Status::pass;
    CHECK(exit_code_for(rows) == kExitOk);
    rows[2].status = Status::budget_exceeded;
    CHECK(exit_code_for(rows) == kExitBudget);
    rows[1].status = Status::fail;
    CHECK(exit_code_for(rows) == kExitFail);
}

TEST_CASE("every suite passes")
{
    for (auto id : theorem_ids()) {
        CAPTURE(id);
        const auto rows = run_verification(id);
        CHECK_FALSE(rows.empty());
        for (const auto& row : rows) {
            CAPTURE(row.instance);
            CHECK((row.status == Status::pass || row.status == Status::bound_holds));
            CHECK(row.theorem == id);
        }
    }
    CHECK(theorem_ids().size() == 17);
    CHECK_THROWS_AS(run_verification("thm9"), InputError);
}

TEST_CASE("reports are reproducible")
{
    for (auto id : {"thm1", "eq1", "fig34"}) {
        const auto a = to_json(run_verification(id)).dump();
        const auto b = to_json(run_verification(id)).dump();
        CHECK(a == b);
    }
}

TEST_CASE("suite options")
{
    VerifyOptions small;
    small.max_n = 5;
    const auto rows = run_verification("thm3", small);
    CHECK(rows.size() == 3);
    CHECK(rows.back().instance == "cycle:5 k=2");

    VerifyOptions timed;
    timed.timings = true;
    int seen = 0;
    timed.on_row = [&](const VerificationReport&) { ++seen; };
    const auto fig = run_verification("fig1", timed);
    CHECK(seen == static_cast<int>(fig.size()));
    CHECK(fig.front().wall_seconds.has_value());

    VerifyOptions starved;
    starved.budget_seconds = 1e-9;
    const auto over = run_verification("j73", starved);
    REQUIRE(over.size() == 1);
    CHECK(over[0].status == Status::budget_exceeded);
    CHECK(exit_code_for(over) == kExitBudget);
}

TEST_CASE("scanner reports")
{
    const auto conj = conjecture_reports(7, 3);
    CHECK(exit_code_for(conj) == kExitOk);
    CHECK(conj.front().instance == "kbip:1,3 k=2");

    const auto seq = oeis_reports(formulas::Sequence::A189889, 5);
    REQUIRE(seq.size() == 5);
    CHECK(seq[4].formula_value == 10);
    CHECK(seq[4].solver_value == 10);
}
