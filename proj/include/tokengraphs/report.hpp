#pragma once

#include "tokengraphs/independence.hpp"
#include "tokengraphs/matching.hpp"
#include "tokengraphs/token_graph.hpp"

#include "json.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace tokengraphs {

enum class Status { pass, fail, bound_holds, budget_exceeded };

std::string_view status_name(Status s);

/// One checked instance. `pass` means the formula value equals the solver
/// value; `bound_holds` means the solver value respects the stated inequality.
struct VerificationReport {
    std::string theorem;
    std::string instance;
    nlohmann::json formula_value;
    nlohmann::json solver_value;
    nlohmann::json witness;
    Status status = Status::fail;
    std::optional<double> wall_seconds; // only serialized when present
};

nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(std::span<const VerificationReport> rows);

/// theorem,instance,formula_value,solver_value,status[,wall_seconds]
void write_csv(std::ostream& out, std::span<const VerificationReport> rows);

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInput = 3;

/// kExitFail if any row failed, else kExitBudget if any ran out of budget, else kExitOk.
int exit_code_for(std::span<const VerificationReport> rows);

/// Witness encodings: rank pairs plus the 1-based subsets they stand for.
nlohmann::json matching_witness(const TokenGraph& t, const Matching& m);
nlohmann::json independent_set_witness(const TokenGraph& t, const IndependentSet& s);

} // namespace tokengraphs
