#pragma once

#include "tokengraphs/formulas.hpp"
#include "tokengraphs/report.hpp"

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace tokengraphs {

struct VerifyOptions {
    std::optional<int> max_n;             // largest base order; suite default when unset
    std::optional<double> budget_seconds; // per instance
    bool timings = false;                 // fill wall_seconds
    std::function<void(const VerificationReport&)> on_row; // progress hook
};

/// thm1 thm2 thm3 lemma3 lemma5 lemma6 cor3 cor4 star prop3 eq1 eq2 eq3 fig1 fig2 fig34 j73
const std::vector<std::string_view>& theorem_ids();

/// Runs one suite and returns a row per checked instance, in a fixed order.
/// A budget overrun marks its row budget-exceeded and the suite moves on.
/// Unknown ids raise InputError.
std::vector<VerificationReport> run_verification(std::string_view id, const VerifyOptions& options = {});

/// One row per (m, n, k) of the complete bipartite scan.
std::vector<VerificationReport> conjecture_reports(int max_order, int max_k, const VerifyOptions& options = {});

/// One row per sequence term; rows without a solver value are bound to the
/// formula alone and pass trivially.
std::vector<VerificationReport> oeis_reports(formulas::Sequence seq, int count, const VerifyOptions& options = {});

} // namespace tokengraphs
