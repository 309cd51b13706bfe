#include "tokengraphs/report.hpp"

#include "tokengraphs/token_io.hpp"

#include <ostream>

namespace tokengraphs {

std::string_view status_name(Status s)
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::bound_holds: return "bound-holds";
    case Status::budget_exceeded: return "budget-exceeded";
    }
    return "?";
}

nlohmann::json to_json(const VerificationReport& r)
{
    nlohmann::json j;
    j["theorem"] = r.theorem;
    j["instance"] = r.instance;
    j["formula_value"] = r.formula_value;
    j["solver_value"] = r.solver_value;
    j["witness"] = r.witness;
    j["status"] = status_name(r.status);
    if (r.wall_seconds)
        j["wall_seconds"] = *r.wall_seconds;
    return j;
}

nlohmann::json to_json(std::span<const VerificationReport> rows)
{
    auto out = nlohmann::json::array();
    for (const auto& r : rows)
        out.push_back(to_json(r));
    return out;
}

namespace {

std::string csv_field(const nlohmann::json& value)
{
    std::string text = value.is_string() ? value.get<std::string>() : value.dump();
    if (text.find_first_of(",\"\n") == std::string::npos)
        return text;
    std::string quoted = "\"";
    for (char ch : text) {
        if (ch == '"')
            quoted += '"';
        quoted += ch;
    }
    return quoted + '"';
}

} // namespace

void write_csv(std::ostream& out, std::span<const VerificationReport> rows)
{
    bool timed = false;
    for (const auto& r : rows)
        timed = timed || r.wall_seconds.has_value();
    out << "theorem,instance,formula_value,solver_value,status" << (timed ? ",wall_seconds" : "") << '\n';
    for (const auto& r : rows) {
        out << csv_field(r.theorem) << ',' << csv_field(r.instance) << ',' << csv_field(r.formula_value) << ','
            << csv_field(r.solver_value) << ',' << status_name(r.status);
        if (timed)
            out << ',' << (r.wall_seconds ? std::to_string(*r.wall_seconds) : "");
        out << '\n';
    }
}

int exit_code_for(std::span<const VerificationReport> rows)
{
    bool budget = false;
    for (const auto& r : rows) {
        if (r.status == Status::fail)
            return kExitFail;
        budget = budget || r.status == Status::budget_exceeded;
    }
    return budget ? kExitBudget : kExitOk;
}

nlohmann::json matching_witness(const TokenGraph& t, const Matching& m)
{
    nlohmann::json w;
    w["size"] = m.size();
    auto ranks = nlohmann::json::array();
    auto subsets = nlohmann::json::array();
    for (const auto& e : m.edges) {
        ranks.push_back({e.u, e.v});
        subsets.push_back({subset_json(t.subset(e.u)), subset_json(t.subset(e.v))});
    }
    w["rank_pairs"] = std::move(ranks);
    w["subset_pairs"] = std::move(subsets);
    return w;
}

nlohmann::json independent_set_witness(const TokenGraph& t, const IndependentSet& s)
{
    nlohmann::json w;
    w["size"] = s.size();
    auto subsets = nlohmann::json::array();
    for (Vertex v : s.vertices)
        subsets.push_back(subset_json(t.subset(v)));
    w["subsets"] = std::move(subsets);
    return w;
}

} // namespace tokengraphs
