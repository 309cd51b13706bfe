#include "tokengraphs/token_io.hpp"

#include "tokengraphs/graph_io.hpp"

#include <ostream>

namespace tokengraphs {

nlohmann::json subset_json(SubsetMask s)
{
    auto out = nlohmann::json::array();
    for (int e : members(s))
        out.push_back(e + 1);
    return out;
}

nlohmann::json to_json(const TokenGraph& t)
{
    nlohmann::json doc;
    doc["n"] = t.base().order();
    doc["k"] = t.k();
    auto vertices = nlohmann::json::array();
    for (Vertex v = 0; v < t.graph().order(); ++v)
        vertices.push_back(subset_json(t.subset(v)));
    doc["vertices"] = std::move(vertices);
    auto edges = nlohmann::json::array();
    for (const auto& e : t.graph().edges())
        edges.push_back({e.u, e.v});
    doc["edges"] = std::move(edges);
    return doc;
}

void write_token_dot(std::ostream& out, const TokenGraph& t)
{
    write_dot(out, t.graph(), [&](Vertex v) { return t.label(v); },
              "F" + std::to_string(t.k()));
}

} // namespace tokengraphs
