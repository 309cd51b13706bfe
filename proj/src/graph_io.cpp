#include "tokengraphs/graph_io.hpp"

#include "tokengraphs/error.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace tokengraphs {

namespace {

bool next_data_line(std::istream& in, std::string& line)
{
    while (std::getline(in, line)) {
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#')
            continue;
        return true;
    }
    return false;
}

} // namespace

Graph read_edge_list(std::istream& in)
{
    std::string line;
    if (!next_data_line(in, line))
        throw InputError("edge list: missing header line");
    std::istringstream header(line);
    long long n = -1;
    long long m = -1;
    if (!(header >> n >> m) || n < 0 || m < 0)
        throw InputError("edge list: header must be \"n m\" with non-negative integers");

    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(in, line))
            throw InputError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        std::istringstream row(line);
        long long u = 0;
        long long v = 0;
        if (!(row >> u >> v))
            throw InputError("edge list: malformed edge line \"" + line + "\"");
        if (u < 1 || v < 1 || u > n || v > n)
            throw InputError("edge list: endpoint out of range in \"" + line + "\"");
        pairs.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    }
    return make_graph(static_cast<int>(n), pairs);
}

Graph read_edge_list_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g)
{
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges())
        out << e.u + 1 << ' ' << e.v + 1 << '\n';
}

void write_dot(std::ostream& out, const Graph& g, const VertexLabeler& label, const std::string& name)
{
    out << "graph " << name << " {\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        out << "  " << v;
        out << " [label=\"" << (label ? label(v) : std::to_string(v + 1)) << "\"]";
        out << ";\n";
    }
    for (const auto& e : g.edges())
        out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
}

} // namespace tokengraphs
