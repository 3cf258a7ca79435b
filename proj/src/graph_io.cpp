#include "acx/graph_io.hpp"

#include <filesystem>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "acx/errors.hpp"

namespace acx {

namespace {

std::string at_line(const std::string& what, int line) {
    return what + " at line " + std::to_string(line);
}

// Extracts a nonnegative int, rejecting junk and overflow.
int parse_vertex(std::istringstream& in, int line) {
    long long x = 0;
    if (!(in >> x)) throw ParseError(at_line("expected a vertex id", line));
    if (x < 0) throw ParseError(at_line("vertex ids must be nonnegative", line));
    if (x > std::numeric_limits<int>::max()) throw ParseError(at_line("vertex id too large", line));
    return static_cast<int>(x);
}

void expect_line_end(std::istringstream& in, int line) {
    std::string rest;
    if (in >> rest) throw ParseError(at_line("unexpected trailing token '" + rest + "'", line));
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> pairs;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream fields(raw);
        std::string peek;
        if (!(fields >> peek)) continue;  // blank or comment-only line
        fields.clear();
        fields.seekg(0);
        const int u = parse_vertex(fields, line);
        const int v = parse_vertex(fields, line);
        expect_line_end(fields, line);
        pairs.emplace_back(u, v);
    }
    return Graph::from_pairs(pairs);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph read_dimacs(std::istream& in) {
    int vertex_count = -1;
    long long declared_edges = 0;
    std::vector<std::pair<int, int>> pairs;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::istringstream fields(raw);
        std::string tag;
        if (!(fields >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            if (vertex_count >= 0) throw ParseError(at_line("duplicate problem line", line));
            std::string kind;
            long long l = 0;
            if (!(fields >> kind >> l >> declared_edges) || kind != "edge") {
                throw ParseError(at_line("malformed problem line, expected 'p edge <l> <m>'", line));
            }
            if (l < 0 || l > std::numeric_limits<int>::max() || declared_edges < 0) {
                throw ParseError(at_line("problem line counts out of range", line));
            }
            vertex_count = static_cast<int>(l);
        } else if (tag == "e") {
            if (vertex_count < 0) throw ParseError(at_line("edge before the problem line", line));
            const int u = parse_vertex(fields, line);
            const int v = parse_vertex(fields, line);
            expect_line_end(fields, line);
            if (u < 1 || u > vertex_count || v < 1 || v > vertex_count) {
                throw ParseError(at_line("endpoint outside 1..vertex count", line));
            }
            pairs.emplace_back(u - 1, v - 1);
        } else {
            throw ParseError(at_line("unknown line tag '" + tag + "'", line));
        }
    }
    if (vertex_count < 0) throw ParseError("missing problem line");
    if (static_cast<long long>(pairs.size()) != declared_edges) {
        throw ParseError("edge count " + std::to_string(pairs.size()) +
                         " does not match the declared " + std::to_string(declared_edges));
    }
    return Graph::build(vertex_count, pairs);
}

void write_dimacs(std::ostream& out, const Graph& g) {
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

namespace {

bool is_dimacs_path(const std::string& path) {
    const auto ext = std::filesystem::path(path).extension().string();
    return ext == ".col" || ext == ".dimacs";
}

}  // namespace

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file '" + path + "'");
    return is_dimacs_path(path) ? read_dimacs(in) : read_edge_list(in);
}

void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open graph file '" + path + "' for writing");
    if (is_dimacs_path(path)) {
        write_dimacs(out, g);
    } else {
        write_edge_list(out, g);
    }
}

}  // namespace acx
