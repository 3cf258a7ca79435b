#pragma once

#include <iosfwd>
#include <string>

#include "acx/graph.hpp"

namespace acx {

// Plain edge list: one "u v" pair of nonnegative integers per line, blank
// lines allowed, '#' starts a comment.  Vertex ids are renumbered densely
// (preserving numeric order), so isolated vertices cannot be represented;
// a graph already numbered 0..l-1 round-trips unchanged.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// DIMACS coloring format: one "p edge <vertices> <edges>" header, then one
// "e u v" line per edge with 1-based endpoints; 'c' starts a comment.
// Keeps isolated vertices.  The edge count must match the header.
Graph read_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const Graph& g);

// Dispatch on the file extension: ".col" and ".dimacs" use the DIMACS
// format, everything else is read as a plain edge list.  Throws ParseError
// when the file cannot be opened.
Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);

}  // namespace acx
