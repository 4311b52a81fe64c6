#pragma once

// Graph and coloring text formats.
//
// Edge list: one "u v" pair per line, '#' starts a comment, blank lines are
// ignored. Header comments "# name: X", "# provenance: Y" and "# n: N" are
// read back, so isolated vertices survive a round trip. Without "# n:", ids
// that are not already 0..m-1 are re-indexed densely in ascending order.
//
// DIMACS: "c" comments, one "p edge n m" line, then "e u v" with 1-based ids.
//
// Coloring: one "v c" pair per line, '#' comments, every vertex exactly once.

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "dfscolor/graph.hpp"

namespace dfscolor {

enum class GraphFormat { edgelist, dimacs };

struct GraphDocument {
    Graph graph;
    std::string name;
    std::string provenance;
    std::vector<std::string> warnings;
    /// Original id -> dense id; empty when no re-indexing happened.
    std::map<std::size_t, Vertex> reindex;
};

/// Throws ParseError on malformed lines and on self-loops.
GraphDocument parse_graph(std::istream &in, GraphFormat format);
GraphDocument parse_graph(const std::string &text, GraphFormat format);
/// Picks DIMACS for ".col"/".dimacs" paths, edge list otherwise. Throws Error
/// when the file cannot be opened.
GraphDocument load_graph(const std::string &path);

void emit_edgelist(std::ostream &out, const GraphDocument &doc);
std::string to_edgelist(const GraphDocument &doc);
void emit_dimacs(std::ostream &out, const GraphDocument &doc);

/// Throws ParseError on malformed lines, repeated or missing vertices and
/// vertices >= order.
Coloring parse_coloring(std::istream &in, std::size_t order);
void emit_coloring(std::ostream &out, const Coloring &c);

} // namespace dfscolor
