#pragma once

// Graph families. Random families are deterministic under (parameters, seed)
// on every platform: they draw raw 64-bit words from std::mt19937_64 and
// convert them to doubles by hand instead of using the library distributions.

#include <cstdint>
#include <string>

#include "dfscolor/graph.hpp"
#include "dfscolor/io.hpp"

namespace dfscolor {

Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// Vertex 0 joined to n - 1 leaves.
Graph star_graph(std::size_t n);
/// Perfect binary tree of the given depth, heap numbering (children 2i+1, 2i+2).
Graph binary_tree(std::size_t depth);
Graph petersen();
/// Copies u_i of each v_i joined to N(v_i), plus a hub joined to every u_i.
Graph mycielskian(const Graph &g);
Graph groetzsch();

/// G(n, p): each pair independently, in lexicographic order.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);
/// G(n, p) sample, then every sampled edge that closes a triangle with the
/// edges kept before it (lexicographic order) is deleted.
Graph random_triangle_free(std::size_t n, double p, std::uint64_t seed);
/// As random_triangle_free, also deleting edges that close a 4-cycle.
Graph random_girth5(std::size_t n, double p, std::uint64_t seed);

/// Parses a family expression such as "cycle(9)", "petersen",
/// "mycielskian(complete(2))" or "random_triangle_free(12, 0.3, 7)".
/// Throws ParameterError on unknown families or bad arguments.
GraphDocument generate(const std::string &expression);

} // namespace dfscolor
