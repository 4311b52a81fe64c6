#pragma once

// Colorings driven by cycle lengths modulo k. Each procedure either returns a
// proper coloring within its bound or throws HypothesisViolation carrying
// cycles of the input graph that refute the hypothesis.

#include <cstddef>
#include <vector>

#include "dfscolor/compose.hpp"
#include "dfscolor/dfs.hpp"
#include "dfscolor/graph.hpp"

namespace dfscolor {

/// classes[i] = vertices whose DFS depth is i mod k (ascending ids), over the
/// DFS forest of the graph.
struct ResidueClasses {
    std::size_t k = 0;
    std::vector<std::vector<Vertex>> classes;
};

ResidueClasses residue_classes(const std::vector<DfsTree> &forest, std::size_t order, std::size_t k);

/// At most r distinct cycle lengths = 1 mod k: First Fit inside each class,
/// shallowest first (ties by id), with a separate palette of r + 1 colors per
/// class. Bound (r + 1) k. Witness on failure: r + 1 cycles of distinct
/// lengths = 1 mod k.
ComposedColoring color_residue1(const Graph &g, std::size_t k, std::size_t r);

/// At most s distinct cycle lengths = 2 mod k: First Fit along root-to-leaf
/// paths. Bound s k + k + 1. Witness on failure: s + 1 cycles of distinct
/// lengths = 2 mod k.
ComposedColoring color_residue2(const Graph &g, std::size_t k, std::size_t s);

/// No cycle length = 3 mod k: every class induces a forest, 2-colored by depth
/// parity from its smallest vertex, one palette pair per class. Bound 2k.
/// Witness on failure: one cycle of length = 3 mod k.
ComposedColoring color_residue3(const Graph &g, std::size_t k);

} // namespace dfscolor
