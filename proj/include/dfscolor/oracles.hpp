#pragma once

// Exact, exponential-time graph parameters. Every oracle that can blow up is
// gated by an explicit vertex budget and throws BudgetExceeded past it; none
// of them ever falls back to an approximation.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "dfscolor/graph.hpp"

namespace dfscolor {

inline constexpr std::size_t kDefaultEnumerationBudget = 20;
inline constexpr std::size_t kDefaultCliqueBudget = 30;
/// Subset dynamic programs keep 2^n words; past this the table would not fit.
inline constexpr std::size_t kSubsetTableCap = 26;

struct CycleStats {
    std::optional<std::size_t> girth;
    std::set<std::size_t> spectrum;
    std::set<std::size_t> odd_lengths;
    std::optional<std::size_t> odd_circumference;
    /// Number of edges on a longest path.
    std::size_t longest_path = 0;

    std::optional<std::size_t> circumference() const {
        if (spectrum.empty()) {
            return std::nullopt;
        }
        return *spectrum.rbegin();
    }
};

CycleStats cycle_stats(const Graph &g, std::size_t limit = kDefaultEnumerationBudget);

/// Only the set of cycle lengths.
std::set<std::size_t> cycle_spectrum(const Graph &g, std::size_t limit = kDefaultEnumerationBudget);

std::size_t longest_path_edges(const Graph &g, std::size_t limit = kDefaultEnumerationBudget);

/// Exact odd circumference; throws NoOddCycle on bipartite input.
std::size_t odd_circumference(const Graph &g, std::size_t limit = kDefaultEnumerationBudget);

struct ChromaticResult {
    std::size_t chromatic_number = 0;
    Coloring witness;
};

ChromaticResult chromatic_number_exact(const Graph &g, std::size_t limit = kDefaultEnumerationBudget);

/// Proper coloring with at most k colors, if one exists. Same budget rules.
std::optional<Coloring> k_coloring(const Graph &g, std::size_t k, std::size_t limit = kDefaultEnumerationBudget);

struct CliqueResult {
    std::size_t clique_number = 0;
    std::vector<Vertex> witness;
};

CliqueResult clique_number_exact(const Graph &g, std::size_t limit = kDefaultCliqueBudget);

enum class Forbidden { triangle, c5 };

struct SubgraphCheck {
    bool present = false;
    /// Cycle vertex sequence when present.
    std::vector<Vertex> witness;
};

/// Triangle detection is polynomial and never budget-gated; C5 detection is
/// gated by `limit`.
SubgraphCheck forbidden_subgraph_check(const Graph &g, Forbidden which, std::size_t limit = kDefaultCliqueBudget);

inline bool is_triangle_free(const Graph &g) { return !forbidden_subgraph_check(g, Forbidden::triangle).present; }

struct Block {
    /// Sorted ascending.
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    bool is_bridge() const { return edges.size() == 1; }
    bool is_isolated_vertex() const { return edges.empty(); }
};

struct BlockDecomposition {
    /// Every isolated vertex forms its own edgeless block.
    std::vector<Block> blocks;
    /// Sorted ascending.
    std::vector<Vertex> cut_vertices;
};

BlockDecomposition blocks(const Graph &g);

/// residue -> distinct cycle lengths with that residue modulo k. Every residue
/// 0..k-1 has an entry, possibly empty.
std::map<std::size_t, std::set<std::size_t>> residue_cycle_counts(const Graph &g, std::size_t k,
                                                                  std::size_t limit = kDefaultEnumerationBudget);

} // namespace dfscolor
