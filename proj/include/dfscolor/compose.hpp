#pragma once

// Whole-graph colorings assembled from a DFS decomposition and an online
// algorithm (or a path colorer). Disconnected graphs are handled component by
// component with palettes shared across components.

#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "dfscolor/dfs.hpp"
#include "dfscolor/graph.hpp"
#include "dfscolor/online.hpp"
#include "dfscolor/oracles.hpp"

namespace dfscolor {

/// A concrete numeric bound, e.g. formula "(n+omega)/2" at instance
/// "n=7 omega=3" with value 5.
struct BoundInstance {
    std::string formula;
    std::string instance;
    double value = std::numeric_limits<double>::infinity();

    bool admits(std::size_t colors) const { return static_cast<double>(colors) <= value + 1e-9; }
};

/// Worst-case number of colors an online algorithm needs on n-vertex
/// presentations from some graph class.
struct ClassBound {
    std::string formula;
    std::function<double(std::size_t)> at;

    BoundInstance instance(std::size_t n, const std::string &label = "n") const;
};

ClassBound modulo_level_bound(std::size_t ell);
ClassBound quad_group_bound(std::size_t ell);
/// First Fit on graphs with clique number <= omega.
ClassBound first_fit_clique_bound(std::size_t omega);
/// First Fit on graphs of girth >= 5.
ClassBound first_fit_girth5_bound();
/// n colors: holds for every algorithm that never wastes colors.
ClassBound trivial_bound();

inline constexpr std::size_t kNotApplicable = static_cast<std::size_t>(-1);

/// Which part of a decomposition colored each vertex.
struct VertexTrace {
    std::size_t block = kNotApplicable;
    std::size_t band = kNotApplicable;
    std::size_t path = kNotApplicable;
    std::size_t level = kNotApplicable;

    friend bool operator==(const VertexTrace &, const VertexTrace &) = default;
};

struct ComposedColoring {
    Coloring coloring;
    /// The bound this composition guarantees, with honest vertex counts.
    BoundInstance bound;
    /// The bound as usually quoted (shorter vertex count), for comparison.
    BoundInstance quoted_bound;
    std::vector<VertexTrace> trace;
    /// Most colors the online algorithm (or path colorer) used on one unit.
    std::size_t max_colors_per_unit = 0;
};

/// Feeds every root-to-leaf path of a DFS tree to a fresh session in order of
/// increasing depth. Shared prefixes must come back identically colored;
/// otherwise the algorithm is not deterministic and ContractViolation is
/// thrown. Bound: f(h + 1) for tree height h.
ComposedColoring compose_paths(const Graph &g, const SessionFactory &algo, const ClassBound &f);

/// Per block: DFS bands of ell + 1 levels, palettes cycling through three
/// copies, each maximal subtree piece inside a band colored as in
/// compose_paths. Bipartite blocks are 2-colored directly. Blocks are merged
/// through cut vertices by permuting the new block's colors. Bound:
/// 3 f(ell + 1). Throws NoOddCycle on bipartite input.
ComposedColoring compose_bands(const Graph &g, std::size_t ell, const SessionFactory &algo, const ClassBound &f);

/// Colors the subgraph induced by one path, with vertices given in path
/// order (local id = position).
class PathColorer {
public:
    virtual ~PathColorer() = default;
    virtual std::size_t declared_colors() const = 0;
    virtual std::vector<Color> color(const Graph &path_graph) const = 0;
    virtual std::string name() const = 0;
};

/// Optimal coloring of each path-induced subgraph by exhaustive search.
class ExactPathColorer final : public PathColorer {
public:
    explicit ExactPathColorer(std::size_t k, std::size_t limit = kDefaultEnumerationBudget) : k_(k), limit_(limit) {}
    std::size_t declared_colors() const override { return k_; }
    std::vector<Color> color(const Graph &path_graph) const override;
    std::string name() const override { return "exact"; }

private:
    std::size_t k_;
    std::size_t limit_;
};

class FirstFitPathColorer final : public PathColorer {
public:
    explicit FirstFitPathColorer(std::size_t k) : k_(k) {}
    std::size_t declared_colors() const override { return k_; }
    std::vector<Color> color(const Graph &path_graph) const override;
    std::string name() const override { return "first-fit"; }

private:
    std::size_t k_;
};

/// Largest chromatic number of a subgraph induced by a root-to-leaf path of
/// the DFS forest; the natural k to declare for ExactPathColorer.
std::size_t max_root_path_chromatic(const Graph &g, std::size_t limit = kDefaultEnumerationBudget);

/// Leaf-heavy spine decomposition; each spine colored by `colorer`; one
/// palette of k colors per recursion level. Throws ContractViolation when the
/// colorer exceeds its declared k or returns an improper coloring. Bound:
/// k * (recursion levels).
ComposedColoring compose_recursive(const Graph &g, const PathColorer &colorer);

/// Vertices take their level's color from parity_greedy_levels. Bound:
/// 2L + 2.
ComposedColoring compose_level_parity(const Graph &g, std::size_t odd_length_count);

} // namespace dfscolor
