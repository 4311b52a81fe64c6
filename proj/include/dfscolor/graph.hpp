#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dfscolor/error.hpp"

namespace dfscolor {

/// Unordered vertex pair, stored with first < second.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge &, const Edge &) = default;
    friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    Graph() = default;

    /// Throws StructuralError on self-loops or endpoints >= n. Duplicate
    /// edges are collapsed.
    Graph(std::size_t n, std::span<const Edge> edges);
    Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

    std::size_t order() const noexcept { return adj_.size(); }
    std::size_t size() const noexcept { return edges_.size(); }

    /// Sorted ascending.
    const std::vector<Vertex> &neighbors(Vertex v) const { return adj_.at(v); }
    std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
    bool adjacent(Vertex a, Vertex b) const;

    /// Sorted lexicographically.
    const std::vector<Edge> &edges() const noexcept { return edges_; }

    std::size_t max_degree() const;

    friend bool operator==(const Graph &a, const Graph &b) { return a.edges_ == b.edges_ && a.order() == b.order(); }

private:
    std::vector<std::vector<Vertex>> adj_;
    std::vector<Edge> edges_;
};

/// Subgraph induced by a vertex subset, relabelled 0..k-1 in the order given.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_parent;
};

InducedSubgraph induced_subgraph(const Graph &g, std::span<const Vertex> vertices);

/// Vertex sets of the connected components, each sorted, ordered by their
/// smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph &g);

bool is_connected(const Graph &g);

/// Side assignment when the graph is bipartite.
std::optional<std::vector<int>> bipartition(const Graph &g);
inline bool is_bipartite(const Graph &g) { return bipartition(g).has_value(); }

/// Length of a shortest cycle by breadth-first search from every vertex;
/// polynomial, so usable far past the exhaustive-oracle budget.
std::optional<std::size_t> girth(const Graph &g);

bool is_independent(const Graph &g, std::span<const Vertex> vertices);

/// Total color assignment. Every entry is below palette_size.
struct Coloring {
    std::vector<Color> colors;
    std::size_t palette_size = 0;

    /// Number of distinct color ids that actually appear.
    std::size_t colors_used() const;

    /// palette_size = max entry + 1.
    static Coloring from_colors(std::vector<Color> colors);

    friend bool operator==(const Coloring &, const Coloring &) = default;
};

struct ColoringVerdict {
    bool proper = true;
    std::optional<Edge> witness;

    explicit operator bool() const noexcept { return proper; }
};

/// Throws StructuralError when the coloring is not total over g or uses an id
/// outside its palette; otherwise reports properness with one monochromatic
/// edge as witness.
ColoringVerdict validate_coloring(const Graph &g, const Coloring &c);

/// Relabel colors 0..m-1 in order of first appearance over vertex ids.
Coloring compact(const Coloring &c);

/// True when `cycle` lists at least three distinct vertices with every
/// consecutive pair (including last, first) adjacent in g.
bool is_simple_cycle(const Graph &g, std::span<const Vertex> cycle);

} // namespace dfscolor
