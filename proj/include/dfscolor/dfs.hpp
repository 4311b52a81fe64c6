#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dfscolor/graph.hpp"

namespace dfscolor {

inline constexpr std::size_t kUnreached = static_cast<std::size_t>(-1);

/// Depth-first spanning tree of the root's connected component. Neighbors are
/// explored in ascending id, so the tree is a pure function of (graph, root).
/// Arrays are indexed by vertex id over the whole graph; vertices outside the
/// component have depth kUnreached and no parent.
struct DfsTree {
    Vertex root = 0;
    std::vector<std::optional<Vertex>> parent;
    std::vector<std::size_t> depth;
    /// Children in discovery order (ascending id).
    std::vector<std::vector<Vertex>> children;
    std::vector<Edge> tree_edges;
    /// Stored as (descendant, ancestor), not normalized.
    std::vector<std::pair<Vertex, Vertex>> back_edges;
    std::vector<Vertex> preorder;

    bool contains(Vertex v) const { return v < depth.size() && depth[v] != kUnreached; }
    bool spans_graph() const { return preorder.size() == depth.size(); }
    std::size_t height() const;
    bool is_leaf(Vertex v) const { return contains(v) && children[v].empty(); }

    /// Reflexive.
    bool is_ancestor(Vertex a, Vertex d) const;

    /// Tree path from ancestor `a` down to descendant `d`, both inclusive.
    std::vector<Vertex> descending_path(Vertex a, Vertex d) const;

    std::size_t preorder_index(Vertex v) const { return entry_.at(v); }

private:
    friend DfsTree dfs_tree(const Graph &g, Vertex root);
    std::vector<std::size_t> entry_;
    std::vector<std::size_t> exit_;
};

/// Throws StructuralError when root is out of range.
DfsTree dfs_tree(const Graph &g, Vertex root);

/// One tree per connected component, rooted at the component's smallest
/// vertex, in ascending root order.
std::vector<DfsTree> dfs_forest(const Graph &g);

/// levels[i] = vertices at depth i, ascending. No trailing empty levels.
std::vector<std::vector<Vertex>> levels(const DfsTree &t);

/// One root-to-leaf path per leaf, leaves in preorder; each path ordered by
/// increasing depth.
struct PathDecomposition {
    std::vector<std::vector<Vertex>> paths;
};

PathDecomposition root_to_leaf_paths(const DfsTree &t);

struct Band {
    std::size_t index = 0;
    std::size_t first_depth = 0;
    std::size_t last_depth = 0;
    std::size_t palette = 0;
    /// Ascending.
    std::vector<Vertex> vertices;
};

struct BandDecomposition {
    std::size_t band_height = 0;
    std::vector<Band> bands;
};

/// Band j holds depths [j*h, (j+1)*h - 1] and uses palette j mod 3.
BandDecomposition bands(const DfsTree &t, std::size_t band_height);

/// Maximal subtrees of T inside one band: each piece is rooted at a vertex on
/// the band's first depth and holds its descendants down to the band's last
/// depth. Returned as the piece's root-to-leaf paths, in preorder.
std::vector<PathDecomposition> band_pieces(const DfsTree &t, const Band &band);

struct SpinePath {
    /// Top to bottom.
    std::vector<Vertex> vertices;
    /// 1 for the spine through the root.
    std::size_t level = 1;
    std::size_t top_depth = 0;
};

struct LeafHeavyDecomposition {
    /// In generation order: each subtree's spine before the subtrees hanging
    /// off it, which are taken top to bottom along the spine.
    std::vector<SpinePath> paths;
    std::size_t levels = 0;
    std::size_t leaves = 0;
};

/// Recursive spine decomposition: from a subtree root, follow the child whose
/// subtree has the most leaves (ties to the smaller id) down to a leaf; recurse
/// one level deeper on every subtree hanging off that spine.
LeafHeavyDecomposition leaf_heavy_decomposition(const DfsTree &t);

} // namespace dfscolor
