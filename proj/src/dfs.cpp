#include "dfscolor/dfs.hpp"

#include <algorithm>
#include <string>

namespace dfscolor {

std::size_t DfsTree::height() const {
    std::size_t h = 0;
    for (Vertex v : preorder) {
        h = std::max(h, depth[v]);
    }
    return h;
}

bool DfsTree::is_ancestor(Vertex a, Vertex d) const {
    if (!contains(a) || !contains(d)) {
        return false;
    }
    return entry_[a] <= entry_[d] && exit_[d] <= exit_[a];
}

std::vector<Vertex> DfsTree::descending_path(Vertex a, Vertex d) const {
    if (!is_ancestor(a, d)) {
        throw StructuralError("vertex " + std::to_string(a) + " is not an ancestor of " + std::to_string(d));
    }
    std::vector<Vertex> path{d};
    while (path.back() != a) {
        path.push_back(*parent[path.back()]);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

DfsTree dfs_tree(const Graph &g, Vertex root) {
    if (root >= g.order()) {
        throw StructuralError("root " + std::to_string(root) + " out of range for " + std::to_string(g.order()) +
                              " vertices");
    }
    const std::size_t n = g.order();
    DfsTree t;
    t.root = root;
    t.parent.assign(n, std::nullopt);
    t.depth.assign(n, kUnreached);
    t.children.assign(n, {});
    t.entry_.assign(n, kUnreached);
    t.exit_.assign(n, kUnreached);

    std::size_t clock = 0;
    std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
    t.depth[root] = 0;
    t.entry_[root] = clock++;
    t.preorder.push_back(root);
    while (!stack.empty()) {
        auto &[v, idx] = stack.back();
        const auto &nbrs = g.neighbors(v);
        if (idx == nbrs.size()) {
            t.exit_[v] = clock++;
            stack.pop_back();
            continue;
        }
        const Vertex w = nbrs[idx++];
        if (t.depth[w] == kUnreached) {
            const Vertex from = v;
            t.parent[w] = from;
            t.depth[w] = t.depth[from] + 1;
            t.entry_[w] = clock++;
            t.children[from].push_back(w);
            t.tree_edges.emplace_back(from, w);
            t.preorder.push_back(w);
            stack.emplace_back(w, 0);
        } else if (t.parent[v] != w && t.entry_[w] < t.entry_[v]) {
            t.back_edges.emplace_back(v, w);
        }
    }
    return t;
}

std::vector<DfsTree> dfs_forest(const Graph &g) {
    std::vector<DfsTree> out;
    for (const auto &comp : connected_components(g)) {
        out.push_back(dfs_tree(g, comp.front()));
    }
    return out;
}

std::vector<std::vector<Vertex>> levels(const DfsTree &t) {
    std::vector<std::vector<Vertex>> out;
    for (Vertex v : t.preorder) {
        if (t.depth[v] >= out.size()) {
            out.resize(t.depth[v] + 1);
        }
        out[t.depth[v]].push_back(v);
    }
    for (auto &level : out) {
        std::sort(level.begin(), level.end());
    }
    return out;
}

PathDecomposition root_to_leaf_paths(const DfsTree &t) {
    PathDecomposition out;
    for (Vertex v : t.preorder) {
        if (t.children[v].empty()) {
            out.paths.push_back(t.descending_path(t.root, v));
        }
    }
    return out;
}

BandDecomposition bands(const DfsTree &t, std::size_t band_height) {
    if (band_height < 1) {
        throw ParameterError("band height must be at least 1");
    }
    BandDecomposition out;
    out.band_height = band_height;
    const std::size_t count = t.height() / band_height + 1;
    for (std::size_t j = 0; j < count; ++j) {
        out.bands.push_back(Band{j, j * band_height, (j + 1) * band_height - 1, j % 3, {}});
    }
    for (Vertex v : t.preorder) {
        out.bands[t.depth[v] / band_height].vertices.push_back(v);
    }
    for (auto &b : out.bands) {
        std::sort(b.vertices.begin(), b.vertices.end());
    }
    return out;
}

std::vector<PathDecomposition> band_pieces(const DfsTree &t, const Band &band) {
    std::vector<PathDecomposition> out;
    for (Vertex top : t.preorder) {
        if (t.depth[top] != band.first_depth) {
            continue;
        }
        PathDecomposition piece;
        std::vector<Vertex> path;
        // Preorder walk of the piece, keeping the current root-to-vertex path.
        std::vector<std::pair<Vertex, std::size_t>> stack{{top, 0}};
        path.push_back(top);
        while (!stack.empty()) {
            auto &[v, idx] = stack.back();
            const bool bottom = t.depth[v] == band.last_depth;
            const auto &kids = t.children[v];
            if (idx == 0 && (bottom || kids.empty())) {
                piece.paths.push_back(path);
            }
            if (bottom || idx == kids.size()) {
                stack.pop_back();
                path.pop_back();
                continue;
            }
            const Vertex c = kids[idx++];
            path.push_back(c);
            stack.emplace_back(c, 0);
        }
        out.push_back(std::move(piece));
    }
    return out;
}

namespace {

void decompose_subtree(const DfsTree &t, const std::vector<std::size_t> &leaf_count, Vertex top,
                       std::size_t level, LeafHeavyDecomposition &out) {
    SpinePath spine;
    spine.level = level;
    spine.top_depth = t.depth[top];
    Vertex v = top;
    spine.vertices.push_back(v);
    while (!t.children[v].empty()) {
        Vertex heavy = t.children[v].front();
        for (Vertex c : t.children[v]) {
            if (leaf_count[c] > leaf_count[heavy] || (leaf_count[c] == leaf_count[heavy] && c < heavy)) {
                heavy = c;
            }
        }
        v = heavy;
        spine.vertices.push_back(v);
    }
    out.levels = std::max(out.levels, level);
    const std::vector<Vertex> along = spine.vertices;
    out.paths.push_back(std::move(spine));
    for (std::size_t i = 0; i + 1 < along.size(); ++i) {
        for (Vertex c : t.children[along[i]]) {
            if (c != along[i + 1]) {
                decompose_subtree(t, leaf_count, c, level + 1, out);
            }
        }
    }
}

} // namespace

LeafHeavyDecomposition leaf_heavy_decomposition(const DfsTree &t) {
    if (t.preorder.empty()) {
        throw StructuralError("empty tree");
    }
    std::vector<std::size_t> leaf_count(t.depth.size(), 0);
    for (auto it = t.preorder.rbegin(); it != t.preorder.rend(); ++it) {
        const Vertex v = *it;
        if (t.children[v].empty()) {
            leaf_count[v] = 1;
        }
        if (t.parent[v]) {
            leaf_count[*t.parent[v]] += leaf_count[v];
        }
    }
    LeafHeavyDecomposition out;
    out.leaves = leaf_count[t.root];
    decompose_subtree(t, leaf_count, t.root, 1, out);
    return out;
}

} // namespace dfscolor
