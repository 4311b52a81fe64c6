#include "dfscolor/residue.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace dfscolor {

namespace {

void require_modulus(std::size_t k) {
    if (k < 2) {
        throw ParameterError("modulus must be at least 2, got " + std::to_string(k));
    }
}

// tree_of[v] = index into the forest of the tree spanning v.
std::vector<std::size_t> tree_index(const std::vector<DfsTree> &forest, std::size_t order) {
    std::vector<std::size_t> out(order, 0);
    for (std::size_t i = 0; i < forest.size(); ++i) {
        for (Vertex v : forest[i].preorder) {
            out[v] = i;
        }
    }
    return out;
}

} // namespace

ResidueClasses residue_classes(const std::vector<DfsTree> &forest, std::size_t order, std::size_t k) {
    require_modulus(k);
    ResidueClasses out{k, std::vector<std::vector<Vertex>>(k)};
    std::vector<std::size_t> depth(order, kUnreached);
    for (const DfsTree &t : forest) {
        for (Vertex v : t.preorder) {
            depth[v] = t.depth[v];
        }
    }
    for (Vertex v = 0; v < order; ++v) {
        out.classes[depth[v] % k].push_back(v);
    }
    return out;
}

ComposedColoring color_residue1(const Graph &g, std::size_t k, std::size_t r) {
    require_modulus(k);
    const std::size_t n = g.order();
    const auto forest = dfs_forest(g);
    const auto owner = tree_index(forest, n);
    const auto classes = residue_classes(forest, n, k);
    std::vector<std::size_t> depth(n);
    for (Vertex v = 0; v < n; ++v) {
        depth[v] = forest[owner[v]].depth[v];
    }

    ComposedColoring out;
    out.trace.assign(n, {});
    std::vector<std::optional<Color>> local(n);
    std::vector<Color> color(n, 0);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Vertex> order = classes.classes[i];
        std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return depth[a] < depth[b]; });
        std::size_t used = 0;
        for (Vertex v : order) {
            // Colored same-class neighbors are strictly shallower, hence
            // ancestors of v at depths differing by multiples of k.
            std::vector<Vertex> earlier;
            std::vector<bool> taken(r + 2, false);
            for (Vertex w : g.neighbors(v)) {
                if (local[w] && depth[w] % k == i) {
                    earlier.push_back(w);
                    if (*local[w] < taken.size()) {
                        taken[*local[w]] = true;
                    }
                }
            }
            const auto c = static_cast<Color>(std::find(taken.begin(), taken.end(), false) - taken.begin());
            if (c > r) {
                std::vector<std::vector<Vertex>> cycles;
                for (Vertex w : earlier) {
                    if (cycles.size() == r + 1) {
                        break;
                    }
                    cycles.push_back(forest[owner[v]].descending_path(w, v));
                }
                throw HypothesisViolation("vertex " + std::to_string(v) + " needs color " + std::to_string(c + 1) +
                                              " in residue class " + std::to_string(i) + "; the graph has more than " +
                                              std::to_string(r) + " cycle lengths = 1 mod " + std::to_string(k),
                                          std::move(cycles));
            }
            local[v] = c;
            used = std::max(used, c + 1);
            color[v] = i * (r + 1) + c;
            out.trace[v].level = i;
        }
        out.max_colors_per_unit = std::max(out.max_colors_per_unit, used);
    }
    out.coloring = Coloring{std::move(color), k * (r + 1)};
    const auto bound = static_cast<double>((r + 1) * k);
    out.bound = {"(r+1)k", "r=" + std::to_string(r) + " k=" + std::to_string(k), bound};
    out.quoted_bound = out.bound;
    return out;
}

ComposedColoring color_residue2(const Graph &g, std::size_t k, std::size_t s) {
    require_modulus(k);
    const std::size_t limit = s * k + k + 1;
    ComposedColoring out = compose_paths(g, make_factory(FirstFitSpec{}), trivial_bound());
    const auto forest = dfs_forest(g);
    const auto owner = tree_index(forest, g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        if (out.coloring.colors[v] < limit) {
            continue;
        }
        // First Fit gave v a color >= sk+k+1, so v has at least sk+k+1
        // adjacent ancestors; some residue class of depth holds s+2 of them.
        const DfsTree &t = forest[owner[v]];
        std::vector<std::vector<Vertex>> by_class(k);
        for (Vertex w : g.neighbors(v)) {
            if (t.is_ancestor(w, v) && w != v) {
                by_class[t.depth[w] % k].push_back(w);
            }
        }
        for (auto &members : by_class) {
            if (members.size() < s + 2) {
                continue;
            }
            std::sort(members.begin(), members.end(), [&](Vertex a, Vertex b) { return t.depth[a] > t.depth[b]; });
            const Vertex anchor = members.front();
            std::vector<std::vector<Vertex>> cycles;
            for (std::size_t j = 1; j < members.size() && cycles.size() < s + 1; ++j) {
                std::vector<Vertex> cycle{v};
                const auto down = t.descending_path(members[j], anchor);
                cycle.insert(cycle.end(), down.begin(), down.end());
                cycles.push_back(std::move(cycle));
            }
            throw HypothesisViolation("vertex " + std::to_string(v) + " has " + std::to_string(members.size()) +
                                          " adjacent ancestors at depths = " + std::to_string(t.depth[anchor] % k) +
                                          " mod " + std::to_string(k) + "; the graph has more than " +
                                          std::to_string(s) + " cycle lengths = 2 mod " + std::to_string(k),
                                      std::move(cycles));
        }
        throw Error("first fit exceeded its ancestor bound without a witness class");
    }
    out.coloring.palette_size = std::max(out.coloring.palette_size, limit);
    out.bound = {"sk+k+1", "s=" + std::to_string(s) + " k=" + std::to_string(k), static_cast<double>(limit)};
    out.quoted_bound = out.bound;
    return out;
}

namespace {

// Some cycle of the subgraph induced by `members`, or nothing if it is a
// forest. Members must be sorted.
std::optional<std::vector<Vertex>> find_cycle(const Graph &g, const std::vector<Vertex> &members) {
    const InducedSubgraph sub = induced_subgraph(g, members);
    const Graph &h = sub.graph;
    std::vector<std::size_t> state(h.order(), 0); // 0 new, 1 on stack, 2 done
    std::vector<Vertex> parent(h.order(), kUnreached);
    for (Vertex s = 0; s < h.order(); ++s) {
        if (state[s] != 0) {
            continue;
        }
        std::vector<std::pair<Vertex, std::size_t>> stack{{s, 0}};
        state[s] = 1;
        while (!stack.empty()) {
            auto &[v, idx] = stack.back();
            const auto &nbrs = h.neighbors(v);
            if (idx == nbrs.size()) {
                state[v] = 2;
                stack.pop_back();
                continue;
            }
            const Vertex w = nbrs[idx++];
            if (w == parent[v]) {
                continue;
            }
            if (state[w] == 1) {
                std::vector<Vertex> cycle;
                for (Vertex x = v; x != w; x = parent[x]) {
                    cycle.push_back(sub.to_parent[x]);
                }
                cycle.push_back(sub.to_parent[w]);
                return cycle;
            }
            if (state[w] == 0) {
                parent[w] = v;
                state[w] = 1;
                stack.emplace_back(w, 0);
            }
        }
    }
    return std::nullopt;
}

// A cycle of length = 3 mod k from a cycle whose vertices all have depths in
// one residue class. u is a deepest vertex of the cycle, w the deeper and v
// the shallower of its two cycle neighbors (both ancestors of u). Walking the
// cycle from w away from u, the first edge (z, y) leaving the subtree of w
// lands on an ancestor y of w; then u, w..z (tree), y..v (tree) is a simple
// cycle whose length is 3 plus depth differences that are multiples of k.
std::vector<Vertex> residue3_witness(const DfsTree &t, const std::vector<Vertex> &cycle) {
    const std::size_t len = cycle.size();
    std::size_t at = 0;
    for (std::size_t i = 1; i < len; ++i) {
        if (t.depth[cycle[i]] > t.depth[cycle[at]]) {
            at = i;
        }
    }
    const Vertex u = cycle[at];
    Vertex prev = cycle[(at + len - 1) % len];
    Vertex next = cycle[(at + 1) % len];
    // Walk direction: from w away from u.
    std::ptrdiff_t step = 1;
    if (t.depth[prev] > t.depth[next]) {
        std::swap(prev, next);
        step = -1;
    }
    const Vertex v = prev;
    const Vertex w = next;
    std::size_t i = (at + static_cast<std::size_t>(len + step)) % len;
    Vertex z = w;
    Vertex y = w;
    while (true) {
        const std::size_t j = (i + static_cast<std::size_t>(static_cast<std::ptrdiff_t>(len) + step)) % len;
        if (!t.is_ancestor(w, cycle[j])) {
            z = cycle[i];
            y = cycle[j];
            break;
        }
        i = j;
    }
    std::vector<Vertex> out{u};
    const auto down = t.descending_path(w, z);
    out.insert(out.end(), down.begin(), down.end());
    if (t.is_ancestor(y, v)) {
        const auto yv = t.descending_path(y, v);
        out.insert(out.end(), yv.begin(), yv.end());
    } else {
        auto vy = t.descending_path(v, y);
        out.insert(out.end(), vy.rbegin(), vy.rend());
    }
    return out;
}

} // namespace

ComposedColoring color_residue3(const Graph &g, std::size_t k) {
    require_modulus(k);
    const std::size_t n = g.order();
    const auto forest = dfs_forest(g);
    const auto owner = tree_index(forest, n);
    const auto classes = residue_classes(forest, n, k);

    ComposedColoring out;
    out.trace.assign(n, {});
    std::vector<Color> color(n, 0);
    for (std::size_t i = 0; i < k; ++i) {
        const auto &members = classes.classes[i];
        if (auto cycle = find_cycle(g, members)) {
            const DfsTree &t = forest[owner[cycle->front()]];
            auto witness = residue3_witness(t, *cycle);
            throw HypothesisViolation("residue class " + std::to_string(i) + " induces a cycle of length " +
                                          std::to_string(cycle->size()) + "; the graph has a cycle of length " +
                                          std::to_string(witness.size()) + " = 3 mod " + std::to_string(k),
                                      {std::move(witness)});
        }
        // 2-color the forest by depth parity from each tree's smallest vertex.
        const InducedSubgraph sub = induced_subgraph(g, members);
        std::vector<std::size_t> parity(sub.graph.order(), kUnreached);
        for (Vertex s = 0; s < sub.graph.order(); ++s) {
            if (parity[s] != kUnreached) {
                continue;
            }
            parity[s] = 0;
            std::vector<Vertex> queue{s};
            for (std::size_t head = 0; head < queue.size(); ++head) {
                for (Vertex w : sub.graph.neighbors(queue[head])) {
                    if (parity[w] == kUnreached) {
                        parity[w] = 1 - parity[queue[head]];
                        queue.push_back(w);
                    }
                }
            }
        }
        for (Vertex x = 0; x < sub.graph.order(); ++x) {
            color[sub.to_parent[x]] = 2 * i + parity[x];
            out.trace[sub.to_parent[x]].level = i;
        }
    }
    out.coloring = Coloring{std::move(color), 2 * k};
    out.max_colors_per_unit = 2;
    out.bound = {"2k", "k=" + std::to_string(k), static_cast<double>(2 * k)};
    out.quoted_bound = out.bound;
    return out;
}

} // namespace dfscolor
