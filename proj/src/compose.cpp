#include "dfscolor/compose.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <optional>

namespace dfscolor {

BoundInstance ClassBound::instance(std::size_t n, const std::string &label) const {
    return {formula, label + "=" + std::to_string(n), at(n)};
}

ClassBound modulo_level_bound(std::size_t ell) {
    return {"ell+1 (ell=" + std::to_string(ell) + ")", [ell](std::size_t) { return static_cast<double>(ell + 1); }};
}

ClassBound quad_group_bound(std::size_t ell) {
    const auto colors = static_cast<double>(QuadGroup::period(ell) / 2);
    return {(ell % 4 == 1 ? "(ell+3)/2" : "(ell+5)/2") + std::string(" (ell=") + std::to_string(ell) + ")",
            [colors](std::size_t) { return colors; }};
}

ClassBound first_fit_clique_bound(std::size_t omega) {
    return {"(n+omega)/2 (omega=" + std::to_string(omega) + ")",
            [omega](std::size_t n) { return static_cast<double>(n + omega) / 2.0; }};
}

ClassBound first_fit_girth5_bound() {
    return {"2*sqrt(n)", [](std::size_t n) { return 2.0 * std::sqrt(static_cast<double>(n)); }};
}

ClassBound trivial_bound() {
    return {"n", [](std::size_t n) { return static_cast<double>(n); }};
}

// ---------------------------------------------------------------------------

namespace {

// Presents one path to a fresh session and writes its colors through
// `assign`, which checks agreement on already-colored vertices.
template <class Assign>
std::size_t present_path(const Graph &g, const std::vector<Vertex> &path, std::span<const std::size_t> tags,
                         const SessionFactory &algo, std::vector<std::size_t> &position, Assign &&assign) {
    auto session = algo();
    std::vector<std::size_t> earlier;
    for (std::size_t i = 0; i < path.size(); ++i) {
        const Vertex v = path[i];
        earlier.clear();
        for (Vertex w : g.neighbors(v)) {
            if (position[w] != kUnreached) {
                earlier.push_back(position[w]);
            }
        }
        std::sort(earlier.begin(), earlier.end());
        const Color c = session->present(Arrival{earlier, tags[i]});
        position[v] = i;
        assign(v, c);
    }
    for (Vertex v : path) {
        position[v] = kUnreached;
    }
    return session->colors_used();
}

std::vector<std::size_t> depth_tags(const DfsTree &t, const std::vector<Vertex> &path, std::size_t origin) {
    std::vector<std::size_t> tags;
    tags.reserve(path.size());
    for (Vertex v : path) {
        tags.push_back(t.depth[v] - origin);
    }
    return tags;
}

[[noreturn]] void nondeterministic(Vertex v, Color had, Color got) {
    throw ContractViolation("online algorithm is not deterministic: shared prefix vertex " + std::to_string(v) +
                            " colored " + std::to_string(had) + " and then " + std::to_string(got));
}

} // namespace

ComposedColoring compose_paths(const Graph &g, const SessionFactory &algo, const ClassBound &f) {
    const std::size_t n = g.order();
    std::vector<std::optional<Color>> color(n);
    std::vector<std::size_t> position(n, kUnreached);
    ComposedColoring out;
    out.trace.assign(n, {});
    std::size_t height = 0;
    std::size_t path_index = 0;
    for (const DfsTree &t : dfs_forest(g)) {
        height = std::max(height, t.height());
        for (const auto &path : root_to_leaf_paths(t).paths) {
            const auto tags = depth_tags(t, path, 0);
            const std::size_t used = present_path(g, path, tags, algo, position, [&](Vertex v, Color c) {
                if (color[v]) {
                    if (*color[v] != c) {
                        nondeterministic(v, *color[v], c);
                    }
                    return;
                }
                color[v] = c;
                out.trace[v].path = path_index;
            });
            out.max_colors_per_unit = std::max(out.max_colors_per_unit, used);
            ++path_index;
        }
    }
    std::vector<Color> flat(n);
    for (Vertex v = 0; v < n; ++v) {
        flat[v] = *color[v];
    }
    out.coloring = Coloring::from_colors(std::move(flat));
    out.bound = f.instance(height + 1, "h+1");
    out.quoted_bound = f.instance(height, "h");
    return out;
}

// ---------------------------------------------------------------------------

namespace {

// Colors of one block, indexed like block.vertices, in the encoding
// algo_color * 3 + palette.
std::vector<Color> color_block(const Graph &g, const Block &block, std::size_t band_height,
                               const SessionFactory &algo, std::size_t block_index,
                               std::vector<VertexTrace> &trace, std::size_t &max_per_piece) {
    const std::size_t m = block.vertices.size();
    std::vector<Color> local(m, 0);
    if (m == 1) {
        trace[block.vertices[0]].block = block_index;
        return local;
    }
    const InducedSubgraph sub = induced_subgraph(g, block.vertices);
    const DfsTree t = dfs_tree(sub.graph, 0);
    if (auto sides = bipartition(sub.graph)) {
        for (Vertex i = 0; i < m; ++i) {
            local[i] = static_cast<Color>((*sides)[i]);
            trace[block.vertices[i]].block = block_index;
        }
        max_per_piece = std::max<std::size_t>(max_per_piece, 1);
        return local;
    }
    std::vector<std::optional<Color>> color(m);
    std::vector<std::size_t> position(m, kUnreached);
    const BandDecomposition bd = bands(t, band_height);
    for (const Band &band : bd.bands) {
        for (const PathDecomposition &piece : band_pieces(t, band)) {
            for (const auto &path : piece.paths) {
                const auto tags = depth_tags(t, path, band.first_depth);
                const std::size_t used =
                    present_path(sub.graph, path, tags, algo, position, [&](Vertex v, Color c) {
                        const Color encoded = c * 3 + band.palette;
                        if (color[v]) {
                            if (*color[v] != encoded) {
                                nondeterministic(sub.to_parent[v], *color[v] / 3, c);
                            }
                            return;
                        }
                        color[v] = encoded;
                        trace[sub.to_parent[v]].block = block_index;
                        trace[sub.to_parent[v]].band = band.index;
                    });
                max_per_piece = std::max(max_per_piece, used);
            }
        }
    }
    for (Vertex i = 0; i < m; ++i) {
        local[i] = *color[i];
    }
    return local;
}

} // namespace

ComposedColoring compose_bands(const Graph &g, std::size_t ell, const SessionFactory &algo, const ClassBound &f) {
    if (ell % 2 == 0 || ell < 3) {
        throw ParameterError("band composition needs an odd cycle length >= 3, got " + std::to_string(ell));
    }
    if (is_bipartite(g)) {
        throw NoOddCycle();
    }
    const std::size_t n = g.order();
    const BlockDecomposition decomposition = blocks(g);
    const auto &all = decomposition.blocks;
    std::vector<std::vector<std::size_t>> blocks_of(n);
    for (std::size_t b = 0; b < all.size(); ++b) {
        for (Vertex v : all[b].vertices) {
            blocks_of[v].push_back(b);
        }
    }

    ComposedColoring out;
    out.trace.assign(n, {});
    std::vector<std::optional<Color>> color(n);
    std::vector<bool> done(all.size(), false);
    // Block-cut tree breadth-first from the block holding the smallest
    // uncolored vertex; each new block meets the colored part in at most one
    // (cut) vertex, whose color is matched by swapping two colors inside the
    // new block.
    for (Vertex start = 0; start < n; ++start) {
        if (color[start]) {
            continue;
        }
        std::deque<std::size_t> queue{blocks_of[start].front()};
        while (!queue.empty()) {
            const std::size_t b = queue.front();
            queue.pop_front();
            if (done[b]) {
                continue;
            }
            done[b] = true;
            const Block &block = all[b];
            std::vector<Color> local =
                color_block(g, block, ell + 1, algo, b, out.trace, out.max_colors_per_unit);
            std::optional<std::size_t> anchor;
            for (std::size_t i = 0; i < block.vertices.size(); ++i) {
                if (color[block.vertices[i]]) {
                    if (anchor) {
                        throw Error("block decomposition shares more than one vertex with colored part");
                    }
                    anchor = i;
                }
            }
            if (anchor) {
                const Color want = *color[block.vertices[*anchor]];
                const Color have = local[*anchor];
                for (Color &c : local) {
                    if (c == have) {
                        c = want;
                    } else if (c == want) {
                        c = have;
                    }
                }
            }
            for (std::size_t i = 0; i < block.vertices.size(); ++i) {
                const Vertex v = block.vertices[i];
                color[v] = local[i];
                for (std::size_t other : blocks_of[v]) {
                    if (!done[other]) {
                        queue.push_back(other);
                    }
                }
            }
        }
    }
    std::vector<Color> flat(n);
    for (Vertex v = 0; v < n; ++v) {
        flat[v] = *color[v];
    }
    out.coloring = compact(Coloring{std::move(flat), std::numeric_limits<std::size_t>::max()});
    const BoundInstance per_band = f.instance(ell + 1, "ell+1");
    out.bound = {"3*" + per_band.formula, per_band.instance, 3.0 * per_band.value};
    const BoundInstance quoted = f.instance(ell, "ell");
    out.quoted_bound = {"3*" + quoted.formula, quoted.instance, 3.0 * quoted.value};
    return out;
}

// ---------------------------------------------------------------------------

std::vector<Color> ExactPathColorer::color(const Graph &path_graph) const {
    auto result = chromatic_number_exact(path_graph, limit_);
    return std::move(result.witness.colors);
}

std::vector<Color> FirstFitPathColorer::color(const Graph &path_graph) const {
    std::vector<Vertex> order(path_graph.order());
    for (Vertex v = 0; v < order.size(); ++v) {
        order[v] = v;
    }
    return replay(make_factory(FirstFitSpec{}), present_in_order(path_graph, order));
}

std::size_t max_root_path_chromatic(const Graph &g, std::size_t limit) {
    std::size_t best = 0;
    for (const DfsTree &t : dfs_forest(g)) {
        for (const auto &path : root_to_leaf_paths(t).paths) {
            best = std::max(best, chromatic_number_exact(induced_subgraph(g, path).graph, limit).chromatic_number);
        }
    }
    return best;
}

ComposedColoring compose_recursive(const Graph &g, const PathColorer &colorer) {
    const std::size_t n = g.order();
    const std::size_t k = colorer.declared_colors();
    ComposedColoring out;
    out.trace.assign(n, {});
    std::vector<Color> color(n, 0);
    std::size_t levels = 0;
    std::size_t log_levels = 0;
    std::size_t path_index = 0;
    for (const DfsTree &t : dfs_forest(g)) {
        const LeafHeavyDecomposition dec = leaf_heavy_decomposition(t);
        levels = std::max(levels, dec.levels);
        log_levels = std::max(log_levels, static_cast<std::size_t>(std::bit_width(dec.leaves)));
        for (const SpinePath &spine : dec.paths) {
            const InducedSubgraph sub = induced_subgraph(g, spine.vertices);
            Coloring local = Coloring::from_colors(colorer.color(sub.graph));
            if (local.colors.size() != spine.vertices.size()) {
                throw ContractViolation("path colorer returned " + std::to_string(local.colors.size()) +
                                        " colors for a path of " + std::to_string(spine.vertices.size()));
            }
            if (!validate_coloring(sub.graph, local)) {
                throw ContractViolation("path colorer '" + colorer.name() + "' returned an improper coloring");
            }
            local = compact(local);
            if (local.palette_size > k) {
                throw ContractViolation("path colorer '" + colorer.name() + "' used " +
                                        std::to_string(local.palette_size) + " colors, declared " +
                                        std::to_string(k));
            }
            out.max_colors_per_unit = std::max(out.max_colors_per_unit, local.palette_size);
            for (std::size_t i = 0; i < spine.vertices.size(); ++i) {
                const Vertex v = spine.vertices[i];
                color[v] = (spine.level - 1) * k + local.colors[i];
                out.trace[v].level = spine.level;
                out.trace[v].path = path_index;
            }
            ++path_index;
        }
    }
    out.coloring = Coloring::from_colors(std::move(color));
    out.bound = {"k*levels", "k=" + std::to_string(k) + " levels=" + std::to_string(levels),
                 static_cast<double>(k * levels)};
    // floor(log2 leaves) + 1 == bit_width(leaves)
    out.quoted_bound = {"k*(floor(log2 leaves)+1)",
                        "k=" + std::to_string(k) + " floor(log2 leaves)+1=" + std::to_string(log_levels),
                        static_cast<double>(k * log_levels)};
    return out;
}

ComposedColoring compose_level_parity(const Graph &g, std::size_t odd_length_count) {
    const std::size_t n = g.order();
    ComposedColoring out;
    out.trace.assign(n, {});
    std::vector<Color> color(n, 0);
    for (const DfsTree &t : dfs_forest(g)) {
        const auto per_level = parity_greedy_levels(g, t, odd_length_count);
        for (Vertex v : t.preorder) {
            color[v] = per_level[t.depth[v]];
        }
    }
    out.coloring = Coloring::from_colors(std::move(color));
    out.coloring.palette_size = std::max(out.coloring.palette_size, 2 * odd_length_count + 2);
    const double bound = static_cast<double>(2 * odd_length_count + 2);
    out.bound = {"2|L|+2", "|L|=" + std::to_string(odd_length_count), bound};
    out.quoted_bound = out.bound;
    out.max_colors_per_unit = out.coloring.colors_used();
    return out;
}

} // namespace dfscolor
