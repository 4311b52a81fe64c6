#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>

#include "dfscolor/dfs.hpp"
#include "dfscolor/generators.hpp"
#include "support/corpus.hpp"

using namespace dfscolor;

TEST_CASE("dfs explores neighbors in ascending order") {
    const DfsTree t = dfs_tree(complete_graph(4), 0);
    CHECK(t.preorder == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(t.height() == 3);
    CHECK(t.back_edges.size() == 3);
    CHECK(t.is_ancestor(1, 3));
    CHECK(t.is_ancestor(2, 2));
    CHECK_FALSE(t.is_ancestor(3, 1));
    CHECK(t.descending_path(1, 3) == std::vector<Vertex>{1, 2, 3});
    CHECK(root_to_leaf_paths(t).paths.size() == 1);
    CHECK_THROWS_AS(dfs_tree(complete_graph(4), 4), StructuralError);
}

TEST_CASE("dfs tree invariants on random graphs") {
    for (const Graph &g : corpus::any_graphs(120, 1, 14, 8)) {
        const auto forest = dfs_forest(g);
        std::size_t covered = 0;
        for (const DfsTree &t : forest) {
            covered += t.preorder.size();
            std::set<Edge> tree(t.tree_edges.begin(), t.tree_edges.end());
            CHECK(tree.size() + 1 == t.preorder.size());
            for (Vertex v : t.preorder) {
                if (v == t.root) {
                    CHECK_FALSE(t.parent[v].has_value());
                    CHECK(t.depth[v] == 0);
                } else {
                    REQUIRE(t.parent[v].has_value());
                    CHECK(t.depth[v] == t.depth[*t.parent[v]] + 1);
                    CHECK(g.adjacent(v, *t.parent[v]));
                }
            }
            // Every edge of the component is a tree edge or joins an
            // ancestor to a descendant.
            for (const Edge &e : g.edges()) {
                if (!t.contains(e.u)) {
                    continue;
                }
                CHECK((t.is_ancestor(e.u, e.v) || t.is_ancestor(e.v, e.u)));
            }
            for (const auto &[desc, anc] : t.back_edges) {
                CHECK(t.is_ancestor(anc, desc));
                CHECK(t.depth[desc] >= t.depth[anc] + 2);
            }
            // Levels are independent sets.
            for (const auto &level : levels(t)) {
                CHECK(is_independent(g, level));
            }
            // One path per leaf, each a chain from the root.
            const auto paths = root_to_leaf_paths(t).paths;
            std::size_t leaves = 0;
            for (Vertex v : t.preorder) {
                leaves += t.is_leaf(v) ? 1 : 0;
            }
            CHECK(paths.size() == leaves);
            for (const auto &p : paths) {
                CHECK(p.front() == t.root);
                CHECK(t.is_leaf(p.back()));
                for (std::size_t i = 0; i < p.size(); ++i) {
                    CHECK(t.depth[p[i]] == i);
                }
            }
        }
        CHECK(covered == g.order());
        for (std::size_t i = 1; i < forest.size(); ++i) {
            CHECK(forest[i - 1].root < forest[i].root);
        }
    }
}

TEST_CASE("bands partition the tree by depth") {
    const DfsTree t = dfs_tree(path_graph(10), 0);
    const BandDecomposition b = bands(t, 4);
    REQUIRE(b.bands.size() == 3);
    CHECK(b.bands[0].vertices == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(b.bands[2].vertices == std::vector<Vertex>{8, 9});
    CHECK(b.bands[1].palette == 1);
    CHECK(b.bands[2].first_depth == 8);
    CHECK_THROWS_AS(bands(t, 0), ParameterError);

    for (const Graph &g : corpus::any_graphs(60, 2, 14, 4)) {
        const DfsTree tree = dfs_tree(g, 0);
        for (std::size_t h : {1u, 2u, 4u}) {
            const BandDecomposition bd = bands(tree, h);
            std::size_t total = 0;
            for (const Band &band : bd.bands) {
                CHECK(band.palette == band.index % 3);
                std::size_t in_pieces = 0;
                for (const auto &piece : band_pieces(tree, band)) {
                    std::set<Vertex> members;
                    for (const auto &p : piece.paths) {
                        CHECK(tree.depth[p.front()] == band.first_depth);
                        members.insert(p.begin(), p.end());
                        for (Vertex v : p) {
                            CHECK(tree.depth[v] <= band.last_depth);
                        }
                    }
                    in_pieces += members.size();
                }
                CHECK(in_pieces == band.vertices.size());
                total += band.vertices.size();
            }
            CHECK(total == tree.preorder.size());
        }
    }
}

TEST_CASE("leaf-heavy spines partition the tree") {
    const DfsTree path = dfs_tree(path_graph(6), 0);
    const LeafHeavyDecomposition single = leaf_heavy_decomposition(path);
    CHECK(single.paths.size() == 1);
    CHECK(single.levels == 1);

    const DfsTree bin = dfs_tree(binary_tree(3), 0);
    const LeafHeavyDecomposition d = leaf_heavy_decomposition(bin);
    CHECK(d.leaves == 8);
    CHECK(d.levels == 4);

    for (const Graph &g : corpus::any_graphs(80, 1, 14, 21)) {
        for (const DfsTree &t : dfs_forest(g)) {
            const LeafHeavyDecomposition dec = leaf_heavy_decomposition(t);
            std::vector<std::size_t> level_of(g.order(), 0);
            std::size_t total = 0;
            for (const SpinePath &s : dec.paths) {
                total += s.vertices.size();
                CHECK(t.is_leaf(s.vertices.back()));
                CHECK(t.depth[s.vertices.front()] == s.top_depth);
                for (std::size_t i = 0; i + 1 < s.vertices.size(); ++i) {
                    CHECK(t.parent[s.vertices[i + 1]] == s.vertices[i]);
                }
                for (Vertex v : s.vertices) {
                    CHECK(level_of[v] == 0);
                    level_of[v] = s.level;
                }
                if (s.level == 1) {
                    CHECK(s.vertices.front() == t.root);
                } else {
                    const Vertex top = s.vertices.front();
                    CHECK(level_of[*t.parent[top]] == s.level - 1);
                }
            }
            CHECK(total == t.preorder.size());
            CHECK(dec.levels <= static_cast<std::size_t>(std::bit_width(dec.leaves)));
        }
    }
}
