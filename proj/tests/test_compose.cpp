#include <doctest.h>

#include <bit>
#include <cmath>

#include "dfscolor/compose.hpp"
#include "dfscolor/generators.hpp"
#include "support/algos.hpp"
#include "support/brute.hpp"
#include "support/corpus.hpp"

using namespace dfscolor;

namespace {

const SessionFactory ff = make_factory(FirstFitSpec{});

void check_proper(const Graph &g, const ComposedColoring &c) {
    CHECK(validate_coloring(g, c.coloring).proper);
    CHECK(brute::proper(g, c.coloring.colors));
    CHECK(c.trace.size() == g.order());
}

} // namespace

TEST_CASE("path composition on small graphs") {
    const Graph tree = binary_tree(3);
    const ComposedColoring t = compose_paths(tree, ff, trivial_bound());
    check_proper(tree, t);
    CHECK(t.coloring.colors_used() == 2);

    const Graph k4 = complete_graph(4);
    const ComposedColoring m = compose_paths(k4, make_factory(ModuloLevelSpec{3}), modulo_level_bound(3));
    check_proper(k4, m);
    CHECK(m.coloring.colors_used() == 4);
    CHECK(m.bound.value == 4);

    const Graph empty;
    CHECK(compose_paths(empty, ff, trivial_bound()).coloring.colors.empty());
}

TEST_CASE("path composition detects nondeterministic algorithms") {
    const SessionFactory drifting = [] { return std::make_unique<algos::Drifting>(); };
    CHECK_THROWS_AS(compose_paths(binary_tree(2), drifting, trivial_bound()), ContractViolation);
}

TEST_CASE("path composition bounds use h + 1 vertices") {
    const Graph p = path_graph(6);
    const ComposedColoring c = compose_paths(p, ff, first_fit_clique_bound(2));
    CHECK(c.bound.instance == "h+1=6");
    CHECK(c.bound.value == doctest::Approx(4.0));
    CHECK(c.quoted_bound.value == doctest::Approx(3.5));
}

TEST_CASE("modulo level composition stays within ell + 1") {
    for (const Graph &g : corpus::connected_nonbipartite(120, 10, 40)) {
        const auto odd = brute::odd_cycle_lengths(g);
        const std::size_t ell = *odd.rbegin();
        const ComposedColoring c = compose_paths(g, make_factory(ModuloLevelSpec{ell}), modulo_level_bound(ell));
        check_proper(g, c);
        CHECK(c.coloring.colors_used() <= ell + 1);
    }
}

TEST_CASE("quad group composition on triangle-free graphs") {
    for (const Graph &g : corpus::triangle_free_nonbipartite(120, 11, 41)) {
        const auto odd = brute::odd_cycle_lengths(g);
        const std::size_t ell = *odd.rbegin();
        const ComposedColoring c = compose_paths(g, make_factory(QuadGroupSpec{ell}), quad_group_bound(ell));
        check_proper(g, c);
        const std::size_t bound = ell % 4 == 1 ? (ell + 3) / 2 : (ell + 5) / 2;
        CHECK(c.coloring.colors_used() <= bound);
        CHECK(c.bound.value == bound);
    }
    const Graph c9 = cycle_graph(9);
    const ComposedColoring c = compose_paths(c9, make_factory(QuadGroupSpec{9}), quad_group_bound(9));
    CHECK(c.bound.value == 6);
    check_proper(c9, c);
}

TEST_CASE("first fit composition stays within (h + 1 + omega) / 2") {
    for (const Graph &g : corpus::any_graphs(120, 1, 10, 42)) {
        const std::size_t omega = brute::clique_number(g);
        const ComposedColoring c = compose_paths(g, ff, first_fit_clique_bound(omega));
        check_proper(g, c);
        CHECK(c.bound.admits(c.coloring.colors_used()));
        // The longest path has at least h edges, so p + 1 + omega bounds too.
        const std::size_t p = brute::longest_path(g);
        CHECK(2 * c.coloring.colors_used() <= p + 1 + omega);
    }
}

TEST_CASE("counting the longest path in edges undercounts by one vertex") {
    // K2: p = 1 edge, omega = 2, yet any proper coloring needs 2 > 3/2 colors.
    const Graph k2 = complete_graph(2);
    const ComposedColoring c = compose_paths(k2, ff, first_fit_clique_bound(2));
    CHECK(c.coloring.colors_used() == 2);
    CHECK(brute::longest_path(k2) == 1);
    CHECK(2 * c.coloring.colors_used() > brute::longest_path(k2) + 2);
    CHECK(c.bound.admits(2));
}

TEST_CASE("band composition") {
    CHECK_THROWS_AS(compose_bands(cycle_graph(6), 3, ff, trivial_bound()), NoOddCycle);
    CHECK_THROWS_AS(compose_bands(cycle_graph(5), 4, ff, trivial_bound()), ParameterError);
    CHECK_THROWS_AS(compose_bands(cycle_graph(5), 1, ff, trivial_bound()), ParameterError);

    const Graph bowtie(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    const ComposedColoring b = compose_bands(bowtie, 3, make_factory(ModuloLevelSpec{3}), modulo_level_bound(3));
    check_proper(bowtie, b);
    CHECK(b.bound.value == 12);
    CHECK(b.coloring.colors_used() <= 12);
    CHECK(b.trace[0].block != b.trace[4].block);

    // Shallow tree: one band.
    const Graph c5 = cycle_graph(5);
    const ComposedColoring single = compose_bands(c5, 5, ff, first_fit_clique_bound(2));
    check_proper(c5, single);
    for (const VertexTrace &tr : single.trace) {
        CHECK(tr.band == 0);
    }
}

TEST_CASE("band composition is proper with exact ell") {
    for (const Graph &g : corpus::connected_nonbipartite(100, 12, 43)) {
        const std::size_t ell = *brute::odd_cycle_lengths(g).rbegin();
        const std::size_t omega = brute::clique_number(g);
        const ComposedColoring a = compose_bands(g, ell, ff, first_fit_clique_bound(omega));
        check_proper(g, a);
        CHECK(a.bound.admits(a.coloring.colors_used()));
        const ComposedColoring m = compose_bands(g, ell, make_factory(ModuloLevelSpec{ell}), modulo_level_bound(ell));
        check_proper(g, m);
        CHECK(m.coloring.colors_used() <= 3 * (ell + 1));
    }
}

TEST_CASE("band composition on girth-5 graphs") {
    corpus::Stream s(44);
    int tested = 0;
    while (tested < 25) {
        const std::size_t n = s.between(std::size_t{8}, std::size_t{16});
        const Graph g = random_girth5(n, s.between(0.2, 0.6), s.word());
        if (is_bipartite(g)) {
            continue;
        }
        ++tested;
        const std::size_t ell = *brute::odd_cycle_lengths(g).rbegin();
        const ComposedColoring c = compose_bands(g, ell, ff, first_fit_girth5_bound());
        check_proper(g, c);
        CHECK(static_cast<double>(c.coloring.colors_used()) <= 3.0 * 2.0 * std::sqrt(static_cast<double>(ell + 1)));
    }
}

TEST_CASE("recursive composition") {
    const Graph p = path_graph(7);
    const ComposedColoring one = compose_recursive(p, FirstFitPathColorer(2));
    check_proper(p, one);
    CHECK(one.coloring.colors_used() <= 2);
    CHECK(one.bound.value == 2);

    const Graph tree = binary_tree(3);
    const ComposedColoring bt = compose_recursive(tree, ExactPathColorer(2));
    check_proper(tree, bt);
    CHECK(bt.coloring.colors_used() <= 2 * 4);

    const Graph gr = groetzsch();
    const std::size_t k = max_root_path_chromatic(gr);
    const ComposedColoring c = compose_recursive(gr, ExactPathColorer(k));
    check_proper(gr, c);
    CHECK(c.quoted_bound.admits(c.coloring.colors_used()));

    CHECK_THROWS_AS(compose_recursive(complete_graph(3), FirstFitPathColorer(2)), ContractViolation);
}

TEST_CASE("recursive composition bound per component") {
    for (const Graph &g : corpus::any_graphs(80, 1, 12, 45)) {
        const std::size_t k = max_root_path_chromatic(g);
        const ComposedColoring c = compose_recursive(g, ExactPathColorer(k));
        check_proper(g, c);
        CHECK(c.bound.admits(c.coloring.colors_used()));
        for (const DfsTree &t : dfs_forest(g)) {
            std::set<Color> used;
            std::size_t leaves = 0;
            for (Vertex v : t.preorder) {
                used.insert(c.coloring.colors[v]);
                leaves += t.is_leaf(v) ? 1 : 0;
            }
            CHECK(used.size() <= k * static_cast<std::size_t>(std::bit_width(leaves)));
        }
    }
}

TEST_CASE("level parity composition") {
    for (const Graph &g : corpus::any_graphs(100, 1, 10, 46)) {
        const std::size_t L = brute::odd_cycle_lengths(g).size();
        const ComposedColoring c = compose_level_parity(g, L);
        check_proper(g, c);
        CHECK(c.coloring.colors_used() <= 2 * L + 2);
    }
}
