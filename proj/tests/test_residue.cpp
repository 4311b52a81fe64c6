#include <doctest.h>

#include <set>

#include "dfscolor/generators.hpp"
#include "dfscolor/residue.hpp"
#include "support/brute.hpp"
#include "support/corpus.hpp"

using namespace dfscolor;

namespace {

std::size_t lengths_with_residue(const Graph &g, std::size_t k, std::size_t residue) {
    std::size_t count = 0;
    for (std::size_t l : brute::cycle_lengths(g)) {
        count += l % k == residue % k ? 1 : 0;
    }
    return count;
}

// Witness cycles must be genuine, carry the residue and have distinct lengths.
void check_witness(const Graph &g, const HypothesisViolation &e, std::size_t k, std::size_t residue,
                   std::size_t expected) {
    std::set<std::size_t> lengths;
    for (const auto &c : e.witness()) {
        const std::size_t len = brute::simple_cycle_length(g, c);
        REQUIRE(len > 0);
        CHECK(len % k == residue % k);
        lengths.insert(len);
    }
    CHECK(lengths.size() == e.witness().size());
    CHECK(e.witness().size() == expected);
}

} // namespace

TEST_CASE("residue classes partition by depth") {
    const Graph p = path_graph(7);
    const auto forest = dfs_forest(p);
    const ResidueClasses rc = residue_classes(forest, p.order(), 3);
    CHECK(rc.classes[0] == std::vector<Vertex>{0, 3, 6});
    CHECK(rc.classes[2] == std::vector<Vertex>{2, 5});
    CHECK_THROWS_AS(residue_classes(forest, p.order(), 1), ParameterError);
}

TEST_CASE("few lengths one more than a multiple of k") {
    const Graph c5 = cycle_graph(5);
    const ComposedColoring c = color_residue1(c5, 4, 1);
    CHECK(brute::proper(c5, c.coloring.colors));
    CHECK(c.bound.value == 8);
    // Classes {0,4}, {1}, {2}, {3}; the edge 0-4 needs a second color.
    CHECK(c.coloring.colors_used() == 5);

    const Graph tree = binary_tree(3);
    for (std::size_t k = 2; k <= 5; ++k) {
        CHECK(color_residue1(tree, k, 0).coloring.colors_used() <= k);
    }
    CHECK_THROWS_AS(color_residue1(c5, 1, 0), ParameterError);
}

TEST_CASE("k = 2 recovers the odd-length-count bound") {
    for (const Graph &g : corpus::any_graphs(80, 1, 10, 50)) {
        const std::size_t L = brute::odd_cycle_lengths(g).size();
        const ComposedColoring c = color_residue1(g, 2, L);
        CHECK(brute::proper(g, c.coloring.colors));
        CHECK(c.coloring.colors_used() <= 2 * L + 2);
    }
}

TEST_CASE("few lengths two more than a multiple of k") {
    const Graph c6 = cycle_graph(6);
    const ComposedColoring c = color_residue2(c6, 4, 1);
    CHECK(brute::proper(c6, c.coloring.colors));
    CHECK(c.bound.value == 9);
    CHECK(c.coloring.colors_used() == 2);
}

TEST_CASE("no lengths three more than a multiple of k") {
    const Graph c5 = cycle_graph(5);
    const ComposedColoring c = color_residue3(c5, 3);
    CHECK(brute::proper(c5, c.coloring.colors));
    CHECK(c.bound.value == 6);
    CHECK(c.coloring.colors_used() == 3);

    const Graph c4 = cycle_graph(4);
    const ComposedColoring d = color_residue3(c4, 4);
    CHECK(brute::proper(c4, d.coloring.colors));
    CHECK(d.coloring.colors_used() == 4);

    // C7 has length 3 mod 4 but every class is still a forest.
    const Graph c7 = cycle_graph(7);
    CHECK(brute::proper(c7, color_residue3(c7, 4).coloring.colors));

    // K5 with k = 2: depths 0, 2, 4 form a triangle inside one class.
    const Graph k5 = complete_graph(5);
    try {
        color_residue3(k5, 2);
        FAIL("expected a hypothesis violation");
    } catch (const HypothesisViolation &e) {
        check_witness(k5, e, 2, 3, 1);
    }
}

TEST_CASE("residue colorings hold under their hypotheses and refute otherwise") {
    for (std::size_t k = 2; k <= 5; ++k) {
        for (const Graph &g : corpus::any_graphs(60, 3, 10, 500 + k)) {
            const std::size_t r = lengths_with_residue(g, k, 1);
            const ComposedColoring c1 = color_residue1(g, k, r);
            CHECK(brute::proper(g, c1.coloring.colors));
            CHECK(c1.coloring.colors_used() <= (r + 1) * k);
            if (r > 0) {
                try {
                    const ComposedColoring low = color_residue1(g, k, r - 1);
                    CHECK(brute::proper(g, low.coloring.colors));
                    CHECK(low.coloring.colors_used() <= r * k);
                } catch (const HypothesisViolation &e) {
                    check_witness(g, e, k, 1, r);
                }
            }

            const std::size_t s = lengths_with_residue(g, k, 2);
            const ComposedColoring c2 = color_residue2(g, k, s);
            CHECK(brute::proper(g, c2.coloring.colors));
            CHECK(c2.coloring.colors_used() <= s * k + k + 1);
            if (s > 0) {
                try {
                    const ComposedColoring low = color_residue2(g, k, s - 1);
                    CHECK(brute::proper(g, low.coloring.colors));
                    CHECK(low.coloring.colors_used() <= (s - 1) * k + k + 1);
                } catch (const HypothesisViolation &e) {
                    check_witness(g, e, k, 2, s);
                }
            }

            const bool none3 = lengths_with_residue(g, k, 3) == 0;
            try {
                const ComposedColoring c3 = color_residue3(g, k);
                CHECK(brute::proper(g, c3.coloring.colors));
                CHECK(c3.coloring.colors_used() <= 2 * k);
            } catch (const HypothesisViolation &e) {
                CHECK_FALSE(none3);
                check_witness(g, e, k, 3, 1);
            }
        }
    }
}

TEST_CASE("no cycle length divisible by three gives six colors") {
    std::size_t seen = 0;
    for (const Graph &g : corpus::any_graphs(300, 3, 10, 51)) {
        if (lengths_with_residue(g, 3, 0) != 0) {
            continue;
        }
        ++seen;
        const ComposedColoring c = color_residue3(g, 3);
        CHECK(brute::proper(g, c.coloring.colors));
        CHECK(c.coloring.colors_used() <= 6);
    }
    CHECK(seen > 0);
}
