#pragma once

// Seeded graph corpora shared by the unit tests and the acceptance binary.
// Sizes and densities are drawn from the same seeded stream as the graphs,
// so every corpus is reproducible bit for bit.

#include <cstdint>
#include <random>
#include <vector>

#include "dfscolor/generators.hpp"
#include "dfscolor/graph.hpp"

namespace corpus {

using dfscolor::Graph;
using dfscolor::Vertex;

class Stream {
public:
    explicit Stream(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t word() { return rng_(); }
    double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
    /// Uniform in [lo, hi].
    std::size_t between(std::size_t lo, std::size_t hi) { return lo + static_cast<std::size_t>(rng_() % (hi - lo + 1)); }
    double between(double lo, double hi) { return lo + (hi - lo) * unit(); }

    /// Fisher-Yates over 0..n-1.
    std::vector<Vertex> permutation(std::size_t n) {
        std::vector<Vertex> p(n);
        for (Vertex i = 0; i < n; ++i) {
            p[i] = i;
        }
        for (std::size_t i = n; i > 1; --i) {
            std::swap(p[i - 1], p[static_cast<std::size_t>(rng_() % i)]);
        }
        return p;
    }

private:
    std::mt19937_64 rng_;
};

/// Connected graphs with an odd cycle, n in [4, max_n].
inline std::vector<Graph> connected_nonbipartite(std::size_t count, std::size_t max_n, std::uint64_t seed) {
    Stream s(seed);
    std::vector<Graph> out;
    while (out.size() < count) {
        const std::size_t n = s.between(std::size_t{4}, max_n);
        const double p = s.between(0.15, 0.7);
        Graph g = dfscolor::random_graph(n, p, s.word());
        if (dfscolor::is_connected(g) && !dfscolor::is_bipartite(g)) {
            out.push_back(std::move(g));
        }
    }
    return out;
}

/// Triangle-free graphs with an odd cycle, n in [5, max_n].
inline std::vector<Graph> triangle_free_nonbipartite(std::size_t count, std::size_t max_n, std::uint64_t seed) {
    Stream s(seed);
    std::vector<Graph> out;
    while (out.size() < count) {
        const std::size_t n = s.between(std::size_t{5}, max_n);
        const double p = s.between(0.2, 0.8);
        Graph g = dfscolor::random_triangle_free(n, p, s.word());
        if (!dfscolor::is_bipartite(g)) {
            out.push_back(std::move(g));
        }
    }
    return out;
}

/// Unconstrained G(n, p) with n in [min_n, max_n] and p in [0.1, 0.9].
inline std::vector<Graph> any_graphs(std::size_t count, std::size_t min_n, std::size_t max_n, std::uint64_t seed) {
    Stream s(seed);
    std::vector<Graph> out;
    while (out.size() < count) {
        const std::size_t n = s.between(min_n, max_n);
        const double p = s.between(0.1, 0.9);
        out.push_back(dfscolor::random_graph(n, p, s.word()));
    }
    return out;
}

} // namespace corpus
