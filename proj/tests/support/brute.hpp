#pragma once

// Slow reference implementations used only as test oracles. They share no
// code with the library beyond the Graph type: cycles and paths are found by
// path extension over memoized (vertex set, endpoint) states, colorings and
// cliques by exhaustive enumeration.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <vector>

#include "dfscolor/graph.hpp"

namespace brute {

using dfscolor::Graph;
using dfscolor::Vertex;

inline std::vector<std::vector<bool>> matrix(const Graph &g) {
    std::vector<std::vector<bool>> a(g.order(), std::vector<bool>(g.order(), false));
    for (const auto &e : g.edges()) {
        a[e.u][e.v] = a[e.v][e.u] = true;
    }
    return a;
}

// Every simple cycle is found from its smallest vertex s, extending paths
// through vertices > s and closing back to s. A path state (vertex set,
// endpoint) is expanded once; its extensions do not depend on the order the
// set was walked in.
inline std::set<std::size_t> cycle_lengths(const Graph &g) {
    const auto a = matrix(g);
    const std::size_t n = g.order();
    std::set<std::size_t> out;
    std::vector<bool> expanded(n << n, false);
    auto extend = [&](auto &&self, Vertex s, Vertex v, std::size_t mask, std::size_t len) -> void {
        if (expanded[mask * n + v]) {
            return;
        }
        expanded[mask * n + v] = true;
        if (len >= 3 && a[v][s]) {
            out.insert(len);
        }
        for (Vertex w = s + 1; w < n; ++w) {
            if (a[v][w] && !(mask >> w & 1)) {
                self(self, s, w, mask | std::size_t{1} << w, len + 1);
            }
        }
    };
    for (Vertex s = 0; s < n; ++s) {
        extend(extend, s, s, std::size_t{1} << s, 1);
    }
    return out;
}

inline std::set<std::size_t> odd_cycle_lengths(const Graph &g) {
    std::set<std::size_t> out;
    for (std::size_t l : cycle_lengths(g)) {
        if (l % 2 == 1) {
            out.insert(l);
        }
    }
    return out;
}

/// Edges on a longest simple path.
inline std::size_t longest_path(const Graph &g) {
    const auto a = matrix(g);
    const std::size_t n = g.order();
    std::size_t best = 0;
    std::vector<bool> expanded(n << n, false);
    auto extend = [&](auto &&self, Vertex v, std::size_t mask, std::size_t len) -> void {
        if (expanded[mask * n + v]) {
            return;
        }
        expanded[mask * n + v] = true;
        best = std::max(best, len);
        for (Vertex w = 0; w < n; ++w) {
            if (a[v][w] && !(mask >> w & 1)) {
                self(self, w, mask | std::size_t{1} << w, len + 1);
            }
        }
    };
    for (Vertex s = 0; s < n; ++s) {
        extend(extend, s, std::size_t{1} << s, 0);
    }
    return best;
}

inline bool colorable(const Graph &g, std::size_t k) {
    const std::size_t n = g.order();
    if (n == 0) {
        return true;
    }
    if (k == 0) {
        return false;
    }
    std::vector<std::size_t> c(n, 0);
    // Odometer over all k^n assignments.
    while (true) {
        bool ok = true;
        for (const auto &e : g.edges()) {
            if (c[e.u] == c[e.v]) {
                ok = false;
                break;
            }
        }
        if (ok) {
            return true;
        }
        std::size_t i = 0;
        while (i < n && ++c[i] == k) {
            c[i++] = 0;
        }
        if (i == n) {
            return false;
        }
    }
}

inline std::size_t chromatic_number(const Graph &g) {
    std::size_t k = 0;
    while (!colorable(g, k)) {
        ++k;
    }
    return k;
}

inline std::size_t clique_number(const Graph &g) {
    const auto a = matrix(g);
    const std::size_t n = g.order();
    std::size_t best = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<Vertex> s;
        for (Vertex v = 0; v < n; ++v) {
            if (mask >> v & 1) {
                s.push_back(v);
            }
        }
        if (s.size() <= best) {
            continue;
        }
        bool clique = true;
        for (std::size_t i = 0; i < s.size() && clique; ++i) {
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                if (!a[s[i]][s[j]]) {
                    clique = false;
                    break;
                }
            }
        }
        if (clique) {
            best = s.size();
        }
    }
    return best;
}

inline bool has_triangle(const Graph &g) {
    const auto a = matrix(g);
    const std::size_t n = g.order();
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = x + 1; y < n; ++y) {
            for (Vertex z = y + 1; z < n; ++z) {
                if (a[x][y] && a[y][z] && a[x][z]) {
                    return true;
                }
            }
        }
    }
    return false;
}

inline bool proper(const Graph &g, const std::vector<std::size_t> &colors) {
    if (colors.size() != g.order()) {
        return false;
    }
    for (const auto &e : g.edges()) {
        if (colors[e.u] == colors[e.v]) {
            return false;
        }
    }
    return true;
}

inline std::size_t distinct(const std::vector<std::size_t> &colors) {
    return std::set<std::size_t>(colors.begin(), colors.end()).size();
}

/// Length of the walk if `cycle` is a simple cycle of g, else 0.
inline std::size_t simple_cycle_length(const Graph &g, const std::vector<Vertex> &cycle) {
    if (cycle.size() < 3 || std::set<Vertex>(cycle.begin(), cycle.end()).size() != cycle.size()) {
        return 0;
    }
    const auto a = matrix(g);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const Vertex x = cycle[i];
        const Vertex y = cycle[(i + 1) % cycle.size()];
        if (x >= g.order() || y >= g.order() || !a[x][y]) {
            return 0;
        }
    }
    return cycle.size();
}

/// 2-connected: connected, at least 3 vertices, no vertex whose removal
/// disconnects the rest.
inline bool two_connected(const Graph &g) {
    const std::size_t n = g.order();
    if (n < 3) {
        return false;
    }
    const auto a = matrix(g);
    for (std::size_t removed = 0; removed <= n; ++removed) {
        std::vector<bool> seen(n, false);
        const Vertex start = removed == 0 ? 1 : 0;
        std::vector<Vertex> stack{start};
        seen[start] = true;
        if (removed < n) {
            seen[removed] = true;
        }
        std::size_t reached = 1;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w = 0; w < n; ++w) {
                if (a[v][w] && !seen[w]) {
                    seen[w] = true;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        if (reached != (removed < n ? n - 1 : n)) {
            return false;
        }
    }
    return true;
}

} // namespace brute
