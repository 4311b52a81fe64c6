#include "dfscolor/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>

namespace dfscolor {

namespace {

void check_budget(const Graph &g, std::size_t limit) {
    if (g.order() > limit) {
        throw BudgetExceeded(g.order(), limit);
    }
}

void check_table_cap(std::size_t vertices) {
    if (vertices > kSubsetTableCap) {
        throw BudgetExceeded(vertices, kSubsetTableCap);
    }
}

// Lengths of cycles whose smallest vertex is local index 0..m-1, in a graph
// given as neighbor bitmasks. dp[mask] holds the endpoints v such that some
// path from the start through exactly `mask` ends at v.
void collect_cycle_lengths(const std::vector<std::uint32_t> &nbr, std::set<std::size_t> &out) {
    const std::size_t n = nbr.size();
    for (std::size_t s = 0; s + 2 < n; ++s) {
        const std::size_t m = n - s - 1;
        const auto shift = static_cast<unsigned>(s + 1);
        std::vector<std::uint32_t> local(m);
        for (std::size_t i = 0; i < m; ++i) {
            local[i] = nbr[s + 1 + i] >> shift;
        }
        const std::uint32_t from_start = nbr[s] >> shift;
        if (std::popcount(from_start) < 2) {
            continue;
        }
        std::vector<std::uint32_t> dp(std::size_t{1} << m, 0);
        for (std::size_t i = 0; i < m; ++i) {
            if (from_start >> i & 1U) {
                dp[std::size_t{1} << i] = std::uint32_t{1} << i;
            }
        }
        for (std::size_t mask = 1; mask < dp.size(); ++mask) {
            std::uint32_t ends = dp[mask];
            if (ends == 0) {
                continue;
            }
            const auto len = static_cast<std::size_t>(std::popcount(static_cast<std::uint32_t>(mask)));
            if (len >= 2 && (ends & from_start) != 0) {
                out.insert(len + 1);
            }
            while (ends != 0) {
                const int v = std::countr_zero(ends);
                ends &= ends - 1;
                std::uint32_t ext = local[static_cast<std::size_t>(v)] & ~static_cast<std::uint32_t>(mask);
                while (ext != 0) {
                    const int u = std::countr_zero(ext);
                    ext &= ext - 1;
                    dp[mask | (std::size_t{1} << u)] |= std::uint32_t{1} << u;
                }
            }
        }
    }
}

std::vector<std::uint32_t> neighbor_masks(const Graph &g, std::span<const Vertex> vertices) {
    std::vector<std::uint32_t> masks(vertices.size(), 0);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = 0; j < vertices.size(); ++j) {
            if (g.adjacent(vertices[i], vertices[j])) {
                masks[i] |= std::uint32_t{1} << j;
            }
        }
    }
    return masks;
}

} // namespace

std::set<std::size_t> cycle_spectrum(const Graph &g, std::size_t limit) {
    check_budget(g, limit);
    std::set<std::size_t> spectrum;
    // Every cycle lies inside one block.
    for (const Block &b : blocks(g).blocks) {
        if (b.vertices.size() < 3) {
            continue;
        }
        check_table_cap(b.vertices.size());
        collect_cycle_lengths(neighbor_masks(g, b.vertices), spectrum);
    }
    return spectrum;
}

std::size_t longest_path_edges(const Graph &g, std::size_t limit) {
    check_budget(g, limit);
    std::size_t best = 0;
    for (const auto &comp : connected_components(g)) {
        if (comp.size() <= 1 + best) {
            continue;
        }
        check_table_cap(comp.size());
        const auto nbr = neighbor_masks(g, comp);
        const std::size_t m = comp.size();
        std::vector<std::uint32_t> reach(std::size_t{1} << m, 0);
        for (std::size_t i = 0; i < m; ++i) {
            reach[std::size_t{1} << i] = std::uint32_t{1} << i;
        }
        for (std::size_t mask = 1; mask < reach.size(); ++mask) {
            std::uint32_t ends = reach[mask];
            if (ends == 0) {
                continue;
            }
            const auto count = static_cast<std::size_t>(std::popcount(static_cast<std::uint32_t>(mask)));
            best = std::max(best, count - 1);
            while (ends != 0) {
                const int v = std::countr_zero(ends);
                ends &= ends - 1;
                std::uint32_t ext = nbr[static_cast<std::size_t>(v)] & ~static_cast<std::uint32_t>(mask);
                while (ext != 0) {
                    const int u = std::countr_zero(ext);
                    ext &= ext - 1;
                    reach[mask | (std::size_t{1} << u)] |= std::uint32_t{1} << u;
                }
            }
        }
    }
    return best;
}

CycleStats cycle_stats(const Graph &g, std::size_t limit) {
    CycleStats s;
    s.spectrum = cycle_spectrum(g, limit);
    for (std::size_t len : s.spectrum) {
        if (len % 2 == 1) {
            s.odd_lengths.insert(len);
        }
    }
    if (!s.spectrum.empty()) {
        s.girth = *s.spectrum.begin();
    }
    if (!s.odd_lengths.empty()) {
        s.odd_circumference = *s.odd_lengths.rbegin();
    }
    s.longest_path = longest_path_edges(g, limit);
    return s;
}

std::size_t odd_circumference(const Graph &g, std::size_t limit) {
    if (is_bipartite(g)) {
        throw NoOddCycle();
    }
    const auto spectrum = cycle_spectrum(g, limit);
    for (auto it = spectrum.rbegin(); it != spectrum.rend(); ++it) {
        if (*it % 2 == 1) {
            return *it;
        }
    }
    throw NoOddCycle();
}

// ---------------------------------------------------------------------------
// Chromatic number: DSATUR-ordered backtracking for a fixed k.

namespace {

class KColorSearch {
public:
    KColorSearch(const Graph &g, std::size_t k) : g_(g), k_(k), color_(g.order(), kNone) {}

    bool run() { return g_.order() == 0 || extend(0, 0); }

    std::vector<Color> colors() const { return {color_.begin(), color_.end()}; }

private:
    static constexpr Color kNone = static_cast<Color>(-1);

    Vertex pick() const {
        Vertex best = kNone;
        std::size_t best_sat = 0;
        std::size_t best_deg = 0;
        std::vector<bool> seen(k_, false);
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (color_[v] != kNone) {
                continue;
            }
            std::fill(seen.begin(), seen.end(), false);
            std::size_t sat = 0;
            for (Vertex w : g_.neighbors(v)) {
                if (color_[w] != kNone && !seen[color_[w]]) {
                    seen[color_[w]] = true;
                    ++sat;
                }
            }
            if (best == kNone || sat > best_sat || (sat == best_sat && g_.degree(v) > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = g_.degree(v);
            }
        }
        return best;
    }

    bool extend(std::size_t colored, std::size_t used) {
        if (colored == g_.order()) {
            return true;
        }
        const Vertex v = pick();
        const std::size_t top = std::min(k_, used + 1);
        for (Color c = 0; c < top; ++c) {
            bool clash = false;
            for (Vertex w : g_.neighbors(v)) {
                if (color_[w] == c) {
                    clash = true;
                    break;
                }
            }
            if (clash) {
                continue;
            }
            color_[v] = c;
            if (extend(colored + 1, std::max(used, c + 1))) {
                return true;
            }
            color_[v] = kNone;
        }
        return false;
    }

    const Graph &g_;
    std::size_t k_;
    std::vector<Color> color_;
};

} // namespace

std::optional<Coloring> k_coloring(const Graph &g, std::size_t k, std::size_t limit) {
    check_budget(g, limit);
    if (k == 0) {
        return g.order() == 0 ? std::optional<Coloring>(Coloring{}) : std::nullopt;
    }
    KColorSearch search(g, k);
    if (!search.run()) {
        return std::nullopt;
    }
    return Coloring{search.colors(), k};
}

ChromaticResult chromatic_number_exact(const Graph &g, std::size_t limit) {
    check_budget(g, limit);
    if (g.order() == 0) {
        return {0, Coloring{}};
    }
    std::size_t k = g.size() == 0 ? 1 : (is_bipartite(g) ? 2 : 3);
    for (;; ++k) {
        if (auto c = k_coloring(g, k, limit)) {
            c->palette_size = k;
            return {k, std::move(*c)};
        }
    }
}

// ---------------------------------------------------------------------------
// Clique number: Bron-Kerbosch with pivoting.

namespace {

void bron_kerbosch(const Graph &g, std::vector<Vertex> &current, std::vector<Vertex> candidates,
                   std::vector<Vertex> excluded, std::vector<Vertex> &best) {
    if (candidates.empty() && excluded.empty()) {
        if (current.size() > best.size()) {
            best = current;
        }
        return;
    }
    if (current.size() + candidates.size() <= best.size()) {
        return;
    }
    Vertex pivot = candidates.empty() ? excluded.front() : candidates.front();
    std::size_t pivot_hits = 0;
    for (const auto *pool : {&candidates, &excluded}) {
        for (Vertex u : *pool) {
            std::size_t hits = 0;
            for (Vertex c : candidates) {
                hits += g.adjacent(u, c) ? 1 : 0;
            }
            if (hits > pivot_hits) {
                pivot = u;
                pivot_hits = hits;
            }
        }
    }
    std::vector<Vertex> branch;
    for (Vertex c : candidates) {
        if (!g.adjacent(pivot, c)) {
            branch.push_back(c);
        }
    }
    for (Vertex v : branch) {
        std::vector<Vertex> next_cand;
        std::vector<Vertex> next_excl;
        for (Vertex c : candidates) {
            if (g.adjacent(v, c)) {
                next_cand.push_back(c);
            }
        }
        for (Vertex x : excluded) {
            if (g.adjacent(v, x)) {
                next_excl.push_back(x);
            }
        }
        current.push_back(v);
        bron_kerbosch(g, current, std::move(next_cand), std::move(next_excl), best);
        current.pop_back();
        candidates.erase(std::find(candidates.begin(), candidates.end(), v));
        excluded.push_back(v);
    }
}

} // namespace

CliqueResult clique_number_exact(const Graph &g, std::size_t limit) {
    check_budget(g, limit);
    std::vector<Vertex> all(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        all[v] = v;
    }
    std::vector<Vertex> current;
    std::vector<Vertex> best;
    bron_kerbosch(g, current, std::move(all), {}, best);
    std::sort(best.begin(), best.end());
    return {best.size(), best};
}

// ---------------------------------------------------------------------------

SubgraphCheck forbidden_subgraph_check(const Graph &g, Forbidden which, std::size_t limit) {
    if (which == Forbidden::triangle) {
        for (const Edge &e : g.edges()) {
            const auto &a = g.neighbors(e.u);
            const auto &b = g.neighbors(e.v);
            std::vector<Vertex> common;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
            if (!common.empty()) {
                return {true, {e.u, e.v, common.front()}};
            }
        }
        return {};
    }
    check_budget(g, limit);
    // A C5 a-b-c-d-e with a its smallest vertex.
    std::vector<Vertex> path;
    std::function<bool(Vertex)> grow = [&](Vertex v) {
        if (path.size() == 5) {
            return g.adjacent(v, path.front());
        }
        for (Vertex w : g.neighbors(v)) {
            if (w <= path.front() || std::find(path.begin(), path.end(), w) != path.end()) {
                continue;
            }
            path.push_back(w);
            if (grow(w)) {
                return true;
            }
            path.pop_back();
        }
        return false;
    };
    for (Vertex a = 0; a < g.order(); ++a) {
        path.assign(1, a);
        if (grow(a)) {
            return {true, path};
        }
    }
    return {};
}

// ---------------------------------------------------------------------------
// Block-cut decomposition (Hopcroft-Tarjan, iterative).

BlockDecomposition blocks(const Graph &g) {
    constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
    const std::size_t n = g.order();
    std::vector<std::size_t> disc(n, kUnseen);
    std::vector<std::size_t> low(n, 0);
    std::vector<Vertex> parent(n, kUnseen);
    std::vector<bool> is_cut(n, false);
    std::vector<Edge> edge_stack;
    BlockDecomposition out;
    std::size_t clock = 0;

    auto emit_block = [&](Vertex p, Vertex child) {
        Block b;
        const Edge stop(p, child);
        while (true) {
            Edge e = edge_stack.back();
            edge_stack.pop_back();
            b.edges.push_back(e);
            b.vertices.push_back(e.u);
            b.vertices.push_back(e.v);
            if (e == stop) {
                break;
            }
        }
        std::sort(b.edges.begin(), b.edges.end());
        std::sort(b.vertices.begin(), b.vertices.end());
        b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
        out.blocks.push_back(std::move(b));
    };

    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] != kUnseen) {
            continue;
        }
        if (g.degree(root) == 0) {
            disc[root] = clock++;
            out.blocks.push_back(Block{{root}, {}});
            continue;
        }
        std::size_t root_children = 0;
        std::vector<std::pair<Vertex, std::size_t>> frames{{root, 0}};
        disc[root] = low[root] = clock++;
        while (!frames.empty()) {
            auto &[v, idx] = frames.back();
            const auto &nbrs = g.neighbors(v);
            if (idx < nbrs.size()) {
                const Vertex w = nbrs[idx++];
                if (disc[w] == kUnseen) {
                    parent[w] = v;
                    edge_stack.emplace_back(v, w);
                    disc[w] = low[w] = clock++;
                    if (v == root) {
                        ++root_children;
                    }
                    frames.emplace_back(w, 0);
                } else if (w != parent[v] && disc[w] < disc[v]) {
                    edge_stack.emplace_back(v, w);
                    low[v] = std::min(low[v], disc[w]);
                }
                continue;
            }
            const Vertex done = v;
            frames.pop_back();
            if (done == root) {
                break;
            }
            const Vertex p = parent[done];
            low[p] = std::min(low[p], low[done]);
            if (low[done] >= disc[p]) {
                if (p != root) {
                    is_cut[p] = true;
                }
                emit_block(p, done);
            }
        }
        if (root_children >= 2) {
            is_cut[root] = true;
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (is_cut[v]) {
            out.cut_vertices.push_back(v);
        }
    }
    return out;
}

std::map<std::size_t, std::set<std::size_t>> residue_cycle_counts(const Graph &g, std::size_t k,
                                                                  std::size_t limit) {
    if (k == 0) {
        throw ParameterError("modulus must be positive");
    }
    std::map<std::size_t, std::set<std::size_t>> out;
    for (std::size_t r = 0; r < k; ++r) {
        out[r];
    }
    for (std::size_t len : cycle_spectrum(g, limit)) {
        out[len % k].insert(len);
    }
    return out;
}

} // namespace dfscolor
