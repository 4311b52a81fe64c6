#include "dfscolor/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>
#include <unordered_map>

namespace dfscolor {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
    edges_.reserve(edges.size());
    for (const Edge &e : edges) {
        if (e.u == e.v) {
            throw StructuralError("self-loop at vertex " + std::to_string(e.u));
        }
        if (e.v >= n) {
            throw StructuralError("edge endpoint " + std::to_string(e.v) + " out of range for " +
                                  std::to_string(n) + " vertices");
        }
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (const Edge &e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto &list : adj_) {
        std::sort(list.begin(), list.end());
    }
}

namespace {
std::vector<Edge> to_edges(std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
    std::vector<Edge> out;
    out.reserve(pairs.size());
    for (auto [a, b] : pairs) {
        if (a == b) {
            throw StructuralError("self-loop at vertex " + std::to_string(a));
        }
        out.emplace_back(a, b);
    }
    return out;
}
} // namespace

Graph::Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(n, to_edges(edges)) {}

bool Graph::adjacent(Vertex a, Vertex b) const {
    const auto &list = adj_.at(a);
    return std::binary_search(list.begin(), list.end(), b);
}

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (const auto &list : adj_) {
        best = std::max(best, list.size());
    }
    return best;
}

InducedSubgraph induced_subgraph(const Graph &g, std::span<const Vertex> vertices) {
    std::unordered_map<Vertex, Vertex> local;
    local.reserve(vertices.size());
    for (Vertex i = 0; i < vertices.size(); ++i) {
        local.emplace(vertices[i], i);
    }
    std::vector<Edge> edges;
    for (Vertex i = 0; i < vertices.size(); ++i) {
        for (Vertex w : g.neighbors(vertices[i])) {
            auto it = local.find(w);
            if (it != local.end() && i < it->second) {
                edges.emplace_back(i, it->second);
            }
        }
    }
    return {Graph(vertices.size(), edges), std::vector<Vertex>(vertices.begin(), vertices.end())};
}

std::vector<std::vector<Vertex>> connected_components(const Graph &g) {
    std::vector<std::vector<Vertex>> out;
    std::vector<bool> seen(g.order(), false);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s]) {
            continue;
        }
        std::vector<Vertex> comp{s};
        seen[s] = true;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            for (Vertex w : g.neighbors(comp[head])) {
                if (!seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph &g) { return connected_components(g).size() <= 1; }

std::optional<std::vector<int>> bipartition(const Graph &g) {
    std::vector<int> side(g.order(), -1);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (side[s] != -1) {
            continue;
        }
        side[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : g.neighbors(v)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    q.push(w);
                } else if (side[w] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

std::optional<std::size_t> girth(const Graph &g) {
    constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
    std::size_t best = kInf;
    std::vector<std::size_t> dist(g.order());
    std::vector<Vertex> parent(g.order());
    for (Vertex s = 0; s < g.order(); ++s) {
        std::fill(dist.begin(), dist.end(), kInf);
        dist[s] = 0;
        parent[s] = s;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            if (2 * dist[v] + 1 >= best) {
                break;
            }
            for (Vertex w : g.neighbors(v)) {
                if (dist[w] == kInf) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push(w);
                } else if (parent[v] != w) {
                    best = std::min(best, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    if (best == kInf) {
        return std::nullopt;
    }
    return best;
}

bool is_independent(const Graph &g, std::span<const Vertex> vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (g.adjacent(vertices[i], vertices[j])) {
                return false;
            }
        }
    }
    return true;
}

std::size_t Coloring::colors_used() const {
    std::vector<Color> sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

Coloring Coloring::from_colors(std::vector<Color> colors) {
    std::size_t palette = 0;
    for (Color c : colors) {
        palette = std::max(palette, c + 1);
    }
    return {std::move(colors), palette};
}

ColoringVerdict validate_coloring(const Graph &g, const Coloring &c) {
    if (c.colors.size() != g.order()) {
        throw StructuralError("coloring has " + std::to_string(c.colors.size()) + " entries for " +
                              std::to_string(g.order()) + " vertices");
    }
    for (Vertex v = 0; v < c.colors.size(); ++v) {
        if (c.colors[v] >= c.palette_size) {
            throw StructuralError("vertex " + std::to_string(v) + " has color " + std::to_string(c.colors[v]) +
                                  " outside palette of size " + std::to_string(c.palette_size));
        }
    }
    for (const Edge &e : g.edges()) {
        if (c.colors[e.u] == c.colors[e.v]) {
            return {false, e};
        }
    }
    return {true, std::nullopt};
}

Coloring compact(const Coloring &c) {
    std::unordered_map<Color, Color> relabel;
    std::vector<Color> out;
    out.reserve(c.colors.size());
    for (Color col : c.colors) {
        auto [it, inserted] = relabel.try_emplace(col, relabel.size());
        out.push_back(it->second);
    }
    return {std::move(out), relabel.size()};
}

bool is_simple_cycle(const Graph &g, std::span<const Vertex> cycle) {
    if (cycle.size() < 3) {
        return false;
    }
    std::vector<Vertex> sorted(cycle.begin(), cycle.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.back() >= g.order()) {
        return false;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (!g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()])) {
            return false;
        }
    }
    return true;
}

} // namespace dfscolor
