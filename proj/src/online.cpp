#include "dfscolor/online.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace dfscolor {

Color OnlineSession::present(const Arrival &a) {
    for (std::size_t pos : a.earlier) {
        if (pos >= colors_.size()) {
            throw ContractViolation("arrival " + std::to_string(colors_.size()) + " references position " +
                                    std::to_string(pos) + " which has not been presented");
        }
    }
    const Color c = choose(a);
    colors_.push_back(c);
    return c;
}

std::size_t OnlineSession::colors_used() const { return Coloring{colors_, 0}.colors_used(); }

Color FirstFit::choose(const Arrival &a) {
    std::vector<bool> taken(a.earlier.size() + 1, false);
    for (std::size_t pos : a.earlier) {
        const Color c = colors()[pos];
        if (c < taken.size()) {
            taken[c] = true;
        }
    }
    return static_cast<Color>(std::find(taken.begin(), taken.end(), false) - taken.begin());
}

namespace {
void require_odd(std::size_t ell, std::size_t minimum, const char *who) {
    if (ell % 2 == 0 || ell < minimum) {
        throw ParameterError(std::string(who) + " needs an odd cycle length >= " + std::to_string(minimum) +
                             ", got " + std::to_string(ell));
    }
}
} // namespace

ModuloLevel::ModuloLevel(std::size_t ell) : ell_(ell) { require_odd(ell, 3, "modulo-level"); }

std::string ModuloLevel::name() const { return "modulo-level(ell=" + std::to_string(ell_) + ")"; }

Color ModuloLevel::choose(const Arrival &a) { return a.depth % (ell_ + 1); }

// Triangle-free graphs with an odd cycle have odd circumference >= 5.
QuadGroup::QuadGroup(std::size_t ell) : ell_(ell) { require_odd(ell, 5, "quad-group"); }

std::string QuadGroup::name() const { return "quad-group(ell=" + std::to_string(ell_) + ")"; }

std::size_t QuadGroup::period(std::size_t ell) { return ell % 4 == 1 ? ell + 3 : ell + 5; }

Color QuadGroup::color_at(std::size_t index, std::size_t ell) {
    const std::size_t i = index % period(ell);
    const std::size_t group = i / 4;
    return (i % 2 == 0) ? 2 * group : 2 * group + 1;
}

Color QuadGroup::choose(const Arrival &) { return color_at(seen(), ell_); }

SessionFactory make_factory(const AlgorithmSpec &spec) {
    return std::visit(
        [](const auto &s) -> SessionFactory {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, FirstFitSpec>) {
                return [] { return std::make_unique<FirstFit>(); };
            } else if constexpr (std::is_same_v<T, ModuloLevelSpec>) {
                ModuloLevel probe(s.ell);
                return [ell = s.ell] { return std::make_unique<ModuloLevel>(ell); };
            } else {
                QuadGroup probe(s.ell);
                return [ell = s.ell] { return std::make_unique<QuadGroup>(ell); };
            }
        },
        spec);
}

std::string describe(const AlgorithmSpec &spec) {
    return std::visit(
        [](const auto &s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, FirstFitSpec>) {
                return "first-fit";
            } else if constexpr (std::is_same_v<T, ModuloLevelSpec>) {
                return "modulo-level(ell=" + std::to_string(s.ell) + ")";
            } else {
                return "quad-group(ell=" + std::to_string(s.ell) + ")";
            }
        },
        spec);
}

Presentation present_in_order(const Graph &g, std::span<const Vertex> order,
                              std::span<const std::size_t> depth_tags) {
    std::vector<std::size_t> position(g.order(), kUnreached);
    Presentation p;
    p.reserve(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        PresentationStep step;
        for (Vertex w : g.neighbors(order[i])) {
            if (position[w] != kUnreached) {
                step.earlier.push_back(position[w]);
            }
        }
        std::sort(step.earlier.begin(), step.earlier.end());
        step.depth = depth_tags.empty() ? 0 : depth_tags[i];
        position[order[i]] = i;
        p.push_back(std::move(step));
    }
    return p;
}

std::vector<Color> replay(const SessionFactory &factory, const Presentation &p) {
    auto session = factory();
    for (const auto &step : p) {
        session->present(Arrival{step.earlier, step.depth});
    }
    return session->colors();
}

std::vector<Color> parity_greedy_levels(const Graph &g, const DfsTree &t, std::size_t odd_length_count) {
    const std::size_t level_count = t.preorder.empty() ? 0 : t.height() + 1;
    // (shallow level, deep level) -> one back edge (descendant, ancestor)
    // joining them. Tree edges join consecutive levels and never matter here.
    std::map<std::pair<std::size_t, std::size_t>, std::pair<Vertex, Vertex>> joined;
    for (auto [d, a] : t.back_edges) {
        if (!g.adjacent(d, a)) {
            throw StructuralError("tree does not belong to this graph");
        }
        const std::size_t lo = t.depth[a];
        const std::size_t hi = t.depth[d];
        if ((hi - lo) % 2 == 0) {
            joined.try_emplace({lo, hi}, d, a);
        }
    }
    const std::size_t width = odd_length_count + 1;
    std::vector<Color> out(level_count, 0);
    for (std::size_t i = 0; i < level_count; ++i) {
        const Color base = (i % 2 == 1) ? 0 : width;
        std::vector<bool> used(width, false);
        std::vector<std::pair<Vertex, Vertex>> witnesses;
        for (std::size_t j = i % 2; j < i; j += 2) {
            auto it = joined.find({j, i});
            if (it != joined.end()) {
                used[out[j] - base] = true;
                witnesses.push_back(it->second);
            }
        }
        const auto free = std::find(used.begin(), used.end(), false);
        if (free == used.end()) {
            std::vector<std::vector<Vertex>> cycles;
            for (auto [d, a] : witnesses) {
                cycles.push_back(t.descending_path(a, d));
            }
            throw HypothesisViolation("level " + std::to_string(i) + " is joined to " +
                                          std::to_string(witnesses.size()) +
                                          " earlier levels of its parity; the graph has more than " +
                                          std::to_string(odd_length_count) + " odd cycle lengths",
                                      std::move(cycles));
        }
        out[i] = base + static_cast<Color>(free - used.begin());
    }
    return out;
}

} // namespace dfscolor
