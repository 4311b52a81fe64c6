#include "dfscolor/adversary.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "dfscolor/error.hpp"

namespace dfscolor {

Graph AdversaryTranscript::graph() const {
    std::vector<Edge> edges;
    for (std::size_t v = 0; v < steps.size(); ++v) {
        for (std::size_t u : steps[v].neighbors) {
            edges.push_back({std::min(u, v), std::max(u, v)});
        }
    }
    return Graph(steps.size(), edges);
}

std::size_t AdversaryTranscript::bins_used() const {
    std::set<Color> bins;
    for (const auto &s : steps) {
        bins.insert(s.bin);
    }
    return bins.size();
}

namespace {

// Per-bin bookkeeping: which true colors it holds.
struct BinState {
    std::vector<bool> has;
    std::size_t count = 0;
};

class Game {
public:
    explicit Game(std::size_t k) : k_(k), members_(k) {}

    // Index i is unsafe when class i is nonempty and some bin holds exactly
    // the colors of S_i: a new vertex joined to class i may land in that bin
    // and no color of S_i would be left for it.
    bool safe(std::size_t i) const {
        if (members_[i].empty()) {
            return true;
        }
        for (const auto &[bin, st] : bins_) {
            if (st.count == k_ - 1 && !st.has[i]) {
                return false;
            }
        }
        return true;
    }

    // Keeps `current` if safe, else the next safe index cyclically.
    std::optional<std::size_t> next_safe(std::size_t current) const {
        for (std::size_t d = 0; d < k_; ++d) {
            const std::size_t i = (current + d) % k_;
            if (safe(i)) {
                return i;
            }
        }
        return std::nullopt;
    }

    const std::vector<std::size_t> &members(std::size_t i) const { return members_[i]; }

    BinState &bin(Color b) {
        auto [it, fresh] = bins_.try_emplace(b);
        if (fresh) {
            it->second.has.assign(k_, false);
        }
        return it->second;
    }

    void record(std::size_t position, Color b, Color true_color) {
        BinState &st = bin(b);
        st.has[true_color] = true;
        ++st.count;
        members_[true_color].push_back(position);
    }

private:
    std::size_t k_;
    std::vector<std::vector<std::size_t>> members_;
    std::map<Color, BinState> bins_;
};

} // namespace

AdversaryTranscript run_adversary(const SessionFactory &algo, std::size_t k) {
    if (k == 0) {
        throw ParameterError("adversary needs k >= 1");
    }
    AdversaryTranscript t;
    t.k = k;
    Game game(k);
    auto session = algo();
    std::size_t index = 0;
    for (std::size_t pos = 0; pos < k * k; ++pos) {
        const auto chosen = game.next_safe(index);
        if (!chosen) {
            // Every index is blocked by a distinct (k-1)-color bin.
            throw ContractViolation("adversary stalled at vertex " + std::to_string(pos) + " with " +
                                    std::to_string(t.bins_used()) + " bins");
        }
        index = *chosen;
        AdversaryStep step;
        step.set_index = index;
        step.neighbors = game.members(index);
        const Color b = session->present(Arrival{step.neighbors, 0});
        for (std::size_t u : step.neighbors) {
            if (t.steps[u].bin == b) {
                throw ContractViolation(session->name() + " put vertex " + std::to_string(pos) +
                                        " in bin " + std::to_string(b) + " next to neighbor " + std::to_string(u));
            }
        }
        BinState &st = game.bin(b);
        std::optional<Color> c;
        for (Color x = 0; x < k; ++x) {
            if (x != index && !st.has[x]) {
                c = x;
                break;
            }
        }
        if (!c) {
            // Only reachable when class `index` is empty, so v has no
            // neighbors and may take the excluded color itself.
            c = index;
        }
        step.bin = b;
        step.true_color = *c;
        game.record(pos, b, *c);
        t.steps.push_back(std::move(step));
        if (game.bin(b).count == k) {
            index = (index + 1) % k;
        }
    }

    Presentation p;
    for (const auto &s : t.steps) {
        p.push_back({s.neighbors, 0});
    }
    const auto again = replay(algo, p);
    for (std::size_t i = 0; i < again.size(); ++i) {
        if (again[i] != t.steps[i].bin) {
            throw ContractViolation("algorithm is not deterministic: replay differs at vertex " + std::to_string(i));
        }
    }
    return t;
}

TranscriptVerdict verify_transcript(const AdversaryTranscript &t) {
    auto fail = [](std::string name, std::string detail, std::vector<Vertex> witness) {
        return TranscriptVerdict{false, std::move(name), std::move(detail), std::move(witness)};
    };
    const std::size_t n = t.steps.size();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t u : t.steps[v].neighbors) {
            if (u >= v) {
                return fail("references", "vertex " + std::to_string(v) + " names later position " + std::to_string(u),
                            {v, u});
            }
            adj[u][v] = adj[v][u] = true;
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (!adj[a][b]) {
                continue;
            }
            for (std::size_t c = b + 1; c < n; ++c) {
                if (adj[a][c] && adj[b][c]) {
                    return fail("triangle-free", "triangle", {a, b, c});
                }
            }
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (t.steps[v].true_color >= t.k) {
            return fail("true-colors", "vertex " + std::to_string(v) + " has true color " +
                                           std::to_string(t.steps[v].true_color) + " >= k",
                        {v});
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t u : t.steps[v].neighbors) {
            if (t.steps[u].true_color == t.steps[v].true_color) {
                return fail("true-proper", "edge with equal true colors", {u, v});
            }
            if (t.steps[u].bin == t.steps[v].bin) {
                return fail("bins-proper", "edge inside one bin", {u, v});
            }
        }
    }
    std::map<Color, std::vector<Vertex>> bins;
    for (std::size_t v = 0; v < n; ++v) {
        bins[t.steps[v].bin].push_back(v);
    }
    for (const auto &[b, members] : bins) {
        std::map<Color, Vertex> seen;
        for (Vertex v : members) {
            auto [it, fresh] = seen.emplace(t.steps[v].true_color, v);
            if (!fresh) {
                return fail("bin-distinct", "bin " + std::to_string(b) + " repeats a true color", {it->second, v});
            }
        }
        if (members.size() > t.k) {
            return fail("bin-size", "bin " + std::to_string(b) + " has " + std::to_string(members.size()) + " vertices",
                        members);
        }
    }
    if (bins.size() < t.k) {
        return fail("bins-used", std::to_string(bins.size()) + " bins < k = " + std::to_string(t.k), {});
    }
    return {};
}

void write_transcript(std::ostream &out, const AdversaryTranscript &t) {
    out << "k " << t.k << "\n";
    out << "steps " << t.steps.size() << "\n";
    for (const auto &s : t.steps) {
        if (s.neighbors.empty()) {
            out << '-';
        }
        for (std::size_t i = 0; i < s.neighbors.size(); ++i) {
            out << (i ? "," : "") << s.neighbors[i];
        }
        out << ' ' << s.bin << ' ' << s.true_color << ' ' << s.set_index << "\n";
    }
}

std::string to_text(const AdversaryTranscript &t) {
    std::ostringstream out;
    write_transcript(out, t);
    return out.str();
}

namespace {

std::size_t parse_number(const std::string &tok, std::size_t line) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw ParseError(line, "expected a non-negative integer, got '" + tok + "'");
    }
    try {
        return std::stoull(tok);
    } catch (const std::out_of_range &) {
        throw ParseError(line, "integer out of range: " + tok);
    }
}

} // namespace

AdversaryTranscript read_transcript(std::istream &in) {
    AdversaryTranscript t;
    std::optional<std::size_t> k;
    std::optional<std::size_t> count;
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        if (text.empty() || text.front() == '#') {
            continue;
        }
        std::istringstream ls(text);
        std::vector<std::string> tok;
        for (std::string w; ls >> w;) {
            tok.push_back(w);
        }
        if (tok.empty()) {
            continue;
        }
        if (!k) {
            if (tok.size() != 2 || tok[0] != "k") {
                throw ParseError(line, "expected 'k <k>'");
            }
            k = parse_number(tok[1], line);
            continue;
        }
        if (!count) {
            if (tok.size() != 2 || tok[0] != "steps") {
                throw ParseError(line, "expected 'steps <count>'");
            }
            count = parse_number(tok[1], line);
            continue;
        }
        if (tok.size() != 4) {
            throw ParseError(line, "expected '<neighbors> <bin> <true color> <set index>'");
        }
        AdversaryStep s;
        if (tok[0] != "-") {
            std::istringstream ns(tok[0]);
            for (std::string part; std::getline(ns, part, ',');) {
                s.neighbors.push_back(parse_number(part, line));
            }
        }
        s.bin = parse_number(tok[1], line);
        s.true_color = parse_number(tok[2], line);
        s.set_index = parse_number(tok[3], line);
        t.steps.push_back(std::move(s));
    }
    if (!k || !count) {
        throw ParseError(line, "missing header");
    }
    if (*count != t.steps.size()) {
        throw ParseError(line, "header announces " + std::to_string(*count) + " steps, found " +
                                   std::to_string(t.steps.size()));
    }
    t.k = *k;
    return t;
}

} // namespace dfscolor
