#include "dfscolor/generators.hpp"

#include <cctype>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <variant>
#include <vector>

namespace dfscolor {

Graph cycle_graph(std::size_t n) {
    if (n < 3) {
        throw ParameterError("cycle needs n >= 3");
    }
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i) {
        e.emplace_back(i, (i + 1) % n);
    }
    return Graph(n, e);
}

Graph path_graph(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < n; ++i) {
        e.emplace_back(i, i + 1);
    }
    return Graph(n, e);
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            e.emplace_back(i, j);
        }
    }
    return Graph(n, e);
}

Graph star_graph(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex i = 1; i < n; ++i) {
        e.emplace_back(0, i);
    }
    return Graph(n, e);
}

Graph binary_tree(std::size_t depth) {
    if (depth > 20) {
        throw ParameterError("binary tree depth above 20");
    }
    const std::size_t n = (std::size_t{1} << (depth + 1)) - 1;
    std::vector<Edge> e;
    for (Vertex i = 1; i < n; ++i) {
        e.emplace_back((i - 1) / 2, i);
    }
    return Graph(n, e);
}

Graph petersen() {
    std::vector<Edge> e;
    for (Vertex i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return Graph(10, e);
}

Graph mycielskian(const Graph &g) {
    const std::size_t n = g.order();
    std::vector<Edge> e(g.edges());
    for (const Edge &x : g.edges()) {
        e.emplace_back(x.u, x.v + n);
        e.emplace_back(x.v, x.u + n);
    }
    for (Vertex i = 0; i < n; ++i) {
        e.emplace_back(n + i, 2 * n);
    }
    return Graph(2 * n + 1, e);
}

Graph groetzsch() { return mycielskian(cycle_graph(5)); }

namespace {

double uniform01(std::mt19937_64 &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ParameterError("edge probability must lie in [0, 1]");
    }
}

// Adjacency kept both as a matrix (O(1) tests) and as lists (cheap scans).
struct Sampled {
    std::vector<std::vector<bool>> adj;
    std::vector<std::vector<Vertex>> nbrs;
};

// Samples pairs in lexicographic order and keeps those `keep` accepts given
// the graph built so far.
template <class Keep>
Graph sample(std::size_t n, double p, std::uint64_t seed, Keep &&keep) {
    check_probability(p);
    std::mt19937_64 rng(seed);
    Sampled s{std::vector<std::vector<bool>>(n, std::vector<bool>(n, false)), std::vector<std::vector<Vertex>>(n)};
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            if (uniform01(rng) < p && keep(s, i, j)) {
                s.adj[i][j] = s.adj[j][i] = true;
                s.nbrs[i].push_back(j);
                s.nbrs[j].push_back(i);
                e.emplace_back(i, j);
            }
        }
    }
    return Graph(n, e);
}

bool closes_triangle(const Sampled &s, Vertex a, Vertex b) {
    for (Vertex x : s.nbrs[a]) {
        if (s.adj[b][x]) {
            return true;
        }
    }
    return false;
}

bool closes_square(const Sampled &s, Vertex a, Vertex b) {
    for (Vertex x : s.nbrs[a]) {
        if (x == b) {
            continue;
        }
        for (Vertex y : s.nbrs[x]) {
            if (y != a && s.adj[y][b]) {
                return true;
            }
        }
    }
    return false;
}

} // namespace

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    return sample(n, p, seed, [](const auto &, Vertex, Vertex) { return true; });
}

Graph random_triangle_free(std::size_t n, double p, std::uint64_t seed) {
    return sample(n, p, seed, [](const auto &adj, Vertex a, Vertex b) { return !closes_triangle(adj, a, b); });
}

Graph random_girth5(std::size_t n, double p, std::uint64_t seed) {
    return sample(n, p, seed, [](const auto &adj, Vertex a, Vertex b) {
        return !closes_triangle(adj, a, b) && !closes_square(adj, a, b);
    });
}

// ---------------------------------------------------------------------------
// Expression parsing: family := name [ "(" arg { "," arg } ")" ],
// arg := number | family.

namespace {

using Arg = std::variant<double, Graph>;

class ExprParser {
public:
    explicit ExprParser(const std::string &s) : s_(s) {}

    Graph parse() {
        Graph g = family();
        skip();
        if (pos_ != s_.size()) {
            fail("trailing input");
        }
        return g;
    }

private:
    [[noreturn]] void fail(const std::string &msg) const {
        throw ParameterError("bad family expression '" + s_ + "' at offset " + std::to_string(pos_) + ": " + msg);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Arg arg() {
        skip();
        if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.' || s_[pos_] == 'e')) {
                ++pos_;
            }
            try {
                return std::stod(s_.substr(start, pos_ - start));
            } catch (const std::exception &) {
                fail("bad number");
            }
        }
        return family();
    }

    Graph family() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
            ++pos_;
        }
        const std::string name = s_.substr(start, pos_ - start);
        if (name.empty()) {
            fail("expected a family name");
        }
        std::vector<Arg> args;
        if (eat('(')) {
            if (!eat(')')) {
                do {
                    args.push_back(arg());
                } while (eat(','));
                if (!eat(')')) {
                    fail("expected ')'");
                }
            }
        }
        return build(name, args);
    }

    std::size_t count(const Arg &a) const {
        const double *d = std::get_if<double>(&a);
        if (!d || *d < 0 || std::floor(*d) != *d || *d > 1e6) {
            fail("expected a non-negative integer argument");
        }
        return static_cast<std::size_t>(*d);
    }

    double real(const Arg &a) const {
        const double *d = std::get_if<double>(&a);
        if (!d) {
            fail("expected a number");
        }
        return *d;
    }

    Graph build(const std::string &name, const std::vector<Arg> &args) const {
        const auto arity = [&](std::size_t k) {
            if (args.size() != k) {
                fail(name + " takes " + std::to_string(k) + " argument(s)");
            }
        };
        using Unary = Graph (*)(std::size_t);
        static const std::map<std::string, Unary> unary = {
            {"cycle", cycle_graph},   {"path", path_graph},          {"complete", complete_graph},
            {"star", star_graph},     {"binary_tree", binary_tree},
        };
        using Random = Graph (*)(std::size_t, double, std::uint64_t);
        static const std::map<std::string, Random> random = {
            {"random", random_graph},
            {"random_triangle_free", random_triangle_free},
            {"random_girth5", random_girth5},
        };
        if (auto it = unary.find(name); it != unary.end()) {
            arity(1);
            return it->second(count(args[0]));
        }
        if (auto it = random.find(name); it != random.end()) {
            arity(3);
            return it->second(count(args[0]), real(args[1]), count(args[2]));
        }
        if (name == "petersen") {
            arity(0);
            return petersen();
        }
        if (name == "groetzsch") {
            arity(0);
            return groetzsch();
        }
        if (name == "mycielskian") {
            arity(1);
            const Graph *g = std::get_if<Graph>(&args[0]);
            if (!g) {
                fail("mycielskian takes a graph");
            }
            return mycielskian(*g);
        }
        fail("unknown family '" + name + "'");
    }

    const std::string &s_;
    std::size_t pos_ = 0;
};

} // namespace

GraphDocument generate(const std::string &expression) {
    GraphDocument doc;
    doc.graph = ExprParser(expression).parse();
    doc.name = expression;
    doc.provenance = "gen:" + expression;
    return doc;
}

} // namespace dfscolor
