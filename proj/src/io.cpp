#include "dfscolor/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

namespace dfscolor {

namespace {

std::vector<std::string> tokens(const std::string &line) {
    std::istringstream ls(line);
    std::vector<std::string> out;
    for (std::string w; ls >> w;) {
        out.push_back(w);
    }
    return out;
}

std::size_t number(const std::string &tok, std::size_t line) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw ParseError(line, "expected a non-negative integer, got '" + tok + "'");
    }
    try {
        return std::stoull(tok);
    } catch (const std::out_of_range &) {
        throw ParseError(line, "integer out of range: " + tok);
    }
}

std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

struct RawEdge {
    std::size_t u, v, line;
};

// Dedupes with warnings; self-loops are fatal.
std::vector<Edge> collect(const std::vector<RawEdge> &raw, std::vector<std::string> &warnings,
                          const std::map<std::size_t, Vertex> *reindex) {
    std::set<Edge> seen;
    std::vector<Edge> out;
    for (const RawEdge &r : raw) {
        if (r.u == r.v) {
            throw ParseError(r.line, "self-loop at vertex " + std::to_string(r.u));
        }
        const Vertex a = reindex ? reindex->at(r.u) : r.u;
        const Vertex b = reindex ? reindex->at(r.v) : r.v;
        if (!seen.insert(Edge(a, b)).second) {
            warnings.push_back("line " + std::to_string(r.line) + ": duplicate edge " + std::to_string(r.u) + " " +
                               std::to_string(r.v) + " ignored");
            continue;
        }
        out.emplace_back(a, b);
    }
    return out;
}

GraphDocument parse_edgelist(std::istream &in) {
    GraphDocument doc;
    std::vector<RawEdge> raw;
    std::optional<std::size_t> hint;
    std::size_t hint_line = 0;
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        const std::string t = trim(text);
        if (t.empty()) {
            continue;
        }
        if (t.front() == '#') {
            const std::string body = trim(t.substr(1));
            if (body.rfind("name:", 0) == 0) {
                doc.name = trim(body.substr(5));
            } else if (body.rfind("provenance:", 0) == 0) {
                doc.provenance = trim(body.substr(11));
            } else if (body.rfind("n:", 0) == 0) {
                hint = number(trim(body.substr(2)), line);
                hint_line = line;
            }
            continue;
        }
        const auto tok = tokens(t.substr(0, t.find('#')));
        if (tok.size() != 2) {
            throw ParseError(line, "expected 'u v', got '" + t + "'");
        }
        raw.push_back({number(tok[0], line), number(tok[1], line), line});
    }
    std::set<std::size_t> ids;
    for (const RawEdge &r : raw) {
        ids.insert(r.u);
        ids.insert(r.v);
    }
    if (hint) {
        if (!ids.empty() && *ids.rbegin() >= *hint) {
            throw ParseError(hint_line, "vertex " + std::to_string(*ids.rbegin()) + " does not fit n = " +
                                            std::to_string(*hint));
        }
        doc.graph = Graph(*hint, collect(raw, doc.warnings, nullptr));
        return doc;
    }
    const bool dense = ids.empty() || *ids.rbegin() + 1 == ids.size();
    if (dense) {
        doc.graph = Graph(ids.size(), collect(raw, doc.warnings, nullptr));
        return doc;
    }
    Vertex next = 0;
    for (std::size_t id : ids) {
        doc.reindex.emplace(id, next++);
    }
    doc.warnings.push_back("vertex ids have gaps; re-indexed " + std::to_string(ids.size()) + " ids densely");
    doc.graph = Graph(ids.size(), collect(raw, doc.warnings, &doc.reindex));
    return doc;
}

GraphDocument parse_dimacs(std::istream &in) {
    GraphDocument doc;
    std::vector<RawEdge> raw;
    std::optional<std::size_t> n;
    std::size_t declared_m = 0;
    std::size_t problem_line = 0;
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        const auto tok = tokens(text);
        if (tok.empty() || tok[0] == "c") {
            continue;
        }
        if (tok[0] == "p") {
            if (n) {
                throw ParseError(line, "second problem line");
            }
            if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col")) {
                throw ParseError(line, "expected 'p edge n m'");
            }
            n = number(tok[2], line);
            declared_m = number(tok[3], line);
            problem_line = line;
            continue;
        }
        if (tok[0] == "e") {
            if (!n) {
                throw ParseError(line, "edge before the problem line");
            }
            if (tok.size() != 3) {
                throw ParseError(line, "expected 'e u v'");
            }
            const std::size_t u = number(tok[1], line);
            const std::size_t v = number(tok[2], line);
            if (u == 0 || v == 0 || u > *n || v > *n) {
                throw ParseError(line, "vertex out of range 1.." + std::to_string(*n));
            }
            raw.push_back({u - 1, v - 1, line});
            continue;
        }
        throw ParseError(line, "unknown line type '" + tok[0] + "'");
    }
    if (!n) {
        throw ParseError(line, "missing 'p edge n m' line");
    }
    auto edges = collect(raw, doc.warnings, nullptr);
    if (raw.size() != declared_m) {
        doc.warnings.push_back("line " + std::to_string(problem_line) + ": header declares " +
                               std::to_string(declared_m) + " edges, found " + std::to_string(raw.size()));
    }
    doc.graph = Graph(*n, edges);
    return doc;
}

} // namespace

GraphDocument parse_graph(std::istream &in, GraphFormat format) {
    return format == GraphFormat::dimacs ? parse_dimacs(in) : parse_edgelist(in);
}

GraphDocument parse_graph(const std::string &text, GraphFormat format) {
    std::istringstream in(text);
    return parse_graph(in, format);
}

GraphDocument load_graph(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open " + path);
    }
    const auto ends_with = [&](const std::string &suffix) {
        return path.size() >= suffix.size() && path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
    };
    const GraphFormat format = ends_with(".col") || ends_with(".dimacs") ? GraphFormat::dimacs : GraphFormat::edgelist;
    GraphDocument doc = parse_graph(in, format);
    if (doc.provenance.empty()) {
        doc.provenance = "file:" + path;
    }
    if (doc.name.empty()) {
        doc.name = path.substr(path.find_last_of('/') + 1);
    }
    return doc;
}

void emit_edgelist(std::ostream &out, const GraphDocument &doc) {
    if (!doc.name.empty()) {
        out << "# name: " << doc.name << "\n";
    }
    if (!doc.provenance.empty()) {
        out << "# provenance: " << doc.provenance << "\n";
    }
    out << "# n: " << doc.graph.order() << "\n";
    for (const Edge &e : doc.graph.edges()) {
        out << e.u << ' ' << e.v << "\n";
    }
}

std::string to_edgelist(const GraphDocument &doc) {
    std::ostringstream out;
    emit_edgelist(out, doc);
    return out.str();
}

void emit_dimacs(std::ostream &out, const GraphDocument &doc) {
    if (!doc.name.empty()) {
        out << "c name: " << doc.name << "\n";
    }
    out << "p edge " << doc.graph.order() << ' ' << doc.graph.size() << "\n";
    for (const Edge &e : doc.graph.edges()) {
        out << "e " << e.u + 1 << ' ' << e.v + 1 << "\n";
    }
}

Coloring parse_coloring(std::istream &in, std::size_t order) {
    std::vector<std::optional<Color>> colors(order);
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        const std::string t = trim(text.substr(0, text.find('#')));
        if (t.empty()) {
            continue;
        }
        const auto tok = tokens(t);
        if (tok.size() != 2) {
            throw ParseError(line, "expected 'v c'");
        }
        const std::size_t v = number(tok[0], line);
        if (v >= order) {
            throw ParseError(line, "vertex " + std::to_string(v) + " out of range");
        }
        if (colors[v]) {
            throw ParseError(line, "vertex " + std::to_string(v) + " colored twice");
        }
        colors[v] = number(tok[1], line);
    }
    std::vector<Color> flat(order);
    for (Vertex v = 0; v < order; ++v) {
        if (!colors[v]) {
            throw ParseError(line, "vertex " + std::to_string(v) + " has no color");
        }
        flat[v] = *colors[v];
    }
    return Coloring::from_colors(std::move(flat));
}

void emit_coloring(std::ostream &out, const Coloring &c) {
    for (Vertex v = 0; v < c.colors.size(); ++v) {
        out << v << ' ' << c.colors[v] << "\n";
    }
}

} // namespace dfscolor
