// dfscolor: analyze graphs, run the DFS/online colorings, play the
// adversary game and check certificates. Output is "key value" lines.
//
// Exit codes: 0 success/PASS, 1 usage or input error, 2 FAIL (bound,
// properness, hypothesis or contract), 3 oracle budget exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dfscolor/adversary.hpp"
#include "dfscolor/generators.hpp"
#include "dfscolor/io.hpp"
#include "dfscolor/oracles.hpp"
#include "dfscolor/pipelines.hpp"

using namespace dfscolor;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kFail = 2;
constexpr int kBudget = 3;

template <class Range>
std::string join(const Range &r, const char *sep = ",") {
    std::ostringstream s;
    bool first = true;
    for (const auto &x : r) {
        s << (first ? "" : sep) << x;
        first = false;
    }
    return first ? "-" : s.str();
}

std::string join_cycles(const std::vector<std::vector<Vertex>> &cycles) {
    std::string out;
    for (const auto &c : cycles) {
        out += (out.empty() ? "" : " ") + join(c, "-");
    }
    return out;
}

void kv(const std::string &key, const std::string &value) { std::cout << key << ' ' << value << '\n'; }
void kv(const std::string &key, std::size_t value) { kv(key, std::to_string(value)); }

std::string fmt(double x) {
    std::ostringstream s;
    s << x;
    return s.str();
}

GraphDocument load(const std::string &source) {
    if (std::filesystem::exists(source)) {
        return load_graph(source);
    }
    return generate(source);
}

void warn_limit(std::size_t limit) {
    if (limit > kDefaultEnumerationBudget) {
        std::cerr << "warning: oracle budget " << limit << " exceeds the default " << kDefaultEnumerationBudget
                  << "; exact oracles are exponential in the vertex count\n";
    }
}

void print_warnings(const GraphDocument &doc) {
    for (const auto &w : doc.warnings) {
        std::cerr << "warning: " << w << '\n';
    }
}

int analyze(const std::string &source, std::size_t limit) {
    warn_limit(limit);
    const GraphDocument doc = load(source);
    print_warnings(doc);
    const Graph &g = doc.graph;
    kv("graph", doc.name);
    kv("order", g.order());
    kv("size", g.size());
    kv("components", connected_components(g).size());
    kv("max_degree", g.max_degree());
    kv("bipartite", is_bipartite(g) ? "yes" : "no");
    const auto gir = girth(g);
    kv("girth", gir ? std::to_string(*gir) : "inf");
    const BlockDecomposition bd = blocks(g);
    kv("blocks", bd.blocks.size());
    kv("cut_vertices", join(bd.cut_vertices));
    kv("triangle", forbidden_subgraph_check(g, Forbidden::triangle).present ? "yes" : "no");

    bool over = false;
    const auto guarded = [&](const std::string &key, auto &&fn) {
        try {
            fn();
        } catch (const BudgetExceeded &e) {
            kv(key, "budget-exceeded");
            over = true;
        }
    };
    guarded("c5", [&] {
        kv("c5", forbidden_subgraph_check(g, Forbidden::c5, std::max(limit, kDefaultCliqueBudget)).present ? "yes"
                                                                                                        : "no");
    });
    guarded("cycle_stats", [&] {
        const CycleStats cs = cycle_stats(g, limit);
        kv("spectrum", join(cs.spectrum));
        kv("odd_lengths", join(cs.odd_lengths));
        kv("odd_length_count", cs.odd_lengths.size());
        kv("odd_circumference", cs.odd_circumference ? std::to_string(*cs.odd_circumference) : "none");
        const auto circ = cs.circumference();
        kv("circumference", circ ? std::to_string(*circ) : "none");
        kv("longest_path", cs.longest_path);
    });
    guarded("omega", [&] { kv("omega", clique_number_exact(g, std::max(limit, kDefaultCliqueBudget)).clique_number); });
    guarded("chromatic", [&] { kv("chromatic", chromatic_number_exact(g, limit).chromatic_number); });
    return over ? kBudget : kOk;
}

int color(const std::string &source, const MethodOptions &opt, const std::string &out) {
    warn_limit(opt.limit);
    const GraphDocument doc = load(source);
    print_warnings(doc);
    kv("graph", doc.name);
    kv("method", method_name(opt.method));
    kv("order", doc.graph.order());
    ColorReport rep;
    try {
        rep = run_method(doc.graph, opt);
    } catch (const HypothesisViolation &e) {
        kv("verdict", "FAIL");
        kv("reason", std::string("hypothesis violation: ") + e.what());
        kv("witness", join_cycles(e.witness()));
        return kFail;
    } catch (const ContractViolation &e) {
        kv("verdict", "FAIL");
        kv("reason", std::string("implementation bug (contract violation): ") + e.what());
        return kFail;
    }
    for (const auto &[key, value] : rep.facts) {
        kv(key, value);
    }
    kv("colors_used", rep.colors_used);
    kv("bound_formula", rep.judged.formula);
    kv("bound_instance", rep.judged.instance);
    kv("bound", fmt(rep.judged.value));
    kv("composition_bound", rep.result.bound.formula + " [" + rep.result.bound.instance + "] = " +
                                fmt(rep.result.bound.value));
    kv("quoted_bound", rep.result.quoted_bound.formula + " [" + rep.result.quoted_bound.instance + "] = " +
                           fmt(rep.result.quoted_bound.value));
    kv("proper", rep.verdict.proper ? "yes" : "no");
    if (rep.verdict.witness) {
        kv("witness_edge", std::to_string(rep.verdict.witness->u) + "-" + std::to_string(rep.verdict.witness->v));
    }
    kv("within_bound", rep.within_bound() ? "yes" : "no");
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) {
            throw Error("cannot write " + out);
        }
        emit_coloring(f, rep.result.coloring);
    }
    if (rep.pass()) {
        kv("verdict", "PASS");
        return kOk;
    }
    kv("verdict", "FAIL");
    kv("reason", !rep.verdict.proper ? "implementation bug: improper coloring"
                                     : "colors exceed the stated bound for this input");
    return kFail;
}

int adversary(const std::string &algo, std::size_t k, std::size_t ell, const std::string &out) {
    const AlgorithmSpec spec = parse_algorithm(algo, ell);
    kv("algo", describe(spec));
    kv("k", k);
    AdversaryTranscript t;
    try {
        t = run_adversary(make_factory(spec), k);
    } catch (const ContractViolation &e) {
        kv("verdict", "FAIL");
        kv("reason", std::string("contract violation: ") + e.what());
        return kFail;
    }
    const Graph g = t.graph();
    kv("vertices", t.steps.size());
    kv("edges", g.size());
    kv("bins_used", t.bins_used());
    kv("max_degree", g.max_degree());
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) {
            throw Error("cannot write " + out);
        }
        write_transcript(f, t);
    }
    const TranscriptVerdict v = verify_transcript(t);
    if (!v) {
        kv("verdict", "FAIL");
        kv("violated", v.violated);
        kv("detail", v.detail);
        kv("witness", join(v.witness));
        return kFail;
    }
    kv("verdict", "PASS");
    return kOk;
}

int verify_coloring(const std::string &coloring_file, const std::string &source) {
    const GraphDocument doc = load(source);
    print_warnings(doc);
    std::ifstream in(coloring_file);
    if (!in) {
        throw Error("cannot open " + coloring_file);
    }
    const Coloring c = parse_coloring(in, doc.graph.order());
    const ColoringVerdict v = validate_coloring(doc.graph, c);
    kv("graph", doc.name);
    kv("colors_used", c.colors_used());
    kv("proper", v.proper ? "yes" : "no");
    if (v.witness) {
        kv("witness_edge", std::to_string(v.witness->u) + "-" + std::to_string(v.witness->v));
    }
    kv("verdict", v.proper ? "PASS" : "FAIL");
    return v.proper ? kOk : kFail;
}

int verify_transcript_file(const std::string &file) {
    std::ifstream in(file);
    if (!in) {
        throw Error("cannot open " + file);
    }
    const AdversaryTranscript t = read_transcript(in);
    const TranscriptVerdict v = verify_transcript(t);
    kv("k", t.k);
    kv("vertices", t.steps.size());
    kv("bins_used", t.bins_used());
    if (!v) {
        kv("violated", v.violated);
        kv("detail", v.detail);
        kv("witness", join(v.witness));
        kv("verdict", "FAIL");
        return kFail;
    }
    kv("verdict", "PASS");
    return kOk;
}

int gen(const std::string &expr, const std::string &format, const std::string &out) {
    const GraphDocument doc = generate(expr);
    std::ofstream file;
    if (!out.empty()) {
        file.open(out);
        if (!file) {
            throw Error("cannot write " + out);
        }
    }
    std::ostream &os = out.empty() ? std::cout : file;
    if (format == "dimacs") {
        emit_dimacs(os, doc);
    } else {
        emit_edgelist(os, doc);
    }
    return kOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"DFS-decomposition graph coloring workbench"};
    app.require_subcommand(1);

    std::string source;
    std::size_t limit = kDefaultEnumerationBudget;

    auto *an = app.add_subcommand("analyze", "cycle statistics, clique and chromatic numbers, blocks");
    an->add_option("graph", source, "edge-list or DIMACS file, or a family expression")->required();
    an->add_option("--limit", limit, "exact oracle vertex budget");

    MethodOptions opt;
    std::string method;
    std::size_t ell = 0;
    std::string out;
    auto *co = app.add_subcommand("color", "run a coloring method and check its bound");
    co->add_option("graph", source)->required();
    co->add_option("--method", method, "level-parity|modulo-level|bands|quad-group|first-fit-paths|recursive|res1|res2|res3")->required();
    co->add_option("--ell", ell, "odd circumference override");
    co->add_option("--algo", opt.algo, "online algorithm for bands: first-fit|modulo-level|quad-group");
    co->add_option("--k", opt.k, "modulus for res1/res2/res3");
    co->add_option("--r", opt.r, "res1: distinct cycle lengths = 1 mod k");
    co->add_option("--s", opt.s, "res2: distinct cycle lengths = 2 mod k");
    co->add_option("--limit", limit, "exact oracle vertex budget");
    co->add_option("--out", out, "write the coloring here");

    std::string algo = "first-fit";
    std::size_t k = 0;
    std::size_t adv_ell = 5;
    auto *ad = app.add_subcommand("adversary", "play the lower-bound game against an online algorithm");
    ad->add_option("--algo", algo, "first-fit|modulo-level|quad-group");
    ad->add_option("--k", k, "number of true colors; k^2 vertices are presented")->required();
    ad->add_option("--ell", adv_ell, "ell for modulo-level and quad-group");
    ad->add_option("--out", out, "write the transcript here");

    std::string coloring_file;
    std::string transcript_file;
    auto *ve = app.add_subcommand("verify", "check a coloring or an adversary transcript");
    auto *vc = ve->add_option("--coloring", coloring_file, "coloring file (\"v c\" lines)");
    auto *vt = ve->add_option("--transcript", transcript_file, "adversary transcript");
    ve->add_option("graph", source, "graph for --coloring");
    vc->excludes(vt);

    std::string format = "edgelist";
    auto *ge = app.add_subcommand("gen", "emit a generated graph");
    ge->add_option("family", source, "e.g. cycle(9), groetzsch, random_girth5(50,0.1,3)")->required();
    ge->add_option("--format", format)->check(CLI::IsMember({"edgelist", "dimacs"}));
    ge->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (an->parsed()) {
            return analyze(source, limit);
        }
        if (co->parsed()) {
            opt.method = parse_method(method);
            opt.limit = limit;
            if (co->count("--ell") > 0) {
                opt.ell = ell;
            }
            return color(source, opt, out);
        }
        if (ad->parsed()) {
            return adversary(algo, k, adv_ell, out);
        }
        if (ve->parsed()) {
            if (!transcript_file.empty()) {
                return verify_transcript_file(transcript_file);
            }
            if (coloring_file.empty() || source.empty()) {
                std::cerr << "error: verify needs --transcript FILE or --coloring FILE GRAPH\n";
                return kUsage;
            }
            return verify_coloring(coloring_file, source);
        }
        if (ge->parsed()) {
            return gen(source, format, out);
        }
    } catch (const BudgetExceeded &e) {
        std::cerr << "error: " << e.what() << " (raise --limit or pass --ell)\n";
        return kBudget;
    } catch (const NoOddCycle &e) {
        std::cerr << "error: " << e.what() << "; the graph is bipartite and 2-colorable directly\n";
        return kUsage;
    } catch (const ContractViolation &e) {
        std::cerr << "error: contract violation: " << e.what() << '\n';
        return kFail;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
