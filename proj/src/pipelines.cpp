#include "dfscolor/pipelines.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "dfscolor/residue.hpp"

namespace dfscolor {

namespace {

const std::vector<std::pair<std::string, Method>> &primary_names() {
    static const std::vector<std::pair<std::string, Method>> names = {
        {"level-parity", Method::level_parity},   {"modulo-level", Method::modulo_level},     {"bands", Method::bands},
        {"quad-group", Method::quad_group},     {"first-fit-paths", Method::first_fit_paths}, {"recursive", Method::recursive},
        {"res1", Method::res1},           {"res2", Method::res2},             {"res3", Method::res3},
    };
    return names;
}

// Primary names plus the short numbered aliases.
const std::map<std::string, Method> &method_table() {
    static const std::map<std::string, Method> table = [] {
        std::map<std::string, Method> t(primary_names().begin(), primary_names().end());
        t.insert({{"thm1", Method::level_parity},
                  {"thm2", Method::modulo_level},
                  {"thm4", Method::bands},
                  {"thm5", Method::quad_group},
                  {"thm6-ff", Method::first_fit_paths}});
        return t;
    }();
    return table;
}

std::string num(double x) {
    std::ostringstream s;
    s << x;
    return s.str();
}

std::size_t exact_ell(const Graph &g, const MethodOptions &opt) {
    return opt.ell ? *opt.ell : odd_circumference(g, opt.limit);
}

} // namespace

Method parse_method(const std::string &name) {
    const auto it = method_table().find(name);
    if (it == method_table().end()) {
        throw ParameterError("unknown method '" + name + "'");
    }
    return it->second;
}

std::string method_name(Method m) {
    for (const auto &[name, value] : primary_names()) {
        if (value == m) {
            return name;
        }
    }
    return "?";
}

AlgorithmSpec parse_algorithm(const std::string &name, std::size_t ell) {
    if (name == "first-fit") {
        return FirstFitSpec{};
    }
    if (name == "modulo-level") {
        return ModuloLevelSpec{ell};
    }
    if (name == "quad-group") {
        return QuadGroupSpec{ell};
    }
    throw ParameterError("unknown algorithm '" + name + "'");
}

ColorReport run_method(const Graph &g, const MethodOptions &opt) {
    ColorReport rep;
    auto fact = [&](std::string key, std::string value) { rep.facts.emplace_back(std::move(key), std::move(value)); };
    switch (opt.method) {
    case Method::level_parity: {
        const auto lengths = cycle_stats(g, opt.limit).odd_lengths;
        fact("odd_lengths", std::to_string(lengths.size()));
        rep.result = compose_level_parity(g, lengths.size());
        rep.judged = rep.result.bound;
        break;
    }
    case Method::modulo_level: {
        const std::size_t ell = exact_ell(g, opt);
        fact("ell", std::to_string(ell));
        rep.result = compose_paths(g, make_factory(ModuloLevelSpec{ell}), modulo_level_bound(ell));
        rep.judged = rep.result.bound;
        break;
    }
    case Method::quad_group: {
        const SubgraphCheck tri = forbidden_subgraph_check(g, Forbidden::triangle);
        if (tri.present) {
            throw HypothesisViolation("graph has a triangle", {tri.witness});
        }
        const std::size_t ell = exact_ell(g, opt);
        fact("ell", std::to_string(ell));
        fact("period", std::to_string(QuadGroup::period(ell)));
        rep.result = compose_paths(g, make_factory(QuadGroupSpec{ell}), quad_group_bound(ell));
        rep.judged = rep.result.bound;
        break;
    }
    case Method::first_fit_paths: {
        const std::size_t omega = clique_number_exact(g, std::max(opt.limit, kDefaultCliqueBudget)).clique_number;
        const std::size_t p = longest_path_edges(g, opt.limit);
        fact("omega", std::to_string(omega));
        fact("p", std::to_string(p));
        rep.result = compose_paths(g, make_factory(FirstFitSpec{}), first_fit_clique_bound(omega));
        rep.judged = {"(p+omega)/2", "p=" + std::to_string(p) + " omega=" + std::to_string(omega),
                      static_cast<double>(p + omega) / 2.0};
        fact("path_vertex_bound", num(static_cast<double>(p + 1 + omega) / 2.0));
        break;
    }
    case Method::bands: {
        const std::size_t ell = exact_ell(g, opt);
        fact("ell", std::to_string(ell));
        const AlgorithmSpec spec = parse_algorithm(opt.algo, ell);
        ClassBound f = trivial_bound();
        if (std::holds_alternative<ModuloLevelSpec>(spec)) {
            f = modulo_level_bound(ell);
        } else if (std::holds_alternative<QuadGroupSpec>(spec)) {
            f = quad_group_bound(ell);
        } else {
            const auto gir = girth(g);
            if (gir && *gir >= 5) {
                f = first_fit_girth5_bound();
            } else {
                const std::size_t omega =
                    clique_number_exact(g, std::max(opt.limit, kDefaultCliqueBudget)).clique_number;
                fact("omega", std::to_string(omega));
                f = first_fit_clique_bound(omega);
            }
        }
        fact("algo", describe(spec));
        rep.result = compose_bands(g, ell, make_factory(spec), f);
        rep.judged = rep.result.bound;
        break;
    }
    case Method::recursive: {
        const std::size_t k = max_root_path_chromatic(g, opt.limit);
        fact("k", std::to_string(k));
        rep.result = compose_recursive(g, ExactPathColorer(k, opt.limit));
        rep.judged = rep.result.quoted_bound;
        break;
    }
    case Method::res1:
        rep.result = color_residue1(g, opt.k, opt.r);
        rep.judged = rep.result.bound;
        break;
    case Method::res2:
        rep.result = color_residue2(g, opt.k, opt.s);
        rep.judged = rep.result.bound;
        break;
    case Method::res3:
        rep.result = color_residue3(g, opt.k);
        rep.judged = rep.result.bound;
        break;
    }
    rep.verdict = validate_coloring(g, rep.result.coloring);
    rep.colors_used = rep.result.coloring.colors_used();
    return rep;
}

} // namespace dfscolor
