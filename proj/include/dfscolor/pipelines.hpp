#pragma once

// One entry point per coloring method, as used by the command-line tool.
// Graph parameters the bound depends on (odd circumference, odd length count,
// longest path, clique number) come from the exact oracles unless supplied.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dfscolor/compose.hpp"
#include "dfscolor/graph.hpp"
#include "dfscolor/online.hpp"
#include "dfscolor/oracles.hpp"

namespace dfscolor {

enum class Method { level_parity, modulo_level, bands, quad_group, first_fit_paths, recursive, res1, res2, res3 };

/// Throws ParameterError on unknown names.
Method parse_method(const std::string &name);
std::string method_name(Method m);
/// "first-fit", "modulo-level" or "quad-group"; the last two take ell.
AlgorithmSpec parse_algorithm(const std::string &name, std::size_t ell);

struct MethodOptions {
    Method method = Method::modulo_level;
    std::optional<std::size_t> ell;
    std::string algo = "first-fit";
    std::size_t k = 3;
    std::size_t r = 0;
    std::size_t s = 0;
    std::size_t limit = kDefaultEnumerationBudget;
};

struct ColorReport {
    ComposedColoring result;
    /// The bound the PASS/FAIL verdict is judged against.
    BoundInstance judged;
    ColoringVerdict verdict;
    std::size_t colors_used = 0;
    /// Ordered key-value facts for the report (parameters, alternate bounds).
    std::vector<std::pair<std::string, std::string>> facts;

    bool within_bound() const { return judged.admits(colors_used); }
    bool pass() const { return verdict.proper && within_bound(); }
};

/// Runs the method and re-validates the coloring. Hypothesis and contract
/// errors from the method propagate; so does BudgetExceeded.
ColorReport run_method(const Graph &g, const MethodOptions &opt);

} // namespace dfscolor
