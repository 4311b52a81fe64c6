#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dfscolor {

using Vertex = std::size_t;
using Color = std::size_t;

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input does not have the shape an operation requires (length mismatch,
/// vertex out of range, self-loop).
class StructuralError : public Error {
public:
    using Error::Error;
};

/// Invalid algorithm or generator parameter.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// An exhaustive oracle was asked to run past its vertex budget.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::size_t vertices, std::size_t cap)
        : Error("vertex budget exceeded: graph has " + std::to_string(vertices) +
                " vertices, cap is " + std::to_string(cap)),
          vertices_(vertices), cap_(cap) {}

    std::size_t vertices() const noexcept { return vertices_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t vertices_;
    std::size_t cap_;
};

/// The operation needs an odd cycle and the graph is bipartite.
class NoOddCycle : public Error {
public:
    NoOddCycle() : Error("graph has no odd cycle") {}
};

/// An online algorithm or path colorer broke its contract (nondeterminism,
/// improper output, more colors than declared, bad presentation reference).
class ContractViolation : public Error {
public:
    using Error::Error;
};

/// A coloring theorem's hypothesis does not hold for the input. Carries
/// cycles of the input graph that refute it; each cycle is a vertex sequence
/// whose consecutive entries (and last/first) are adjacent.
class HypothesisViolation : public Error {
public:
    HypothesisViolation(const std::string &what, std::vector<std::vector<Vertex>> witness)
        : Error(what), witness_(std::move(witness)) {}

    const std::vector<std::vector<Vertex>> &witness() const noexcept { return witness_; }

private:
    std::vector<std::vector<Vertex>> witness_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string &msg)
        : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace dfscolor
