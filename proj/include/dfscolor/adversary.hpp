#pragma once

// Adaptive adversary against deterministic online coloring. The adversary
// keeps a hidden proper k-coloring ("true colors") while the algorithm sorts
// arriving vertices into bins. Each arriving vertex is joined to every earlier
// vertex of one true color class, so neighborhoods are independent and the
// graph stays triangle-free. The adversary then gives the vertex a true color
// its bin does not hold yet. Bins therefore never repeat a true color, hold at
// most k vertices each, and k^2 vertices need at least k bins.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dfscolor/graph.hpp"
#include "dfscolor/online.hpp"

namespace dfscolor {

struct AdversaryStep {
    /// Positions of the earlier vertices this one is joined to.
    std::vector<std::size_t> neighbors;
    Color bin = 0;
    Color true_color = 0;
    /// The excluded color i of the current color set [k] - {i}.
    std::size_t set_index = 0;

    friend bool operator==(const AdversaryStep &, const AdversaryStep &) = default;
};

struct AdversaryTranscript {
    std::size_t k = 0;
    std::vector<AdversaryStep> steps;

    /// Vertex i is the i-th presented vertex.
    Graph graph() const;
    std::size_t bins_used() const;

    friend bool operator==(const AdversaryTranscript &, const AdversaryTranscript &) = default;
};

/// Plays k^2 rounds. Throws ContractViolation when the algorithm puts a
/// vertex in a bin holding one of its neighbors or does not replay
/// deterministically. Throws ParameterError for k = 0.
AdversaryTranscript run_adversary(const SessionFactory &algo, std::size_t k);

struct TranscriptVerdict {
    bool ok = true;
    /// Name of the first violated invariant, empty when ok.
    std::string violated;
    std::string detail;
    /// Offending vertices (edge, triangle, or bin members).
    std::vector<Vertex> witness;

    explicit operator bool() const noexcept { return ok; }
};

/// Re-derives every invariant from the transcript alone: well-formed neighbor
/// references, triangle-free graph, proper true coloring with colors < k,
/// bins proper for the graph, no repeated true color and at most k vertices
/// per bin, and at least k bins.
TranscriptVerdict verify_transcript(const AdversaryTranscript &t);

/// Line format:
///   k <k>
///   steps <count>
///   <neighbors|-> <bin> <true color> <set index>     (one line per step)
/// Neighbors are comma-separated positions or "-" when empty. Lines starting
/// with '#' are comments.
void write_transcript(std::ostream &out, const AdversaryTranscript &t);
std::string to_text(const AdversaryTranscript &t);
/// Throws ParseError.
AdversaryTranscript read_transcript(std::istream &in);

} // namespace dfscolor
