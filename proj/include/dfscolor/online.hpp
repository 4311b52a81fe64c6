#pragma once

// Deterministic online coloring. A session sees one vertex at a time together
// with the positions of its already-presented neighbors and a static tag
// (tree depth) supplied by the presenter, and returns an irrevocable color.

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "dfscolor/dfs.hpp"
#include "dfscolor/graph.hpp"

namespace dfscolor {

struct Arrival {
    /// Positions (0-based presentation indices) of earlier neighbors.
    std::span<const std::size_t> earlier;
    std::size_t depth = 0;
};

class OnlineSession {
public:
    virtual ~OnlineSession() = default;

    /// Throws ContractViolation if `a` references a position not yet
    /// presented.
    Color present(const Arrival &a);

    std::size_t seen() const noexcept { return colors_.size(); }
    /// Colors of the vertices presented so far, by position.
    const std::vector<Color> &colors() const noexcept { return colors_; }
    std::size_t colors_used() const;

    virtual std::string name() const = 0;

protected:
    OnlineSession() = default;

    /// Called with colors() holding every earlier vertex's color.
    virtual Color choose(const Arrival &a) = 0;

private:
    std::vector<Color> colors_;
};

using SessionFactory = std::function<std::unique_ptr<OnlineSession>()>;

/// Smallest color absent from the earlier neighbors.
class FirstFit final : public OnlineSession {
public:
    std::string name() const override { return "first-fit"; }

protected:
    Color choose(const Arrival &a) override;
};

/// Color = depth mod (ell + 1). Needs odd ell >= 3.
class ModuloLevel final : public OnlineSession {
public:
    explicit ModuloLevel(std::size_t ell);
    std::string name() const override;

protected:
    Color choose(const Arrival &a) override;

private:
    std::size_t ell_;
};

/// Groups of four consecutive positions share two colors: with period p
/// (ell + 3 when ell = 1 mod 4, ell + 5 when ell = 3 mod 4) and
/// i' = i mod p, group g = i' / 4 colors i' in {4g, 4g + 2} with 2g and the
/// other two with 2g + 1. Uses p / 2 colors.
class QuadGroup final : public OnlineSession {
public:
    explicit QuadGroup(std::size_t ell);
    std::string name() const override;

    static std::size_t period(std::size_t ell);
    static Color color_at(std::size_t index, std::size_t ell);

protected:
    Color choose(const Arrival &a) override;

private:
    std::size_t ell_;
};

struct FirstFitSpec {
    friend bool operator==(const FirstFitSpec &, const FirstFitSpec &) = default;
};
struct ModuloLevelSpec {
    std::size_t ell = 3;
    friend bool operator==(const ModuloLevelSpec &, const ModuloLevelSpec &) = default;
};
struct QuadGroupSpec {
    std::size_t ell = 5;
    friend bool operator==(const QuadGroupSpec &, const QuadGroupSpec &) = default;
};

using AlgorithmSpec = std::variant<FirstFitSpec, ModuloLevelSpec, QuadGroupSpec>;

/// Validates parameters eagerly (throws ParameterError).
SessionFactory make_factory(const AlgorithmSpec &spec);
std::string describe(const AlgorithmSpec &spec);

struct PresentationStep {
    std::vector<std::size_t> earlier;
    std::size_t depth = 0;
};

using Presentation = std::vector<PresentationStep>;

/// Presentation of g's vertices in the given order; tags default to 0.
Presentation present_in_order(const Graph &g, std::span<const Vertex> order,
                              std::span<const std::size_t> depth_tags = {});

/// Runs a fresh session over the whole presentation.
std::vector<Color> replay(const SessionFactory &factory, const Presentation &p);

/// Greedy level coloring with separate palettes for odd and even levels: in
/// increasing depth, each odd level takes the smallest color of
/// {0..L} not used by an earlier odd level joined to it by an edge, and each
/// even level likewise from {L+1..2L+1}, where L = odd_length_count. Returns
/// one color per level. Throws HypothesisViolation, with L+1 odd cycles of
/// distinct lengths as witness, when a level runs out of colors.
std::vector<Color> parity_greedy_levels(const Graph &g, const DfsTree &t, std::size_t odd_length_count);

} // namespace dfscolor
