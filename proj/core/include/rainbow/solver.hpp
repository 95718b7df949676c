#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

struct SolverOptions {
    std::size_t max_edges = 14;    // rc searches
    std::size_t max_vertices = 14; // rvc searches
};

struct SolveResult {
    std::size_t value = 0;
    std::variant<EdgeColoring, VertexColoring> coloring;
    std::uint64_t nodes_explored = 0;
    std::chrono::nanoseconds elapsed{0};

    const EdgeColoring& edge_coloring() const { return std::get<EdgeColoring>(coloring); }
    const VertexColoring& vertex_coloring() const { return std::get<VertexColoring>(coloring); }
};

// Smallest k admitting a rainbow edge coloring, trying k = max(diam, 1) ..
// min(k_cap, m) in turn. At each k the colorings are enumerated in canonical
// form (edge j may use at most one color beyond those used by edges < j), in
// edge-id order with ascending colors, so the coloring returned is the
// lexicographically least feasible one.
//
// A subtree is cut when the partial coloring, with its uncolored edges
// treated as constraint-free, is already not rainbow connected: every
// completion has fewer rainbow walks than that relaxation.
//
// Throws Error{precondition_violated} if g is disconnected,
// Error{too_large} if m > max_edges, Error{cap_exceeded} if no k <= k_cap
// works. A graph with one vertex has rc = 0.
SolveResult rc_exact(const Graph& g, std::size_t k_cap, const SolverOptions& options = {});

// Vertex analogue, from k = max(diam - 1, 0). rvc = 0 exactly for complete
// graphs; the coloring reported then is the one-color coloring, since
// every vertex must carry some color.
SolveResult rvc_exact(const Graph& g, std::size_t k_cap, const SolverOptions& options = {});

// Lexicographically least canonical coloring with at most k colors that
// makes g rainbow connected, if any.
std::optional<EdgeColoring> rc_upper_witness(const Graph& g, std::size_t k, const SolverOptions& options = {});

// Completes a partial edge coloring: edges holding a value keep it, the
// rest draw from `extra` new colors numbered after the largest fixed color,
// canonically. The result is rainbow connected and renumbered densely.
std::optional<EdgeColoring> complete_edge_coloring(const Graph& g, const std::vector<std::optional<ColorId>>& partial,
                                                   std::size_t extra, std::uint64_t* nodes_explored = nullptr);

} // namespace rainbow
