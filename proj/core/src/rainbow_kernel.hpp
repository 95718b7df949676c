#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow::detail {

// Marks an element whose color is not yet fixed; it constrains nothing.
inline constexpr ColorId kFree = std::numeric_limits<ColorId>::max();
inline constexpr std::size_t kMaskBits = 64;

enum class Mode { edge, vertex };

// Breadth-first search over states (vertex, set of colors used so far).
//
// Edge mode: the set holds the colors of the edges walked. Any walk whose
// edge colors are pairwise distinct contains a simple path between its ends
// whose colors are a subset, so exploring walks instead of paths is exact.
// Vertex mode: the set holds the colors of the internal vertices walked;
// reaching a vertex as an endpoint is free, continuing through it spends
// its color.
//
// A state (x, S) is dropped when some (x, T) with T a subset of S has
// been queued: whatever extends S also extends T.
class RainbowKernel {
public:
    RainbowKernel(const Graph& g, Mode mode);

    // colors: per edge or per vertex depending on mode; ids < 64 or kFree.
    // Stops as soon as every vertex with id >= interest_from (other than
    // the source) is reached.
    void explore(VertexId source, std::span<const ColorId> colors, VertexId interest_from = 0);

    // Stops once `target` is reached.
    void explore_to(VertexId source, std::span<const ColorId> colors, VertexId target);

    bool reached(VertexId v) const { return reached_[v] != 0; }

    // Simple path source -> v taken from the walk that first reached v.
    std::vector<VertexId> path_to(VertexId v) const;

    // First (u, v), u < v, in lexicographic order with v unreachable from u.
    std::optional<std::pair<VertexId, VertexId>> first_unreachable_pair(std::span<const ColorId> colors);

    // Same verdict as first_unreachable_pair, but starts from `hint` and
    // updates it to the failing source (cheap rejection inside searches).
    bool all_pairs_reachable(std::span<const ColorId> colors, VertexId& hint);

private:
    struct Node {
        VertexId vertex;
        std::uint64_t mask;
        std::uint32_t parent;
    };
    static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

    void run(VertexId source, std::span<const ColorId> colors, VertexId interest_from, std::optional<VertexId> target);
    bool dominated_or_insert(VertexId v, std::uint64_t mask);

    const Graph& g_;
    Mode mode_;
    VertexId source_ = 0;
    std::vector<Node> nodes_;
    std::vector<std::vector<std::uint64_t>> minimal_;
    std::vector<std::uint32_t> reach_parent_;
    std::vector<char> reached_;
};

} // namespace rainbow::detail
