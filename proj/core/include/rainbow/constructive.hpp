#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "rainbow/analysis.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

enum class Strategy { cycle, hamiltonian, fan_small, fan_general, c4_case, cut_vertex, cds_extension, exact_fallback };

std::string_view to_string(Strategy s);

struct BoundedColoring {
    EdgeColoring coloring;
    std::size_t bound_claimed = 0;
    Strategy strategy = Strategy::cycle;
    bool verified = false;
};

// Edge j of cycle_graph(n) gets j mod ceil(n/2). Requires n >= 3.
BoundedColoring color_cycle(std::size_t n);

// Hamilton cycle edges follow color_cycle's rule along the cycle found by
// exhaustive search; chords get color 0. Throws Error{not_hamiltonian}.
BoundedColoring color_hamiltonian(const Graph& g);

// A hub adjacent to every other vertex, the rest inducing a path.
struct FanShape {
    VertexId hub = 0;
    std::vector<VertexId> path; // in Hamilton-cycle order after the hub
};

std::optional<FanShape> classify_fan(const Graph& g);

// Bridgeless outerplanar graphs of diameter two: at most 3 colors.
// Throws Error{precondition_violated} when g is not such a graph.
BoundedColoring color_outerplanar_diam2(const Graph& g);

// Bridgeless outerplanar graphs of diameter three: at most 6 colors.
// Throws Error{precondition_violated}, Error{none_within_cap} when no
// connected dominating set of size <= 4 exists, Error{bound_unmet} when no
// 6-coloring is found.
BoundedColoring color_outerplanar_diam3(const Graph& g);

// Extends a rainbow coloring of G[D] by three fresh colors: for every vertex
// outside D, its first edge into D gets a, its second gets b, every other
// edge gets c. When that fails to verify, the non-D edges are searched over
// the same three colors. Requires min degree >= 2 (Error{precondition_violated});
// throws Error{bound_unmet} if nothing verifies.
BoundedColoring cds_extension_coloring(const Graph& g, const CdsResult& d_set, const EdgeColoring& inner);

} // namespace rainbow
