#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

inline constexpr std::size_t kDefaultPaletteBound = 24;
inline constexpr std::size_t kMaxPaletteBound = 64;

struct VerifyOptions {
    // Palettes above this are rejected with Error{palette_too_large};
    // values above kMaxPaletteBound are clamped to it.
    std::size_t palette_bound = kDefaultPaletteBound;
    bool collect_witnesses = false;
};

struct PairWitness {
    VertexId u = 0;
    VertexId v = 0;
    std::vector<VertexId> path; // u ... v
};

struct Verdict {
    bool connected = false;
    std::vector<PairWitness> witnesses; // all pairs u < v, when collected
    std::optional<std::pair<VertexId, VertexId>> counterexample; // lexicographically first failing pair
};

// Edge variant: a path whose edges carry pairwise distinct colors.
std::optional<PairWitness> rainbow_path_exists(const Graph& g, const EdgeColoring& c, VertexId u, VertexId v,
                                               const VerifyOptions& options = {});
Verdict is_rainbow_connected(const Graph& g, const EdgeColoring& c, const VerifyOptions& options = {});

// Vertex variant: a path whose internal vertices carry pairwise distinct colors.
std::optional<PairWitness> vertex_rainbow_path_exists(const Graph& g, const VertexColoring& c, VertexId u, VertexId v,
                                                      const VerifyOptions& options = {});
Verdict is_rainbow_vertex_connected(const Graph& g, const VertexColoring& c, const VerifyOptions& options = {});

// Witness checks straight from the definitions, independent of the search.
bool is_rainbow_path(const Graph& g, const EdgeColoring& c, const std::vector<VertexId>& path);
bool is_vertex_rainbow_path(const Graph& g, const VertexColoring& c, const std::vector<VertexId>& path);

} // namespace rainbow
