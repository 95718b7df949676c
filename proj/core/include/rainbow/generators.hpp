#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/drawing.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

// Seeded generator whose output depends only on the seed (the standard
// distributions are implementation-defined, so bounded draws are done here).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound);

    // Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

    bool percent(unsigned p) { return below(100) < p; }

    template <class T>
    void shuffle(std::vector<T>& items)
    {
        for (std::size_t i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
// K_{1,n-1} with center 0.
Graph star_graph(std::size_t n);
Graph grid_graph(std::size_t rows, std::size_t cols);
// Wheel on n vertices: hub 0 joined to the cycle 1..n-1.
Graph wheel_graph(std::size_t n);

// Fan on n >= 3 vertices with Hamilton cycle v x1 .. xa yb .. y1 v, where
// a = ceil((n-1)/2), b = floor((n-1)/2), and hub x1 adjacent to everything.
// Ids: v = 0, x_i = i, y_i = a + i.
struct FanLabels {
    VertexId v = 0;
    std::vector<VertexId> x; // x[0] is x1, the hub
    std::vector<VertexId> y; // y[0] is y1
};
FanLabels fan_labels(std::size_t n);
Graph fan_graph(std::size_t n);

Graph random_tree(std::size_t n, std::uint64_t seed);
// Connected graph with exactly m edges (n-1 <= m <= n(n-1)/2).
Graph random_connected(std::size_t n, std::size_t m, std::uint64_t seed);
// Starts from random_connected(n, m) and adds edges until no bridge remains.
Graph random_bridgeless(std::size_t n, std::size_t m, std::uint64_t seed);
// Starts from random_connected(n, m) and adds edges until every degree is >= 2.
Graph random_min_degree2(std::size_t n, std::size_t m, std::uint64_t seed);
// Outerplanar graph: a random triangulated polygon keeping each chord with
// probability chord_percent. With blocks > 1, that many 2-connected pieces
// are glued at single vertices (producing cut vertices); n counts all vertices.
Graph random_outerplanar(std::size_t n, std::uint64_t seed, unsigned chord_percent = 50, std::size_t blocks = 1);

// Vertex i at (i, i^2), permuted by `order` when given: convex position, no
// three points collinear.
Drawing convex_drawing(const Graph& g, const std::vector<std::size_t>* order = nullptr);

EdgeColoring random_edge_coloring(const Graph& g, std::size_t palette, std::uint64_t seed);
VertexColoring random_vertex_coloring(const Graph& g, std::size_t palette, std::uint64_t seed);

enum class Family {
    cycle,
    complete,
    path,
    star,
    wheel,
    fan,
    grid3,
    tree,
    connected,
    bridgeless,
    min_degree2,
    outerplanar,
    convex,
};

std::optional<Family> parse_family(std::string_view name);
std::string_view to_string(Family family);

struct GeneratorParams {
    std::size_t n = 0;
    std::size_t m = 0; // random families; 0 picks a default density
    std::uint64_t seed = 1;
    unsigned chord_percent = 50;
    std::size_t blocks = 1;
    const Graph* base = nullptr; // convex: the graph to draw
};

struct GeneratedInstance {
    Graph graph;
    std::optional<Drawing> drawing;
};

// Throws Error{bad_params}.
GeneratedInstance generate(Family family, const GeneratorParams& params);

} // namespace rainbow
