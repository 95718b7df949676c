#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

inline constexpr std::size_t kInfiniteDistance = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> bfs_distances(const Graph& g, VertexId source);
bool is_connected(const Graph& g);
// kInfiniteDistance when g is disconnected.
std::size_t diameter(const Graph& g);
bool is_complete(const Graph& g);
bool is_tree(const Graph& g);
bool is_bipartite(const Graph& g);

struct StructureReport {
    std::size_t diameter = 0;         // kInfiniteDistance if disconnected
    std::vector<EdgeId> bridges;      // ascending
    std::vector<VertexId> cut_vertices; // ascending
    bool is_2connected = false;
    std::size_t min_degree = 0;
};

StructureReport analyze(const Graph& g);

// Repeatedly deletes vertices of degree <= 2; true iff nothing is left.
// Every outerplanar graph passes, since each of its subgraphs has such a vertex.
bool peels_to_empty(const Graph& g);

// K4 and K2,3 have maximum degree 3, so they are minors of g exactly when g
// contains a subdivision of them; both searches look for that subdivision.
bool has_k4_minor(const Graph& g);
bool has_k23_minor(const Graph& g);

inline constexpr std::size_t kDefaultOuterplanarLimit = 16;

// Throws Error{too_large} when n exceeds max_vertices.
bool is_outerplanar(const Graph& g, std::size_t max_vertices = kDefaultOuterplanarLimit);

struct HamiltonCycle {
    std::vector<VertexId> order;    // starts at 0; order[1] < order.back()
    std::vector<EdgeId> cycle_edges; // edge between order[i] and order[i+1 mod n]
    std::vector<EdgeId> chords;      // every other edge, ascending
};

// First Hamilton cycle in search order, if any.
std::optional<HamiltonCycle> find_hamilton_cycle(const Graph& g);

// The unique Hamilton cycle of a 2-connected outerplanar graph. Throws
// Error{precondition_violated} for other inputs and Error{non_unique} if a
// second cycle turns up.
HamiltonCycle outer_hamilton_cycle(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<VertexId> vertex_of; // local vertex -> vertex of the parent
    std::vector<EdgeId> edge_of;     // local edge -> edge of the parent
};

// `vertices` must be distinct; local ids follow their order.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> vertices);

bool is_dominating(const Graph& g, std::span<const VertexId> set);
bool induces_connected(const Graph& g, std::span<const VertexId> set);

struct CdsResult {
    std::vector<VertexId> set; // ascending
    InducedSubgraph induced;

    std::size_t size() const { return set.size(); }
};

inline constexpr std::size_t kDefaultCdsCap = 6;

// Smallest connected dominating set, lexicographically first among those of
// minimum size. Throws Error{precondition_violated} if g is disconnected or
// empty, Error{none_within_cap} if every CDS is larger than size_cap.
CdsResult min_connected_dominating_set(const Graph& g, std::size_t size_cap = kDefaultCdsCap);

struct LineGraph {
    Graph graph;
    std::vector<VertexId> vertex_of_edge; // identity today; kept explicit for callers
};

// Throws Error{empty_graph} when g has no edges.
LineGraph line_graph(const Graph& g);

} // namespace rainbow
