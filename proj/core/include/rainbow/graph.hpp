#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace rainbow {

using VertexId = std::size_t;
using EdgeId = std::size_t;
using ColorId = std::size_t;

// Stored with u < v.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    VertexId other(VertexId x) const { return x == u ? v : u; }
    bool touches(VertexId x) const { return x == u || x == v; }
    bool shares_endpoint(const Edge& e) const { return touches(e.u) || touches(e.v); }

    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
    VertexId neighbor;
    EdgeId edge;
};

// Simple undirected graph on vertices 0..n-1. The position of an edge in
// edges() is its EdgeId and never changes.
class Graph {
public:
    Graph() = default;

    // Throws Error{duplicate_edge | self_loop | vertex_out_of_range}.
    Graph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edge_list);
    Graph(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> edge_list);

    std::size_t vertex_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[e]; }

    std::span<const Incidence> incident(VertexId v) const { return adjacency_[v]; }
    std::size_t degree(VertexId v) const { return adjacency_[v].size(); }

    std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;
    bool adjacent(VertexId a, VertexId b) const { return find_edge(a, b).has_value(); }

    std::vector<std::pair<VertexId, VertexId>> edge_pairs() const;

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
    }

private:
    void init(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edge_list);

    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
};

inline Graph build_graph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edge_list)
{
    return Graph(n, edge_list);
}

} // namespace rainbow
