#include "rainbow/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "rainbow/error.hpp"

namespace rainbow {

Graph::Graph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edge_list)
{
    init(n, edge_list);
}

Graph::Graph(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> edge_list)
{
    init(n, std::span<const std::pair<VertexId, VertexId>>(edge_list.begin(), edge_list.size()));
}

void Graph::init(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edge_list)
{
    adjacency_.assign(n, {});
    edges_.reserve(edge_list.size());
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const auto& [a, b] : edge_list) {
        if (a >= n || b >= n)
            throw Error(Errc::vertex_out_of_range,
                        "edge (" + std::to_string(a) + "," + std::to_string(b) + ") with n=" + std::to_string(n));
        if (a == b)
            throw Error(Errc::self_loop, "loop at vertex " + std::to_string(a));
        Edge e{std::min(a, b), std::max(a, b)};
        if (!seen.insert({e.u, e.v}).second)
            throw Error(Errc::duplicate_edge, "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        const EdgeId id = edges_.size();
        edges_.push_back(e);
        adjacency_[e.u].push_back({e.v, id});
        adjacency_[e.v].push_back({e.u, id});
    }
}

std::optional<EdgeId> Graph::find_edge(VertexId a, VertexId b) const
{
    if (a >= vertex_count() || b >= vertex_count())
        return std::nullopt;
    const auto& smaller = degree(a) <= degree(b) ? adjacency_[a] : adjacency_[b];
    const VertexId target = degree(a) <= degree(b) ? b : a;
    for (const auto& inc : smaller)
        if (inc.neighbor == target)
            return inc.edge;
    return std::nullopt;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edge_pairs() const
{
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_)
        out.emplace_back(e.u, e.v);
    return out;
}

} // namespace rainbow
