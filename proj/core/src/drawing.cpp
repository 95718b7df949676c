#include "rainbow/drawing.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "rainbow/error.hpp"

namespace rainbow {

Drawing::Drawing(const Graph& g, std::vector<Point> positions) : positions_(std::move(positions))
{
    if (positions_.size() != g.vertex_count())
        throw Error(Errc::degenerate_drawing, "drawing has " + std::to_string(positions_.size()) +
                                                  " positions for " + std::to_string(g.vertex_count()) + " vertices");
    std::set<Point> seen;
    for (VertexId v = 0; v < positions_.size(); ++v)
        if (!seen.insert(positions_[v]).second)
            throw Error(Errc::degenerate_drawing, "vertex " + std::to_string(v) + " shares its position");
    std::vector<VertexId> by_x(positions_.size());
    std::iota(by_x.begin(), by_x.end(), VertexId{0});
    std::sort(by_x.begin(), by_x.end(), [&](VertexId a, VertexId b) { return positions_[a] < positions_[b]; });
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        const Box box = bounding_box(positions_[ed.u], positions_[ed.v]);
        auto it = std::lower_bound(by_x.begin(), by_x.end(), box.x_lo,
                                   [&](VertexId v, const Rational& x) { return positions_[v].x < x; });
        for (; it != by_x.end() && positions_[*it].x <= box.x_hi; ++it) {
            const VertexId v = *it;
            if (ed.touches(v))
                continue;
            if (on_segment_interior(positions_[v], positions_[ed.u], positions_[ed.v]))
                throw Error(Errc::degenerate_drawing,
                            "vertex " + std::to_string(v) + " lies on edge " + std::to_string(e));
        }
    }
}

std::vector<std::pair<EdgeId, EdgeId>> edge_pairs_near(const Graph& g, const std::vector<Point>& positions)
{
    std::vector<Box> boxes;
    boxes.reserve(g.edge_count());
    for (const Edge& e : g.edges())
        boxes.push_back(bounding_box(positions[e.u], positions[e.v]));
    std::vector<EdgeId> by_x(g.edge_count());
    std::iota(by_x.begin(), by_x.end(), EdgeId{0});
    std::sort(by_x.begin(), by_x.end(), [&](EdgeId a, EdgeId b) { return boxes[a].x_lo < boxes[b].x_lo; });
    std::vector<std::pair<EdgeId, EdgeId>> pairs;
    for (std::size_t i = 0; i < by_x.size(); ++i)
        for (std::size_t j = i + 1; j < by_x.size() && boxes[by_x[j]].x_lo <= boxes[by_x[i]].x_hi; ++j)
            if (boxes_meet(boxes[by_x[i]], boxes[by_x[j]]))
                pairs.emplace_back(std::min(by_x[i], by_x[j]), std::max(by_x[i], by_x[j]));
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

} // namespace rainbow
