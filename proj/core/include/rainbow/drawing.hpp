#pragma once

#include <vector>

#include "rainbow/geometry.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

// Straight-line drawing of a graph with exact rational coordinates.
class Drawing {
public:
    Drawing() = default;

    // Validates that positions are distinct and that no vertex lies inside a
    // non-incident edge; throws Error{degenerate_drawing} otherwise.
    Drawing(const Graph& g, std::vector<Point> positions);

    std::size_t size() const { return positions_.size(); }
    const Point& position(VertexId v) const { return positions_[v]; }
    const std::vector<Point>& positions() const { return positions_; }

    friend bool operator==(const Drawing&, const Drawing&) = default;

private:
    std::vector<Point> positions_;
};

// Pairs of edges (a < b, ascending) whose bounding boxes meet: a superset
// of the pairs that can touch, found by a sweep along x.
std::vector<std::pair<EdgeId, EdgeId>> edge_pairs_near(const Graph& g, const std::vector<Point>& positions);

// Interior intersection of two non-adjacent edges; edge_a < edge_b.
struct Crossing {
    EdgeId edge_a = 0;
    EdgeId edge_b = 0;
    Point point;

    friend bool operator==(const Crossing&, const Crossing&) = default;
};

} // namespace rainbow
