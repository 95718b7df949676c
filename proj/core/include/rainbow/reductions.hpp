#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/drawing.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

// Grid gadget replacing one crossing of edges xy and uv:
//
//     d - g - h        x attaches at d, y at t,
//     |   |   |        u attaches at h, v at q.
//     s - r - l
//     |   |   |
//     q - p - t
enum class GadgetNode : unsigned char { x, y, u, v, d, g, h, l, r, s, t, p, q };

// Which color a gadget edge takes: the color of xy, of uv, or fresh color 1..5.
enum class GadgetTint : unsigned char { xy, uv, c1, c2, c3, c4, c5 };

struct GadgetEdgeSpec {
    GadgetNode a;
    GadgetNode b;
    GadgetTint tint;
    std::string_view name;
};

inline constexpr std::array<std::string_view, 9> kGridNodeNames = {"d", "g", "h", "l", "r", "s", "t", "p", "q"};

// The 16 gadget edges in output order.
inline constexpr std::array<GadgetEdgeSpec, 16> kGadgetEdges = {{
    {GadgetNode::x, GadgetNode::d, GadgetTint::xy, "xd"},
    {GadgetNode::y, GadgetNode::t, GadgetTint::c5, "yt"},
    {GadgetNode::u, GadgetNode::h, GadgetTint::c5, "uh"},
    {GadgetNode::v, GadgetNode::q, GadgetTint::uv, "vq"},
    {GadgetNode::d, GadgetNode::g, GadgetTint::c1, "dg"},
    {GadgetNode::g, GadgetNode::h, GadgetTint::xy, "gh"},
    {GadgetNode::h, GadgetNode::l, GadgetTint::c2, "hl"},
    {GadgetNode::g, GadgetNode::r, GadgetTint::c2, "gr"},
    {GadgetNode::d, GadgetNode::s, GadgetTint::xy, "ds"},
    {GadgetNode::l, GadgetNode::r, GadgetTint::c3, "lr"},
    {GadgetNode::r, GadgetNode::s, GadgetTint::c4, "rs"},
    {GadgetNode::l, GadgetNode::t, GadgetTint::c4, "lt"},
    {GadgetNode::r, GadgetNode::p, GadgetTint::c4, "rp"},
    {GadgetNode::s, GadgetNode::q, GadgetTint::xy, "sq"},
    {GadgetNode::p, GadgetNode::q, GadgetTint::c1, "pq"},
    {GadgetNode::p, GadgetNode::t, GadgetTint::uv, "pt"},
}};

struct GadgetRecord {
    Crossing crossing;
    VertexId x = 0, y = 0; // endpoints of crossing.edge_a, x < y
    VertexId u = 0, v = 0; // endpoints of crossing.edge_b, u < v
    std::array<VertexId, 9> grid{};         // indexed like kGridNodeNames
    std::array<ColorId, 5> fresh_colors{};  // c1..c5
    std::array<EdgeId, 2> removed_edges{};  // edge_a, edge_b of the input

    // Output vertex playing `node` (original endpoints included).
    VertexId vertex(GadgetNode node) const;
};

// Provenance tags name the element of the input each output element came
// from: "v3" / "e5" for survivors, "gadget0.d" / "gadget0.xd" for gadget
// parts, "split(e2)#1" / "e2#1" for splits, "sub(e4)" / "e4.near" /
// "e4.far" for subdivisions, "pendant(v1)" and "line(e0,e3)" for the
// line-graph reduction.
struct ReductionOutput {
    Graph graph;
    std::optional<EdgeColoring> edge_coloring;
    std::optional<VertexColoring> vertex_coloring;
    std::optional<Drawing> drawing;
    std::vector<std::string> vertex_provenance;
    std::vector<std::string> edge_provenance;
    std::vector<GadgetRecord> gadgets;
    std::size_t fresh_color_count = 0;
};

// All interior crossings of non-adjacent edges, ordered by (edge_a, edge_b).
// Throws Error{degenerate_drawing} for overlapping collinear edges, three or
// more edges through one point, or an intersection at a vertex.
std::vector<Crossing> detect_crossings(const Graph& g, const Drawing& d);

// Inserts a degree-2 vertex between consecutive crossings on the same edge.
// The piece at the smaller endpoint keeps the edge's color; each later piece
// takes its own fresh color.
ReductionOutput split_multicrossed_edges(const Graph& g, const EdgeColoring& c, const Drawing& d);

// Replaces every crossing by the grid gadget. Requires each edge to be in at
// most one crossing (Error{precondition_violated} otherwise). The two
// crossed edges are removed. The induced drawing is returned and is
// crossing-free.
ReductionOutput planarize(const Graph& g, const EdgeColoring& c, const Drawing& d);

// split_multicrossed_edges followed by planarize, provenance composed.
ReductionOutput planarize_drawing(const Graph& g, const EdgeColoring& c, const Drawing& d);

// Subdivides each edge once. With a drawing, new vertices sit at midpoints.
// Throws Error{empty_graph} when m = 0.
ReductionOutput bipartize_subdivision(const Graph& g, const EdgeColoring& c, const Drawing* d = nullptr);

// planarize_drawing then bipartize_subdivision.
ReductionOutput planar_bipartite(const Graph& g, const EdgeColoring& c, const Drawing& d);

// Line graph of g plus one pendant edge per vertex; original edges keep
// their color, pendants share one fresh color. Output vertices 0..m-1 are
// the edges of g, m+i the pendant at vertex i. Throws
// Error{precondition_violated} unless g is connected with n >= 2.
ReductionOutput to_line_rvc(const Graph& g, const EdgeColoring& c);

// Rewrites the provenance of `second` (which consumed first.graph) in terms
// of first's input. Gadget records of `second` keep their own ids; when
// `second` has none, those of `first` carry over.
ReductionOutput compose(const ReductionOutput& first, ReductionOutput second);

// Sidecar text: one "v<id> <- <tag>" / "e<id> <- <tag>" line per element.
std::string provenance_text(const ReductionOutput& out);

} // namespace rainbow
