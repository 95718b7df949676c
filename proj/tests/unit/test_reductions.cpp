#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "rainbow/analysis.hpp"
#include "rainbow/error.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/reductions.hpp"
#include "rainbow/verify.hpp"

using namespace rainbow;

namespace {

Point pt(long long x, long long y)
{
    return {Rational(x), Rational(y)};
}

Errc code_of(const std::function<void()>& body)
{
    try {
        body();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return Errc::bad_params;
}

} // namespace

TEST(Crossings, ConvexCycleHasNone)
{
    const Graph g = cycle_graph(4);
    EXPECT_TRUE(detect_crossings(g, convex_drawing(g)).empty());
}

TEST(Crossings, ConvexK4HasTheDiagonals)
{
    const Graph g = complete_graph(4);
    const auto found = detect_crossings(g, convex_drawing(g));
    ASSERT_EQ(found.size(), 1u);
    EXPECT_EQ(g.edge(found[0].edge_a), (Edge{0, 2}));
    EXPECT_EQ(g.edge(found[0].edge_b), (Edge{1, 3}));
}

TEST(Crossings, BruteForceCount)
{
    // Convex K_n: every 4 vertices give one crossing.
    for (std::size_t n = 4; n <= 7; ++n) {
        const Graph g = complete_graph(n);
        const std::size_t expected = n * (n - 1) * (n - 2) * (n - 3) / 24;
        EXPECT_EQ(detect_crossings(g, convex_drawing(g)).size(), expected);
    }
}

TEST(Crossings, ThreeConcurrentSegments)
{
    const Graph g(6, {{0, 1}, {2, 3}, {4, 5}});
    const Drawing d(g, {pt(-1, 0), pt(1, 0), pt(0, -1), pt(0, 1), pt(-1, -1), pt(1, 1)});
    EXPECT_EQ(code_of([&] { detect_crossings(g, d); }), Errc::degenerate_drawing);
}

TEST(Crossings, CollinearOverlap)
{
    const Graph g(4, {{0, 1}, {2, 3}});
    // Overlapping collinear edges put a vertex on the other edge, which the
    // drawing itself already rejects.
    EXPECT_EQ(code_of([&] { detect_crossings(g, Drawing(g, {pt(0, 0), pt(2, 0), pt(1, 0), pt(3, 0)})); }),
              Errc::degenerate_drawing);
}

TEST(Split, IdentityWithoutMultiCrossings)
{
    const Graph g = complete_graph(4);
    const EdgeColoring c = EdgeColoring::distinct(6);
    const auto out = split_multicrossed_edges(g, c, convex_drawing(g));
    EXPECT_EQ(out.graph, g);
    EXPECT_EQ(out.edge_coloring, c);
    EXPECT_EQ(out.fresh_color_count, 0u);
}

TEST(Split, TwiceCrossedEdge)
{
    // Edge 0-1 is horizontal and crossed by two vertical edges.
    const Graph g(6, {{0, 1}, {2, 3}, {4, 5}});
    const Drawing d(g, {pt(0, 0), pt(10, 0), pt(2, -1), pt(2, 1), pt(6, -1), pt(6, 1)});
    const EdgeColoring c = EdgeColoring::uniform(3);
    const auto out = split_multicrossed_edges(g, c, d);
    EXPECT_EQ(out.graph.vertex_count(), 7u);
    EXPECT_EQ(out.graph.edge_count(), 4u);
    EXPECT_EQ(out.fresh_color_count, 1u);
    EXPECT_EQ(out.edge_coloring->palette_size(), 2u);
    EXPECT_EQ(out.drawing->position(6), pt(4, 0));
    EXPECT_EQ(out.vertex_provenance[6], "split(e0)#1");
    const auto again = detect_crossings(out.graph, *out.drawing);
    EXPECT_EQ(again.size(), 2u);
    EXPECT_NE(again[0].edge_a, again[1].edge_a);
}

TEST(Split, PreservesVerdict)
{
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const Graph g = random_connected(6, 9, seed);
        const EdgeColoring c = random_edge_coloring(g, 3, seed);
        const Drawing d = convex_drawing(g);
        std::size_t crossings = 0;
        try {
            crossings = detect_crossings(g, d).size();
        } catch (const Error&) {
            continue;
        }
        (void)crossings;
        const auto out = split_multicrossed_edges(g, c, d);
        EXPECT_EQ(is_rainbow_connected(g, c).connected, is_rainbow_connected(out.graph, *out.edge_coloring).connected)
            << seed;
    }
}

TEST(Planarize, NoCrossingsIsIdentity)
{
    const Graph g = cycle_graph(5);
    const EdgeColoring c = EdgeColoring::uniform(5);
    const auto out = planarize(g, c, convex_drawing(g));
    EXPECT_EQ(out.graph, g);
    EXPECT_EQ(out.edge_coloring, c);
    EXPECT_TRUE(out.gadgets.empty());
}

TEST(Planarize, ConvexK4Counts)
{
    const Graph g = complete_graph(4);
    const EdgeColoring c = EdgeColoring::uniform(6);
    const auto out = planarize(g, c, convex_drawing(g));
    EXPECT_EQ(out.graph.vertex_count(), 13u);
    EXPECT_EQ(out.graph.edge_count(), 20u);
    EXPECT_EQ(out.edge_coloring->palette_size(), 6u);
    EXPECT_EQ(out.fresh_color_count, 5u);
    ASSERT_TRUE(out.drawing);
    EXPECT_TRUE(detect_crossings(out.graph, *out.drawing).empty());
}

TEST(Planarize, GadgetColorsAsSpecified)
{
    const Graph g = complete_graph(4);
    const EdgeColoring c(std::vector<ColorId>{0, 1, 2, 3, 4, 5});
    const auto out = planarize(g, c, convex_drawing(g));
    const GadgetRecord& rec = out.gadgets.at(0);
    const EdgeColoring& cc = *out.edge_coloring;
    const ColorId cxy = c[rec.crossing.edge_a], cuv = c[rec.crossing.edge_b];
    const auto color = [&](GadgetNode a, GadgetNode b) {
        return cc[*out.graph.find_edge(rec.vertex(a), rec.vertex(b))];
    };
    using N = GadgetNode;
    EXPECT_EQ(color(N::x, N::d), cxy);
    EXPECT_EQ(color(N::d, N::s), cxy);
    EXPECT_EQ(color(N::s, N::q), cxy);
    EXPECT_EQ(color(N::g, N::h), cxy);
    EXPECT_EQ(color(N::v, N::q), cuv);
    EXPECT_EQ(color(N::p, N::t), cuv);
    const auto& f = rec.fresh_colors;
    EXPECT_EQ(color(N::d, N::g), f[0]);
    EXPECT_EQ(color(N::p, N::q), f[0]);
    EXPECT_EQ(color(N::g, N::r), f[1]);
    EXPECT_EQ(color(N::h, N::l), f[1]);
    EXPECT_EQ(color(N::r, N::l), f[2]);
    EXPECT_EQ(color(N::r, N::p), f[3]);
    EXPECT_EQ(color(N::l, N::t), f[3]);
    EXPECT_EQ(color(N::r, N::s), f[3]);
    EXPECT_EQ(color(N::u, N::h), f[4]);
    EXPECT_EQ(color(N::t, N::y), f[4]);
    for (ColorId fresh : f)
        EXPECT_GE(fresh, c.palette_size());
    EXPECT_FALSE(out.graph.adjacent(rec.x, rec.y));
    EXPECT_FALSE(out.graph.adjacent(rec.u, rec.v));
    std::set<VertexId> grid(rec.grid.begin(), rec.grid.end());
    EXPECT_EQ(grid.size(), 9u);
    EXPECT_EQ(*grid.begin(), 4u);
}

TEST(Planarize, RequiresSplitFirst)
{
    const Graph g(6, {{0, 1}, {2, 3}, {4, 5}});
    const Drawing d(g, {pt(0, 0), pt(10, 0), pt(2, -1), pt(2, 1), pt(6, -1), pt(6, 1)});
    EXPECT_EQ(code_of([&] { planarize(g, EdgeColoring::uniform(3), d); }), Errc::precondition_violated);
    const auto out = planarize_drawing(g, EdgeColoring::uniform(3), d);
    EXPECT_EQ(out.gadgets.size(), 2u);
    EXPECT_TRUE(detect_crossings(out.graph, *out.drawing).empty());
}

TEST(Planarize, CountsOnConvexCompleteGraphs)
{
    for (std::size_t n = 4; n <= 6; ++n) {
        const Graph g = complete_graph(n);
        const EdgeColoring c = random_edge_coloring(g, 3, n);
        const Drawing d = convex_drawing(g);
        const std::size_t k = detect_crossings(g, d).size();
        const auto split = split_multicrossed_edges(g, c, d);
        const std::size_t k2 = detect_crossings(split.graph, *split.drawing).size();
        EXPECT_EQ(k, k2);
        const auto out = planarize(split.graph, *split.edge_coloring, *split.drawing);
        EXPECT_EQ(out.graph.vertex_count(), split.graph.vertex_count() + 9 * k);
        EXPECT_EQ(out.graph.edge_count(), split.graph.edge_count() + 14 * k);
        EXPECT_EQ(out.edge_coloring->palette_size(), split.edge_coloring->palette_size() + 5 * k);
        EXPECT_TRUE(detect_crossings(out.graph, *out.drawing).empty());
    }
}

TEST(Planarize, ProvenanceTotalAndComposed)
{
    const Graph g(6, {{0, 1}, {2, 3}, {4, 5}});
    const Drawing d(g, {pt(0, 0), pt(10, 0), pt(2, -1), pt(2, 1), pt(6, -1), pt(6, 1)});
    const auto out = planarize_drawing(g, EdgeColoring::uniform(3), d);
    EXPECT_EQ(out.vertex_provenance.size(), out.graph.vertex_count());
    EXPECT_EQ(out.edge_provenance.size(), out.graph.edge_count());
    EXPECT_EQ(out.vertex_provenance[6], "split(e0)#1");
    EXPECT_EQ(out.vertex_provenance[7], "gadget0.d");
    const std::string text = provenance_text(out);
    EXPECT_NE(text.find("v6 <- split(e0)#1\n"), std::string::npos);
}

// A path a-x-y-u-v-b whose edges xy and uv cross, all five edges colored
// differently. Every pair is joined along the path, so G is rainbow
// connected. After the crossing is replaced, getting from a to b means
// passing x->y and then u->v through the same grid: y is attached only by
// yt and u only by uh, and both carry the fifth fresh color. Inside the grid
// x cannot reach q at all, so a loses its rainbow paths to v and b.
TEST(Planarize, DoubleTraversalLosesRainbowPath)
{
    // a=0 x=1 y=2 u=3 v=4 b=5; x, u, y, v alternate on the parabola.
    const Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
    const std::vector<std::size_t> slots = {5, 0, 2, 1, 3, 4};
    const Drawing d = convex_drawing(g, &slots);
    const auto crossings = detect_crossings(g, d);
    ASSERT_EQ(crossings.size(), 1u);
    const EdgeColoring c = EdgeColoring::distinct(5);
    EXPECT_TRUE(is_rainbow_connected(g, c).connected);
    const auto out = planarize(g, c, d);
    const Verdict after = is_rainbow_connected(out.graph, *out.edge_coloring);
    EXPECT_FALSE(after.connected);
    EXPECT_EQ(after.counterexample, (std::pair<VertexId, VertexId>{0, 4}));
    EXPECT_FALSE(oracle::rainbow_pair(out.graph, *out.edge_coloring, 0, 5));
}

TEST(Bipartize, SingleEdge)
{
    const auto out = bipartize_subdivision(Graph(2, {{0, 1}}), EdgeColoring::uniform(1));
    EXPECT_EQ(out.graph, Graph(3, {{0, 2}, {1, 2}}));
    EXPECT_EQ(out.edge_coloring->colors(), (std::vector<ColorId>{0, 1}));
}

TEST(Bipartize, TriangleBecomesHexagon)
{
    const Graph g = complete_graph(3);
    const EdgeColoring c = EdgeColoring::uniform(3);
    const auto out = bipartize_subdivision(g, c);
    EXPECT_EQ(out.graph.vertex_count(), 6u);
    EXPECT_EQ(out.graph.edge_count(), 6u);
    for (VertexId v = 0; v < 6; ++v)
        EXPECT_EQ(out.graph.degree(v), 2u);
    EXPECT_TRUE(is_connected(out.graph));
    EXPECT_EQ(is_rainbow_connected(g, c).connected, is_rainbow_connected(out.graph, *out.edge_coloring).connected);
}

TEST(Bipartize, SidesAndOrientation)
{
    const Graph g = random_connected(6, 9, 4);
    const EdgeColoring c = random_edge_coloring(g, 3, 4);
    const auto out = bipartize_subdivision(g, c);
    EXPECT_EQ(out.fresh_color_count, 9u);
    for (const Edge& e : out.graph.edges())
        EXPECT_TRUE(e.u < 6 && e.v >= 6);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& near = out.graph.edge(2 * e);
        EXPECT_EQ(near.u, g.edge(e).u);
        EXPECT_EQ((*out.edge_coloring)[2 * e], c[e]);
        EXPECT_EQ((*out.edge_coloring)[2 * e + 1], c.palette_size() + e);
    }
    EXPECT_THROW(bipartize_subdivision(Graph(2, {}), EdgeColoring()), Error);
}

TEST(LineRvc, SingleEdge)
{
    const auto out = to_line_rvc(Graph(2, {{0, 1}}), EdgeColoring::uniform(1));
    EXPECT_EQ(out.graph.vertex_count(), 3u);
    EXPECT_EQ(out.graph.edge_count(), 2u);
    EXPECT_EQ(out.graph.degree(0), 2u);
    EXPECT_EQ(out.vertex_coloring->colors(), (std::vector<ColorId>{0, 1, 1}));
    EXPECT_TRUE(is_rainbow_vertex_connected(out.graph, *out.vertex_coloring).connected);
    EXPECT_EQ(out.vertex_provenance[1], "pendant(v0)");
}

TEST(LineRvc, TriangleDistinct)
{
    const Graph g = complete_graph(3);
    const auto out = to_line_rvc(g, EdgeColoring::distinct(3));
    EXPECT_EQ(out.graph.vertex_count(), 6u);
    EXPECT_EQ(out.vertex_coloring->palette_size(), 4u);
    EXPECT_TRUE(is_rainbow_connected(g, EdgeColoring::distinct(3)).connected);
    EXPECT_TRUE(is_rainbow_vertex_connected(out.graph, *out.vertex_coloring).connected);
}

TEST(LineRvc, Preconditions)
{
    EXPECT_EQ(code_of([] { to_line_rvc(Graph(1, {}), EdgeColoring()); }), Errc::precondition_violated);
    EXPECT_EQ(code_of([] { to_line_rvc(Graph(4, {{0, 1}, {2, 3}}), EdgeColoring::uniform(2)); }),
              Errc::precondition_violated);
}

TEST(Reductions, EquivalenceOnRandomInstances)
{
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        Rng rng(seed);
        const std::size_t n = rng.between(2, 6);
        const Graph g = random_connected(n, rng.between(n - 1, n * (n - 1) / 2), rng.next());
        const EdgeColoring c = random_edge_coloring(g, rng.between(1, 3), rng.next());
        const bool before = oracle::rainbow_connected(g, c);
        const auto bip = bipartize_subdivision(g, c);
        EXPECT_EQ(is_rainbow_connected(bip.graph, *bip.edge_coloring).connected, before) << seed;
        const auto line = to_line_rvc(g, c);
        EXPECT_EQ(is_rainbow_vertex_connected(line.graph, *line.vertex_coloring).connected, before) << seed;
    }
}

TEST(Reductions, PlanarBipartite)
{
    const Graph g = complete_graph(4);
    const EdgeColoring c = EdgeColoring::uniform(6);
    const auto out = planar_bipartite(g, c, convex_drawing(g));
    EXPECT_TRUE(is_bipartite(out.graph));
    EXPECT_TRUE(detect_crossings(out.graph, *out.drawing).empty());
    EXPECT_EQ(out.gadgets.size(), 1u);
    EXPECT_EQ(out.vertex_provenance.size(), out.graph.vertex_count());
    EXPECT_EQ(out.edge_provenance[0], "e0.near");
}
