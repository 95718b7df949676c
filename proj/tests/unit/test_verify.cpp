#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rainbow/error.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/reductions.hpp"
#include "rainbow/verify.hpp"

using namespace rainbow;

namespace {

// fan(5) with c(vx1)=c(vy1)=c(x1y2)=c(x2y2)=1 and c(x1y1)=c(y1y2)=c(x1x2)=2,
// written with colors 0 and 1.
EdgeColoring fan5_two_coloring(const Graph& g)
{
    std::vector<ColorId> colors(g.edge_count());
    const auto set = [&](VertexId a, VertexId b, ColorId c) { colors[*g.find_edge(a, b)] = c; };
    set(0, 1, 0);
    set(0, 3, 0);
    set(1, 4, 0);
    set(2, 4, 0);
    set(1, 3, 1);
    set(3, 4, 1);
    set(1, 2, 1);
    return EdgeColoring(colors);
}

} // namespace

TEST(Verify, SingleEdge)
{
    const Graph g(2, {{0, 1}});
    const auto w = rainbow_path_exists(g, EdgeColoring::uniform(1), 0, 1);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->path, (std::vector<VertexId>{0, 1}));
}

TEST(Verify, MonochromePathFails)
{
    const Graph g = path_graph(3);
    EXPECT_FALSE(rainbow_path_exists(g, EdgeColoring::uniform(2), 0, 2));
    const Verdict v = is_rainbow_connected(g, EdgeColoring::uniform(2));
    EXPECT_FALSE(v.connected);
    EXPECT_EQ(v.counterexample, (std::pair<VertexId, VertexId>{0, 2}));
}

TEST(Verify, CompleteGraphOneColor)
{
    EXPECT_TRUE(is_rainbow_connected(complete_graph(4), EdgeColoring::uniform(6)).connected);
}

TEST(Verify, FanFiveTwoColoring)
{
    const Graph g = fan_graph(5);
    const EdgeColoring c = fan5_two_coloring(g);
    EXPECT_EQ(c.palette_size(), 2u);
    EXPECT_TRUE(is_rainbow_connected(g, c).connected);
    EXPECT_TRUE(oracle::rainbow_connected(g, c));
}

TEST(Verify, AlternatingHexagonFails)
{
    const EdgeColoring c(std::vector<ColorId>{0, 1, 0, 1, 0, 1});
    EXPECT_FALSE(is_rainbow_connected(cycle_graph(6), c).connected);
    EXPECT_FALSE(oracle::rainbow_pair(cycle_graph(6), c, 0, 3));
}

TEST(Verify, GadgetRouteFromXToY)
{
    // Convex K4: edges (0,2) and (1,3) cross.
    const Graph g = complete_graph(4);
    const EdgeColoring c = EdgeColoring::distinct(6);
    const auto out = planarize(g, c, convex_drawing(g));
    ASSERT_EQ(out.gadgets.size(), 1u);
    const GadgetRecord& rec = out.gadgets[0];
    const std::vector<VertexId> route = {rec.x,
                                         rec.vertex(GadgetNode::d),
                                         rec.vertex(GadgetNode::g),
                                         rec.vertex(GadgetNode::r),
                                         rec.vertex(GadgetNode::l),
                                         rec.vertex(GadgetNode::t),
                                         rec.y};
    EXPECT_TRUE(is_rainbow_path(out.graph, *out.edge_coloring, route));
    EXPECT_TRUE(rainbow_path_exists(out.graph, *out.edge_coloring, rec.x, rec.y));
}

TEST(Verify, PaletteBound)
{
    const Graph g = path_graph(30);
    try {
        is_rainbow_connected(g, EdgeColoring::distinct(29));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::palette_too_large);
    }
    VerifyOptions wide;
    wide.palette_bound = 64;
    EXPECT_TRUE(is_rainbow_connected(g, EdgeColoring::distinct(29), wide).connected);
}

TEST(VerifyVertex, Examples)
{
    const Graph p4 = path_graph(4);
    const auto adjacent = vertex_rainbow_path_exists(p4, VertexColoring::uniform(4), 1, 2);
    ASSERT_TRUE(adjacent);
    EXPECT_EQ(adjacent->path, (std::vector<VertexId>{1, 2}));
    EXPECT_FALSE(vertex_rainbow_path_exists(p4, VertexColoring::uniform(4), 0, 3));
    const VertexColoring split(std::vector<ColorId>{0, 0, 1, 0});
    const auto whole = vertex_rainbow_path_exists(p4, split, 0, 3);
    ASSERT_TRUE(whole);
    EXPECT_EQ(whole->path, (std::vector<VertexId>{0, 1, 2, 3}));
}

TEST(VerifyVertex, CompleteAndCycle)
{
    EXPECT_TRUE(is_rainbow_vertex_connected(complete_graph(5), VertexColoring::uniform(5)).connected);
    // C5 has diameter 2, so one internal vertex per pair suffices
    EXPECT_TRUE(is_rainbow_vertex_connected(cycle_graph(5), VertexColoring::uniform(5)).connected);
    EXPECT_FALSE(is_rainbow_vertex_connected(cycle_graph(6), VertexColoring::uniform(6)).connected);
}

TEST(Verify, WitnessesCheckIndependently)
{
    VerifyOptions options;
    options.collect_witnesses = true;
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const Graph g = random_connected(7, 9, seed);
        const EdgeColoring c = random_edge_coloring(g, 6, seed);
        const Verdict v = is_rainbow_connected(g, c, options);
        if (!v.connected)
            continue;
        EXPECT_EQ(v.witnesses.size(), 21u);
        for (const auto& w : v.witnesses) {
            EXPECT_EQ(w.path.front(), w.u);
            EXPECT_EQ(w.path.back(), w.v);
            EXPECT_TRUE(oracle::edge_colors_distinct(g, c, w.path));
            EXPECT_TRUE(is_rainbow_path(g, c, w.path));
        }
    }
}

TEST(Verify, AgreesWithPathEnumeration)
{
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        Rng rng(seed);
        const std::size_t n = rng.between(2, 7);
        const std::size_t m = rng.between(n - 1, n * (n - 1) / 2);
        const Graph g = random_connected(n, m, rng.next());
        const EdgeColoring c = random_edge_coloring(g, rng.between(1, 4), rng.next());
        EXPECT_EQ(is_rainbow_connected(g, c).connected, oracle::rainbow_connected(g, c)) << seed;
        const VertexColoring vc = random_vertex_coloring(g, rng.between(1, 4), rng.next());
        EXPECT_EQ(is_rainbow_vertex_connected(g, vc).connected, oracle::vertex_rainbow_connected(g, vc)) << seed;
    }
}

TEST(Verify, DistinctColorsMeanConnectivity)
{
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Graph g = random_connected(8, 10, seed);
        EXPECT_TRUE(is_rainbow_connected(g, EdgeColoring::distinct(10)).connected);
        EXPECT_TRUE(is_rainbow_vertex_connected(g, VertexColoring::distinct(8)).connected);
    }
    const Graph split(4, {{0, 1}, {2, 3}});
    EXPECT_FALSE(is_rainbow_connected(split, EdgeColoring::distinct(2)).connected);
}

TEST(Verify, RefiningAColorNeverHurts)
{
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const Graph g = random_connected(6, 8, seed);
        const EdgeColoring c = random_edge_coloring(g, 3, seed);
        if (!is_rainbow_connected(g, c).connected)
            continue;
        for (ColorId split = 0; split < c.palette_size(); ++split) {
            std::vector<ColorId> refined = c.colors();
            for (auto& x : refined)
                if (x == split)
                    x = c.palette_size();
            EXPECT_TRUE(is_rainbow_connected(g, EdgeColoring::normalized(refined)).connected);
        }
    }
}
