#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rainbow/analysis.hpp"
#include "rainbow/error.hpp"
#include "rainbow/generators.hpp"

using namespace rainbow;

TEST(Analysis, CycleFive)
{
    const StructureReport r = analyze(cycle_graph(5));
    EXPECT_EQ(r.diameter, 2u);
    EXPECT_TRUE(r.bridges.empty());
    EXPECT_TRUE(r.cut_vertices.empty());
    EXPECT_TRUE(r.is_2connected);
    EXPECT_EQ(r.min_degree, 2u);
}

TEST(Analysis, PathFour)
{
    const StructureReport r = analyze(path_graph(4));
    EXPECT_EQ(r.diameter, 3u);
    EXPECT_EQ(r.bridges, (std::vector<EdgeId>{0, 1, 2}));
    EXPECT_EQ(r.cut_vertices, (std::vector<VertexId>{1, 2}));
    EXPECT_FALSE(r.is_2connected);
}

TEST(Analysis, FanSeven)
{
    const StructureReport r = analyze(fan_graph(7));
    EXPECT_EQ(r.diameter, 2u);
    EXPECT_TRUE(r.bridges.empty());
}

TEST(Analysis, DisconnectedDiameterIsInfinite)
{
    const Graph g(4, {{0, 1}, {2, 3}});
    EXPECT_EQ(analyze(g).diameter, kInfiniteDistance);
    EXPECT_FALSE(is_connected(g));
}

TEST(Analysis, StructureMatchesOracle)
{
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const Graph g = random_connected(8, 8 + seed % 6, seed);
        const StructureReport r = analyze(g);
        EXPECT_EQ(r.diameter, oracle::diameter(g)) << seed;
        EXPECT_EQ(r.bridges, oracle::bridges(g)) << seed;
        EXPECT_EQ(r.cut_vertices, oracle::cut_vertices(g)) << seed;
        EXPECT_EQ(r.is_2connected, oracle::cut_vertices(g).empty()) << seed;
    }
}

TEST(Analysis, SimplePredicates)
{
    EXPECT_TRUE(is_complete(complete_graph(5)));
    EXPECT_FALSE(is_complete(cycle_graph(4)));
    EXPECT_TRUE(is_tree(star_graph(5)));
    EXPECT_FALSE(is_tree(cycle_graph(5)));
    EXPECT_TRUE(is_bipartite(cycle_graph(6)));
    EXPECT_FALSE(is_bipartite(cycle_graph(5)));
}

TEST(Outerplanar, Examples)
{
    EXPECT_TRUE(is_outerplanar(cycle_graph(6)));
    EXPECT_FALSE(is_outerplanar(complete_graph(4)));
    EXPECT_TRUE(is_outerplanar(fan_graph(8)));
    EXPECT_TRUE(oracle::outerplanar(fan_graph(8)));
    const Graph k23(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    EXPECT_FALSE(is_outerplanar(k23));
    EXPECT_TRUE(has_k23_minor(k23));
    EXPECT_TRUE(has_k4_minor(complete_graph(4)));
}

TEST(Outerplanar, SubdividedMinorsDetected)
{
    // K4 with one edge subdivided twice; K2,3 with a subdivided spoke.
    const Graph k4s(6, {{0, 1}, {0, 2}, {0, 4}, {4, 5}, {5, 3}, {1, 2}, {1, 3}, {2, 3}});
    EXPECT_FALSE(is_outerplanar(k4s));
    const Graph k23s(6, {{0, 2}, {0, 3}, {0, 5}, {5, 4}, {1, 2}, {1, 3}, {1, 4}});
    EXPECT_FALSE(is_outerplanar(k23s));
}

TEST(Outerplanar, AgreesWithBookEmbeddingOracle)
{
    std::size_t yes = 0, no = 0;
    for (std::uint64_t seed = 1; seed <= 250; ++seed) {
        const std::size_t n = 4 + seed % 5;
        const std::size_t m = std::min(n * (n - 1) / 2, n - 1 + seed % n);
        const Graph g = random_connected(n, m, seed);
        const bool expected = oracle::outerplanar(g);
        EXPECT_EQ(is_outerplanar(g), expected) << "seed " << seed;
        (expected ? yes : no) += 1;
    }
    EXPECT_GT(yes, 30u);
    EXPECT_GT(no, 30u);
}

TEST(Outerplanar, TooLarge)
{
    try {
        is_outerplanar(cycle_graph(17));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::too_large);
    }
    EXPECT_TRUE(is_outerplanar(cycle_graph(17), 20));
}

TEST(HamiltonCycle, CycleFive)
{
    const HamiltonCycle h = outer_hamilton_cycle(cycle_graph(5));
    EXPECT_EQ(h.order.size(), 5u);
    EXPECT_TRUE(h.chords.empty());
}

TEST(HamiltonCycle, FanFive)
{
    // v, x1, x2, y2, y1 = 0, 1, 2, 4, 3
    const Graph g = fan_graph(5);
    const HamiltonCycle h = outer_hamilton_cycle(g);
    EXPECT_EQ(h.order, (std::vector<VertexId>{0, 1, 2, 4, 3}));
    std::vector<EdgeId> chords = {*g.find_edge(1, 3), *g.find_edge(1, 4)};
    std::sort(chords.begin(), chords.end());
    EXPECT_EQ(h.chords, chords);
}

TEST(HamiltonCycle, RandomOuterplanarCoversAll)
{
    const Graph g = random_outerplanar(9, 3);
    const HamiltonCycle h = outer_hamilton_cycle(g);
    std::vector<VertexId> sorted = h.order;
    std::sort(sorted.begin(), sorted.end());
    for (VertexId v = 0; v < 9; ++v)
        EXPECT_EQ(sorted[v], v);
    for (std::size_t i = 0; i < 9; ++i)
        EXPECT_EQ(g.find_edge(h.order[i], h.order[(i + 1) % 9]), h.cycle_edges[i]);
    EXPECT_EQ(h.cycle_edges.size() + h.chords.size(), g.edge_count());
}

TEST(HamiltonCycle, Preconditions)
{
    EXPECT_THROW(outer_hamilton_cycle(path_graph(4)), Error);
    EXPECT_THROW(outer_hamilton_cycle(complete_graph(4)), Error);
    EXPECT_FALSE(find_hamilton_cycle(star_graph(4)));
    EXPECT_TRUE(find_hamilton_cycle(complete_graph(5)));
}

TEST(HamiltonCycle, ExistenceMatchesOracle)
{
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        const Graph g = random_connected(7, 7 + seed % 8, seed);
        EXPECT_EQ(find_hamilton_cycle(g).has_value(), oracle::hamiltonian(g)) << seed;
    }
}

TEST(Cds, Examples)
{
    const CdsResult star = min_connected_dominating_set(star_graph(5));
    EXPECT_EQ(star.set, (std::vector<VertexId>{0}));
    EXPECT_EQ(min_connected_dominating_set(cycle_graph(6)).size(), 4u);
    EXPECT_EQ(oracle::min_cds_size(cycle_graph(6)), 4u);
    const CdsResult fan = min_connected_dominating_set(fan_graph(7));
    EXPECT_EQ(fan.set, (std::vector<VertexId>{fan_labels(7).x[0]}));
    EXPECT_EQ(oracle::min_cds_size(fan_graph(7)), 1u);
}

TEST(Cds, NoneWithinCap)
{
    try {
        min_connected_dominating_set(path_graph(8), 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::none_within_cap);
    }
}

TEST(Cds, MinimalAgainstBruteForce)
{
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const std::size_t n = 5 + seed % 6;
        const Graph g = random_connected(n, n + seed % 5, seed);
        const CdsResult d = min_connected_dominating_set(g, n);
        EXPECT_TRUE(oracle::dominating_connected(g, d.set)) << seed;
        EXPECT_EQ(d.size(), oracle::min_cds_size(g)) << seed;
        EXPECT_EQ(d.induced.graph.vertex_count(), d.size());
    }
}

TEST(LineGraph, Examples)
{
    EXPECT_EQ(line_graph(path_graph(3)).graph, Graph(2, {{0, 1}}));
    const Graph k3 = line_graph(complete_graph(3)).graph;
    EXPECT_EQ(k3.edge_count(), 3u);
    EXPECT_TRUE(is_complete(k3));
    const Graph claw = line_graph(star_graph(4)).graph;
    EXPECT_TRUE(is_complete(claw));
    EXPECT_EQ(claw.vertex_count(), 3u);
    EXPECT_THROW(line_graph(Graph(3, {})), Error);
}

TEST(LineGraph, DegreeIdentity)
{
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Graph g = random_connected(8, 12, seed);
        const LineGraph l = line_graph(g);
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            EXPECT_EQ(l.graph.degree(l.vertex_of_edge[e]), g.degree(g.edge(e).u) + g.degree(g.edge(e).v) - 2);
    }
}
