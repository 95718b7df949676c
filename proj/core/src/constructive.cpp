#include "rainbow/constructive.hpp"

#include <algorithm>

#include "rainbow/error.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/solver.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

namespace {

std::size_t half_up(std::size_t n)
{
    return (n + 1) / 2;
}

bool verifies(const Graph& g, const EdgeColoring& c)
{
    return is_rainbow_connected(g, c).connected;
}

BoundedColoring finish(const Graph& g, EdgeColoring c, std::size_t bound, Strategy s)
{
    BoundedColoring out{std::move(c), bound, s, false};
    out.verified = out.coloring.palette_size() <= bound && verifies(g, out.coloring);
    return out;
}

std::vector<ColorId> cycle_rule(const HamiltonCycle& h, std::size_t edge_count)
{
    const std::size_t k = half_up(h.order.size());
    std::vector<ColorId> colors(edge_count, 0);
    for (std::size_t j = 0; j < h.cycle_edges.size(); ++j)
        colors[h.cycle_edges[j]] = j % k;
    return colors;
}

void require_diam_outerplanar(const Graph& g, std::size_t diam)
{
    if (g.vertex_count() < 2 || !is_connected(g))
        throw Error(Errc::precondition_violated, "graph must be connected");
    const StructureReport report = analyze(g);
    if (!report.bridges.empty())
        throw Error(Errc::precondition_violated, "graph has a bridge");
    if (report.diameter != diam)
        throw Error(Errc::precondition_violated,
                    "diameter is " + std::to_string(report.diameter) + ", expected " + std::to_string(diam));
    if (!is_outerplanar(g))
        throw Error(Errc::precondition_violated, "graph is not outerplanar");
}

BoundedColoring exact_fallback(const Graph& g, std::size_t bound)
{
    SolverOptions options;
    options.max_edges = std::max<std::size_t>(options.max_edges, g.edge_count());
    auto found = rc_upper_witness(g, bound, options);
    if (!found)
        throw Error(Errc::bound_unmet, "no rainbow coloring with " + std::to_string(bound) + " colors");
    return finish(g, std::move(*found), bound, Strategy::exact_fallback);
}

// Verified result, or the bounded search when the direct construction fails.
BoundedColoring checked(const Graph& g, BoundedColoring candidate)
{
    if (candidate.verified)
        return candidate;
    return exact_fallback(g, candidate.bound_claimed);
}

std::size_t chord_count(const Graph& g)
{
    return g.edge_count() - g.vertex_count();
}

// Case |C| = 4: some degree-2 vertex has non-adjacent neighbours, or the
// Hamilton cycle carries a single chord.
bool c4_case(const Graph& g)
{
    if (chord_count(g) == 1)
        return true;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != 2)
            continue;
        const auto& inc = g.incident(v);
        if (!g.adjacent(inc[0].neighbor, inc[1].neighbor))
            return true;
    }
    return false;
}

BoundedColoring color_fan(const Graph& g, const FanShape& fan)
{
    std::vector<ColorId> colors(g.edge_count(), 2);
    const auto& path = fan.path;
    if (path.size() == 4) {
        // Spokes 1,0,1,0 along the path; path edge (p_i, p_i+1) repeats the
        // spoke color of p_i+1.
        for (std::size_t i = 0; i < 4; ++i)
            colors[*g.find_edge(fan.hub, path[i])] = i % 2 == 0 ? 1 : 0;
        for (std::size_t i = 0; i + 1 < 4; ++i)
            colors[*g.find_edge(path[i], path[i + 1])] = i % 2 == 0 ? 0 : 1;
        return finish(g, EdgeColoring(std::move(colors)), 2, Strategy::fan_small);
    }
    for (std::size_t i = 0; i < path.size(); ++i)
        colors[*g.find_edge(fan.hub, path[i])] = i % 2;
    return finish(g, EdgeColoring::normalized(colors), 3, Strategy::fan_general);
}

CdsResult cds_of(const Graph& g, std::vector<VertexId> set)
{
    std::sort(set.begin(), set.end());
    CdsResult out{set, induced_subgraph(g, set)};
    return out;
}

} // namespace

std::string_view to_string(Strategy s)
{
    switch (s) {
    case Strategy::cycle: return "cycle";
    case Strategy::hamiltonian: return "hamiltonian";
    case Strategy::fan_small: return "fan_small";
    case Strategy::fan_general: return "fan_general";
    case Strategy::c4_case: return "c4_case";
    case Strategy::cut_vertex: return "cut_vertex";
    case Strategy::cds_extension: return "cds_extension";
    case Strategy::exact_fallback: return "exact_fallback";
    }
    return "unknown";
}

BoundedColoring color_cycle(std::size_t n)
{
    if (n < 3)
        throw Error(Errc::bad_params, "a cycle needs at least 3 vertices");
    const Graph g = cycle_graph(n);
    std::vector<ColorId> colors(n);
    for (std::size_t j = 0; j < n; ++j)
        colors[j] = j % half_up(n);
    return finish(g, EdgeColoring(std::move(colors)), half_up(n), Strategy::cycle);
}

BoundedColoring color_hamiltonian(const Graph& g)
{
    const auto h = g.vertex_count() >= 3 ? find_hamilton_cycle(g) : std::nullopt;
    if (!h)
        throw Error(Errc::not_hamiltonian, "graph has no Hamilton cycle");
    return finish(g, EdgeColoring(cycle_rule(*h, g.edge_count())), half_up(g.vertex_count()), Strategy::hamiltonian);
}

std::optional<FanShape> classify_fan(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    if (n < 3 || g.edge_count() != 2 * n - 3)
        return std::nullopt;
    for (VertexId hub = 0; hub < n; ++hub) {
        if (g.degree(hub) != n - 1)
            continue;
        // Others must induce a path: n-2 edges, degrees <= 2, connected.
        std::vector<VertexId> rest;
        for (VertexId v = 0; v < n; ++v)
            if (v != hub)
                rest.push_back(v);
        if (!induces_connected(g, rest))
            continue;
        bool path_like = true;
        VertexId end = rest.front();
        for (VertexId v : rest) {
            const std::size_t d = g.degree(v) - 1;
            if (d > 2)
                path_like = false;
            if (d <= 1)
                end = v;
        }
        if (!path_like)
            continue;
        FanShape fan{hub, {}};
        // Walk the path from whichever end follows the hub on the outer
        // Hamilton cycle (as it starts at vertex 0 with order[1] < back).
        std::vector<VertexId> walk{end};
        while (walk.size() < rest.size()) {
            for (const auto& inc : g.incident(walk.back()))
                if (inc.neighbor != hub && (walk.size() < 2 || inc.neighbor != walk[walk.size() - 2])) {
                    walk.push_back(inc.neighbor);
                    break;
                }
        }
        std::vector<VertexId> cyc{hub};
        cyc.insert(cyc.end(), walk.begin(), walk.end());
        auto zero = std::find(cyc.begin(), cyc.end(), VertexId{0});
        std::rotate(cyc.begin(), zero, cyc.end());
        if (cyc.size() > 2 && cyc[1] > cyc.back())
            std::reverse(cyc.begin() + 1, cyc.end());
        auto at_hub = std::find(cyc.begin(), cyc.end(), hub);
        std::rotate(cyc.begin(), at_hub, cyc.end());
        fan.path.assign(cyc.begin() + 1, cyc.end());
        return fan;
    }
    return std::nullopt;
}

BoundedColoring color_outerplanar_diam2(const Graph& g)
{
    require_diam_outerplanar(g, 2);
    const StructureReport report = analyze(g);
    if (!report.cut_vertices.empty()) {
        const CdsResult d = cds_of(g, {report.cut_vertices.front()});
        try {
            BoundedColoring out = cds_extension_coloring(g, d, EdgeColoring());
            out.strategy = Strategy::cut_vertex;
            return checked(g, std::move(out));
        } catch (const Error& e) {
            if (e.code() != Errc::bound_unmet)
                throw;
            return exact_fallback(g, 3);
        }
    }
    if (chord_count(g) == 0)
        return checked(g, finish(g, EdgeColoring(cycle_rule(outer_hamilton_cycle(g), g.edge_count())),
                                 half_up(g.vertex_count()), Strategy::cycle));
    if (c4_case(g)) {
        SolverOptions options;
        options.max_edges = std::max(options.max_edges, g.edge_count());
        if (auto two = rc_upper_witness(g, 2, options))
            return finish(g, std::move(*two), 2, Strategy::c4_case);
        return exact_fallback(g, 3);
    }
    if (auto fan = classify_fan(g)) {
        BoundedColoring out = color_fan(g, *fan);
        if (!out.verified)
            return exact_fallback(g, 3);
        return out;
    }
    // Three colors are only promised with a dominating vertex.
    try {
        const CdsResult d = min_connected_dominating_set(g, 1);
        return checked(g, cds_extension_coloring(g, d, EdgeColoring()));
    } catch (const Error& e) {
        if (e.code() != Errc::bound_unmet && e.code() != Errc::none_within_cap)
            throw;
        return exact_fallback(g, 3);
    }
}

BoundedColoring color_outerplanar_diam3(const Graph& g)
{
    require_diam_outerplanar(g, 3);
    if (chord_count(g) == 0)
        return checked(g, finish(g, EdgeColoring(cycle_rule(outer_hamilton_cycle(g), g.edge_count())),
                                 half_up(g.vertex_count()), Strategy::cycle));
    const CdsResult d = min_connected_dominating_set(g, 4);
    EdgeColoring inner;
    if (d.induced.graph.vertex_count() > 1)
        inner = rc_exact(d.induced.graph, 3).edge_coloring();
    try {
        BoundedColoring out = cds_extension_coloring(g, d, inner);
        out.bound_claimed = 6;
        return out;
    } catch (const Error& e) {
        if (e.code() != Errc::bound_unmet)
            throw;
        return exact_fallback(g, 6);
    }
}

BoundedColoring cds_extension_coloring(const Graph& g, const CdsResult& d_set, const EdgeColoring& inner)
{
    const std::size_t n = g.vertex_count();
    for (VertexId v = 0; v < n; ++v)
        if (g.degree(v) < 2)
            throw Error(Errc::precondition_violated, "minimum degree below two");
    if (d_set.set.empty() || !is_dominating(g, d_set.set) || !induces_connected(g, d_set.set))
        throw Error(Errc::precondition_violated, "not a connected dominating set");
    if (inner.size() != d_set.induced.graph.edge_count())
        throw Error(Errc::bad_coloring, "inner coloring does not match G[D]");

    std::vector<bool> in_d(n, false);
    for (VertexId v : d_set.set)
        in_d[v] = true;
    std::vector<std::optional<ColorId>> partial(g.edge_count());
    for (std::size_t i = 0; i < inner.size(); ++i)
        partial[d_set.induced.edge_of[i]] = inner[i];

    const ColorId a = inner.palette_size(), b = a + 1, c = a + 2;
    std::vector<ColorId> colors(g.edge_count(), c);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (partial[e])
            colors[e] = *partial[e];
    for (VertexId v = 0; v < n; ++v) {
        if (in_d[v])
            continue;
        std::size_t taken = 0;
        for (const auto& inc : g.incident(v)) {
            if (!in_d[inc.neighbor])
                continue;
            colors[inc.edge] = taken == 0 ? a : b;
            if (++taken == 2)
                break;
        }
    }
    const std::size_t bound = inner.palette_size() + 3;
    BoundedColoring out = finish(g, EdgeColoring::normalized(colors), bound, Strategy::cds_extension);
    if (out.verified)
        return out;
    auto searched = complete_edge_coloring(g, partial, 3);
    if (!searched)
        throw Error(Errc::bound_unmet, "no extension within " + std::to_string(bound) + " colors");
    return finish(g, std::move(*searched), bound, Strategy::cds_extension);
}

} // namespace rainbow
