#include "rainbow/corpus.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "rainbow/analysis.hpp"
#include "rainbow/constructive.hpp"
#include "rainbow/error.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/reductions.hpp"
#include "rainbow/solver.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

namespace {

constexpr std::array<std::pair<Check, std::string_view>, 8> kCheckNames = {{
    {Check::diam2_bound, "diam2_bound"},
    {Check::diam3_bound, "diam3_bound"},
    {Check::planarize_equiv, "planarize_equiv"},
    {Check::bipartize_equiv, "bipartize_equiv"},
    {Check::linegraph_equiv, "linegraph_equiv"},
    {Check::cds_bound, "cds_bound"},
    {Check::diam2_lemma, "diam2_lemma"},
    {Check::hamiltonian_bound, "hamiltonian_bound"},
}};

std::optional<std::pair<Graph, Drawing>> drawn_random(const CorpusSpec& spec, std::size_t n, Rng& rng)
{
    const std::size_t m = spec.m ? spec.m : std::min(n * (n - 1) / 2, n + n / 2);
    Graph g = random_connected(n, m, rng.next());
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i)
        order[i] = i;
    rng.shuffle(order);
    Drawing d = convex_drawing(g, &order);
    return std::pair{std::move(g), std::move(d)};
}

// Vertices 0..5 play a, x, y, u, v, b on the path a-x-y-u-v-b; x, u, y, v
// take the first four convex slots so xy and uv cross.
std::pair<Graph, Drawing> drawn_adversarial(const CorpusSpec& spec, std::size_t n, Rng& rng,
                                            std::vector<ColorId>& colors)
{
    std::vector<std::pair<VertexId, VertexId>> edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}};
    std::vector<ColorId> path_colors = {0, 1, 2, 3, 4};
    rng.shuffle(path_colors);
    auto present = [&](VertexId a, VertexId b) {
        return std::any_of(edges.begin(), edges.end(), [&](const auto& e) {
            return (e.first == a && e.second == b) || (e.first == b && e.second == a);
        });
    };
    for (VertexId w = 6; w < n; ++w) {
        edges.emplace_back(rng.below(w), w);
        if (rng.percent(50)) {
            const VertexId other = rng.below(w);
            if (!present(other, w))
                edges.emplace_back(other, w);
        }
    }
    const std::size_t extra = rng.below(4);
    for (std::size_t i = 0; i < extra; ++i) {
        const VertexId a = rng.below(n), b = rng.below(n);
        if (a != b && !present(a, b))
            edges.emplace_back(a, b);
    }
    Graph g(n, edges);
    const std::size_t palette = std::max<std::size_t>(spec.palette, 5);
    colors.assign(edges.size(), 0);
    for (std::size_t e = 0; e < edges.size(); ++e)
        colors[e] = e < 5 ? path_colors[e] : rng.below(palette);

    std::vector<std::size_t> order(n);
    std::vector<std::size_t> tail;
    for (std::size_t slot = 4; slot < n; ++slot)
        tail.push_back(slot);
    rng.shuffle(tail);
    order[1] = 0;
    order[3] = 1;
    order[2] = 2;
    order[4] = 3;
    order[0] = tail[0];
    order[5] = tail[1];
    for (VertexId w = 6; w < n; ++w)
        order[w] = tail[w - 4];
    Drawing d = convex_drawing(g, &order);
    return {std::move(g), std::move(d)};
}

bool keep(const CorpusSpec& spec, const Graph& g)
{
    if (!is_connected(g))
        return false;
    if (spec.diameter && diameter(g) != *spec.diameter)
        return false;
    if (spec.bridgeless && !analyze(g).bridges.empty())
        return false;
    return true;
}

std::optional<CorpusInstance> attempt(const CorpusSpec& spec, std::uint64_t seed)
{
    Rng rng(seed);
    const std::size_t n = rng.between(spec.n_min, spec.n_max);
    CorpusInstance out;
    out.seed = seed;
    const bool drawn = spec.family == "drawn_random" || spec.family == "drawn_adversarial";
    if (drawn) {
        std::vector<ColorId> raw;
        if (spec.family == "drawn_random") {
            auto made = drawn_random(spec, n, rng);
            out.graph = std::move(made->first);
            out.drawing = std::move(made->second);
        } else {
            auto made = drawn_adversarial(spec, std::max<std::size_t>(n, 6), rng, raw);
            out.graph = std::move(made.first);
            out.drawing = std::move(made.second);
        }
        std::size_t crossings = 0;
        try {
            crossings = detect_crossings(out.graph, *out.drawing).size();
        } catch (const Error&) {
            return std::nullopt;
        }
        if (crossings < spec.crossings_min || crossings > spec.crossings_max)
            return std::nullopt;
        if (!keep(spec, out.graph))
            return std::nullopt;
        out.colors = raw.empty() ? random_edge_coloring(out.graph, rng.between(1, spec.palette), rng.next())
                                 : EdgeColoring::normalized(raw);
        return out;
    }
    const auto family = parse_family(spec.family);
    if (!family || *family == Family::convex)
        throw Error(Errc::bad_params, "unknown corpus family '" + spec.family + "'");
    GeneratorParams params;
    params.n = n;
    params.m = spec.m;
    params.seed = rng.next();
    params.chord_percent = spec.chord_percent;
    // Each block needs three vertices, and blocks share one vertex each.
    const std::size_t blocks_fit = std::max<std::size_t>((n - 1) / 2, 1);
    params.blocks = rng.between(1, std::clamp<std::size_t>(spec.blocks_max, 1, blocks_fit));
    try {
        out.graph = generate(*family, params).graph;
    } catch (const Error& e) {
        if (e.code() == Errc::bad_params)
            throw;
        return std::nullopt;
    }
    if (!keep(spec, out.graph))
        return std::nullopt;
    out.colors = random_edge_coloring(out.graph, rng.between(1, spec.palette), rng.next());
    return out;
}

SolverOptions solver_options(const CorpusSpec& spec)
{
    SolverOptions options;
    options.max_edges = spec.solver_max_edges;
    options.max_vertices = spec.solver_max_edges;
    return options;
}

CheckResult pass()
{
    return {Outcome::pass, {}};
}

CheckResult fail(std::string detail)
{
    return {Outcome::fail, std::move(detail)};
}

CheckResult skip(std::string detail)
{
    return {Outcome::skip, std::move(detail)};
}

std::string verdict_text(bool v)
{
    return v ? "connected" : "not connected";
}

CheckResult bound_check(const Graph& g, const CorpusSpec& spec, std::size_t diam, std::size_t lo, std::size_t hi)
{
    if (diameter(g) != diam || !analyze(g).bridges.empty() || !is_outerplanar(g))
        return skip("not a bridgeless outerplanar graph of diameter " + std::to_string(diam));
    BoundedColoring built;
    try {
        built = diam == 2 ? color_outerplanar_diam2(g) : color_outerplanar_diam3(g);
    } catch (const Error& e) {
        return fail(std::string(to_string(e.code())) + ": " + e.what());
    }
    if (!built.verified || built.coloring.palette_size() > hi)
        return fail("construction (" + std::string(to_string(built.strategy)) + ") used " +
                    std::to_string(built.coloring.palette_size()) + " colors, verified=" +
                    (built.verified ? "yes" : "no"));
    const std::size_t rc = rc_exact(g, hi, solver_options(spec)).value;
    if (rc < lo)
        return fail("rc = " + std::to_string(rc));
    return pass();
}

CheckResult equivalence(bool before, bool after, const char* what)
{
    if (before == after)
        return pass();
    return fail(std::string(what) + ": input " + verdict_text(before) + ", output " + verdict_text(after));
}

} // namespace

std::optional<Check> parse_check(std::string_view name)
{
    for (const auto& [check, text] : kCheckNames)
        if (text == name)
            return check;
    return std::nullopt;
}

std::string_view to_string(Check check)
{
    for (const auto& [c, text] : kCheckNames)
        if (c == check)
            return text;
    return "unknown";
}

Instance CorpusInstance::as_instance() const
{
    return Instance{graph, colors, std::nullopt, drawing};
}

std::vector<CorpusInstance> build_corpus(const CorpusSpec& spec)
{
    if (spec.n_min > spec.n_max || spec.n_min < 1)
        throw Error(Errc::bad_params, "bad vertex range");
    if (spec.palette < 1)
        throw Error(Errc::bad_params, "palette must be positive");
    std::vector<CorpusInstance> out;
    Rng master(spec.seed);
    std::size_t attempts = 0;
    while (out.size() < spec.count) {
        if (attempts++ >= spec.max_attempts)
            throw Error(Errc::bad_params, "corpus filter rejected " + std::to_string(spec.max_attempts) +
                                              " candidates; loosen the parameters");
        if (auto made = attempt(spec, master.next()))
            out.push_back(std::move(*made));
    }
    return out;
}

CheckResult run_check(Check check, const CorpusInstance& inst, const CorpusSpec& spec)
{
    const Graph& g = inst.graph;
    try {
        switch (check) {
        case Check::diam2_bound: return bound_check(g, spec, 2, 2, 3);
        case Check::diam3_bound: return bound_check(g, spec, 3, 3, 6);
        case Check::planarize_equiv: {
            if (!inst.drawing)
                return skip("no drawing");
            const auto out = planarize_drawing(g, inst.colors, *inst.drawing);
            return equivalence(is_rainbow_connected(g, inst.colors).connected,
                               is_rainbow_connected(out.graph, *out.edge_coloring).connected, "planarize");
        }
        case Check::bipartize_equiv: {
            if (g.edge_count() == 0)
                return skip("no edges");
            const auto out = bipartize_subdivision(g, inst.colors);
            return equivalence(is_rainbow_connected(g, inst.colors).connected,
                               is_rainbow_connected(out.graph, *out.edge_coloring).connected, "bipartize");
        }
        case Check::linegraph_equiv: {
            if (g.vertex_count() < 2)
                return skip("fewer than two vertices");
            const auto out = to_line_rvc(g, inst.colors);
            return equivalence(is_rainbow_connected(g, inst.colors).connected,
                               is_rainbow_vertex_connected(out.graph, *out.vertex_coloring).connected, "linegraph");
        }
        case Check::cds_bound: {
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                if (g.degree(v) < 2)
                    return skip("minimum degree below two");
            const CdsResult d = min_connected_dominating_set(g, g.vertex_count());
            const auto options = solver_options(spec);
            const SolveResult inner = rc_exact(d.induced.graph, d.size(), options);
            const std::size_t inner_rc = inner.value;
            const std::size_t rc = rc_exact(g, g.edge_count(), options).value;
            if (rc > inner_rc + 3)
                return fail("rc = " + std::to_string(rc) + ", rc(G[D]) = " + std::to_string(inner_rc));
            const BoundedColoring ext = cds_extension_coloring(g, d, inner.edge_coloring());
            if (!ext.verified || ext.coloring.palette_size() > inner_rc + 3)
                return fail("extension used " + std::to_string(ext.coloring.palette_size()) + " colors");
            return pass();
        }
        case Check::diam2_lemma: {
            if (diameter(g) != 2 || !analyze(g).bridges.empty())
                return skip("not a bridgeless graph of diameter 2");
            rc_exact(g, 5, solver_options(spec));
            return pass();
        }
        case Check::hamiltonian_bound: {
            if (g.vertex_count() < 3 || !find_hamilton_cycle(g))
                return skip("not Hamiltonian");
            const std::size_t bound = (g.vertex_count() + 1) / 2;
            const BoundedColoring built = color_hamiltonian(g);
            if (!built.verified || built.coloring.palette_size() > bound)
                return fail("construction used " + std::to_string(built.coloring.palette_size()) + " colors");
            rc_exact(g, bound, solver_options(spec));
            return pass();
        }
        }
    } catch (const Error& e) {
        if (e.code() == Errc::too_large)
            return skip(e.what());
        return fail(std::string(to_string(e.code())) + ": " + e.what());
    }
    return skip("unknown check");
}

CorpusSummary run_corpus(const CorpusSpec& spec, std::span<const Check> checks)
{
    CorpusSummary summary;
    const auto corpus = build_corpus(spec);
    summary.instances = corpus.size();
    for (Check check : checks) {
        CheckTally tally;
        tally.check = check;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const CheckResult r = run_check(check, corpus[i], spec);
            switch (r.outcome) {
            case Outcome::pass: ++tally.passed; break;
            case Outcome::skip: ++tally.skipped; break;
            case Outcome::fail:
                ++tally.failed;
                tally.failures.push_back({i, r.detail, serialize(corpus[i].as_instance())});
                break;
            }
        }
        summary.tallies.push_back(std::move(tally));
    }
    return summary;
}

bool rainbow_path_uses_both(const Graph& g, const EdgeColoring& c, EdgeId a, EdgeId b)
{
    const std::size_t n = g.vertex_count();
    std::vector<bool> on_path(n, false);
    std::vector<bool> color_used(c.palette_size(), false);
    std::function<bool(VertexId, bool, bool)> extend = [&](VertexId at, bool has_a, bool has_b) {
        if (has_a && has_b)
            return true;
        for (const auto& inc : g.incident(at)) {
            if (on_path[inc.neighbor] || color_used[c[inc.edge]])
                continue;
            on_path[inc.neighbor] = true;
            color_used[c[inc.edge]] = true;
            const bool found = extend(inc.neighbor, has_a || inc.edge == a, has_b || inc.edge == b);
            on_path[inc.neighbor] = false;
            color_used[c[inc.edge]] = false;
            if (found)
                return true;
        }
        return false;
    };
    for (VertexId s = 0; s < n; ++s) {
        on_path[s] = true;
        const bool found = extend(s, false, false);
        on_path[s] = false;
        if (found)
            return true;
    }
    return false;
}

} // namespace rainbow
