#include "rainbow/generators.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "rainbow/analysis.hpp"
#include "rainbow/error.hpp"

namespace rainbow {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

std::uint64_t Rng::below(std::uint64_t bound)
{
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw Error(Errc::bad_params, what);
}

Graph relabeled(std::size_t n, const EdgeList& edges, Rng& rng)
{
    std::vector<VertexId> perm(n);
    for (VertexId v = 0; v < n; ++v)
        perm[v] = v;
    rng.shuffle(perm);
    EdgeList out;
    out.reserve(edges.size());
    for (auto [a, b] : edges)
        out.emplace_back(perm[a], perm[b]);
    rng.shuffle(out);
    return Graph(n, out);
}

void add_random_edge(std::size_t n, std::set<std::pair<VertexId, VertexId>>& present, EdgeList& edges, Rng& rng,
                     std::optional<VertexId> from = std::nullopt)
{
    for (;;) {
        const VertexId a = from ? *from : rng.below(n);
        const VertexId b = rng.below(n);
        if (a == b)
            continue;
        const auto key = std::minmax(a, b);
        if (present.insert(key).second) {
            edges.emplace_back(key.first, key.second);
            return;
        }
    }
}

// Triangulation of the polygon 0..n-1 (cycle edges plus chords).
void triangulate(VertexId lo, VertexId hi, EdgeList& chords, Rng& rng)
{
    if (hi - lo < 2)
        return;
    const VertexId apex = lo + 1 + rng.below(hi - lo - 1);
    if (apex > lo + 1)
        chords.emplace_back(lo, apex);
    if (hi > apex + 1)
        chords.emplace_back(apex, hi);
    triangulate(lo, apex, chords, rng);
    triangulate(apex, hi, chords, rng);
}

EdgeList outerplanar_block(std::size_t n, unsigned chord_percent, Rng& rng)
{
    EdgeList edges;
    for (VertexId i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    EdgeList chords;
    triangulate(0, n - 1, chords, rng);
    for (auto c : chords)
        if (rng.percent(chord_percent))
            edges.push_back(c);
    return edges;
}

} // namespace

Graph cycle_graph(std::size_t n)
{
    require(n >= 3, "cycle needs n >= 3");
    EdgeList edges;
    for (VertexId i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph complete_graph(std::size_t n)
{
    require(n >= 1, "complete graph needs n >= 1");
    EdgeList edges;
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b)
            edges.emplace_back(a, b);
    return Graph(n, edges);
}

Graph path_graph(std::size_t n)
{
    require(n >= 1, "path needs n >= 1");
    EdgeList edges;
    for (VertexId i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph star_graph(std::size_t n)
{
    require(n >= 2, "star needs n >= 2");
    EdgeList edges;
    for (VertexId i = 1; i < n; ++i)
        edges.emplace_back(0, i);
    return Graph(n, edges);
}

Graph grid_graph(std::size_t rows, std::size_t cols)
{
    require(rows >= 1 && cols >= 1, "grid needs positive dimensions");
    EdgeList edges;
    auto id = [cols](std::size_t r, std::size_t c) { return r * cols + c; };
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols)
                edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows)
                edges.emplace_back(id(r, c), id(r + 1, c));
        }
    return Graph(rows * cols, edges);
}

Graph wheel_graph(std::size_t n)
{
    require(n >= 4, "wheel needs n >= 4");
    EdgeList edges;
    for (VertexId i = 1; i < n; ++i)
        edges.emplace_back(0, i);
    for (VertexId i = 1; i < n; ++i)
        edges.emplace_back(i, i + 1 < n ? i + 1 : 1);
    return Graph(n, edges);
}

FanLabels fan_labels(std::size_t n)
{
    require(n >= 3, "fan needs n >= 3");
    const std::size_t a = n / 2; // ceil((n-1)/2)
    const std::size_t b = (n - 1) / 2;
    FanLabels labels;
    for (std::size_t i = 1; i <= a; ++i)
        labels.x.push_back(i);
    for (std::size_t i = 1; i <= b; ++i)
        labels.y.push_back(a + i);
    return labels;
}

Graph fan_graph(std::size_t n)
{
    const FanLabels L = fan_labels(n);
    const auto& x = L.x;
    const auto& y = L.y;
    EdgeList edges{{L.v, x[0]}, {L.v, y[0]}};
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        edges.emplace_back(x[i], x[i + 1]);
    edges.emplace_back(x.back(), y.back());
    for (std::size_t i = y.size() - 1; i > 0; --i)
        edges.emplace_back(y[i], y[i - 1]);
    // Chords from the hub x1, y-side first.
    for (VertexId w : y)
        if (w != y.back() || x.size() != 1)
            edges.emplace_back(x[0], w);
    for (std::size_t i = 2; i < x.size(); ++i)
        edges.emplace_back(x[0], x[i]);
    return Graph(n, edges);
}

Graph random_tree(std::size_t n, std::uint64_t seed)
{
    require(n >= 1, "tree needs n >= 1");
    Rng rng(seed);
    EdgeList edges;
    for (VertexId v = 1; v < n; ++v)
        edges.emplace_back(rng.below(v), v);
    return relabeled(n, edges, rng);
}

Graph random_connected(std::size_t n, std::size_t m, std::uint64_t seed)
{
    require(n >= 1, "connected graph needs n >= 1");
    require(m + 1 >= n && m <= n * (n - 1) / 2, "edge count out of range for a connected simple graph");
    Rng rng(seed);
    EdgeList edges;
    std::set<std::pair<VertexId, VertexId>> present;
    for (VertexId v = 1; v < n; ++v) {
        const VertexId p = rng.below(v);
        edges.emplace_back(p, v);
        present.insert({p, v});
    }
    while (edges.size() < m)
        add_random_edge(n, present, edges, rng);
    return relabeled(n, edges, rng);
}

Graph random_bridgeless(std::size_t n, std::size_t m, std::uint64_t seed)
{
    require(n >= 3, "bridgeless graph needs n >= 3");
    Graph g = random_connected(n, m, seed);
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (;;) {
        const auto report = analyze(g);
        if (report.bridges.empty())
            return g;
        // Join the two sides of the first bridge by a fresh edge.
        const Edge bridge = g.edge(report.bridges.front());
        auto edges = g.edge_pairs();
        std::vector<char> side(n, 0);
        std::vector<VertexId> stack{bridge.u};
        side[bridge.u] = 1;
        while (!stack.empty()) {
            const VertexId x = stack.back();
            stack.pop_back();
            for (const auto& inc : g.incident(x))
                if (inc.edge != report.bridges.front() && !side[inc.neighbor]) {
                    side[inc.neighbor] = 1;
                    stack.push_back(inc.neighbor);
                }
        }
        std::vector<std::pair<VertexId, VertexId>> candidates;
        for (VertexId a = 0; a < n; ++a)
            for (VertexId b = 0; b < n; ++b)
                if (side[a] && !side[b] && !g.adjacent(a, b))
                    candidates.emplace_back(a, b);
        require(!candidates.empty(), "cannot remove bridge");
        edges.push_back(candidates[rng.below(candidates.size())]);
        g = Graph(n, edges);
    }
}

Graph random_min_degree2(std::size_t n, std::size_t m, std::uint64_t seed)
{
    require(n >= 3, "min-degree-2 graph needs n >= 3");
    Graph g = random_connected(n, m, seed);
    Rng rng(seed ^ 0x2545f4914f6cdd1dULL);
    auto edges = g.edge_pairs();
    std::set<std::pair<VertexId, VertexId>> present(edges.begin(), edges.end());
    std::vector<std::size_t> degree(n, 0);
    for (auto [a, b] : edges) {
        ++degree[a];
        ++degree[b];
    }
    for (VertexId v = 0; v < n; ++v)
        while (degree[v] < 2) {
            add_random_edge(n, present, edges, rng, v);
            ++degree[edges.back().first];
            ++degree[edges.back().second];
        }
    return Graph(n, edges);
}

Graph random_outerplanar(std::size_t n, std::uint64_t seed, unsigned chord_percent, std::size_t blocks)
{
    require(blocks >= 1, "need at least one block");
    require(n >= 1 + 2 * blocks, "too few vertices for the requested blocks");
    require(chord_percent <= 100, "chord_percent is a percentage");
    Rng rng(seed);
    // Split the n-1 non-root vertices into blocks of at least 2 extra vertices each.
    std::vector<std::size_t> extra(blocks, 2);
    for (std::size_t left = n - 1 - 2 * blocks; left > 0; --left)
        ++extra[rng.below(blocks)];

    EdgeList edges;
    std::size_t next = 1;
    for (std::size_t b = 0; b < blocks; ++b) {
        const VertexId attach = rng.below(next);
        const std::size_t size = extra[b] + 1;
        std::vector<VertexId> ids{attach};
        for (std::size_t i = 1; i < size; ++i)
            ids.push_back(next++);
        for (auto [a, c] : outerplanar_block(size, chord_percent, rng))
            edges.emplace_back(ids[a], ids[c]);
    }
    return relabeled(n, edges, rng);
}

Drawing convex_drawing(const Graph& g, const std::vector<std::size_t>* order)
{
    std::vector<Point> positions;
    positions.reserve(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const long long slot = order ? static_cast<long long>((*order)[v]) : static_cast<long long>(v);
        positions.push_back(Point{Rational(slot), Rational(slot * slot)});
    }
    return Drawing(g, std::move(positions));
}

EdgeColoring random_edge_coloring(const Graph& g, std::size_t palette, std::uint64_t seed)
{
    require(palette >= 1, "palette must be positive");
    Rng rng(seed);
    std::vector<ColorId> raw(g.edge_count());
    for (auto& c : raw)
        c = rng.below(palette);
    return EdgeColoring::normalized(raw);
}

VertexColoring random_vertex_coloring(const Graph& g, std::size_t palette, std::uint64_t seed)
{
    require(palette >= 1, "palette must be positive");
    Rng rng(seed);
    std::vector<ColorId> raw(g.vertex_count());
    for (auto& c : raw)
        c = rng.below(palette);
    return VertexColoring::normalized(raw);
}

namespace {

constexpr std::pair<Family, std::string_view> kFamilyNames[] = {
    {Family::cycle, "cycle"},
    {Family::complete, "complete"},
    {Family::path, "path"},
    {Family::star, "star"},
    {Family::wheel, "wheel"},
    {Family::fan, "fan"},
    {Family::grid3, "grid3"},
    {Family::tree, "tree"},
    {Family::connected, "random_connected"},
    {Family::bridgeless, "random_bridgeless"},
    {Family::min_degree2, "random_min_degree2"},
    {Family::outerplanar, "random_outerplanar"},
    {Family::convex, "convex"},
};

} // namespace

std::optional<Family> parse_family(std::string_view name)
{
    for (auto [f, s] : kFamilyNames)
        if (s == name)
            return f;
    return std::nullopt;
}

std::string_view to_string(Family family)
{
    for (auto [f, s] : kFamilyNames)
        if (f == family)
            return s;
    return "unknown";
}

GeneratedInstance generate(Family family, const GeneratorParams& p)
{
    auto density = [&](std::size_t lo) { return p.m ? p.m : std::min(p.n * (p.n - 1) / 2, lo); };
    switch (family) {
    case Family::cycle: return {cycle_graph(p.n), std::nullopt};
    case Family::complete: return {complete_graph(p.n), std::nullopt};
    case Family::path: return {path_graph(p.n), std::nullopt};
    case Family::star: return {star_graph(p.n), std::nullopt};
    case Family::wheel: return {wheel_graph(p.n), std::nullopt};
    case Family::fan: return {fan_graph(p.n), std::nullopt};
    case Family::grid3: return {grid_graph(3, 3), std::nullopt};
    case Family::tree: return {random_tree(p.n, p.seed), std::nullopt};
    case Family::connected:
        require(p.n >= 1, "n must be positive");
        return {random_connected(p.n, density(p.n + p.n / 2), p.seed), std::nullopt};
    case Family::bridgeless:
        require(p.n >= 3, "n must be at least 3");
        return {random_bridgeless(p.n, density(p.n + p.n / 2), p.seed), std::nullopt};
    case Family::min_degree2:
        require(p.n >= 3, "n must be at least 3");
        return {random_min_degree2(p.n, density(p.n + p.n / 2), p.seed), std::nullopt};
    case Family::outerplanar:
        return {random_outerplanar(p.n, p.seed, p.chord_percent, p.blocks), std::nullopt};
    case Family::convex: {
        require(p.base != nullptr, "convex drawing needs an input graph");
        Graph g = *p.base;
        Drawing d = convex_drawing(g);
        return {std::move(g), std::move(d)};
    }
    }
    throw Error(Errc::bad_params, "unknown family");
}

} // namespace rainbow
