#include "rainbow/analysis.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <string>

#include "rainbow/error.hpp"

namespace rainbow {

std::vector<std::size_t> bfs_distances(const Graph& g, VertexId source)
{
    std::vector<std::size_t> dist(g.vertex_count(), kInfiniteDistance);
    std::deque<VertexId> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        const VertexId x = queue.front();
        queue.pop_front();
        for (const auto& inc : g.incident(x))
            if (dist[inc.neighbor] == kInfiniteDistance) {
                dist[inc.neighbor] = dist[x] + 1;
                queue.push_back(inc.neighbor);
            }
    }
    return dist;
}

bool is_connected(const Graph& g)
{
    if (g.vertex_count() == 0)
        return true;
    const auto dist = bfs_distances(g, 0);
    return std::find(dist.begin(), dist.end(), kInfiniteDistance) == dist.end();
}

std::size_t diameter(const Graph& g)
{
    std::size_t best = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (std::size_t d : bfs_distances(g, v))
            best = std::max(best, d);
    return best;
}

bool is_complete(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    return g.edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

bool is_tree(const Graph& g)
{
    return g.vertex_count() >= 1 && g.edge_count() + 1 == g.vertex_count() && is_connected(g);
}

bool is_bipartite(const Graph& g)
{
    std::vector<int> side(g.vertex_count(), -1);
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (side[s] != -1)
            continue;
        side[s] = 0;
        std::vector<VertexId> stack{s};
        while (!stack.empty()) {
            const VertexId x = stack.back();
            stack.pop_back();
            for (const auto& inc : g.incident(x)) {
                if (side[inc.neighbor] == -1) {
                    side[inc.neighbor] = 1 - side[x];
                    stack.push_back(inc.neighbor);
                } else if (side[inc.neighbor] == side[x]) {
                    return false;
                }
            }
        }
    }
    return true;
}

StructureReport analyze(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    StructureReport report;
    report.diameter = diameter(g);
    report.min_degree = n == 0 ? 0 : kInfiniteDistance;
    for (VertexId v = 0; v < n; ++v)
        report.min_degree = std::min(report.min_degree, g.degree(v));

    // Lowpoint DFS.
    std::vector<std::size_t> disc(n, 0), low(n, 0);
    std::vector<char> cut(n, 0);
    std::size_t timer = 0;
    std::function<void(VertexId, std::optional<EdgeId>)> dfs = [&](VertexId x, std::optional<EdgeId> via) {
        disc[x] = low[x] = ++timer;
        std::size_t children = 0;
        for (const auto& inc : g.incident(x)) {
            if (via && inc.edge == *via)
                continue;
            const VertexId y = inc.neighbor;
            if (disc[y]) {
                low[x] = std::min(low[x], disc[y]);
                continue;
            }
            ++children;
            dfs(y, inc.edge);
            low[x] = std::min(low[x], low[y]);
            if (low[y] > disc[x])
                report.bridges.push_back(inc.edge);
            if (via && low[y] >= disc[x])
                cut[x] = 1;
        }
        if (!via && children > 1)
            cut[x] = 1;
    };
    for (VertexId v = 0; v < n; ++v)
        if (!disc[v])
            dfs(v, std::nullopt);

    std::sort(report.bridges.begin(), report.bridges.end());
    for (VertexId v = 0; v < n; ++v)
        if (cut[v])
            report.cut_vertices.push_back(v);
    report.is_2connected = n >= 3 && report.diameter != kInfiniteDistance && report.cut_vertices.empty();
    return report;
}

bool peels_to_empty(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> degree(n);
    std::vector<char> removed(n, 0);
    std::vector<VertexId> stack;
    for (VertexId v = 0; v < n; ++v) {
        degree[v] = g.degree(v);
        if (degree[v] <= 2) {
            removed[v] = 1;
            stack.push_back(v);
        }
    }
    std::size_t count = stack.size();
    while (!stack.empty()) {
        const VertexId x = stack.back();
        stack.pop_back();
        for (const auto& inc : g.incident(x)) {
            const VertexId y = inc.neighbor;
            if (removed[y])
                continue;
            if (--degree[y] <= 2) {
                removed[y] = 1;
                ++count;
                stack.push_back(y);
            }
        }
    }
    return count == n;
}

namespace {

// Routes the listed terminal pairs by internally disjoint paths whose inner
// vertices avoid `blocked` (branch vertices are pre-blocked).
class Linkage {
public:
    Linkage(const Graph& g, std::vector<char> blocked) : g_(g), blocked_(std::move(blocked)) {}

    bool route(std::span<const std::pair<VertexId, VertexId>> pairs)
    {
        if (pairs.empty())
            return true;
        const auto [s, t] = pairs.front();
        // A direct edge frees every vertex another route could use.
        if (g_.adjacent(s, t))
            return route(pairs.subspan(1));
        return extend(s, t, pairs.subspan(1));
    }

private:
    bool extend(VertexId at, VertexId target, std::span<const std::pair<VertexId, VertexId>> rest)
    {
        for (const auto& inc : g_.incident(at)) {
            const VertexId y = inc.neighbor;
            if (y == target) {
                if (at != target && route(rest))
                    return true;
                continue;
            }
            if (blocked_[y])
                continue;
            blocked_[y] = 1;
            const bool ok = extend(y, target, rest);
            blocked_[y] = 0;
            if (ok)
                return true;
        }
        return false;
    }

    const Graph& g_;
    std::vector<char> blocked_;
};

template <class F>
void for_each_combination(std::size_t n, std::size_t k, F&& f)
{
    if (k > n)
        return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    for (;;) {
        if (f(std::span<const std::size_t>(idx)))
            return;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

// Maximum number of internally vertex-disjoint s-t paths of length >= 2,
// stopping once `enough` are found (unit vertex capacities, augmenting BFS).
std::size_t disjoint_long_paths(const Graph& g, VertexId s, VertexId t, std::size_t enough)
{
    const std::size_t n = g.vertex_count();
    // Node 2v is v_in, 2v+1 is v_out; residual capacities in a dense matrix.
    const std::size_t size = 2 * n;
    std::vector<int> cap(size * size, 0);
    auto at = [size](std::size_t a, std::size_t b) { return a * size + b; };
    for (VertexId v = 0; v < n; ++v)
        cap[at(2 * v, 2 * v + 1)] = (v == s || v == t) ? static_cast<int>(n) : 1;
    for (const Edge& e : g.edges()) {
        if ((e.u == s && e.v == t) || (e.u == t && e.v == s))
            continue;
        cap[at(2 * e.u + 1, 2 * e.v)] = 1;
        cap[at(2 * e.v + 1, 2 * e.u)] = 1;
    }
    const std::size_t source = 2 * s + 1, sink = 2 * t;
    std::size_t flow = 0;
    while (flow < enough) {
        std::vector<std::size_t> parent(size, size);
        parent[source] = source;
        std::deque<std::size_t> queue{source};
        while (!queue.empty() && parent[sink] == size) {
            const std::size_t x = queue.front();
            queue.pop_front();
            for (std::size_t y = 0; y < size; ++y)
                if (parent[y] == size && cap[at(x, y)] > 0) {
                    parent[y] = x;
                    queue.push_back(y);
                }
        }
        if (parent[sink] == size)
            break;
        for (std::size_t y = sink; y != source; y = parent[y]) {
            --cap[at(parent[y], y)];
            ++cap[at(y, parent[y])];
        }
        ++flow;
    }
    return flow;
}

} // namespace

bool has_k4_minor(const Graph& g)
{
    std::vector<VertexId> candidates;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) >= 3)
            candidates.push_back(v);
    bool found = false;
    for_each_combination(candidates.size(), 4, [&](std::span<const std::size_t> idx) {
        const VertexId a = candidates[idx[0]], b = candidates[idx[1]], c = candidates[idx[2]],
                       d = candidates[idx[3]];
        std::vector<char> blocked(g.vertex_count(), 0);
        for (VertexId v : {a, b, c, d})
            blocked[v] = 1;
        const std::pair<VertexId, VertexId> pairs[] = {{a, b}, {a, c}, {a, d}, {b, c}, {b, d}, {c, d}};
        Linkage linkage(g, std::move(blocked));
        found = linkage.route(pairs);
        return found;
    });
    return found;
}

bool has_k23_minor(const Graph& g)
{
    for (VertexId a = 0; a < g.vertex_count(); ++a) {
        if (g.degree(a) < 3)
            continue;
        for (VertexId b = a + 1; b < g.vertex_count(); ++b)
            if (g.degree(b) >= 3 && disjoint_long_paths(g, a, b, 3) >= 3)
                return true;
    }
    return false;
}

bool is_outerplanar(const Graph& g, std::size_t max_vertices)
{
    const std::size_t n = g.vertex_count();
    if (n > max_vertices)
        throw Error(Errc::too_large, "outerplanarity test limited to " + std::to_string(max_vertices) +
                                         " vertices, got " + std::to_string(n));
    if (n <= 3)
        return true;
    if (g.edge_count() > 2 * n - 3)
        return false;
    if (!peels_to_empty(g))
        return false;
    return !has_k4_minor(g) && !has_k23_minor(g);
}

namespace {

HamiltonCycle make_cycle(const Graph& g, std::vector<VertexId> order)
{
    HamiltonCycle h;
    const std::size_t n = order.size();
    std::vector<char> on_cycle(g.edge_count(), 0);
    for (std::size_t i = 0; i < n; ++i) {
        const EdgeId e = *g.find_edge(order[i], order[(i + 1) % n]);
        h.cycle_edges.push_back(e);
        on_cycle[e] = 1;
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (!on_cycle[e])
            h.chords.push_back(e);
    h.order = std::move(order);
    return h;
}

// Calls visit(order) for each Hamilton cycle through vertex 0 with
// order[1] < order.back(); stops when visit returns true.
template <class F>
void enumerate_hamilton_cycles(const Graph& g, F&& visit)
{
    const std::size_t n = g.vertex_count();
    if (n < 3)
        return;
    std::vector<VertexId> order{0};
    std::vector<char> used(n, 0);
    used[0] = 1;
    std::function<bool(VertexId)> dfs = [&](VertexId x) -> bool {
        if (order.size() == n)
            return g.adjacent(x, 0) && order[1] < x && visit(order);
        for (const auto& inc : g.incident(x)) {
            const VertexId y = inc.neighbor;
            if (used[y])
                continue;
            used[y] = 1;
            order.push_back(y);
            const bool stop = dfs(y);
            order.pop_back();
            used[y] = 0;
            if (stop)
                return true;
        }
        return false;
    };
    dfs(0);
}

} // namespace

std::optional<HamiltonCycle> find_hamilton_cycle(const Graph& g)
{
    std::optional<std::vector<VertexId>> found;
    enumerate_hamilton_cycles(g, [&](const std::vector<VertexId>& order) {
        found = order;
        return true;
    });
    if (!found)
        return std::nullopt;
    return make_cycle(g, std::move(*found));
}

HamiltonCycle outer_hamilton_cycle(const Graph& g)
{
    if (!analyze(g).is_2connected || !is_outerplanar(g))
        throw Error(Errc::precondition_violated, "graph is not 2-connected outerplanar");
    std::vector<std::vector<VertexId>> found;
    enumerate_hamilton_cycles(g, [&](const std::vector<VertexId>& order) {
        found.push_back(order);
        return found.size() > 1;
    });
    if (found.empty())
        throw Error(Errc::precondition_violated, "no Hamilton cycle");
    if (found.size() > 1)
        throw Error(Errc::non_unique, "second Hamilton cycle found");
    return make_cycle(g, std::move(found.front()));
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> vertices)
{
    constexpr std::size_t absent = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> local(g.vertex_count(), absent);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        local[vertices[i]] = i;
    InducedSubgraph out;
    out.vertex_of.assign(vertices.begin(), vertices.end());
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (local[ed.u] != absent && local[ed.v] != absent) {
            edges.emplace_back(local[ed.u], local[ed.v]);
            out.edge_of.push_back(e);
        }
    }
    out.graph = Graph(vertices.size(), edges);
    return out;
}

bool is_dominating(const Graph& g, std::span<const VertexId> set)
{
    std::vector<char> covered(g.vertex_count(), 0);
    for (VertexId v : set) {
        covered[v] = 1;
        for (const auto& inc : g.incident(v))
            covered[inc.neighbor] = 1;
    }
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

bool induces_connected(const Graph& g, std::span<const VertexId> set)
{
    if (set.empty())
        return false;
    std::vector<char> member(g.vertex_count(), 0), seen(g.vertex_count(), 0);
    for (VertexId v : set)
        member[v] = 1;
    std::vector<VertexId> stack{set.front()};
    seen[set.front()] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const VertexId x = stack.back();
        stack.pop_back();
        for (const auto& inc : g.incident(x))
            if (member[inc.neighbor] && !seen[inc.neighbor]) {
                seen[inc.neighbor] = 1;
                ++reached;
                stack.push_back(inc.neighbor);
            }
    }
    return reached == set.size();
}

CdsResult min_connected_dominating_set(const Graph& g, std::size_t size_cap)
{
    const std::size_t n = g.vertex_count();
    if (n == 0 || !is_connected(g))
        throw Error(Errc::precondition_violated, "connected dominating sets need a connected, non-empty graph");
    for (std::size_t k = 1; k <= std::min(size_cap, n); ++k) {
        std::optional<std::vector<VertexId>> hit;
        for_each_combination(n, k, [&](std::span<const std::size_t> idx) {
            std::vector<VertexId> set(idx.begin(), idx.end());
            if (induces_connected(g, set) && is_dominating(g, set)) {
                hit = std::move(set);
                return true;
            }
            return false;
        });
        if (hit) {
            CdsResult result;
            result.induced = induced_subgraph(g, *hit);
            result.set = std::move(*hit);
            return result;
        }
    }
    throw Error(Errc::none_within_cap, "no connected dominating set of size <= " + std::to_string(size_cap));
}

LineGraph line_graph(const Graph& g)
{
    const std::size_t m = g.edge_count();
    if (m == 0)
        throw Error(Errc::empty_graph, "line graph of an edgeless graph");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (EdgeId a = 0; a < m; ++a)
        for (EdgeId b = a + 1; b < m; ++b)
            if (g.edge(a).shares_endpoint(g.edge(b)))
                edges.emplace_back(a, b);
    LineGraph out;
    out.graph = Graph(m, edges);
    out.vertex_of_edge.resize(m);
    for (EdgeId e = 0; e < m; ++e)
        out.vertex_of_edge[e] = e;
    return out;
}

} // namespace rainbow
