#include "rainbow/verify.hpp"

#include <algorithm>
#include <string>

#include "rainbow/error.hpp"
#include "rainbow_kernel.hpp"

namespace rainbow {

namespace {

using detail::Mode;
using detail::RainbowKernel;

void check_palette(std::size_t palette, const VerifyOptions& options)
{
    const std::size_t bound = std::min(options.palette_bound, kMaxPaletteBound);
    if (palette > bound)
        throw Error(Errc::palette_too_large,
                    "palette of " + std::to_string(palette) + " colors exceeds bound " + std::to_string(bound));
}

void check_pair(const Graph& g, VertexId u, VertexId v)
{
    if (u >= g.vertex_count() || v >= g.vertex_count())
        throw Error(Errc::vertex_out_of_range, "pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v)
        throw Error(Errc::precondition_violated, "pair endpoints must differ");
}

std::optional<PairWitness> single_pair(const Graph& g, const std::vector<ColorId>& colors, Mode mode, VertexId u,
                                       VertexId v)
{
    RainbowKernel kernel(g, mode);
    kernel.explore_to(u, colors, v);
    if (!kernel.reached(v))
        return std::nullopt;
    return PairWitness{u, v, kernel.path_to(v)};
}

Verdict all_pairs(const Graph& g, const std::vector<ColorId>& colors, Mode mode, bool collect)
{
    Verdict verdict;
    RainbowKernel kernel(g, mode);
    if (!collect) {
        verdict.counterexample = kernel.first_unreachable_pair(colors);
        verdict.connected = !verdict.counterexample;
        return verdict;
    }
    const std::size_t n = g.vertex_count();
    for (VertexId u = 0; u + 1 < n; ++u) {
        kernel.explore(u, colors, u + 1);
        for (VertexId v = u + 1; v < n; ++v) {
            if (!kernel.reached(v)) {
                verdict.witnesses.clear();
                verdict.counterexample = std::make_pair(u, v);
                return verdict;
            }
            verdict.witnesses.push_back({u, v, kernel.path_to(v)});
        }
    }
    verdict.connected = true;
    return verdict;
}

} // namespace

std::optional<PairWitness> rainbow_path_exists(const Graph& g, const EdgeColoring& c, VertexId u, VertexId v,
                                               const VerifyOptions& options)
{
    require_matches(g, c);
    check_pair(g, u, v);
    check_palette(c.palette_size(), options);
    return single_pair(g, c.colors(), Mode::edge, u, v);
}

Verdict is_rainbow_connected(const Graph& g, const EdgeColoring& c, const VerifyOptions& options)
{
    require_matches(g, c);
    check_palette(c.palette_size(), options);
    return all_pairs(g, c.colors(), Mode::edge, options.collect_witnesses);
}

std::optional<PairWitness> vertex_rainbow_path_exists(const Graph& g, const VertexColoring& c, VertexId u, VertexId v,
                                                      const VerifyOptions& options)
{
    require_matches(g, c);
    check_pair(g, u, v);
    check_palette(c.palette_size(), options);
    return single_pair(g, c.colors(), Mode::vertex, u, v);
}

Verdict is_rainbow_vertex_connected(const Graph& g, const VertexColoring& c, const VerifyOptions& options)
{
    require_matches(g, c);
    check_palette(c.palette_size(), options);
    return all_pairs(g, c.colors(), Mode::vertex, options.collect_witnesses);
}

namespace {

bool is_simple_path(const Graph& g, const std::vector<VertexId>& path)
{
    if (path.size() < 2)
        return false;
    std::vector<char> seen(g.vertex_count(), 0);
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (path[i] >= g.vertex_count() || seen[path[i]])
            return false;
        seen[path[i]] = 1;
        if (i > 0 && !g.adjacent(path[i - 1], path[i]))
            return false;
    }
    return true;
}

} // namespace

bool is_rainbow_path(const Graph& g, const EdgeColoring& c, const std::vector<VertexId>& path)
{
    if (!is_simple_path(g, path))
        return false;
    std::vector<ColorId> used;
    for (std::size_t i = 1; i < path.size(); ++i)
        used.push_back(c[*g.find_edge(path[i - 1], path[i])]);
    std::sort(used.begin(), used.end());
    return std::adjacent_find(used.begin(), used.end()) == used.end();
}

bool is_vertex_rainbow_path(const Graph& g, const VertexColoring& c, const std::vector<VertexId>& path)
{
    if (!is_simple_path(g, path))
        return false;
    std::vector<ColorId> used;
    for (std::size_t i = 1; i + 1 < path.size(); ++i)
        used.push_back(c[path[i]]);
    std::sort(used.begin(), used.end());
    return std::adjacent_find(used.begin(), used.end()) == used.end();
}

} // namespace rainbow
