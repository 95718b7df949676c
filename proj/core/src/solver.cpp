#include "rainbow/solver.hpp"

#include <algorithm>
#include <string>

#include "rainbow/analysis.hpp"
#include "rainbow/error.hpp"
#include "rainbow/verify.hpp"
#include "rainbow_kernel.hpp"

namespace rainbow {

namespace {

using detail::kFree;
using detail::Mode;
using detail::RainbowKernel;

// Depth-first canonical enumeration with relaxation pruning.
class ColoringSearch {
public:
    ColoringSearch(const Graph& g, Mode mode, std::vector<ColorId> fixed, ColorId base, std::size_t extra)
        : kernel_(g, mode), colors_(std::move(fixed)), base_(base), extra_(extra)
    {
        if (extra_ > 0 && base_ + extra_ > detail::kMaskBits)
            throw Error(Errc::palette_too_large, "search needs " + std::to_string(base_ + extra_) + " colors");
        for (std::size_t i = 0; i < colors_.size(); ++i)
            if (colors_[i] == kFree)
                open_.push_back(i);
    }

    std::optional<std::vector<ColorId>> run()
    {
        if (!feasible())
            return std::nullopt;
        if (descend(0, 0))
            return colors_;
        return std::nullopt;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    bool feasible() { return kernel_.all_pairs_reachable(colors_, hint_); }

    bool descend(std::size_t depth, std::size_t used)
    {
        if (depth == open_.size())
            return true;
        const std::size_t element = open_[depth];
        const std::size_t limit = std::min(extra_, used + 1);
        for (std::size_t j = 0; j < limit; ++j) {
            ++nodes_;
            colors_[element] = base_ + j;
            if (feasible() && descend(depth + 1, std::max(used, j + 1)))
                return true;
        }
        colors_[element] = kFree;
        return false;
    }

    RainbowKernel kernel_;
    std::vector<ColorId> colors_;
    std::vector<std::size_t> open_;
    ColorId base_;
    std::size_t extra_;
    VertexId hint_ = 0;
    std::uint64_t nodes_ = 0;
};

void require_connected(const Graph& g)
{
    if (!is_connected(g))
        throw Error(Errc::precondition_violated, "graph must be connected");
}

void require_edge_limit(const Graph& g, const SolverOptions& options)
{
    if (g.edge_count() > options.max_edges)
        throw Error(Errc::too_large, std::to_string(g.edge_count()) + " edges exceed the limit of " +
                                         std::to_string(options.max_edges));
}

} // namespace

SolveResult rc_exact(const Graph& g, std::size_t k_cap, const SolverOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    require_connected(g);
    require_edge_limit(g, options);
    SolveResult result;
    result.coloring = EdgeColoring{};
    if (g.vertex_count() <= 1)
        return result;

    const std::size_t lo = std::max<std::size_t>(diameter(g), 1);
    const std::size_t hi = std::min(k_cap, g.edge_count());
    for (std::size_t k = lo; k <= hi; ++k) {
        ColoringSearch search(g, Mode::edge, std::vector<ColorId>(g.edge_count(), kFree), 0, k);
        auto found = search.run();
        result.nodes_explored += search.nodes();
        if (found) {
            result.value = k;
            result.coloring = EdgeColoring(std::move(*found));
            result.elapsed = std::chrono::steady_clock::now() - start;
            return result;
        }
    }
    throw Error(Errc::cap_exceeded, "no rainbow coloring with at most " + std::to_string(k_cap) + " colors");
}

SolveResult rvc_exact(const Graph& g, std::size_t k_cap, const SolverOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    require_connected(g);
    const std::size_t n = g.vertex_count();
    if (n > options.max_vertices)
        throw Error(Errc::too_large,
                    std::to_string(n) + " vertices exceed the limit of " + std::to_string(options.max_vertices));
    SolveResult result;
    if (is_complete(g)) {
        result.coloring = VertexColoring::uniform(n);
        result.elapsed = std::chrono::steady_clock::now() - start;
        return result;
    }

    const std::size_t lo = std::max<std::size_t>(diameter(g) - 1, 1);
    const std::size_t hi = std::min(k_cap, n);
    for (std::size_t k = lo; k <= hi; ++k) {
        ColoringSearch search(g, Mode::vertex, std::vector<ColorId>(n, kFree), 0, k);
        auto found = search.run();
        result.nodes_explored += search.nodes();
        if (found) {
            result.value = k;
            result.coloring = VertexColoring(std::move(*found));
            result.elapsed = std::chrono::steady_clock::now() - start;
            return result;
        }
    }
    throw Error(Errc::cap_exceeded, "no rainbow vertex coloring with at most " + std::to_string(k_cap) + " colors");
}

std::optional<EdgeColoring> rc_upper_witness(const Graph& g, std::size_t k, const SolverOptions& options)
{
    require_connected(g);
    require_edge_limit(g, options);
    if (g.edge_count() == 0)
        return g.vertex_count() <= 1 ? std::optional<EdgeColoring>(EdgeColoring{}) : std::nullopt;
    if (k == 0)
        return std::nullopt;
    ColoringSearch search(g, Mode::edge, std::vector<ColorId>(g.edge_count(), kFree), 0,
                          std::min(k, g.edge_count()));
    auto found = search.run();
    if (!found)
        return std::nullopt;
    return EdgeColoring(std::move(*found));
}

std::optional<EdgeColoring> complete_edge_coloring(const Graph& g, const std::vector<std::optional<ColorId>>& partial,
                                                   std::size_t extra, std::uint64_t* nodes_explored)
{
    if (partial.size() != g.edge_count())
        throw Error(Errc::bad_coloring, "partial coloring does not cover the edges");
    std::vector<ColorId> fixed(partial.size(), kFree);
    ColorId base = 0;
    for (std::size_t e = 0; e < partial.size(); ++e)
        if (partial[e]) {
            fixed[e] = *partial[e];
            base = std::max(base, *partial[e] + 1);
        }
    if (base > detail::kMaskBits)
        throw Error(Errc::palette_too_large, "fixed colors exceed the search width");
    ColoringSearch search(g, Mode::edge, std::move(fixed), base, extra);
    auto found = search.run();
    if (nodes_explored)
        *nodes_explored = search.nodes();
    if (!found)
        return std::nullopt;
    if (std::find(found->begin(), found->end(), kFree) != found->end())
        return std::nullopt;
    return EdgeColoring::normalized(*found);
}

} // namespace rainbow
