#include "rainbow_kernel.hpp"

#include <algorithm>

namespace rainbow::detail {

RainbowKernel::RainbowKernel(const Graph& g, Mode mode)
    : g_(g), mode_(mode), minimal_(g.vertex_count()), reach_parent_(g.vertex_count(), kNone),
      reached_(g.vertex_count(), 0)
{
}

bool RainbowKernel::dominated_or_insert(VertexId v, std::uint64_t mask)
{
    auto& sets = minimal_[v];
    for (std::uint64_t t : sets)
        if ((t & ~mask) == 0)
            return true;
    std::erase_if(sets, [mask](std::uint64_t t) { return (mask & ~t) == 0; });
    sets.push_back(mask);
    return false;
}

void RainbowKernel::explore(VertexId source, std::span<const ColorId> colors, VertexId interest_from)
{
    run(source, colors, interest_from, std::nullopt);
}

void RainbowKernel::explore_to(VertexId source, std::span<const ColorId> colors, VertexId target)
{
    run(source, colors, 0, target);
}

void RainbowKernel::run(VertexId source, std::span<const ColorId> colors, VertexId interest_from,
                        std::optional<VertexId> target)
{
    const std::size_t n = g_.vertex_count();
    source_ = source;
    nodes_.clear();
    for (auto& sets : minimal_)
        sets.clear();
    std::fill(reached_.begin(), reached_.end(), 0);
    std::fill(reach_parent_.begin(), reach_parent_.end(), kNone);

    std::size_t pending = interest_from < n ? n - interest_from : 0;
    if (source >= interest_from && pending > 0)
        --pending;
    reached_[source] = 1;
    if ((target && *target == source) || (!target && pending == 0))
        return;
    nodes_.push_back({source, 0, kNone});
    minimal_[source].push_back(0);

    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const Node cur = nodes_[i];
        for (const auto& inc : g_.incident(cur.vertex)) {
            const VertexId y = inc.neighbor;
            const ColorId c = mode_ == Mode::edge ? colors[inc.edge] : colors[y];
            const std::uint64_t bit = c == kFree ? 0 : std::uint64_t{1} << c;
            const bool blocked = (cur.mask & bit) != 0;
            // An edge must be new to the walk to arrive; a vertex only
            // spends its color when the walk continues through it.
            if (mode_ == Mode::edge && blocked)
                continue;
            if (!reached_[y]) {
                reached_[y] = 1;
                reach_parent_[y] = static_cast<std::uint32_t>(i);
                if (target) {
                    if (y == *target)
                        return;
                } else if (y >= interest_from && --pending == 0) {
                    return;
                }
            }
            if (blocked)
                continue;
            const std::uint64_t mask = cur.mask | bit;
            if (y == source_ || dominated_or_insert(y, mask))
                continue;
            nodes_.push_back({y, mask, static_cast<std::uint32_t>(i)});
        }
    }
}

std::vector<VertexId> RainbowKernel::path_to(VertexId v) const
{
    if (v == source_)
        return {v};
    if (!reached_[v])
        return {};
    std::vector<VertexId> walk{v};
    for (std::uint32_t i = reach_parent_[v]; i != kNone; i = nodes_[i].parent)
        walk.push_back(nodes_[i].vertex);
    std::reverse(walk.begin(), walk.end());

    // Cut closed sub-walks; the remaining edges are a subset of the walk's.
    std::vector<VertexId> path;
    std::vector<std::size_t> position(g_.vertex_count(), walk.size());
    for (VertexId x : walk) {
        if (position[x] != walk.size()) {
            while (path.back() != x) {
                position[path.back()] = walk.size();
                path.pop_back();
            }
            continue;
        }
        position[x] = path.size();
        path.push_back(x);
    }
    return path;
}

std::optional<std::pair<VertexId, VertexId>> RainbowKernel::first_unreachable_pair(std::span<const ColorId> colors)
{
    const std::size_t n = g_.vertex_count();
    for (VertexId u = 0; u + 1 < n; ++u) {
        explore(u, colors, u + 1);
        for (VertexId v = u + 1; v < n; ++v)
            if (!reached_[v])
                return std::make_pair(u, v);
    }
    return std::nullopt;
}

bool RainbowKernel::all_pairs_reachable(std::span<const ColorId> colors, VertexId& hint)
{
    // Reachability is symmetric, so every source must reach all vertices,
    // and checking sources 0..n-2 against larger ids covers all pairs.
    const std::size_t n = g_.vertex_count();
    if (n < 2)
        return true;
    if (hint < n) {
        explore(hint, colors, 0);
        if (std::find(reached_.begin(), reached_.end(), 0) != reached_.end())
            return false;
    }
    for (VertexId u = 0; u + 1 < n; ++u) {
        if (u == hint)
            continue;
        explore(u, colors, u + 1);
        for (VertexId v = u + 1; v < n; ++v)
            if (!reached_[v]) {
                hint = u;
                return false;
            }
    }
    return true;
}

} // namespace rainbow::detail
