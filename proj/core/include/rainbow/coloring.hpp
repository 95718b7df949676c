#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "rainbow/error.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

// Total coloring of edges or vertices. Color ids are always dense: the ids in
// use are exactly 0..palette_size()-1.
template <class Tag>
class Coloring {
public:
    Coloring() = default;

    // Throws Error{bad_coloring} when the ids are not dense.
    explicit Coloring(std::vector<ColorId> colors) : colors_(std::move(colors))
    {
        std::vector<bool> used;
        for (ColorId c : colors_) {
            if (c >= colors_.size())
                throw Error(Errc::bad_coloring, "color id " + std::to_string(c) + " is not dense");
            if (used.size() <= c)
                used.resize(c + 1, false);
            used[c] = true;
        }
        if (std::find(used.begin(), used.end(), false) != used.end())
            throw Error(Errc::bad_coloring, "color ids are not dense");
        palette_ = used.size();
    }

    // Renumbers arbitrary ids densely, preserving their relative order.
    static Coloring normalized(std::span<const ColorId> raw)
    {
        std::map<ColorId, ColorId> rank;
        for (ColorId c : raw)
            rank.emplace(c, 0);
        ColorId next = 0;
        for (auto& [_, r] : rank)
            r = next++;
        std::vector<ColorId> out;
        out.reserve(raw.size());
        for (ColorId c : raw)
            out.push_back(rank[c]);
        return Coloring(std::move(out));
    }

    static Coloring uniform(std::size_t count) { return Coloring(std::vector<ColorId>(count, 0)); }

    static Coloring distinct(std::size_t count)
    {
        std::vector<ColorId> out(count);
        for (std::size_t i = 0; i < count; ++i)
            out[i] = i;
        return Coloring(std::move(out));
    }

    std::size_t size() const { return colors_.size(); }
    std::size_t palette_size() const { return palette_; }
    ColorId operator[](std::size_t i) const { return colors_[i]; }
    const std::vector<ColorId>& colors() const { return colors_; }

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::vector<ColorId> colors_;
    std::size_t palette_ = 0;
};

struct EdgeTag {};
struct VertexTag {};

using EdgeColoring = Coloring<EdgeTag>;
using VertexColoring = Coloring<VertexTag>;

inline void require_matches(const Graph& g, const EdgeColoring& c)
{
    if (c.size() != g.edge_count())
        throw Error(Errc::bad_coloring, "edge coloring covers " + std::to_string(c.size()) + " of " +
                                            std::to_string(g.edge_count()) + " edges");
}

inline void require_matches(const Graph& g, const VertexColoring& c)
{
    if (c.size() != g.vertex_count())
        throw Error(Errc::bad_coloring, "vertex coloring covers " + std::to_string(c.size()) + " of " +
                                            std::to_string(g.vertex_count()) + " vertices");
}

} // namespace rainbow
