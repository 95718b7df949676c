#include "rainbow/reductions.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "rainbow/analysis.hpp"
#include "rainbow/error.hpp"

namespace rainbow {

namespace {

std::string vtag(VertexId v)
{
    return "v" + std::to_string(v);
}

std::string etag(EdgeId e)
{
    return "e" + std::to_string(e);
}

[[noreturn]] void degenerate(const std::string& what)
{
    throw Error(Errc::degenerate_drawing, what);
}

// Position of p along edge (a -> b), monotone in the distance from a.
Rational along(const Point& p, const Point& a, const Point& b)
{
    return (p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y);
}

Point midpoint(const Point& a, const Point& b)
{
    return {(a.x + b.x) / 2, (a.y + b.y) / 2};
}

} // namespace

VertexId GadgetRecord::vertex(GadgetNode node) const
{
    switch (node) {
    case GadgetNode::x: return x;
    case GadgetNode::y: return y;
    case GadgetNode::u: return u;
    case GadgetNode::v: return v;
    default: return grid[static_cast<std::size_t>(node) - static_cast<std::size_t>(GadgetNode::d)];
    }
}

std::vector<Crossing> detect_crossings(const Graph& g, const Drawing& d)
{
    if (d.size() != g.vertex_count())
        degenerate("drawing does not match the graph");
    std::vector<Crossing> crossings;
    std::map<Point, std::set<EdgeId>> through;
    const auto& pos = d.positions();
    for (const auto& [a, b] : edge_pairs_near(g, pos)) {
        const Edge& ea = g.edge(a);
        const Edge& eb = g.edge(b);
        const auto hit = intersect_segments(pos[ea.u], pos[ea.v], pos[eb.u], pos[eb.v]);
        if (hit.relation == SegmentRelation::collinear_overlap)
            degenerate("edges " + std::to_string(a) + " and " + std::to_string(b) + " overlap");
        if (ea.shares_endpoint(eb))
            continue;
        if (hit.relation == SegmentRelation::touching)
            degenerate("edges " + std::to_string(a) + " and " + std::to_string(b) + " touch at a vertex");
        if (hit.relation != SegmentRelation::proper_crossing)
            continue;
        if (std::find(pos.begin(), pos.end(), hit.point) != pos.end())
            degenerate("edges " + std::to_string(a) + " and " + std::to_string(b) + " cross at a vertex");
        crossings.push_back({a, b, hit.point});
        auto& edges = through[hit.point];
        edges.insert(a);
        edges.insert(b);
        if (edges.size() > 2) {
            std::string list;
            for (EdgeId e : edges)
                list += " " + std::to_string(e);
            degenerate("edges" + list + " cross at one point");
        }
    }
    return crossings;
}

ReductionOutput split_multicrossed_edges(const Graph& g, const EdgeColoring& c, const Drawing& d)
{
    require_matches(g, c);
    const auto crossings = detect_crossings(g, d);
    const auto& pos = d.positions();

    std::vector<std::vector<Point>> on_edge(g.edge_count());
    for (const auto& x : crossings) {
        on_edge[x.edge_a].push_back(x.point);
        on_edge[x.edge_b].push_back(x.point);
    }

    ReductionOutput out;
    std::vector<Point> positions = pos;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        out.vertex_provenance.push_back(vtag(v));
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<ColorId> colors;
    ColorId next_color = c.palette_size();

    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        auto& points = on_edge[e];
        if (points.size() < 2) {
            edges.emplace_back(ed.u, ed.v);
            colors.push_back(c[e]);
            out.edge_provenance.push_back(etag(e));
            continue;
        }
        const Point& from = pos[ed.u];
        const Point& to = pos[ed.v];
        std::sort(points.begin(), points.end(), [&](const Point& p, const Point& q) {
            return along(p, from, to) < along(q, from, to);
        });
        VertexId prev = ed.u;
        for (std::size_t i = 0; i + 1 < points.size(); ++i) {
            const VertexId w = positions.size();
            positions.push_back(midpoint(points[i], points[i + 1]));
            out.vertex_provenance.push_back("split(" + etag(e) + ")#" + std::to_string(i + 1));
            edges.emplace_back(prev, w);
            colors.push_back(i == 0 ? c[e] : next_color++);
            out.edge_provenance.push_back(etag(e) + "#" + std::to_string(i));
            prev = w;
        }
        edges.emplace_back(prev, ed.v);
        colors.push_back(next_color++);
        out.edge_provenance.push_back(etag(e) + "#" + std::to_string(points.size() - 1));
    }

    out.graph = Graph(positions.size(), edges);
    out.edge_coloring = EdgeColoring(std::move(colors));
    out.fresh_color_count = next_color - c.palette_size();
    out.drawing = Drawing(out.graph, std::move(positions));
    return out;
}

namespace {

// Largest 2^-j (j >= 1) with (2^-j)^2 * |p - w|^2 <= limit2.
Rational shrink_factor(const Point& w, const Point& p, const Rational& limit2)
{
    const Rational len2 = squared_distance(w, p);
    Rational lambda(1, 2);
    while (lambda * lambda * len2 > limit2)
        lambda /= 2;
    return lambda;
}

} // namespace

ReductionOutput planarize(const Graph& g, const EdgeColoring& c, const Drawing& d)
{
    require_matches(g, c);
    const auto crossings = detect_crossings(g, d);
    std::vector<std::size_t> crossed(g.edge_count(), 0);
    for (const auto& x : crossings)
        if (++crossed[x.edge_a] > 1 || ++crossed[x.edge_b] > 1)
            throw Error(Errc::precondition_violated, "an edge is crossed more than once; split it first");

    const std::size_t n = g.vertex_count();
    const std::size_t k = crossings.size();
    const ColorId palette = c.palette_size();
    const auto& pos = d.positions();

    ReductionOutput out;
    std::vector<Point> positions = pos;
    for (VertexId v = 0; v < n; ++v)
        out.vertex_provenance.push_back(vtag(v));

    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<ColorId> colors;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (!crossed[e]) {
            edges.emplace_back(g.edge(e).u, g.edge(e).v);
            colors.push_back(c[e]);
            out.edge_provenance.push_back(etag(e));
        }

    for (std::size_t i = 0; i < k; ++i) {
        const Crossing& cross = crossings[i];
        GadgetRecord rec;
        rec.crossing = cross;
        rec.x = g.edge(cross.edge_a).u;
        rec.y = g.edge(cross.edge_a).v;
        rec.u = g.edge(cross.edge_b).u;
        rec.v = g.edge(cross.edge_b).v;
        rec.removed_edges = {cross.edge_a, cross.edge_b};
        for (std::size_t j = 0; j < 9; ++j) {
            rec.grid[j] = n + 9 * i + j;
            out.vertex_provenance.push_back("gadget" + std::to_string(i) + "." + std::string(kGridNodeNames[j]));
        }
        for (std::size_t j = 0; j < 5; ++j)
            rec.fresh_colors[j] = palette + 5 * i + j;

        auto tint_color = [&](GadgetTint tint) -> ColorId {
            switch (tint) {
            case GadgetTint::xy: return c[cross.edge_a];
            case GadgetTint::uv: return c[cross.edge_b];
            default: return rec.fresh_colors[static_cast<std::size_t>(tint) - static_cast<std::size_t>(GadgetTint::c1)];
            }
        };
        for (const auto& spec : kGadgetEdges) {
            edges.emplace_back(rec.vertex(spec.a), rec.vertex(spec.b));
            colors.push_back(tint_color(spec.tint));
            out.edge_provenance.push_back("gadget" + std::to_string(i) + "." + std::string(spec.name));
        }

        // Grid inside a disc around the crossing, small enough to avoid
        // every other vertex and edge: corners on the four half-edges,
        // side vertices at midpoints, r at the crossing point.
        const Point& w = cross.point;
        bool first = true;
        Rational nearest2;
        auto consider = [&](const Rational& dist2) {
            if (first || dist2 < nearest2)
                nearest2 = dist2;
            first = false;
        };
        for (const Point& p : pos)
            consider(squared_distance(w, p));
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (e != cross.edge_a && e != cross.edge_b)
                consider(squared_distance_to_segment(w, pos[g.edge(e).u], pos[g.edge(e).v]));
        const Rational limit2 = nearest2 / 16;
        auto corner = [&](VertexId toward) {
            const Point& p = pos[toward];
            const Rational lambda = shrink_factor(w, p, limit2);
            return Point{w.x + lambda * (p.x - w.x), w.y + lambda * (p.y - w.y)};
        };
        const Point pd = corner(rec.x), pt = corner(rec.y), ph = corner(rec.u), pq = corner(rec.v);
        // d g h l r s t p q
        const Point grid_pos[9] = {pd, midpoint(pd, ph), ph, midpoint(ph, pt), w, midpoint(pq, pd), pt,
                                   midpoint(pt, pq), pq};
        for (const Point& p : grid_pos)
            positions.push_back(p);
        out.gadgets.push_back(rec);
    }

    out.graph = Graph(n + 9 * k, edges);
    out.edge_coloring = EdgeColoring(std::move(colors));
    out.fresh_color_count = 5 * k;
    out.drawing = Drawing(out.graph, std::move(positions));
    if (!detect_crossings(out.graph, *out.drawing).empty())
        degenerate("gadget placement left a crossing");
    return out;
}

ReductionOutput planarize_drawing(const Graph& g, const EdgeColoring& c, const Drawing& d)
{
    ReductionOutput split = split_multicrossed_edges(g, c, d);
    ReductionOutput planar = planarize(split.graph, *split.edge_coloring, *split.drawing);
    return compose(split, std::move(planar));
}

ReductionOutput bipartize_subdivision(const Graph& g, const EdgeColoring& c, const Drawing* d)
{
    require_matches(g, c);
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();
    if (m == 0)
        throw Error(Errc::empty_graph, "nothing to subdivide");

    ReductionOutput out;
    for (VertexId v = 0; v < n; ++v)
        out.vertex_provenance.push_back(vtag(v));
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<ColorId> colors;
    for (EdgeId e = 0; e < m; ++e) {
        const Edge& ed = g.edge(e);
        const VertexId s = n + e;
        out.vertex_provenance.push_back("sub(" + etag(e) + ")");
        edges.emplace_back(ed.u, s);
        colors.push_back(c[e]);
        out.edge_provenance.push_back(etag(e) + ".near");
        edges.emplace_back(s, ed.v);
        colors.push_back(c.palette_size() + e);
        out.edge_provenance.push_back(etag(e) + ".far");
    }
    out.graph = Graph(n + m, edges);
    out.edge_coloring = EdgeColoring(std::move(colors));
    out.fresh_color_count = m;
    if (d) {
        std::vector<Point> positions = d->positions();
        for (const Edge& ed : g.edges())
            positions.push_back(midpoint(d->position(ed.u), d->position(ed.v)));
        out.drawing = Drawing(out.graph, std::move(positions));
    }
    return out;
}

ReductionOutput planar_bipartite(const Graph& g, const EdgeColoring& c, const Drawing& d)
{
    ReductionOutput planar = planarize_drawing(g, c, d);
    ReductionOutput bip = bipartize_subdivision(planar.graph, *planar.edge_coloring, &*planar.drawing);
    return compose(planar, std::move(bip));
}

ReductionOutput to_line_rvc(const Graph& g, const EdgeColoring& c)
{
    require_matches(g, c);
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();
    if (n < 2 || !is_connected(g))
        throw Error(Errc::precondition_violated, "line-graph reduction needs a connected graph with n >= 2");

    auto base = g.edge_pairs();
    for (VertexId v = 0; v < n; ++v)
        base.emplace_back(v, n + v);
    const Graph with_pendants(2 * n, base);
    LineGraph line = line_graph(with_pendants);

    ReductionOutput out;
    std::vector<ColorId> colors(m + n);
    for (EdgeId e = 0; e < m; ++e) {
        colors[line.vertex_of_edge[e]] = c[e];
        out.vertex_provenance.push_back(etag(e));
    }
    const ColorId pendant_color = c.palette_size();
    for (VertexId v = 0; v < n; ++v) {
        colors[line.vertex_of_edge[m + v]] = pendant_color;
        out.vertex_provenance.push_back("pendant(" + vtag(v) + ")");
    }
    for (const Edge& ed : line.graph.edges())
        out.edge_provenance.push_back("line(" + out.vertex_provenance[ed.u] + "," + out.vertex_provenance[ed.v] + ")");
    out.graph = std::move(line.graph);
    out.vertex_coloring = VertexColoring(std::move(colors));
    out.fresh_color_count = 1;
    return out;
}

namespace {

std::string rewrite(const std::string& tag, const ReductionOutput& first)
{
    static const std::regex ref(R"(\b([ve])(\d+)\b)");
    std::string out;
    auto begin = std::sregex_iterator(tag.begin(), tag.end(), ref);
    std::size_t last = 0;
    for (auto it = begin; it != std::sregex_iterator(); ++it) {
        const auto& match = *it;
        out.append(tag, last, match.position(0) - last);
        const std::size_t id = std::stoul(match[2].str());
        const auto& table = match[1].str() == "v" ? first.vertex_provenance : first.edge_provenance;
        out += id < table.size() ? table[id] : match[0].str();
        last = match.position(0) + match.length(0);
    }
    out.append(tag, last, std::string::npos);
    return out;
}

} // namespace

ReductionOutput compose(const ReductionOutput& first, ReductionOutput second)
{
    for (auto& tag : second.vertex_provenance)
        tag = rewrite(tag, first);
    for (auto& tag : second.edge_provenance)
        tag = rewrite(tag, first);
    // Later stages keep earlier vertex ids, so earlier gadgets stay valid.
    if (second.gadgets.empty())
        second.gadgets = first.gadgets;
    second.fresh_color_count += first.fresh_color_count;
    return second;
}

std::string provenance_text(const ReductionOutput& out)
{
    std::ostringstream os;
    for (std::size_t v = 0; v < out.vertex_provenance.size(); ++v)
        os << 'v' << v << " <- " << out.vertex_provenance[v] << '\n';
    for (std::size_t e = 0; e < out.edge_provenance.size(); ++e)
        os << 'e' << e << " <- " << out.edge_provenance[e] << '\n';
    return os.str();
}

} // namespace rainbow
