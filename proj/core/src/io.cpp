#include "rainbow/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "rainbow/error.hpp"

namespace rainbow {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text)
{
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        pos = end + 1;
        if (!raw.empty() && raw.back() == '\r')
            raw.remove_suffix(1);
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t'))
                ++i;
            const std::size_t start = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t')
                ++i;
            if (i > start)
                line.tokens.push_back(raw.substr(start, i - start));
        }
        if (line.tokens.empty() || line.tokens.front().front() == '#')
            continue;
        lines.push_back(std::move(line));
        if (end == text.size())
            break;
    }
    return lines;
}

[[noreturn]] void syntax(std::size_t line, const std::string& what)
{
    throw Error(Errc::syntax_error, "line " + std::to_string(line) + ": " + what);
}

std::size_t to_count(const Line& line, std::string_view token)
{
    std::size_t value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        syntax(line.number, "expected a non-negative integer, got '" + std::string(token) + "'");
    return value;
}

} // namespace

Instance parse_instance(std::string_view text)
{
    const auto lines = tokenize(text);
    if (lines.empty())
        throw Error(Errc::syntax_error, "line 1: missing \"n m\" header");
    const Line& header = lines.front();
    if (header.tokens.size() != 2)
        syntax(header.number, "header must be \"n m\"");
    const std::size_t n = to_count(header, header.tokens[0]);
    const std::size_t m = to_count(header, header.tokens[1]);
    const std::size_t body = lines.size() - 1;

    enum class Shape { edges, vertex_colored, drawing } shape;
    if (body == m)
        shape = Shape::edges;
    else if (body == m + n && n > 0 && lines.back().tokens.size() == 1)
        shape = Shape::vertex_colored;
    else if (body == m + n && n > 0)
        shape = Shape::drawing;
    else
        syntax(lines.back().number, "expected " + std::to_string(m) + " edge lines (or " + std::to_string(m + n) +
                                        " with coordinates or vertex colors), found " + std::to_string(body));

    const std::size_t edge_begin = shape == Shape::drawing ? 1 + n : 1;
    std::vector<Point> positions;
    if (shape == Shape::drawing) {
        for (std::size_t i = 1; i <= n; ++i) {
            const Line& line = lines[i];
            if (line.tokens.size() != 2)
                syntax(line.number, "coordinate line must be \"px/qx py/qy\"");
            try {
                positions.push_back({parse_rational(line.tokens[0]), parse_rational(line.tokens[1])});
            } catch (const std::invalid_argument& e) {
                syntax(line.number, e.what());
            }
        }
    }

    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<ColorId> colors;
    std::optional<std::size_t> width;
    for (std::size_t i = edge_begin; i < edge_begin + m; ++i) {
        const Line& line = lines[i];
        if (line.tokens.size() != 2 && line.tokens.size() != 3)
            syntax(line.number, "edge line must be \"u v\" or \"u v c\"");
        if (width && *width != line.tokens.size())
            syntax(line.number, "mixed colored and uncolored edge lines");
        width = line.tokens.size();
        edges.emplace_back(to_count(line, line.tokens[0]), to_count(line, line.tokens[1]));
        if (line.tokens.size() == 3)
            colors.push_back(to_count(line, line.tokens[2]));
    }

    Instance out;
    out.graph = Graph(n, edges);
    if (width == 3u)
        out.edge_colors = EdgeColoring::normalized(colors);
    if (shape == Shape::vertex_colored) {
        std::vector<ColorId> vcolors;
        for (std::size_t i = 1 + m; i < lines.size(); ++i) {
            const Line& line = lines[i];
            if (line.tokens.size() != 1)
                syntax(line.number, "vertex color line must hold one integer");
            vcolors.push_back(to_count(line, line.tokens[0]));
        }
        out.vertex_colors = VertexColoring::normalized(vcolors);
    }
    if (shape == Shape::drawing)
        out.drawing = Drawing(out.graph, std::move(positions));
    return out;
}

namespace {

void write_header(std::ostringstream& os, const Graph& g)
{
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
}

void write_edges(std::ostringstream& os, const Graph& g, const EdgeColoring* c)
{
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        os << g.edge(e).u << ' ' << g.edge(e).v;
        if (c)
            os << ' ' << (*c)[e];
        os << '\n';
    }
}

} // namespace

std::string serialize(const Graph& g)
{
    std::ostringstream os;
    write_header(os, g);
    write_edges(os, g, nullptr);
    return os.str();
}

std::string serialize(const Graph& g, const EdgeColoring& c)
{
    require_matches(g, c);
    std::ostringstream os;
    write_header(os, g);
    write_edges(os, g, &c);
    return os.str();
}

std::string serialize(const Graph& g, const VertexColoring& c)
{
    require_matches(g, c);
    std::ostringstream os;
    write_header(os, g);
    write_edges(os, g, nullptr);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        os << c[v] << '\n';
    return os.str();
}

std::string serialize(const Graph& g, const Drawing& d, const EdgeColoring* c)
{
    if (c)
        require_matches(g, *c);
    std::ostringstream os;
    write_header(os, g);
    for (const Point& p : d.positions())
        os << format_rational(p.x) << ' ' << format_rational(p.y) << '\n';
    write_edges(os, g, c);
    return os.str();
}

std::string serialize(const Instance& instance)
{
    if (instance.drawing)
        return serialize(instance.graph, *instance.drawing,
                         instance.edge_colors ? &*instance.edge_colors : nullptr);
    if (instance.edge_colors)
        return serialize(instance.graph, *instance.edge_colors);
    if (instance.vertex_colors)
        return serialize(instance.graph, *instance.vertex_colors);
    return serialize(instance.graph);
}

Instance read_instance_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Errc::syntax_error, "cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_instance(buffer.str());
}

void write_text_file(const std::filesystem::path& path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(Errc::bad_params, "cannot write " + path.string());
    out << text;
}

} // namespace rainbow
