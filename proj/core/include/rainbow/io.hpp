#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "rainbow/coloring.hpp"
#include "rainbow/drawing.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

// Text formats (ASCII, LF, '#' starts a comment line):
//   plain:          "n m", then m lines "u v"
//   edge-colored:   "n m", then m lines "u v c"
//   vertex-colored: "n m", then m lines "u v", then n lines "c" (color of vertex i)
//   drawing:        "n m", then n lines "px/qx py/qy", then m edge lines
//                   (plain or edge-colored)
// Colors read from text are renumbered densely in increasing id order.
struct Instance {
    Graph graph;
    std::optional<EdgeColoring> edge_colors;
    std::optional<VertexColoring> vertex_colors;
    std::optional<Drawing> drawing;
};

// Throws Error{syntax_error} (message carries the line number) or the
// semantic errors of Graph / Drawing construction.
Instance parse_instance(std::string_view text);

std::string serialize(const Graph& g);
std::string serialize(const Graph& g, const EdgeColoring& c);
std::string serialize(const Graph& g, const VertexColoring& c);
std::string serialize(const Graph& g, const Drawing& d, const EdgeColoring* c = nullptr);
std::string serialize(const Instance& instance);

Instance read_instance_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

} // namespace rainbow
