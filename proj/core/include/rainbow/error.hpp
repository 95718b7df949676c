#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rainbow {

enum class Errc {
    duplicate_edge,
    self_loop,
    vertex_out_of_range,
    bad_params,
    syntax_error,
    bad_coloring,
    too_large,
    precondition_violated,
    non_unique,
    none_within_cap,
    empty_graph,
    palette_too_large,
    cap_exceeded,
    degenerate_drawing,
    not_hamiltonian,
    bound_unmet,
};

std::string_view to_string(Errc code);

// Single exception type for the library; callers dispatch on code().
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace rainbow
