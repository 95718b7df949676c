#include "rainbow/error.hpp"

namespace rainbow {

std::string_view to_string(Errc code)
{
    switch (code) {
    case Errc::duplicate_edge: return "DuplicateEdge";
    case Errc::self_loop: return "SelfLoop";
    case Errc::vertex_out_of_range: return "VertexOutOfRange";
    case Errc::bad_params: return "BadParams";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::bad_coloring: return "BadColoring";
    case Errc::too_large: return "TooLarge";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::non_unique: return "NonUnique";
    case Errc::none_within_cap: return "NoneWithinCap";
    case Errc::empty_graph: return "EmptyGraph";
    case Errc::palette_too_large: return "PaletteTooLarge";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::degenerate_drawing: return "DegenerateDrawing";
    case Errc::not_hamiltonian: return "NotHamiltonian";
    case Errc::bound_unmet: return "BoundUnmet";
    }
    return "Unknown";
}

} // namespace rainbow
