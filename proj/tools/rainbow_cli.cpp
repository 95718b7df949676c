// Command-line front end: verify, solve, reduce, color, gen, corpus.
//
// Exit codes: 0 success / true verdict, 1 false verdict or failed checks,
// 2 input or precondition error, 3 a constructive bound was not met.

#include <CLI11.hpp>

#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include "rainbow/analysis.hpp"
#include "rainbow/constructive.hpp"
#include "rainbow/corpus.hpp"
#include "rainbow/error.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/io.hpp"
#include "rainbow/reductions.hpp"
#include "rainbow/solver.hpp"
#include "rainbow/verify.hpp"

namespace fs = std::filesystem;
using namespace rainbow;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitBound = 3;

// Text output is prose-ish lines; records are key=value lines.
class Report {
public:
    explicit Report(bool records) : records_(records) {}

    void field(const std::string& key, const std::string& value)
    {
        if (records_)
            std::cout << key << '=' << value << '\n';
        else
            std::cout << key << ": " << value << '\n';
    }

    void field(const std::string& key, std::size_t value) { field(key, std::to_string(value)); }

    void note(const std::string& text)
    {
        if (!records_)
            std::cout << text << '\n';
    }

private:
    bool records_;
};

struct Common {
    std::uint64_t seed = 1;
    std::size_t cap = 0;
    std::string out;
    std::string format = "text";

    bool records() const { return format == "records"; }
};

void add_common(CLI::App* cmd, Common& common)
{
    cmd->add_option("--seed", common.seed, "Random seed")->capture_default_str();
    cmd->add_option("--cap", common.cap, "Upper cap (palette bound or search cap; 0 = command default)");
    cmd->add_option("--out", common.out, "Output path");
    cmd->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"text", "records"}))
        ->capture_default_str();
}

void emit(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-")
        std::cout << text;
    else
        write_text_file(path, text);
}

std::string pair_text(VertexId u, VertexId v)
{
    return std::to_string(u) + " " + std::to_string(v);
}

std::string delta(std::size_t before, std::size_t after)
{
    std::ostringstream os;
    os << before << " -> " << after << " (";
    if (after >= before)
        os << '+' << after - before;
    else
        os << '-' << before - after;
    os << ')';
    return os.str();
}

// verify

struct VerifyArgs {
    std::string file;
    std::string mode = "edge";
};

int run_verify(const VerifyArgs& args, const Common& common)
{
    const Instance inst = read_instance_file(args.file);
    Report report(common.records());
    VerifyOptions options;
    if (common.cap)
        options.palette_bound = common.cap;
    const Verdict verdict = [&] {
        if (args.mode == "edge") {
            if (!inst.edge_colors)
                throw Error(Errc::bad_coloring, "file carries no edge colors");
            return is_rainbow_connected(inst.graph, *inst.edge_colors, options);
        }
        if (!inst.vertex_colors)
            throw Error(Errc::bad_coloring, "file carries no vertex colors");
        return is_rainbow_vertex_connected(inst.graph, *inst.vertex_colors, options);
    }();
    report.field("mode", args.mode);
    report.field("verdict", verdict.connected ? "connected" : "not connected");
    if (const auto& pair = verdict.counterexample)
        report.field("counterexample", pair_text(pair->first, pair->second));
    return verdict.connected ? kExitOk : kExitFalse;
}

// solve

struct SolveArgs {
    std::string file;
    std::string mode = "rc";
    std::size_t max_size = 14;
};

int run_solve(const SolveArgs& args, const Common& common)
{
    const Instance inst = read_instance_file(args.file);
    const Graph& g = inst.graph;
    SolverOptions options;
    options.max_edges = args.max_size;
    options.max_vertices = args.max_size;
    Report report(common.records());
    std::string coloring_text;
    SolveResult result;
    if (args.mode == "rc") {
        result = rc_exact(g, common.cap ? common.cap : g.edge_count(), options);
        coloring_text = serialize(g, result.edge_coloring());
    } else {
        result = rvc_exact(g, common.cap ? common.cap : g.vertex_count(), options);
        coloring_text = serialize(g, result.vertex_coloring());
    }
    report.field(args.mode, result.value);
    report.field("nodes", std::to_string(result.nodes_explored));
    if (common.out.empty()) {
        report.note("coloring:");
        std::cout << coloring_text;
    } else {
        write_text_file(common.out, coloring_text);
        report.field("written", common.out);
    }
    return kExitOk;
}

// reduce

struct ReduceArgs {
    std::string kind;
    std::string file;
    std::string drawing_file;
};

int run_reduce(const ReduceArgs& args, const Common& common)
{
    if (common.out.empty())
        throw Error(Errc::bad_params, "reduce needs --out");
    Instance inst = read_instance_file(args.file);
    if (!args.drawing_file.empty()) {
        Instance drawn = read_instance_file(args.drawing_file);
        if (!drawn.drawing || !(drawn.graph == inst.graph))
            throw Error(Errc::bad_params, "drawing file does not describe the same graph");
        inst.drawing = std::move(drawn.drawing);
    }
    if (!inst.edge_colors)
        throw Error(Errc::bad_coloring, "reductions start from an edge-colored graph");
    const EdgeColoring& c = *inst.edge_colors;
    const bool needs_drawing = args.kind == "planarize" || args.kind == "planar-bipartite";
    if (needs_drawing && !inst.drawing)
        throw Error(Errc::bad_params, args.kind + " needs a drawing (in the input or via --drawing)");

    ReductionOutput out;
    if (args.kind == "planarize")
        out = planarize_drawing(inst.graph, c, *inst.drawing);
    else if (args.kind == "bipartize")
        out = bipartize_subdivision(inst.graph, c, inst.drawing ? &*inst.drawing : nullptr);
    else if (args.kind == "planar-bipartite")
        out = planar_bipartite(inst.graph, c, *inst.drawing);
    else
        out = to_line_rvc(inst.graph, c);

    if (out.edge_coloring)
        write_text_file(common.out, serialize(out.graph, *out.edge_coloring));
    else
        write_text_file(common.out, serialize(out.graph, *out.vertex_coloring));
    write_text_file(common.out + ".prov", provenance_text(out));
    if (out.drawing)
        write_text_file(common.out + ".drawing", serialize(out.graph, *out.drawing, &*out.edge_coloring));

    Report report(common.records());
    report.field("kind", args.kind);
    report.field("vertices", delta(inst.graph.vertex_count(), out.graph.vertex_count()));
    report.field("edges", delta(inst.graph.edge_count(), out.graph.edge_count()));
    const std::size_t palette_after =
        out.edge_coloring ? out.edge_coloring->palette_size() : out.vertex_coloring->palette_size();
    report.field("palette", delta(c.palette_size(), palette_after));
    report.field("gadgets", out.gadgets.size());
    report.field("written", common.out);
    return kExitOk;
}

// color

struct ColorArgs {
    std::string strategy;
    std::string file;
    std::size_t cycle_n = 0;
};

int run_color(const ColorArgs& args, const Common& common)
{
    BoundedColoring result;
    Graph g;
    if (args.strategy == "cycle" && args.file.empty()) {
        if (!args.cycle_n)
            throw Error(Errc::bad_params, "cycle needs a graph file or --n");
        g = cycle_graph(args.cycle_n);
        result = color_cycle(args.cycle_n);
    } else {
        if (args.file.empty())
            throw Error(Errc::bad_params, "a graph file is required");
        g = read_instance_file(args.file).graph;
        if (args.strategy == "cycle") {
            if (g.edge_count() != g.vertex_count() || g.vertex_count() < 3 || !analyze(g).is_2connected)
                throw Error(Errc::precondition_violated, "graph is not a cycle");
            result = color_hamiltonian(g);
            result.strategy = Strategy::cycle;
        } else if (args.strategy == "hamiltonian") {
            result = color_hamiltonian(g);
        } else if (args.strategy == "outerplanar2") {
            result = color_outerplanar_diam2(g);
        } else {
            result = color_outerplanar_diam3(g);
        }
    }
    Report report(common.records());
    report.field("strategy", std::string(to_string(result.strategy)));
    report.field("palette", result.coloring.palette_size());
    report.field("bound", result.bound_claimed);
    report.field("verified", result.verified ? "yes" : "no");
    const std::string text = serialize(g, result.coloring);
    if (common.out.empty()) {
        report.note("coloring:");
        std::cout << text;
    } else {
        write_text_file(common.out, text);
        report.field("written", common.out);
    }
    return result.verified ? kExitOk : kExitFalse;
}

// gen

struct GenArgs {
    std::string family;
    GeneratorParams params;
    std::size_t palette = 0;
    bool drawing = false;
};

int run_gen(GenArgs args, const Common& common)
{
    const auto family = parse_family(args.family);
    if (!family)
        throw Error(Errc::bad_params, "unknown family '" + args.family + "'");
    args.params.seed = common.seed;
    if (*family == Family::convex)
        throw Error(Errc::bad_params, "use --drawing with another family for convex drawings");
    GeneratedInstance made = generate(*family, args.params);
    Instance inst{made.graph, std::nullopt, std::nullopt, std::move(made.drawing)};
    if (args.palette)
        inst.edge_colors = random_edge_coloring(inst.graph, args.palette, common.seed);
    if (args.drawing && !inst.drawing)
        inst.drawing = convex_drawing(inst.graph);
    emit(common.out, serialize(inst));
    return kExitOk;
}

// corpus

struct CorpusArgs {
    CorpusSpec spec;
    std::string crossings = "1..3";
    std::vector<std::string> checks;
    std::size_t diameter = 0;
    std::string dump_dir;
};

std::pair<std::size_t, std::size_t> parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const std::size_t v = std::stoul(text);
            return {v, v};
        }
        return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw Error(Errc::bad_params, "bad range '" + text + "'");
    }
}

int run_corpus_cmd(CorpusArgs args, const Common& common)
{
    CorpusSpec& spec = args.spec;
    spec.seed = common.seed;
    if (common.cap)
        spec.palette = common.cap;
    if (args.diameter)
        spec.diameter = args.diameter;
    std::tie(spec.crossings_min, spec.crossings_max) = parse_range(args.crossings);
    std::vector<Check> checks;
    for (const auto& name : args.checks) {
        const auto check = parse_check(name);
        if (!check)
            throw Error(Errc::bad_params, "unknown check '" + name + "'");
        checks.push_back(*check);
    }
    const CorpusSummary summary = run_corpus(spec, checks);
    Report report(common.records());
    report.field("instances", summary.instances);
    bool all_pass = true;
    for (const auto& tally : summary.tallies) {
        const std::string name(to_string(tally.check));
        if (common.records()) {
            report.field(name + ".pass", tally.passed);
            report.field(name + ".fail", tally.failed);
            report.field(name + ".skip", tally.skipped);
        } else {
            std::cout << name << ": " << tally.passed << " pass, " << tally.failed << " fail, " << tally.skipped
                      << " skipped\n";
        }
        all_pass = all_pass && tally.failed == 0;
        for (const auto& failure : tally.failures) {
            if (args.dump_dir.empty()) {
                if (&failure == &tally.failures.front())
                    report.field(name + ".first_failure", std::to_string(failure.index) + " " + failure.detail);
                continue;
            }
            fs::create_directories(args.dump_dir);
            const fs::path path = fs::path(args.dump_dir) / (name + "_" + std::to_string(failure.index) + ".txt");
            write_text_file(path, "# " + failure.detail + "\n" + failure.instance_text);
            report.field(name + ".dumped", path.string());
        }
    }
    return all_pass ? kExitOk : kExitFalse;
}

int guarded(const std::function<int()>& body)
{
    try {
        return body();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == Errc::bound_unmet ? kExitBound : kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Rainbow connection toolkit"};
    app.require_subcommand(1);
    Common common;

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check whether a colored graph is rainbow (vertex-)connected");
    verify_cmd->add_option("file", verify.file, "Colored graph file")->required();
    verify_cmd->add_option("--mode", verify.mode)->check(CLI::IsMember({"edge", "vertex"}))->capture_default_str();
    add_common(verify_cmd, common);

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Exact rc or rvc with an optimal coloring");
    solve_cmd->add_option("file", solve.file, "Graph file")->required();
    solve_cmd->add_option("--mode", solve.mode)->check(CLI::IsMember({"rc", "rvc"}))->capture_default_str();
    solve_cmd->add_option("--max-size", solve.max_size, "Refuse graphs with more edges (rc) or vertices (rvc)")
        ->capture_default_str();
    add_common(solve_cmd, common);

    ReduceArgs reduce;
    auto* reduce_cmd = app.add_subcommand("reduce", "Apply a reduction; writes <out>, <out>.prov and <out>.drawing");
    reduce_cmd->add_option("kind", reduce.kind)
        ->required()
        ->check(CLI::IsMember({"planarize", "bipartize", "linegraph", "planar-bipartite"}));
    reduce_cmd->add_option("file", reduce.file, "Edge-colored graph (may carry a drawing)")->required();
    reduce_cmd->add_option("--drawing", reduce.drawing_file, "Separate drawing file");
    add_common(reduce_cmd, common);

    ColorArgs color;
    auto* color_cmd = app.add_subcommand("color", "Constructive colorings with their bounds");
    color_cmd->add_option("strategy", color.strategy)
        ->required()
        ->check(CLI::IsMember({"cycle", "hamiltonian", "outerplanar2", "outerplanar3"}));
    color_cmd->add_option("file", color.file, "Graph file");
    color_cmd->add_option("--n", color.cycle_n, "Cycle length when no file is given");
    add_common(color_cmd, common);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a graph instance");
    gen_cmd->add_option("family", gen.family)->required();
    gen_cmd->add_option("--n", gen.params.n, "Vertex count");
    gen_cmd->add_option("--m", gen.params.m, "Edge count for random families");
    gen_cmd->add_option("--chords", gen.params.chord_percent, "Chord keep percentage (outerplanar)");
    gen_cmd->add_option("--blocks", gen.params.blocks, "Blocks (outerplanar)");
    gen_cmd->add_option("--palette", gen.palette, "Attach a random edge coloring with this many colors");
    gen_cmd->add_flag("--drawing", gen.drawing, "Attach a convex-position drawing");
    add_common(gen_cmd, common);

    CorpusArgs corpus;
    auto* corpus_cmd = app.add_subcommand("corpus", "Run property checks over a generated corpus");
    corpus_cmd->add_option("--family", corpus.spec.family)->capture_default_str();
    corpus_cmd->add_option("--count", corpus.spec.count)->capture_default_str();
    corpus_cmd->add_option("--n-min", corpus.spec.n_min)->capture_default_str();
    corpus_cmd->add_option("--n-max", corpus.spec.n_max)->capture_default_str();
    corpus_cmd->add_option("--m", corpus.spec.m, "Edge count (0 = family default)");
    corpus_cmd->add_option("--diameter", corpus.diameter, "Keep only this diameter");
    corpus_cmd->add_flag("--bridgeless", corpus.spec.bridgeless, "Keep only bridgeless graphs");
    corpus_cmd->add_option("--crossings", corpus.crossings, "Crossing range for drawn families")->capture_default_str();
    corpus_cmd->add_option("--chords", corpus.spec.chord_percent)->capture_default_str();
    corpus_cmd->add_option("--blocks-max", corpus.spec.blocks_max)->capture_default_str();
    corpus_cmd->add_option("--max-edges", corpus.spec.solver_max_edges)->capture_default_str();
    corpus_cmd->add_option("--checks", corpus.checks)->delimiter(',');
    corpus_cmd->add_option("--dump-dir", corpus.dump_dir, "Write each counterexample instance here");
    add_common(corpus_cmd, common);

    CLI11_PARSE(app, argc, argv);

    if (*verify_cmd)
        return guarded([&] { return run_verify(verify, common); });
    if (*solve_cmd)
        return guarded([&] { return run_solve(solve, common); });
    if (*reduce_cmd)
        return guarded([&] { return run_reduce(reduce, common); });
    if (*color_cmd)
        return guarded([&] { return run_color(color, common); });
    if (*gen_cmd)
        return guarded([&] { return run_gen(gen, common); });
    return guarded([&] { return run_corpus_cmd(corpus, common); });
}
