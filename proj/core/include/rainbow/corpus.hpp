#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/io.hpp"

namespace rainbow {

// Property suites runnable over a generated corpus.
enum class Check {
    diam2_bound,       // outerplanar diameter 2: construction <= 3 colors, 2 <= rc <= 3
    diam3_bound,       // outerplanar diameter 3: construction <= 6 colors, 3 <= rc <= 6
    planarize_equiv,   // verdict kept by crossing removal
    bipartize_equiv,   // verdict kept by subdivision
    linegraph_equiv,   // edge verdict equals vertex verdict of the line-graph instance
    cds_bound,         // rc(G) <= rc(G[D]) + 3 and the extension realizes it
    diam2_lemma,       // diameter 2, bridgeless: rc <= 5
    hamiltonian_bound, // Hamiltonian: rc <= ceil(n/2), construction included
};

std::optional<Check> parse_check(std::string_view name);
std::string_view to_string(Check check);

// Families: every generator family name, plus "drawn_random" (random
// connected graph on convex points in shuffled order) and
// "drawn_adversarial" (a rainbow path a-x-y-u-v-b whose edges xy and uv
// cross, plus random extra edges).
struct CorpusSpec {
    std::string family = "random_outerplanar";
    std::size_t count = 0;
    std::uint64_t seed = 1;
    std::size_t n_min = 4;
    std::size_t n_max = 8;
    std::size_t m = 0;                    // 0: family default
    std::optional<std::size_t> diameter;  // keep only this diameter
    bool bridgeless = false;              // keep only bridgeless graphs
    std::size_t crossings_min = 1;        // drawn families
    std::size_t crossings_max = 3;
    std::size_t palette = 3;              // random edge colorings use 1..palette colors
    unsigned chord_percent = 50;
    std::size_t blocks_max = 1;           // outerplanar: blocks drawn from 1..blocks_max
    std::size_t solver_max_edges = 20;
    std::size_t max_attempts = 200000;    // rejection budget for the whole corpus
};

struct CorpusInstance {
    std::uint64_t seed = 0;
    Graph graph;
    EdgeColoring colors;
    std::optional<Drawing> drawing;

    Instance as_instance() const;
};

// Throws Error{bad_params} for an unknown family or when the rejection
// budget runs out.
std::vector<CorpusInstance> build_corpus(const CorpusSpec& spec);

enum class Outcome { pass, fail, skip };

struct CheckResult {
    Outcome outcome = Outcome::skip;
    std::string detail;
};

CheckResult run_check(Check check, const CorpusInstance& instance, const CorpusSpec& spec);

struct Failure {
    std::size_t index = 0;
    std::string detail;
    std::string instance_text; // self-contained, readable by parse_instance
};

struct CheckTally {
    Check check = Check::diam2_bound;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    std::vector<Failure> failures; // in corpus order
};

struct CorpusSummary {
    std::size_t instances = 0;
    std::vector<CheckTally> tallies;
};

CorpusSummary run_corpus(const CorpusSpec& spec, std::span<const Check> checks);

// True when some rainbow path of (g, c) runs through both edges of the
// crossing. Exhaustive over simple paths; meant for small graphs.
bool rainbow_path_uses_both(const Graph& g, const EdgeColoring& c, EdgeId a, EdgeId b);

} // namespace rainbow
