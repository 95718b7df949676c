#include <gtest/gtest.h>

#include "rainbow/corpus.hpp"
#include "rainbow/error.hpp"
#include "rainbow/reductions.hpp"

using namespace rainbow;

TEST(Corpus, NamesRoundTrip)
{
    for (const char* name : {"diam2_bound", "diam3_bound", "planarize_equiv", "bipartize_equiv", "linegraph_equiv",
                             "cds_bound", "diam2_lemma", "hamiltonian_bound"}) {
        const auto check = parse_check(name);
        ASSERT_TRUE(check) << name;
        EXPECT_EQ(to_string(*check), name);
    }
    EXPECT_FALSE(parse_check("bogus"));
}

TEST(Corpus, EmptyCount)
{
    CorpusSpec spec;
    const std::vector<Check> checks = {Check::diam2_bound};
    const CorpusSummary s = run_corpus(spec, checks);
    EXPECT_EQ(s.instances, 0u);
    ASSERT_EQ(s.tallies.size(), 1u);
    EXPECT_EQ(s.tallies[0].passed + s.tallies[0].failed + s.tallies[0].skipped, 0u);
}

TEST(Corpus, Deterministic)
{
    CorpusSpec spec;
    spec.family = "random_connected";
    spec.count = 10;
    spec.seed = 77;
    const auto a = build_corpus(spec);
    const auto b = build_corpus(spec);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].graph, b[i].graph);
        EXPECT_EQ(a[i].colors, b[i].colors);
    }
}

TEST(Corpus, DiameterFilter)
{
    CorpusSpec spec;
    spec.family = "random_outerplanar";
    spec.count = 12;
    spec.diameter = 2;
    spec.blocks_max = 2;
    const std::vector<Check> checks = {Check::diam2_bound};
    const CorpusSummary s = run_corpus(spec, checks);
    EXPECT_EQ(s.tallies[0].passed, 12u);
}

TEST(Corpus, DrawnFamiliesHaveCrossings)
{
    for (const char* family : {"drawn_random", "drawn_adversarial"}) {
        CorpusSpec spec;
        spec.family = family;
        spec.count = 10;
        spec.n_min = 5;
        spec.n_max = 7;
        for (const auto& inst : build_corpus(spec)) {
            ASSERT_TRUE(inst.drawing);
            const std::size_t k = detect_crossings(inst.graph, *inst.drawing).size();
            EXPECT_GE(k, 1u);
            EXPECT_LE(k, 3u);
        }
    }
}

TEST(Corpus, AdversarialInstancesTraverseBothEdges)
{
    CorpusSpec spec;
    spec.family = "drawn_adversarial";
    spec.count = 10;
    for (const auto& inst : build_corpus(spec)) {
        const auto crossings = detect_crossings(inst.graph, *inst.drawing);
        bool any = false;
        for (const auto& x : crossings)
            any = any || rainbow_path_uses_both(inst.graph, inst.colors, x.edge_a, x.edge_b);
        EXPECT_TRUE(any);
    }
}

TEST(Corpus, FailuresCarryInstances)
{
    CorpusSpec spec;
    spec.family = "drawn_adversarial";
    spec.count = 20;
    const std::vector<Check> checks = {Check::planarize_equiv};
    const CorpusSummary s = run_corpus(spec, checks);
    for (const auto& f : s.tallies[0].failures) {
        const Instance inst = parse_instance(f.instance_text);
        EXPECT_TRUE(inst.drawing);
        EXPECT_TRUE(inst.edge_colors);
    }
}

TEST(Corpus, UnknownFamily)
{
    CorpusSpec spec;
    spec.family = "nope";
    spec.count = 1;
    EXPECT_THROW(build_corpus(spec), Error);
}
