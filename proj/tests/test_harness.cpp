#include "oracle.hpp"

#include <rainbowtri/harness.hpp>

#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdlib>
#include <set>

using namespace rainbowtri;

TEST(BellNumbers, MatchBellTriangle)
{
    for (std::size_t m = 0; m <= 20; ++m)
        EXPECT_EQ(bell_number(m), oracle::bell(m)) << m;
    EXPECT_EQ(bell_number(3), 5u);
    EXPECT_EQ(bell_number(6), 203u);
}

TEST(EnumerateColored, TwoVertices)
{
    std::vector<ColoredGraph> seen;
    enumerate_colored_graphs(2, [&](const ColoredGraph & g) { seen.push_back(g); });
    ASSERT_EQ(seen.size(), 2u);
    EXPECT_EQ(seen[0], ColoredGraph{2});
    EXPECT_EQ(seen[1], (ColoredGraph{2, {{0, 1, 1}}}));
}

TEST(EnumerateColored, TriangleHasFiveCanonicalColorings)
{
    std::set<std::vector<Color>> strings;
    enumerate_colored_graphs(3, [&](const ColoredGraph & g) {
        if (g.edge_count() == 3) {
            std::vector<Color> s;
            for (const auto & e : g.edges())
                s.push_back(e.color);
            strings.insert(s);
        }
    });
    EXPECT_EQ(strings, (std::set<std::vector<Color>>{{1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {1, 2, 2}, {1, 2, 3}}));
}

TEST(EnumerateColored, K4Has203Colorings)
{
    std::size_t complete = 0;
    enumerate_colored_graphs(4, [&](const ColoredGraph & g) { complete += g.edge_count() == 6; });
    EXPECT_EQ(complete, 203u);
}

TEST(EnumerateColored, CountsMatchClosedForms)
{
    for (std::size_t n = 0; n <= 4; ++n) {
        std::set<std::vector<std::pair<Vertex, Vertex>>> graphs;
        std::uint64_t instances = 0;
        enumerate_colored_graphs(n, [&](const ColoredGraph & g) {
            std::vector<std::pair<Vertex, Vertex>> pairs;
            for (const auto & e : g.edges())
                pairs.emplace_back(e.u, e.v);
            graphs.insert(pairs);
            ++instances;
        });
        auto p = n * (n - (n > 0)) / 2;
        std::uint64_t expected = 0;
        for (std::size_t m = 0; m <= p; ++m)
            expected += oracle::binomial(p, m) * oracle::bell(m);
        EXPECT_EQ(graphs.size(), std::uint64_t{1} << p);
        EXPECT_EQ(instances, expected);
        EXPECT_EQ(canonical_coloring_count(n), expected);
        EXPECT_EQ(labeled_graph_count(n), std::uint64_t{1} << p);
    }
}

TEST(EnumerateColored, CanonicalColoringsAreDistinctUpToRenaming)
{
    std::set<std::string> seen;
    enumerate_colored_graphs(4, [&](const ColoredGraph & g) {
        EXPECT_EQ(canonicalize_colors(g), g);
        EXPECT_TRUE(seen.insert(serialize(g)).second);
    });
}

TEST(EnumerateColored, AllColoringsModeCountsFunctions)
{
    std::uint64_t count = 0;
    enumerate_colored_graphs(3, [&](const ColoredGraph &) { ++count; }, {}, false);
    // sum over m of C(3,m) m^m
    EXPECT_EQ(count, 1u + 3u * 1u + 3u * 4u + 1u * 27u);
}

TEST(EnumerateColored, CapIsEnforced)
{
    EXPECT_THROW(enumerate_colored_graphs(5, [](const ColoredGraph &) {}), LimitExceeded);
    EnumerationLimits raised;
    raised.colored_cap = 5;
    EXPECT_NO_THROW(verify({EnumerationKind::AllColoredGraphs, 2}, TheoremId::T1, raised));
}

TEST(EnumerateOriented, Counts)
{
    for (std::size_t n = 0; n <= 5; ++n) {
        std::uint64_t count = 0;
        std::set<std::string> distinct;
        enumerate_oriented_graphs(n, [&](const OrientedGraph & d) {
            ++count;
            if (n <= 4)
                distinct.insert(serialize(d));
        });
        EXPECT_EQ(count, oriented_graph_count(n));
        if (n <= 4) {
            EXPECT_EQ(distinct.size(), count);
        }
    }
    EXPECT_EQ(oriented_graph_count(2), 3u);
    EXPECT_EQ(oriented_graph_count(5), 59049u);
}

TEST(EnumerateOriented, ThreeVerticesHaveTwoCyclicTriangles)
{
    std::size_t total = 0, cyclic = 0;
    enumerate_oriented_graphs(3, [&](const OrientedGraph & d) {
        ++total;
        cyclic += ! oracle::directed_triangles(d).empty();
    });
    EXPECT_EQ(total, 27u);
    EXPECT_EQ(cyclic, 2u);
}

TEST(EnumerateOriented, CapIsEnforced)
{
    EXPECT_THROW(enumerate_oriented_graphs(6, [](const OrientedGraph &) {}), LimitExceeded);
    auto large = EnumerationLimits::from_environment(true);
    EXPECT_GE(large.oriented_cap, 6u);
}

TEST(Limits, EnvironmentRaisesCaps)
{
    ::setenv("RAINBOWTRI_EXHAUSTIVE_CAP", "7", 1);
    auto raised = EnumerationLimits::from_environment();
    EXPECT_EQ(raised.colored_cap, 7u);
    EXPECT_EQ(raised.oriented_cap, 7u);
    ::setenv("RAINBOWTRI_EXHAUSTIVE_CAP", "2", 1);
    auto unchanged = EnumerationLimits::from_environment();
    EXPECT_EQ(unchanged.colored_cap, 4u);
    EXPECT_EQ(unchanged.oriented_cap, 5u);
    ::unsetenv("RAINBOWTRI_EXHAUSTIVE_CAP");
}

TEST(RandomGenerators, RainbowFreeGeneratorNeverProducesRainbowTriangles)
{
    std::size_t with_edges = 0;
    for (std::uint64_t i = 0; i < 2000; ++i) {
        auto rng = instance_rng(51, i);
        auto g = random_rainbow_free_colored_graph(1 + i % 12, rng);
        with_edges += g.edge_count() > 0;
        EXPECT_TRUE(oracle::rainbow_triangles(g).empty()) << serialize(g);
    }
    EXPECT_GT(with_edges, 1500u);
}

TEST(RandomGenerators, Deterministic)
{
    auto a = instance_rng(5, 9), b = instance_rng(5, 9);
    EXPECT_EQ(random_colored_graph(10, a), random_colored_graph(10, b));
    EXPECT_EQ(random_oriented_graph(10, a), random_oriented_graph(10, b));
}

TEST(Verify, ExhaustiveT5OnFourVertices)
{
    auto r = verify({EnumerationKind::AllOrientedGraphs, 4}, TheoremId::T5);
    EXPECT_EQ(r.instances_checked, 729u);
    EXPECT_EQ(r.violations(), 0u);
    EXPECT_TRUE(r.counterexamples.empty());
    EXPECT_GT(r.count(Conclusion::OrientationOfBalancedBipartite), 0u);
    std::uint64_t tallied = 0;
    for (const auto & [c, k] : r.verdict_tally)
        tallied += k;
    EXPECT_EQ(tallied, r.instances_checked);
    EXPECT_EQ(r.instances_checked - r.count(Conclusion::NotApplicable), r.condition_met_count);
}

TEST(Verify, ExhaustiveT1OnThreeVertices)
{
    auto r = verify({EnumerationKind::AllColoredGraphs, 3}, TheoremId::T1);
    EXPECT_EQ(r.instances_checked, canonical_coloring_count(3));
    EXPECT_EQ(r.violations(), 0u);
    EXPECT_EQ(r.condition_met_count, 1u); // only the rainbow triangle reaches 6
}

TEST(Verify, RandomT4)
{
    EnumerationSpec spec{EnumerationKind::RandomOriented, 12};
    spec.sample_count = 10000;
    spec.seed = 2024;
    auto r = verify(spec, TheoremId::T4);
    EXPECT_EQ(r.instances_checked, 10000u);
    EXPECT_EQ(r.violations(), 0u);
}

TEST(Verify, ColoringsOfFixedGraph)
{
    EnumerationSpec spec{EnumerationKind::ColoringsOfFixedGraph, 4};
    spec.fixed_graph = ColoredGraph{4, {{0, 1, 0}, {0, 2, 0}, {0, 3, 0}, {1, 2, 0}, {1, 3, 0}, {2, 3, 0}}};
    auto r = verify(spec, TheoremId::T3);
    EXPECT_EQ(r.instances_checked, 203u);
    EXPECT_EQ(r.violations(), 0u);
    EXPECT_GT(r.count(Conclusion::K4Exception), 0u);

    spec.fixed_graph.reset();
    EXPECT_THROW(verify(spec, TheoremId::T3), std::invalid_argument);
}

TEST(Verify, TypeMismatchIsRejected)
{
    EXPECT_THROW(verify({EnumerationKind::AllOrientedGraphs, 3}, TheoremId::T1), std::invalid_argument);
    EXPECT_THROW(verify({EnumerationKind::RandomColored, 3}, TheoremId::CH), std::invalid_argument);
    EXPECT_THROW(verify({EnumerationKind::AllOrientedGraphs, 6}, TheoremId::T5), LimitExceeded);
}

TEST(Verify, RestartDeterminismAndThreadIndependence)
{
    EnumerationSpec spec{EnumerationKind::RandomColored, 7};
    spec.sample_count = 3000;
    spec.seed = 99;
    auto a = verify(spec, TheoremId::T2);
    auto b = verify(spec, TheoremId::T2);
    spec.threads = 3;
    auto c = verify(spec, TheoremId::T2);
    EXPECT_TRUE(a.same_outcome(b));
    EXPECT_TRUE(a.same_outcome(c));

    EnumerationSpec ex{EnumerationKind::AllOrientedGraphs, 5};
    auto one = verify(ex, TheoremId::T5);
    ex.threads = 4;
    EXPECT_TRUE(one.same_outcome(verify(ex, TheoremId::T5)));

    EnumerationSpec col{EnumerationKind::AllColoredGraphs, 4};
    auto single = verify(col, TheoremId::T3);
    col.threads = 2;
    EXPECT_TRUE(single.same_outcome(verify(col, TheoremId::T3)));
}

TEST(Verify, OrientedStreamHasNoViolationsForT4AndT5)
{
    for (std::size_t n = 1; n <= 5; ++n) {
        VerificationReport t4, t5;
        enumerate_oriented_graphs(n, [&](const OrientedGraph & d) {
            t4.record(check_t4(d));
            t5.record(classify_t5(d));
        });
        EXPECT_EQ(t4.violations(), 0u);
        EXPECT_EQ(t5.violations(), 0u);
    }
}

TEST(Report, MergeIsAssociativeAndCounterexampleListMatchesTally)
{
    auto instance = [](int k) {
        TheoremVerdict v{TheoremId::CH, true, Conclusion::ConjectureCounterexample, {}};
        v.witness.instance = "dig " + std::to_string(k) + " 0\n";
        return v;
    };
    VerificationReport a, b, c;
    a.record(instance(3));
    b.record(instance(1));
    b.record(TheoremVerdict{TheoremId::CH, false, Conclusion::NotApplicable, {}});
    c.record(instance(2));

    auto left = a;
    left.merge(b);
    left.merge(c);
    auto bc = b;
    bc.merge(c);
    auto right = a;
    right.merge(bc);
    EXPECT_TRUE(left.same_outcome(right));
    EXPECT_EQ(left.counterexamples, (std::vector<std::string>{"dig 1 0\n", "dig 2 0\n", "dig 3 0\n"}));
    EXPECT_EQ(left.count(Conclusion::ConjectureCounterexample), 3u);
    EXPECT_EQ(left.instances_checked, 4u);
    EXPECT_EQ(left.condition_met_count, 3u);
}

TEST(Report, RecordsAreOneJsonObjectPerVerdictClass)
{
    auto r = verify({EnumerationKind::AllOrientedGraphs, 3}, TheoremId::T5);
    auto text = to_records(r);
    std::istringstream in(text);
    std::string line;
    std::uint64_t total = 0;
    std::size_t lines = 0;
    while (std::getline(in, line)) {
        auto j = nlohmann::json::parse(line);
        EXPECT_EQ(j["theorem"], "T5");
        EXPECT_EQ(j["instances"], 27);
        total += j["count"].get<std::uint64_t>();
        ++lines;
    }
    EXPECT_EQ(lines, r.verdict_tally.size());
    EXPECT_EQ(total, 27u);
    EXPECT_NE(to_text(r).find("instances 27"), std::string::npos);
}

TEST(SearchCH, SmallCasesHaveNoCounterexample)
{
    for (std::size_t n_max : {3u, 4u, 5u}) {
        auto r = search_ch_counterexample(n_max);
        EXPECT_EQ(r.count(Conclusion::ConjectureCounterexample), 0u);
        EXPECT_TRUE(r.counterexamples.empty());
        std::uint64_t expected = 0;
        for (std::size_t n = 1; n <= n_max; ++n)
            expected += oriented_graph_count(n);
        EXPECT_EQ(r.instances_checked, expected);
    }
    EXPECT_THROW(search_ch_counterexample(6), LimitExceeded);
}
