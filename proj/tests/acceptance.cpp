// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Pass --large (or set RAINBOWTRI_ACCEPTANCE_LARGE=1) to add the
// exhaustive n = 6 oriented run to criterion 4.

#include "oracle.hpp"

#include <rainbowtri/rainbowtri.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

using namespace rainbowtri;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

class Suite {
  public:
    void run(const std::string & id, const std::string & title, double limit_seconds,
        const std::function<Outcome()> & body)
    {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = body();
        }
        catch (const std::exception & e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
        bool in_time = took.count() < limit_seconds;
        bool pass = o.ok && in_time;
        _failures += ! pass;
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << id << ' ' << title << ": " << o.detail;
        if (! in_time)
            std::cout << " [over time limit " << limit_seconds << " s]";
        std::cout << " (" << std::fixed << std::setprecision(2) << took.count() << " s)" << std::endl;
    }

    int failures() const { return _failures; }

  private:
    int _failures = 0;
};

bool is_rainbow(const ColoredGraph & g, const Triangle & t)
{
    auto a = g.color(t[0], t[1]), b = g.color(t[0], t[2]), c = g.color(t[1], t[2]);
    return a && b && c && *a != *b && *a != *c && *b != *c;
}

Outcome fixture_validation()
{
    std::ostringstream detail;
    bool ok = true;
    for (const auto & [name, g] : {std::pair{"k4_exception", k4_exception()},
             std::pair{"k4_minus_edge_exception", k4_minus_edge_exception()}}) {
        std::size_t min_dc = SIZE_MAX;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            min_dc = std::min(min_dc, oracle::color_degree(g, v));
        auto rainbow = oracle::rainbow_triangles(g);
        ok &= g.vertex_count() == 4 && min_dc == 2 && rainbow.empty();
        detail << name << " min d^c=" << min_dc << " rainbow=" << rainbow.size() << "; ";
    }
    ok &= k4_exception().edge_count() == 6 && k4_minus_edge_exception().edge_count() == 5;
    return {ok, detail.str()};
}

Outcome sharpness_identities()
{
    for (std::size_t n = 3; n <= 100; ++n) {
        auto g = sharp_complete_coloring(n);
        std::size_t dc = 0;
        for (Vertex v = 0; v < n; ++v)
            dc += color_degree(g, v);
        auto target = n * (n + 1) / 2 - 1;
        if (g.edge_count() + color_number(g) != target || dc != target)
            return {false, "identity fails at n=" + std::to_string(n)};
        if (! oracle::rainbow_triangles(g).empty())
            return {false, "rainbow triangle at n=" + std::to_string(n)};
    }
    return {true, "n=3..100: e+c = sum d^c = n(n+1)/2-1, 0 rainbow triangles"};
}

Outcome t1_t2_exhaustive()
{
    std::uint64_t instances = 0, met[2] = {0, 0}, violations = 0, bad_witness = 0;
    for (std::size_t n = 1; n <= 4; ++n)
        enumerate_colored_graphs(n, [&](const ColoredGraph & g) {
            ++instances;
            int i = 0;
            for (const auto & v : {check_t1(g), check_t2(g)}) {
                if (v.condition_met) {
                    ++met[i];
                    if (v.conclusion == Conclusion::Violation)
                        ++violations;
                    else if (! v.witness.triangle || ! is_rainbow(g, *v.witness.triangle))
                        ++bad_witness;
                }
                ++i;
            }
        });
    std::ostringstream d;
    d << instances << " instances (n<=4, canonical colorings), T1 met " << met[0] << ", T2 met " << met[1]
      << ", violations " << violations << ", bad witnesses " << bad_witness;
    return {violations == 0 && bad_witness == 0 && instances == [] {
        std::uint64_t s = 0;
        for (std::size_t n = 1; n <= 4; ++n)
            s += canonical_coloring_count(n);
        return s;
    }(), d.str()};
}

Outcome t3_exhaustive()
{
    std::map<Conclusion, std::uint64_t> tally;
    std::uint64_t met = 0;
    enumerate_colored_graphs(4, [&](const ColoredGraph & g) {
        std::size_t min_dc = SIZE_MAX;
        for (Vertex v = 0; v < 4; ++v)
            min_dc = std::min(min_dc, oracle::color_degree(g, v));
        auto v = classify_t3(g);
        if (v.condition_met != (min_dc >= 2))
            tally[Conclusion::Violation] += 1000000;
        if (v.condition_met) {
            ++met;
            ++tally[v.conclusion];
        }
    });
    std::uint64_t allowed = tally[Conclusion::HasRainbow] + tally[Conclusion::BalancedCompleteBipartite] +
        tally[Conclusion::K4Exception] + tally[Conclusion::K4MinusEdgeException];
    std::ostringstream d;
    d << met << " with min d^c>=2: HasRainbow " << tally[Conclusion::HasRainbow] << ", K_{2,2} "
      << tally[Conclusion::BalancedCompleteBipartite] << ", K4 " << tally[Conclusion::K4Exception] << ", K4-e "
      << tally[Conclusion::K4MinusEdgeException] << ", violations " << tally[Conclusion::Violation];
    bool ok = allowed == met && tally[Conclusion::Violation] == 0 && tally[Conclusion::K4Exception] > 0 &&
        tally[Conclusion::K4MinusEdgeException] > 0;
    return {ok, d.str()};
}

Outcome t4_t5_exhaustive(std::size_t n_max)
{
    std::uint64_t instances = 0, met4 = 0, met5 = 0, violations4 = 0, violations5 = 0;
    for (std::size_t n = 1; n <= n_max; ++n) {
        auto total = oriented_graph_count(n);
        for (std::uint64_t i = 0; i < total; ++i) {
            auto d = oriented_graph_from_index(n, i);
            ++instances;
            auto v4 = check_t4(d);
            auto v5 = classify_t5(d);
            met4 += v4.condition_met;
            met5 += v5.condition_met;
            violations4 += v4.conclusion == Conclusion::Violation;
            violations5 += v5.conclusion == Conclusion::Violation;
        }
    }
    std::ostringstream d;
    d << instances << " oriented graphs n<=" << n_max << ", T4 met " << met4 << " violations " << violations4
      << ", T5 met " << met5 << " violations " << violations5;
    return {violations4 == 0 && violations5 == 0, d.str()};
}

struct CorrespondenceTally {
    std::uint64_t instances = 0;
    std::uint64_t set_mismatches = 0;
    std::uint64_t count_mismatches = 0;
    std::uint64_t with_triangles = 0;
};

void correspondence_instance(const OrientedGraph & d, CorrespondenceTally & t)
{
    ++t.instances;
    auto c = triangle_correspondence(d);
    auto assoc = associated_colored_graph(d);
    t.set_mismatches += c.directed != c.rainbow || c.rainbow != enumerate_rainbow_triangles(assoc.graph);
    t.with_triangles += ! c.directed.empty();

    std::size_t omega = 0, dc = 0;
    for (Vertex v = 0; v < d.vertex_count(); ++v) {
        omega += oracle::out_component_number(d, v);
        dc += oracle::color_degree(assoc.graph, v);
    }
    t.count_mismatches += assoc.graph.edge_count() != d.arc_count() || oracle::color_number(assoc.graph) != omega ||
        dc != d.arc_count() + omega;
}

CorrespondenceTally correspondence_run()
{
    CorrespondenceTally t;
    for (std::size_t n = 1; n <= 5; ++n)
        enumerate_oriented_graphs(n, [&](const OrientedGraph & d) { correspondence_instance(d, t); });
    for (std::size_t n : {8u, 10u, 12u})
        for (std::uint64_t i = 0; i < 10000; ++i) {
            auto rng = instance_rng(5000 + n, i);
            correspondence_instance(random_oriented_graph(n, rng), t);
        }
    return t;
}

Outcome orientation_pipeline()
{
    std::uint64_t instances = 0, head_repeats = 0, cover_failures = 0, degrees = 0, not_free = 0, arcs = 0;
    for (std::uint64_t i = 0; i < 10000; ++i) {
        auto rng = instance_rng(7000, i);
        auto n = 1 + static_cast<std::size_t>(i % 10);
        auto g = random_rainbow_free_colored_graph(n, rng);
        ++instances;
        not_free += ! oracle::rainbow_triangles(g).empty();

        auto reduced = color_degree_preserving_reduction(g);
        auto result = orient(reduced);
        const auto & d = result.digraph;
        arcs += d.arc_count();
        oracle::ColorMatrix colors{reduced};
        bool c2 = true;
        for (const auto & a : d.arcs()) {
            auto c = *colors.at(a.tail, a.head);
            for (Vertex w = 0; w < n; ++w)
                if (w != a.tail && w != a.head && colors.at(a.head, w) == c)
                    c2 = false;
        }
        bool c4 = true, same = true;
        for (Vertex v = 0; v < n; ++v) {
            auto dc_reduced = oracle::color_degree(reduced, v);
            same &= dc_reduced == oracle::color_degree(g, v);
            c4 &= oracle::in_degree(d, v) + oracle::out_component_number(d, v) >= dc_reduced;
        }
        head_repeats += ! c2;
        cover_failures += ! c4;
        degrees += ! same;
    }
    std::ostringstream o;
    o << instances << " random rainbow-free colored graphs n<=10 (" << arcs << " arcs): head-color repeats " << head_repeats
      << ", in+omega+ < d^c " << cover_failures << ", color-degree changes " << degrees << ", generator leaks " << not_free;
    return {head_repeats == 0 && cover_failures == 0 && degrees == 0 && not_free == 0, o.str()};
}

Outcome orientation_head_colors_unrestricted()
{
    std::uint64_t instances = 0, head_repeats = 0, degrees = 0, with_rainbow = 0, cover_failures_rainbow_free = 0;
    for (std::uint64_t i = 0; i < 10000; ++i) {
        auto rng = instance_rng(7100, i);
        auto g = random_colored_graph(1 + i % 10, rng);
        ++instances;
        auto p = check_orientation_pipeline(g);
        head_repeats += ! p.head_colors_unique;
        degrees += ! p.color_degrees_preserved;
        with_rainbow += ! p.source_rainbow_free;
        cover_failures_rainbow_free += p.source_rainbow_free && ! p.out_components_cover_colors;
    }
    std::ostringstream o;
    o << instances << " unrestricted random colored graphs n<=10 (" << with_rainbow
      << " with rainbow triangles): head-color repeats " << head_repeats << ", color-degree changes " << degrees
      << ", in+omega+ < d^c on rainbow-free ones " << cover_failures_rainbow_free;
    return {head_repeats == 0 && degrees == 0 && cover_failures_rainbow_free == 0, o.str()};
}

Outcome caccetta_haggkvist()
{
    auto ch = search_ch_counterexample(5);
    std::uint64_t t6_met = 0, t6_violations = 0;
    for (std::size_t n = 1; n <= 5; ++n) {
        auto r = verify({EnumerationKind::AllOrientedGraphs, n}, TheoremId::T6);
        t6_met += r.condition_met_count;
        t6_violations += r.violations();
    }
    std::ostringstream o;
    o << "n<=5: CH checked " << ch.instances_checked << ", met " << ch.condition_met_count << ", counterexamples "
      << ch.count(Conclusion::ConjectureCounterexample) << "; T6 met " << t6_met << ", violations " << t6_violations;
    return {ch.count(Conclusion::ConjectureCounterexample) == 0 && ch.counterexamples.empty() && t6_violations == 0,
        o.str()};
}

} // namespace

int main(int argc, char ** argv)
{
    bool large = false;
    for (int i = 1; i < argc; ++i)
        large |= std::string(argv[i]) == "--large";
    if (const char * env = std::getenv("RAINBOWTRI_ACCEPTANCE_LARGE"))
        large |= std::string(env) == "1";

    Suite suite;
    suite.run("AC9", "exceptional K4 fixtures", 1, fixture_validation);
    suite.run("AC1", "sharpness identities", 10, sharpness_identities);
    suite.run("AC2", "T1 and T2 exhaustive", 60, t1_t2_exhaustive);
    suite.run("AC3", "T3 exhaustive at n=4", 60, t3_exhaustive);
    suite.run("AC4", "T4 and T5 exhaustive", 60, [] { return t4_t5_exhaustive(5); });
    if (large)
        suite.run("AC4", "T4 and T5 exhaustive at n=6", 1800, [] { return t4_t5_exhaustive(6); });

    CorrespondenceTally tally;
    suite.run("AC5", "triangle correspondence", 120, [&] {
        tally = correspondence_run();
        std::ostringstream o;
        o << tally.instances << " digraphs (exhaustive n<=5, 10^4 each at n=8,10,12; " << tally.with_triangles
          << " with triangles): set mismatches " << tally.set_mismatches;
        return Outcome{tally.set_mismatches == 0 && tally.instances == [] {
            std::uint64_t s = 30000;
            for (std::size_t n = 1; n <= 5; ++n)
                s += oriented_graph_count(n);
            return s;
        }(), o.str()};
    });
    suite.run("AC6", "counting identities", 1, [&] {
        std::ostringstream o;
        o << tally.instances << " digraphs: e=a, c=sum omega+, sum d^c=a+sum omega+ mismatches "
          << tally.count_mismatches;
        return Outcome{tally.instances > 0 && tally.count_mismatches == 0, o.str()};
    });
    suite.run("AC7", "orientation pipeline", 60, orientation_pipeline);
    suite.run("AC7", "orientation head colors, unrestricted inputs", 60, orientation_head_colors_unrestricted);
    suite.run("AC8", "Caccetta-Haggkvist and T6 desk scale", 60, caccetta_haggkvist);

    std::cout << (suite.failures() == 0 ? "all acceptance criteria passed" : "acceptance FAILED") << std::endl;
    return suite.failures() == 0 ? 0 : 1;
}
