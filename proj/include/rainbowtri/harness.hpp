#pragma once

#include <rainbowtri/colored_graph.hpp>
#include <rainbowtri/errors.hpp>
#include <rainbowtri/oriented_graph.hpp>
#include <rainbowtri/reductions.hpp>
#include <rainbowtri/theorems.hpp>

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace rainbowtri {

/// Largest n for which exhaustive enumeration is allowed.
struct EnumerationLimits {
    static constexpr std::size_t default_colored_cap = 4;
    static constexpr std::size_t default_oriented_cap = 5;
    static constexpr std::size_t large_oriented_cap = 6;

    std::size_t colored_cap = default_colored_cap;
    std::size_t oriented_cap = default_oriented_cap;

    /// Defaults, raised to 6 for oriented graphs when `allow_large` is set,
    /// and raised further (never lowered) by RAINBOWTRI_EXHAUSTIVE_CAP.
    static EnumerationLimits from_environment(bool allow_large = false)
    {
        EnumerationLimits limits;
        if (allow_large)
            limits.oriented_cap = large_oriented_cap;
        if (const char * env = std::getenv("RAINBOWTRI_EXHAUSTIVE_CAP")) {
            char * end = nullptr;
            auto cap = std::strtoull(env, &end, 10);
            if (end != env && *end == '\0') {
                limits.colored_cap = std::max<std::size_t>(limits.colored_cap, cap);
                limits.oriented_cap = std::max<std::size_t>(limits.oriented_cap, cap);
            }
        }
        return limits;
    }
};

inline std::vector<std::pair<Vertex, Vertex>> vertex_pairs(std::size_t n)
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(n * (n - (n > 0)) / 2);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    return pairs;
}

inline std::uint64_t bell_number(std::size_t m)
{
    // Sum over k of Stirling numbers of the second kind S(m, k).
    std::vector<std::uint64_t> row{1};
    for (std::size_t i = 1; i <= m; ++i) {
        std::vector<std::uint64_t> next(i + 1, 0);
        for (std::size_t k = 1; k <= i; ++k)
            next[k] = k * (k < row.size() ? row[k] : 0) + row[k - 1];
        row = std::move(next);
    }
    std::uint64_t sum = 0;
    for (auto s : row)
        sum += s;
    return sum;
}

inline std::uint64_t power(std::uint64_t base, std::size_t exponent)
{
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exponent; ++i)
        r *= base;
    return r;
}

inline std::uint64_t labeled_graph_count(std::size_t n) { return power(2, n * (n - (n > 0)) / 2); }

inline std::uint64_t oriented_graph_count(std::size_t n) { return power(3, n * (n - (n > 0)) / 2); }

/// Number of (graph, canonical coloring) pairs on n labeled vertices.
inline std::uint64_t canonical_coloring_count(std::size_t n)
{
    auto pairs = n * (n - (n > 0)) / 2;
    std::uint64_t total = 0, binom = 1;
    for (std::size_t m = 0; m <= pairs; ++m) {
        total += binom * bell_number(m);
        binom = binom * (pairs - m) / (m + 1);
    }
    return total;
}

/**
 * Calls f(graph) for every coloring of the given edge set.
 *
 * Canonical colorings are restricted growth strings over the edges in the
 * given order: each edge reuses a color already seen or takes the next new
 * one, so there are Bell(m) of them. Otherwise every map from edges to
 * 1..m is produced (m^m of them). Colors are 1-based.
 */
template <typename F>
void for_each_coloring(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edge_set, bool canonical, F && f)
{
    auto m = edge_set.size();
    std::vector<ColoredEdge> edges(m);
    for (std::size_t i = 0; i < m; ++i)
        edges[i] = {edge_set[i].first, edge_set[i].second, 0};

    std::vector<Color> highest(m + 1, 0);
    auto fill = [&](auto & self, std::size_t i) -> void {
        if (i == m) {
            f(ColoredGraph{n, edges});
            return;
        }
        Color limit = canonical ? highest[i] + 1 : static_cast<Color>(m);
        for (Color c = 1; c <= limit; ++c) {
            edges[i].color = c;
            highest[i + 1] = std::max(highest[i], c);
            self(self, i + 1);
        }
    };
    fill(fill, 0);
}

namespace detail {
    inline void check_cap(std::size_t n, std::size_t cap, const char * what)
    {
        if (n > cap)
            throw LimitExceeded(std::string("exhaustive ") + what + " enumeration is capped at n = " +
                std::to_string(cap) + ", requested n = " + std::to_string(n));
    }

    inline std::vector<std::pair<Vertex, Vertex>> edges_of_mask(
        const std::vector<std::pair<Vertex, Vertex>> & pairs, std::uint64_t mask)
    {
        std::vector<std::pair<Vertex, Vertex>> chosen;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((mask >> i) & 1)
                chosen.push_back(pairs[i]);
        return chosen;
    }

    template <typename F>
    void colored_graphs_in_masks(std::size_t n, bool canonical, std::uint64_t first, std::uint64_t stride, F && f)
    {
        auto pairs = vertex_pairs(n);
        auto total = labeled_graph_count(n);
        for (std::uint64_t mask = first; mask < total; mask += stride) {
            auto chosen = edges_of_mask(pairs, mask);
            for_each_coloring(n, chosen, canonical, f);
        }
    }
} // namespace detail

/// Streams every labeled simple graph on n vertices with all of its
/// colorings (canonical by default). Throws LimitExceeded above the cap.
template <typename F>
void enumerate_colored_graphs(std::size_t n, F && f, const EnumerationLimits & limits = {}, bool canonical = true)
{
    detail::check_cap(n, limits.colored_cap, "colored-graph");
    detail::colored_graphs_in_masks(n, canonical, 0, 1, f);
}

/// The index-th labeled oriented graph on n vertices: digit k of index in
/// base 3 describes the k-th vertex pair {u < v}, 0 absent, 1 u->v, 2 v->u.
inline OrientedGraph oriented_graph_from_index(std::size_t n, std::uint64_t index)
{
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            switch (index % 3) {
            case 1: arcs.push_back({u, v}); break;
            case 2: arcs.push_back({v, u}); break;
            default: break;
            }
            index /= 3;
        }
    return OrientedGraph{n, std::move(arcs)};
}

/// Streams all 3^C(n,2) labeled oriented graphs on n vertices.
template <typename F>
void enumerate_oriented_graphs(std::size_t n, F && f, const EnumerationLimits & limits = {})
{
    detail::check_cap(n, limits.oriented_cap, "oriented-graph");
    auto total = oriented_graph_count(n);
    for (std::uint64_t i = 0; i < total; ++i)
        f(oriented_graph_from_index(n, i));
}

// Random instances. Each sample is drawn from its own generator seeded from
// (seed, index), so a run can be split across threads without changing it.

inline std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t index)
{
    // splitmix64 finaliser
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return std::mt19937_64{z ^ (z >> 31)};
}

namespace detail {
    inline std::uint64_t below(std::mt19937_64 & rng, std::uint64_t k) { return k == 0 ? 0 : rng() % k; }

    inline double unit(std::mt19937_64 & rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
} // namespace detail

/// Edge density uniform in [0, 1), palette size uniform in 1..C(n,2), each
/// present edge colored uniformly from the palette.
inline ColoredGraph random_colored_graph(std::size_t n, std::mt19937_64 & rng)
{
    auto pairs = vertex_pairs(n);
    double density = detail::unit(rng);
    auto palette = 1 + detail::below(rng, std::max<std::size_t>(pairs.size(), 1));
    std::vector<ColoredEdge> edges;
    for (auto [u, v] : pairs)
        if (detail::unit(rng) < density)
            edges.push_back({u, v, 1 + detail::below(rng, palette)});
    return ColoredGraph{n, std::move(edges)};
}

/**
 * Random colored graph with no rainbow triangle.
 *
 * A complete graph is colored by substitution: split the vertices into
 * k >= 2 nonempty blocks, color all edges between two blocks with one of two
 * colors (a single color when k = 2), and recurse into each block. A
 * triangle then meets at most two blocks' worth of inter-block colors, or
 * repeats the color of a block pair, or lies inside one block. Edges are
 * then kept independently with a random density.
 */
inline ColoredGraph random_rainbow_free_colored_graph(std::size_t n, std::mt19937_64 & rng)
{
    auto palette = 1 + detail::below(rng, std::max<std::size_t>(n, 2));
    double density = detail::unit(rng);
    std::vector<ColoredEdge> edges;

    auto split = [&](auto & self, std::vector<Vertex> part) -> void {
        if (part.size() < 2)
            return;
        std::shuffle(part.begin(), part.end(), rng);
        auto k = 2 + detail::below(rng, part.size() - 1);
        std::vector<std::vector<Vertex>> blocks(k);
        for (std::size_t i = 0; i < part.size(); ++i)
            blocks[i < k ? i : detail::below(rng, k)].push_back(part[i]);
        Color first = 1 + detail::below(rng, palette);
        Color second = 1 + detail::below(rng, palette);
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = a + 1; b < k; ++b) {
                Color c = (k == 2 || detail::below(rng, 2) == 0) ? first : second;
                for (auto x : blocks[a])
                    for (auto y : blocks[b])
                        edges.push_back({x, y, c});
            }
        for (auto & block : blocks)
            self(self, std::move(block));
    };
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v)
        all[v] = v;
    split(split, std::move(all));

    std::vector<ColoredEdge> kept;
    for (const auto & e : edges)
        if (detail::unit(rng) < density)
            kept.push_back(e);
    return ColoredGraph{n, std::move(kept)};
}

/// Arc density uniform in [0, 1), each present pair oriented by a fair coin.
inline OrientedGraph random_oriented_graph(std::size_t n, std::mt19937_64 & rng)
{
    double density = detail::unit(rng);
    std::vector<Arc> arcs;
    for (auto [u, v] : vertex_pairs(n))
        if (detail::unit(rng) < density) {
            if (detail::below(rng, 2) == 0)
                arcs.push_back({u, v});
            else
                arcs.push_back({v, u});
        }
    return OrientedGraph{n, std::move(arcs)};
}

/// Outcome of reduce-then-orient on one colored graph.
struct PipelineCheck {
    bool color_degrees_preserved = true;
    /// For every arc (u, v), no other edge at v carries C(uv).
    bool head_colors_unique = true;
    /// d-(v) + omega+(v) >= d^c(v) at every vertex.
    bool out_components_cover_colors = true;
    bool source_rainbow_free = true;
};

inline PipelineCheck check_orientation_pipeline(const ColoredGraph & g, const TieBreak & tie_break = lower_to_higher)
{
    PipelineCheck result;
    auto reduced = color_degree_preserving_reduction(g);
    auto oriented = orient(reduced, tie_break);
    const auto & d = oriented.digraph;
    result.source_rainbow_free = ! first_rainbow_triangle(g).has_value();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto dc = color_degree(g, v);
        if (color_degree(reduced, v) != dc)
            result.color_degrees_preserved = false;
        if (d.in_degree(v) + out_component_number(d, v) < dc)
            result.out_components_cover_colors = false;
    }
    for (const auto & a : d.arcs()) {
        auto c = *reduced.color(a.tail, a.head);
        for (const auto & inc : reduced.incident(a.head))
            if (inc.neighbour != a.tail && inc.color == c)
                result.head_colors_unique = false;
    }
    return result;
}

enum class EnumerationKind { AllColoredGraphs, ColoringsOfFixedGraph, AllOrientedGraphs, RandomColored, RandomOriented };

inline bool is_colored_kind(EnumerationKind k)
{
    return k == EnumerationKind::AllColoredGraphs || k == EnumerationKind::ColoringsOfFixedGraph ||
        k == EnumerationKind::RandomColored;
}

struct EnumerationSpec {
    EnumerationKind kind = EnumerationKind::AllOrientedGraphs;
    std::size_t n = 0;
    bool canonical_colors = true;
    std::uint64_t sample_count = 0;
    std::uint64_t seed = 0;
    /// Required for ColoringsOfFixedGraph; its colors are ignored.
    std::optional<ColoredGraph> fixed_graph;
    unsigned threads = 1;
};

struct VerificationReport {
    /// Counterexample instances kept per report; the tally still counts all.
    static constexpr std::size_t max_stored_counterexamples = 100;

    TheoremId theorem = TheoremId::T1;
    std::string instance_class;
    std::uint64_t instances_checked = 0;
    std::uint64_t condition_met_count = 0;
    std::map<Conclusion, std::uint64_t> verdict_tally;
    std::vector<std::string> counterexamples;
    std::chrono::duration<double> wall_time{0};

    void record(const TheoremVerdict & v)
    {
        ++instances_checked;
        if (v.condition_met)
            ++condition_met_count;
        ++verdict_tally[v.conclusion];
        if ((v.conclusion == Conclusion::Violation || v.conclusion == Conclusion::ConjectureCounterexample) &&
            counterexamples.size() < max_stored_counterexamples)
            counterexamples.push_back(v.witness.instance);
    }

    /// Associative; counterexamples are re-sorted and truncated.
    void merge(const VerificationReport & other)
    {
        instances_checked += other.instances_checked;
        condition_met_count += other.condition_met_count;
        for (const auto & [c, k] : other.verdict_tally)
            verdict_tally[c] += k;
        counterexamples.insert(counterexamples.end(), other.counterexamples.begin(), other.counterexamples.end());
        std::sort(counterexamples.begin(), counterexamples.end());
        if (counterexamples.size() > max_stored_counterexamples)
            counterexamples.resize(max_stored_counterexamples);
        wall_time += other.wall_time;
    }

    std::uint64_t count(Conclusion c) const
    {
        auto it = verdict_tally.find(c);
        return it == verdict_tally.end() ? 0 : it->second;
    }

    std::uint64_t violations() const { return count(Conclusion::Violation); }

    /// Equal in everything but wall time.
    bool same_outcome(const VerificationReport & o) const
    {
        return theorem == o.theorem && instance_class == o.instance_class &&
            instances_checked == o.instances_checked && condition_met_count == o.condition_met_count &&
            verdict_tally == o.verdict_tally && counterexamples == o.counterexamples;
    }
};

inline std::string to_text(const VerificationReport & r)
{
    std::ostringstream out;
    out << "theorem " << to_string(r.theorem) << '\n';
    out << "class " << r.instance_class << '\n';
    out << "instances " << r.instances_checked << '\n';
    out << "condition-met " << r.condition_met_count << '\n';
    for (const auto & [c, k] : r.verdict_tally)
        out << "verdict " << to_string(c) << ' ' << k << '\n';
    out << "counterexamples " << r.count(Conclusion::Violation) + r.count(Conclusion::ConjectureCounterexample)
        << '\n';
    for (const auto & instance : r.counterexamples)
        out << "---\n" << instance;
    out << "wall-time " << r.wall_time.count() << "s\n";
    return out.str();
}

/// One JSON object per line, one line per verdict class that occurred.
inline std::string to_records(const VerificationReport & r)
{
    std::ostringstream out;
    for (const auto & [c, k] : r.verdict_tally) {
        nlohmann::json record{
            {"theorem", to_string(r.theorem)},
            {"class", r.instance_class},
            {"verdict", to_string(c)},
            {"count", k},
            {"instances", r.instances_checked},
            {"condition_met", r.condition_met_count},
        };
        if (c == Conclusion::Violation || c == Conclusion::ConjectureCounterexample)
            record["examples"] = r.counterexamples;
        out << record.dump() << '\n';
    }
    return out.str();
}

namespace detail {
    inline std::string describe(const EnumerationSpec & spec)
    {
        std::ostringstream out;
        switch (spec.kind) {
        case EnumerationKind::AllColoredGraphs:
            out << "all-colored n=" << spec.n << (spec.canonical_colors ? " canonical" : " all-colorings");
            break;
        case EnumerationKind::ColoringsOfFixedGraph:
            out << "colorings-of-fixed n=" << spec.fixed_graph->vertex_count()
                << " m=" << spec.fixed_graph->edge_count() << (spec.canonical_colors ? " canonical" : " all-colorings");
            break;
        case EnumerationKind::AllOrientedGraphs: out << "all-oriented n=" << spec.n; break;
        case EnumerationKind::RandomColored:
            out << "random-colored n=" << spec.n << " samples=" << spec.sample_count << " seed=" << spec.seed;
            break;
        case EnumerationKind::RandomOriented:
            out << "random-oriented n=" << spec.n << " samples=" << spec.sample_count << " seed=" << spec.seed;
            break;
        }
        return out.str();
    }

    // Runs chunk `part` of `parts` of the instance stream.
    inline void verify_chunk(const EnumerationSpec & spec, TheoremId theorem, unsigned part, unsigned parts,
        VerificationReport & report)
    {
        auto colored = [&](const ColoredGraph & g) { report.record(check(theorem, g)); };
        auto oriented = [&](const OrientedGraph & d) { report.record(check(theorem, d)); };
        switch (spec.kind) {
        case EnumerationKind::AllColoredGraphs:
            colored_graphs_in_masks(spec.n, spec.canonical_colors, part, parts, colored);
            break;
        case EnumerationKind::ColoringsOfFixedGraph:
            if (part == 0) {
                std::vector<std::pair<Vertex, Vertex>> edge_set;
                for (const auto & e : spec.fixed_graph->edges())
                    edge_set.emplace_back(e.u, e.v);
                for_each_coloring(spec.fixed_graph->vertex_count(), edge_set, spec.canonical_colors, colored);
            }
            break;
        case EnumerationKind::AllOrientedGraphs: {
            auto total = oriented_graph_count(spec.n);
            auto begin = total / parts * part, end = part + 1 == parts ? total : total / parts * (part + 1);
            for (auto i = begin; i < end; ++i)
                oriented(oriented_graph_from_index(spec.n, i));
            break;
        }
        case EnumerationKind::RandomColored:
        case EnumerationKind::RandomOriented: {
            auto total = spec.sample_count;
            auto begin = total / parts * part, end = part + 1 == parts ? total : total / parts * (part + 1);
            for (auto i = begin; i < end; ++i) {
                auto rng = instance_rng(spec.seed, i);
                if (spec.kind == EnumerationKind::RandomColored)
                    colored(random_colored_graph(spec.n, rng));
                else
                    oriented(random_oriented_graph(spec.n, rng));
            }
            break;
        }
        }
    }
} // namespace detail

/**
 * Runs the checker for `theorem` on every instance of `spec`.
 *
 * Throws std::invalid_argument when the theorem and the instance kind refer
 * to different graph types, and LimitExceeded when an exhaustive kind is
 * above its cap.
 */
inline VerificationReport verify(const EnumerationSpec & spec, TheoremId theorem, const EnumerationLimits & limits = {})
{
    if (is_colored_kind(spec.kind) != is_colored_theorem(theorem))
        throw std::invalid_argument(std::string(to_string(theorem)) + " cannot be checked on " +
            (is_colored_kind(spec.kind) ? "colored" : "oriented") + " instances");
    if (spec.kind == EnumerationKind::ColoringsOfFixedGraph && ! spec.fixed_graph)
        throw std::invalid_argument("ColoringsOfFixedGraph needs a fixed graph");
    if (spec.kind == EnumerationKind::AllColoredGraphs)
        detail::check_cap(spec.n, limits.colored_cap, "colored-graph");
    if (spec.kind == EnumerationKind::AllOrientedGraphs)
        detail::check_cap(spec.n, limits.oriented_cap, "oriented-graph");

    auto started = std::chrono::steady_clock::now();
    unsigned parts = std::max(1u, spec.threads);
    std::vector<VerificationReport> partial(parts);
    for (auto & p : partial)
        p.theorem = theorem;
    if (parts == 1)
        detail::verify_chunk(spec, theorem, 0, 1, partial[0]);
    else {
        std::vector<std::thread> workers;
        for (unsigned i = 0; i < parts; ++i)
            workers.emplace_back([&, i] { detail::verify_chunk(spec, theorem, i, parts, partial[i]); });
        for (auto & w : workers)
            w.join();
    }

    VerificationReport report;
    report.theorem = theorem;
    report.instance_class = detail::describe(spec);
    for (const auto & p : partial)
        report.merge(p);
    report.wall_time = std::chrono::steady_clock::now() - started;
    return report;
}

/// check_ch over every oriented graph on 1..n_max vertices.
inline VerificationReport search_ch_counterexample(std::size_t n_max, const EnumerationLimits & limits = {},
    unsigned threads = 1)
{
    detail::check_cap(n_max, limits.oriented_cap, "oriented-graph");
    auto started = std::chrono::steady_clock::now();
    VerificationReport report;
    report.theorem = TheoremId::CH;
    report.instance_class = "all-oriented n<=" + std::to_string(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        EnumerationSpec spec;
        spec.kind = EnumerationKind::AllOrientedGraphs;
        spec.n = n;
        spec.threads = threads;
        report.merge(verify(spec, TheoremId::CH, limits));
    }
    report.wall_time = std::chrono::steady_clock::now() - started;
    return report;
}

} // namespace rainbowtri
