#pragma once

#include <rainbowtri/colored_graph.hpp>
#include <rainbowtri/io.hpp>
#include <rainbowtri/oriented_graph.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rainbowtri {

/**
 * Statements that can be checked on an instance.
 *
 *  - T1:   e(G) + c(G) >= n(n+1)/2 forces a rainbow triangle.
 *  - T2:   sum of color degrees >= n(n+1)/2 forces a rainbow triangle.
 *  - Cor1: minimum color degree >= (n+1)/2 forces a rainbow triangle.
 *  - T3:   minimum color degree >= n/2 and no rainbow triangle forces
 *          G = K_{n/2,n/2}, or G = K_4 or K_4 - e when n = 4.
 *  - T4:   a(D) + sum of omega+ >= n(n+1)/2 forces a directed triangle.
 *  - T5:   d-(v) + omega+(v) >= n/2 everywhere forces a directed triangle
 *          or an orientation of K_{n/2,n/2}.
 *  - T6:   minimum in-degree >= (3 - sqrt 7) n forces a directed triangle.
 *  - CH:   minimum in-degree >= n/3 forces a directed triangle (open in
 *          general; a failure is reported, not treated as a bug).
 */
enum class TheoremId { T1, T2, Cor1, T3, T4, T5, T6, CH };

inline constexpr std::array all_theorems{TheoremId::T1, TheoremId::T2, TheoremId::Cor1, TheoremId::T3,
    TheoremId::T4, TheoremId::T5, TheoremId::T6, TheoremId::CH};

enum class Conclusion {
    NotApplicable,
    HasRainbow,
    HasDirectedTriangle,
    BalancedCompleteBipartite,
    K4Exception,
    K4MinusEdgeException,
    OrientationOfBalancedBipartite,
    Violation,
    ConjectureCounterexample,
};

inline constexpr std::array all_conclusions{Conclusion::NotApplicable, Conclusion::HasRainbow,
    Conclusion::HasDirectedTriangle, Conclusion::BalancedCompleteBipartite, Conclusion::K4Exception,
    Conclusion::K4MinusEdgeException, Conclusion::OrientationOfBalancedBipartite, Conclusion::Violation,
    Conclusion::ConjectureCounterexample};

inline std::string_view to_string(TheoremId t)
{
    switch (t) {
    case TheoremId::T1: return "T1";
    case TheoremId::T2: return "T2";
    case TheoremId::Cor1: return "COR1";
    case TheoremId::T3: return "T3";
    case TheoremId::T4: return "T4";
    case TheoremId::T5: return "T5";
    case TheoremId::T6: return "T6";
    case TheoremId::CH: return "CH";
    }
    throw std::logic_error("unknown theorem id");
}

/// Case-insensitive; accepts "t1", "COR1", "ch" and so on.
inline std::optional<TheoremId> theorem_from_string(std::string_view s)
{
    std::string upper(s);
    for (auto & ch : upper)
        if (ch >= 'a' && ch <= 'z')
            ch = static_cast<char>(ch - 'a' + 'A');
    for (auto t : all_theorems)
        if (to_string(t) == upper)
            return t;
    return std::nullopt;
}

inline std::string_view to_string(Conclusion c)
{
    switch (c) {
    case Conclusion::NotApplicable: return "NotApplicable";
    case Conclusion::HasRainbow: return "HasRainbow";
    case Conclusion::HasDirectedTriangle: return "HasDirectedTriangle";
    case Conclusion::BalancedCompleteBipartite: return "BalancedCompleteBipartite";
    case Conclusion::K4Exception: return "K4Exception";
    case Conclusion::K4MinusEdgeException: return "K4MinusEdgeException";
    case Conclusion::OrientationOfBalancedBipartite: return "OrientationOfBalancedBipartite";
    case Conclusion::Violation: return "Violation";
    case Conclusion::ConjectureCounterexample: return "ConjectureCounterexample";
    }
    throw std::logic_error("unknown conclusion");
}

/// True for the statements about colored graphs, false for oriented ones.
inline bool is_colored_theorem(TheoremId t)
{
    return t == TheoremId::T1 || t == TheoremId::T2 || t == TheoremId::Cor1 || t == TheoremId::T3;
}

struct Bipartition {
    std::vector<Vertex> left;
    std::vector<Vertex> right;

    friend bool operator==(const Bipartition &, const Bipartition &) = default;
};

struct Witness {
    std::optional<Triangle> triangle;
    std::optional<Bipartition> bipartition;
    /// Serialized instance; set for Violation and ConjectureCounterexample.
    std::string instance;
};

struct TheoremVerdict {
    TheoremId theorem;
    bool condition_met = false;
    Conclusion conclusion = Conclusion::NotApplicable;
    Witness witness;
};

namespace detail {
    inline TheoremVerdict not_met(TheoremId t) { return {t, false, Conclusion::NotApplicable, {}}; }

    template <typename Graph>
    TheoremVerdict failed(TheoremId t, const Graph & g, Conclusion c = Conclusion::Violation)
    {
        TheoremVerdict v{t, true, c, {}};
        v.witness.instance = serialize(g);
        return v;
    }

    inline TheoremVerdict rainbow_or_violation(TheoremId t, const ColoredGraph & g)
    {
        if (auto tri = first_rainbow_triangle(g)) {
            TheoremVerdict v{t, true, Conclusion::HasRainbow, {}};
            v.witness.triangle = tri;
            return v;
        }
        return failed(t, g);
    }

    inline TheoremVerdict directed_or(TheoremId t, const OrientedGraph & d, Conclusion otherwise)
    {
        if (auto tri = first_directed_triangle(d)) {
            TheoremVerdict v{t, true, Conclusion::HasDirectedTriangle, {}};
            v.witness.triangle = tri;
            return v;
        }
        return failed(t, d, otherwise);
    }

    inline std::uint64_t triangular(std::uint64_t n) { return n * (n + 1) / 2; }

    // Two-colors the graph given by `adjacent` and succeeds when it is
    // K_{n/2,n/2}: bipartite with both sides of size n/2 and n^2/4 edges.
    template <typename Adjacent>
    std::optional<Bipartition> balanced_complete_bipartition(std::size_t n, std::size_t edges, Adjacent && adjacent)
    {
        if (n % 2 != 0 || edges != (n / 2) * (n / 2))
            return std::nullopt;
        std::vector<int> side(n, -1);
        std::vector<Vertex> queue;
        for (Vertex s = 0; s < n; ++s) {
            if (side[s] != -1)
                continue;
            side[s] = 0;
            queue.assign(1, s);
            for (std::size_t head = 0; head < queue.size(); ++head) {
                Vertex x = queue[head];
                for (Vertex y = 0; y < n; ++y) {
                    if (y == x || ! adjacent(x, y))
                        continue;
                    if (side[y] == -1) {
                        side[y] = 1 - side[x];
                        queue.push_back(y);
                    }
                    else if (side[y] == side[x])
                        return std::nullopt;
                }
            }
        }
        Bipartition b;
        for (Vertex v = 0; v < n; ++v)
            (side[v] == 0 ? b.left : b.right).push_back(v);
        if (b.left.size() != n / 2)
            return std::nullopt;
        return b;
    }

    inline std::size_t min_in_degree(const OrientedGraph & d)
    {
        std::size_t best = SIZE_MAX;
        for (Vertex v = 0; v < d.vertex_count(); ++v)
            best = std::min(best, d.in_degree(v));
        return best;
    }
} // namespace detail

// The null graph (n = 0) meets every threshold vacuously, but is not a graph
// in the sense of the theorems; every checker reports NotApplicable for it.

inline TheoremVerdict check_t1(const ColoredGraph & g)
{
    auto n = g.vertex_count();
    if (n == 0 || g.edge_count() + color_number(g) < detail::triangular(n))
        return detail::not_met(TheoremId::T1);
    return detail::rainbow_or_violation(TheoremId::T1, g);
}

inline TheoremVerdict check_t2(const ColoredGraph & g)
{
    auto n = g.vertex_count();
    if (n == 0 || color_degree_sum(g) < detail::triangular(n))
        return detail::not_met(TheoremId::T2);
    return detail::rainbow_or_violation(TheoremId::T2, g);
}

inline TheoremVerdict check_cor1(const ColoredGraph & g)
{
    auto n = g.vertex_count();
    if (n == 0 || 2 * min_color_degree(g) < n + 1)
        return detail::not_met(TheoremId::Cor1);
    return detail::rainbow_or_violation(TheoremId::Cor1, g);
}

inline TheoremVerdict classify_t3(const ColoredGraph & g)
{
    auto n = g.vertex_count();
    if (n == 0 || 2 * min_color_degree(g) < n)
        return detail::not_met(TheoremId::T3);
    if (auto tri = first_rainbow_triangle(g)) {
        TheoremVerdict v{TheoremId::T3, true, Conclusion::HasRainbow, {}};
        v.witness.triangle = tri;
        return v;
    }
    if (auto b = detail::balanced_complete_bipartition(
            n, g.edge_count(), [&](Vertex x, Vertex y) { return g.adjacent(x, y); })) {
        TheoremVerdict v{TheoremId::T3, true, Conclusion::BalancedCompleteBipartite, {}};
        v.witness.bipartition = std::move(b);
        return v;
    }
    // On four vertices a simple graph with 6 edges is K_4, and one with 5 is K_4 - e.
    if (n == 4 && g.edge_count() == 6)
        return {TheoremId::T3, true, Conclusion::K4Exception, {}};
    if (n == 4 && g.edge_count() == 5)
        return {TheoremId::T3, true, Conclusion::K4MinusEdgeException, {}};
    return detail::failed(TheoremId::T3, g);
}

inline TheoremVerdict check_t4(const OrientedGraph & d)
{
    auto n = d.vertex_count();
    if (n == 0 || d.arc_count() + out_component_sum(d) < detail::triangular(n))
        return detail::not_met(TheoremId::T4);
    return detail::directed_or(TheoremId::T4, d, Conclusion::Violation);
}

inline TheoremVerdict classify_t5(const OrientedGraph & d)
{
    auto n = d.vertex_count();
    if (n == 0)
        return detail::not_met(TheoremId::T5);
    for (Vertex v = 0; v < n; ++v)
        if (2 * (d.in_degree(v) + out_component_number(d, v)) < n)
            return detail::not_met(TheoremId::T5);
    if (auto tri = first_directed_triangle(d)) {
        TheoremVerdict v{TheoremId::T5, true, Conclusion::HasDirectedTriangle, {}};
        v.witness.triangle = tri;
        return v;
    }
    if (auto b = detail::balanced_complete_bipartition(
            n, d.arc_count(), [&](Vertex x, Vertex y) { return d.adjacent(x, y); })) {
        TheoremVerdict v{TheoremId::T5, true, Conclusion::OrientationOfBalancedBipartite, {}};
        v.witness.bipartition = std::move(b);
        return v;
    }
    return detail::failed(TheoremId::T5, d);
}

/// True iff k >= (3 - sqrt 7) n, decided in integers: since 3n - k > 0 for
/// k < 3n, the test is (3n - k)^2 <= 7 n^2. Equality needs n = 0.
inline bool meets_t6_threshold(std::uint64_t min_in_degree, std::uint64_t n)
{
    if (min_in_degree >= 3 * n)
        return true;
    std::uint64_t gap = 3 * n - min_in_degree;
    return gap * gap <= 7 * n * n;
}

inline TheoremVerdict check_t6(const OrientedGraph & d)
{
    auto n = d.vertex_count();
    if (n == 0 || ! meets_t6_threshold(detail::min_in_degree(d), n))
        return detail::not_met(TheoremId::T6);
    return detail::directed_or(TheoremId::T6, d, Conclusion::Violation);
}

inline TheoremVerdict check_ch(const OrientedGraph & d)
{
    auto n = d.vertex_count();
    if (n == 0 || 3 * detail::min_in_degree(d) < n)
        return detail::not_met(TheoremId::CH);
    return detail::directed_or(TheoremId::CH, d, Conclusion::ConjectureCounterexample);
}

/// Dispatches to the checker for `t`. Throws std::invalid_argument when the
/// theorem is about the other kind of graph.
inline TheoremVerdict check(TheoremId t, const ColoredGraph & g)
{
    switch (t) {
    case TheoremId::T1: return check_t1(g);
    case TheoremId::T2: return check_t2(g);
    case TheoremId::Cor1: return check_cor1(g);
    case TheoremId::T3: return classify_t3(g);
    default: throw std::invalid_argument(std::string(to_string(t)) + " applies to oriented graphs");
    }
}

inline TheoremVerdict check(TheoremId t, const OrientedGraph & d)
{
    switch (t) {
    case TheoremId::T4: return check_t4(d);
    case TheoremId::T5: return classify_t5(d);
    case TheoremId::T6: return check_t6(d);
    case TheoremId::CH: return check_ch(d);
    default: throw std::invalid_argument(std::string(to_string(t)) + " applies to colored graphs");
    }
}

} // namespace rainbowtri
