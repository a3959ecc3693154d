#pragma once

// Sharpness and exceptional constructions. Colors are 1-based.

#include <rainbowtri/colored_graph.hpp>
#include <rainbowtri/io.hpp>
#include <rainbowtri/oriented_graph.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rainbowtri {

/// K_n where edge {i, j}, i < j, gets color i + 1. No rainbow triangle, and
/// e + c = sum of color degrees = n(n+1)/2 - 1.
inline ColoredGraph sharp_complete_coloring(std::size_t n)
{
    if (n < 1)
        throw std::invalid_argument("sharp_complete_coloring needs n >= 1");
    std::vector<ColoredEdge> edges;
    edges.reserve(n * (n - 1) / 2);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            edges.push_back({i, j, Color{i} + 1});
    return ColoredGraph{n, std::move(edges)};
}

/// K_{ceil(n/2), floor(n/2)} with every edge a different color. The larger
/// side is 0..ceil(n/2)-1.
inline ColoredGraph rainbow_balanced_bipartite(std::size_t n)
{
    if (n < 1)
        throw std::invalid_argument("rainbow_balanced_bipartite needs n >= 1");
    auto left = static_cast<Vertex>((n + 1) / 2);
    std::vector<ColoredEdge> edges;
    Color next = 1;
    for (Vertex x = 0; x < left; ++x)
        for (auto y = left; y < n; ++y)
            edges.push_back({x, y, next++});
    return ColoredGraph{n, std::move(edges)};
}

/// Every arc goes from X = {0..n/2-1} to Y = {n/2..n-1}.
struct AllOneWay {};

using OrientationChoice = std::variant<AllOneWay, std::uint64_t>;

/// An orientation of K_{n/2,n/2} on sides X = 0..n/2-1 and Y = n/2..n-1.
/// A seed orients each edge by an independent fair coin.
inline OrientedGraph oriented_balanced_bipartite(std::size_t n, OrientationChoice choice = AllOneWay{})
{
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("oriented_balanced_bipartite needs an even n >= 2, got " + std::to_string(n));
    auto half = static_cast<Vertex>(n / 2);
    std::optional<std::mt19937_64> rng;
    if (auto seed = std::get_if<std::uint64_t>(&choice))
        rng.emplace(*seed);
    std::vector<Arc> arcs;
    arcs.reserve(half * half);
    for (Vertex x = 0; x < half; ++x)
        for (auto y = half; y < n; ++y) {
            if (rng && ((*rng)() >> 63) != 0)
                arcs.push_back({y, x});
            else
                arcs.push_back({x, y});
        }
    return OrientedGraph{n, std::move(arcs)};
}

/// K_4 colored {01:1, 02:1, 23:1, 03:2, 12:2, 13:2}: every color degree is 2
/// and no triangle is rainbow.
inline ColoredGraph k4_exception()
{
    return ColoredGraph{4, {{0, 1, 1}, {0, 2, 1}, {2, 3, 1}, {0, 3, 2}, {1, 2, 2}, {1, 3, 2}}};
}

/// K_4 minus {2,3}, colored {01:1, 02:1, 13:1, 12:2, 03:2}: every color
/// degree is 2 and neither triangle is rainbow.
inline ColoredGraph k4_minus_edge_exception()
{
    return ColoredGraph{4, {{0, 1, 1}, {0, 2, 1}, {1, 3, 1}, {1, 2, 2}, {0, 3, 2}}};
}

enum class Family { SharpComplete, RainbowBipartite, OrientedBalancedBipartite, K4Exception, K4MinusEdgeException };

struct GeneratorSpec {
    Family family;
    std::size_t n;
    std::optional<std::uint64_t> orientation_seed;
};

inline std::string_view to_string(Family f)
{
    switch (f) {
    case Family::SharpComplete: return "sharp-complete";
    case Family::RainbowBipartite: return "rainbow-bipartite";
    case Family::OrientedBalancedBipartite: return "oriented-bipartite";
    case Family::K4Exception: return "k4-exception";
    case Family::K4MinusEdgeException: return "k4-minus-edge";
    }
    throw std::logic_error("unknown family");
}

inline std::optional<Family> family_from_string(std::string_view s)
{
    for (auto f : {Family::SharpComplete, Family::RainbowBipartite, Family::OrientedBalancedBipartite,
             Family::K4Exception, Family::K4MinusEdgeException})
        if (to_string(f) == s)
            return f;
    return std::nullopt;
}

/// Throws std::invalid_argument when n does not suit the family.
inline AnyGraph generate(const GeneratorSpec & spec)
{
    switch (spec.family) {
    case Family::SharpComplete: return sharp_complete_coloring(spec.n);
    case Family::RainbowBipartite: return rainbow_balanced_bipartite(spec.n);
    case Family::OrientedBalancedBipartite:
        if (spec.orientation_seed)
            return oriented_balanced_bipartite(spec.n, *spec.orientation_seed);
        return oriented_balanced_bipartite(spec.n);
    case Family::K4Exception:
    case Family::K4MinusEdgeException:
        if (spec.n != 4)
            throw std::invalid_argument(std::string(to_string(spec.family)) + " exists only for n = 4");
        return spec.family == Family::K4Exception ? k4_exception() : k4_minus_edge_exception();
    }
    throw std::logic_error("unknown family");
}

} // namespace rainbowtri
