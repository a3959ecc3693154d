#pragma once

#include <rainbowtri/triangle.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace rainbowtri {

using Color = std::uint64_t;

/// An undirected edge {u, v} with its color. Stored with u < v.
struct ColoredEdge {
    Vertex u;
    Vertex v;
    Color color;

    friend auto operator<=>(const ColoredEdge &, const ColoredEdge &) = default;
};

/// One entry of a vertex's incidence list.
struct Incidence {
    Vertex neighbour;
    Color color;

    friend auto operator<=>(const Incidence &, const Incidence &) = default;
};

/**
 * Simple undirected graph on vertices 0..n-1 with a color on every edge.
 *
 * Immutable once built. Edges are kept sorted lexicographically by (u, v)
 * and each incidence list is sorted by neighbour, which is what the
 * triangle search and the reductions rely on.
 */
class ColoredGraph {
  public:
    ColoredGraph() = default;

    /// Throws std::invalid_argument on a loop, an out-of-range endpoint or a
    /// repeated pair. Endpoints may be given in either order.
    explicit ColoredGraph(std::size_t n, std::vector<ColoredEdge> edges = {}) :
        _n(n),
        _edges(std::move(edges)),
        _incidence(n)
    {
        for (auto & e : _edges) {
            if (e.u >= n || e.v >= n)
                throw std::invalid_argument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                    "} has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
            if (e.u == e.v)
                throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
            if (e.u > e.v)
                std::swap(e.u, e.v);
        }
        std::sort(_edges.begin(), _edges.end());
        for (std::size_t i = 1; i < _edges.size(); ++i)
            if (_edges[i].u == _edges[i - 1].u && _edges[i].v == _edges[i - 1].v)
                throw std::invalid_argument("repeated edge {" + std::to_string(_edges[i].u) + "," +
                    std::to_string(_edges[i].v) + "}");

        for (const auto & e : _edges) {
            _incidence[e.u].push_back({e.v, e.color});
            _incidence[e.v].push_back({e.u, e.color});
        }
        for (auto & list : _incidence)
            std::sort(list.begin(), list.end());
    }

    std::size_t vertex_count() const noexcept { return _n; }
    std::size_t edge_count() const noexcept { return _edges.size(); }

    std::span<const ColoredEdge> edges() const noexcept { return _edges; }

    std::span<const Incidence> incident(Vertex v) const
    {
        check_vertex(v);
        return _incidence[v];
    }

    std::size_t degree(Vertex v) const { return incident(v).size(); }

    std::optional<Color> color(Vertex u, Vertex v) const
    {
        auto list = incident(u);
        check_vertex(v);
        auto it = std::lower_bound(list.begin(), list.end(), v,
            [](const Incidence & i, Vertex x) { return i.neighbour < x; });
        if (it == list.end() || it->neighbour != v)
            return std::nullopt;
        return it->color;
    }

    bool adjacent(Vertex u, Vertex v) const { return color(u, v).has_value(); }

    void check_vertex(Vertex v) const
    {
        if (v >= _n)
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for graph on " +
                std::to_string(_n) + " vertices");
    }

    friend bool operator==(const ColoredGraph & a, const ColoredGraph & b)
    {
        return a._n == b._n && a._edges == b._edges;
    }

  private:
    std::size_t _n = 0;
    std::vector<ColoredEdge> _edges;
    std::vector<std::vector<Incidence>> _incidence;
};

/// Per-graph color statistics, index i holding vertex i.
struct ColorStats {
    std::size_t color_number = 0;
    std::vector<std::size_t> color_degrees;
    std::vector<std::size_t> saturated_degrees;

    friend bool operator==(const ColorStats &, const ColorStats &) = default;
};

/// Number of distinct colors on edges incident to v.
inline std::size_t color_degree(const ColoredGraph & g, Vertex v)
{
    auto list = g.incident(v);
    std::vector<Color> colors;
    colors.reserve(list.size());
    for (const auto & i : list)
        colors.push_back(i.color);
    std::sort(colors.begin(), colors.end());
    return static_cast<std::size_t>(std::unique(colors.begin(), colors.end()) - colors.begin());
}

inline std::size_t color_number(const ColoredGraph & g)
{
    std::vector<Color> colors;
    colors.reserve(g.edge_count());
    for (const auto & e : g.edges())
        colors.push_back(e.color);
    std::sort(colors.begin(), colors.end());
    return static_cast<std::size_t>(std::unique(colors.begin(), colors.end()) - colors.begin());
}

namespace detail {
    inline std::unordered_map<Color, std::size_t> color_multiplicities(const ColoredGraph & g)
    {
        std::unordered_map<Color, std::size_t> counts;
        for (const auto & e : g.edges())
            ++counts[e.color];
        return counts;
    }

    inline std::size_t saturated_degree(const ColoredGraph & g, Vertex v,
        const std::unordered_map<Color, std::size_t> & global)
    {
        std::map<Color, std::size_t> local;
        for (const auto & i : g.incident(v))
            ++local[i.color];
        std::size_t result = 0;
        for (const auto & [c, k] : local)
            if (global.at(c) == k)
                ++result;
        return result;
    }
} // namespace detail

/// Number of colors all of whose edges are incident to v.
inline std::size_t saturated_degree(const ColoredGraph & g, Vertex v)
{
    g.check_vertex(v);
    return detail::saturated_degree(g, v, detail::color_multiplicities(g));
}

inline ColorStats stats(const ColoredGraph & g)
{
    ColorStats s;
    s.color_number = color_number(g);
    auto global = detail::color_multiplicities(g);
    s.color_degrees.reserve(g.vertex_count());
    s.saturated_degrees.reserve(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        s.color_degrees.push_back(color_degree(g, v));
        s.saturated_degrees.push_back(detail::saturated_degree(g, v, global));
    }
    return s;
}

inline std::size_t color_degree_sum(const ColoredGraph & g)
{
    std::size_t sum = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        sum += color_degree(g, v);
    return sum;
}

inline std::size_t min_color_degree(const ColoredGraph & g)
{
    std::size_t best = SIZE_MAX;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        best = std::min(best, color_degree(g, v));
    return g.vertex_count() == 0 ? 0 : best;
}

namespace detail {
    // Calls f(u, v, w, C(uv), C(uw), C(vw)) for every triangle u < v < w, in
    // lexicographic order. Stops early when f returns false.
    template <typename F>
    void for_each_triangle(const ColoredGraph & g, F && f)
    {
        for (const auto & e : g.edges()) {
            auto at_u = g.incident(e.u);
            auto at_v = g.incident(e.v);
            auto i = std::upper_bound(at_u.begin(), at_u.end(), e.v,
                [](Vertex x, const Incidence & inc) { return x < inc.neighbour; });
            auto j = std::upper_bound(at_v.begin(), at_v.end(), e.v,
                [](Vertex x, const Incidence & inc) { return x < inc.neighbour; });
            while (i != at_u.end() && j != at_v.end()) {
                if (i->neighbour < j->neighbour)
                    ++i;
                else if (j->neighbour < i->neighbour)
                    ++j;
                else {
                    if (! f(e.u, e.v, i->neighbour, e.color, i->color, j->color))
                        return;
                    ++i;
                    ++j;
                }
            }
        }
    }
} // namespace detail

/// All triangles whose three edge colors are pairwise distinct.
inline TriangleSet enumerate_rainbow_triangles(const ColoredGraph & g)
{
    std::vector<Triangle> found;
    detail::for_each_triangle(g, [&](Vertex u, Vertex v, Vertex w, Color uv, Color uw, Color vw) {
        if (uv != uw && uv != vw && uw != vw)
            found.push_back({u, v, w});
        return true;
    });
    return TriangleSet{std::move(found)};
}

/// Lexicographically smallest rainbow triangle, if any.
inline std::optional<Triangle> first_rainbow_triangle(const ColoredGraph & g)
{
    std::optional<Triangle> found;
    detail::for_each_triangle(g, [&](Vertex u, Vertex v, Vertex w, Color uv, Color uw, Color vw) {
        if (uv != uw && uv != vw && uw != vw) {
            found = Triangle{u, v, w};
            return false;
        }
        return true;
    });
    return found;
}

/// All triangles of the underlying graph, ignoring colors.
inline TriangleSet enumerate_triangles(const ColoredGraph & g)
{
    std::vector<Triangle> found;
    detail::for_each_triangle(g, [&](Vertex u, Vertex v, Vertex w, Color, Color, Color) {
        found.push_back({u, v, w});
        return true;
    });
    return TriangleSet{std::move(found)};
}

/// Relabels colors 1, 2, ... in order of first appearance over the
/// lexicographically sorted edge list.
inline ColoredGraph canonicalize_colors(const ColoredGraph & g)
{
    std::unordered_map<Color, Color> relabel;
    std::vector<ColoredEdge> edges(g.edges().begin(), g.edges().end());
    for (auto & e : edges) {
        auto [it, inserted] = relabel.try_emplace(e.color, relabel.size() + 1);
        e.color = it->second;
    }
    return ColoredGraph{g.vertex_count(), std::move(edges)};
}

/// Copy of g without the edge {u, v}. Throws std::invalid_argument if absent.
inline ColoredGraph remove_edge(const ColoredGraph & g, Vertex u, Vertex v)
{
    if (! g.adjacent(u, v))
        throw std::invalid_argument("no edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    if (u > v)
        std::swap(u, v);
    std::vector<ColoredEdge> edges;
    edges.reserve(g.edge_count() - 1);
    for (const auto & e : g.edges())
        if (e.u != u || e.v != v)
            edges.push_back(e);
    return ColoredGraph{g.vertex_count(), std::move(edges)};
}

} // namespace rainbowtri
