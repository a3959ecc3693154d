#pragma once

#include <rainbowtri/triangle.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rainbowtri {

/// The arc tail -> head.
struct Arc {
    Vertex tail;
    Vertex head;

    friend auto operator<=>(const Arc &, const Arc &) = default;
};

/**
 * Digraph on 0..n-1 with no loops and at most one arc per vertex pair.
 *
 * Arcs are kept sorted by (tail, head); in- and out-neighbour lists are
 * sorted ascending.
 */
class OrientedGraph {
  public:
    OrientedGraph() = default;

    /// Throws std::invalid_argument on a loop, an out-of-range endpoint, a
    /// repeated arc or a pair of opposite arcs.
    explicit OrientedGraph(std::size_t n, std::vector<Arc> arcs = {}) :
        _n(n),
        _arcs(std::move(arcs)),
        _out(n),
        _in(n)
    {
        for (const auto & a : _arcs) {
            if (a.tail >= n || a.head >= n)
                throw std::invalid_argument("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                    ") has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
            if (a.tail == a.head)
                throw std::invalid_argument("self-loop at vertex " + std::to_string(a.tail));
        }
        std::sort(_arcs.begin(), _arcs.end());
        for (std::size_t i = 1; i < _arcs.size(); ++i)
            if (_arcs[i] == _arcs[i - 1])
                throw std::invalid_argument("repeated arc (" + std::to_string(_arcs[i].tail) + "," +
                    std::to_string(_arcs[i].head) + ")");

        for (const auto & a : _arcs) {
            _out[a.tail].push_back(a.head);
            _in[a.head].push_back(a.tail);
        }
        // _arcs is sorted by tail then head, so _out lists are already sorted.
        for (auto & list : _in)
            std::sort(list.begin(), list.end());

        for (const auto & a : _arcs)
            if (has_arc(a.head, a.tail))
                throw std::invalid_argument("opposite arcs between " + std::to_string(a.tail) + " and " +
                    std::to_string(a.head));
    }

    std::size_t vertex_count() const noexcept { return _n; }
    std::size_t arc_count() const noexcept { return _arcs.size(); }

    std::span<const Arc> arcs() const noexcept { return _arcs; }

    std::span<const Vertex> out_neighbours(Vertex v) const
    {
        check_vertex(v);
        return _out[v];
    }

    std::span<const Vertex> in_neighbours(Vertex v) const
    {
        check_vertex(v);
        return _in[v];
    }

    std::size_t out_degree(Vertex v) const { return out_neighbours(v).size(); }
    std::size_t in_degree(Vertex v) const { return in_neighbours(v).size(); }

    bool has_arc(Vertex tail, Vertex head) const
    {
        auto list = out_neighbours(tail);
        return std::binary_search(list.begin(), list.end(), head);
    }

    bool adjacent(Vertex u, Vertex v) const { return has_arc(u, v) || has_arc(v, u); }

    void check_vertex(Vertex v) const
    {
        if (v >= _n)
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for digraph on " +
                std::to_string(_n) + " vertices");
    }

    friend bool operator==(const OrientedGraph & a, const OrientedGraph & b)
    {
        return a._n == b._n && a._arcs == b._arcs;
    }

  private:
    std::size_t _n = 0;
    std::vector<Arc> _arcs;
    std::vector<std::vector<Vertex>> _out;
    std::vector<std::vector<Vertex>> _in;
};

struct DegreeProfile {
    std::vector<std::size_t> in_degrees;
    std::vector<std::size_t> out_degrees;
    std::vector<std::size_t> out_component_numbers;

    friend bool operator==(const DegreeProfile &, const DegreeProfile &) = default;
};

/**
 * Weak components of D[N+(v)], each sorted ascending, ordered by smallest
 * member. Two out-neighbours are joined when an arc in either direction
 * connects them.
 */
inline std::vector<std::vector<Vertex>> out_components(const OrientedGraph & d, Vertex v)
{
    auto heads = d.out_neighbours(v);
    std::vector<std::size_t> parent(heads.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < heads.size(); ++i)
        for (std::size_t j = i + 1; j < heads.size(); ++j)
            if (d.adjacent(heads[i], heads[j])) {
                auto a = find(i), b = find(j);
                if (a != b)
                    parent[std::max(a, b)] = std::min(a, b);
            }

    // Roots are the smallest index in their class, and heads is sorted, so
    // visiting in index order yields components ordered by smallest member.
    std::vector<std::vector<Vertex>> components;
    std::vector<std::size_t> slot(heads.size(), SIZE_MAX);
    for (std::size_t i = 0; i < heads.size(); ++i) {
        auto r = find(i);
        if (slot[r] == SIZE_MAX) {
            slot[r] = components.size();
            components.emplace_back();
        }
        components[slot[r]].push_back(heads[i]);
    }
    return components;
}

/// Number of weak components of the subdigraph induced by v's out-neighbours.
inline std::size_t out_component_number(const OrientedGraph & d, Vertex v)
{
    auto heads = d.out_neighbours(v);
    std::vector<std::size_t> parent(heads.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t components = heads.size();
    for (std::size_t i = 0; i < heads.size(); ++i)
        for (std::size_t j = i + 1; j < heads.size(); ++j)
            if (d.adjacent(heads[i], heads[j])) {
                auto a = find(i), b = find(j);
                if (a != b) {
                    parent[a] = b;
                    --components;
                }
            }
    return components;
}

inline DegreeProfile degree_profile(const OrientedGraph & d)
{
    DegreeProfile p;
    auto n = d.vertex_count();
    p.in_degrees.reserve(n);
    p.out_degrees.reserve(n);
    p.out_component_numbers.reserve(n);
    for (Vertex v = 0; v < n; ++v) {
        p.in_degrees.push_back(d.in_degree(v));
        p.out_degrees.push_back(d.out_degree(v));
        p.out_component_numbers.push_back(out_component_number(d, v));
    }
    return p;
}

/// Sum over v of omega+(v).
inline std::size_t out_component_sum(const OrientedGraph & d)
{
    std::size_t sum = 0;
    for (Vertex v = 0; v < d.vertex_count(); ++v)
        sum += out_component_number(d, v);
    return sum;
}

/// D[S] reindexed densely; `original[i]` is the id in D of vertex i.
struct InducedSubdigraph {
    OrientedGraph graph;
    std::vector<Vertex> original;
};

/// Subdigraph induced by S. Duplicates in S are ignored; new ids follow the
/// ascending order of the original ids.
inline InducedSubdigraph induced_subdigraph(const OrientedGraph & d, std::span<const Vertex> subset)
{
    std::vector<Vertex> keep(subset.begin(), subset.end());
    for (auto v : keep)
        d.check_vertex(v);
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

    std::vector<Vertex> index(d.vertex_count(), static_cast<Vertex>(-1));
    for (std::size_t i = 0; i < keep.size(); ++i)
        index[keep[i]] = static_cast<Vertex>(i);

    std::vector<Arc> arcs;
    for (const auto & a : d.arcs())
        if (index[a.tail] != static_cast<Vertex>(-1) && index[a.head] != static_cast<Vertex>(-1))
            arcs.push_back({index[a.tail], index[a.head]});
    return {OrientedGraph{keep.size(), std::move(arcs)}, std::move(keep)};
}

namespace detail {
    // Calls f(triangle) for each directed 3-cycle, grouped by smallest vertex
    // ascending. Stops early when f returns false.
    template <typename F>
    void for_each_directed_triangle(const OrientedGraph & d, F && f)
    {
        for (Vertex u = 0; u < d.vertex_count(); ++u)
            for (auto v : d.out_neighbours(u)) {
                if (v < u)
                    continue;
                for (auto w : d.out_neighbours(v))
                    if (w > u && d.has_arc(w, u))
                        if (! f(make_triangle(u, v, w)))
                            return;
            }
    }
} // namespace detail

/// All vertex triples inducing a directed 3-cycle.
inline TriangleSet enumerate_directed_triangles(const OrientedGraph & d)
{
    std::vector<Triangle> found;
    detail::for_each_directed_triangle(d, [&](const Triangle & t) {
        found.push_back(t);
        return true;
    });
    return TriangleSet{std::move(found)};
}

/// Lexicographically smallest directed triangle, if any.
inline std::optional<Triangle> first_directed_triangle(const OrientedGraph & d)
{
    std::optional<Triangle> best;
    std::optional<Vertex> bucket;
    detail::for_each_directed_triangle(d, [&](const Triangle & t) {
        if (bucket && *bucket != t[0])
            return false;
        bucket = t[0];
        if (! best || t < *best)
            best = t;
        return true;
    });
    return best;
}

} // namespace rainbowtri
