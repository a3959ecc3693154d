#pragma once

#include <rainbowtri/colored_graph.hpp>
#include <rainbowtri/errors.hpp>
#include <rainbowtri/oriented_graph.hpp>

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace rainbowtri {

/// Which out-neighbour component of which tail a color was allocated for.
struct ColorOrigin {
    Vertex tail;
    std::size_t component;

    friend auto operator<=>(const ColorOrigin &, const ColorOrigin &) = default;
};

struct AssociatedColoring {
    ColoredGraph graph;
    std::map<Color, ColorOrigin> color_origin;
};

/**
 * Associated colored graph G(D): the underlying graph of D, where all arcs
 * from a tail v into one weak component of D[N+(v)] share a color and every
 * other pair of arcs gets distinct colors.
 *
 * Colors are 1, 2, ... allocated by tail ascending, then by component in
 * order of smallest head.
 */
inline AssociatedColoring associated_colored_graph(const OrientedGraph & d)
{
    AssociatedColoring result;
    std::vector<ColoredEdge> edges;
    edges.reserve(d.arc_count());
    Color next = 1;
    for (Vertex v = 0; v < d.vertex_count(); ++v) {
        auto components = out_components(d, v);
        for (std::size_t k = 0; k < components.size(); ++k) {
            for (auto h : components[k])
                edges.push_back({v, h, next});
            result.color_origin.emplace(next, ColorOrigin{v, k});
            ++next;
        }
    }
    result.graph = ColoredGraph{d.vertex_count(), std::move(edges)};
    return result;
}

struct TriangleCorrespondence {
    TriangleSet directed;
    TriangleSet rainbow;
};

/// Directed triangles of D next to the rainbow triangles of G(D). The two
/// sets are always equal.
inline TriangleCorrespondence triangle_correspondence(const OrientedGraph & d)
{
    return {enumerate_directed_triangles(d), enumerate_rainbow_triangles(associated_colored_graph(d).graph)};
}

namespace detail {
    class ColorCounts {
      public:
        explicit ColorCounts(const ColoredGraph & g) : _counts(g.vertex_count())
        {
            for (const auto & e : g.edges()) {
                ++_counts[e.u][e.color];
                ++_counts[e.v][e.color];
            }
        }

        std::size_t at(Vertex v, Color c) const
        {
            auto it = _counts[v].find(c);
            return it == _counts[v].end() ? 0 : it->second;
        }

        void remove(const ColoredEdge & e)
        {
            --_counts[e.u][e.color];
            --_counts[e.v][e.color];
        }

      private:
        std::vector<std::map<Color, std::size_t>> _counts;
    };
} // namespace detail

/**
 * Spanning subgraph with the same color degree at every vertex, in which no
 * edge's color recurs at both of its ends.
 *
 * Edges are scanned in lexicographic order and an edge is dropped when its
 * color appears on another edge at u and on another edge at v. Deleting an
 * edge only lowers multiplicities, so an edge kept earlier never becomes
 * deletable later; one pass therefore gives the same result as rescanning
 * from the start after every deletion.
 */
inline ColoredGraph color_degree_preserving_reduction(const ColoredGraph & g)
{
    detail::ColorCounts counts{g};
    std::vector<ColoredEdge> kept;
    kept.reserve(g.edge_count());
    for (const auto & e : g.edges()) {
        if (counts.at(e.u, e.color) >= 2 && counts.at(e.v, e.color) >= 2)
            counts.remove(e);
        else
            kept.push_back(e);
    }
    return ColoredGraph{g.vertex_count(), std::move(kept)};
}

/// Picks the direction of an edge {u, v} (u < v) whose color is unique at
/// both ends. Must return either (u, v) or (v, u).
using TieBreak = std::function<Arc(Vertex, Vertex)>;

inline Arc lower_to_higher(Vertex u, Vertex v) { return {u, v}; }

struct OrientationResult {
    OrientedGraph digraph;
    ColoredGraph source;
};

/// Thrown by orient() for an edge whose color recurs at both of its ends.
class UnreducedEdge : public PreconditionViolation {
  public:
    explicit UnreducedEdge(const ColoredEdge & e) :
        PreconditionViolation("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} with color " +
            std::to_string(e.color) + " has its color repeated at both ends"),
        _edge(e)
    {
    }

    const ColoredEdge & edge() const noexcept { return _edge; }

  private:
    ColoredEdge _edge;
};

/**
 * Orients every edge towards an end at which its color is unique: {u, v}
 * becomes (v, u) when the color is unique only at u, (u, v) when unique
 * only at v, and `tie_break` decides when it is unique at both.
 *
 * The result has, for every arc (u, v), C(uv) distinct from the colors of
 * all other edges at v. When the source has no rainbow triangle it also
 * has d-(v) + omega+(v) >= d^c(v) at every vertex.
 *
 * Throws UnreducedEdge if some edge's color repeats at both ends.
 */
inline OrientationResult orient(const ColoredGraph & reduced, const TieBreak & tie_break = lower_to_higher)
{
    detail::ColorCounts counts{reduced};
    std::vector<Arc> arcs;
    arcs.reserve(reduced.edge_count());
    for (const auto & e : reduced.edges()) {
        bool unique_at_u = counts.at(e.u, e.color) == 1;
        bool unique_at_v = counts.at(e.v, e.color) == 1;
        if (unique_at_u && unique_at_v) {
            Arc a = tie_break(e.u, e.v);
            if (! ((a.tail == e.u && a.head == e.v) || (a.tail == e.v && a.head == e.u)))
                throw std::invalid_argument("tie-break returned an arc that is not {" + std::to_string(e.u) +
                    "," + std::to_string(e.v) + "}");
            arcs.push_back(a);
        }
        else if (unique_at_u)
            arcs.push_back({e.v, e.u});
        else if (unique_at_v)
            arcs.push_back({e.u, e.v});
        else
            throw UnreducedEdge{e};
    }
    return {OrientedGraph{reduced.vertex_count(), std::move(arcs)}, reduced};
}

} // namespace rainbowtri
