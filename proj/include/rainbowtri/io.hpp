#pragma once

// Plain-text graph files.
//
//   ecg <n> <m>          followed by m lines "<u> <v> <color>", u < v
//   dig <n> <m>          followed by m lines "<tail> <head>"
//
// Vertices are 0-based. Blank lines and anything after '#' are ignored.

#include <rainbowtri/colored_graph.hpp>
#include <rainbowtri/errors.hpp>
#include <rainbowtri/oriented_graph.hpp>

#include <algorithm>
#include <charconv>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace rainbowtri {

using AnyGraph = std::variant<ColoredGraph, OrientedGraph>;

inline std::string serialize(const ColoredGraph & g)
{
    std::ostringstream out;
    out << "ecg " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto & e : g.edges())
        out << e.u << ' ' << e.v << ' ' << e.color << '\n';
    return out.str();
}

inline std::string serialize(const OrientedGraph & d)
{
    std::ostringstream out;
    out << "dig " << d.vertex_count() << ' ' << d.arc_count() << '\n';
    for (const auto & a : d.arcs())
        out << a.tail << ' ' << a.head << '\n';
    return out.str();
}

inline std::string serialize(const AnyGraph & g)
{
    return std::visit([](const auto & x) { return serialize(x); }, g);
}

namespace detail {
    inline std::vector<std::string_view> split_fields(std::string_view line)
    {
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::vector<std::string_view> fields;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                ++i;
            std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
                ++i;
            if (i > start)
                fields.push_back(line.substr(start, i - start));
        }
        return fields;
    }

    template <typename T>
    T parse_number(std::string_view field, std::size_t line, const char * what)
    {
        T value{};
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc{} || ptr != field.data() + field.size())
            throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(field) + "'");
        return value;
    }
} // namespace detail

/// Reads one graph file. Throws ParseError naming the offending line.
inline AnyGraph parse(std::istream & in)
{
    std::string text;

    struct Line {
        std::size_t number;
        std::vector<std::string_view> fields;
    };
    std::vector<std::string> storage;
    std::vector<Line> lines;
    while (std::getline(in, text)) {
        storage.push_back(std::move(text));
    }
    for (std::size_t i = 0; i < storage.size(); ++i) {
        auto fields = detail::split_fields(storage[i]);
        if (! fields.empty())
            lines.push_back({i + 1, std::move(fields)});
    }

    if (lines.empty())
        throw ParseError(0, "missing header");
    const auto & header = lines.front();
    if (header.fields.size() != 3 || (header.fields[0] != "ecg" && header.fields[0] != "dig"))
        throw ParseError(header.number, "expected header 'ecg <n> <m>' or 'dig <n> <m>'");
    bool colored = header.fields[0] == "ecg";
    auto n = detail::parse_number<std::size_t>(header.fields[1], header.number, "vertex count");
    auto m = detail::parse_number<std::size_t>(header.fields[2], header.number, "edge count");
    if (n > static_cast<std::size_t>(static_cast<Vertex>(-1)))
        throw ParseError(header.number, "vertex count too large");
    if (lines.size() - 1 != m)
        throw ParseError(lines.size() > m + 1 ? lines[m + 1].number : 0,
            "header declares " + std::to_string(m) + " body lines, found " + std::to_string(lines.size() - 1));

    std::set<std::pair<Vertex, Vertex>> seen;
    auto read_vertex = [&](std::string_view field, std::size_t number) {
        auto v = detail::parse_number<std::size_t>(field, number, "vertex id");
        if (v >= n)
            throw ParseError(number, "vertex " + std::to_string(v) + " out of range 0.." +
                std::to_string(n == 0 ? 0 : n - 1));
        return static_cast<Vertex>(v);
    };

    if (colored) {
        std::vector<ColoredEdge> edges;
        edges.reserve(m);
        for (std::size_t i = 1; i < lines.size(); ++i) {
            const auto & [number, fields] = lines[i];
            if (fields.size() != 3)
                throw ParseError(number, "expected '<u> <v> <color>'");
            auto u = read_vertex(fields[0], number);
            auto v = read_vertex(fields[1], number);
            auto c = detail::parse_number<Color>(fields[2], number, "color");
            if (u == v)
                throw ParseError(number, "self-loop at vertex " + std::to_string(u));
            if (u > v)
                throw ParseError(number, "edge endpoints must be listed with u < v");
            if (! seen.emplace(u, v).second)
                throw ParseError(number, "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
            edges.push_back({u, v, c});
        }
        return ColoredGraph{n, std::move(edges)};
    }

    std::vector<Arc> arcs;
    arcs.reserve(m);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto & [number, fields] = lines[i];
        if (fields.size() != 2)
            throw ParseError(number, "expected '<tail> <head>'");
        auto u = read_vertex(fields[0], number);
        auto v = read_vertex(fields[1], number);
        if (u == v)
            throw ParseError(number, "self-loop at vertex " + std::to_string(u));
        auto key = std::minmax(u, v);
        if (! seen.emplace(key.first, key.second).second)
            throw ParseError(number, (std::find(arcs.begin(), arcs.end(), Arc{u, v}) != arcs.end()
                    ? "duplicate arc (" : "opposite arcs (") + std::to_string(u) + "," + std::to_string(v) + ")");
        arcs.push_back({u, v});
    }
    return OrientedGraph{n, std::move(arcs)};
}

inline AnyGraph parse(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse(in);
}

inline ColoredGraph parse_colored(std::string_view text)
{
    auto g = parse(text);
    if (! std::holds_alternative<ColoredGraph>(g))
        throw ParseError(1, "expected an 'ecg' file");
    return std::get<ColoredGraph>(std::move(g));
}

inline OrientedGraph parse_oriented(std::string_view text)
{
    auto g = parse(text);
    if (! std::holds_alternative<OrientedGraph>(g))
        throw ParseError(1, "expected a 'dig' file");
    return std::get<OrientedGraph>(std::move(g));
}

} // namespace rainbowtri
