#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace rainbowtri {

using Vertex = std::uint32_t;

/// Unordered vertex triple, stored in ascending order.
using Triangle = std::array<Vertex, 3>;

inline Triangle make_triangle(Vertex a, Vertex b, Vertex c)
{
    Triangle t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

/// Sorted, duplicate-free collection of triangles. Iteration order is
/// lexicographic, so `front()` is always the smallest triple.
class TriangleSet {
  public:
    TriangleSet() = default;

    explicit TriangleSet(std::vector<Triangle> triples) : _triples(std::move(triples))
    {
        for (auto & t : _triples)
            std::sort(t.begin(), t.end());
        std::sort(_triples.begin(), _triples.end());
        _triples.erase(std::unique(_triples.begin(), _triples.end()), _triples.end());
    }

    bool empty() const noexcept { return _triples.empty(); }
    std::size_t size() const noexcept { return _triples.size(); }
    const Triangle & front() const { return _triples.front(); }

    bool contains(const Triangle & t) const
    {
        return std::binary_search(_triples.begin(), _triples.end(), make_triangle(t[0], t[1], t[2]));
    }

    auto begin() const noexcept { return _triples.begin(); }
    auto end() const noexcept { return _triples.end(); }

    const std::vector<Triangle> & triples() const noexcept { return _triples; }

    friend bool operator==(const TriangleSet &, const TriangleSet &) = default;

  private:
    std::vector<Triangle> _triples;
};

} // namespace rainbowtri
