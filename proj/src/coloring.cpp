#include "ramsey/coloring.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ramsey {

std::string_view to_string(Color c) noexcept
{
    return c == Color::Blue ? "blue" : "red";
}

EdgeIndex from_linear(std::size_t index) noexcept
{
    // Largest j with j(j-1)/2 <= index; the sqrt estimate is corrected in both directions.
    auto j = static_cast<std::size_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(index))) / 2.0);
    while (j * (j - 1) / 2 > index)
        --j;
    while ((j + 1) * j / 2 <= index)
        ++j;
    return {static_cast<int>(index - j * (j - 1) / 2), static_cast<int>(j)};
}

TwoColoring::TwoColoring(int n_vertices)
    : n_(n_vertices)
{
    if (n_vertices < 1 || n_vertices > kMaxVertices)
        throw std::invalid_argument("coloring order must lie in [1, " + std::to_string(kMaxVertices) +
                                    "], got " + std::to_string(n_vertices));
    blue_.assign(static_cast<std::size_t>(n_), 0);
    red_.assign(static_cast<std::size_t>(n_), 0);
}

TwoColoring TwoColoring::uniform(int n_vertices, Color c)
{
    TwoColoring result(n_vertices);
    for (int j = 1; j < n_vertices; ++j)
        for (int i = 0; i < j; ++i)
            result.set(i, j, c);
    return result;
}

void TwoColoring::check_pair(int u, int v) const
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
        throw std::out_of_range("invalid vertex pair {" + std::to_string(u) + "," + std::to_string(v) +
                                "} for K_" + std::to_string(n_));
}

std::optional<Color> TwoColoring::color_of(int u, int v) const
{
    check_pair(u, v);
    const Row bit = Row{1} << v;
    if (blue_[static_cast<std::size_t>(u)] & bit)
        return Color::Blue;
    if (red_[static_cast<std::size_t>(u)] & bit)
        return Color::Red;
    return std::nullopt;
}

void TwoColoring::set(int u, int v, Color c)
{
    clear(u, v);
    auto& rows = c == Color::Blue ? blue_ : red_;
    rows[static_cast<std::size_t>(u)] |= Row{1} << v;
    rows[static_cast<std::size_t>(v)] |= Row{1} << u;
}

void TwoColoring::clear(int u, int v)
{
    check_pair(u, v);
    for (auto* rows : {&blue_, &red_}) {
        (*rows)[static_cast<std::size_t>(u)] &= ~(Row{1} << v);
        (*rows)[static_cast<std::size_t>(v)] &= ~(Row{1} << u);
    }
}

std::size_t TwoColoring::colored_count() const noexcept
{
    std::size_t twice = 0;
    for (int v = 0; v < n_; ++v)
        twice += static_cast<std::size_t>(std::popcount(blue_[static_cast<std::size_t>(v)]) +
                                          std::popcount(red_[static_cast<std::size_t>(v)]));
    return twice / 2;
}

bool TwoColoring::complete() const noexcept
{
    return colored_count() == edge_count(n_);
}

std::vector<std::size_t> TwoColoring::edges(Color c) const
{
    std::vector<std::size_t> out;
    const auto r = rows(c);
    for (int j = 1; j < n_; ++j)
        for (int i = 0; i < j; ++i)
            if (r[static_cast<std::size_t>(j)] & (Row{1} << i))
                out.push_back(to_linear({i, j}));
    return out;
}

int color_degree(const TwoColoring& c, int v, Color color)
{
    if (v < 0 || v >= c.n_vertices())
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    return std::popcount(c.neighbors(v, color));
}

TwoColoring complement(const TwoColoring& c)
{
    TwoColoring result = c;
    result.swap_colors();
    return result;
}

}  // namespace ramsey
