#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace ramsey {

/// Adjacency row of a host graph: bit u of row v is set iff {u, v} is present.
using Row = std::uint64_t;

/// Hosts are K_N with N <= kMaxVertices so that one row fits a machine word.
inline constexpr int kMaxVertices = 64;

enum class Color : std::uint8_t { Blue, Red };

constexpr Color other(Color c) noexcept { return c == Color::Blue ? Color::Red : Color::Blue; }

std::string_view to_string(Color c) noexcept;

/// Unordered vertex pair {i, j} with i < j.
struct EdgeIndex {
    int i = 0;
    int j = 1;

    friend bool operator==(const EdgeIndex&, const EdgeIndex&) = default;
};

constexpr std::size_t edge_count(int n) noexcept
{
    return n < 2 ? 0 : static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

/// Column-major linearization j(j-1)/2 + i. Certificate files depend on it.
constexpr std::size_t to_linear(EdgeIndex e) noexcept
{
    return static_cast<std::size_t>(e.j) * static_cast<std::size_t>(e.j - 1) / 2 +
           static_cast<std::size_t>(e.i);
}

EdgeIndex from_linear(std::size_t index) noexcept;

/// Partial red/blue assignment to the edges of K_N.
///
/// Each color class is held as an adjacency bit matrix, one Row per vertex,
/// and the two classes are kept disjoint. An edge present in neither class is
/// uncolored.
class TwoColoring {
public:
    explicit TwoColoring(int n_vertices);

    static TwoColoring uniform(int n_vertices, Color c);

    int n_vertices() const noexcept { return n_; }

    std::optional<Color> color_of(int u, int v) const;
    void set(int u, int v, Color c);
    void clear(int u, int v);

    bool complete() const noexcept;
    std::size_t colored_count() const noexcept;

    Row neighbors(int v, Color c) const { return rows(c)[static_cast<std::size_t>(v)]; }
    std::span<const Row> rows(Color c) const noexcept { return c == Color::Blue ? blue_ : red_; }

    /// Linear indices of the edges carrying color c, ascending.
    std::vector<std::size_t> edges(Color c) const;

    /// Swaps the two color classes in place.
    void swap_colors() noexcept { blue_.swap(red_); }

    friend bool operator==(const TwoColoring&, const TwoColoring&) = default;

private:
    void check_pair(int u, int v) const;

    int n_;
    std::vector<Row> blue_;
    std::vector<Row> red_;
};

int color_degree(const TwoColoring& c, int v, Color color);

TwoColoring complement(const TwoColoring& c);

}  // namespace ramsey
