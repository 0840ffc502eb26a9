#pragma once

// Test-only reference procedures. They share nothing with the library's
// search or embedding code beyond the plain data types: every question is
// answered by enumerating injections, permutations or whole colorings.

#include <algorithm>
#include <bit>
#include <span>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/pattern.hpp"

namespace oracle {

using ramsey::Color;
using ramsey::PatternGraph;
using ramsey::Row;
using ramsey::TwoColoring;

inline bool adjacent(const std::vector<std::vector<bool>>& m, int u, int v)
{
    return m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
}

inline std::vector<std::vector<bool>> matrix(int n, const std::vector<std::pair<int, int>>& edges)
{
    std::vector<std::vector<bool>> m(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    for (auto [u, v] : edges)
        m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = m[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
    return m;
}

inline std::vector<std::vector<bool>> color_matrix(const TwoColoring& c, Color color)
{
    const int n = c.n_vertices();
    std::vector<std::vector<bool>> m(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && c.color_of(u, v) == color)
                m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
    return m;
}

/// Tries every injection of pattern vertices (in index order) into host vertices.
inline bool contains(const std::vector<std::vector<bool>>& host, const PatternGraph& g)
{
    const int n = static_cast<int>(host.size());
    if (g.vertices > n)
        return false;
    const auto pat = matrix(g.vertices, g.edges);
    std::vector<int> image(static_cast<std::size_t>(g.vertices), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    auto rec = [&](auto&& self, int k) -> bool {
        if (k == g.vertices)
            return true;
        for (int h = 0; h < n; ++h) {
            if (used[static_cast<std::size_t>(h)])
                continue;
            bool ok = true;
            for (int q = 0; q < k && ok; ++q)
                if (adjacent(pat, k, q) && !adjacent(host, h, image[static_cast<std::size_t>(q)]))
                    ok = false;
            if (!ok)
                continue;
            used[static_cast<std::size_t>(h)] = true;
            image[static_cast<std::size_t>(k)] = h;
            if (self(self, k + 1))
                return true;
            used[static_cast<std::size_t>(h)] = false;
        }
        return false;
    };
    return rec(rec, 0);
}

inline bool contains(const TwoColoring& c, Color color, const ramsey::PatternSpec& p)
{
    return contains(color_matrix(c, color), ramsey::pattern_graph(p));
}

/// Isomorphism by trying every vertex permutation.
inline bool isomorphic(const PatternGraph& a, const PatternGraph& b)
{
    if (a.vertices != b.vertices || a.edges.size() != b.edges.size())
        return false;
    const auto ma = matrix(a.vertices, a.edges);
    const auto mb = matrix(b.vertices, b.edges);
    std::vector<int> perm(static_cast<std::size_t>(a.vertices));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool same = true;
        for (auto [u, v] : a.edges)
            if (!adjacent(mb, perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])) {
                same = false;
                break;
            }
        if (same)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Complete coloring of K_n whose blue set is given by the bits of `mask`
/// over linear edge indices.
inline TwoColoring from_mask(int n, std::uint64_t mask)
{
    TwoColoring c(n);
    for (std::size_t idx = 0; idx < ramsey::edge_count(n); ++idx) {
        const auto e = ramsey::from_linear(idx);
        c.set(e.i, e.j, (mask >> idx) & 1 ? Color::Blue : Color::Red);
    }
    return c;
}

/// Random complete coloring; the blue density is itself drawn per instance
/// so that skewed degree profiles are represented.
inline TwoColoring random_coloring(int n, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> density(0.1, 0.9);
    std::bernoulli_distribution blue(density(rng));
    TwoColoring c(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            c.set(i, j, blue(rng) ? Color::Blue : Color::Red);
    return c;
}

/// K_n -> (p, p) by enumerating all 2^(n(n-1)/2) colorings. n <= 7.
inline bool arrows(const ramsey::PatternSpec& p, int n)
{
    const auto g = ramsey::pattern_graph(p);
    const std::uint64_t total = std::uint64_t{1} << ramsey::edge_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        const auto c = from_mask(n, mask);
        if (!contains(color_matrix(c, Color::Blue), g) && !contains(color_matrix(c, Color::Red), g))
            return false;
    }
    return true;
}

}  // namespace oracle

namespace oracle {

/// B(m, n) in a host given by rows: some edge uv, m leaves chosen from
/// N(u) - v by explicit subset enumeration, and n more from N(v) - u outside
/// the chosen ones. Either end of the edge may carry the m side.
inline bool has_bistar(std::span<const Row> rows, int m, int n)
{
    const int N = static_cast<int>(rows.size());
    for (int u = 0; u < N; ++u)
        for (int v = 0; v < N; ++v) {
            if (u == v || !(rows[static_cast<std::size_t>(u)] >> v & 1))
                continue;
            const Row a = rows[static_cast<std::size_t>(u)] & ~(Row{1} << v);
            const Row b = rows[static_cast<std::size_t>(v)] & ~(Row{1} << u);
            if (std::popcount(a) < m || std::popcount(b) < n)
                continue;
            // walk all subsets of a, keep those of size m
            for (Row s = a;; s = (s - 1) & a) {
                if (std::popcount(s) == m && std::popcount(b & ~s) >= n)
                    return true;
                if (s == 0)
                    break;
            }
        }
    return false;
}

}  // namespace oracle
