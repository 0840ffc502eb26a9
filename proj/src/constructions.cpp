#include "ramsey/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ramsey/bounds.hpp"
#include "ramsey/embed.hpp"

namespace ramsey {

TwoColoring split_clique_coloring(int a, int b)
{
    if (a < 1 || b < 0)
        throw std::invalid_argument("split_clique_coloring needs a >= 1 and b >= 0");
    TwoColoring c(a + b);
    for (int j = 1; j < a + b; ++j)
        for (int i = 0; i < j; ++i)
            c.set(i, j, (i < a) == (j < a) ? Color::Blue : Color::Red);
    return c;
}

TwoColoring circulant_star_coloring(int n)
{
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("circulant_star_coloring needs odd n >= 3, got " + std::to_string(n));
    const int order = 2 * n - 1;
    const int reach = (n - 1) / 2;
    TwoColoring c(order);
    for (int j = 1; j < order; ++j) {
        for (int i = 0; i < j; ++i) {
            const int gap = j - i;
            const int jump = std::min(gap, order - gap);
            c.set(i, j, jump <= reach ? Color::Blue : Color::Red);
        }
    }
    return c;
}

TwoColoring star_plus_edge_coloring(int n)
{
    if (n < 2)
        throw std::invalid_argument("star_plus_edge_coloring needs n >= 2");
    const int order = 2 * n;
    const int v = order - 1;
    const auto in_u = [n](int x) { return x < n; };
    TwoColoring c(order);
    for (int j = 1; j < order; ++j) {
        for (int i = 0; i < j; ++i) {
            Color color;
            if (j == v)
                color = in_u(i) ? Color::Red : Color::Blue;
            else
                color = in_u(i) == in_u(j) ? Color::Blue : Color::Red;
            c.set(i, j, color);
        }
    }
    return c;
}

TwoColoring lower_bound_witness(const PatternSpec& p)
{
    if (!p.is_tree())
        throw std::invalid_argument("lower_bound_witness needs a caterpillar pattern");
    const int m = spine_split(p).m;
    TwoColoring witness = split_clique_coloring(p.vertex_count() - 1, m - 1);
    for (Color color : {Color::Blue, Color::Red})
        if (contains_mono_pattern(witness, color, p))
            throw std::logic_error("split-clique witness for '" + p.to_string() + "' contains a " +
                                   std::string(to_string(color)) + " copy");
    return witness;
}

}  // namespace ramsey
