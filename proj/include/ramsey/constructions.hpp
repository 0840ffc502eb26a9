#pragma once

#include "ramsey/coloring.hpp"
#include "ramsey/pattern.hpp"

namespace ramsey {

/// Two blue cliques on vertices [0, a) and [a, a+b), every cross edge red.
TwoColoring split_clique_coloring(int a, int b);

/// K_{2n-1} with {v_i, v_{i+j}} blue for j in 1..(n-1)/2 (indices mod 2n-1),
/// all other edges red. Every vertex has blue and red degree n-1. n odd, n >= 3.
TwoColoring circulant_star_coloring(int n);

/// K_{2n} on U = [0, n), W = [n, 2n-1) and v = 2n-1. Blue: inside U, inside
/// W, and v to W. Red: v to U and U to W. No monochromatic S_n + e.
TwoColoring star_plus_edge_coloring(int n);

/// split_clique_coloring(|V| - 1, m - 1) where m is the spine split of p's
/// caterpillar form. The result is re-checked with the generic embedder in
/// both colors; a violation throws std::logic_error.
TwoColoring lower_bound_witness(const PatternSpec& p);

}  // namespace ramsey
