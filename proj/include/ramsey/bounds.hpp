#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "ramsey/pattern.hpp"

namespace ramsey {

enum class BoundSource {
    SpineSplit,
    StarSubgraph,
    StarExact,
    SmallM1,
    SmallM2,
    UpperBigN,
    UpperSmallN,
    TheoremEqual,
    ErdosGraham,
    Exhaustive,
    CliqueUpper,
};

std::string_view to_string(BoundSource s) noexcept;

/// [lo, hi] on r(P); each endpoint tagged with the result that produced it.
struct BoundInterval {
    int lo = 0;
    int hi = 0;
    BoundSource lo_source = BoundSource::SpineSplit;
    BoundSource hi_source = BoundSource::ErdosGraham;

    bool exact() const noexcept { return lo == hi; }

    friend bool operator==(const BoundInterval&, const BoundInterval&) = default;
};

/// Alternating leaf sums over a spine: m1 collects odd positions (1-based)
/// plus floor(k/2), m2 even positions plus ceil(k/2).
struct SpineSplit {
    int m1 = 0;
    int m2 = 0;
    int m = 0;
};

SpineSplit spine_split(const std::vector<int>& spine_leaves);

/// Spine split of a tree pattern, read off its caterpillar encoding (all-zero
/// for paths). Throws std::invalid_argument for PlusEdge.
SpineSplit spine_split(const PatternSpec& p);

/// |V(p)| + m - 1.
int caterpillar_lower(const PatternSpec& p);

/// 2n - 1 for even n, 2n for odd n.
int star_exact(int n);

/// Requires 1 <= m <= n.
BoundInterval bistar_bounds(int m, int n);

/// 4|V(p)| - 3 for tree patterns.
int erdos_graham_upper(const PatternSpec& p);

/// Interval for any tree pattern: star and bistar shapes use their sharper
/// results, everything else the spine split against Erdős-Graham.
BoundInterval caterpillar_bounds(const PatternSpec& p);

/// caterpillar_bounds for trees. For augmented patterns: the base's lower
/// bound (subgraph monotonicity) and the clique bound C(2v-2, v-1).
BoundInterval pattern_bounds(const PatternSpec& p);

}  // namespace ramsey
