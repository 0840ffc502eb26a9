#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "ramsey/bounds.hpp"
#include "ramsey/coloring.hpp"
#include "ramsey/pattern.hpp"

namespace ramsey {

struct SearchProgress {
    std::uint64_t nodes = 0;
    double seconds = 0.0;
    double nodes_per_second = 0.0;
    std::size_t prefixes_done = 0;
    std::size_t prefixes_total = 0;
};

struct SearchConfig {
    std::uint64_t node_budget = 10'000'000'000ULL;
    std::chrono::seconds wall_budget{30 * 60};
    int worker_count = 1;

    bool prune_containment = true;
    /// Degree window R-m-n-1 <= d_b(v), d_r(v) <= m+n; bistar shapes only, N >= 2m+n+2.
    bool prune_degree = true;
    /// Color degree >= m+n+1 forces a monochromatic B(m,n); same scope.
    bool prune_maxdeg_lemma = true;
    /// First decided edge blue (diagonal targets are closed under complement).
    bool symmetry_color_swap = true;
    /// Vertex 0 sees blue on a prefix 1..b of the other vertices.
    bool symmetry_first_vertex = true;

    /// Vertices whose edges form the work-splitting prefix; 0 picks a default.
    int split_vertices = 0;

    std::function<void(const SearchProgress&)> progress;
    std::chrono::milliseconds progress_interval{1000};

    static SearchConfig unpruned()
    {
        SearchConfig cfg;
        cfg.prune_containment = cfg.prune_degree = cfg.prune_maxdeg_lemma = false;
        cfg.symmetry_color_swap = cfg.symmetry_first_vertex = false;
        return cfg;
    }
};

struct SearchStats {
    std::uint64_t nodes = 0;
    /// Nodes per edge depth (position in vertex-extension order).
    std::vector<std::uint64_t> depth_histogram;
    double seconds = 0.0;
    int workers = 1;
};

struct AllColoringsContain {
    SearchStats stats;
};

struct Counterexample {
    TwoColoring coloring;
    SearchStats stats;
};

struct BudgetExhausted {
    SearchStats stats;
};

using SearchOutcome = std::variant<AllColoringsContain, Counterexample, BudgetExhausted>;

std::string_view classification_name(const SearchOutcome& outcome) noexcept;

/// Decides K_N -> (p, p) by depth-first search over edge colorings in
/// vertex-extension order, blue before red. A Counterexample is re-checked
/// with the generic embedder in both colors before it is returned.
SearchOutcome decide_arrow(const PatternSpec& p, int order, const SearchConfig& cfg);

enum class PruneDecision { Prune, Continue };

/// Whole-coloring form of the pruning rules the search applies
/// incrementally. The order is taken from the coloring.
PruneDecision prune_check(const TwoColoring& partial, const PatternSpec& p, const SearchConfig& cfg);

/// True when the degree rules are sound for p on K_N: p is a bistar shape
/// B(m, n) and N >= 2m + n + 2.
bool degree_rules_apply(const PatternSpec& p, int order);

struct RamseyValue {
    int value = 0;
    /// Complete coloring of K_{value-1} avoiding p in both colors.
    TwoColoring lower_certificate;
    SearchStats upper_proof_stats;
    BoundInterval interval;
};

struct BoundedOnly {
    BoundInterval interval;
};

using RamseyResult = std::variant<RamseyValue, BoundedOnly>;

/// Arrow decision procedure used by compute_ramsey; lets callers put a cache
/// in front of decide_arrow.
using ArrowDecider = std::function<SearchOutcome(const PatternSpec&, int)>;

/// Exact r(p): starts from pattern_bounds(p), decides upward from lo and
/// returns the first order that arrows, with a counterexample one below.
/// Budget exhaustion yields BoundedOnly with the tightened interval.
RamseyResult compute_ramsey(const PatternSpec& p, const SearchConfig& cfg, const ArrowDecider& decide = {});

}  // namespace ramsey
