#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/pattern.hpp"
#include "ramsey/search.hpp"

namespace ramsey {

/// One augmented pattern per isomorphism class of non-edges of a star or
/// bistar base.
std::vector<PatternSpec> augmentations(const PatternSpec& base);

enum class Verdict { Confirms, Contradicts, Inconclusive };

std::string_view to_string(Verdict v) noexcept;

struct StarSaturationReport {
    int n = 0;
    TwoColoring witness{1};
    bool witness_complete = false;
    bool witness_avoids = false;
    int star_value = 0;
    /// Lower bound on r(S_n + e) certified by the witness: its order + 1.
    int augmented_lower = 0;

    bool passed() const noexcept
    {
        return witness_complete && witness_avoids && star_value < augmented_lower;
    }

    std::string render() const;
};

/// Checks the K_{2n} construction avoids S_n + e in both colors and that
/// r(S_n) <= 2n, so r(S_n + e) > r(S_n). No search is involved.
StarSaturationReport verify_star_saturated(int n);

struct BistarSaturationReport {
    int m = 0;
    int n = 0;
    int ramsey_value = 0;
    PatternSpec augmented = PatternSpec::star(1);
    Verdict verdict = Verdict::Inconclusive;
    std::optional<TwoColoring> counterexample;
    SearchStats stats;

    std::string render() const;
};

/// Decides K_r -> (B(m,n) + e) for the leaf-leaf edge across the two centers,
/// with r = r(B(m,n)). `known_value` supplies r; otherwise it is taken from
/// bistar_bounds when exact there, else from compute_ramsey. Throws
/// std::invalid_argument when r cannot be established.
BistarSaturationReport verify_bistar_unsaturated(int m, int n, const SearchConfig& cfg,
                                                 std::optional<int> known_value = std::nullopt,
                                                 const ArrowDecider& decide = {});

}  // namespace ramsey
