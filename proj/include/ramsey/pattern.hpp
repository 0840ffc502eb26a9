#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ramsey/coloring.hpp"

namespace ramsey {

/// Which center of a bistar B(m, n): the one carrying m leaves or the one carrying n.
enum class Center : std::uint8_t { Small, Large };

// Augmenting-edge classes. For bistar bases the center field selects the
// orientation; when m == n both orientations coincide and are normalized.
struct LeafLeaf {
    friend bool operator==(const LeafLeaf&, const LeafLeaf&) = default;
};
struct LeafLeafSameCenter {
    Center at = Center::Large;
    friend bool operator==(const LeafLeafSameCenter&, const LeafLeafSameCenter&) = default;
};
struct LeafLeafDifferentCenters {
    friend bool operator==(const LeafLeafDifferentCenters&, const LeafLeafDifferentCenters&) = default;
};
struct LeafToFarCenter {
    Center leaf_of = Center::Small;
    friend bool operator==(const LeafToFarCenter&, const LeafToFarCenter&) = default;
};

using AugmentationClass = std::variant<LeafLeaf, LeafLeafSameCenter, LeafLeafDifferentCenters, LeafToFarCenter>;

struct Star {
    int leaves = 1;
    friend bool operator==(const Star&, const Star&) = default;
};

/// B(m, n): adjacent centers of degrees m+1 and n+1, m <= n.
struct Bistar {
    int m = 1;
    int n = 1;
    friend bool operator==(const Bistar&, const Bistar&) = default;
};

/// C(n_1, ..., n_k). An all-zero leaf vector of length k encodes the path P_k.
struct Caterpillar {
    std::vector<int> leaves;
    friend bool operator==(const Caterpillar&, const Caterpillar&) = default;
};

struct PlusEdge {
    std::variant<Star, Bistar> base;
    AugmentationClass augmentation;
    friend bool operator==(const PlusEdge&, const PlusEdge&) = default;
};

/// Target subgraph. Construct through the named factories, which validate;
/// equality is structural.
class PatternSpec {
public:
    using Variant = std::variant<Star, Bistar, Caterpillar, PlusEdge>;

    static PatternSpec star(int leaves);
    static PatternSpec bistar(int m, int n);
    static PatternSpec caterpillar(std::vector<int> leaves);
    static PatternSpec path(int k);
    static PatternSpec plus_edge(const PatternSpec& base, AugmentationClass augmentation);

    const Variant& value() const noexcept { return value_; }

    template <typename T>
    const T* get_if() const noexcept
    {
        return std::get_if<T>(&value_);
    }

    bool is_tree() const noexcept { return !std::holds_alternative<PlusEdge>(value_); }
    bool is_path() const noexcept;

    int vertex_count() const noexcept;
    int edge_count() const noexcept;

    /// Canonical pattern expression, e.g. "bistar 2 3 +e ll-same:m".
    std::string to_string() const;

    friend bool operator==(const PatternSpec&, const PatternSpec&) = default;

private:
    explicit PatternSpec(Variant v)
        : value_(std::move(v))
    {
    }

    Variant value_;
};

/// Parses the pattern grammar:
///   star <n> | bistar <m> <n> | caterpillar <n1> ... <nk> | path <k> | <base> +e <class>
/// with class one of ll, ll-same[:m|:n], ll-diff, leaf-far-center[:m|:n].
/// Throws PatternParseError.
PatternSpec parse_pattern(std::string_view text);

class PatternParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::string_view kPatternGrammar =
    "star <n> | bistar <m> <n> | caterpillar <n1> <n2> ... | path <k> | <star|bistar> +e "
    "<ll|ll-same[:m|:n]|ll-diff|leaf-far-center[:m|:n]>";

/// Explicit pattern graph. Spine vertices come first (0..k-1, in spine
/// order), followed by leaves grouped by their spine vertex.
struct PatternGraph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> spine;

    std::vector<int> degrees() const;
    std::vector<Row> adjacency() const;
};

PatternGraph pattern_graph(const PatternSpec& p);

/// Star leaf count when p is a star up to isomorphism (stars, one-vertex
/// spines, P_2 and P_3).
std::optional<int> star_shape(const PatternSpec& p);

/// (m, n) with m <= n when p is a bistar up to isomorphism (bistars,
/// two-vertex spines, P_4).
std::optional<std::pair<int, int>> bistar_shape(const PatternSpec& p);

/// Spine leaf counts with path ends folded into leaves: P_k for k >= 3
/// becomes (1, 0, ..., 0, 1), or (2) for P_3. Stars and bistars map to their
/// one- and two-vertex spines, P_2 to (1). Empty for PlusEdge.
std::optional<std::vector<int>> reduced_spine(const PatternSpec& p);

}  // namespace ramsey
