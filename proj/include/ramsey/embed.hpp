#pragma once

#include <span>
#include <variant>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/pattern.hpp"

namespace ramsey {

/// Generic subgraph (monomorphism) test of a pattern graph against a host
/// given as adjacency rows.
///
/// Vertices of degree >= 2 form the core and are placed by backtracking,
/// highest degree first and then always adjacent to something already
/// placed. Degree-1 vertices are never branched on: once the core is
/// placed they are assigned collectively, and a Hall check over every subset
/// of their parents decides whether enough distinct free neighbours exist.
class Embedder {
public:
    explicit Embedder(const PatternGraph& pattern);

    bool find(std::span<const Row> host) const;

    int pattern_vertices() const noexcept { return vertices_; }

private:
    struct Slot {
        int degree = 0;
        int leaves = 0;
        std::vector<int> earlier_neighbors;
    };

    bool place(std::span<const Row> host, std::size_t pos, Row used, std::vector<int>& image) const;
    bool leaves_fit(std::span<const Row> host, Row used, const std::vector<int>& image) const;

    int vertices_ = 0;
    std::vector<Slot> slots_;
    std::vector<std::size_t> leaf_parents_;
};

bool host_has_star(std::span<const Row> host, int n);

/// True iff edge {u, v} of the host can serve as the central edge of a
/// B(m, n) in either orientation.
bool bistar_centered_at(std::span<const Row> host, int m, int n, int u, int v);

bool host_has_bistar(std::span<const Row> host, int m, int n);

/// Dispatches containment to the closed-form star/bistar tests where the
/// pattern allows it, and to the generic Embedder otherwise.
class Matcher {
public:
    explicit Matcher(const PatternSpec& pattern, bool fast_paths = true);

    bool contains(std::span<const Row> host) const;

    /// Containment test after edge {x, y} was added to a host that did not
    /// contain the pattern before; only copies through that edge are sought
    /// where a localized test exists.
    bool contains_after_adding(std::span<const Row> host, int x, int y) const;

    int pattern_vertices() const noexcept { return vertices_; }

private:
    struct StarCase {
        int n;
    };
    struct BistarCase {
        int m;
        int n;
    };

    int vertices_;
    std::variant<StarCase, BistarCase, Embedder> impl_;
};

bool contains_mono_star(const TwoColoring& c, Color color, int n);

/// Requires a complete coloring; throws std::invalid_argument otherwise.
bool contains_mono_bistar(const TwoColoring& c, Color color, int m, int n);

/// Generic backtracking test; the reference every fast path is checked against.
bool contains_mono_pattern(const TwoColoring& c, Color color, const PatternSpec& p);

/// Either color class, restricted to colored edges, contains p. A true result
/// survives every extension of the coloring.
bool partial_contains_mono(const TwoColoring& c, const PatternSpec& p);

}  // namespace ramsey
