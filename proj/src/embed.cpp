#include "ramsey/embed.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ramsey {

namespace {

Row bit(int v) { return Row{1} << v; }

Row all_vertices(std::size_t n) { return n >= 64 ? ~Row{0} : (Row{1} << n) - 1; }

}  // namespace

Embedder::Embedder(const PatternGraph& pattern)
    : vertices_(pattern.vertices)
{
    const auto degree = pattern.degrees();
    const auto adj = pattern.adjacency();

    std::vector<int> core;
    for (int v = 0; v < vertices_; ++v)
        if (degree[static_cast<std::size_t>(v)] >= 2)
            core.push_back(v);
    if (core.empty() && vertices_ > 0)
        core.push_back(0);

    // Placement order: highest degree first, then greedily the highest-degree
    // core vertex adjacent to the placed set; ties by index.
    std::vector<int> order;
    std::vector<bool> placed(static_cast<std::size_t>(vertices_), false);
    Row placed_mask = 0;
    while (order.size() < core.size()) {
        int best = -1;
        for (int v : core) {
            if (placed[static_cast<std::size_t>(v)])
                continue;
            const bool attached = order.empty() || (adj[static_cast<std::size_t>(v)] & placed_mask) != 0;
            if (!attached)
                continue;
            if (best < 0 || degree[static_cast<std::size_t>(v)] > degree[static_cast<std::size_t>(best)])
                best = v;
        }
        if (best < 0)
            throw std::invalid_argument("pattern graph core is disconnected");
        placed[static_cast<std::size_t>(best)] = true;
        placed_mask |= bit(best);
        order.push_back(best);
    }

    std::vector<int> position(static_cast<std::size_t>(vertices_), -1);
    for (std::size_t i = 0; i < order.size(); ++i)
        position[static_cast<std::size_t>(order[i])] = static_cast<int>(i);

    slots_.resize(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        const int v = order[i];
        slots_[i].degree = degree[static_cast<std::size_t>(v)];
        for (std::size_t j = 0; j < i; ++j)
            if (adj[static_cast<std::size_t>(v)] & bit(order[j]))
                slots_[i].earlier_neighbors.push_back(static_cast<int>(j));
    }
    for (int v = 0; v < vertices_; ++v) {
        if (position[static_cast<std::size_t>(v)] >= 0)
            continue;
        const Row nbrs = adj[static_cast<std::size_t>(v)];
        if (std::popcount(nbrs) != 1)
            throw std::invalid_argument("non-core pattern vertex must be a leaf");
        const int parent = std::countr_zero(nbrs);
        const int pos = position[static_cast<std::size_t>(parent)];
        if (pos < 0)
            throw std::invalid_argument("pattern leaf attached to another leaf");
        ++slots_[static_cast<std::size_t>(pos)].leaves;
    }
    for (std::size_t i = 0; i < slots_.size(); ++i)
        if (slots_[i].leaves > 0)
            leaf_parents_.push_back(i);
}

bool Embedder::find(std::span<const Row> host) const
{
    if (vertices_ == 0)
        return true;
    if (static_cast<std::size_t>(vertices_) > host.size())
        return false;
    std::vector<int> image(slots_.size(), -1);
    return place(host, 0, 0, image);
}

bool Embedder::place(std::span<const Row> host, std::size_t pos, Row used, std::vector<int>& image) const
{
    if (pos == slots_.size())
        return leaves_fit(host, used, image);

    const Slot& slot = slots_[pos];
    Row candidates = all_vertices(host.size()) & ~used;
    for (int q : slot.earlier_neighbors)
        candidates &= host[static_cast<std::size_t>(image[static_cast<std::size_t>(q)])];

    while (candidates) {
        const int h = std::countr_zero(candidates);
        candidates &= candidates - 1;
        if (std::popcount(host[static_cast<std::size_t>(h)]) < slot.degree)
            continue;
        image[pos] = h;
        if (place(host, pos + 1, used | bit(h), image))
            return true;
    }
    image[pos] = -1;
    return false;
}

bool Embedder::leaves_fit(std::span<const Row> host, Row used, const std::vector<int>& image) const
{
    const std::size_t groups = leaf_parents_.size();
    if (groups == 0)
        return true;
    std::vector<Row> avail(groups);
    for (std::size_t g = 0; g < groups; ++g) {
        const std::size_t pos = leaf_parents_[g];
        avail[g] = host[static_cast<std::size_t>(image[pos])] & ~used;
        if (std::popcount(avail[g]) < slots_[pos].leaves)
            return false;
    }
    // Hall's condition for distinct leaf images: every subset of parents
    // must jointly see at least as many free vertices as it needs leaves.
    for (std::size_t subset = 1; subset < (std::size_t{1} << groups); ++subset) {
        if (std::popcount(subset) == 1)
            continue;
        Row reach = 0;
        int need = 0;
        for (std::size_t g = 0; g < groups; ++g) {
            if (subset & (std::size_t{1} << g)) {
                reach |= avail[g];
                need += slots_[leaf_parents_[g]].leaves;
            }
        }
        if (std::popcount(reach) < need)
            return false;
    }
    return true;
}

bool host_has_star(std::span<const Row> host, int n)
{
    return std::any_of(host.begin(), host.end(), [n](Row r) { return std::popcount(r) >= n; });
}

bool bistar_centered_at(std::span<const Row> host, int m, int n, int u, int v)
{
    const Row a = host[static_cast<std::size_t>(u)] & ~bit(v);
    const Row b = host[static_cast<std::size_t>(v)] & ~bit(u);
    const int na = std::popcount(a);
    const int nb = std::popcount(b);
    if (std::popcount(a | b) < m + n)
        return false;
    return (na >= m && nb >= n) || (na >= n && nb >= m);
}

bool host_has_bistar(std::span<const Row> host, int m, int n)
{
    for (std::size_t u = 0; u < host.size(); ++u) {
        Row later = host[u] & ~((bit(static_cast<int>(u)) << 1) - 1);
        while (later) {
            const int v = std::countr_zero(later);
            later &= later - 1;
            if (bistar_centered_at(host, m, n, static_cast<int>(u), v))
                return true;
        }
    }
    return false;
}

Matcher::Matcher(const PatternSpec& pattern, bool fast_paths)
    : vertices_(pattern.vertex_count())
    , impl_(StarCase{0})
{
    if (fast_paths) {
        if (auto s = star_shape(pattern)) {
            impl_ = StarCase{*s};
            return;
        }
        if (auto b = bistar_shape(pattern)) {
            impl_ = BistarCase{b->first, b->second};
            return;
        }
    }
    impl_.emplace<Embedder>(pattern_graph(pattern));
}

bool Matcher::contains(std::span<const Row> host) const
{
    if (static_cast<std::size_t>(vertices_) > host.size())
        return false;
    if (const auto* s = std::get_if<StarCase>(&impl_))
        return host_has_star(host, s->n);
    if (const auto* b = std::get_if<BistarCase>(&impl_))
        return host_has_bistar(host, b->m, b->n);
    return std::get<Embedder>(impl_).find(host);
}

bool Matcher::contains_after_adding(std::span<const Row> host, int x, int y) const
{
    if (static_cast<std::size_t>(vertices_) > host.size())
        return false;
    if (const auto* s = std::get_if<StarCase>(&impl_))
        return std::popcount(host[static_cast<std::size_t>(x)]) >= s->n ||
               std::popcount(host[static_cast<std::size_t>(y)]) >= s->n;
    if (const auto* b = std::get_if<BistarCase>(&impl_)) {
        // A new copy uses {x, y} either as its central edge or as a leaf edge
        // hanging off a center at x or y; all such central edges touch x or y.
        for (int end : {x, y}) {
            Row nbrs = host[static_cast<std::size_t>(end)];
            while (nbrs) {
                const int w = std::countr_zero(nbrs);
                nbrs &= nbrs - 1;
                if (bistar_centered_at(host, b->m, b->n, end, w))
                    return true;
            }
        }
        return false;
    }
    return std::get<Embedder>(impl_).find(host);
}

bool contains_mono_star(const TwoColoring& c, Color color, int n)
{
    return host_has_star(c.rows(color), n);
}

bool contains_mono_bistar(const TwoColoring& c, Color color, int m, int n)
{
    if (!c.complete())
        throw std::invalid_argument("contains_mono_bistar needs a complete coloring");
    if (m < 1 || m > n)
        throw std::invalid_argument("contains_mono_bistar needs 1 <= m <= n");
    return host_has_bistar(c.rows(color), m, n);
}

bool contains_mono_pattern(const TwoColoring& c, Color color, const PatternSpec& p)
{
    if (p.vertex_count() > c.n_vertices())
        return false;
    return Embedder(pattern_graph(p)).find(c.rows(color));
}

bool partial_contains_mono(const TwoColoring& c, const PatternSpec& p)
{
    const Matcher matcher(p);
    return matcher.contains(c.rows(Color::Blue)) || matcher.contains(c.rows(Color::Red));
}

}  // namespace ramsey
