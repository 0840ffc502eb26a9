#include "ramsey/bounds.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace ramsey {

std::string_view to_string(BoundSource s) noexcept
{
    switch (s) {
    case BoundSource::SpineSplit:
        return "spine-split";
    case BoundSource::StarSubgraph:
        return "star-subgraph";
    case BoundSource::StarExact:
        return "star-exact";
    case BoundSource::SmallM1:
        return "smallm-1";
    case BoundSource::SmallM2:
        return "smallm-2";
    case BoundSource::UpperBigN:
        return "upper-bign";
    case BoundSource::UpperSmallN:
        return "upper-smalln";
    case BoundSource::TheoremEqual:
        return "theorem-equal";
    case BoundSource::ErdosGraham:
        return "erdos-graham";
    case BoundSource::Exhaustive:
        return "exhaustive";
    case BoundSource::CliqueUpper:
        return "clique-upper";
    }
    return "unknown";
}

SpineSplit spine_split(const std::vector<int>& spine_leaves)
{
    const int k = static_cast<int>(spine_leaves.size());
    if (k == 0)
        throw std::invalid_argument("spine_split needs a non-empty spine");
    SpineSplit s;
    for (int i = 0; i < k; ++i)
        (i % 2 == 0 ? s.m1 : s.m2) += spine_leaves[static_cast<std::size_t>(i)];
    s.m1 += k / 2;
    s.m2 += (k + 1) / 2;
    s.m = std::min(s.m1, s.m2);
    return s;
}

SpineSplit spine_split(const PatternSpec& p)
{
    if (const auto* s = p.get_if<Star>())
        return spine_split(std::vector<int>{s->leaves});
    if (const auto* b = p.get_if<Bistar>())
        return spine_split(std::vector<int>{b->m, b->n});
    if (const auto* c = p.get_if<Caterpillar>())
        return spine_split(c->leaves);
    throw std::invalid_argument("spine_split needs a tree pattern, got '" + p.to_string() + "'");
}

int caterpillar_lower(const PatternSpec& p)
{
    return p.vertex_count() + spine_split(p).m - 1;
}

int star_exact(int n)
{
    if (n < 1)
        throw std::invalid_argument("star_exact needs n >= 1");
    return n % 2 == 0 ? 2 * n - 1 : 2 * n;
}

int erdos_graham_upper(const PatternSpec& p)
{
    if (!p.is_tree())
        throw std::invalid_argument("Erdős-Graham bound applies to trees only");
    return 4 * p.vertex_count() - 3;
}

BoundInterval bistar_bounds(int m, int n)
{
    if (m < 1 || m > n)
        throw std::invalid_argument("bistar_bounds needs 1 <= m <= n, got (" + std::to_string(m) + "," +
                                    std::to_string(n) + ")");
    if (m == 1) {
        // r(B(1,1)) = r(P_4) = 5; otherwise r(B(1,n)) = r(S_{n+1}).
        const int value = n == 1 ? 5 : star_exact(n + 1);
        return {value, value, BoundSource::SmallM1, BoundSource::SmallM1};
    }
    if (m == 2 && n == 2)
        return {8, 8, BoundSource::SmallM2, BoundSource::SmallM2};
    if (n == m || n == m + 1) {
        const int value = 2 * m + n + 2;
        return {value, value, BoundSource::TheoremEqual, BoundSource::TheoremEqual};
    }

    BoundInterval out;
    out.lo = 2 * m + n + 2;
    out.lo_source = BoundSource::SpineSplit;
    if (const int star = star_exact(n + 1); star > out.lo) {
        out.lo = star;
        out.lo_source = BoundSource::StarSubgraph;
    }

    out.hi = 4 * (m + n + 2) - 3;
    out.hi_source = BoundSource::ErdosGraham;
    const auto tighten = [&](int value, BoundSource source) {
        if (value < out.hi) {
            out.hi = value;
            out.hi_source = source;
        }
    };
    if (m == 2)
        tighten(2 * n + 3, BoundSource::SmallM2);
    if (m >= 3 && n >= m + 2 && n <= 2 * m - 1)
        tighten(2 * n + m + 1, BoundSource::UpperBigN);
    return out;
}

BoundInterval caterpillar_bounds(const PatternSpec& p)
{
    if (!p.is_tree())
        throw std::invalid_argument("caterpillar_bounds needs a tree pattern, got '" + p.to_string() + "'");
    if (auto s = star_shape(p)) {
        const int value = star_exact(*s);
        return {value, value, BoundSource::StarExact, BoundSource::StarExact};
    }
    if (auto b = bistar_shape(p))
        return bistar_bounds(b->first, b->second);
    return {caterpillar_lower(p), erdos_graham_upper(p), BoundSource::SpineSplit, BoundSource::ErdosGraham};
}

BoundInterval pattern_bounds(const PatternSpec& p)
{
    if (p.is_tree())
        return caterpillar_bounds(p);
    const auto& plus = *p.get_if<PlusEdge>();
    const PatternSpec base = std::visit(
        [](const auto& b) {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, Star>)
                return PatternSpec::star(b.leaves);
            else
                return PatternSpec::bistar(b.m, b.n);
        },
        plus.base);
    BoundInterval out = caterpillar_bounds(base);
    out.hi_source = BoundSource::CliqueUpper;

    // r(G) <= r(K_v) <= C(2v-2, v-1).
    const int v = p.vertex_count();
    long long binom = 1;
    for (int i = 1; i <= v - 1; ++i) {
        binom = binom * (v - 1 + i) / i;
        if (binom > std::numeric_limits<int>::max()) {
            binom = std::numeric_limits<int>::max();
            break;
        }
    }
    out.hi = std::max(out.lo, static_cast<int>(binom));
    return out;
}

}  // namespace ramsey
