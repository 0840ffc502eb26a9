#include "doctest.h"

#include <algorithm>

#include "ramsey/bounds.hpp"

using namespace ramsey;

TEST_SUITE("bounds") {

TEST_CASE("spine split")
{
    for (int n1 = 1; n1 <= 6; ++n1)
        for (int n2 = n1; n2 <= 6; ++n2)
            CHECK(spine_split(PatternSpec::caterpillar({n1, n2})).m == n1 + 1);
    for (int k = 2; k <= 12; ++k)
        CHECK(spine_split(PatternSpec::path(k)).m == k / 2);
    const auto s = spine_split(std::vector<int>{2, 2, 2});
    CHECK(s.m1 == 5);
    CHECK(s.m2 == 4);
    CHECK(s.m == 4);
    // 1 0 1: odd positions 1 + 1 + floor(3/2), even 0 + ceil(3/2)
    const auto t = spine_split(std::vector<int>{1, 0, 1});
    CHECK(t.m1 == 3);
    CHECK(t.m2 == 2);
    CHECK(t.m == 2);
    CHECK_THROWS(spine_split(PatternSpec::plus_edge(PatternSpec::star(3), LeafLeaf{})));
}

TEST_CASE("caterpillar lower bound")
{
    CHECK(caterpillar_lower(PatternSpec::bistar(2, 2)) == 8);
    CHECK(caterpillar_lower(PatternSpec::path(4)) == 5);
    CHECK(caterpillar_lower(PatternSpec::caterpillar({2, 2, 2})) == 12);
    for (int k = 2; k <= 12; ++k)  // paths: k + floor(k/2) - 1
        CHECK(caterpillar_lower(PatternSpec::path(k)) == k + k / 2 - 1);
    for (int k = 1; k <= 5; ++k)
        for (int n = 1; n <= 4; ++n) {
            if (k == 1)
                continue;
            // regular caterpillars
            const auto p = PatternSpec::caterpillar(std::vector<int>(static_cast<std::size_t>(k), n));
            const int want = k % 2 == 0 ? (3 * k * (n + 1) - 2) / 2 : (3 * k - 1) * (n + 1) / 2;
            CHECK(caterpillar_lower(p) == want);
        }
}

TEST_CASE("star values and Erdos-Graham")
{
    CHECK(star_exact(2) == 3);
    CHECK(star_exact(3) == 6);
    CHECK(star_exact(4) == 7);
    CHECK(star_exact(1) == 2);
    CHECK(erdos_graham_upper(PatternSpec::bistar(2, 2)) == 21);
    CHECK(erdos_graham_upper(PatternSpec::path(4)) == 13);
    CHECK(erdos_graham_upper(PatternSpec::star(3)) == 13);
}

TEST_CASE("bistar bound examples")
{
    CHECK(bistar_bounds(2, 2) == BoundInterval{8, 8, BoundSource::SmallM2, BoundSource::SmallM2});
    const auto b34 = bistar_bounds(3, 4);
    CHECK(b34.lo == 12);
    CHECK(b34.hi == 12);
    CHECK(b34.hi_source == BoundSource::TheoremEqual);
    CHECK(bistar_bounds(3, 5) == BoundInterval{13, 14, BoundSource::SpineSplit, BoundSource::UpperBigN});
    const auto b27 = bistar_bounds(2, 7);
    CHECK(b27.lo == 15);
    CHECK(b27.hi == 17);
    CHECK(b27.lo_source == BoundSource::StarSubgraph);
    CHECK(b27.hi_source == BoundSource::SmallM2);
    const auto b14 = bistar_bounds(1, 4);
    CHECK(b14.lo == 10);
    CHECK(b14.hi == 10);
    CHECK(b14.lo_source == BoundSource::SmallM1);
    const auto b11 = bistar_bounds(1, 1);
    CHECK(b11.lo == 5);
    CHECK(b11.hi == 5);
    CHECK_THROWS(bistar_bounds(3, 2));
    CHECK_THROWS(bistar_bounds(0, 2));
}

TEST_CASE("bistar table invariants up to 12")
{
    for (int m = 1; m <= 12; ++m)
        for (int n = m; n <= 12; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            const auto b = bistar_bounds(m, n);
            CHECK(b.lo <= b.hi);
            CHECK(b.lo >= m + n + 2);
            CHECK(b.hi <= 4 * (m + n + 2) - 3);
            const int spine = caterpillar_lower(PatternSpec::caterpillar({m, n}));
            CHECK(spine == 2 * m + n + 2);
            if (m >= 2 && star_exact(n + 1) <= spine && !b.exact())
                CHECK(b.lo == spine);
            CHECK(b.lo == std::max(spine, star_exact(n + 1)));
            if (m == 1)
                CHECK(b.exact());
            if (m >= 2 && (n == m || n == m + 1)) {
                CHECK(b.lo == 2 * m + n + 2);
                CHECK(b.hi == 2 * m + n + 2);
            }
            if (m == 2 && n >= 3) {  // r in {2n+1, 2n+2, 2n+3}
                CHECK(b.lo >= 2 * n + 1);
                CHECK(b.hi <= 2 * n + 3);
            }
            if (m >= 3 && n >= m + 2 && n <= 2 * m - 1) {
                CHECK(b.hi == 2 * n + m + 1);
                CHECK(b.hi_source == BoundSource::UpperBigN);
            }
            // every endpoint carries a tag from the fixed set
            CHECK(!to_string(b.lo_source).empty());
            CHECK(!to_string(b.hi_source).empty());
        }
}

TEST_CASE("caterpillar and pattern bounds")
{
    CHECK(caterpillar_bounds(PatternSpec::star(3)) ==
          BoundInterval{6, 6, BoundSource::StarExact, BoundSource::StarExact});
    const auto p = caterpillar_bounds(PatternSpec::caterpillar({1, 0, 1}));
    CHECK(p.lo == 5 + 2 - 1);
    CHECK(p.hi == 17);
    CHECK(caterpillar_bounds(PatternSpec::caterpillar({2, 2})).lo == 8);
    CHECK(caterpillar_bounds(PatternSpec::caterpillar({2, 2})).hi == 8);
    CHECK(caterpillar_bounds(PatternSpec::path(4)) == bistar_bounds(1, 1));
    CHECK(caterpillar_bounds(PatternSpec::path(3)).lo == 3);
    const auto p6 = caterpillar_bounds(PatternSpec::path(6));
    CHECK(p6.lo == 8);
    CHECK(p6.hi == 21);

    const auto s3e = pattern_bounds(PatternSpec::plus_edge(PatternSpec::star(3), LeafLeaf{}));
    CHECK(s3e.lo == 6);
    CHECK(s3e.hi == 20);  // C(6,3)
    CHECK(s3e.hi_source == BoundSource::CliqueUpper);
    const auto c4 = pattern_bounds(PatternSpec::plus_edge(PatternSpec::bistar(1, 1), LeafLeafDifferentCenters{}));
    CHECK(c4.lo <= 6);  // r(C_4) = 6
    CHECK(c4.hi >= 6);
}

TEST_CASE("tag names")
{
    CHECK(to_string(BoundSource::SpineSplit) == "spine-split");
    CHECK(to_string(BoundSource::StarSubgraph) == "star-subgraph");
    CHECK(to_string(BoundSource::StarExact) == "star-exact");
    CHECK(to_string(BoundSource::SmallM1) == "smallm-1");
    CHECK(to_string(BoundSource::SmallM2) == "smallm-2");
    CHECK(to_string(BoundSource::UpperBigN) == "upper-bign");
    CHECK(to_string(BoundSource::UpperSmallN) == "upper-smalln");
    CHECK(to_string(BoundSource::TheoremEqual) == "theorem-equal");
    CHECK(to_string(BoundSource::ErdosGraham) == "erdos-graham");
    CHECK(to_string(BoundSource::Exhaustive) == "exhaustive");
}

}
