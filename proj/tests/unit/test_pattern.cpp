#include "doctest.h"

#include <algorithm>

#include "../oracle.hpp"
#include "ramsey/pattern.hpp"

using namespace ramsey;

namespace {

std::vector<int> sorted_degrees(const PatternGraph& g)
{
    auto d = g.degrees();
    std::sort(d.begin(), d.end());
    return d;
}

// all valid caterpillar leaf vectors with k spine vertices, entries <= cap
std::vector<std::vector<int>> caterpillars(int k, int cap)
{
    std::vector<std::vector<int>> out;
    std::vector<int> v(static_cast<std::size_t>(k), 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == v.size()) {
            if ((v.front() != 0 && v.back() != 0) || std::all_of(v.begin(), v.end(), [](int x) { return x == 0; }))
                out.push_back(v);
            return;
        }
        for (int x = 0; x <= cap; ++x) {
            v[i] = x;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace

TEST_SUITE("pattern") {

TEST_CASE("bistar 2 3 graph")
{
    const auto g = pattern_graph(PatternSpec::bistar(2, 3));
    CHECK(g.vertices == 7);
    CHECK(g.edges.size() == 6);
    CHECK(g.degrees() == std::vector<int>{3, 4, 1, 1, 1, 1, 1});
}

TEST_CASE("bistar 1 1 +e ll-diff is the 4-cycle")
{
    const auto p = PatternSpec::plus_edge(PatternSpec::bistar(1, 1), LeafLeafDifferentCenters{});
    const auto g = pattern_graph(p);
    CHECK(g.vertices == 4);
    CHECK(g.edges.size() == 4);
    for (int d : g.degrees())
        CHECK(d == 2);
    // connected 2-regular on 4 vertices
    const PatternGraph c4{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {}};
    CHECK(oracle::isomorphic(g, c4));
}

TEST_CASE("all-zero caterpillar is the path")
{
    const auto p = PatternSpec::caterpillar({0, 0, 0, 0});
    CHECK(p == PatternSpec::path(4));
    CHECK(p.is_path());
    CHECK(p.to_string() == "path 4");
    const auto g = pattern_graph(p);
    CHECK(g.vertices == 4);
    CHECK(sorted_degrees(g) == std::vector<int>{1, 1, 2, 2});
}

TEST_CASE("validation")
{
    CHECK_THROWS(PatternSpec::star(0));
    CHECK_THROWS(PatternSpec::bistar(0, 3));
    CHECK_THROWS(PatternSpec::caterpillar({}));
    CHECK_THROWS(PatternSpec::caterpillar({0, 1}));
    CHECK_THROWS(PatternSpec::caterpillar({1, 0}));
    CHECK_THROWS(PatternSpec::caterpillar({-1}));
    CHECK_THROWS(PatternSpec::caterpillar({0}));
    CHECK_THROWS(PatternSpec::path(1));
    CHECK_NOTHROW(PatternSpec::caterpillar({0, 0}));
    CHECK(PatternSpec::bistar(3, 2) == PatternSpec::bistar(2, 3));

    // only realizable non-edges
    CHECK_THROWS(PatternSpec::plus_edge(PatternSpec::star(1), LeafLeaf{}));
    CHECK_THROWS(PatternSpec::plus_edge(PatternSpec::star(3), LeafLeafDifferentCenters{}));
    CHECK_THROWS(PatternSpec::plus_edge(PatternSpec::bistar(1, 2), LeafLeaf{}));
    CHECK_THROWS(PatternSpec::plus_edge(PatternSpec::bistar(1, 1), LeafLeafSameCenter{}));
    CHECK_THROWS(PatternSpec::plus_edge(PatternSpec::bistar(1, 3), LeafLeafSameCenter{Center::Small}));
    CHECK_NOTHROW(PatternSpec::plus_edge(PatternSpec::bistar(1, 3), LeafLeafSameCenter{Center::Large}));
    CHECK_THROWS(PatternSpec::plus_edge(PatternSpec::path(5), LeafLeaf{}));
}

TEST_CASE("vertex and edge counts agree with the graph")
{
    std::vector<PatternSpec> ps;
    for (int n = 1; n <= 8; ++n)
        ps.push_back(PatternSpec::star(n));
    for (int m = 1; m <= 5; ++m)
        for (int n = m; n <= 5; ++n)
            ps.push_back(PatternSpec::bistar(m, n));
    for (int k = 1; k <= 4; ++k)
        for (auto& v : caterpillars(k, 3))
            if (k > 1 || v[0] > 0)
                ps.push_back(PatternSpec::caterpillar(v));
    ps.push_back(PatternSpec::plus_edge(PatternSpec::star(4), LeafLeaf{}));
    ps.push_back(PatternSpec::plus_edge(PatternSpec::bistar(2, 3), LeafToFarCenter{Center::Large}));
    for (const auto& p : ps) {
        const auto g = pattern_graph(p);
        CHECK(g.vertices == p.vertex_count());
        CHECK(static_cast<int>(g.edges.size()) == p.edge_count());
        CHECK(p.edge_count() == p.vertex_count() - (p.is_tree() ? 1 : 0));
        for (auto [u, v] : g.edges) {
            CHECK(u != v);
            CHECK(u < g.vertices);
            CHECK(v < g.vertices);
        }
        // adjacency rows mirror the edge list
        const auto rows = g.adjacency();
        int bits = 0;
        for (auto r : rows)
            bits += std::popcount(r);
        CHECK(bits == 2 * p.edge_count());
    }
}

TEST_CASE("star and bistar equal their caterpillar forms")
{
    for (int n = 1; n <= 6; ++n)
        CHECK(oracle::isomorphic(pattern_graph(PatternSpec::star(n)), pattern_graph(PatternSpec::caterpillar({n}))));
    for (int m = 1; m <= 3; ++m)
        for (int n = m; n <= 4; ++n)
            CHECK(oracle::isomorphic(pattern_graph(PatternSpec::bistar(m, n)),
                                     pattern_graph(PatternSpec::caterpillar({m, n}))));
    // P_4 = B(1,1), P_3 = S_2
    CHECK(oracle::isomorphic(pattern_graph(PatternSpec::path(4)), pattern_graph(PatternSpec::bistar(1, 1))));
    CHECK(oracle::isomorphic(pattern_graph(PatternSpec::path(3)), pattern_graph(PatternSpec::star(2))));
}

TEST_CASE("shape recognition")
{
    CHECK(star_shape(PatternSpec::path(2)) == 1);
    CHECK(star_shape(PatternSpec::path(3)) == 2);
    CHECK(star_shape(PatternSpec::caterpillar({5})) == 5);
    CHECK_FALSE(star_shape(PatternSpec::path(4)).has_value());
    CHECK(bistar_shape(PatternSpec::path(4)) == std::pair{1, 1});
    CHECK(bistar_shape(PatternSpec::caterpillar({4, 2})) == std::pair{2, 4});
    CHECK_FALSE(bistar_shape(PatternSpec::path(5)).has_value());
    CHECK(reduced_spine(PatternSpec::path(6)) == std::vector<int>{1, 0, 0, 1});
    CHECK_FALSE(reduced_spine(PatternSpec::plus_edge(PatternSpec::star(3), LeafLeaf{})).has_value());
}

TEST_CASE("reduced spine describes an isomorphic caterpillar")
{
    for (int k = 2; k <= 7; ++k) {
        const auto p = PatternSpec::path(k);
        const auto r = *reduced_spine(p);
        CHECK(oracle::isomorphic(pattern_graph(p), pattern_graph(PatternSpec::caterpillar(r))));
    }
}

TEST_CASE("parse and print round-trip")
{
    const char* exprs[] = {
        "star 4", "bistar 2 3", "caterpillar 2 0 1", "path 6", "star 3 +e ll", "bistar 2 3 +e ll-same",
        "bistar 2 3 +e ll-same:m", "bistar 2 3 +e ll-diff", "bistar 2 3 +e leaf-far-center",
        "bistar 2 3 +e leaf-far-center:n", "bistar 2 2 +e ll-same",
    };
    for (const char* e : exprs) {
        const auto p = parse_pattern(e);
        CHECK(p.to_string() == e);
        CHECK(parse_pattern(p.to_string()) == p);
    }
    CHECK(parse_pattern("  bistar   3 2 ").to_string() == "bistar 2 3");
    CHECK(parse_pattern("caterpillar 0 0 0") == PatternSpec::path(3));
    // m == n: both orientations name the same pattern
    CHECK(parse_pattern("bistar 2 2 +e ll-same:m") == parse_pattern("bistar 2 2 +e ll-same:n"));
    CHECK(parse_pattern("bistar 2 2 +e leaf-far-center:n") == parse_pattern("bistar 2 2 +e leaf-far-center"));
}

TEST_CASE("parse errors name the grammar")
{
    const char* bad[] = {"", "star", "star x", "star -1", "bistar 1", "tree 3", "star 3 +e", "star 3 +e ll-diff",
                         "star 3 +e ll extra", "path 6 +e ll", "bistar 1 1 +e ll-same", "star 0"};
    for (const char* e : bad) {
        CAPTURE(e);
        try {
            parse_pattern(e);
            FAIL("accepted");
        } catch (const PatternParseError& err) {
            CHECK(std::string(err.what()).find("star <n>") != std::string::npos);
        }
    }
}

}
